#include "wsatlab/formulas.hpp"

#include <cmath>
#include <stdexcept>

#include "wsatlab/constructions.hpp"

namespace wsatlab {

namespace {

void check_n(long long n, long long min_n) {
    if (n < min_n) throw std::invalid_argument("n must be at least " + std::to_string(min_n));
}

void check_p_closed(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
}

double factorial(int k) {
    double f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

double log_binom(long long n, long long k) {
    if (k < 0 || k > n) throw std::invalid_argument("binomial needs 0 <= k <= n");
    return std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) -
           std::lgamma(double(n - k) + 1);
}

double binom_real(long long n, long long k) {
    if (k < 0 || k > n) return 0.0;
    long long kk = std::min(k, n - k);
    if (n <= 1000 && kk <= 16) {
        unsigned __int128 r = 1;
        for (long long i = 1; i <= kk; ++i) {
            r *= (unsigned __int128)(n - kk + i);
            r /= (unsigned __int128)i;
        }
        return double(r);
    }
    if (kk <= 16) {
        // lgamma differences lose all precision once n is huge; a short
        // product keeps the relative error near machine epsilon.
        double r = 1;
        for (long long i = 1; i <= kk; ++i) r = r * double(n - kk + i) / double(i);
        return r;
    }
    return std::exp(log_binom(n, k));
}

double threshold_scale(long long n, int s) {
    check_clique_order(s);
    check_n(n, 3);
    return std::pow(double(n), -2.0 / (s + 1)) *
           std::pow(std::log(double(n)), 2.0 / double((s - 2) * (s + 1)));
}

double threshold_constant(int s) {
    check_clique_order(s);
    double base = 2.0 * (1.0 - 1.0 / (s + 1)) * factorial(s - 2);
    return std::pow(base, 2.0 / double((s + 1) * (s - 2)));
}

double sharp_threshold_scale(long long n, int s) {
    check_clique_order(s);
    check_n(n, 3);
    return std::pow(2.0 * factorial(s - 2), 2.0 / double((s + 1) * (s - 2))) *
           threshold_scale(n, s);
}

double janson_lambda(long long n, double p, int s) {
    check_clique_order(s);
    check_n(n, s);
    check_p_closed(p);
    return binom_real(n - 2, s - 2) * std::pow(p, double((s + 1) * (s - 2)) / 2.0);
}

double janson_delta(long long n, double p, int s) {
    check_clique_order(s);
    check_n(n, s);
    check_p_closed(p);
    double total = 0;
    for (int l = 1; l <= s - 3; ++l)
        total += binom_real(n - 2, s - 2) * binom_real(s - 2, l) * binom_real(n - s, s - 2 - l) *
                 std::pow(p, double((s + 1) * (s - 2)) - double((l + 3) * l) / 2.0);
    return total;
}

ExpectedNs expected_uncovered_edges(long long n, double p, int s) {
    check_clique_order(s);
    check_n(n, s);
    check_p_closed(p);
    const double pairs = binom_real(n, 2);
    if (s == 3) {
        double none = std::exp(double(n - 2) * std::log1p(-p * p));
        double point = pairs * p * none;
        return {point, point, point};
    }
    const double lambda = janson_lambda(n, p, s);
    const double delta = janson_delta(n, p, s);
    const double q = std::pow(p, double((s + 1) * (s - 2)) / 2.0);
    const double witnesses = binom_real(n - 2, s - 2);
    double point = pairs * p * std::exp(-lambda);
    double lo = pairs * p * std::exp(witnesses * std::log1p(-q));
    double hi = pairs * p * std::min(1.0, std::exp(-lambda + delta / 2.0));
    return {point, lo, hi};
}

double bs_threshold_p(long long n, int s, double w) {
    check_clique_order(s);
    check_n(n, 16);
    const double ln_n = std::log(double(n));
    const double correction =
        2.0 * std::log(ln_n) / (double((s - 2) * (s - 2)) * double(s * s + s) * ln_n);
    return threshold_constant(s) * threshold_scale(n, s) * (1.0 + correction + w / ln_n);
}

double wsat_upper_bound(long long n, double p, int s, double w) {
    check_clique_order(s);
    check_n(n, 3);
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in (0, 1]");
    if (!(w > 0.0)) throw std::invalid_argument("w must be positive");
    return double(n) * (s - 2) +
           w * std::pow(std::log(double(n)), 2.0 * (gamma_exponent(s) + s - 2)) /
               std::pow(p, double(2 * s - 3));
}

double beta_exponent(int s, double epsilon) {
    check_clique_order(s);
    if (s == 3) return 1.0 / 3.0 + epsilon;
    if (s == 4) return 8.0 / 5.0;
    return 0.5;
}

}  // namespace wsatlab
