#pragma once

#include "wsatlab/clique_order.hpp"

namespace wsatlab {

// log C(n, k) via lgamma; defined for 0 <= k <= n.
double log_binom(long long n, long long k);

// C(n, k) as a double: exact 128-bit integer arithmetic for n <= 1000 and
// small k, log-domain beyond that.
double binom_real(long long n, long long k);

// n^(-2/(s+1)) (ln n)^(2/((s-2)(s+1))): the probability scale on which every
// edge of G(n, p) stops lying in an s-clique.
double threshold_scale(long long n, int s);

// [2 (1 - 1/(s+1)) (s-2)!]^(2/((s+1)(s-2))): the constant multiplying
// threshold_scale below which uncovered edges appear.
double threshold_constant(int s);

// (2 (s-2)!)^(2/((s+1)(s-2))) * threshold_scale(n, s): the sharp threshold
// for every vertex pair having s-2 pairwise-adjacent common neighbors.
double sharp_threshold_scale(long long n, int s);

// C(n-2, s-2) p^((s+1)(s-2)/2): expected pair witnesses for one edge.
double janson_lambda(long long n, double p, int s);

// Sum over overlap sizes of ordered witness pairs sharing vertices; zero for
// s = 3 where witnesses are single vertices.
double janson_delta(long long n, double p, int s);

struct ExpectedNs {
    double point = 0;
    double lo = 0;
    double hi = 0;
};

// Expected number of edges lying in no s-clique of G(n, p). Exact for s = 3;
// for larger s the point uses exp(-lambda) and (lo, hi) bracket the truth
// with the product lower bound and the exp(-lambda + delta/2) upper bound.
ExpectedNs expected_uncovered_edges(long long n, double p, int s);

// Critical probability curve c_s q_s(n) [1 + 2 ln ln n / ((s-2)^2 (s^2+s) ln n)
// + w / ln n] around which the last uncovered edge disappears. Needs n >= 16.
double bs_threshold_p(long long n, int s, double w);

// n(s-2) + w (ln n)^(2(gamma+s-2)) / p^(2s-3): upper bound on the minimum
// weakly saturated subgraph achieved by the core construction.
double wsat_upper_bound(long long n, double p, int s, double w);

// Polylog exponents for the probability range where the minimum provably
// matches the closed form: 1/3 + epsilon for s = 3, 8/5 for s = 4, 1/2 beyond.
inline constexpr double kDefaultBetaEpsilon = 0.01;
double beta_exponent(int s, double epsilon = kDefaultBetaEpsilon);

// Conservative default exponent usable for every s.
inline constexpr double kDefaultPolylogExponent = 2.0;

}  // namespace wsatlab
