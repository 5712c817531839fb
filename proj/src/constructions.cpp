#include "wsatlab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wsatlab/cliques.hpp"

namespace wsatlab {

namespace {

struct PathSearch {
    const Graph& g;
    int k;
    int target;
    BudgetMeter meter;
    std::vector<int> order;
    VertexSet unplaced;
    bool exhausted = false;

    PathSearch(const Graph& g, const VertexSet& s_set, int k, const SearchBudget& budget)
        : g(g), k(k), target(s_set.count()), meter(budget), unplaced(s_set) {
        order.reserve(size_t(target));
    }

    bool extend() {
        const int len = int(order.size());
        if (len == target) return true;
        VertexSet cand = unplaced;
        for (int i = 0; i < std::min(k, len); ++i) cand &= g.neighbors(order[size_t(len - 1 - i)]);

        // Fewest unplaced neighbors first; id breaks ties, so complete graphs
        // come out in lexicographic order.
        std::vector<std::pair<int, int>> ranked;
        for (int v = cand.first(); v >= 0; v = cand.next(v))
            ranked.emplace_back((g.neighbors(v) & unplaced).count(), v);
        std::sort(ranked.begin(), ranked.end());

        for (auto [deg, v] : ranked) {
            (void)deg;
            if (!meter.spend()) {
                exhausted = true;
                return false;
            }
            order.push_back(v);
            unplaced.reset(v);
            if (extend()) return true;
            unplaced.set(v);
            order.pop_back();
            if (exhausted) return false;
        }
        return false;
    }
};

}  // namespace

PathPowerResult find_path_power(const Graph& g, const VertexSet& s_set, int k,
                                const SearchBudget& budget) {
    if (k < 1) throw std::invalid_argument("path power must be at least 1");
    const int f = s_set.count();
    if (f == 0) return {SearchStatus::absent, std::nullopt, 0};
    PathSearch search(g, s_set, k, budget);
    if (search.extend()) return {SearchStatus::found, PathPowerWitness{search.order, k}, search.meter.used()};
    if (search.exhausted) return {SearchStatus::budget_exhausted, std::nullopt, search.meter.used()};
    return {SearchStatus::absent, std::nullopt, search.meter.used()};
}

bool is_path_power(const Graph& g, const std::vector<int>& order, int k) {
    if (k < 1) return false;
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = i + 1; j < order.size() && j <= i + size_t(k); ++j)
            if (!g.has_edge(order[i], order[j])) return false;
    VertexSet seen(g.vertex_count());
    for (int v : order) {
        if (v < 0 || v >= g.vertex_count() || seen.test(v)) return false;
        seen.set(v);
    }
    return true;
}

namespace {

// Lexicographically least (s-2)-clique whose common neighborhood is nonempty
// (any clique when the graph has exactly s-2 vertices).
std::optional<std::vector<int>> find_kernel(const Graph& g, int s) {
    const int n = g.vertex_count();
    const int k = s - 2;
    std::vector<int> chosen;
    VertexSet cn = VertexSet::full(n);

    auto rec = [&](auto&& self, const VertexSet& cand, const VertexSet& cn_cur) -> bool {
        if (int(chosen.size()) == k) return n == k || cn_cur.any();
        for (int v = cand.first(); v >= 0; v = cand.next(v)) {
            chosen.push_back(v);
            VertexSet next_cand = cand & g.neighbors(v);
            next_cand.clear_below(v + 1);
            if (self(self, next_cand, cn_cur & g.neighbors(v))) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (rec(rec, VertexSet::full(n), cn)) return chosen;
    return std::nullopt;
}

}  // namespace

KernelResult build_kernel_construction(const Graph& g, int s, const SearchBudget& per_vertex) {
    check_clique_order(s);
    const int n = g.vertex_count();
    if (n < s - 2) throw std::invalid_argument("graph must have at least s-2 vertices");

    KernelResult result;
    auto kernel = find_kernel(g, s);
    if (!kernel) {
        result.status = KernelResult::Status::no_kernel;
        return result;
    }

    VertexSet kernel_set(n);
    for (int v : *kernel) kernel_set.set(v);
    VertexSet covered = common_neighborhood(g, kernel_set);

    std::map<int, std::vector<int>> attachments;
    VertexSet cell(n);
    for (int v = 0; v < n; ++v) {
        if (kernel_set.test(v) || covered.test(v)) continue;
        cell.assign_and(covered, g.neighbors(v));
        if (cell.count() < s - 2) {
            result.failed_vertices.push_back(v);
            continue;
        }
        PathPowerResult r = find_path_power(g, cell, s - 2, per_vertex);
        if (r.status == SearchStatus::found) {
            attachments[v] = {r.witness->order.begin(), r.witness->order.begin() + (s - 2)};
        } else if (r.status == SearchStatus::absent) {
            result.failed_vertices.push_back(v);
        } else {
            result.exhausted_vertices.push_back(v);
        }
    }

    if (!result.failed_vertices.empty()) {
        result.status = KernelResult::Status::witness_absent;
        return result;
    }
    if (!result.exhausted_vertices.empty()) {
        result.status = KernelResult::Status::budget_exhausted;
        return result;
    }

    Graph h(n);
    for (size_t i = 0; i < kernel->size(); ++i)
        for (size_t j = i + 1; j < kernel->size(); ++j) h.add_edge((*kernel)[i], (*kernel)[j]);
    for (int x = covered.first(); x >= 0; x = covered.next(x))
        for (int kv : *kernel) h.add_edge(kv, x);
    for (const auto& [v, starts] : attachments)
        for (int x : starts) h.add_edge(v, x);

    result.status = KernelResult::Status::ok;
    result.construction = KernelConstruction{*kernel, std::move(h), std::move(attachments)};
    return result;
}

double gamma_exponent(int s) {
    check_clique_order(s);
    if (s == 3) return 1.0;
    if (s == 4) return 6.0;
    return 0.0;
}

CoreSize core_size(int n, double p, int s, double w) {
    check_clique_order(s);
    if (n < 2) throw std::invalid_argument("core size needs n >= 2");
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in (0, 1]");
    if (!(w > 0.0)) throw std::invalid_argument("w must be positive");
    double raw = std::pow(std::log(double(n)), gamma_exponent(s) + s - 2) /
                 std::pow(p, double(s - 1)) * std::sqrt(w);
    if (!(raw < double(n))) return {n, true};
    return {int(std::floor(raw)), false};
}

CoreResult build_core_construction(const Graph& g, double p, int s, double w,
                                   const SearchBudget& per_vertex) {
    check_clique_order(s);
    const int n = g.vertex_count();
    CoreSize cs = core_size(n, p, s, w);

    CoreResult result;
    result.degenerate = cs.clamped;

    VertexSet core_set(n);
    for (int v = 0; v < cs.m; ++v) core_set.set(v);

    std::map<int, std::vector<int>> attachments;
    VertexSet cell(n);
    for (int v = cs.m; v < n; ++v) {
        cell.assign_and(core_set, g.neighbors(v));
        if (cell.count() < s - 2) {
            result.failed_vertices.push_back(v);
            continue;
        }
        PathPowerResult r = find_path_power(g, cell, s - 2, per_vertex);
        if (r.status == SearchStatus::found) {
            attachments[v] = {r.witness->order.begin(), r.witness->order.begin() + (s - 2)};
        } else if (r.status == SearchStatus::absent) {
            result.failed_vertices.push_back(v);
        } else {
            result.exhausted_vertices.push_back(v);
        }
    }

    if (!result.failed_vertices.empty()) {
        result.status = CoreResult::Status::witness_absent;
        return result;
    }
    if (!result.exhausted_vertices.empty()) {
        result.status = CoreResult::Status::budget_exhausted;
        return result;
    }

    Graph h(n);
    for (int u = 0; u < cs.m; ++u) {
        VertexSet inside = g.neighbors(u) & core_set;
        for (int v = inside.next(u); v >= 0; v = inside.next(v)) h.add_edge(u, v);
    }
    for (const auto& [v, starts] : attachments)
        for (int x : starts) h.add_edge(v, x);

    result.status = CoreResult::Status::ok;
    result.construction =
        CoreConstruction{cs.m, cs.clamped, w, gamma_exponent(s), std::move(h), std::move(attachments)};
    return result;
}

std::optional<std::pair<int, int>> core_pair_without_witness(const Graph& g, int m, int s) {
    check_clique_order(s);
    const int n = g.vertex_count();
    if (m < 0 || m > n) throw std::invalid_argument("core size out of range");
    VertexSet core_set(n);
    for (int v = 0; v < m; ++v) core_set.set(v);
    VertexSet cn(n);
    for (int u = m; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            cn.assign_and(g.neighbors(u), g.neighbors(v));
            cn &= core_set;
            if (!has_clique(g, cn, s - 2)) return std::make_pair(u, v);
        }
    return std::nullopt;
}

}  // namespace wsatlab
