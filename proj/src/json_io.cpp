#include "wsatlab/json_io.hpp"

#include <charconv>
#include <stdexcept>

namespace wsatlab {

namespace {

using nlohmann::json;

std::uint64_t parse_fingerprint(const std::string& hex) {
    if (hex.size() != 16) throw std::invalid_argument("fingerprint must be 16 hex digits");
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), value, 16);
    if (ec != std::errc{} || ptr != hex.data() + hex.size())
        throw std::invalid_argument("fingerprint must be 16 hex digits");
    return value;
}

json edges_array(const Graph& g) {
    json arr = json::array();
    for (const Edge& e : g.edges()) arr.push_back(e);
    return arr;
}

json attachments_array(const std::map<int, std::vector<int>>& attachments) {
    json arr = json::array();
    for (const auto& [v, to] : attachments) arr.push_back(json{{"vertex", v}, {"to", to}});
    return arr;
}

const char* as_state_name(AsState s) {
    switch (s) {
        case AsState::holds: return "holds";
        case AsState::fails: return "fails";
        default: return "unknown";
    }
}

const char* kernel_status_name(KernelResult::Status s) {
    switch (s) {
        case KernelResult::Status::ok: return "ok";
        case KernelResult::Status::no_kernel: return "no_kernel";
        case KernelResult::Status::witness_absent: return "witness_absent";
        default: return "budget_exhausted";
    }
}

const char* core_status_name(CoreResult::Status s) {
    switch (s) {
        case CoreResult::Status::ok: return "ok";
        case CoreResult::Status::witness_absent: return "witness_absent";
        default: return "budget_exhausted";
    }
}

}  // namespace

void to_json(json& j, const Edge& e) { j = json::array({e.u, e.v}); }

void to_json(json& j, const Graph& g) {
    j = json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges_array(g)}};
}

void to_json(json& j, const TraceStep& step) {
    j = json{{"edge", step.edge}, {"witness", step.witness}};
}

void to_json(json& j, const BootstrapTrace& trace) {
    j = json{{"s", trace.s},
             {"host", fingerprint_hex(trace.host_fingerprint)},
             {"steps", trace.steps}};
}

void to_json(json& j, const ClosureResult& r) {
    j = json{{"closure", r.closure}, {"trace", r.trace}, {"percolated", r.percolated}};
}

void to_json(json& j, const PropertyReport& r) {
    j = json{{"property", r.property},
             {"holds", r.holds},
             {"witness", r.failure_witness ? json(*r.failure_witness) : json()},
             {"undecided", r.undecided},
             {"counts", r.counts}};
}

void to_json(json& j, const SearchStats& s) {
    j = json{{"candidates_tested", s.candidates_tested},
             {"elapsed_seconds", s.elapsed_seconds},
             {"budget_exhausted", s.budget_exhausted}};
}

void to_json(json& j, const WsatResult& r) {
    j = json{{"value", r.value},
             {"exact", r.exact},
             {"edges", edges_array(r.witness)},
             {"trace", r.trace},
             {"stats", r.stats}};
}

void to_json(json& j, const AsVerdict& v) {
    j = json{{"verdict", as_state_name(v.verdict)},
             {"lower_certificate", v.lower_certificate},
             {"upper_witness", v.upper_witness ? json(*v.upper_witness) : json()},
             {"upper_trace", v.upper_trace ? json(*v.upper_trace) : json()},
             {"blocking_edge", v.blocking_edge ? json(*v.blocking_edge) : json()},
             {"exact_value", v.exact_value ? json(*v.exact_value) : json()},
             {"reason", v.reason}};
}

void to_json(json& j, const KernelResult& r) {
    j = json{{"kind", "lemma1"},
             {"status", kernel_status_name(r.status)},
             {"kernel", json()},
             {"n", json()},
             {"edges", json()},
             {"attachments", json()},
             {"failed_vertices", r.failed_vertices},
             {"exhausted_vertices", r.exhausted_vertices}};
    if (r.construction) {
        j["kernel"] = r.construction->kernel;
        j["n"] = r.construction->h.vertex_count();
        j["edges"] = edges_array(r.construction->h);
        j["attachments"] = attachments_array(r.construction->attachments);
    }
}

void to_json(json& j, const CoreResult& r) {
    j = json{{"kind", "theorem4"},
             {"status", core_status_name(r.status)},
             {"degenerate", r.degenerate},
             {"m", json()},
             {"clamped", json()},
             {"w", json()},
             {"gamma", json()},
             {"X", json()},
             {"n", json()},
             {"edges", json()},
             {"attachments", json()},
             {"failed_vertices", r.failed_vertices},
             {"exhausted_vertices", r.exhausted_vertices}};
    if (r.construction) {
        j["m"] = r.construction->m;
        j["clamped"] = r.construction->clamped;
        j["w"] = r.construction->w;
        j["gamma"] = r.construction->gamma;
        json core = json::array();
        for (long long x = 0; x < r.construction->m; ++x) core.push_back(x);
        j["X"] = std::move(core);
        j["n"] = r.construction->h.vertex_count();
        j["edges"] = edges_array(r.construction->h);
        j["attachments"] = attachments_array(r.construction->attachments);
    }
}

void to_json(json& j, const ExpectedNs& e) {
    j = json{{"point", e.point}, {"lo", e.lo}, {"hi", e.hi}};
}

void to_json(json& j, const Interval& i) { j = json{{"lo", i.lo}, {"hi", i.hi}}; }

void to_json(json& j, const SweepCell& c) {
    j = json{{"n", c.n},           {"p", c.p},
             {"trials", c.trials}, {"successes", c.successes},
             {"undecided", c.undecided}, {"wilson", c.wilson}};
}

void to_json(json& j, const SweepResult& r) {
    j = json{{"property", r.property},
             {"s", r.s},
             {"master_seed", r.master_seed},
             {"confidence", r.confidence},
             {"cells", r.cells}};
}

void to_json(json& j, const ThresholdPoint& p) {
    j = json{{"p", p.p}, {"trials", p.trials}, {"successes", p.successes},
             {"undecided", p.undecided}};
}

void to_json(json& j, const ThresholdEstimate& e) {
    j = json{{"property", e.property},
             {"s", e.s},
             {"n", e.n},
             {"master_seed", e.master_seed},
             {"trials_per_point", e.trials_per_point},
             {"p_half", e.p_half},
             {"bracket", json{{"lo", e.bracket_lo}, {"hi", e.bracket_hi}}},
             {"points", e.points}};
}

void from_json(const json& j, Graph& g) {
    int n = j.at("n").get<int>();
    g = Graph(n);
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("m") && j.at("m").get<std::size_t>() != g.edge_count())
        throw std::invalid_argument("edge count does not match the edge list");
}

void from_json(const json& j, BootstrapTrace& trace) {
    trace.s = j.at("s").get<int>();
    trace.host_fingerprint = parse_fingerprint(j.at("host").get<std::string>());
    trace.steps.clear();
    for (const auto& step : j.at("steps")) {
        const auto& e = step.at("edge");
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
        TraceStep out;
        out.edge = make_edge(e[0].get<int>(), e[1].get<int>());
        out.witness = step.at("witness").get<std::vector<int>>();
        trace.steps.push_back(std::move(out));
    }
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
    return std::string(buf, ptr);
}

static void csv_row(std::string& out, long long n, double p, std::uint64_t trials,
                    std::uint64_t successes, const Interval& w) {
    out += std::to_string(n);
    out += ',';
    out += format_double(p);
    out += ',';
    out += std::to_string(trials);
    out += ',';
    out += std::to_string(successes);
    out += ',';
    out += format_double(w.lo);
    out += ',';
    out += format_double(w.hi);
    out += '\n';
}

std::string to_csv(const SweepResult& r) {
    std::string out = "n,p,trials,successes,lo,hi\n";
    for (const SweepCell& c : r.cells) csv_row(out, c.n, c.p, c.trials, c.successes, c.wilson);
    return out;
}

std::string to_csv(const ThresholdEstimate& e) {
    std::string out = "n,p,trials,successes,lo,hi\n";
    for (const ThresholdPoint& p : e.points)
        csv_row(out, e.n, p.p, p.trials, p.successes, wilson_interval(p.successes, p.trials));
    return out;
}

}  // namespace wsatlab
