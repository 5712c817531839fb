#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "wsatlab/bootstrap.hpp"
#include "wsatlab/constructions.hpp"
#include "wsatlab/edgelist.hpp"
#include "wsatlab/formulas.hpp"
#include "wsatlab/generators.hpp"
#include "wsatlab/json_io.hpp"
#include "wsatlab/montecarlo.hpp"
#include "wsatlab/properties.hpp"
#include "wsatlab/wsat.hpp"

namespace {

using namespace wsatlab;
using nlohmann::json;

constexpr int kExitDomainError = 2;
constexpr int kExitBudgetExhausted = 3;

struct CommonOpts {
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool strict = false;
    std::string format = "json";
    std::string output;
    std::uint64_t budget_nodes = 0;
    bool budget_given = false;
    double time_limit = -1.0;
    int workers = 1;
};

// One source graph per command: an edge-list file, a complete graph, or a
// seeded G(n, p) sample.
struct GraphSource {
    std::string file;
    int complete_n = 0;
    int gnp_n = 0;
    double gnp_p = -1.0;

    void add_options(CLI::App* cmd) {
        auto* f = cmd->add_option("--graph", file, "Edge-list file to read");
        auto* c = cmd->add_option("--complete", complete_n, "Use the complete graph on N vertices")
                      ->check(CLI::PositiveNumber);
        auto* n = cmd->add_option("--n", gnp_n, "Sample G(n, p): vertex count")
                      ->check(CLI::PositiveNumber);
        auto* p = cmd->add_option("--p", gnp_p, "Sample G(n, p): edge probability")
                      ->check(CLI::Range(0.0, 1.0));
        f->excludes(c)->excludes(n);
        c->excludes(n)->excludes(p);
        n->needs(p);
        p->needs(n);
    }

    bool samples() const { return gnp_p >= 0.0; }

    Graph resolve(const CommonOpts& common) const {
        if (!file.empty()) {
            try {
                return read_edge_list_file(file);
            } catch (const ParseError& e) {
                throw std::invalid_argument(file + ":" + e.what());
            }
        }
        if (complete_n > 0) return complete_graph(complete_n);
        if (samples()) return generate_gnp(gnp_n, gnp_p, Seed(common.seed));
        throw std::invalid_argument("no input graph: pass --graph, --complete, or --n with --p");
    }
};

void require_seed_in_strict_mode(const CommonOpts& common) {
    if (common.strict && !common.seed_given)
        throw std::invalid_argument("--strict requires an explicit --seed for seeded commands");
}

SearchBudget resolve_budget(const CommonOpts& common, SearchBudget base) {
    if (const char* env = std::getenv("WSATLAB_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw std::invalid_argument("WSATLAB_BUDGET must be a nonnegative integer");
        base.max_nodes = v;
    }
    if (common.budget_given) base.max_nodes = common.budget_nodes;
    if (common.time_limit >= 0.0) base.max_seconds = common.time_limit;
    return base;
}

WsatOptions resolve_wsat_options(const CommonOpts& common, bool allow_cliques) {
    WsatOptions opt;
    opt.budget = resolve_budget(common, SearchBudget::subset_search_default());
    opt.path_budget = resolve_budget(common, SearchBudget::path_search_default());
    opt.require_clique_free = !allow_cliques;
    return opt;
}

int emit(const CommonOpts& common, const std::string& text) {
    if (common.output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(common.output, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + common.output);
    out << text;
    return 0;
}

int emit_json(const CommonOpts& common, const json& j) {
    if (common.format != "json")
        throw std::invalid_argument("this command only supports --format json");
    return emit(common, dump_json(j));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weak clique-saturation laboratory: closures, saturation numbers, "
                 "constructions, and seeded Monte Carlo estimates"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Read options from a key=value file (sections per subcommand)");

    CommonOpts common;
    auto* seed_opt =
        app.add_option("--seed", common.seed, "Master seed for every random draw (default 0)");
    app.add_flag("--strict", common.strict, "Refuse seeded commands without an explicit --seed");
    app.add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--output", common.output, "Write output to a file instead of stdout");
    auto* budget_opt = app.add_option("--budget", common.budget_nodes,
                                      "Search-node budget for exhaustive searches (0 = unlimited)");
    app.add_option("--time-limit", common.time_limit,
                   "Wall-clock budget in seconds for exhaustive searches (0 = unlimited)");
    app.add_option("--workers", common.workers, "Worker threads for sweep and threshold")
        ->check(CLI::PositiveNumber);

    int s = 3;
    auto add_s = [&s](CLI::App* cmd) {
        cmd->add_option("--s", s, "Clique order")->check(CLI::Range(3, 12))->capture_default_str();
    };

    // gen
    auto* gen = app.add_subcommand("gen", "Sample G(n, p) and emit it as an edge list");
    int gen_n = 0;
    double gen_p = 0;
    gen->add_option("--n", gen_n, "Vertex count")->required()->check(CLI::PositiveNumber);
    gen->add_option("--p", gen_p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));

    // closure
    auto* closure = app.add_subcommand("closure", "Run the clique bootstrap process to its fixed "
                                                  "point and report the closure with its trace");
    GraphSource closure_host;
    std::string closure_sub;
    auto* closure_file = closure->add_option("--host", closure_host.file,
                                             "Host graph edge-list file");
    closure->add_option("--complete", closure_host.complete_n,
                        "Use the complete graph on N vertices as host")
        ->check(CLI::PositiveNumber)
        ->excludes(closure_file);
    closure->add_option("--subgraph", closure_sub, "Starting subgraph edge-list file")->required();
    add_s(closure);

    // wsat
    auto* wsat_cmd = app.add_subcommand(
        "wsat", "Minimum edge count of a spanning clique-free percolating subgraph");
    GraphSource wsat_src;
    wsat_src.add_options(wsat_cmd);
    bool wsat_allow_cliques = false;
    wsat_cmd->add_flag("--allow-cliques", wsat_allow_cliques,
                       "Accept witnesses that contain complete s-vertex subgraphs");
    add_s(wsat_cmd);

    // construct lemma1 | theorem4
    auto* construct = app.add_subcommand("construct", "Build explicit sparse percolating subgraphs");
    construct->require_subcommand(1);
    auto* lemma1 = construct->add_subcommand(
        "lemma1", "Kernel construction: a clique core plus path-power attachments");
    GraphSource lemma1_src;
    lemma1_src.add_options(lemma1);
    add_s(lemma1);
    auto* theorem4 = construct->add_subcommand(
        "theorem4", "Core construction: keep a dense core and attach every outside vertex");
    GraphSource theorem4_src;
    theorem4_src.add_options(theorem4);
    double theorem4_w = 0;
    double theorem4_p = -1.0;
    theorem4->add_option("--w", theorem4_w, "Slack parameter of the core-size formula")
        ->required()
        ->check(CLI::PositiveNumber);
    theorem4->add_option("--model-p", theorem4_p,
                         "Edge probability for the core-size formula (defaults to --p)")
        ->check(CLI::Range(0.0, 1.0));
    add_s(theorem4);

    // check ext | ham | bs | bstar | as
    auto* check = app.add_subcommand("check", "Decide a graph property and report witnesses");
    check->require_subcommand(1);
    struct CheckSub {
        CLI::App* cmd;
        GraphSource src;
    };
    std::map<std::string, CheckSub> checks;
    for (const char* name : {"ext", "ham", "bs", "bstar", "as"}) {
        static const std::map<std::string, std::string> blurb = {
            {"ext", "Every s-set has pairwise-adjacent common neighbors"},
            {"ham", "Every (s-1)-set's common neighborhood carries a path power"},
            {"bs", "Every edge lies in an s-clique"},
            {"bstar", "Every vertex pair has pairwise-adjacent common neighbors"},
            {"as", "The minimum saturation size equals the closed form"},
        };
        CheckSub& sub = checks[name];  // options bind field addresses: create in place
        sub.cmd = check->add_subcommand(name, blurb.at(name));
        sub.src.add_options(sub.cmd);
        add_s(sub.cmd);
    }
    int ham_max_n = 0;
    checks.at("ham").cmd->add_option(
        "--max-n", ham_max_n, "Raise the vertex-count cap of this exhaustive check (0 = default)");

    // formula
    auto* formula = app.add_subcommand("formula", "Evaluate a closed-form quantity");
    formula->require_subcommand(1);
    long long f_n = 0;
    double f_p = -1.0;
    double f_w = 0;
    bool f_w_given = false;
    for (const char* name : {"q", "c", "qstar", "lambda", "delta", "en", "lemma2p", "t4bound"}) {
        static const std::map<std::string, std::string> blurb = {
            {"q", "Threshold scale at (n, s)"},
            {"c", "Threshold constant at s"},
            {"qstar", "Sharp threshold scale at (n, s)"},
            {"lambda", "First-moment exponent of the pair-witness count"},
            {"delta", "Correlation correction of the pair-witness count"},
            {"en", "Expected number of edges in no s-clique, with a rigorous bracket"},
            {"lemma2p", "Probability parametrization at (n, s, w)"},
            {"t4bound", "Upper bound on the saturation size of G(n, p)"},
        };
        auto* cmd = formula->add_subcommand(name, blurb.at(name));
        cmd->add_option("--n", f_n, "Vertex count");
        if (std::string(name) != "q" && std::string(name) != "qstar" &&
            std::string(name) != "lemma2p")
            cmd->add_option("--p", f_p, "Edge probability")->check(CLI::Range(0.0, 1.0));
        add_s(cmd);
        cmd->add_option_function<double>(
            "--w", [&f_w, &f_w_given](double v) { f_w = v; f_w_given = true; },
            "Slack parameter");
    }

    // sweep
    auto* sweep = app.add_subcommand(
        "sweep", "Estimate a property's success probability over an (n, p) grid");
    std::vector<int> sweep_ns;
    std::vector<double> sweep_ps;
    std::string sweep_property_name;
    std::uint64_t sweep_trials = 100;
    double sweep_confidence = 0.95;
    sweep->add_option("--n", sweep_ns, "Vertex counts (repeat or comma-separate)")
        ->required()
        ->delimiter(',');
    sweep->add_option("--p", sweep_ps, "Edge probabilities (repeat or comma-separate)")
        ->required()
        ->delimiter(',');
    sweep->add_option("--property", sweep_property_name,
                      "Property name: bs, bstar, ext, ham, wsat-complete, as, as-and-bstar, "
                      "nonempty")
        ->required();
    sweep->add_option("--trials", sweep_trials, "Samples per grid cell")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep->add_option("--confidence", sweep_confidence, "Confidence level of the reported intervals")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    add_s(sweep);

    // threshold
    auto* threshold = app.add_subcommand(
        "threshold", "Bisect for the probability where a monotone property crosses 1/2");
    int th_n = 0;
    std::string th_property_name;
    std::uint64_t th_trials = 100;
    double th_tolerance = 0.01;
    double th_p_lo = 0.0;
    double th_p_hi = 1.0;
    threshold->add_option("--n", th_n, "Vertex count")->required()->check(CLI::PositiveNumber);
    threshold->add_option("--property", th_property_name, "Monotone property name")->required();
    threshold->add_option("--trials", th_trials, "Samples per evaluated point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    threshold->add_option("--tolerance", th_tolerance, "Stop once the bracket is this narrow")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    threshold->add_option("--p-lo", th_p_lo, "Lower end of the initial bracket")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    threshold->add_option("--p-hi", th_p_hi, "Upper end of the initial bracket")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    add_s(threshold);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitDomainError;
    }
    common.seed_given = seed_opt->count() > 0;
    common.budget_given = budget_opt->count() > 0;

    try {
        if (*gen) {
            require_seed_in_strict_mode(common);
            Graph g = generate_gnp(gen_n, gen_p, Seed(common.seed));
            return emit(common, to_edge_list(g));
        }

        if (*closure) {
            Graph host = closure_host.resolve(common);
            Graph start;
            try {
                start = read_edge_list_file(closure_sub);
            } catch (const ParseError& e) {
                throw std::invalid_argument(closure_sub + ":" + e.what());
            }
            ClosureResult r = bootstrap_closure(host, start, s);
            return emit_json(common, r);
        }

        if (*wsat_cmd) {
            if (wsat_src.samples()) require_seed_in_strict_mode(common);
            Graph g = wsat_src.resolve(common);
            WsatResult r = wsat_exact(g, s, resolve_wsat_options(common, wsat_allow_cliques));
            emit_json(common, r);
            return r.exact ? 0 : kExitBudgetExhausted;
        }

        if (*lemma1) {
            if (lemma1_src.samples()) require_seed_in_strict_mode(common);
            Graph g = lemma1_src.resolve(common);
            KernelResult r = build_kernel_construction(
                g, s, resolve_budget(common, SearchBudget::path_search_default()));
            emit_json(common, r);
            return r.status == KernelResult::Status::budget_exhausted ? kExitBudgetExhausted : 0;
        }

        if (*theorem4) {
            if (theorem4_src.samples()) require_seed_in_strict_mode(common);
            Graph g = theorem4_src.resolve(common);
            double model_p = theorem4_p >= 0.0 ? theorem4_p : theorem4_src.gnp_p;
            if (model_p < 0.0)
                throw std::invalid_argument("pass --model-p when the graph is not sampled");
            CoreResult r = build_core_construction(
                g, model_p, s, theorem4_w,
                resolve_budget(common, SearchBudget::path_search_default()));
            emit_json(common, r);
            return r.status == CoreResult::Status::budget_exhausted ? kExitBudgetExhausted : 0;
        }

        if (*check) {
            const std::string name = check->get_subcommands().front()->get_name();
            const CheckSub& sub = checks.at(name);
            if (sub.src.samples()) require_seed_in_strict_mode(common);
            Graph g = sub.src.resolve(common);
            if (name == "as") {
                AsVerdict v = decide_as(g, s, resolve_wsat_options(common, false));
                emit_json(common, v);
                return v.verdict == AsState::unknown ? kExitBudgetExhausted : 0;
            }
            PropertyReport r;
            if (name == "ext") r = check_ext(g, s);
            if (name == "bs") r = check_bs(g, s);
            if (name == "bstar") r = check_bstar(g, s);
            if (name == "ham")
                r = check_ham(g, s, resolve_budget(common, SearchBudget::path_search_default()),
                              ham_max_n);
            emit_json(common, r);
            return r.undecided.empty() ? 0 : kExitBudgetExhausted;
        }

        if (*formula) {
            const std::string name = formula->get_subcommands().front()->get_name();
            auto need_n = [&] {
                if (f_n <= 0) throw std::invalid_argument("--n is required here");
            };
            auto need_p = [&] {
                if (f_p < 0.0) throw std::invalid_argument("--p is required here");
            };
            auto need_w = [&] {
                if (!f_w_given) throw std::invalid_argument("--w is required here");
            };
            double value = 0;
            if (name == "q") {
                need_n();
                value = threshold_scale(f_n, s);
            } else if (name == "c") {
                value = threshold_constant(s);
            } else if (name == "qstar") {
                need_n();
                value = sharp_threshold_scale(f_n, s);
            } else if (name == "lambda") {
                need_n(), need_p();
                value = janson_lambda(f_n, f_p, s);
            } else if (name == "delta") {
                need_n(), need_p();
                value = janson_delta(f_n, f_p, s);
            } else if (name == "en") {
                need_n(), need_p();
                ExpectedNs e = expected_uncovered_edges(f_n, f_p, s);
                return emit_json(common, json(e));
            } else if (name == "lemma2p") {
                need_n(), need_w();
                value = bs_threshold_p(f_n, s, f_w);
            } else {
                need_n(), need_p(), need_w();
                value = wsat_upper_bound(f_n, f_p, s, f_w);
            }
            if (common.format != "json")
                throw std::invalid_argument("this command only supports --format json");
            return emit(common, format_double(value) + "\n");
        }

        if (*sweep) {
            require_seed_in_strict_mode(common);
            SearchBudget budget = resolve_budget(common, SearchBudget::path_search_default());
            PropertyCheck chk = property_by_name(sweep_property_name, s, budget);
            SweepResult r =
                sweep_property(sweep_ns, sweep_ps, s, sweep_trials, Seed(common.seed),
                               sweep_property_name, chk, common.workers, sweep_confidence);
            if (common.format == "csv") return emit(common, to_csv(r));
            return emit_json(common, r);
        }

        if (*threshold) {
            require_seed_in_strict_mode(common);
            SearchBudget budget = resolve_budget(common, SearchBudget::path_search_default());
            PropertyCheck chk = property_by_name(th_property_name, s, budget);
            ThresholdEstimate r =
                estimate_threshold(th_n, s, th_property_name, chk, th_trials, th_tolerance,
                                   Seed(common.seed), th_p_lo, th_p_hi, common.workers);
            if (common.format == "csv") return emit(common, to_csv(r));
            return emit_json(common, r);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    std::cerr << "error: no subcommand selected\n";
    return kExitDomainError;
}
