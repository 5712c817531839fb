#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "wsatlab/bootstrap.hpp"
#include "wsatlab/constructions.hpp"
#include "wsatlab/generators.hpp"
#include "wsatlab/json_io.hpp"
#include "wsatlab/montecarlo.hpp"
#include "wsatlab/properties.hpp"
#include "wsatlab/seed.hpp"
#include "wsatlab/wsat.hpp"

using namespace wsatlab;
using nlohmann::json;

TEST_CASE("graphs round trip") {
    Graph g = generate_gnp(8, 0.5, Seed(41));
    json j = g;
    CHECK(j.at("n") == 8);
    CHECK(j.at("m") == g.edge_count());
    Graph back = j.get<Graph>();
    CHECK(back.fingerprint() == g.fingerprint());

    json bad = j;
    bad["m"] = g.edge_count() + 1;
    CHECK_THROWS_AS(bad.get<Graph>(), std::invalid_argument);
}

TEST_CASE("traces round trip with the fingerprint header") {
    Graph host = complete_graph(5);
    Graph h0(5);
    for (int v = 1; v < 5; ++v) h0.add_edge(0, v);
    ClosureResult r = bootstrap_closure(host, h0, 3);
    REQUIRE(r.percolated);

    json j = r.trace;
    CHECK(j.at("s") == 3);
    CHECK(j.at("host") == fingerprint_hex(host.fingerprint()));
    CHECK(j.at("steps").is_array());
    BootstrapTrace back = j.get<BootstrapTrace>();
    CHECK(back == r.trace);
    CHECK(verify_trace(host, h0, back).ok);

    json bad = j;
    bad["host"] = "zz";
    CHECK_THROWS_AS(bad.get<BootstrapTrace>(), std::invalid_argument);
}

TEST_CASE("property reports expose the pinned fields") {
    Graph c5(5);
    for (int i = 0; i < 5; ++i) c5.add_edge(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
    json j = check_bs(c5, 3);
    CHECK(j.at("property") == "B_s");
    CHECK(j.at("holds") == false);
    CHECK(j.at("witness").is_array());
    CHECK(j.at("undecided").is_array());
    CHECK(j.at("counts").at("N_s") == 5);

    json held = check_bs(complete_graph(4), 3);
    CHECK(held.at("witness").is_null());
}

TEST_CASE("solver results carry the witness as an edge array") {
    WsatResult r = wsat_exact(complete_graph(5), 3);
    json j = r;
    CHECK(j.at("value") == 4);
    CHECK(j.at("exact") == true);
    REQUIRE(j.at("edges").is_array());
    CHECK(j.at("edges").size() == 4);
    CHECK(j.at("edges")[0].is_array());
    CHECK(j.at("trace").at("s") == 3);
    CHECK(j.at("stats").contains("candidates_tested"));
}

TEST_CASE("constructions serialize with their kind tags") {
    KernelResult k = build_kernel_construction(complete_graph(6), 3);
    REQUIRE(k.status == KernelResult::Status::ok);
    json jk = k;
    CHECK(jk.at("kind") == "lemma1");
    CHECK(jk.at("status") == "ok");
    CHECK(jk.at("kernel") == json::array({0}));
    CHECK(jk.at("edges").size() == 5);
    CHECK(jk.at("n") == 6);

    CoreResult c = build_core_construction(complete_graph(40), 0.9, 3, 0.5);
    REQUIRE(c.status == CoreResult::Status::ok);
    json jc = c;
    CHECK(jc.at("kind") == "theorem4");
    CHECK(jc.at("m") == c.construction->m);
    CHECK(jc.at("X").size() == std::size_t(c.construction->m));
    CHECK(jc.at("X")[0] == 0);
    CHECK(jc.at("edges").size() == c.construction->h.edge_count());
    CHECK(jc.at("degenerate") == false);

    KernelResult none = build_kernel_construction(Graph(6), 4);
    json jn = none;
    CHECK(jn.at("status") == "no_kernel");
    CHECK(jn.at("kernel").is_null());
}

TEST_CASE("dumps are deterministic with sorted keys and a final newline") {
    json j = json{{"zeta", 1}, {"alpha", 2}, {"mid", json{{"b", 1}, {"a", 2}}}};
    std::string a = dump_json(j);
    std::string b = dump_json(j);
    CHECK(a == b);
    CHECK(a.back() == '\n');
    CHECK(a.find("\"alpha\"") < a.find("\"mid\""));
    CHECK(a.find("\"mid\"") < a.find("\"zeta\""));
}

TEST_CASE("doubles print shortest round-trip forms") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.29296875) == "0.29296875");
    for (double x : {3.92, 18.122413373764257, 1e-12, 6.6e4}) {
        double back = std::stod(format_double(x));
        CHECK(back == x);
    }
}

TEST_CASE("csv rows mirror sweep cells") {
    SweepResult r;
    r.property = "bstar";
    r.s = 3;
    r.cells.push_back(SweepCell{50, 0.25, 40, 10, 0, wilson_interval(10, 40)});
    r.cells.push_back(SweepCell{60, 0.5, 40, 30, 0, wilson_interval(30, 40)});
    std::string csv = to_csv(r);
    CHECK(csv.substr(0, csv.find('\n')) == "n,p,trials,successes,lo,hi");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    CHECK(csv.find("50,0.25,40,10,") != std::string::npos);
    CHECK(csv.find("60,0.5,40,30,") != std::string::npos);

    ThresholdEstimate e;
    e.property = "bstar";
    e.s = 3;
    e.n = 100;
    e.points.push_back(ThresholdPoint{0.25, 50, 10, 0});
    std::string tcsv = to_csv(e);
    CHECK(tcsv.substr(0, tcsv.find('\n')) == "n,p,trials,successes,lo,hi");
    CHECK(tcsv.find("100,0.25,50,10,") != std::string::npos);
}
