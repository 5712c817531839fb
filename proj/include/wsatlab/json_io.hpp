#pragma once

#include <json.hpp>
#include <string>

#include "wsatlab/bootstrap.hpp"
#include "wsatlab/constructions.hpp"
#include "wsatlab/formulas.hpp"
#include "wsatlab/graph.hpp"
#include "wsatlab/montecarlo.hpp"
#include "wsatlab/properties.hpp"
#include "wsatlab/wsat.hpp"

namespace wsatlab {

// ADL hooks for nlohmann::json. Field names are part of the output contract;
// nlohmann's object keys serialize in sorted order, so dumps are
// byte-reproducible.

void to_json(nlohmann::json& j, const Edge& e);
void to_json(nlohmann::json& j, const Graph& g);
void to_json(nlohmann::json& j, const TraceStep& step);
void to_json(nlohmann::json& j, const BootstrapTrace& trace);
void to_json(nlohmann::json& j, const ClosureResult& r);
void to_json(nlohmann::json& j, const PropertyReport& r);
void to_json(nlohmann::json& j, const SearchStats& s);
void to_json(nlohmann::json& j, const WsatResult& r);
void to_json(nlohmann::json& j, const AsVerdict& v);
void to_json(nlohmann::json& j, const KernelResult& r);
void to_json(nlohmann::json& j, const CoreResult& r);
void to_json(nlohmann::json& j, const ExpectedNs& e);
void to_json(nlohmann::json& j, const Interval& i);
void to_json(nlohmann::json& j, const SweepCell& c);
void to_json(nlohmann::json& j, const SweepResult& r);
void to_json(nlohmann::json& j, const ThresholdPoint& p);
void to_json(nlohmann::json& j, const ThresholdEstimate& e);

void from_json(const nlohmann::json& j, Graph& g);
void from_json(const nlohmann::json& j, BootstrapTrace& trace);

// 2-space indent, sorted keys, trailing newline.
std::string dump_json(const nlohmann::json& j);

// Shortest representation that round-trips exactly.
std::string format_double(double x);

// One row per cell: n,p,trials,successes,lo,hi. Threshold rows carry a
// Wilson interval computed at 95% confidence.
std::string to_csv(const SweepResult& r);
std::string to_csv(const ThresholdEstimate& e);

}  // namespace wsatlab
