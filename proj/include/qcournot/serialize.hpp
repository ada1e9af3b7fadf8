#pragma once

#include <string>

#include <json.hpp>

#include "qcournot/dhoyer.hpp"
#include "qcournot/game.hpp"
#include "qcournot/grover.hpp"
#include "qcournot/market.hpp"

namespace qcournot {

// Fixed two decimals, ties away from zero.
std::string format_money(double value);
// Integer digits when integral (1e-9), otherwise up to six decimals with
// trailing zeros trimmed. The cell format of every table rendering.
std::string format_number(double value);
// Fixed four decimals.
std::string format_probability(double value);

std::string to_string(ScenarioKind kind);
std::string to_string(CsConvention convention);  // "paper" | "standard"
std::string to_string(ParetoVerdict verdict);
std::string to_string(TraceStage stage);
std::string to_string(Termination termination);
std::string to_string(GroverSchedule schedule);

ScenarioKind scenario_kind_from_string(const std::string& text);
CsConvention cs_convention_from_string(const std::string& text);

// Payoff table renderings. When a trace is attached its amplitude ladder is
// spliced in as the columns amp, oracle, diff, NEW AMP, DIFF 2, NEW AMP2, ...
// between totalPi and CS; otherwise those columns are omitted.
std::string payoff_csv(const PayoffTable& table, const GroverTrace* ladder = nullptr);
std::string payoff_text(const PayoffTable& table, const GroverTrace* ladder = nullptr);
nlohmann::json payoff_json(const PayoffTable& table, const GroverTrace* ladder = nullptr);

nlohmann::json trace_to_json(const GroverTrace& trace);
GroverTrace trace_from_json(const nlohmann::json& j);
nlohmann::json search_trace_to_json(const ThresholdSearchTrace& trace);
ThresholdSearchTrace search_trace_from_json(const nlohmann::json& j);

nlohmann::json scenario_to_json(const ScenarioResult& result);
ScenarioResult scenario_from_json(const nlohmann::json& j);
std::string scenario_text(const ScenarioResult& result);
std::string scenario_csv(const ScenarioResult& result);

nlohmann::json comparison_to_json(const ComparisonRow& row);
std::string comparison_text(const ComparisonRow& row);
std::string comparison_csv(const ComparisonRow& row);

}  // namespace qcournot
