#include "qcournot/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qcournot {
namespace {

using nlohmann::json;

std::string join(const std::vector<std::string>& cells, const std::string& sep) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line += sep;
    line += cells[i];
  }
  return line;
}

std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

// Ladder columns derived from a trace: headers plus one string cell per
// (row, column). Round 1 renders as oracle/diff/NEW AMP, later rounds as
// DIFF r / NEW AMPr, matching the frozen spreadsheet layout.
struct Ladder {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> cells;  // cells[row][column]
  std::vector<std::vector<double>> values;      // same shape, raw numbers
};

Ladder build_ladder(const GroverTrace& trace, std::size_t rows) {
  if (trace.snapshots.empty() || trace.snapshots.front().amplitudes.size() != rows)
    throw DimensionError("trace dimension does not match payoff table size");
  const std::size_t rounds = (trace.snapshots.size() - 1) / 2;
  Ladder ladder;
  ladder.headers.push_back("amp");
  for (std::size_t r = 1; r <= rounds; ++r) {
    if (r == 1) {
      ladder.headers.push_back("oracle");
      ladder.headers.push_back("diff");
      ladder.headers.push_back("NEW AMP");
    } else {
      ladder.headers.push_back("DIFF " + std::to_string(r));
      ladder.headers.push_back("NEW AMP" + std::to_string(r));
    }
  }
  const auto& init = trace.snapshots.front().amplitudes;
  ladder.cells.resize(rows);
  ladder.values.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    ladder.cells[i].push_back(format_number(init[i]));
    ladder.values[i].push_back(init[i]);
  }
  for (std::size_t r = 1; r <= rounds; ++r) {
    const auto& post_oracle = trace.snapshots[2 * r - 1].amplitudes;
    const auto& post_diffusion = trace.snapshots[2 * r].amplitudes;
    for (std::size_t i = 0; i < rows; ++i) {
      if (r == 1) {
        const double sign = post_oracle[i] == init[i] ? 1.0 : -1.0;
        ladder.cells[i].push_back(format_number(sign));
        ladder.values[i].push_back(sign);
      }
      ladder.cells[i].push_back(format_number(post_oracle[i]));
      ladder.values[i].push_back(post_oracle[i]);
      ladder.cells[i].push_back(format_number(post_diffusion[i]));
      ladder.values[i].push_back(post_diffusion[i]);
    }
  }
  return ladder;
}

std::vector<std::string> payoff_headers(const Ladder* ladder) {
  std::vector<std::string> headers = {"q1",   "q2",  "Q",   "P",   "P.q1", "tc1",
                                      "Pi1",  "p.q2", "tc2", "Pi2", "totalPi"};
  if (ladder)
    headers.insert(headers.end(), ladder->headers.begin(), ladder->headers.end());
  headers.push_back("CS");
  headers.push_back("W");
  return headers;
}

std::vector<std::string> payoff_row_cells(const PayoffRow& row, const Ladder* ladder,
                                          std::size_t index) {
  std::vector<std::string> cells = {
      format_number(row.q1),           format_number(row.q2),
      format_number(row.total_output), format_number(row.price),
      format_number(row.firm1.revenue), format_number(row.firm1.cost),
      format_number(row.firm1.profit), format_number(row.firm2.revenue),
      format_number(row.firm2.cost),   format_number(row.firm2.profit),
      format_number(row.total_profit)};
  if (ladder)
    cells.insert(cells.end(), ladder->cells[index].begin(), ladder->cells[index].end());
  cells.push_back(format_number(row.consumer_surplus));
  cells.push_back(format_number(row.welfare));
  return cells;
}

json outputs_to_json(const std::optional<std::pair<double, double>>& outputs) {
  if (!outputs) return nullptr;
  return json::array({outputs->first, outputs->second});
}

std::optional<std::pair<double, double>> outputs_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return std::make_pair(j.at(0).get<double>(), j.at(1).get<double>());
}

std::string pair_text(double a, double b) {
  return "(" + format_number(a) + "," + format_number(b) + ")";
}

}  // namespace

std::string format_money(double value) {
  long long cents = std::llround(value * 100.0);
  const bool negative = cents < 0;
  if (negative) cents = -cents;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%lld.%02lld", negative ? "-" : "", cents / 100,
                cents % 100);
  return buf;
}

std::string format_number(double value) {
  const long long nearest = std::llround(value);
  if (std::abs(value - static_cast<double>(nearest)) < 1e-9)
    return std::to_string(nearest);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string text = buf;
  while (text.back() == '0') text.pop_back();
  if (text.back() == '.') text.pop_back();
  return text;
}

std::string format_probability(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  return buf;
}

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Classical: return "classical";
    case ScenarioKind::Entangled: return "entangled";
    case ScenarioKind::GroverJoint: return "grover";
    case ScenarioKind::DurrHoyerBestResponse: return "dhoyer";
  }
  throw std::logic_error("unreachable");
}

std::string to_string(CsConvention convention) {
  return convention == CsConvention::PriceTriangle ? "paper" : "standard";
}

std::string to_string(ParetoVerdict verdict) {
  switch (verdict) {
    case ParetoVerdict::QuantumParetoImproves: return "QuantumParetoImproves";
    case ParetoVerdict::Incomparable: return "Incomparable";
    case ParetoVerdict::ClassicalParetoImproves: return "ClassicalParetoImproves";
    case ParetoVerdict::Equivalent: return "Equivalent";
  }
  throw std::logic_error("unreachable");
}

std::string to_string(TraceStage stage) {
  switch (stage) {
    case TraceStage::Init: return "init";
    case TraceStage::PostOracle: return "post-oracle";
    case TraceStage::PostDiffusion: return "post-diffusion";
  }
  throw std::logic_error("unreachable");
}

std::string to_string(Termination termination) {
  return termination == Termination::Natural ? "natural" : "budget-terminated";
}

std::string to_string(GroverSchedule schedule) {
  return schedule == GroverSchedule::ExactCount ? "exact" : "randomized";
}

ScenarioKind scenario_kind_from_string(const std::string& text) {
  if (text == "classical") return ScenarioKind::Classical;
  if (text == "entangled") return ScenarioKind::Entangled;
  if (text == "grover") return ScenarioKind::GroverJoint;
  if (text == "dhoyer") return ScenarioKind::DurrHoyerBestResponse;
  throw std::invalid_argument("unknown scenario kind: " + text);
}

CsConvention cs_convention_from_string(const std::string& text) {
  if (text == "paper") return CsConvention::PriceTriangle;
  if (text == "standard") return CsConvention::DemandTriangle;
  throw std::invalid_argument("unknown CS convention: " + text);
}

std::string payoff_csv(const PayoffTable& table, const GroverTrace* ladder_trace) {
  std::optional<Ladder> ladder;
  if (ladder_trace) ladder = build_ladder(*ladder_trace, table.rows.size());
  const Ladder* lp = ladder ? &*ladder : nullptr;
  std::string out = join(payoff_headers(lp), ",") + "\n";
  for (std::size_t i = 0; i < table.rows.size(); ++i)
    out += join(payoff_row_cells(table.rows[i], lp, i), ",") + "\n";
  return out;
}

std::string payoff_text(const PayoffTable& table, const GroverTrace* ladder_trace) {
  std::optional<Ladder> ladder;
  if (ladder_trace) ladder = build_ladder(*ladder_trace, table.rows.size());
  const Ladder* lp = ladder ? &*ladder : nullptr;
  std::vector<std::vector<std::string>> rows;
  rows.push_back(payoff_headers(lp));
  for (std::size_t i = 0; i < table.rows.size(); ++i)
    rows.push_back(payoff_row_cells(table.rows[i], lp, i));
  return aligned(rows);
}

nlohmann::json payoff_json(const PayoffTable& table, const GroverTrace* ladder_trace) {
  std::optional<Ladder> ladder;
  if (ladder_trace) ladder = build_ladder(*ladder_trace, table.rows.size());
  json rows = json::array();
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const PayoffRow& r = table.rows[i];
    json row = {{"q1", r.q1},
                {"q2", r.q2},
                {"Q", r.total_output},
                {"P", r.price},
                {"P.q1", r.firm1.revenue},
                {"tc1", r.firm1.cost},
                {"Pi1", r.firm1.profit},
                {"p.q2", r.firm2.revenue},
                {"tc2", r.firm2.cost},
                {"Pi2", r.firm2.profit},
                {"totalPi", r.total_profit},
                {"CS", r.consumer_surplus},
                {"W", r.welfare}};
    if (ladder)
      for (std::size_t c = 0; c < ladder->headers.size(); ++c)
        row[ladder->headers[c]] = ladder->values[i][c];
    rows.push_back(std::move(row));
  }
  return json{{"market",
               {{"a", table.params.intercept},
                {"b", table.params.slope},
                {"c", table.params.unit_cost}}},
              {"cs_convention", to_string(table.convention)},
              {"negative_price", table.negative_price},
              {"rows", std::move(rows)}};
}

nlohmann::json trace_to_json(const GroverTrace& trace) {
  json snapshots = json::array();
  for (const TraceSnapshot& s : trace.snapshots)
    snapshots.push_back({{"stage", to_string(s.stage)},
                         {"iteration", s.iteration},
                         {"amplitudes", s.amplitudes}});
  return json{{"snapshots", std::move(snapshots)}};
}

GroverTrace trace_from_json(const nlohmann::json& j) {
  GroverTrace trace;
  for (const json& s : j.at("snapshots")) {
    TraceSnapshot snapshot;
    const std::string stage = s.at("stage").get<std::string>();
    if (stage == "init") snapshot.stage = TraceStage::Init;
    else if (stage == "post-oracle") snapshot.stage = TraceStage::PostOracle;
    else if (stage == "post-diffusion") snapshot.stage = TraceStage::PostDiffusion;
    else throw std::invalid_argument("unknown trace stage: " + stage);
    snapshot.iteration = s.at("iteration").get<int>();
    snapshot.amplitudes = s.at("amplitudes").get<std::vector<double>>();
    trace.snapshots.push_back(std::move(snapshot));
  }
  return trace;
}

nlohmann::json search_trace_to_json(const ThresholdSearchTrace& trace) {
  json rounds = json::array();
  for (const SearchRound& r : trace.rounds) {
    json round = {{"best_index", r.best_index},
                  {"best_value", r.best_value},
                  {"threshold", r.threshold},
                  {"marked_count", r.marked_count},
                  {"grover_iterations", r.grover_iterations},
                  {"measured_index",
                   r.measured_index ? json(*r.measured_index) : json(nullptr)},
                  {"accepted", r.accepted}};
    rounds.push_back(std::move(round));
  }
  return json{{"initial_index", trace.initial_index},
              {"termination", to_string(trace.termination)},
              {"rounds", std::move(rounds)}};
}

ThresholdSearchTrace search_trace_from_json(const nlohmann::json& j) {
  ThresholdSearchTrace trace;
  trace.initial_index = j.at("initial_index").get<std::size_t>();
  const std::string termination = j.at("termination").get<std::string>();
  if (termination == "natural") trace.termination = Termination::Natural;
  else if (termination == "budget-terminated")
    trace.termination = Termination::BudgetExhausted;
  else throw std::invalid_argument("unknown termination: " + termination);
  for (const json& r : j.at("rounds")) {
    SearchRound round{r.at("best_index").get<std::size_t>(),
                      r.at("best_value").get<double>(),
                      r.at("threshold").get<double>(),
                      r.at("marked_count").get<std::size_t>(),
                      r.at("grover_iterations").get<int>(),
                      std::nullopt,
                      r.at("accepted").get<bool>()};
    if (!r.at("measured_index").is_null())
      round.measured_index = r.at("measured_index").get<std::size_t>();
    trace.rounds.push_back(round);
  }
  return trace;
}

nlohmann::json scenario_to_json(const ScenarioResult& result) {
  json distribution = json::array();
  for (const WeightedOutcome& w : result.distribution)
    distribution.push_back({{"q1", w.q1}, {"q2", w.q2}, {"p", w.probability}});
  return json{
      {"kind", to_string(result.kind)},
      {"market",
       {{"a", result.params.intercept},
        {"b", result.params.slope},
        {"c", result.params.unit_cost}}},
      {"cs_convention", to_string(result.convention)},
      {"outputs", outputs_to_json(result.outputs)},
      {"distribution", std::move(distribution)},
      {"profit1", result.profit1},
      {"profit2", result.profit2},
      {"consumer_surplus", result.consumer_surplus},
      {"welfare", result.welfare},
      {"selection_probability",
       result.selection_probability ? json(*result.selection_probability) : json(nullptr)},
      {"grover_trace",
       result.grover_trace ? trace_to_json(*result.grover_trace) : json(nullptr)},
      {"search_trace",
       result.search_trace ? search_trace_to_json(*result.search_trace) : json(nullptr)},
      {"negative_price", result.negative_price}};
}

ScenarioResult scenario_from_json(const nlohmann::json& j) {
  ScenarioResult result;
  result.kind = scenario_kind_from_string(j.at("kind").get<std::string>());
  result.params = MarketParams{j.at("market").at("a").get<double>(),
                               j.at("market").at("b").get<double>(),
                               j.at("market").at("c").get<double>()};
  result.convention = cs_convention_from_string(j.at("cs_convention").get<std::string>());
  result.outputs = outputs_from_json(j.at("outputs"));
  for (const json& w : j.at("distribution"))
    result.distribution.push_back({w.at("q1").get<double>(), w.at("q2").get<double>(),
                                   w.at("p").get<double>()});
  result.profit1 = j.at("profit1").get<double>();
  result.profit2 = j.at("profit2").get<double>();
  result.consumer_surplus = j.at("consumer_surplus").get<double>();
  result.welfare = j.at("welfare").get<double>();
  if (!j.at("selection_probability").is_null())
    result.selection_probability = j.at("selection_probability").get<double>();
  if (!j.at("grover_trace").is_null())
    result.grover_trace = trace_from_json(j.at("grover_trace"));
  if (!j.at("search_trace").is_null())
    result.search_trace = search_trace_from_json(j.at("search_trace"));
  result.negative_price = j.at("negative_price").get<bool>();
  return result;
}

std::string scenario_text(const ScenarioResult& result) {
  std::ostringstream out;
  switch (result.kind) {
    case ScenarioKind::Classical:
      out << "classical: q*=" << pair_text(result.outputs->first, result.outputs->second)
          << " Π=" << pair_text(result.profit1, result.profit2)
          << " CS=" << format_number(result.consumer_surplus)
          << " W=" << format_number(result.welfare) << "\n";
      break;
    case ScenarioKind::Entangled: {
      out << "entangled: E[Π]=" << pair_text(result.profit1, result.profit2)
          << " E[CS]=" << format_number(result.consumer_surplus)
          << " E[W]=" << format_number(result.welfare) << "\n";
      out << "outcomes:";
      for (const WeightedOutcome& w : result.distribution)
        out << " " << pair_text(w.q1, w.q2) << " p=" << format_probability(w.probability);
      out << "\n";
      break;
    }
    case ScenarioKind::GroverJoint: {
      const std::size_t rounds =
          result.grover_trace ? (result.grover_trace->snapshots.size() - 1) / 2 : 0;
      out << "grover: selected " << pair_text(result.outputs->first, result.outputs->second)
          << " p=" << format_probability(result.selection_probability.value_or(0.0))
          << " Π=" << pair_text(result.profit1, result.profit2)
          << " CS=" << format_number(result.consumer_surplus)
          << " W=" << format_number(result.welfare) << " iterations=" << rounds << "\n";
      break;
    }
    case ScenarioKind::DurrHoyerBestResponse: {
      out << "dhoyer: winner q1=" << format_number(result.outputs->first)
          << " opponent=" << format_number(result.outputs->second) << " final best "
          << format_number(result.profit1) << "\n";
      if (result.search_trace) {
        const ThresholdSearchTrace& trace = *result.search_trace;
        for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
          const SearchRound& r = trace.rounds[i];
          out << "round " << i + 1 << ": best_index=" << r.best_index
              << " best=" << format_number(r.best_value)
              << " threshold=" << format_number(r.threshold)
              << " marked=" << r.marked_count << " k=" << r.grover_iterations;
          if (r.measured_index) out << " measured=" << *r.measured_index;
          out << (r.accepted ? " accepted" : r.marked_count == 0 ? " terminal" : " rejected")
              << "\n";
        }
        out << "termination=" << to_string(trace.termination) << "\n";
      }
      break;
    }
  }
  return out.str();
}

std::string scenario_csv(const ScenarioResult& result) {
  std::string out = "kind,q1,q2,Pi1,Pi2,CS,W,selection_p\n";
  out += to_string(result.kind);
  out += ",";
  if (result.outputs) {
    out += format_number(result.outputs->first) + "," +
           format_number(result.outputs->second);
  } else {
    out += ",";
  }
  out += "," + format_number(result.profit1) + "," + format_number(result.profit2) +
         "," + format_number(result.consumer_surplus) + "," +
         format_number(result.welfare) + ",";
  if (result.selection_probability)
    out += format_probability(*result.selection_probability);
  out += "\n";
  return out;
}

nlohmann::json comparison_to_json(const ComparisonRow& row) {
  return json{
      {"classical",
       {{"outputs", outputs_to_json(row.classical_outputs)},
        {"profit1", row.classical_profits.first},
        {"profit2", row.classical_profits.second},
        {"consumer_surplus", row.classical_cs},
        {"cs_per_firm", {row.classical_cs / 2.0, row.classical_cs / 2.0}}}},
      {"quantum",
       {{"outputs", outputs_to_json(row.quantum_outputs)},
        {"profit1", row.quantum_profits.first},
        {"profit2", row.quantum_profits.second},
        {"consumer_surplus", row.quantum_cs},
        {"cs_per_firm", {row.quantum_cs / 2.0, row.quantum_cs / 2.0}}}},
      {"verdict", to_string(row.verdict)}};
}

std::string comparison_text(const ComparisonRow& row) {
  auto outputs_text = [](const std::optional<std::pair<double, double>>& outputs) {
    return outputs ? pair_text(outputs->first, outputs->second) : std::string("(dist)");
  };
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"side", "output", "Pi1", "Pi2", "CS", "CS/firm"});
  rows.push_back({"classical", outputs_text(row.classical_outputs),
                  format_number(row.classical_profits.first),
                  format_number(row.classical_profits.second),
                  format_number(row.classical_cs),
                  pair_text(row.classical_cs / 2.0, row.classical_cs / 2.0)});
  rows.push_back({"quantum", outputs_text(row.quantum_outputs),
                  format_number(row.quantum_profits.first),
                  format_number(row.quantum_profits.second),
                  format_number(row.quantum_cs),
                  pair_text(row.quantum_cs / 2.0, row.quantum_cs / 2.0)});
  return aligned(rows) + "verdict: " + to_string(row.verdict) + "\n";
}

std::string comparison_csv(const ComparisonRow& row) {
  auto cells = [](const std::optional<std::pair<double, double>>& outputs,
                  const std::pair<double, double>& profits, double cs) {
    std::string q1 = outputs ? format_number(outputs->first) : "";
    std::string q2 = outputs ? format_number(outputs->second) : "";
    return q1 + "," + q2 + "," + format_number(profits.first) + "," +
           format_number(profits.second) + "," + format_number(cs);
  };
  return "side,q1,q2,Pi1,Pi2,CS,verdict\nclassical," +
         cells(row.classical_outputs, row.classical_profits, row.classical_cs) + "," +
         to_string(row.verdict) + "\nquantum," +
         cells(row.quantum_outputs, row.quantum_profits, row.quantum_cs) + "," +
         to_string(row.verdict) + "\n";
}

}  // namespace qcournot
