#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "zagreb/bicyclic.hpp"
#include "zagreb/constructor.hpp"
#include "zagreb/errors.hpp"
#include "zagreb/json.hpp"
#include "zagreb/moves.hpp"
#include "zagreb/sequences.hpp"

namespace zagreb::cli {

using nlohmann::json;

namespace {

json class_json(const SequenceClass& cls) {
  return {{"excess", cls.excess},
          {"kind", std::string(to_string(cls.kind))},
          {"leaf_count", cls.leaf_count},
          {"degree2_count", cls.degree2_count}};
}

json conditions_json(const TheoremConditions& c) {
  return {{"i", c.sum_condition},
          {"ii", c.head_condition},
          {"iii", c.plateau_condition},
          {"iv", c.leaf_condition},
          {"verdict", c.verdict()}};
}

DegreeSequence parse_sequence(std::string_view text, Report& report) {
  auto seq = DegreeSequence::parse(text);
  if (seq.was_reordered()) {
    report.warnings.push_back("sequence reordered to non-increasing: " +
                              seq.to_string());
  }
  return seq;
}

json swap_json(const SimpleGraph& before, const EdgeSwap& m) {
  return {{"v1", m.v1}, {"u1", m.u1}, {"v2", m.v2}, {"u2", m.u2},
          {"gain", edge_swap_gain(before, m)}};
}

SimpleGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read graph file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

void strip_timing(json& j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [key, value] : j.items()) strip_timing(value);
  } else if (j.is_array()) {
    for (auto& value : j) strip_timing(value);
  }
}

std::string scalar_text(const json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

void print_pretty(const Report& report, std::ostream& out) {
  out << report.command << '\n';
  const auto& result = report.result;
  if (report.command == "sweep" && result.contains("sequences")) {
    out << "  n=" << result["n"] << " excess=" << result["excess"] << '\n';
    out << "  " << std::left << std::setw(28) << "sequence" << std::setw(10)
        << "m2" << std::setw(13) << "source" << "constructor\n";
    for (const auto& row : result["sequences"]) {
      out << "  " << std::left << std::setw(28) << scalar_text(row["sequence"])
          << std::setw(10) << row["m2"].dump() << std::setw(13)
          << scalar_text(row["source"])
          << (row.contains("constructor_m2") ? row["constructor_m2"].dump() : "-")
          << '\n';
    }
    if (result.contains("violations")) {
      out << "  comparable pairs: " << result["comparable_pairs"]
          << ", violations: " << result["violations"].size() << '\n';
    }
  } else {
    for (const auto& [key, value] : result.items()) {
      out << "  " << key << ": " << scalar_text(value) << '\n';
    }
  }
  for (const auto& w : report.warnings) out << "  warning: " << w << '\n';
}

}  // namespace

json Report::to_json() const {
  return {{"command", command},
          {"inputs", inputs},
          {"result", result},
          {"warnings", warnings}};
}

int default_cap() {
  if (const char* env = std::getenv(kCapEnvVar)) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 && value <= kMaxSearchOrder) {
      return static_cast<int>(value);
    }
  }
  return kDefaultOracleCap;
}

Report cmd_validate(std::string_view sequence) {
  Report report{"validate"};
  report.inputs["sequence"] = std::string(sequence);
  const auto seq = parse_sequence(sequence, report);
  const bool connected = is_connected_realizable(seq);
  report.result = {{"sequence", seq.to_string()},
                   {"graphic", is_graphic(seq)},
                   {"connected_realizable", connected},
                   {"class", connected ? class_json(classify(seq)) : json()},
                   {"conditions", conditions_json(check_theorem_conditions(seq))}};
  return report;
}

Report cmd_construct(std::string_view sequence) {
  Report report{"construct"};
  report.inputs["sequence"] = std::string(sequence);
  const auto seq = parse_sequence(sequence, report);
  const auto trace = construct_gm_star(seq);
  report.warnings.insert(report.warnings.end(), trace.warnings.begin(),
                         trace.warnings.end());
  report.result = trace_sidecar(trace);
  report.result["sequence"] = seq.to_string();
  report.result["edges"] = edges_json(trace.graph);
  report.result["bfs_ordering"] =
      verify_bfs_ordering(trace.graph, trace.ordering).holds;
  return report;
}

Report cmd_bicyclic_max(std::string_view sequence) {
  Report report{"bicyclic-max"};
  report.inputs["sequence"] = std::string(sequence);
  const auto seq = parse_sequence(sequence, report);
  report.result = to_json(bicyclic_max(seq));
  return report;
}

Report cmd_oracle(std::string_view sequence, const OracleOptions& options,
                  bool with_timing) {
  Report report{"oracle"};
  report.inputs = {{"sequence", std::string(sequence)},
                   {"cap", options.cap},
                   {"workers", options.workers}};
  const auto seq = parse_sequence(sequence, report);
  report.result = to_json(seq, oracle_max_m2(seq, options), with_timing);
  return report;
}

Report cmd_m2(const SimpleGraph& g, std::string_view source) {
  Report report{"m2"};
  report.inputs["graph"] = std::string(source);
  report.result = {{"n", g.order()},
                   {"m", g.size()},
                   {"m2", second_zagreb(g)},
                   {"connected", is_connected(g)}};
  try {
    report.result["degree_sequence"] = degree_sequence_of(g).to_string();
  } catch (const DomainError& e) {
    report.result["degree_sequence"] = nullptr;
    report.warnings.emplace_back(e.what());
  }
  return report;
}

Report cmd_improve(const SimpleGraph& g, std::string_view source, int depth) {
  Report report{"improve"};
  report.inputs = {{"graph", std::string(source)}, {"depth", depth}};
  const auto outcome = local_search(g, {depth});
  auto moves = json::array();
  SimpleGraph current = g;
  for (const auto& m : outcome.moves) {
    moves.push_back(swap_json(current, m));
    current = apply_edge_swap(current, m);
  }
  report.result = {{"initial_m2", second_zagreb(g)},
                   {"final_m2", second_zagreb(outcome.graph)},
                   {"moves", std::move(moves)},
                   {"edges", edges_json(outcome.graph)}};
  return report;
}

Report cmd_majorize(std::string_view a, std::string_view b, bool chain) {
  Report report{"majorize"};
  report.inputs = {{"a", std::string(a)}, {"b", std::string(b)}, {"chain", chain}};
  const auto sa = parse_sequence(a, report);
  const auto sb = parse_sequence(b, report);
  const auto order = majorization_compare(sa, sb);
  report.result = {{"a", sa.to_string()},
                   {"b", sb.to_string()},
                   {"order", std::string(to_string(order))}};
  if (!chain) return report;
  if (order == MajorizationOrder::Incomparable) {
    report.warnings.emplace_back("sequences are incomparable; no chain");
    return report;
  }
  const auto steps = order == MajorizationOrder::BLessA
                         ? majorization_chain(sb, sa)
                         : majorization_chain(sa, sb);
  auto listed = json::array();
  for (const auto& s : steps) listed.push_back(s.to_string());
  report.result["chain"] = std::move(listed);
  report.result["chain_length"] = steps.size();
  return report;
}

Report cmd_sweep(const SweepOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  Report report{"sweep"};
  report.inputs = {{"n", options.n},
                   {"excess", options.excess},
                   {"verify_monotone", options.verify_monotone},
                   {"cap", options.oracle.cap},
                   {"workers", options.oracle.workers}};
  if (options.n > options.oracle.cap) {
    throw CapExceeded(options.n, options.oracle.cap);
  }
  const auto sequences = [&] {
    auto all = connected_sequences(options.n, options.excess);
    std::sort(all.begin(), all.end());
    return all;
  }();

  struct Row {
    M2Value m2 = 0;
    json entry;
  };
  std::vector<Row> rows(sequences.size());
  auto evaluate = [&](std::size_t i) {
    const auto& seq = sequences[i];
    Row row;
    row.entry["sequence"] = seq.to_string();
    if (options.excess == 1) {
      const auto best = bicyclic_max(seq);
      row.m2 = best.value;
      row.entry["source"] = "closed-form";
      row.entry["case"] = best.case_id;
    } else {
      OracleOptions single = options.oracle;
      single.workers = 1;
      row.m2 = oracle_max_m2(seq, single).max_m2;
      row.entry["source"] = "oracle";
    }
    row.entry["m2"] = row.m2;
    const auto conditions = check_theorem_conditions(seq);
    row.entry["conditions_hold"] = conditions.verdict();
    if (conditions.verdict()) {
      row.entry["constructor_m2"] = second_zagreb(construct_gm_star(seq).graph);
    }
    rows[i] = std::move(row);
  };

  // Rows are written by index, so the output order is independent of
  // scheduling. The first exception from any worker is rethrown.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (auto i = next++; i < rows.size(); i = next++) {
      try {
        evaluate(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, options.oracle.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  auto table = json::array();
  for (const auto& row : rows) table.push_back(row.entry);
  report.result = {{"n", options.n},
                   {"excess", options.excess},
                   {"count", sequences.size()},
                   {"sequences", std::move(table)}};

  if (options.verify_monotone) {
    std::size_t comparable = 0;
    auto violations = json::array();
    for (std::size_t i = 0; i < sequences.size(); ++i) {
      for (std::size_t j = 0; j < sequences.size(); ++j) {
        if (majorization_compare(sequences[i], sequences[j]) !=
            MajorizationOrder::ALessB) {
          continue;
        }
        ++comparable;
        if (rows[i].m2 >= rows[j].m2) {
          violations.push_back({{"lower", sequences[i].to_string()},
                                {"upper", sequences[j].to_string()},
                                {"lower_m2", rows[i].m2},
                                {"upper_m2", rows[j].m2}});
        }
      }
    }
    report.result["comparable_pairs"] = comparable;
    report.result["monotone"] = violations.empty();
    report.result["violations"] = std::move(violations);
  }
  if (options.with_timing) {
    report.result["elapsed_ms"] = std::chrono::duration<double, std::milli>(
                                      std::chrono::steady_clock::now() - started)
                                      .count();
  }
  return report;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal second Zagreb index toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  bool no_timing = false;
  app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");
  app.add_flag("--no-timing", no_timing, "Omit wall-clock fields from output");

  std::string seq_a;
  std::string seq_b;
  std::string graph_path;
  std::string format = "json";
  std::string trace_out;
  int cap = default_cap();
  unsigned workers = 1;
  int depth = 2;
  bool chain = false;
  SweepOptions sweep;

  auto* validate = app.add_subcommand("validate", "Check a degree sequence");
  validate->add_option("sequence", seq_a, "e.g. 4,4,3,3,2,1,1 or 4^5,1^8")->required();

  auto* construct = app.add_subcommand("construct", "Build the layered BFS graph");
  construct->add_option("sequence", seq_a)->required();
  construct->add_option("--format", format)
      ->check(CLI::IsMember({"json", "edges", "dot"}));
  construct->add_option("--trace-out", trace_out,
                        "Write {ordering, layers, triangles, m2} JSON here");

  auto* m2 = app.add_subcommand("m2", "Second Zagreb index of an edge-list file");
  m2->add_option("graph", graph_path)->required();

  auto* bicyclic = app.add_subcommand("bicyclic-max", "Closed-form bicyclic maximum");
  bicyclic->add_option("sequence", seq_a)->required();

  auto* oracle = app.add_subcommand("oracle", "Exhaustive maximum over realizations");
  oracle->add_option("sequence", seq_a)->required();
  oracle->add_option("--cap", cap, "Refuse orders above this")->check(CLI::Range(1, kMaxSearchOrder));
  oracle->add_option("--workers", workers)->check(CLI::Range(1u, 256u));

  auto* improve = app.add_subcommand("improve", "Hill-climb with edge swaps");
  improve->add_option("graph", graph_path)->required();
  improve->add_option("--depth", depth, "1: single swaps, 2: also swap pairs")
      ->check(CLI::Range(1, 2));

  auto* majorize = app.add_subcommand("majorize", "Compare two sequences");
  majorize->add_option("a", seq_a)->required();
  majorize->add_option("b", seq_b)->required();
  majorize->add_flag("--chain", chain, "List the unit-transfer chain");

  auto* sweep_cmd = app.add_subcommand("sweep", "Maxima of all sequences of an order");
  sweep_cmd->add_option("-n,--n", sweep.n)->required()->check(CLI::Range(2, kMaxSearchOrder));
  sweep_cmd->add_option("-c,--excess", sweep.excess)->required()->check(CLI::Range(-1, 1000));
  sweep_cmd->add_flag("--verify-monotone", sweep.verify_monotone);
  sweep_cmd->add_option("--cap", cap)->check(CLI::Range(1, kMaxSearchOrder));
  sweep_cmd->add_option("--workers", workers)->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kParseError;
  }

  try {
    Report report;
    if (*validate) {
      report = cmd_validate(seq_a);
    } else if (*construct) {
      report = cmd_construct(seq_a);
      if (!trace_out.empty()) {
        std::ofstream sidecar(trace_out);
        if (!sidecar) throw ParseError("cannot write '" + trace_out + "'");
        auto trace = report.result;
        for (const char* key : {"sequence", "edges", "bfs_ordering"}) trace.erase(key);
        sidecar << trace.dump(2) << '\n';
      }
      if (format != "json") {
        std::vector<Edge> edges;
        for (const auto& e : report.result["edges"]) {
          edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        const SimpleGraph g(DegreeSequence::parse(seq_a).size(), edges);
        out << (format == "dot" ? to_dot(g) : serialize_edge_list(g));
        for (const auto& w : report.warnings) err << "warning: " << w << '\n';
        return kSuccess;
      }
    } else if (*m2) {
      report = cmd_m2(read_graph_file(graph_path), graph_path);
    } else if (*bicyclic) {
      report = cmd_bicyclic_max(seq_a);
    } else if (*oracle) {
      report = cmd_oracle(seq_a, {cap, workers}, !no_timing);
    } else if (*improve) {
      report = cmd_improve(read_graph_file(graph_path), graph_path, depth);
    } else if (*majorize) {
      report = cmd_majorize(seq_a, seq_b, chain);
    } else if (*sweep_cmd) {
      sweep.oracle = {cap, workers};
      sweep.with_timing = !no_timing;
      report = cmd_sweep(sweep);
    }
    if (no_timing) strip_timing(report.result);
    if (pretty) {
      print_pretty(report, out);
    } else {
      out << report.to_json().dump(2) << '\n';
    }
    return kSuccess;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainRejection;
  }
}

}  // namespace zagreb::cli
