// forcinglab — zero forcing analysis for small graphs (n <= 64).
//
//   forcinglab analyze    one graph -> pretty JSON report
//   forcinglab batch      graph6 lines on stdin -> one JSON report per line
//   forcinglab conjecture scan a graph6 stream for slow-join counterexamples
//   forcinglab generate   emit graph6 for named or randomized families
//
// Exit codes: 0 ok, 1 partial failure (some input lines failed),
//             2 parse/usage error, 3 exhaustive cap exceeded.

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "forcinglab/forcinglab.hpp"

namespace {

using forcinglab::CapExceededError;
using forcinglab::Family;
using forcinglab::FamilySpec;
using forcinglab::Graph;
using forcinglab::Graph6Error;
using forcinglab::ReportOptions;
using forcinglab::Rule;
using json = nlohmann::ordered_json;

constexpr int kHardMaxOrder = 20;

int default_max_order() {
  if (const char* env = std::getenv("FORCING_LAB_MAX_ORDER")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= kHardMaxOrder) return static_cast<int>(v);
    std::cerr << "warning: ignoring FORCING_LAB_MAX_ORDER=" << env << " (want 1.."
              << kHardMaxOrder << ")\n";
  }
  return 16;
}

struct RuleChoice {
  bool standard = true;
  bool psd = true;
};

RuleChoice parse_rules(const std::string& s) {
  if (s == "standard") return {true, false};
  if (s == "psd") return {false, true};
  return {true, true};  // "both", validated by CLI11
}

const std::map<std::string, Family>& family_names() {
  static const std::map<std::string, Family> m = {
      {"path", Family::path},
      {"cycle", Family::cycle},
      {"complete", Family::complete},
      {"complete_bipartite", Family::complete_bipartite},
      {"star", Family::star},
      {"wheel", Family::wheel},
      {"empty", Family::empty},
      {"sgap", Family::sgap},
  };
  return m;
}

// Runs fn(i) for i in [0, count), fanning out to `jobs` workers. Results must
// be written to per-index slots; emission order is the caller's concern.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), count));
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  for (auto& t : pool) t.join();
}

struct InputLine {
  std::size_t number;  // 1-based over the raw stream
  std::string text;
};

// graph6 payload lines: blanks and ">>" headers are dropped entirely.
std::vector<InputLine> read_payload_lines(std::istream& in) {
  std::vector<InputLine> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.rfind(">>", 0) == 0) continue;
    out.push_back({number, line});
  }
  return out;
}

json error_record(const InputLine& line, const std::string& what) {
  json rec;
  rec["line"] = line.number;
  rec["input"] = line.text;
  rec["error"] = what;
  return rec;
}

// ---------------------------------------------------------------------------

int cmd_analyze(const std::string& graph6, const FamilySpec* family, RuleChoice rules,
                int max_order) {
  Graph g = family != nullptr ? forcinglab::generate(*family) : forcinglab::from_graph6(graph6);
  if (g.order() > max_order) throw CapExceededError("analyze", g.order(), max_order);
  ReportOptions opt{rules.standard, rules.psd, max_order};
  std::cout << forcinglab::analysis_report(g, opt).dump(2) << '\n';
  return 0;
}

int cmd_batch(RuleChoice rules, int jobs, int max_order) {
  const std::vector<InputLine> lines = read_payload_lines(std::cin);
  std::vector<std::string> out(lines.size());
  std::atomic<bool> any_failed{false};
  const ReportOptions opt{rules.standard, rules.psd, max_order};
  parallel_for(lines.size(), jobs, [&](std::size_t i) {
    try {
      const Graph g = forcinglab::from_graph6(lines[i].text);
      if (g.order() > max_order) throw CapExceededError("batch", g.order(), max_order);
      out[i] = forcinglab::analysis_report(g, opt).dump();
    } catch (const std::exception& e) {
      out[i] = error_record(lines[i], e.what()).dump();
      any_failed = true;
    }
  });
  for (const std::string& s : out) std::cout << s << '\n';
  return any_failed ? 1 : 0;
}

int cmd_conjecture(const std::string& which, int jobs, int max_order) {
  const std::vector<InputLine> lines = read_payload_lines(std::cin);
  const bool check_std = which != "psd";
  const bool check_psd = which != "standard";

  enum class Outcome { checked, counterexample, skipped, failed };
  std::vector<Outcome> outcome(lines.size());
  std::vector<std::string> note(lines.size());
  parallel_for(lines.size(), jobs, [&](std::size_t i) {
    try {
      const Graph g = forcinglab::from_graph6(lines[i].text);
      if (!forcinglab::is_connected(g)) {
        outcome[i] = Outcome::skipped;
        note[i] = "disconnected";
        return;
      }
      if (g.order() > max_order) throw CapExceededError("conjecture", g.order(), max_order);
      bool bad = false;
      std::string bad_rules;
      for (Rule rule : {Rule::standard, Rule::psd}) {
        if (rule == Rule::standard ? !check_std : !check_psd) continue;
        const auto check = forcinglab::conjecture_check(g, rule, max_order);
        if (check.counterexample) {
          bad = true;
          bad_rules += bad_rules.empty() ? forcinglab::rule_name(rule)
                                         : std::string(",") + forcinglab::rule_name(rule);
        }
        if (check.converse_violation)
          note[i] += std::string("converse violated under ") + forcinglab::rule_name(rule) + "; ";
      }
      outcome[i] = bad ? Outcome::counterexample : Outcome::checked;
      if (bad) note[i] = bad_rules;
    } catch (const std::exception& e) {
      outcome[i] = Outcome::failed;
      note[i] = e.what();
    }
  });

  std::size_t checked = 0, skipped = 0, counterexamples = 0, failed = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    switch (outcome[i]) {
      case Outcome::counterexample:
        ++checked;
        ++counterexamples;
        std::cout << lines[i].text << '\n';  // counterexamples go to stdout as graph6
        std::cerr << "counterexample (" << note[i] << "): " << lines[i].text << '\n';
        break;
      case Outcome::checked:
        ++checked;
        if (!note[i].empty()) std::cerr << "note line " << lines[i].number << ": " << note[i] << '\n';
        break;
      case Outcome::skipped:
        ++skipped;
        std::cerr << "skipped line " << lines[i].number << " (" << note[i]
                  << "): " << lines[i].text << '\n';
        break;
      case Outcome::failed:
        ++failed;
        std::cerr << "error line " << lines[i].number << ": " << note[i] << '\n';
        break;
    }
  }
  json summary;
  summary["checked"] = checked;
  summary["skipped"] = skipped;
  summary["counterexamples"] = counterexamples;
  std::cout << summary.dump() << '\n';
  return failed > 0 ? 1 : 0;
}

int cmd_generate(const std::string& family, int n, int m, int k, int order, int count,
                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int size = order > 0 ? order : n;
  for (int i = 0; i < count; ++i) {
    Graph g(0);
    if (family == "threshold") {
      g = forcinglab::random_threshold(size, rng);
    } else if (family == "cograph") {
      g = forcinglab::random_cograph(size, rng);
    } else if (family == "fastjoin-psd") {
      g = forcinglab::random_psd_fast_join(size, rng);
    } else if (family == "fastjoin-standard") {
      g = forcinglab::random_standard_fast_join(size, rng);
    } else {
      FamilySpec spec{family_names().at(family), n, m, k};
      g = forcinglab::generate(spec);
    }
    std::cout << forcinglab::to_graph6(g) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero forcing laboratory for small graphs"};
  app.require_subcommand(1);

  std::string graph6, family, rule = "both", which = "both";
  int n = 0, m = 0, k = 0, order = 0, count = 1, jobs = 1;
  int max_order = default_max_order();
  std::uint64_t seed = 0;

  const std::vector<std::string> rule_values = {"standard", "psd", "both"};

  CLI::App* analyze = app.add_subcommand("analyze", "analyze one graph");
  analyze->add_option("--graph6", graph6, "graph6 string");
  analyze->add_option("--family", family, "family name")
      ->check(CLI::IsMember({"path", "cycle", "complete", "complete_bipartite", "star", "wheel",
                             "empty", "sgap"}));
  analyze->add_option("--n", n, "order / first side");
  analyze->add_option("--m", m, "second side (complete_bipartite)");
  analyze->add_option("--k", k, "gap family parameter");
  analyze->add_option("--rule", rule)->check(CLI::IsMember(rule_values));
  analyze->add_option("--max-order", max_order)->check(CLI::Range(1, kHardMaxOrder));

  CLI::App* batch = app.add_subcommand("batch", "analyze a graph6 stream from stdin");
  batch->add_option("--rule", rule)->check(CLI::IsMember(rule_values));
  batch->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  batch->add_option("--max-order", max_order)->check(CLI::Range(1, kHardMaxOrder));

  CLI::App* conjecture =
      app.add_subcommand("conjecture", "scan stdin for slow-join counterexamples");
  conjecture->add_option("--which", which)->check(CLI::IsMember(rule_values));
  conjecture->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  conjecture->add_option("--max-order", max_order)->check(CLI::Range(1, kHardMaxOrder));

  CLI::App* generate = app.add_subcommand("generate", "emit graph6 lines for a family");
  generate->add_option("--family", family, "family name")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "complete", "complete_bipartite", "star", "wheel",
                             "empty", "sgap", "threshold", "cograph", "fastjoin-psd",
                             "fastjoin-standard"}));
  generate->add_option("--n", n, "order / first side");
  generate->add_option("--m", m, "second side (complete_bipartite)");
  generate->add_option("--k", k, "gap family parameter");
  generate->add_option("--order", order, "order for randomized families");
  generate->add_option("--count", count, "number of graphs")->check(CLI::Range(1, 1000000));
  generate->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
    if (analyze->parsed()) {
      const bool has_family = !family.empty();
      if (has_family == !graph6.empty()) {
        std::cerr << "analyze: give exactly one of --graph6 / --family\n";
        return 2;
      }
      FamilySpec spec{Family::path, n, m, k};
      if (has_family) spec.family = family_names().at(family);
      return cmd_analyze(graph6, has_family ? &spec : nullptr, parse_rules(rule), max_order);
    }
    if (batch->parsed()) return cmd_batch(parse_rules(rule), jobs, max_order);
    if (conjecture->parsed()) return cmd_conjecture(which, jobs, max_order);
    if (generate->parsed()) return cmd_generate(family, n, m, k, order, count, seed);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const Graph6Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
