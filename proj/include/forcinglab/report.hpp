#pragma once

#include <json.hpp>

#include "forcinglab/classify.hpp"
#include "forcinglab/graph6.hpp"
#include "forcinglab/search.hpp"

namespace forcinglab {

struct ReportOptions {
  bool standard = true;
  bool psd = true;
  int cap = kDefaultExhaustiveCap;
};

// Report schema (v1). Field order is fixed; per-rule objects carry only the
// analyzed rules, z/z_upper appear only with the standard rule and zplus/
// zplus_upper only with psd. throttling is a standard-rule quantity and is
// null when standard was not analyzed. Serialization of a report is
// deterministic: same graph, same options, same bytes.
inline nlohmann::ordered_json analysis_report(const Graph& g, const ReportOptions& opt = {}) {
  nlohmann::ordered_json r;
  r["graph6"] = to_graph6(g);
  r["order"] = g.order();
  nlohmann::ordered_json rules = nlohmann::ordered_json::array();
  if (opt.standard) rules.push_back("standard");
  if (opt.psd) rules.push_back("psd");
  r["rules"] = std::move(rules);

  nlohmann::ordered_json pt_set(nlohmann::ordered_json::value_t::object),
      ept_set(nlohmann::ordered_json::value_t::object),
      gaps(nlohmann::ordered_json::value_t::object),
      fixed(nlohmann::ordered_json::value_t::object),
      full_only(nlohmann::ordered_json::value_t::object),
      witnesses(nlohmann::ordered_json::value_t::object);
  nlohmann::ordered_json throttle;  // null unless standard analyzed

  auto run_rule = [&](Rule rule) {
    const RuleAnalysis a = analyze_rule(g, rule, opt.cap);
    const char* name = rule_name(rule);
    if (rule == Rule::standard) {
      r["z"] = a.forcing_number;
      r["z_upper"] = a.upper_forcing_number;
      throttle = a.throttling;
    } else {
      r["zplus"] = a.forcing_number;
      r["zplus_upper"] = a.upper_forcing_number;
    }
    pt_set[name] = a.plain.times;
    ept_set[name] = a.expanded.times;
    gaps[name] = a.expanded.gaps;
    if (a.fixed_pt)
      fixed[name] = *a.fixed_pt;
    else
      fixed[name] = nullptr;
    full_only[name] = a.expanded.full_set_only;
    nlohmann::ordered_json w(nlohmann::ordered_json::value_t::object);
    for (const auto& [time, set] : a.witnesses) w[std::to_string(time)] = set.members();
    witnesses[name] = std::move(w);
  };
  if (opt.standard) run_rule(Rule::standard);
  if (opt.psd) run_rule(Rule::psd);

  r["pt_set"] = std::move(pt_set);
  r["ept_set"] = std::move(ept_set);
  r["gaps"] = std::move(gaps);
  r["fixed_pt"] = std::move(fixed);
  r["full_set_only"] = std::move(full_only);
  r["throttling"] = std::move(throttle);
  r["witnesses"] = std::move(witnesses);

  nlohmann::ordered_json fast(nlohmann::ordered_json::value_t::object);
  if (g.order() >= 2) {
    const FastJoinVerdict v = fast_join_verdict(g);
    fast["psd"] = v.psd_fast;
    fast["standard"] = v.standard_fast;
  } else {
    fast["psd"] = false;
    fast["standard"] = false;
  }
  r["fast_join"] = std::move(fast);
  r["threshold"] = is_threshold(g).threshold;
  return r;
}

}  // namespace forcinglab
