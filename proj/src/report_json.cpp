#include "spectough/report_json.hpp"

#include <json.hpp>

namespace spectough {

namespace {

using nlohmann::ordered_json;

ordered_json vertices(const std::optional<VertexSet>& s) {
  if (!s) return nullptr;
  return s->members();
}

template <class T, class F>
ordered_json or_null(const std::optional<T>& v, F&& f) {
  if (!v) return nullptr;
  return f(*v);
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json j;
  j["theorem"] = v.theorem;
  j["n"] = v.n;
  j["alpha"] = v.alpha.str();
  j["parameter"] = v.parameter.str();
  j["preconditions_met"] = v.preconditions_met;
  j["notes"] = v.notes;
  j["rho"] = v.rho;
  j["threshold"] = or_null(v.threshold, [](double x) { return ordered_json(x); });
  j["radius_condition"] = v.radius_condition;
  j["hypothesis_holds"] = v.hypothesis_holds;
  j["conclusion_holds"] = v.conclusion_holds;
  j["is_extremal"] = v.is_extremal;
  j["respected"] = v.respected();
  if (v.theorem == "t11") {
    j["scattering"] = or_null(v.scattering, [](int x) { return ordered_json(x); });
  } else {
    j["tau"] = or_null(v.tau, [](const Rational& r) { return ordered_json(r.str()); });
  }
  j["witness"] = vertices(v.witness);
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(const InvariantReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["scattering"] = or_null(r.scattering, [](int x) { return ordered_json(x); });
  j["toughness"] = r.toughness.str();
  j["tau"] = or_null(r.tau, [](const Rational& x) { return ordered_json(x.str()); });
  j["witnesses"] = {
      {"scattering", vertices(r.scattering_witness)},
      {"toughness", vertices(r.toughness_witness)},
      {"tau", vertices(r.tau_witness)},
  };
  return dump(j);
}

std::string to_json(const Verdict& v) { return dump(verdict_json(v)); }

std::string to_json(std::span<const Verdict> verdicts) {
  ordered_json list = ordered_json::array();
  bool all = true;
  for (const Verdict& v : verdicts) {
    list.push_back(verdict_json(v));
    all = all && v.respected();
  }
  ordered_json j;
  j["verdicts"] = list;
  j["respected"] = all;
  return dump(j);
}

std::string to_json(const SearchReport& r, bool include_runtime) {
  ordered_json j;
  j["space"] = r.space;
  j["mode"] = r.mode;
  j["seed"] = or_null(r.seed, [](std::uint64_t s) { return ordered_json(s); });
  j["examined"] = r.examined;
  ordered_json by_n = ordered_json::object();
  for (auto [n, count] : r.examined_by_n) by_n[std::to_string(n)] = count;
  j["examined_by_n"] = by_n;
  j["hypothesis_hits"] = r.hypothesis_hits;
  ordered_json list = ordered_json::array();
  for (const Violation& v : r.violations) {
    list.push_back({
        {"graph6", v.graph6},
        {"alpha", or_null(v.alpha, [](const Rational& a) { return ordered_json(a.str()); })},
        {"reason", v.reason},
        {"verdict", or_null(v.verdict, verdict_json)},
    });
  }
  j["violation_count"] = r.violations.size();
  j["violations"] = list;
  if (include_runtime && r.runtime_seconds) j["runtime_seconds"] = *r.runtime_seconds;
  return dump(j);
}

}  // namespace spectough
