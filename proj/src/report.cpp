#include "twobridge/report.hpp"

#include <algorithm>

#include "twobridge/errors.hpp"

namespace twobridge {

bool PairReport::all_checks_pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
}

PairReport make_pair_report(const PairAudit& audit) {
  const auto& a = audit.analysis;
  PairReport r;
  r.p = a.pair.p();
  r.q = a.pair.q();
  r.l = a.l;
  r.alpha = a.alpha;
  r.b = a.b;
  r.sigma = a.sigma;
  r.delta_coeffs = a.delta.coeffs;
  r.i0 = a.profile.i0;
  r.radius_m = a.profile.radius_m;
  r.components = a.pair.components();
  for (const auto& o : audit.outcomes) {
    auto [it, inserted] = r.checks.emplace(o.check_id, o.passed);
    if (!inserted) it->second = it->second && o.passed;
  }
  r.decomposition = format_moves(a.decomposition);
  return r;
}

PairReport report_for(const AdmissiblePair& x) {
  return make_pair_report(PairAudit{analyze(x), audit_selected(x, kAllChecks)});
}

namespace {

Json optional_int(const std::optional<Int>& v) { return v ? Json(*v) : Json(nullptr); }

std::string join(const std::vector<Int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(v[i]);
  }
  return out;
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw DomainError(std::string("pair report missing '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw DomainError(std::string("pair report field '") + key + "' has the wrong type");
  }
}

std::optional<Int> optional_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw DomainError(std::string("pair report missing '") + key + "'");
  if (j.at(key).is_null()) return std::nullopt;
  return field<Int>(j, key);
}

}  // namespace

Json to_json(const PairReport& r) {
  Json checks = Json::object();
  for (const auto& [id, ok] : r.checks) checks[id] = ok;
  return Json{{"p", r.p},
              {"q", r.q},
              {"l", r.l},
              {"alpha", r.alpha},
              {"b", r.b},
              {"sigma", r.sigma},
              {"delta", r.delta_coeffs},
              {"i0", optional_int(r.i0)},
              {"radius_m", optional_int(r.radius_m)},
              {"components", r.components},
              {"decomposition", r.decomposition},
              {"checks", std::move(checks)}};
}

PairReport pair_report_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("pair report must be a JSON object");
  PairReport r;
  r.p = field<Int>(j, "p");
  r.q = field<Int>(j, "q");
  r.l = field<Int>(j, "l");
  r.alpha = field<std::vector<Int>>(j, "alpha");
  r.b = field<std::vector<Int>>(j, "b");
  r.sigma = field<Int>(j, "sigma");
  r.delta_coeffs = field<std::vector<Int>>(j, "delta");
  r.i0 = optional_field(j, "i0");
  r.radius_m = optional_field(j, "radius_m");
  r.components = field<int>(j, "components");
  r.decomposition = field<std::string>(j, "decomposition");
  r.checks = field<std::map<std::string, bool>>(j, "checks");
  return r;
}

std::string to_json_line(const PairReport& r) { return to_json(r).dump(); }

std::string csv_header() {
  return "p,q,l,alpha,b,sigma,delta,i0,radius,components,all_checks_pass,decomposition";
}

std::string to_csv_row(const PairReport& r) {
  std::string row;
  row += std::to_string(r.p) + ',' + std::to_string(r.q) + ',' + std::to_string(r.l) + ',';
  row += join(r.alpha) + ',' + join(r.b) + ',' + std::to_string(r.sigma) + ',';
  row += join(r.delta_coeffs) + ',';
  row += (r.i0 ? std::to_string(*r.i0) : std::string()) + ',';
  row += (r.radius_m ? std::to_string(*r.radius_m) : std::string()) + ',';
  row += std::to_string(r.components) + ',';
  row += r.all_checks_pass() ? "true" : "false";
  row += ',' + r.decomposition;
  return row;
}

Json aggregate_json(const RangeAuditReport& rep) {
  Json tallies = Json::object();
  for (const auto& [id, t] : rep.tallies) {
    tallies[id] = Json{{"passed", t.passed}, {"failed", t.failed}, {"skipped", rep.skipped(id)}};
  }
  Json failures = Json::array();
  for (const auto& f : rep.failures) {
    failures.push_back(Json{{"check", f.check_id},
                            {"p", f.pair.p()},
                            {"q", f.pair.q()},
                            {"details", f.details}});
  }
  const auto t2 = rep.resolved_t2_formula();
  return Json{{"aggregate",
               Json{{"max_p", rep.max_p},
                    {"q_range", rep.q_range},
                    {"total_pairs", rep.total_pairs},
                    {"complete", rep.complete},
                    {"failure_count", static_cast<std::int64_t>(rep.failures.size())},
                    {"resolved_t2_formula", t2 ? Json(std::string(to_string(*t2))) : Json()},
                    {"checks", std::move(tallies)},
                    {"failures", std::move(failures)}}}};
}

std::string summary_line(const RangeAuditReport& rep, std::chrono::milliseconds elapsed) {
  const auto t2 = rep.resolved_t2_formula();
  return "pairs=" + std::to_string(rep.total_pairs) +
         " failures=" + std::to_string(rep.failures.size()) +
         " time_ms=" + std::to_string(elapsed.count()) +
         " t2=" + (t2 ? std::string(to_string(*t2)) : std::string("n/a")) +
         " complete=" + (rep.complete ? "yes" : "no");
}

}  // namespace twobridge
