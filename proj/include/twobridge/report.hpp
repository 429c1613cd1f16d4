#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twobridge/audit.hpp"

namespace twobridge {

/// Flat per-pair record used by the CLI encoders.
struct PairReport {
  Int p = 0;
  Int q = 0;
  Int l = 0;
  std::vector<Int> alpha;
  std::vector<Int> b;
  Int sigma = 0;
  std::vector<Int> delta_coeffs;
  std::optional<Int> i0;
  std::optional<Int> radius_m;
  int components = 1;
  std::map<std::string, bool> checks;
  std::string decomposition;

  bool all_checks_pass() const noexcept;

  friend bool operator==(const PairReport&, const PairReport&) = default;
};

PairReport make_pair_report(const PairAudit& audit);

/// Runs every check family on x and packages the result.
PairReport report_for(const AdmissiblePair& x);

/// Keys in fixed order: p, q, l, alpha, b, sigma, delta, i0, radius_m,
/// components, decomposition, checks (sorted by id). i0 and radius_m are
/// null for non-trapezoidal polynomials.
Json to_json(const PairReport& r);
/// Throws DomainError on missing or mistyped fields.
PairReport pair_report_from_json(const Json& j);

/// Compact single-line encoding of to_json().
std::string to_json_line(const PairReport& r);

/// p,q,l,alpha,b,sigma,delta,i0,radius,components,all_checks_pass,decomposition
std::string csv_header();
/// List fields are semicolon-joined; absent i0/radius are empty cells.
std::string to_csv_row(const PairReport& r);

/// Aggregate record: bounds, totals, per-check tallies, failures with
/// witnesses and the resolved T2 formula.
Json aggregate_json(const RangeAuditReport& rep);

/// "pairs=N failures=F time_ms=T t2=proof complete=yes"
std::string summary_line(const RangeAuditReport& rep, std::chrono::milliseconds elapsed);

}  // namespace twobridge
