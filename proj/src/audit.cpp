#include "twobridge/audit.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "twobridge/errors.hpp"
#include "twobridge/oracle.hpp"

namespace twobridge {
namespace {

CheckOutcome pass(const char* id, const AdmissiblePair& x) {
  return {id, x, true, Json::object()};
}

CheckOutcome fail(const char* id, const AdmissiblePair& x, Json details) {
  if (!details.is_object() || details.empty()) details = Json{{"reason", "unspecified"}};
  return {id, x, false, std::move(details)};
}

CheckOutcome verdict(const char* id, const AdmissiblePair& x, bool ok, Json details) {
  return ok ? pass(id, x) : fail(id, x, std::move(details));
}

Int entry(const std::vector<Int>& v, Int i) {
  return i >= 0 && i < static_cast<Int>(v.size()) ? v[static_cast<std::size_t>(i)] : 0;
}

Json pair_json(const AdmissiblePair& x) { return Json::array({x.p(), x.q()}); }

struct T2Flags {
  bool table;
  bool proof;
};

struct PairResult {
  std::optional<PairAnalysis> analysis;
  std::vector<CheckOutcome> outcomes;
  std::optional<T2Flags> t2;
};

void run_pair_checks(const PairAnalysis& a, std::vector<CheckOutcome>& out) {
  const auto& x = a.pair;

  const auto shape = shape_violation(a.delta);
  out.push_back(verdict(check_id::kAlexShape, x, !shape, Json{{"problem", shape.value_or("")}}));

  out.push_back(verdict(check_id::kFox, x, a.profile.is_trapezoidal, Json{{"alpha", a.alpha}}));

  if (a.profile.is_trapezoidal) {
    const auto hm = hm_check(a.profile, a.sigma);
    out.push_back(verdict(check_id::kHm, x, hm.holds,
                          Json{{"sigma", a.sigma},
                               {"radius_m", *a.profile.radius_m},
                               {"slack", hm.slack}}));
  } else {
    out.push_back(fail(check_id::kHm, x, Json{{"reason", "profile not trapezoidal"}}));
  }

  out.push_back(verdict(check_id::kRel, x, check_alpha_b_relation(a.alpha, a.b),
                        Json{{"alpha", a.alpha}, {"b", a.b}}));

  const auto ih = check_ih(a.b, a.l);
  out.push_back(verdict(check_id::kIh1, x, ih.ih1, Json{{"b", a.b}}));
  if (ih.ih1) {
    Json d{{"b", a.b}, {"h", ih.witness->h}};
    if (ih.ih2_violation) {
      d["h_star"] = ih.ih2_violation->first;
      d["j"] = ih.ih2_violation->second;
    }
    out.push_back(verdict(check_id::kIh2, x, ih.ih2, std::move(d)));
  } else {
    out.push_back(fail(check_id::kIh2, x, Json{{"reason", "no IH1 witness"}, {"b", a.b}}));
  }
  {
    Json d{{"b", a.b}};
    if (ih.ih3_violation) d["i_k_j"] = *ih.ih3_violation;
    out.push_back(verdict(check_id::kIh3, x, ih.ih3, std::move(d)));
  }

  out.push_back(verdict(check_id::kSigEq, x, a.sigma == a.sigma_closed,
                        Json{{"diagram", a.sigma}, {"closed_form", a.sigma_closed}}));

  try {
    const auto oracle = alexander_oracle(x);
    out.push_back(verdict(check_id::kDeltaEq, x, oracle == a.delta,
                          Json{{"diagram", a.delta.coeffs}, {"oracle", oracle.coeffs}}));
  } catch (const OracleShapeError& e) {
    out.push_back(fail(check_id::kDeltaEq, x, Json{{"oracle_error", e.what()}}));
  }

  out.push_back(verdict(check_id::kDet, x, a.delta.determinant() == x.p(),
                        Json{{"sum", a.delta.determinant()}, {"p", x.p()}}));

  const bool parity = (a.sigma - (a.l - 1)) % 2 == 0 && (a.l - x.p()) % 2 == 0;
  out.push_back(verdict(check_id::kParity, x, parity, Json{{"sigma", a.sigma}, {"l", a.l}}));

  out.push_back(verdict(check_id::kSigBound, x, std::abs(a.sigma) <= a.l - 1,
                        Json{{"sigma", a.sigma}, {"l", a.l}}));
}

void run_t1_checks(const PairAnalysis& a, std::vector<CheckOutcome>& out) {
  const auto& x = a.pair;
  const auto y = analyze(apply_move(Move::T1, x));

  out.push_back(verdict(check_id::kT1Sig, x, y.sigma == a.sigma + 1,
                        Json{{"image", pair_json(y.pair)}, {"before", a.sigma}, {"after", y.sigma}}));

  auto extended = a.b;
  extended.push_back(0);
  out.push_back(verdict(check_id::kT1Bottom, x, y.l == a.l + 1 && y.b == extended,
                        Json{{"image", pair_json(y.pair)}, {"b", a.b}, {"b_image", y.b}}));

  if (!a.profile.is_trapezoidal) return;
  const Int i0 = *a.profile.i0;
  const Int plateau = *a.profile.plateau_length();
  const Json image_profile{{"image", pair_json(y.pair)},
                           {"alpha_image", y.alpha},
                           {"i0", i0},
                           {"i0_image", y.profile.i0 ? Json(*y.profile.i0) : Json()}};

  if (plateau == 1 && a.l % 2 == 1) {
    const bool ok = y.profile.is_trapezoidal && *y.profile.plateau_length() == 2;
    out.push_back(verdict(check_id::kT1NoStable, x, ok, image_profile));
  }

  if (i0 - 1 < a.l - i0) {
    bool ok = false;
    if (y.profile.is_trapezoidal) {
      const Int i0y = *y.profile.i0;
      bool tail_zero = true;
      for (Int i = i0; i <= a.l; ++i) tail_zero = tail_zero && entry(a.b, i) == 0;
      ok = i0y == i0 + 1 || (i0y == i0 && tail_zero);
    }
    out.push_back(verdict(check_id::kT1Stable, x, ok, image_profile));
  }
}

bool same_differences(const PairAnalysis& a, const PairAnalysis& y) {
  if (y.l != a.l) return false;
  for (Int i = 1; i < a.l; ++i) {
    if (entry(y.alpha, i) - entry(y.alpha, i - 1) != entry(a.alpha, i) - entry(a.alpha, i - 1)) {
      return false;
    }
  }
  return true;
}

T2Flags run_t2_t3_checks(const PairAnalysis& a, std::vector<CheckOutcome>& out) {
  const auto& x = a.pair;
  const Int l = a.l;

  const auto y2 = analyze(apply_move(Move::T2, x));
  out.push_back(verdict(check_id::kT2Sig, x, y2.sigma == a.sigma,
                        Json{{"image", pair_json(y2.pair)}, {"before", a.sigma}, {"after", y2.sigma}}));
  out.push_back(verdict(check_id::kT2Diff, x, same_differences(a, y2),
                        Json{{"image", pair_json(y2.pair)}, {"alpha", a.alpha}, {"alpha_image", y2.alpha}}));

  bool no_zero = y2.l == l;
  for (Int i = 0; i <= l && no_zero; ++i) no_zero = entry(y2.b, i) != 0;
  out.push_back(verdict(check_id::kT2NoZero, x, no_zero,
                        Json{{"image", pair_json(y2.pair)}, {"b_image", y2.b}}));

  T2Flags flags{y2.l == l, y2.l == l};
  for (Int i = 0; i <= l; ++i) {
    const Int bi = entry(y2.b, i);
    flags.table = flags.table && bi == 2 * entry(a.alpha, i) + entry(a.b, i);
    flags.proof = flags.proof && bi == 2 * entry(a.alpha, i) + entry(a.b, l - i);
  }
  out.push_back(verdict(check_id::kT2Formula, x, flags.table || flags.proof,
                        Json{{"image", pair_json(y2.pair)},
                             {"alpha", a.alpha},
                             {"b", a.b},
                             {"b_image", y2.b}}));

  if (x.p() > x.q()) {
    const auto y3 = analyze(apply_move(Move::T3, x));
    out.push_back(verdict(check_id::kT3Sig, x, y3.sigma == -a.sigma,
                          Json{{"image", pair_json(y3.pair)}, {"before", a.sigma}, {"after", y3.sigma}}));
    out.push_back(verdict(check_id::kT3Diff, x, same_differences(a, y3),
                          Json{{"image", pair_json(y3.pair)}, {"alpha", a.alpha}, {"alpha_image", y3.alpha}}));
    bool formula = y3.l == l;
    for (Int i = 0; i <= l && formula; ++i) {
      formula = entry(y3.b, i) == 2 * entry(a.alpha, i) - entry(a.b, i);
    }
    out.push_back(verdict(check_id::kT3Formula, x, formula,
                          Json{{"image", pair_json(y3.pair)},
                               {"alpha", a.alpha},
                               {"b", a.b},
                               {"b_image", y3.b}}));
  }

  const auto z = analyze(apply_move(Move::T3, apply_move(Move::T1, x)));
  bool single_zero = z.l == l + 1;
  for (Int i = 0; i <= l + 1 && single_zero; ++i) {
    single_zero = (entry(z.b, i) == 0) == (i == l + 1);
  }
  out.push_back(verdict(check_id::kT3T1Zero, x, single_zero,
                        Json{{"image", pair_json(z.pair)}, {"b_image", z.b}}));
  return flags;
}

void run_structural_checks(const PairAnalysis& a, std::vector<CheckOutcome>& out) {
  const auto& x = a.pair;
  Int positives = 0;
  while (positives <= a.l && entry(a.b, positives) > 0) ++positives;
  for (Int i = positives; i <= a.l; ++i) {
    if (entry(a.b, i) != 0) return;
  }
  if (positives > a.l / 2) return;

  const Json context{{"b", a.b}, {"i0", positives}, {"l", a.l}};
  Json sig = context;
  sig["sigma"] = a.sigma;
  out.push_back(verdict(check_id::kStructSig, x, a.sigma >= 0, std::move(sig)));

  const auto tail = static_cast<Int>(trailing_t1_count(a.decomposition));
  Json moves = context;
  moves["decomposition"] = format_moves(a.decomposition);
  out.push_back(verdict(check_id::kStructT1Tail, x, tail >= a.l - positives, std::move(moves)));
}

PairResult audit_one(const AdmissiblePair& x, unsigned families) {
  PairResult r;
  try {
    r.analysis = analyze(x);
    const auto& a = *r.analysis;
    if (families & kPairChecks) run_pair_checks(a, r.outcomes);
    if (families & kT1Checks) run_t1_checks(a, r.outcomes);
    if (families & kT2T3Checks) r.t2 = run_t2_t3_checks(a, r.outcomes);
    if (families & kStructuralChecks) run_structural_checks(a, r.outcomes);
  } catch (const std::exception& e) {
    r.outcomes.push_back(fail(check_id::kModel, x, Json{{"error", e.what()}}));
  }
  return r;
}

}  // namespace

PairAnalysis analyze(const AdmissiblePair& x) {
  const auto trace = trace_principal_underarc(x);
  PairAnalysis a{x,
                 trace.length(),
                 arc_sequence(trace),
                 bottom_sequence(trace),
                 diagram_signature(trace),
                 signature_closed_form(x),
                 {},
                 {},
                 decompose(x)};
  a.delta = AlexanderPolynomial{a.alpha};
  a.profile = trapezoid_profile(a.delta);
  return a;
}

std::vector<CheckOutcome> audit_pair(const AdmissiblePair& x) {
  return audit_one(x, kPairChecks).outcomes;
}

std::vector<CheckOutcome> audit_t1(const AdmissiblePair& x) {
  return audit_one(x, kT1Checks).outcomes;
}

std::vector<CheckOutcome> audit_t2_t3(const AdmissiblePair& x) {
  return audit_one(x, kT2T3Checks).outcomes;
}

std::vector<CheckOutcome> audit_structural(const AdmissiblePair& x) {
  return audit_one(x, kStructuralChecks).outcomes;
}

std::vector<CheckOutcome> audit_selected(const AdmissiblePair& x, unsigned families) {
  return audit_one(x, families).outcomes;
}

std::string_view to_string(T2Formula f) noexcept {
  switch (f) {
    case T2Formula::table:
      return "table";
    case T2Formula::proof:
      return "proof";
    case T2Formula::both:
      return "both";
    case T2Formula::neither:
      return "neither";
  }
  return "?";
}

std::vector<AdmissiblePair> enumerate_pairs(Int max_p, const QRange& range) {
  if (max_p < 1) throw DomainError("max_p must be at least 1");
  std::vector<AdmissiblePair> pairs;
  for (Int p = 1; p <= max_p; ++p) {
    const Int max_q = std::visit(
        [p](const auto& r) -> Int {
          using R = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<R, CanonicalQ>) {
            return 2 * p - 1;
          } else if constexpr (std::is_same_v<R, FullQ>) {
            return r.max_q;
          } else {
            return r.factor * p;
          }
        },
        range);
    for (Int q = 1; q <= max_q; q += 2) {
      if (std::gcd(p, q) == 1) pairs.push_back(AdmissiblePair::make(p, q));
    }
  }
  return pairs;
}

bool PairAudit::all_passed() const noexcept {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.passed; });
}

std::optional<T2Formula> RangeAuditReport::resolved_t2_formula() const {
  if (t2_samples == 0) return std::nullopt;
  if (t2_table_universal && t2_proof_universal) return T2Formula::both;
  if (t2_table_universal) return T2Formula::table;
  if (t2_proof_universal) return T2Formula::proof;
  return T2Formula::neither;
}

std::int64_t RangeAuditReport::skipped(const std::string& id) const {
  const auto it = tallies.find(id);
  if (it == tallies.end()) return total_pairs;
  return total_pairs - it->second.passed - it->second.failed;
}

void merge(RangeAuditReport& into, RangeAuditReport&& part) {
  into.total_pairs += part.total_pairs;
  for (const auto& [id, t] : part.tallies) {
    auto& dst = into.tallies[id];
    dst.passed += t.passed;
    dst.failed += t.failed;
  }
  std::move(part.failures.begin(), part.failures.end(), std::back_inserter(into.failures));
  std::move(part.unanalyzable.begin(), part.unanalyzable.end(),
            std::back_inserter(into.unanalyzable));
  into.t2_table_universal = into.t2_table_universal && part.t2_table_universal;
  into.t2_proof_universal = into.t2_proof_universal && part.t2_proof_universal;
  into.t2_samples += part.t2_samples;
  into.complete = into.complete && part.complete;
  std::move(part.pairs.begin(), part.pairs.end(), std::back_inserter(into.pairs));
}

void finalize(RangeAuditReport& report) {
  std::sort(report.failures.begin(), report.failures.end(), [](const auto& a, const auto& b) {
    if (a.pair != b.pair) return a.pair < b.pair;
    return a.check_id < b.check_id;
  });
  std::sort(report.unanalyzable.begin(), report.unanalyzable.end());
  std::sort(report.pairs.begin(), report.pairs.end(),
            [](const auto& a, const auto& b) { return a.analysis.pair < b.analysis.pair; });
}

namespace {

std::string describe(const QRange& range) {
  return std::visit(
      [](const auto& r) -> std::string {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, CanonicalQ>) {
          return "canonical";
        } else if constexpr (std::is_same_v<R, FullQ>) {
          return "full:" + std::to_string(r.max_q);
        } else {
          return "proportional:" + std::to_string(r.factor);
        }
      },
      range);
}

void fold_pair(RangeAuditReport& rep, PairResult&& r, const AdmissiblePair& x, bool keep) {
  ++rep.total_pairs;
  for (auto& o : r.outcomes) {
    auto& t = rep.tallies[o.check_id];
    (o.passed ? t.passed : t.failed) += 1;
    if (!o.passed) rep.failures.push_back(o);
  }
  if (r.t2) {
    ++rep.t2_samples;
    rep.t2_table_universal = rep.t2_table_universal && r.t2->table;
    rep.t2_proof_universal = rep.t2_proof_universal && r.t2->proof;
  }
  if (!r.analysis) {
    rep.unanalyzable.push_back(x);
  } else if (keep) {
    rep.pairs.push_back(PairAudit{std::move(*r.analysis), std::move(r.outcomes)});
  }
}

}  // namespace

RangeAuditReport audit_range(const RangeOptions& options) {
  const auto pairs = enumerate_pairs(options.max_p, options.q_range);
  unsigned jobs = options.jobs != 0 ? options.jobs : std::thread::hardware_concurrency();
  jobs = std::max(1u, jobs);

  const auto start = std::chrono::steady_clock::now();
  constexpr std::size_t kChunk = 64;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> out_of_time{false};
  std::vector<RangeAuditReport> partials(jobs);

  auto worker = [&](RangeAuditReport& local) {
    for (;;) {
      if (options.time_budget &&
          std::chrono::steady_clock::now() - start > *options.time_budget) {
        out_of_time = true;
        return;
      }
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= pairs.size()) return;
      const std::size_t end = std::min(pairs.size(), begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) {
        fold_pair(local, audit_one(pairs[i], options.families), pairs[i], options.keep_pairs);
      }
    }
  };

  if (jobs == 1) {
    worker(partials[0]);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(jobs);
    for (unsigned k = 0; k < jobs; ++k) threads.emplace_back(worker, std::ref(partials[k]));
  }

  RangeAuditReport report;
  report.max_p = options.max_p;
  report.q_range = describe(options.q_range);
  report.families = options.families;
  for (auto& part : partials) merge(report, std::move(part));
  report.complete = !out_of_time && report.total_pairs == static_cast<std::int64_t>(pairs.size());
  finalize(report);
  return report;
}

}  // namespace twobridge
