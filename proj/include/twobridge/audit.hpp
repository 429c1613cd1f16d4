#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "twobridge/extended_diagram.hpp"
#include "twobridge/invariants.hpp"
#include "twobridge/pair.hpp"

namespace twobridge {

/// Check identifiers. Per-pair checks first, then the T-move and structural
/// families.
namespace check_id {
inline constexpr const char* kModel = "MODEL";
inline constexpr const char* kAlexShape = "ALEX-SHAPE";
inline constexpr const char* kFox = "FOX";
inline constexpr const char* kHm = "HM";
inline constexpr const char* kRel = "REL";
inline constexpr const char* kIh1 = "IH1";
inline constexpr const char* kIh2 = "IH2";
inline constexpr const char* kIh3 = "IH3";
inline constexpr const char* kSigEq = "SIG-EQ";
inline constexpr const char* kDeltaEq = "DELTA-EQ";
inline constexpr const char* kDet = "DET";
inline constexpr const char* kParity = "PARITY";
inline constexpr const char* kSigBound = "SIGBOUND";

inline constexpr const char* kT1Sig = "T1-SIG";
inline constexpr const char* kT1Bottom = "T1-BOTTOM";
inline constexpr const char* kT1NoStable = "T1-NO-STABLE";
inline constexpr const char* kT1Stable = "T1-STABLE";

inline constexpr const char* kT2Sig = "T2-SIG";
inline constexpr const char* kT2Diff = "T2-DIFF";
inline constexpr const char* kT2NoZero = "T2-NO-ZERO";
inline constexpr const char* kT2Formula = "T2-FORMULA";
inline constexpr const char* kT3Sig = "T3-SIG";
inline constexpr const char* kT3Diff = "T3-DIFF";
inline constexpr const char* kT3Formula = "T3-FORMULA";
inline constexpr const char* kT3T1Zero = "T3T1-ZERO";

inline constexpr const char* kStructSig = "STRUCT-SIG";
inline constexpr const char* kStructT1Tail = "STRUCT-T1-TAIL";
}  // namespace check_id

using Json = nlohmann::ordered_json;

struct CheckOutcome {
  std::string check_id;
  AdmissiblePair pair;
  bool passed;
  /// Witness data; empty object iff passed.
  Json details;
};

/// Everything read off one pair's diagram, computed once and shared by the
/// checks.
struct PairAnalysis {
  AdmissiblePair pair;
  Int l;
  std::vector<Int> alpha;
  std::vector<Int> b;
  Int sigma;
  Int sigma_closed;
  AlexanderPolynomial delta;
  TrapezoidProfile profile;
  MoveSequence decomposition;
};

/// Throws ModelViolation if the trace cannot be built.
PairAnalysis analyze(const AdmissiblePair& x);

/// FOX, HM, REL, IH1-3, SIG-EQ, DELTA-EQ, DET, PARITY, SIGBOUND, ALEX-SHAPE.
std::vector<CheckOutcome> audit_pair(const AdmissiblePair& x);
/// Signature step and bottom-sequence extension under T1, plus the
/// stable-term index propositions when their hypotheses hold.
std::vector<CheckOutcome> audit_t1(const AdmissiblePair& x);
/// Signature, coefficient-difference and bottom-sequence behaviour under T2,
/// T3 (when p > q) and T3 after T1.
std::vector<CheckOutcome> audit_t2_t3(const AdmissiblePair& x);
/// Non-negative signature and trailing T1 run when more than half of the
/// bottom sequence vanishes. Empty when the hypothesis does not hold.
std::vector<CheckOutcome> audit_structural(const AdmissiblePair& x);

enum CheckFamily : unsigned {
  kPairChecks = 1u << 0,
  kT1Checks = 1u << 1,
  kT2T3Checks = 1u << 2,
  kStructuralChecks = 1u << 3,
  kAllChecks = kPairChecks | kT1Checks | kT2T3Checks | kStructuralChecks,
};

/// Runs the selected families on one pair. A ModelViolation surfaces as a
/// failed MODEL outcome instead of propagating.
std::vector<CheckOutcome> audit_selected(const AdmissiblePair& x, unsigned families);

/// Which bottom-sequence transform held for every audited T2 move:
/// the table form b'_i = 2 alpha_i + b_i or the proof form
/// b'_i = 2 alpha_i + b_{l-i}.
enum class T2Formula { table, proof, both, neither };

std::string_view to_string(T2Formula f) noexcept;

struct CanonicalQ {};
struct FullQ {
  Int max_q;
};
/// q <= factor * p for each p.
struct ProportionalQ {
  Int factor;
};
using QRange = std::variant<CanonicalQ, FullQ, ProportionalQ>;

/// Admissible pairs with p <= max_p and q in the given range, ordered by
/// (p, q).
std::vector<AdmissiblePair> enumerate_pairs(Int max_p, const QRange& range);

struct RangeOptions {
  Int max_p = 1;
  QRange q_range = CanonicalQ{};
  unsigned families = kAllChecks;
  /// 0 means std::thread::hardware_concurrency().
  unsigned jobs = 0;
  /// Keep per-pair analyses and outcomes in the report.
  bool keep_pairs = false;
  /// Stop handing out work after this long; the report is flagged
  /// incomplete.
  std::optional<std::chrono::milliseconds> time_budget;
};

struct CheckTally {
  std::int64_t passed = 0;
  std::int64_t failed = 0;
};

struct PairAudit {
  PairAnalysis analysis;
  std::vector<CheckOutcome> outcomes;

  bool all_passed() const noexcept;
};

struct RangeAuditReport {
  Int max_p = 0;
  std::string q_range;
  unsigned families = 0;
  std::int64_t total_pairs = 0;
  std::map<std::string, CheckTally> tallies;
  std::vector<CheckOutcome> failures;
  /// Pairs whose analysis could not be produced (trace failure).
  std::vector<AdmissiblePair> unanalyzable;
  /// Running conjunctions behind resolved_t2_formula.
  bool t2_table_universal = true;
  bool t2_proof_universal = true;
  std::int64_t t2_samples = 0;
  bool complete = true;
  std::vector<PairAudit> pairs;

  /// nullopt when no T2 move was audited.
  std::optional<T2Formula> resolved_t2_formula() const;
  /// Pairs for which a check did not apply.
  std::int64_t skipped(const std::string& id) const;
  bool clean() const noexcept { return failures.empty() && complete; }
};

/// Folds `part` into `into`. Associative and commutative up to the final
/// ordering, which finalize() fixes.
void merge(RangeAuditReport& into, RangeAuditReport&& part);

/// Sorts pairs and failures by (p, q, check id).
void finalize(RangeAuditReport& report);

/// Audits every pair of the range across worker threads. The finalized
/// report does not depend on the number of workers.
RangeAuditReport audit_range(const RangeOptions& options);

}  // namespace twobridge
