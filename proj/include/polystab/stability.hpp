#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polystab/decompose.hpp"
#include "polystab/ideal.hpp"
#include "polystab/prime.hpp"

namespace polystab {

/// How Ass(I^k) is computed.
///
///  - localized: per variable subset S, saturate the other variables and
///    test whether the subset's maximal ideal is associated via a socle
///    witness scan.  Scales to large powers but is only valid for
///    polymatroidal input (their powers and saturations are again
///    polymatroidal, equigenerated with linear resolutions).
///  - decomposition: radicals of the irreducible decomposition of I^k.
///  - box_oracle: brute-force colon scan over the exponent box of I^k.
enum class AssEngine { localized, decomposition, box_oracle };

/// Ass(I^k) with the chosen engine.  The localized engine rejects
/// non-polymatroidal input.
AssSet ass_of_power(const MonomialIdeal& I, int k,
                    AssEngine engine = AssEngine::decomposition);

struct PowerProfiles {
  std::vector<AssSet> ass;                  // index k-1
  std::vector<std::optional<int>> depth;    // nullopt: colon not linear there
  std::vector<std::size_t> generator_counts;
};

/// Raw per-power data for any monomial ideal; makes no stabilization claim.
PowerProfiles profiles(const MonomialIdeal& I, int k_max,
                       AssEngine engine = AssEngine::decomposition);

/// Least k with Ass(I^k) equal to the stable set, detected against
/// k_max = max(l(I) - 1, 1).  Requires polymatroidal input.
int astab(const MonomialIdeal& I, AssEngine engine = AssEngine::localized);

/// Least k with depth R/I^k = n - l(I).  Requires polymatroidal input.
int dstab(const MonomialIdeal& I);

struct StabilityFlags {
  bool polymatroidal = false;
  bool matroidal = false;
  bool strong_exchange = false;
  bool max_in_stable_ass = false;
  bool herzog_qureshi_equality = true;  // astab == dstab
};

struct StabilityReport {
  MonomialIdeal ideal;
  MonomialIdeal core;  // ideal / gcd(ideal)
  Monomial cofactor;   // gcd(ideal)
  int spread = 1;
  int k_max = 1;
  std::vector<AssSet> ass_profile;
  std::vector<int> depth_profile;
  std::vector<std::size_t> generator_counts;
  int astab = 1;
  int dstab = 1;
  AssSet stable_ass;
  int limit_depth = 0;
  int height = 1;
  StabilityFlags flags;
};

/// Aggregated per-power study of a polymatroidal ideal, with the internal
/// cross-checks (profile monotonicity, limit depth = n - l, maximal ideal
/// associated iff l = n) enforced via CrossCheckError.
StabilityReport full_report(const MonomialIdeal& I,
                            AssEngine engine = AssEngine::localized);

enum class OracleStatus { pass, fail, not_applicable, finding };

struct OracleCheck {
  std::string name;
  OracleStatus status = OracleStatus::not_applicable;
  std::string detail;
};

/// Evaluates every theorem-level claim whose hypotheses the ideal satisfies.
/// A fail on a proved statement is a bug or a new counterexample; the
/// conjectured equality astab = dstab is reported as a finding, never a fail.
std::vector<OracleCheck> theorem_oracles(const MonomialIdeal& I);

/// True when no proved statement failed (findings do not count).
bool oracles_ok(const std::vector<OracleCheck>& checks);

}  // namespace polystab
