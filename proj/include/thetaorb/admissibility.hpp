#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thetaorb/cover_spec.hpp"
#include "thetaorb/partition.hpp"

namespace thetaorb {

// (Q1, Q2): Inv_BD of the n-fold restriction to a simple factor of the
// stabilizer, and of the double cover pulled back through g[1].
struct BdPair {
  std::int64_t q1 = 0;
  std::int64_t q2 = 0;
  auto operator<=>(const BdPair&) const = default;
};

enum class Raisability { Raisable, NotRaisableByCriterion, NotApplicable };

std::string to_string(Raisability r);  // "yes" | "no_by_criterion" | "not_applicable"

struct Evidence {
  std::string factor;  // e.g. "q=3^4" or "SL2 (1,5)"
  std::string clause;  // what was checked
  bool holds = false;
};

struct Verdict {
  bool quasiAdmissible = true;
  Raisability raisable = Raisability::NotApplicable;
  std::vector<Evidence> quasiEvidence;
  std::vector<Evidence> raiseEvidence;

  // quasi-admissible and raisable at once: allowed in principle, but never
  // expected for theta orbits, so it is surfaced as a diagnostic
  bool contract_violation() const { return quasiAdmissible && raisable == Raisability::Raisable; }
};

// lcm(n,2) | (lcm/n) q1 + (lcm/2) q2
bool splits(const BdPair& pair, int n);
// the same criterion by cases: q2 even -> n | q1; q2 odd -> n / gcd(n, q1) = 2
bool splits_by_cases(const BdPair& pair, int n);

// GL_r / SL_r covers: parts with multiplicity >= 2 must be divisible by n_alpha.
Verdict classify_typeA(const Partition& p, const CoverSpec& spec);
// SO_{2r+1}, SO_{2r} covers restricted from SL (Inv_BD = 2).
Verdict classify_typeBD(const Partition& p, const CoverSpec& spec);
// Sp_{2r} covers with Inv_BD = Q(alpha_r^vee) = 1.
Verdict classify_typeC(const Partition& p, const CoverSpec& spec);
// dispatches on the group of the spec
Verdict classify_classical(const Partition& p, const CoverSpec& spec);

}  // namespace thetaorb
