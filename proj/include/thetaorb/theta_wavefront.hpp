#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetaorb/admissibility.hpp"
#include "thetaorb/cover_spec.hpp"
#include "thetaorb/partition.hpp"

namespace thetaorb {

// Family formulas.  Each returns nullopt where the formula is undefined
// (a negative exponent or a negative size).

// (n^a b), N = a n + b
Partition orbit_O(int N, int n);
// type B, N = 2r+1, r = a n + b
Partition orbit_OB(int N, int n);
// type D, N = 2r, r - 1 = a n + b; for n even and a = 0, b < n/2 there is no
// such orbit
std::optional<Partition> orbit_OD(int N, int n);
// type C, n odd, N = a n + b: (n^a b) for a even, (n^{a-1}, n-1, b+1) for a odd
Partition orbit_OC(int N, int n);
// the three Sp_{2r} rows: n odd, n = 2m with m even, n = 2k with k odd
std::optional<Partition> orbit_Sp(int r, int n);

struct LeviDescription {
  std::vector<std::string> factors;  // "GL_3", "Sp_4", "SO_5", or Bala-Carter components
  std::string str() const;
};

struct ThetaOrbitResult {
  bool exceptional = false;
  Partition orbit;          // classical
  std::string label;        // exceptional (Bala-Carter), or the partition as text
  int effectiveDegree = 0;  // n after the SO/GL rewriting step
  bool viaClosedForm = true;
  // absent for covers outside the classification theorems (Spin, SL)
  std::optional<Verdict> verdict;
  std::optional<LeviDescription> leviRegular;
};

// Levi L with the orbit regular in L, if any: equal parts pair off into GL
// blocks and what is left must be the regular orbit of one same-type factor.
std::optional<LeviDescription> classical_levi_of(const Partition& p, ClassicalType t);

// Theta orbit of the cover: closed form for classical groups (falling back
// to the duality pipeline where the formula is undefined), table lookup for
// exceptional groups with Inv_BD = 1.  Throws std::invalid_argument for
// unsupported covers.
ThetaOrbitResult theta_orbit(const CoverSpec& spec);

struct ThetaPropertyReport {
  ThetaOrbitResult result;
  bool quasiAdmissible = false;
  bool notRaisable = false;
  bool ok() const { return quasiAdmissible && notRaisable; }
  // false for Sp covers with n = 2 mod 4
  bool persistent = true;
  std::vector<std::string> messages;
};

// Checks that the theta orbit is quasi-admissible and not raisable, and
// reports the Levi factors when the orbit is regular in a Levi.
ThetaPropertyReport verify_theta_properties(const CoverSpec& spec);

}  // namespace thetaorb
