#pragma once

#include <string>
#include <vector>

#include "thetaorb/cover_spec.hpp"
#include "thetaorb/partition.hpp"
#include "thetaorb/root_system.hpp"

namespace thetaorb {

// Langlands dual classical type: B <-> C, D -> D, A -> A.
ClassicalType dual_type(ClassicalType t);

// collapse(transpose(p), t); plain transpose in type A.
Partition d_LS(const Partition& p, ClassicalType t);

// Barbasch-Vogan duality from `sourceType` to its dual type:
//   B (size 2r+1) -> C: (p^T minus a box)_C
//   C (size 2r)   -> B: (p^T plus a box)_B
//   D             -> D: (p^T)_D
//   A             -> A: p^T
Partition d_BV(const Partition& p, ClassicalType sourceType);

// Regular orbit of a pseudo-Levi  L = L1 x L2  of the dual group g^vee of type
// `sourceDualType` and rank `rank`.  p1 is the regular orbit of the
// distinguished factor L1, p2 the regular orbit of L2 realized in the
// same-type ambient: one same-type factor plus (k,k) for each GL_k.
struct PseudoLeviPair {
  ClassicalType sourceDualType = ClassicalType::C;
  int rank = 0;
  Partition p1;
  Partition p2;

  int ambient_size() const;  // r, 2r+1, 2r, 2r for A, B, C, D
  std::string str() const;
};

// Regular partition of a single factor: C_c -> (2c), B_c -> (2c+1),
// D_c -> (2c-1, 1) (D_0 empty), A_{k-1} -> (k).
Partition regular_partition(const CartanLabel& factor);

// Builds the pair from the factors of a pseudo-Levi of the classical
// ambient (`ambient`, `rank`).  A_{k-1} labels stand for GL_k and occupy k
// coordinates, B_c/C_c/D_c occupy c; coordinates not accounted for are GL_1.
// The factor of type C (ambient C) or D (ambients B and D) becomes p1; at
// most one further non-A factor is allowed and it must have the ambient type.
// Throws std::invalid_argument otherwise or when the factors do not fit.
PseudoLeviPair pseudo_levi_from_components(const std::vector<CartanLabel>& factors, ClassicalType ambient, int rank);

// Sommers' duality on the pair; the result is an orbit of the group whose
// dual has type pair.sourceDualType:
//   source C (G = B): ( (p1 u (p2 plus a box)_B)^T )_B
//   source B (G = C): ( (p1 u (p2 minus a box)_C)^T )_C
//   source D (G = D): ( (p1 u ((p2^T)_D)^T)^T )_D
//   source A:         (p1 u p2)^T
// With p1 empty this is d_BV(p2).
Partition d_Som(const PseudoLeviPair& pair);

// The pseudo-Levi factors of an integral subsystem of a classical dual
// system, identified from coordinate supports rather than Cartan labels:
// a factor containing a root with one nonzero coordinate is of the ambient
// type (B_1 and C_1 included), a factor with k(k-1) positive roots on k
// coordinates is D_k, two A1 factors on the same two coordinates merge into
// D_2, anything else on k coordinates is GL_k (label A_{k-1}).
std::vector<CartanLabel> classical_levi_factors(const RootSystemData& dual, const SubsystemReport& rep);

struct DualityTrace {
  RatVector nu;                         // fundamental-weight coordinates, 1 / n_alpha
  SubsystemReport integral;             // Phi_nu^vee inside the dual root system
  std::vector<CartanLabel> factors;     // pseudo-Levi factors (GL_1 omitted)
  PseudoLeviPair pair;
  Partition orbit;
};

// exceptional_character -> integral subsystem of the dual -> pseudo-Levi
// pair -> d_Som, for GL/SL, SO, Spin and Sp covers.  Types B and C need
// rank >= 2, type D rank >= 3.
DualityTrace theta_via_duality(const CoverSpec& spec);

}  // namespace thetaorb
