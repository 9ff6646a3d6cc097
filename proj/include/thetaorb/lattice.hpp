#pragma once

#include <cstdint>
#include <vector>

#include "thetaorb/rational.hpp"

namespace thetaorb {

// Basis (as columns) of the integer kernel {x : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

// Column Hermite normal form of a full-rank lattice given by generator
// columns: a square lower-triangular basis with positive diagonal and
// 0 <= H(i, j) < H(i, i) for j < i.
IntMatrix hermite_basis(const IntMatrix& generators);

// {y in Z^r : gram * y = 0 mod n}
IntMatrix congruence_sublattice(const IntMatrix& gram, std::int64_t n);

// Z^r / L for a full-rank sublattice L, with canonical representatives
// 0 <= v_i < H(i, i) (the box of the Hermite basis).
class LatticeQuotient {
 public:
  explicit LatticeQuotient(IntMatrix sublatticeBasis);

  std::int64_t order() const { return order_; }
  const IntMatrix& basis() const { return h_; }

  IntVector reduce(IntVector y) const;
  std::int64_t index_of(const IntVector& y) const;  // of the reduced class
  IntVector representative(std::int64_t index) const;
  bool contains(const IntVector& y) const;  // y in L

 private:
  IntMatrix h_;
  std::vector<std::int64_t> diag_;
  std::int64_t order_ = 1;
};

}  // namespace thetaorb
