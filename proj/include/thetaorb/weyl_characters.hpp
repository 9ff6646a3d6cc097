#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "thetaorb/cover_spec.hpp"
#include "thetaorb/lattice.hpp"
#include "thetaorb/partition.hpp"
#include "thetaorb/rational.hpp"

namespace thetaorb {

// Class function on S_r, keyed by cycle type.
class ClassFunction {
 public:
  explicit ClassFunction(int r = 0);

  int degree() const { return r_; }
  const Rational& at(const Partition& cycleType) const;
  void set(const Partition& cycleType, Rational v);
  const std::map<Partition, Rational>& values() const { return values_; }

  ClassFunction operator*(const ClassFunction& o) const;  // pointwise
  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction scaled(const Rational& c) const;
  bool operator==(const ClassFunction& o) const { return r_ == o.r_ && values_ == o.values_; }

  bool integral() const;

 private:
  int r_;
  std::map<Partition, Rational> values_;
};

// centralizer order z_c = prod i^{m_i} m_i!
std::int64_t centralizer_order(const Partition& cycleType);
// +1 / -1
int sign_of(const Partition& cycleType);

// <f, g>_{S_r} = sum_c f(c) g(c) / z_c (characters of S_r are real)
Rational inner(const ClassFunction& f, const ClassFunction& g);

ClassFunction trivial_character(int r);
ClassFunction sign_character(int r);

// chi^lambda by Murnaghan-Nakayama on beta-sets.
ClassFunction mn_character(const Partition& lambda);
// single value chi^lambda(mu)
std::int64_t mn_value(const Partition& lambda, const Partition& mu);

// Conjugacy classes of the Young subgroup S_{l1} x S_{l2} x ...: one cycle
// type per block.
using YoungClass = std::vector<Partition>;
std::vector<YoungClass> young_classes(const Partition& lambda);
Partition fuse(const YoungClass& c);  // cycle type in S_r
std::int64_t young_centralizer_order(const YoungClass& c);

// Ind_{W_lambda}^{W} of the sign character of W_lambda.
ClassFunction induced_sign(const Partition& lambda);
// <Res f, Res g>_{W_lambda}
Rational inner_restricted(const ClassFunction& f, const ClassFunction& g, const Partition& lambda);
// multiplicities of the irreducibles chi^mu in f
std::map<Partition, Rational> decompose(const ClassFunction& f);

// j-induction of the sign character of W_lambda: chi^{lambda^T}.  Checks
// that it occurs once in Ind(sign) and that every other constituent
// chi^{mu^T} has mu strictly dominating lambda (std::logic_error otherwise).
ClassFunction j_induce_sign(const Partition& lambda);

// Y / Y_{Q,n} for a GL_r cover, with the twisted permutation action
// w[y] = w(y - delta) + delta.
class QuotientActionSpace {
 public:
  // delta = (r-1, ..., 1, 0) + shift * (1, ..., 1)
  explicit QuotientActionSpace(const CoverSpec& spec, std::int64_t shift = 0);

  int rank() const { return r_; }
  std::int64_t size() const { return quotient_.order(); }
  const IntVector& delta() const { return delta_; }
  const LatticeQuotient& quotient() const { return quotient_; }

  // permutation of class indices induced by w (w given as images of 0..r-1)
  std::vector<std::int64_t> act(const std::vector<int>& w) const;
  std::int64_t fixed_points(const Partition& cycleType) const;

  static constexpr std::int64_t kMaxElements = 1000000;

 private:
  int r_;
  LatticeQuotient quotient_;
  IntVector delta_;
};

// a permutation of the given cycle type: consecutive cycles
std::vector<int> permutation_of_type(const Partition& cycleType);

ClassFunction sigma_x_character(const QuotientActionSpace& space);

struct CCoefficientAudit {
  int r = 0;
  int n = 0;
  int nAlpha = 0;
  Partition lambda;  // (n_alpha^a b)
  std::int64_t quotientSize = 0;
  std::int64_t lhs = 0;  // <sign, sigma>_{W_lambda}
  std::int64_t rhs = 0;  // <chi^lambda, sign (x) sigma>_W
  std::int64_t value = 0;
  std::vector<std::pair<Partition, std::int64_t>> dimTable;  // dim_wh(mu) for every mu of r
};

// <sign_{W_mu}, sigma^X>_{W_mu}
std::int64_t dim_wh(const Partition& mu, const ClassFunction& sigma);

// Computes both sides for a GL_r cover; throws std::logic_error when they differ.
CCoefficientAudit c_coefficient(const CoverSpec& spec);

}  // namespace thetaorb
