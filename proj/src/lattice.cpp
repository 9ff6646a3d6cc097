#include "thetaorb/lattice.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace thetaorb {

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q.numerator();
  if (q.denominator() != 1) os << '/' << q.denominator();
  return os.str();
}

RatVector to_rational(const IntVector& v) {
  RatVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    a.row(c).swap(a.row(piv));
    inv.row(c).swap(inv.row(piv));
    Rational p = a(c, c);
    a.row(c) /= p;
    inv.row(c) /= p;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rational f = a(r, c);
      a.row(r) -= f * a.row(c);
      inv.row(r) -= f * inv.row(c);
    }
  }
  return inv;
}

namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("integer lattice arithmetic overflowed");
  return static_cast<std::int64_t>(v);
}

// x = s*a + t*b = g, gcd with g >= 0
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t r = a - q * b;
    a = b;
    b = r;
    std::int64_t ns = s0 - q * s1, nt = t0 - q * t1;
    s0 = s1; s1 = ns;
    t0 = t1; t1 = nt;
  }
  if (a < 0) { a = -a; s0 = -s0; t0 = -t0; }
  s = s0;
  t = t0;
  return a;
}

// Unimodular column step so that m(row, p) becomes gcd and m(row, q) zero.
void combine_columns(IntMatrix& m, Eigen::Index row, Eigen::Index p, Eigen::Index q) {
  std::int64_t a = m(row, p), b = m(row, q);
  if (b == 0) return;
  std::int64_t s, t;
  std::int64_t g = ext_gcd(a, b, s, t);
  std::int64_t u = -b / g, v = a / g;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::int64_t x = m(i, p), y = m(i, q);
    m(i, p) = checked(static_cast<__int128>(s) * x + static_cast<__int128>(t) * y);
    m(i, q) = checked(static_cast<__int128>(u) * x + static_cast<__int128>(v) * y);
  }
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntMatrix integer_kernel(const IntMatrix& a) {
  const Eigen::Index m = a.rows(), k = a.cols();
  IntMatrix b(m + k, k);
  b.topRows(m) = a;
  b.bottomRows(k) = IntMatrix::Identity(k, k);
  Eigen::Index c = 0;
  for (Eigen::Index i = 0; i < m && c < k; ++i) {
    Eigen::Index nz = c;
    while (nz < k && b(i, nz) == 0) ++nz;
    if (nz == k) continue;
    b.col(c).swap(b.col(nz));
    for (Eigen::Index q = c + 1; q < k; ++q) combine_columns(b, i, c, q);
    ++c;
  }
  return b.bottomRows(k).rightCols(k - c);
}

IntMatrix hermite_basis(const IntMatrix& generators) {
  const Eigen::Index r = generators.rows(), k = generators.cols();
  IntMatrix h = generators;
  for (Eigen::Index i = 0; i < r; ++i) {
    if (i >= k) throw std::domain_error("generators do not span a full-rank lattice");
    Eigen::Index nz = i;
    while (nz < k && h(i, nz) == 0) ++nz;
    if (nz == k) throw std::domain_error("generators do not span a full-rank lattice");
    h.col(i).swap(h.col(nz));
    for (Eigen::Index q = i + 1; q < k; ++q) combine_columns(h, i, i, q);
    if (h(i, i) < 0) h.col(i) = -h.col(i);
    for (Eigen::Index j = 0; j < i; ++j) {
      std::int64_t f = floor_div(h(i, j), h(i, i));
      if (f != 0) h.col(j) -= f * h.col(i);
    }
  }
  return h.leftCols(r);
}

IntMatrix congruence_sublattice(const IntMatrix& gram, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("modulus must be positive");
  const Eigen::Index r = gram.rows();
  IntMatrix aug(r, 2 * r);
  aug.leftCols(r) = gram;
  aug.rightCols(r) = n * IntMatrix::Identity(r, r);
  IntMatrix ker = integer_kernel(aug);
  return hermite_basis(ker.topRows(r));
}

LatticeQuotient::LatticeQuotient(IntMatrix sublatticeBasis) : h_(std::move(sublatticeBasis)) {
  if (h_.rows() != h_.cols()) throw std::invalid_argument("sublattice basis must be square");
  for (Eigen::Index i = 0; i < h_.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < h_.cols(); ++j)
      if (h_(i, j) != 0) throw std::invalid_argument("sublattice basis must be lower triangular");
    if (h_(i, i) <= 0) throw std::invalid_argument("sublattice basis needs a positive diagonal");
    diag_.push_back(h_(i, i));
    order_ = checked(static_cast<__int128>(order_) * h_(i, i));
  }
}

IntVector LatticeQuotient::reduce(IntVector y) const {
  for (Eigen::Index i = 0; i < h_.rows(); ++i) {
    std::int64_t q = floor_div(y(i), diag_[static_cast<std::size_t>(i)]);
    if (q != 0) y -= q * h_.col(i);
  }
  return y;
}

std::int64_t LatticeQuotient::index_of(const IntVector& y) const {
  IntVector v = reduce(y);
  std::int64_t idx = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) idx = idx * diag_[static_cast<std::size_t>(i)] + v(i);
  return idx;
}

IntVector LatticeQuotient::representative(std::int64_t index) const {
  if (index < 0 || index >= order_) throw std::out_of_range("coset index out of range");
  IntVector v(h_.rows());
  for (Eigen::Index i = h_.rows() - 1; i >= 0; --i) {
    std::int64_t d = diag_[static_cast<std::size_t>(i)];
    v(i) = index % d;
    index /= d;
  }
  return v;
}

bool LatticeQuotient::contains(const IntVector& y) const { return reduce(y).isZero(); }

}  // namespace thetaorb
