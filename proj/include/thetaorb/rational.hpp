#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Core>
#include <boost/rational.hpp>

// boost::rational<int64_t> compared with a plain int literal recurses
// forever through boost's mixed-type templates; exact overloads win.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator!=(const rational<std::int64_t>& a, int b) { return !(a == b); }
inline bool operator<(const rational<std::int64_t>& a, int b) { return a < rational<std::int64_t>(b); }
inline bool operator>(const rational<std::int64_t>& a, int b) { return a > rational<std::int64_t>(b); }
inline bool operator<=(const rational<std::int64_t>& a, int b) { return !(a > b); }
inline bool operator>=(const rational<std::int64_t>& a, int b) { return !(a < b); }
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator!=(int b, const rational<std::int64_t>& a) { return a != b; }
}  // namespace boost

namespace thetaorb {

using Rational = boost::rational<std::int64_t>;

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

std::string to_string(const Rational& q);  // "3", "-1/2"

RatVector to_rational(const IntVector& v);
RatMatrix to_rational(const IntMatrix& m);

// Exact inverse by Gauss-Jordan elimination; throws std::domain_error when
// the matrix is singular.
RatMatrix inverse(const RatMatrix& m);

}  // namespace thetaorb

namespace Eigen {

template <>
struct NumTraits<thetaorb::Rational> : GenericNumTraits<thetaorb::Rational> {
  using Real = thetaorb::Rational;
  using NonInteger = thetaorb::Rational;
  using Nested = thetaorb::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
