#include <gtest/gtest.h>

#include <random>
#include <set>

#include "thetaorb/cover_spec.hpp"
#include "thetaorb/lattice.hpp"
#include "thetaorb/root_system.hpp"

using namespace thetaorb;

namespace {

// <x, alpha^vee> = 2 (x, alpha) / (alpha, alpha), straight from the ambient
// integer vectors
Rational ambient_pairing(const RootSystemData& rs, const RatVector& x, int i) {
  const IntVector a = rs.root(i);
  Rational num(0);
  for (Eigen::Index k = 0; k < a.size(); ++k) num += x(k) * Rational(a(k));
  return Rational(2) * num / Rational(a.dot(a));
}

std::map<CartanLabel, int> integral_by_oracle(const RootSystemData& rs, const RatVector& nu, std::vector<int>* members) {
  RatVector x = RatVector::Zero(rs.ambient_dim());
  for (int i = 0; i < rs.rank(); ++i) x += rs.fundamental_weights().col(i) * nu(i);
  for (int i = 0; i < rs.num_roots(); ++i)
    if (is_integer(ambient_pairing(rs, x, i))) members->push_back(i);
  return subsystem_from_members(rs, *members).multiset();
}

RatVector rho_over(const RootSystemData& rs, int n) {
  RatVector nu(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) nu(i) = Rational(1, n);
  return nu;
}

}  // namespace

TEST(RootSystem, CountsAndWeylOrders) {
  const std::vector<std::tuple<char, int, int, std::int64_t>> cases = {
      {'A', 1, 2, 2},      {'A', 4, 20, 120},        {'B', 4, 32, 384},        {'C', 3, 18, 48},
      {'D', 4, 24, 192},   {'G', 2, 12, 12},         {'F', 4, 48, 1152},       {'E', 6, 72, 51840},
      {'E', 7, 126, 2903040}, {'E', 8, 240, 696729600}};
  for (auto [f, r, n, w] : cases) {
    auto rs = build(f, r);
    EXPECT_EQ(rs.num_roots(), n) << f << r;
    EXPECT_EQ(root_count(f, r), n);
    EXPECT_EQ(rs.weyl_group_order(), w) << f << r;
    EXPECT_EQ(classify_component(rs.cartan()), (CartanLabel{f, r, false}));
  }
  EXPECT_THROW(build('D', 2), std::invalid_argument);
  EXPECT_THROW(build('E', 9), std::invalid_argument);
}

TEST(RootSystem, BourbakiShortRoots) {
  auto b4 = build('B', 4);
  EXPECT_TRUE(b4.is_long(0));
  EXPECT_FALSE(b4.is_long(3));
  auto c3 = build('C', 3);
  EXPECT_FALSE(c3.is_long(0));
  EXPECT_TRUE(c3.is_long(2));
  auto g2 = build('G', 2);
  EXPECT_FALSE(g2.is_long(0));
}

TEST(RootSystem, CartanMatrixFromRoots) {
  for (auto [f, r] : std::vector<std::pair<char, int>>{{'B', 3}, {'C', 4}, {'F', 4}, {'G', 2}, {'E', 7}}) {
    auto rs = build(f, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        RatVector aj = to_rational(IntVector(rs.root(j)));
        EXPECT_EQ(Rational(rs.cartan()(i, j)), ambient_pairing(rs, aj, i));
      }
  }
}

TEST(RootSystem, LabelParsing) {
  EXPECT_EQ(parse_cartan_label("~A2"), (CartanLabel{'A', 2, true}));
  EXPECT_EQ(parse_cartan_label("E8").str(), "E8");
  auto m = parse_component_list("(4A1)''");
  EXPECT_EQ(m.size(), 1u);
  EXPECT_EQ(m.at(CartanLabel{'A', 1, false}), 4);
  EXPECT_TRUE(parse_component_list("").empty());
  EXPECT_EQ(format_component_list(parse_component_list("A3+2A2+A1")), "A3+2A2+A1");
  EXPECT_EQ(positive_root_count(parse_component_list("A4+A3")), 16);
}

TEST(RootSystem, IntegralSubsystemExamples) {
  auto g2 = build('G', 2);
  // the long simple root has Q = 3, so n_alpha = 1 there at n = 3
  auto ch = exceptional_character(CoverSpec(parse_group("G2", 0), 3));
  EXPECT_EQ(integral_subsystem(g2, ch.nuTilde).str(), "~A2");
  auto f4 = build('F', 4);
  RatVector nu(4);
  nu << Rational(1, 8), Rational(1, 8), Rational(1, 4), Rational(1, 4);
  EXPECT_EQ(integral_subsystem(f4, nu).str(), "~A2");
  auto e8 = build('E', 8);
  EXPECT_EQ(integral_subsystem(e8, rho_over(e8, 6)).str(), "A4+A3");
  EXPECT_EQ(integral_subsystem(e8, rho_over(e8, 1)).str(), "E8");
  EXPECT_EQ(integral_subsystem(e8, rho_over(e8, 31)).str(), "");
}

TEST(RootSystem, IntegralSubsystemAgreesWithAmbientPairing) {
  std::mt19937 rng(7);
  for (auto [f, r] : std::vector<std::pair<char, int>>{{'B', 4}, {'C', 4}, {'D', 5}, {'G', 2}, {'F', 4}, {'E', 6}, {'E', 7}}) {
    auto rs = build(f, r);
    for (int trial = 0; trial < 20; ++trial) {
      RatVector nu(r);
      for (int i = 0; i < r; ++i) nu(i) = Rational(static_cast<int>(rng() % 7), 1 + static_cast<int>(rng() % 6));
      std::vector<int> members;
      auto ref = integral_by_oracle(rs, nu, &members);
      auto rep = integral_subsystem(rs, nu);
      std::sort(members.begin(), members.end());
      auto got = rep.memberRoots;
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, members);
      EXPECT_EQ(rep.multiset(), ref);
    }
  }
}

TEST(RootSystem, SubsystemComponentsAreClosed) {
  auto e7 = build('E', 7);
  auto rep = integral_subsystem(e7, rho_over(e7, 9));
  int total = 0;
  for (const auto& c : rep.components) total += static_cast<int>(c.roots.size());
  EXPECT_EQ(total, static_cast<int>(rep.memberRoots.size()));
  EXPECT_EQ(positive_root_count(rep.multiset()) * 2, total);
}

TEST(Lattice, HermiteBasisAndQuotient) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 2 + static_cast<int>(rng() % 3);
    IntMatrix g(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) g(i, j) = static_cast<std::int64_t>(rng() % 9) - 4;
    RatMatrix gq = to_rational(g);
    Rational det(1);
    try {
      RatMatrix inv = inverse(gq);
      (void)inv;
    } catch (const std::domain_error&) {
      continue;  // singular draw
    }
    // determinant by Gaussian elimination
    {
      RatMatrix m = gq;
      for (int c = 0; c < r; ++c) {
        int piv = c;
        while (m(piv, c) == 0) ++piv;
        if (piv != c) {
          m.row(piv).swap(m.row(c));
          det = -det;
        }
        det *= m(c, c);
        for (int i = c + 1; i < r; ++i) {
          Rational f = m(i, c) / m(c, c);
          for (int j = c; j < r; ++j) m(i, j) -= f * m(c, j);
        }
      }
    }
    const std::int64_t absDet = std::abs(det.numerator());
    IntMatrix h = hermite_basis(g);
    for (int i = 0; i < r; ++i) {
      EXPECT_GT(h(i, i), 0);
      for (int j = i + 1; j < r; ++j) EXPECT_EQ(h(i, j), 0);
      for (int j = 0; j < i; ++j) {
        EXPECT_GE(h(i, j), 0);
        EXPECT_LT(h(i, j), h(i, i));
      }
    }
    LatticeQuotient q(h);
    EXPECT_EQ(q.order(), absDet);
    for (int c = 0; c < r; ++c) EXPECT_TRUE(q.contains(g.col(c)));
    if (absDet > 2000) continue;
    std::set<std::int64_t> seen;
    for (std::int64_t k = 0; k < q.order(); ++k) {
      IntVector v = q.representative(k);
      EXPECT_EQ(q.index_of(v), k);
      seen.insert(k);
      IntVector shifted = v + g.col(static_cast<Eigen::Index>(rng() % static_cast<unsigned>(r))) * 3;
      EXPECT_EQ(q.reduce(shifted), q.reduce(v));
    }
    EXPECT_EQ(static_cast<std::int64_t>(seen.size()), absDet);
  }
}

TEST(Lattice, KernelAndCongruence) {
  IntMatrix a(1, 3);
  a << 1, 2, 3;
  IntMatrix k = integer_kernel(a);
  EXPECT_EQ(k.cols(), 2);
  for (Eigen::Index c = 0; c < k.cols(); ++c) EXPECT_EQ((a * k.col(c))(0), 0);

  IntMatrix gram(2, 2);
  gram << 2, 1, 1, 2;
  IntMatrix l = congruence_sublattice(gram, 3);
  LatticeQuotient q(l);
  // det(gram) = 3, so {y : gram y = 0 mod 3} has index 3 in Z^2
  EXPECT_EQ(q.order(), 3);
}

TEST(CoverSpec, NAlphaOfSymplecticAndOrthogonal) {
  CoverSpec sp(parse_group("Sp", 4), 3);
  EXPECT_EQ(n_alpha(sp, 3), 3);  // long simple root, Q = 1
  CoverSpec sp6(parse_group("Sp", 4), 6);
  EXPECT_EQ(n_alpha(sp6, 0), 3);
  EXPECT_EQ(n_alpha(sp6, 3), 6);
  CoverSpec so(parse_group("SO_odd", 4), 4);
  EXPECT_EQ(so.inv_bd(), 2);
  EXPECT_EQ(so.q_coroot(3), 4);
  EXPECT_EQ(n_alpha(so, 3), 1);
  EXPECT_EQ(n_alpha(so, 0), 2);
}

TEST(CoverSpec, ExceptionalCharacterOfSpin) {
  for (int n = 1; n <= 8; ++n) {
    CoverSpec spin(parse_group("Spin_odd", 4), n);
    auto ch = exceptional_character(spin);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(ch.nu(i), Rational(1, n));
    // Q(alpha_r^vee) = 2 for the short simple root
    EXPECT_EQ(ch.nu(3), n % 2 ? Rational(1, n) : Rational(2, n));
    CoverSpec spinD(parse_group("Spin_even", 5), n);
    auto chD = exceptional_character(spinD);
    for (int i = 0; i < 5; ++i) EXPECT_EQ(chD.nu(i), Rational(1, n));
  }
}

TEST(CoverSpec, GeneralLinearForms) {
  CoverSpec g = CoverSpec::gl(3, 4);
  EXPECT_EQ(g.q_coroot(0), -1);  // Q(e1 - e2) = 2a - b
  CoverSpec h = CoverSpec::gl(3, 4, 1, 1);
  EXPECT_EQ(h.q_coroot(0), 1);
  EXPECT_EQ(n_alpha(h, 0), 4);
  CoverSpec z = CoverSpec::gl(3, 4, 1, 2);
  EXPECT_EQ(z.q_coroot(0), 0);
  EXPECT_THROW(CoverSpec::gl(1, 3), std::invalid_argument);
}

TEST(CoverSpec, Validation) {
  EXPECT_THROW(CoverSpec(parse_group("Sp", 3), 0), std::invalid_argument);
  EXPECT_THROW(parse_group("Q", 3), std::invalid_argument);
  EXPECT_THROW(CoverSpec(parse_group("SO_even", 2), 3), std::invalid_argument);
}
