#include "thetaorb/orbit_duality.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace thetaorb {

ClassicalType dual_type(ClassicalType t) {
  switch (t) {
    case ClassicalType::B: return ClassicalType::C;
    case ClassicalType::C: return ClassicalType::B;
    default: return t;
  }
}

Partition d_LS(const Partition& p, ClassicalType t) {
  if (!is_valid(p, t)) throw std::invalid_argument(p.str() + " is not a valid orbit of type " + std::string(1, to_char(t)));
  if (t == ClassicalType::A) return transpose(p);
  return collapse(transpose(p), t);
}

Partition d_BV(const Partition& p, ClassicalType sourceType) {
  if (!is_valid(p, sourceType))
    throw std::invalid_argument(p.str() + " is not a valid orbit of type " + std::string(1, to_char(sourceType)));
  switch (sourceType) {
    case ClassicalType::A: return transpose(p);
    case ClassicalType::B: return collapse(minus_box(transpose(p)), ClassicalType::C);
    case ClassicalType::C: return collapse(plus_box(transpose(p)), ClassicalType::B);
    case ClassicalType::D: return collapse(transpose(p), ClassicalType::D);
  }
  throw std::logic_error("unreachable");
}

int PseudoLeviPair::ambient_size() const {
  switch (sourceDualType) {
    case ClassicalType::A: return rank;
    case ClassicalType::B: return 2 * rank + 1;
    default: return 2 * rank;
  }
}

std::string PseudoLeviPair::str() const {
  return std::string(1, to_char(sourceDualType)) + std::to_string(rank) + ": p1=" + p1.str() + " p2=" + p2.str();
}

Partition regular_partition(const CartanLabel& f) {
  const int c = f.rank;
  switch (f.family) {
    case 'A': return Partition{c + 1};
    case 'B': return Partition{2 * c + 1};
    case 'C': return Partition{2 * c};
    case 'D': return c == 0 ? Partition{} : Partition{2 * c - 1, 1};
  }
  throw std::invalid_argument("no regular partition for " + f.str());
}

PseudoLeviPair pseudo_levi_from_components(const std::vector<CartanLabel>& factors, ClassicalType ambient, int rank) {
  const char amb = to_char(ambient);
  const char l1Type = ambient == ClassicalType::C ? 'C' : 'D';
  PseudoLeviPair pair;
  pair.sourceDualType = ambient;
  pair.rank = rank;

  std::vector<int> p2;
  int used = 0;
  bool haveL1 = false, haveSame = false;
  for (const auto& f : factors) {
    if (f.family == 'A') {
      const int k = f.rank + 1;
      used += k;
      p2.push_back(k);
      if (ambient != ClassicalType::A) p2.push_back(k);
      continue;
    }
    if (ambient == ClassicalType::A) throw std::invalid_argument("type A ambient admits only A factors, got " + f.str());
    used += f.rank;
    if (f.family == l1Type && !haveL1) {
      pair.p1 = regular_partition(f);
      haveL1 = true;
    } else if (f.family == amb && !haveSame) {
      const Partition reg = regular_partition(f);
      for (int x : reg.parts()) p2.push_back(x);
      haveSame = true;
    } else {
      throw std::invalid_argument("unexpected non-A factor " + f.str() + " in a pseudo-Levi of type " + std::string(1, amb));
    }
  }
  if (used > rank)
    throw std::invalid_argument("pseudo-Levi factors occupy " + std::to_string(used) + " > " + std::to_string(rank) + " coordinates");
  for (int i = used; i < rank; ++i) {
    p2.push_back(1);
    if (ambient != ClassicalType::A) p2.push_back(1);
  }
  // the same-type factor of rank 0 for B is SO_1, regular orbit (1)
  if (ambient == ClassicalType::B && !haveSame) p2.push_back(1);
  pair.p2 = Partition(p2);
  if (pair.p1.size() + pair.p2.size() != pair.ambient_size())
    throw std::logic_error("pseudo-Levi pair has the wrong size: " + pair.str());
  return pair;
}

Partition d_Som(const PseudoLeviPair& pair) {
  if (pair.p1.size() + pair.p2.size() != pair.ambient_size())
    throw std::invalid_argument("pseudo-Levi pair has the wrong size: " + pair.str());
  const Partition& p1 = pair.p1;
  const Partition& p2 = pair.p2;
  switch (pair.sourceDualType) {
    case ClassicalType::A: return transpose(union_of(p1, p2));
    case ClassicalType::C: {
      Partition x = collapse(plus_box(p2), ClassicalType::B);
      return collapse(transpose(union_of(p1, x)), ClassicalType::B);
    }
    case ClassicalType::B: {
      Partition x = collapse(minus_box(p2), ClassicalType::C);
      return collapse(transpose(union_of(p1, x)), ClassicalType::C);
    }
    case ClassicalType::D: {
      // the D clause reads p2 through a D-collapse of its transpose
      Partition x = transpose(collapse(transpose(p2), ClassicalType::D));
      return collapse(transpose(union_of(p1, x)), ClassicalType::D);
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<CartanLabel> classical_levi_factors(const RootSystemData& dual, const SubsystemReport& rep) {
  const char fam = dual.family();
  if (fam != 'A' && fam != 'B' && fam != 'C' && fam != 'D')
    throw std::invalid_argument("classical_levi_factors needs a classical root system");
  struct Found {
    CartanLabel label;
    std::set<int> support;
  };
  std::vector<Found> found;
  for (const auto& comp : rep.components) {
    std::set<int> support;
    bool single = false;
    for (int r : comp.roots) {
      IntVector v = dual.root(r);
      int nz = 0;
      for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) != 0) {
          support.insert(static_cast<int>(i));
          ++nz;
        }
      single = single || nz == 1;
    }
    const int k = static_cast<int>(support.size());
    const int npos = static_cast<int>(comp.roots.size()) / 2;
    CartanLabel label;
    if (fam == 'A') {
      label = {'A', k - 1, false};
    } else if (single) {
      label = {fam, k, false};
    } else if (k >= 3 && npos == k * (k - 1)) {
      label = {'D', k, false};
    } else if (npos == k * (k - 1) / 2) {
      label = {'A', k - 1, false};
    } else {
      throw std::logic_error("unrecognized pseudo-Levi factor " + comp.label.str());
    }
    found.push_back({label, support});
  }
  // two A1 factors on the same pair of coordinates form D2
  std::vector<CartanLabel> out;
  std::vector<bool> merged(found.size(), false);
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (merged[i]) continue;
    if (found[i].label == CartanLabel{'A', 1, false}) {
      for (std::size_t j = i + 1; j < found.size(); ++j)
        if (!merged[j] && found[j].label == found[i].label && found[j].support == found[i].support) {
          merged[i] = merged[j] = true;
          out.push_back({'D', 2, false});
          break;
        }
      if (merged[i]) continue;
    }
    out.push_back(found[i].label);
  }
  std::stable_sort(out.begin(), out.end(), [](const CartanLabel& x, const CartanLabel& y) {
    bool xa = x.family == 'A', ya = y.family == 'A';
    if (xa != ya) return !xa;
    return x.rank > y.rank;
  });
  return out;
}

DualityTrace theta_via_duality(const CoverSpec& spec) {
  const GroupLabel& g = spec.group();
  if (g.exceptional()) throw std::invalid_argument("the duality pipeline covers classical groups only");
  const ClassicalType t = g.classical_type();
  const ClassicalType dt = dual_type(t);
  RootSystemData dual = t == ClassicalType::A ? spec.roots() : build(to_char(dt), g.rank);

  DualityTrace tr;
  tr.nu = exceptional_character(spec).nu;
  tr.integral = integral_subsystem_dual(dual, tr.nu);
  tr.factors = classical_levi_factors(dual, tr.integral);
  tr.pair = pseudo_levi_from_components(tr.factors, dt, g.rank);
  tr.orbit = d_Som(tr.pair);
  return tr;
}

}  // namespace thetaorb
