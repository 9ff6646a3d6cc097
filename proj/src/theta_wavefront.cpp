#include "thetaorb/theta_wavefront.hpp"

#include <stdexcept>

#include "thetaorb/exceptional_data.hpp"
#include "thetaorb/orbit_duality.hpp"

namespace thetaorb {

namespace {

void append(std::vector<int>& v, int part, int count) {
  for (int i = 0; i < count; ++i) v.push_back(part);
}

void require_degree(int N, int n) {
  if (n < 1) throw std::invalid_argument("the degree n must be positive");
  if (N < 0) throw std::invalid_argument("negative partition size");
}

}  // namespace

Partition orbit_O(int N, int n) {
  require_degree(N, n);
  std::vector<int> v;
  append(v, n, N / n);
  v.push_back(N % n);
  return Partition(v);
}

Partition orbit_OB(int N, int n) {
  require_degree(N, n);
  if (N % 2 != 1) throw std::invalid_argument("type B orbits have odd size");
  const int r = (N - 1) / 2, a = r / n, b = r % n;
  std::vector<int> v;
  if (n % 2 == 1) {
    const int m = (n - 1) / 2;
    if (b <= m) {
      append(v, n, 2 * a);
      v.push_back(2 * b + 1);
    } else {
      // (n^{2a+1}, 2b+1-n) has a single even part; its B-collapse
      append(v, n, 2 * a + 1);
      v.push_back(2 * b - n);
      v.push_back(1);
    }
  } else {
    const int m = n / 2;
    append(v, n, 2 * a);
    if (b <= m - 1) {
      v.push_back(2 * b + 1);
    } else {
      v.push_back(n - 1);
      v.push_back(2 * b + 1 - n);
      v.push_back(1);
    }
  }
  return Partition(v);
}

std::optional<Partition> orbit_OD(int N, int n) {
  require_degree(N, n);
  if (N % 2 != 0 || N < 2) throw std::invalid_argument("type D orbits have even positive size");
  const int r = N / 2, a = (r - 1) / n, b = (r - 1) % n;
  std::vector<int> v;
  if (n % 2 == 1) {
    const int m = (n - 1) / 2;
    if (b <= m) {
      append(v, n, 2 * a);
      v.push_back(2 * b + 1);
      v.push_back(1);
    } else {
      append(v, n, 2 * a + 1);
      v.push_back(2 * b + 2 - n);
    }
  } else {
    const int m = n / 2;
    v.push_back(n + 1);
    if (b <= m - 1) {
      if (a == 0) return std::nullopt;
      append(v, n, 2 * a - 2);
      v.push_back(n - 1);
      v.push_back(2 * b + 1);
      v.push_back(1);
    } else {
      append(v, n, 2 * a);
      v.push_back(2 * b + 1 - n);
    }
  }
  return Partition(v);
}

Partition orbit_OC(int N, int n) {
  require_degree(N, n);
  if (n % 2 != 1) throw std::invalid_argument("orbit_OC needs n odd");
  const int a = N / n, b = N % n;
  std::vector<int> v;
  if (a % 2 == 0) {
    append(v, n, a);
    v.push_back(b);
  } else {
    append(v, n, a - 1);
    v.push_back(n - 1);
    v.push_back(b + 1);
  }
  return Partition(v);
}

std::optional<Partition> orbit_Sp(int r, int n) {
  require_degree(2 * r, n);
  if (n % 2 == 1) return orbit_OC(2 * r, n);
  if (n % 4 == 0) return orbit_O(2 * r, n / 2);
  const int k = n / 2;
  const int M = 2 * r - k - 1;
  if (M < 0) return std::nullopt;
  std::vector<int> v = orbit_OC(M, k).parts();
  v.push_back(k + 1);
  return Partition(v);
}

std::string LeviDescription::str() const {
  std::string s;
  for (const auto& f : factors) s += (s.empty() ? "" : " x ") + f;
  return s.empty() ? "T" : s;
}

std::optional<LeviDescription> classical_levi_of(const Partition& p, ClassicalType t) {
  LeviDescription d;
  if (t == ClassicalType::A) {
    for (int x : p.parts()) d.factors.push_back("GL_" + std::to_string(x));
    return d;
  }
  std::vector<int> left;
  for (auto [part, mult] : multiplicities(p)) {
    for (int i = 0; i < mult / 2; ++i) d.factors.push_back("GL_" + std::to_string(part));
    if (mult % 2) left.push_back(part);
  }
  std::string same;
  switch (t) {
    case ClassicalType::B:
      if (left.size() != 1 || left[0] % 2 == 0) return std::nullopt;
      if (left[0] > 1) same = "SO_" + std::to_string(left[0]);
      break;
    case ClassicalType::C:
      if (left.size() > 1 || (left.size() == 1 && left[0] % 2 != 0)) return std::nullopt;
      if (!left.empty()) same = "Sp_" + std::to_string(left[0]);
      break;
    case ClassicalType::D:
      if (left.empty()) break;
      if (left.size() != 2) return std::nullopt;
      {
        int hi = std::max(left[0], left[1]), lo = std::min(left[0], left[1]);
        if (lo != 1 || hi % 2 == 0) return std::nullopt;
        same = "SO_" + std::to_string(hi + 1);
      }
      break;
    default: break;
  }
  if (!same.empty()) d.factors.insert(d.factors.begin(), same);
  return d;
}

namespace {

std::vector<std::string> expand_components(const std::string& label) {
  std::vector<std::string> out;
  const auto comps = parse_component_list(label);
  // largest components first, as in the orbit label
  for (auto it = comps.rbegin(); it != comps.rend(); ++it)
    for (int i = 0; i < it->second; ++i) out.push_back(it->first.str());
  return out;
}

ThetaOrbitResult exceptional_theta(const CoverSpec& spec) {
  if (spec.inv_bd() != 1) throw std::invalid_argument("exceptional theta orbits are tabulated for Inv_BD = 1 only");
  const auto& tables = ExceptionalTables::instance();
  const std::string group = spec.group().str();
  const int n = spec.degree();
  const auto& row = tables.lookup_theta(group, n);
  ThetaOrbitResult res;
  res.exceptional = true;
  res.label = row.orbit;
  res.effectiveDegree = n;
  res.viaClosedForm = false;
  res.verdict = classify_exceptional(tables.lookup_orbit(group, row.orbit), n);
  if (row.leviRegular) res.leviRegular = LeviDescription{expand_components(row.orbit)};
  return res;
}

}  // namespace

ThetaOrbitResult theta_orbit(const CoverSpec& spec) {
  const GroupLabel& g = spec.group();
  if (g.exceptional()) return exceptional_theta(spec);

  const int r = g.rank;
  const int n = spec.degree();
  const ClassicalType t = g.classical_type();
  const bool isSO = g.form == IsogenyForm::SO;
  if (isSO && spec.inv_bd() != 2) throw std::invalid_argument("SO covers are supported with Inv_BD = 2");
  if ((g.form == IsogenyForm::SimplyConnected || g.form == IsogenyForm::Sp) && spec.inv_bd() != 1)
    throw std::invalid_argument(g.str() + " covers are supported with Inv_BD = 1");

  ThetaOrbitResult res;
  // every family formula is evaluated at n_alpha of the first simple root:
  // n for GL (Q(alpha^vee) = +-1), Spin and Sp, n / gcd(n, 2) for SO
  const int ne = t == ClassicalType::C ? n : n_alpha(spec, 0);
  res.effectiveDegree = ne;
  std::optional<Partition> closed;
  switch (t) {
    case ClassicalType::A: closed = orbit_O(r, ne); break;
    case ClassicalType::B: closed = orbit_OB(2 * r + 1, ne); break;
    case ClassicalType::C: closed = orbit_Sp(r, n); break;
    case ClassicalType::D: closed = orbit_OD(2 * r, ne); break;
  }
  if (closed) {
    res.orbit = *closed;
  } else {
    res.orbit = theta_via_duality(spec).orbit;
    res.viaClosedForm = false;
  }
  res.label = res.orbit.str();

  const int size = t == ClassicalType::A ? r : (t == ClassicalType::B ? 2 * r + 1 : 2 * r);
  if (!is_valid(res.orbit, t, size))
    throw std::logic_error("theta orbit " + res.orbit.str() + " is not a valid orbit of " + g.str());

  if (t == ClassicalType::A) {
    if (spec.q_coroot(0) != 0) res.verdict = classify_typeA(res.orbit, spec);
  } else if (t == ClassicalType::C || isSO) {
    res.verdict = classify_classical(res.orbit, spec);
  }
  res.leviRegular = classical_levi_of(res.orbit, t);
  return res;
}

ThetaPropertyReport verify_theta_properties(const CoverSpec& spec) {
  ThetaPropertyReport rep;
  rep.result = theta_orbit(spec);
  rep.persistent = spec.persistent_hint();
  if (!rep.result.verdict)
    throw std::invalid_argument("no quasi-admissibility criterion applies to " + spec.str());
  const Verdict& v = *rep.result.verdict;
  rep.quasiAdmissible = v.quasiAdmissible;
  rep.notRaisable = v.raisable != Raisability::Raisable;
  for (const auto& e : v.quasiEvidence)
    if (!e.holds) rep.messages.push_back("quasi-admissibility fails at " + e.factor + ": " + e.clause);
  for (const auto& e : v.raiseEvidence)
    if (e.holds) rep.messages.push_back("raisable at " + e.factor + ": " + e.clause);
  if (rep.result.leviRegular)
    rep.messages.push_back("regular in the Levi " + rep.result.leviRegular->str() + "; its theta representation must be generic");
  return rep;
}

}  // namespace thetaorb
