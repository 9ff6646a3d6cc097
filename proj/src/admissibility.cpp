#include "thetaorb/admissibility.hpp"

#include <numeric>
#include <stdexcept>

namespace thetaorb {

std::string to_string(Raisability r) {
  switch (r) {
    case Raisability::Raisable: return "yes";
    case Raisability::NotRaisableByCriterion: return "no_by_criterion";
    case Raisability::NotApplicable: return "not_applicable";
  }
  return "?";
}

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

bool divides(std::int64_t n, std::int64_t x) { return mod(x, n) == 0; }

std::int64_t gcd_abs(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

std::string part_tag(char kind, int part, int mult) {
  return std::string(1, kind) + "=" + std::to_string(part) + "^" + std::to_string(mult);
}

// The shared parity-twisted clause of both orthosymplectic theorems:
// with c the relevant count (frak_B for B/D even parts, frak_A for C odd parts)
//   n odd:          n | x and c even
//   n even, c even: n | x
//   n even, c odd:  gcd(n, x) = n/2
bool twisted_clause(int n, int x, int c, std::string& text) {
  bool cEven = c % 2 == 0;
  if (n % 2 == 1) {
    text = "n odd: n|" + std::to_string(x) + " and count " + std::to_string(c) + " even";
    return divides(n, x) && cEven;
  }
  if (cEven) {
    text = "n even, count " + std::to_string(c) + " even: n|" + std::to_string(x);
    return divides(n, x);
  }
  text = "n even, count " + std::to_string(c) + " odd: gcd(n," + std::to_string(x) + ")=n/2";
  return gcd_abs(n, x) == n / 2;
}

Raisability finish_raise(bool anyApplicable, bool anyRaise) {
  if (anyRaise) return Raisability::Raisable;
  return anyApplicable ? Raisability::NotRaisableByCriterion : Raisability::NotApplicable;
}

}  // namespace

bool splits(const BdPair& pair, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::int64_t nstar = std::lcm<std::int64_t>(n, 2);
  return divides(nstar, (nstar / n) * pair.q1 + (nstar / 2) * pair.q2);
}

bool splits_by_cases(const BdPair& pair, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (mod(pair.q2, 2) == 0) return divides(n, pair.q1);
  return n / gcd_abs(n, pair.q1) == 2;
}

Verdict classify_typeA(const Partition& p, const CoverSpec& spec) {
  if (spec.group().family != 'A') throw std::invalid_argument("type A criterion needs a GL_r or SL_r cover");
  if (p.size() != spec.group().rank)
    throw std::invalid_argument("partition " + p.str() + " does not have size " + std::to_string(spec.group().rank));
  if (spec.q_coroot(0) == 0) throw std::invalid_argument("type A criterion needs Q(alpha^vee) != 0");
  const int na = n_alpha(spec, 0);
  Verdict v;
  bool anyApplicable = false, anyRaise = false;
  for (auto [part, mult] : multiplicities(p)) {
    if (mult < 2) continue;
    anyApplicable = true;
    bool ok = divides(na, part);
    std::string clause = "n_alpha=" + std::to_string(na) + " | " + std::to_string(part);
    v.quasiEvidence.push_back({part_tag('p', part, mult), clause, ok});
    v.raiseEvidence.push_back({part_tag('p', part, mult), "n_alpha does not divide " + std::to_string(part), !ok});
    v.quasiAdmissible = v.quasiAdmissible && ok;
    anyRaise = anyRaise || !ok;
  }
  v.raisable = finish_raise(anyApplicable, anyRaise);
  return v;
}

Verdict classify_typeBD(const Partition& p, const CoverSpec& spec) {
  const GroupLabel& g = spec.group();
  if ((g.family != 'B' && g.family != 'D') || g.form != IsogenyForm::SO || spec.inv_bd() != 2)
    throw std::invalid_argument("orthogonal criterion needs an SO cover with Inv_BD = 2");
  const ClassicalType t = g.classical_type();
  const int size = g.family == 'B' ? 2 * g.rank + 1 : 2 * g.rank;
  if (!is_valid(p, t, size)) throw std::invalid_argument(p.str() + " is not a valid " + g.str() + " orbit");
  const int n = spec.degree();
  Verdict v;
  bool anyApplicable = false, anyRaise = false;
  for (auto [part, mult] : multiplicities(p)) {
    std::string text;
    if (part % 2 == 0) {
      if (mult < 2) continue;
      int c = frak_B(p, part);
      bool ok = twisted_clause(n, part, c, text);
      v.quasiEvidence.push_back({part_tag('p', part, mult), text, ok});
      v.raiseEvidence.push_back({part_tag('p', part, mult), "negation of: " + text, !ok});
      v.quasiAdmissible = v.quasiAdmissible && ok;
      anyApplicable = true;
      anyRaise = anyRaise || !ok;
    } else {
      if (mult >= 3) {
        bool ok;
        if (n % 2 == 1) {
          ok = divides(n, part);
          text = "n odd: n|" + std::to_string(part);
        } else if (mult >= 4) {
          ok = divides(n, 2 * part);
          text = "n even, e>=4: n|" + std::to_string(2 * part);
        } else {
          ok = divides(n, 4 * part);
          text = "n even, e=3: n|" + std::to_string(4 * part);
        }
        v.quasiEvidence.push_back({part_tag('q', part, mult), text, ok});
        v.quasiAdmissible = v.quasiAdmissible && ok;
      }
      if (mult >= 4) {
        bool raise = !divides(n, 2 * part);
        v.raiseEvidence.push_back({part_tag('q', part, mult), "n does not divide " + std::to_string(2 * part), raise});
        anyApplicable = true;
        anyRaise = anyRaise || raise;
      }
    }
  }
  v.raisable = finish_raise(anyApplicable, anyRaise);
  return v;
}

Verdict classify_typeC(const Partition& p, const CoverSpec& spec) {
  const GroupLabel& g = spec.group();
  if (g.family != 'C' || spec.inv_bd() != 1)
    throw std::invalid_argument("symplectic criterion needs an Sp cover with Inv_BD = 1");
  if (!is_valid(p, ClassicalType::C, 2 * g.rank))
    throw std::invalid_argument(p.str() + " is not a valid " + g.str() + " orbit");
  const int n = spec.degree();
  Verdict v;
  bool anyApplicable = false, anyRaise = false;
  for (auto [part, mult] : multiplicities(p)) {
    std::string text;
    if (part % 2 == 1) {
      if (mult < 2) continue;
      int c = frak_A(p, part);
      bool ok = twisted_clause(n, part, c, text);
      v.quasiEvidence.push_back({part_tag('q', part, mult), text, ok});
      v.raiseEvidence.push_back({part_tag('q', part, mult), "negation of: " + text, !ok});
      v.quasiAdmissible = v.quasiAdmissible && ok;
      anyApplicable = true;
      anyRaise = anyRaise || !ok;
    } else {
      if (mult >= 3) {
        bool ok;
        if (n % 2 == 1) {
          ok = divides(n, part);
          text = "n odd: n|" + std::to_string(part);
        } else if (mult >= 4) {
          ok = divides(n, 2 * part);
          text = "n even, d>=4: n|" + std::to_string(2 * part);
        } else {
          ok = divides(n, 4 * part);
          text = "n even, d=3: n|" + std::to_string(4 * part);
        }
        v.quasiEvidence.push_back({part_tag('p', part, mult), text, ok});
        v.quasiAdmissible = v.quasiAdmissible && ok;
      }
      if (mult >= 4) {
        bool raise = !divides(n, 2 * part);
        v.raiseEvidence.push_back({part_tag('p', part, mult), "n does not divide " + std::to_string(2 * part), raise});
        anyApplicable = true;
        anyRaise = anyRaise || raise;
      }
    }
  }
  v.raisable = finish_raise(anyApplicable, anyRaise);
  return v;
}

Verdict classify_classical(const Partition& p, const CoverSpec& spec) {
  switch (spec.group().family) {
    case 'A': return classify_typeA(p, spec);
    case 'B':
    case 'D': return classify_typeBD(p, spec);
    case 'C': return classify_typeC(p, spec);
  }
  throw std::invalid_argument(spec.group().str() + " is not a classical group");
}

}  // namespace thetaorb
