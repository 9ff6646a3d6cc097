#include "thetaorb/tables.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "thetaorb/cover_spec.hpp"
#include "thetaorb/exceptional_data.hpp"
#include "thetaorb/orbit_duality.hpp"
#include "thetaorb/root_system.hpp"
#include "thetaorb/theta_wavefront.hpp"

namespace thetaorb {

std::string RowCheck::line() const {
  std::string s = (ok ? (viaErrata ? "ERRATA " : "OK   ") : "DIFF ") + key + " | derived: " + derived + " | expected: " + expected;
  if (!note.empty()) s += " | " + note;
  return s;
}

namespace {

const std::vector<std::string> kGroups = {"G2", "F4", "E6", "E7", "E8"};

std::string set_str(const std::set<int>& s) {
  std::ostringstream o;
  o << "{";
  bool first = true;
  for (int x : s) {
    o << (first ? "" : ",") << x;
    first = false;
  }
  o << "}";
  return o.str();
}

void require_group(const std::string& g) {
  for (const auto& x : kGroups)
    if (x == g) return;
  throw std::invalid_argument("unknown exceptional group '" + g + "'");
}

std::set<int> derived_set(const std::vector<BdPair>& factors, const std::optional<BdPair>& tau, int limit, bool raise) {
  ExceptionalOrbitRecord rec;
  rec.factors = factors;
  rec.tau = tau;
  std::set<int> s;
  for (int n = 1; n <= limit; ++n) {
    Verdict v = classify_exceptional(rec, n);
    if (raise ? v.raisable == Raisability::Raisable : v.quasiAdmissible) s.insert(n);
  }
  return s;
}

std::string ns_str(const ThetaTableRecord& r) {
  std::string s;
  for (int n : r.nValues) s += (s.empty() ? "" : ",") + std::to_string(n);
  if (r.nFrom) s += (s.empty() ? ">=" : ",>=") + std::to_string(*r.nFrom);
  return s;
}

}  // namespace

std::vector<RowCheck> check_orbit_table(const std::string& group, int limit) {
  require_group(group);
  std::vector<RowCheck> out;
  for (const auto& rec : ExceptionalTables::instance().orbits_of(group)) {
    const std::string base = "orbits-" + group + " " + rec.orbit + (rec.source == "supplement" ? " (supplement)" : "");
    {
      RowCheck c;
      c.key = base + " quasi-adm";
      auto d = derived_set(rec.factors, rec.tau, limit, false);
      auto e = rec.printedQuasiAdm.up_to(limit);
      c.derived = set_str(d);
      c.expected = rec.printedQuasiAdm.text() + " " + set_str(e);
      c.ok = d == e;
      if (!rec.altFactors.empty()) {
        auto alt = derived_set(rec.altFactors, rec.tau, limit, false);
        c.note = std::string("variant factors ") + (alt == d ? "agree" : "differ: " + set_str(alt));
      }
      if (rec.altQuasiAdm) {
        auto alt = rec.altQuasiAdm->up_to(limit);
        c.note += std::string(c.note.empty() ? "" : "; ") + "variant condition " + rec.altQuasiAdm->text() + (alt == d ? " agrees" : " disagrees");
      }
      out.push_back(c);
    }
    if (rec.printedRaisable.applicable() || rec.tau) {
      RowCheck c;
      c.key = base + " raisable";
      if (!rec.tau || !rec.printedRaisable.applicable()) {
        c.derived = rec.tau ? "tau present" : "n.a.";
        c.expected = rec.printedRaisable.text();
        c.ok = false;
      } else {
        auto d = derived_set(rec.factors, rec.tau, limit, true);
        auto e = rec.printedRaisable.up_to(limit);
        c.derived = set_str(d);
        c.expected = rec.printedRaisable.text() + " " + set_str(e);
        c.ok = d == e;
      }
      out.push_back(c);
    }
  }
  return out;
}

std::vector<RowCheck> check_theta_table(const std::string& group, int limit) {
  require_group(group);
  const GroupLabel g = parse_group(group, 0);
  const RootSystemData rs = build(g.family, g.rank);
  std::vector<RowCheck> out;
  for (const auto& row : ExceptionalTables::instance().theta_rows_of(group)) {
    const auto printed = parse_component_list(row.phiNu);
    const auto [d, b] = parse_j_label(row.jInductionLabel);
    (void)d;
    std::string bad, printedBad, derived;
    bool spanClosed = true, phiOk = true;
    for (int n = 1; n <= limit; ++n) {
      if (!row.contains(n)) continue;
      CoverSpec spec(g, n);
      auto ch = exceptional_character(spec);
      auto rep = integral_subsystem(rs, ch.nuTilde);
      const int npos = static_cast<int>(rep.memberRoots.size()) / 2;
      const int dim = rs.num_roots() - static_cast<int>(rep.memberRoots.size());
      const std::string phiStr = rep.str().empty() ? std::string("empty") : rep.str();
      if (derived.empty()) derived = phiStr + " b=" + std::to_string(npos) + " dim=" + std::to_string(dim);
      spanClosed = spanClosed && rep.spanClosed;

      std::string why;
      if (rep.multiset() != printed) {
        why += " phi=" + phiStr;
        phiOk = false;
      }
      if (npos != b) why += " b=" + std::to_string(npos);
      if (dim != row.dimension) why += " dim=" + std::to_string(dim);
      if (!why.empty() && printedBad.size() < 200) printedBad += " n=" + std::to_string(n) + ":" + why;

      // the same comparison against the corrected row
      auto conflict = row.phiConflicts.find(n);
      const int wantB = conflict == row.phiConflicts.end() ? b : conflict->second.b;
      const int wantDim = conflict == row.phiConflicts.end() ? row.dimension_effective() : conflict->second.dimension;
      why.clear();
      if (rep.multiset() != parse_component_list(row.phi_effective(n))) why += " phi=" + phiStr;
      if (npos != wantB) why += " b=" + std::to_string(npos);
      if (dim != wantDim) why += " dim=" + std::to_string(dim);
      if (!ch.saturated()) why += " unsaturated";
      if (!why.empty() && bad.size() < 200) bad += " n=" + std::to_string(n) + ":" + why;
    }
    RowCheck c;
    c.key = "theta-" + group + " n=" + ns_str(row);
    c.derived = derived;
    c.expected = (row.phiNu.empty() ? "empty" : row.phiNu) + " b=" + std::to_string(b) + " dim=" + std::to_string(row.dimension) + " -> " + row.orbit;
    c.ok = bad.empty();
    c.viaErrata = c.ok && !printedBad.empty();
    c.printedPhiOk = phiOk;
    if (!c.ok) c.note = "mismatch:" + bad;
    if (c.viaErrata) c.note = "printed row differs:" + printedBad + (row.errataNote.empty() ? "" : " (" + row.errataNote + ")");
    if (row.phiNu.find('\'') != std::string::npos)
      c.note += std::string(c.note.empty() ? "" : "; ") + (spanClosed ? "Levi-closed" : "not Levi-closed");
    out.push_back(c);
  }
  return out;
}

std::vector<RowCheck> check_classical_sweep(int maxRank, int maxN) {
  struct Family {
    std::string name;
    int minRank;
  };
  const std::vector<Family> families = {{"GL", 2}, {"SO_odd", 2}, {"Sp", 2}, {"SO_even", 3}, {"Spin_odd", 2}, {"Spin_even", 3}};
  std::vector<RowCheck> out;
  for (const auto& f : families) {
    for (int r = f.minRank; r <= maxRank; ++r) {
      for (int n = 1; n <= maxN; ++n) {
        const GroupLabel g = parse_group(f.name, r);
        CoverSpec spec = g.form == IsogenyForm::GL ? CoverSpec::gl(r, n) : CoverSpec(g, n);
        RowCheck c;
        c.key = "classical " + g.str() + " n=" + std::to_string(n);
        ThetaOrbitResult res = theta_orbit(spec);
        Partition pipe = theta_via_duality(spec).orbit;
        c.derived = res.orbit.str() + (res.viaClosedForm ? "" : " (pipeline fallback)");
        c.expected = pipe.str();
        c.ok = res.orbit == pipe;
        out.push_back(c);
      }
    }
  }
  return out;
}

std::vector<std::string> table_names() {
  std::vector<std::string> v;
  for (const auto& g : kGroups) v.push_back("orbits-" + g);
  for (const auto& g : kGroups) v.push_back("theta-" + g);
  v.push_back("classical");
  return v;
}

std::vector<RowCheck> check_table(const std::string& which) {
  if (which == "classical") return check_classical_sweep();
  if (which.rfind("orbits-", 0) == 0) return check_orbit_table(which.substr(7));
  if (which.rfind("theta-", 0) == 0) return check_theta_table(which.substr(6));
  return check_orbit_table(which);
}

}  // namespace thetaorb
