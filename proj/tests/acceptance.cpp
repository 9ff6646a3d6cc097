// Acceptance run: one PASS/FAIL line per criterion.  A criterion whose only
// failures are rows recorded as errata in the data files is still printed as
// FAIL (with the rows listed) but does not make the process exit non-zero.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "thetaorb/admissibility.hpp"
#include "thetaorb/exceptional_data.hpp"
#include "thetaorb/orbit_duality.hpp"
#include "thetaorb/tables.hpp"
#include "thetaorb/theta_wavefront.hpp"
#include "thetaorb/weyl_characters.hpp"

using namespace thetaorb;

namespace {

struct Outcome {
  int checks = 0;
  std::vector<std::string> failures;  // unexplained
  std::vector<std::string> recorded;  // failures that match a recorded erratum
  std::string detail;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

const char* kGroups[] = {"G2", "F4", "E6", "E7", "E8"};

Outcome criterion1() {
  Outcome o;
  for (const char* g : kGroups)
    for (const auto& c : check_orbit_table(g, 60)) o.expect(c.ok, c.line());
  auto anchor = [&](const char* g, const char* orbit, std::set<int> want) {
    const auto& rec = ExceptionalTables::instance().lookup_orbit(g, orbit);
    std::set<int> got;
    for (int n = 1; n <= 60; ++n)
      if (classify_exceptional(rec, n).quasiAdmissible) got.insert(n);
    o.expect(got == want, std::string("anchor ") + g + " " + orbit);
  };
  anchor("G2", "~A1", {2});
  anchor("F4", "A2+~A1", {4, 12});
  anchor("E8", "A7", {8});
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const char* g : kGroups)
    for (const auto& c : check_theta_table(g, 60)) {
      ++o.checks;
      // only the component list counts here; dimension errata are data checks
      if (!c.ok)
        o.failures.push_back(c.line());
      else if (!c.printedPhiOk)
        o.recorded.push_back(c.key + ": " + c.note);
    }
  // spot value
  const RootSystemData e8 = build('E', 8);
  auto ch = exceptional_character(CoverSpec(parse_group("E8", 0), 6));
  o.expect(integral_subsystem(e8, ch.nuTilde).str() == "A4+A3", "E8 n=6 -> A4+A3");
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const auto& c : check_classical_sweep(12, 10)) o.expect(c.ok, c.line());
  o.expect(theta_orbit(CoverSpec(parse_group("SO_odd", 4), 3)).orbit == Partition{3, 3, 3}, "SO_9 n=3");
  o.expect(theta_orbit(CoverSpec::gl(7, 3)).orbit == Partition{3, 3, 1}, "GL_7 n=3");
  o.expect(theta_orbit(CoverSpec(parse_group("Sp", 4), 6)).orbit == Partition{4, 2, 2}, "Sp_8 n=6");
  o.expect(theta_orbit(CoverSpec(parse_group("Sp", 3), 3)).orbit == Partition{3, 3}, "Sp_6 n=3");
  // the case formulas verbatim, written out independently here
  for (int r = 2; r <= 12; ++r)
    for (int n = 1; n <= 10; ++n) {
      if (n % 2 == 1) {
        const int a = r / n, b = r % n, m = (n - 1) / 2;
        if (b <= m) {
          std::vector<int> v(static_cast<std::size_t>(2 * a), n);
          v.push_back(2 * b + 1);
          o.expect(theta_orbit(CoverSpec(parse_group("SO_odd", r), n)).orbit == Partition(v),
                   "SO_" + std::to_string(2 * r + 1) + " n=" + std::to_string(n) + " case formula");
        }
        if (r >= 3) {
          const int ad = (r - 1) / n, bd = (r - 1) % n;
          if (bd <= m) {
            std::vector<int> v(static_cast<std::size_t>(2 * ad), n);
            v.push_back(2 * bd + 1);
            v.push_back(1);
            o.expect(theta_orbit(CoverSpec(parse_group("SO_even", r), n)).orbit == Partition(v),
                     "SO_" + std::to_string(2 * r) + " n=" + std::to_string(n) + " case formula");
          }
        }
      }
    }
  return o;
}

Outcome criterion4() {
  Outcome o;
  int classical = 0;
  for (const char* f : {"GL", "SO_odd", "Sp", "SO_even"})
    for (int r = std::string(f) == "SO_even" ? 3 : 2; r <= 12; ++r)
      for (int n = 1; n <= 10; ++n) {
        GroupLabel g = parse_group(f, r);
        CoverSpec spec = g.form == IsogenyForm::GL ? CoverSpec::gl(r, n) : CoverSpec(g, n);
        auto rep = verify_theta_properties(spec);
        o.expect(rep.ok(), spec.str() + " " + rep.result.orbit.str());
        ++classical;
      }
  int exceptional = 0;
  for (const char* g : kGroups)
    for (int n = 1; n <= 60; ++n) {
      auto rep = verify_theta_properties(CoverSpec(parse_group(g, 0), n));
      o.expect(rep.ok(), std::string(g) + " n=" + std::to_string(n) + " " + rep.result.label);
      ++exceptional;
    }
  o.detail = std::to_string(classical) + " classical + " + std::to_string(exceptional) + " exceptional covers";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const ClassicalType types[] = {ClassicalType::B, ClassicalType::C, ClassicalType::D};
  for (int m = 1; m <= 20; ++m)
    for (const auto& p : oracle::partitions(m))
      for (auto t : types) {
        if ((t == ClassicalType::B) != (m % 2 == 1)) continue;
        auto c = oracle::collapse(p, t);
        auto e = oracle::expansion(p, t);
        o.expect(c && collapse(p, t) == *c, "collapse " + p.str() + " " + to_char(t));
        if (e) {
          o.expect(expansion(p, t) == *e, "expansion " + p.str() + " " + to_char(t));
        } else {
          // no unique smallest dominating partition: the library must refuse
          bool threw = false;
          try {
            expansion(p, t);
          } catch (const std::domain_error&) {
            threw = true;
          }
          o.expect(threw, "expansion " + p.str() + " " + to_char(t) + " should not exist");
        }
      }
  for (int m = 0; m <= 30; ++m)
    for (const auto& p : partitions_of(m)) o.expect(transpose(transpose(p)) == p && transpose(p) == oracle::transpose(p), "transpose " + p.str());
  for (auto t : {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D})
    for (int m = 2; m <= 16; ++m) {
      std::vector<Partition> valid;
      std::vector<Partition> dual;
      for (const auto& p : partitions_of(m))
        if (oracle::valid(p, t) && (t == ClassicalType::A || (t == ClassicalType::B) == (m % 2 == 1))) {
          valid.push_back(p);
          dual.push_back(d_LS(p, t));
        }
      for (std::size_t i = 0; i < valid.size(); ++i) {
        o.expect(d_LS(d_LS(dual[i], t), t) == dual[i], "d^3 " + valid[i].str());
        for (std::size_t j = 0; j < valid.size(); ++j)
          if (oracle::dom(valid[i], valid[j]) && !oracle::dom(dual[j], dual[i]))
            o.expect(false, "order reversal " + valid[i].str() + " " + valid[j].str());
      }
    }
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (int r = 2; r <= 6; ++r)
    for (int n = 1; n <= 4; ++n)
      for (int a = -2; a <= 2; ++a)
        for (int s : {-1, 1}) {
          const int b = 2 * a - s;
          const std::string key = "r=" + std::to_string(r) + " n=" + std::to_string(n) + " (a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")";
          CCoefficientAudit audit;
          try {
            audit = c_coefficient(CoverSpec::gl(r, n, a, b));
          } catch (const std::logic_error& e) {
            o.expect(false, key + ": " + e.what());
            continue;
          }
          o.expect(audit.lhs == audit.rhs, key + " lhs != rhs");
          if (n == 1) o.expect(audit.value == 1, key + " c != 1");
          for (const auto& [mu, d] : audit.dimTable)
            if (mu[0] > audit.nAlpha) o.expect(d == 0, key + " dim_wh" + mu.str());
        }
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (int q1 = -100; q1 <= 100; ++q1)
    for (int q2 = -100; q2 <= 100; ++q2)
      for (int n = 1; n <= 100; ++n) {
        const BdPair p{q1, q2};
        if (splits(p, n) != splits_by_cases(p, n))
          o.expect(false, "(" + std::to_string(q1) + "," + std::to_string(q2) + ") n=" + std::to_string(n));
        else
          ++o.checks;
      }
  for (int n = 2; n <= 60; ++n) {
    o.expect(!splits({1, 0}, n), "zero orbit splits at n=" + std::to_string(n));
    for (const char* g : kGroups)
      o.expect(classify_exceptional("0", g, n).raisable == Raisability::Raisable, std::string("zero orbit of ") + g);
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
    double limitSeconds;
  };
  const std::vector<Criterion> criteria = {
      {1, "exceptional stabilizer tables reproduce", criterion1, 5},
      {2, "theta-table integral subsystems reproduce", criterion2, 60},
      {3, "closed forms agree with the duality pipeline", criterion3, 30},
      {4, "theta orbits quasi-admissible and not raisable", criterion4, 60},
      {5, "partition duality oracles", criterion5, 60},
      {6, "leading coefficient identity", criterion6, 120},
      {7, "splitting criterion self-consistency", criterion7, 60},
  };
  int unexplained = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limitSeconds) o.failures.push_back("runtime " + std::to_string(secs) + "s over the limit");
    const bool pass = o.failures.empty() && o.recorded.empty();
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << o.checks << " checks, "
         << static_cast<int>(secs * 1000) << " ms";
    if (!o.detail.empty()) line << ", " << o.detail;
    line << ")";
    if (!o.failures.empty()) line << " -- " << o.failures.size() << " unexplained failure(s)";
    if (!o.recorded.empty()) line << " -- " << o.recorded.size() << " row(s) disagree with the printed table (recorded errata)";
    std::cout << line.str() << "\n";
    for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i) std::cout << "    " << o.failures[i] << "\n";
    for (const auto& r : o.recorded) std::cout << "    erratum " << r << "\n";
    unexplained += static_cast<int>(o.failures.size());
  }
  return unexplained == 0 ? 0 : 1;
}
