#pragma once

#include <string>
#include <vector>

namespace thetaorb {

// One reproduced row: `key` identifies it, `derived` and `expected` are
// plain-text renderings, `ok` says whether they agree.
struct RowCheck {
  std::string key;
  std::string derived;
  std::string expected;
  bool ok = false;
  bool viaErrata = false;  // ok only after applying the row's recorded errata
  bool printedPhiOk = true;  // theta rows: the printed component list itself matches
  std::string note;

  std::string line() const;  // stable one-line rendering
};

// Stabilizer tables: quasi-admissible set for n <= limit against the printed
// condition, and the raisable set on rows carrying tau-data.
std::vector<RowCheck> check_orbit_table(const std::string& group, int limit = 60);

// Theta tables: for each n <= limit the integral subsystem of the
// exceptional character, the b-value of the j-label (number of positive
// roots) and the orbit dimension |Phi| - |Phi_nu|.
std::vector<RowCheck> check_theta_table(const std::string& group, int limit = 60);

// Classical sweep: closed form against the duality pipeline for GL, SO odd,
// Sp, SO even (and the Spin forms), ranks up to maxRank, n up to maxN.
std::vector<RowCheck> check_classical_sweep(int maxRank = 12, int maxN = 10);

// "orbits-G2", "theta-E8", "classical", or a bare group name (= orbits-X).
std::vector<RowCheck> check_table(const std::string& which);
std::vector<std::string> table_names();

}  // namespace thetaorb
