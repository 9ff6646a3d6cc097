#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "thetaorb/admissibility.hpp"

namespace thetaorb {

// A set of degrees n as printed in the tables: "n=1,3", "n>=2", "n!=2",
// "n!=1,2,4,8", "n|24", "7|n", "all", "n.a." (not applicable).
class NCondition {
 public:
  NCondition() = default;
  static NCondition parse(const std::string& text);

  bool applicable() const { return kind_ != Kind::NotApplicable; }
  bool holds(int n) const;
  const std::string& text() const { return text_; }
  std::set<int> up_to(int limit) const;

 private:
  enum class Kind { NotApplicable, All, In, NotIn, AtLeast, DividesN, MultipleOf };
  Kind kind_ = Kind::NotApplicable;
  std::vector<int> values_;
  std::string text_ = "n.a.";
};

struct ExceptionalOrbitRecord {
  std::string group;  // "G2", "F4", "E6", "E7", "E8"
  std::string orbit;  // Bala-Carter label, ASCII ("A2+~A1", "0" for the zero orbit)
  std::optional<bool> special, even;
  std::string stabilizerDer;
  std::vector<BdPair> factors;
  std::optional<BdPair> tau;  // (Q1^tau, m)
  NCondition printedQuasiAdm;
  NCondition printedRaisable;
  // "table" rows are transcribed; "supplement" rows are added so that every
  // theta orbit can be looked up (distinguished and zero orbits)
  std::string source;
  std::vector<BdPair> altFactors;      // variant read from the accompanying prose, if any
  std::optional<NCondition> altQuasiAdm;
  std::string note;
};

struct ThetaTableRecord {
  std::string group;
  std::vector<int> nValues;    // listed degrees
  std::optional<int> nFrom;    // open-ended tail "n >= nFrom"
  std::string phiNu;           // component list as printed
  std::string phiNuErrata;     // corrected list when the printed one is inconsistent
  std::string jInductionLabel; // "phi_{8,3}''"
  std::string orbit;
  int dimension = 0;
  std::optional<int> dimensionErrata;      // corrected dimension
  struct Conflict {
    std::string phi;
    int b = 0;
    int dimension = 0;
  };
  std::map<int, Conflict> phiConflicts;    // degrees where the printed row is wrong, with recomputed values
  std::string errataNote;
  bool leviRegular = false;

  bool contains(int n) const;
  const std::string& phi_effective() const { return phiNuErrata.empty() ? phiNu : phiNuErrata; }
  std::string phi_effective(int n) const;
  int dimension_effective() const { return dimensionErrata.value_or(dimension); }
  bool has_errata() const { return !phiNuErrata.empty() || dimensionErrata || !phiConflicts.empty(); }
};

// (d, b) from "phi_{d,b}" with any trailing primes
std::pair<int, int> parse_j_label(const std::string& label);

class ExceptionalTables {
 public:
  // Loads exceptional_orbits.jsonl and theta_tables.jsonl from `dir`.
  static ExceptionalTables load(const std::string& dir);
  // THETAORB_DATA_DIR if set, else the directory compiled into the library.
  static const ExceptionalTables& instance();
  static std::string default_data_dir();

  const ExceptionalOrbitRecord& lookup_orbit(const std::string& group, const std::string& orbit) const;
  const ThetaTableRecord& lookup_theta(const std::string& group, int n) const;

  const std::vector<ExceptionalOrbitRecord>& orbits() const { return orbits_; }
  const std::vector<ThetaTableRecord>& theta_rows() const { return theta_; }
  std::vector<ExceptionalOrbitRecord> orbits_of(const std::string& group) const;
  std::vector<ThetaTableRecord> theta_rows_of(const std::string& group) const;

 private:
  std::vector<ExceptionalOrbitRecord> orbits_;
  std::vector<ThetaTableRecord> theta_;
};

// Normalizes a Bala-Carter label: strips spaces, "{0}" -> "0".
std::string normalize_orbit_label(const std::string& label);

// Prop.-style factorwise criterion over the stored data.
Verdict classify_exceptional(const ExceptionalOrbitRecord& rec, int n);
Verdict classify_exceptional(const std::string& orbit, const std::string& group, int n);

// Same verdict computed with the prose variant of the factor list.
Verdict classify_exceptional_alt(const ExceptionalOrbitRecord& rec, int n);

}  // namespace thetaorb
