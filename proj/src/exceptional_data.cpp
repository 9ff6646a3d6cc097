#include "thetaorb/exceptional_data.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#ifndef THETAORB_DEFAULT_DATA_DIR
#define THETAORB_DEFAULT_DATA_DIR "data"
#endif

namespace thetaorb {

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t') out += c;
  return out;
}

std::vector<int> parse_int_list(const std::string& s, const std::string& whole) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("bad n-condition '" + whole + "'");
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 1) throw std::invalid_argument("bad n-condition '" + whole + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("bad n-condition '" + whole + "'");
  return out;
}

BdPair pair_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected a [Q1, Q2] pair, got " + j.dump());
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

std::vector<BdPair> pairs_from_json(const nlohmann::json& j) {
  std::vector<BdPair> out;
  for (const auto& e : j) out.push_back(pair_from_json(e));
  return out;
}

std::optional<bool> opt_bool(const nlohmann::json& row, const char* key) {
  if (!row.contains(key) || row[key].is_null()) return std::nullopt;
  return row[key].get<bool>();
}

// Reads a JSONL file: '#' lines and blank lines are skipped; the first
// object must be a schema header naming `schema`.
std::vector<nlohmann::json> read_jsonl(const std::string& path, const std::string& schema) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open data file " + path);
  std::vector<nlohmann::json> rows;
  std::string line;
  int lineNo = 0;
  bool sawHeader = false;
  while (std::getline(in, line)) {
    ++lineNo;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineNo) + ": " + e.what());
    }
    if (!sawHeader) {
      if (!j.contains("schema") || j["schema"] != schema)
        throw std::runtime_error(path + ": missing schema header '" + schema + "'");
      sawHeader = true;
      continue;
    }
    rows.push_back(std::move(j));
  }
  if (!sawHeader) throw std::runtime_error(path + ": empty data file");
  return rows;
}

}  // namespace

NCondition NCondition::parse(const std::string& text) {
  NCondition c;
  const std::string s = strip_spaces(text);
  c.text_ = s;
  if (s == "n.a." || s == "n.a" || s == "na") {
    c.kind_ = Kind::NotApplicable;
    c.text_ = "n.a.";
  } else if (s == "all") {
    c.kind_ = Kind::All;
  } else if (s.rfind("n>=", 0) == 0) {
    c.kind_ = Kind::AtLeast;
    c.values_ = parse_int_list(s.substr(3), text);
  } else if (s.rfind("n!=", 0) == 0) {
    c.kind_ = Kind::NotIn;
    c.values_ = parse_int_list(s.substr(3), text);
  } else if (s.rfind("n=", 0) == 0) {
    c.kind_ = Kind::In;
    c.values_ = parse_int_list(s.substr(2), text);
  } else if (s.rfind("n|", 0) == 0) {
    c.kind_ = Kind::DividesN;
    c.values_ = parse_int_list(s.substr(2), text);
  } else if (s.size() > 2 && s.substr(s.size() - 2) == "|n") {
    c.kind_ = Kind::MultipleOf;
    c.values_ = parse_int_list(s.substr(0, s.size() - 2), text);
  } else {
    throw std::invalid_argument("bad n-condition '" + text + "'");
  }
  if ((c.kind_ == Kind::AtLeast || c.kind_ == Kind::DividesN || c.kind_ == Kind::MultipleOf) && c.values_.size() != 1)
    throw std::invalid_argument("bad n-condition '" + text + "'");
  return c;
}

bool NCondition::holds(int n) const {
  switch (kind_) {
    case Kind::NotApplicable: throw std::logic_error("condition is not applicable");
    case Kind::All: return true;
    case Kind::In: return std::find(values_.begin(), values_.end(), n) != values_.end();
    case Kind::NotIn: return std::find(values_.begin(), values_.end(), n) == values_.end();
    case Kind::AtLeast: return n >= values_[0];
    case Kind::DividesN: return values_[0] % n == 0;
    case Kind::MultipleOf: return n % values_[0] == 0;
  }
  return false;
}

std::set<int> NCondition::up_to(int limit) const {
  std::set<int> out;
  for (int n = 1; n <= limit; ++n)
    if (holds(n)) out.insert(n);
  return out;
}

bool ThetaTableRecord::contains(int n) const {
  if (std::find(nValues.begin(), nValues.end(), n) != nValues.end()) return true;
  return nFrom && n >= *nFrom;
}

std::string ThetaTableRecord::phi_effective(int n) const {
  auto it = phiConflicts.find(n);
  return it == phiConflicts.end() ? phi_effective() : it->second.phi;
}

std::pair<int, int> parse_j_label(const std::string& label) {
  auto open = label.find('{');
  auto comma = label.find(',', open);
  auto close = label.find('}', comma);
  if (open == std::string::npos || comma == std::string::npos || close == std::string::npos)
    throw std::invalid_argument("bad j-induction label '" + label + "'");
  return {std::stoi(label.substr(open + 1, comma - open - 1)), std::stoi(label.substr(comma + 1, close - comma - 1))};
}

std::string normalize_orbit_label(const std::string& label) {
  std::string s = strip_spaces(label);
  if (s == "{0}" || s == "{}" || s.empty()) return "0";
  return s;
}

ExceptionalTables ExceptionalTables::load(const std::string& dir) {
  ExceptionalTables t;
  for (const auto& row : read_jsonl(dir + "/exceptional_orbits.jsonl", "thetaorb.exceptional_orbits")) {
    ExceptionalOrbitRecord r;
    r.group = row.at("group").get<std::string>();
    r.orbit = normalize_orbit_label(row.at("orbit").get<std::string>());
    r.special = opt_bool(row, "special");
    r.even = opt_bool(row, "even");
    r.stabilizerDer = row.value("stabilizer", "");
    r.factors = pairs_from_json(row.at("factors"));
    if (row.contains("tau")) r.tau = pair_from_json(row["tau"]);
    r.printedQuasiAdm = NCondition::parse(row.at("quasi_adm").get<std::string>());
    r.printedRaisable = NCondition::parse(row.at("raisable").get<std::string>());
    r.source = row.at("source").get<std::string>();
    if (r.source != "table" && r.source != "supplement")
      throw std::runtime_error("unknown source '" + r.source + "' for " + r.group + " " + r.orbit);
    if (row.contains("alt_factors")) r.altFactors = pairs_from_json(row["alt_factors"]);
    if (row.contains("alt_quasi_adm")) r.altQuasiAdm = NCondition::parse(row["alt_quasi_adm"].get<std::string>());
    r.note = row.value("note", "");
    for (const auto& other : t.orbits_)
      if (other.group == r.group && other.orbit == r.orbit)
        throw std::runtime_error("duplicate orbit record " + r.group + " " + r.orbit);
    t.orbits_.push_back(std::move(r));
  }
  for (const auto& row : read_jsonl(dir + "/theta_tables.jsonl", "thetaorb.theta_tables")) {
    ThetaTableRecord r;
    r.group = row.at("group").get<std::string>();
    r.nValues = row.at("n").get<std::vector<int>>();
    if (row.contains("n_from")) r.nFrom = row["n_from"].get<int>();
    r.phiNu = row.at("phi").get<std::string>();
    r.phiNuErrata = row.value("phi_errata", "");
    r.jInductionLabel = row.at("j").get<std::string>();
    r.orbit = normalize_orbit_label(row.at("orbit").get<std::string>());
    r.dimension = row.at("dim").get<int>();
    if (row.contains("dim_errata")) r.dimensionErrata = row["dim_errata"].get<int>();
    if (row.contains("phi_conflicts"))
      for (const auto& [k, v] : row["phi_conflicts"].items()) {
        const int n = std::stoi(k);
        if (!r.contains(n)) throw std::runtime_error("phi_conflicts degree " + k + " outside its row for " + r.group);
        r.phiConflicts[n] = {v.at("phi").get<std::string>(), v.at("b").get<int>(), v.at("dim").get<int>()};
      }
    r.errataNote = row.value("errata_note", "");
    r.leviRegular = row.value("levi_regular", false);
    t.theta_.push_back(std::move(r));
  }
  // every degree must be covered exactly once per group
  for (const auto& r : t.theta_) {
    for (int n = 1; n <= 64; ++n) {
      int hits = 0;
      for (const auto& s : t.theta_)
        if (s.group == r.group && s.contains(n)) ++hits;
      if (hits != 1) throw std::runtime_error("theta rows for " + r.group + " cover n=" + std::to_string(n) + " " + std::to_string(hits) + " times");
    }
  }
  return t;
}

std::string ExceptionalTables::default_data_dir() {
  if (const char* env = std::getenv("THETAORB_DATA_DIR"); env && *env) return env;
  return THETAORB_DEFAULT_DATA_DIR;
}

const ExceptionalTables& ExceptionalTables::instance() {
  static std::once_flag flag;
  static ExceptionalTables tables;
  std::call_once(flag, [] { tables = load(default_data_dir()); });
  return tables;
}

const ExceptionalOrbitRecord& ExceptionalTables::lookup_orbit(const std::string& group, const std::string& orbit) const {
  const std::string key = normalize_orbit_label(orbit);
  for (const auto& r : orbits_)
    if (r.group == group && r.orbit == key) return r;
  throw std::out_of_range("no record for orbit " + key + " of " + group);
}

const ThetaTableRecord& ExceptionalTables::lookup_theta(const std::string& group, int n) const {
  if (n < 1) throw std::invalid_argument("the degree n must be positive");
  for (const auto& r : theta_)
    if (r.group == group && r.contains(n)) return r;
  throw std::out_of_range("no theta row for " + group + " n=" + std::to_string(n));
}

std::vector<ExceptionalOrbitRecord> ExceptionalTables::orbits_of(const std::string& group) const {
  std::vector<ExceptionalOrbitRecord> out;
  std::copy_if(orbits_.begin(), orbits_.end(), std::back_inserter(out), [&](const auto& r) { return r.group == group; });
  return out;
}

std::vector<ThetaTableRecord> ExceptionalTables::theta_rows_of(const std::string& group) const {
  std::vector<ThetaTableRecord> out;
  std::copy_if(theta_.begin(), theta_.end(), std::back_inserter(out), [&](const auto& r) { return r.group == group; });
  return out;
}

namespace {

std::string pair_str(const BdPair& p) { return "(" + std::to_string(p.q1) + "," + std::to_string(p.q2) + ")"; }

Verdict verdict_from(const std::vector<BdPair>& factors, const std::optional<BdPair>& tau, int n) {
  if (n < 1) throw std::invalid_argument("the degree n must be positive");
  Verdict v;
  for (const auto& f : factors) {
    bool ok = splits(f, n);
    v.quasiEvidence.push_back({"factor " + pair_str(f), "splits at n=" + std::to_string(n), ok});
    v.quasiAdmissible = v.quasiAdmissible && ok;
  }
  if (tau) {
    bool s = splits(*tau, n);
    v.raiseEvidence.push_back({"tau " + pair_str(*tau), "does not split at n=" + std::to_string(n), !s});
    v.raisable = s ? Raisability::NotRaisableByCriterion : Raisability::Raisable;
  }
  return v;
}

}  // namespace

Verdict classify_exceptional(const ExceptionalOrbitRecord& rec, int n) { return verdict_from(rec.factors, rec.tau, n); }

Verdict classify_exceptional(const std::string& orbit, const std::string& group, int n) {
  return classify_exceptional(ExceptionalTables::instance().lookup_orbit(group, orbit), n);
}

Verdict classify_exceptional_alt(const ExceptionalOrbitRecord& rec, int n) {
  return verdict_from(rec.altFactors.empty() ? rec.factors : rec.altFactors, rec.tau, n);
}

}  // namespace thetaorb
