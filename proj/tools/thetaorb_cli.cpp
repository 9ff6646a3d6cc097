// thetaorb: command-line front end.
//
//   thetaorb classify  --group Sp --rank 3 --n 3 --orbit 3,3
//   thetaorb classify  --group F4 --orbit B3 --n 8
//   thetaorb theta     --group SO_odd --rank 4 --n 3 [--trace]
//   thetaorb c-coeff   --r 4 --n 2 [--form 0,1]
//   thetaorb subsystem --group E8 --n 6
//   thetaorb tables    --which orbits-G2 [--diff]
//
// Exit status: 0 success, 1 invalid input, 2 internal check failure
// (including a disagreement reported by `tables --diff`).

#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "thetaorb/json_io.hpp"
#include "thetaorb/tables.hpp"

using namespace thetaorb;

namespace {

struct GroupArgs {
  std::string group;
  int rank = 0;
  int n = 1;
  std::string form = "0,1";
  int inv = 0;  // 0 = default for the form
};

void add_group_options(CLI::App* cmd, GroupArgs& g) {
  cmd->add_option("--group", g.group, "GL, SL, SO_odd (B), Sp (C), SO_even (D), Spin_odd, Spin_even, G2, F4, E6, E7, E8")->required();
  cmd->add_option("--rank", g.rank, "rank r for classical groups (GL_r, SO_{2r+1}, Sp_{2r}, SO_{2r})");
  cmd->add_option("--n", g.n, "degree of the cover")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--form", g.form, "GL_r only: a,b with Q = a sum y_i^2 + b sum_{i<j} y_i y_j");
  cmd->add_option("--inv", g.inv, "Inv_BD (default 2 for SO, 1 otherwise)");
}

CoverSpec make_spec(const GroupArgs& a) {
  GroupLabel g = parse_group(a.group, a.rank);
  if (g.form == IsogenyForm::GL) {
    auto comma = a.form.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--form expects a,b");
    return CoverSpec::gl(g.rank, a.n, std::stoi(a.form.substr(0, comma)), std::stoi(a.form.substr(comma + 1)));
  }
  return a.inv ? CoverSpec(g, a.n, a.inv) : CoverSpec(g, a.n);
}

void emit(const Json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-admissibility, theta wavefront orbits and Whittaker coefficients for covering groups"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  GroupArgs classifyArgs;
  std::string orbit;
  auto* classify = app.add_subcommand("classify", "quasi-admissibility and raisability of an orbit");
  add_group_options(classify, classifyArgs);
  classify->add_option("--orbit", orbit, "partition (3,3,1) or Bala-Carter label (A2+~A1)")->required();

  GroupArgs thetaArgs;
  bool trace = false;
  auto* theta = app.add_subcommand("theta", "theta wavefront orbit of a cover");
  add_group_options(theta, thetaArgs);
  theta->add_flag("--trace", trace, "include the duality pipeline (classical groups)");

  int cr = 0, cn = 1;
  std::string cform = "0,1";
  auto* ccoeff = app.add_subcommand("c-coeff", "leading coefficient c_O for a GL_r cover, both sides");
  ccoeff->add_option("--r", cr, "rank")->required()->check(CLI::Range(2, 10));
  ccoeff->add_option("--n", cn, "degree")->required()->check(CLI::PositiveNumber);
  ccoeff->add_option("--form", cform, "a,b");

  GroupArgs subArgs;
  auto* subsystem = app.add_subcommand("subsystem", "integral root subsystem of the exceptional character");
  add_group_options(subsystem, subArgs);

  std::string which;
  bool diff = false;
  int limit = 60;
  auto* tables = app.add_subcommand("tables", "reproduce the stored tables");
  tables->add_option("--which", which, "orbits-X, theta-X (X in G2 F4 E6 E7 E8), X (= orbits-X), classical")->required();
  tables->add_flag("--diff", diff, "compare derived columns with the stored data, one line per row");
  tables->add_option("--limit", limit, "largest n checked")->check(CLI::Range(1, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*classify) {
      GroupLabel g = parse_group(classifyArgs.group, classifyArgs.rank);
      Json j;
      if (g.exceptional()) {
        const auto& rec = ExceptionalTables::instance().lookup_orbit(g.str(), orbit);
        j = to_json(classify_exceptional(rec, classifyArgs.n));
        j["record"] = to_json(rec);
      } else {
        CoverSpec spec = make_spec(classifyArgs);
        j = to_json(classify_classical(parse_partition(orbit), spec));
        j["cover"] = spec.str();
      }
      emit(j, pretty);
    } else if (*theta) {
      CoverSpec spec = make_spec(thetaArgs);
      ThetaOrbitResult res = theta_orbit(spec);
      Json j = to_json(res);
      j["cover"] = spec.str();
      if (res.verdict) {
        ThetaPropertyReport rep = verify_theta_properties(spec);
        j["checks"] = {{"quasi_admissible", rep.quasiAdmissible}, {"not_raisable", rep.notRaisable}, {"persistent", rep.persistent}, {"messages", rep.messages}};
      }
      if (trace && !spec.group().exceptional()) {
        DualityTrace t = theta_via_duality(spec);
        const GroupLabel& g = spec.group();
        RootSystemData dual = g.family == 'A' ? spec.roots() : build(to_char(dual_type(g.classical_type())), g.rank);
        j["trace"] = to_json(t, dual);
      }
      emit(j, pretty);
    } else if (*ccoeff) {
      GroupArgs a;
      a.group = "GL";
      a.rank = cr;
      a.n = cn;
      a.form = cform;
      emit(to_json(c_coefficient(make_spec(a))), pretty);
    } else if (*subsystem) {
      CoverSpec spec = make_spec(subArgs);
      const GroupLabel& g = spec.group();
      Json j;
      j["cover"] = spec.str();
      auto ch = exceptional_character(spec);
      Json nt = Json::array(), nu = Json::array();
      for (Eigen::Index i = 0; i < ch.nu.size(); ++i) {
        nt.push_back(to_string(ch.nuTilde(i)));
        nu.push_back(to_string(ch.nu(i)));
      }
      j["nu_tilde"] = nt;
      j["nu"] = nu;
      j["saturated"] = ch.saturated();
      if (g.exceptional()) {
        j["subsystem"] = to_json(integral_subsystem(spec.roots(), ch.nuTilde), spec.roots());
      } else {
        DualityTrace t = theta_via_duality(spec);
        RootSystemData dual = g.family == 'A' ? spec.roots() : build(to_char(dual_type(g.classical_type())), g.rank);
        j["dual_subsystem"] = to_json(t.integral, dual);
        Json f = Json::array();
        for (const auto& c : t.factors) f.push_back(c.str());
        j["levi_factors"] = f;
      }
      emit(j, pretty);
    } else if (*tables) {
      std::vector<RowCheck> rows;
      if (which == "classical") rows = check_classical_sweep();
      else if (which.rfind("theta-", 0) == 0) rows = check_theta_table(which.substr(6), limit);
      else rows = check_orbit_table(which.rfind("orbits-", 0) == 0 ? which.substr(7) : which, limit);
      bool allOk = true;
      if (diff) {
        for (const auto& r : rows) {
          std::cout << r.line() << "\n";
          allOk = allOk && r.ok;
        }
      } else {
        Json a = Json::array();
        for (const auto& r : rows) {
          a.push_back({{"key", r.key}, {"derived", r.derived}, {"expected", r.expected}, {"ok", r.ok}, {"via_errata", r.viaErrata}, {"note", r.note}});
          allOk = allOk && r.ok;
        }
        emit(a, pretty);
      }
      return allOk ? 0 : 2;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
