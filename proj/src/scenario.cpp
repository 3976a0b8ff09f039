#include "ewt/scenario.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ewt {

const char* kCodeVersion = "ewt 0.1.0";

using nlohmann::json;

namespace {

DerivScheme scheme_from(const std::string& s) {
  if (s == "fd4") return DerivScheme::FD4;
  if (s == "spectral") return DerivScheme::Spectral;
  fail(ErrorCode::ConfigError, "grid.scheme must be fd4|spectral, got '" + s + "'");
}

const char* scheme_name(DerivScheme s) { return s == DerivScheme::FD4 ? "fd4" : "spectral"; }

}  // namespace

Scenario scenario_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorCode::ConfigError, std::string("JSON parse: ") + e.what());
  }
  Scenario sc;
  try {
    sc.name = j.value("name", sc.name);
    if (j.contains("eos")) {
      const auto& e = j["eos"];
      const std::string fam = e.value("family", "polytropic");
      if (fam == "polytropic")
        sc.eos = EquationOfState::polytropic(e.value("gamma", 2.0), e.value("K", 0.5),
                                             e.value("rho_bar", 1.0));
      else if (fam == "chaplygin")
        sc.eos = EquationOfState::chaplygin(e.value("C0", 0.0), e.value("C1", 1.0),
                                            e.value("rho_bar", 1.0));
      else
        fail(ErrorCode::ConfigError, "eos.family must be polytropic|chaplygin");
    }
    if (j.contains("grid")) {
      const auto& gj = j["grid"];
      auto n = gj.value("n", std::vector<int>{256, 1, 1});
      auto L = gj.value("L", std::vector<double>{1.0, 1.0, 1.0});
      if (n.size() != 3 || L.size() != 3) fail(ErrorCode::ConfigError, "grid.n/L need 3 entries");
      sc.grid = Grid::make(n[0], n[1], n[2], L[0], L[1], L[2]);
      if (gj.contains("scheme")) {
        auto s = gj["scheme"].get<std::vector<std::string>>();
        for (int a = 0; a < 3 && a < int(s.size()); ++a) sc.grid.scheme[a] = scheme_from(s[a]);
      }
    }
    if (j.contains("init")) {
      const auto& ij = j["init"];
      sc.init.delta = ij.value("delta", sc.init.delta);
      sc.init.epsilon = ij.value("epsilon", sc.init.epsilon);
      const std::string prof = ij.value("profile", "sine");
      if (prof == "sine")
        sc.init.profile = PlaneProfile::Kind::Sine;
      else if (prof == "bump")
        sc.init.profile = PlaneProfile::Kind::Bump;
      else
        fail(ErrorCode::ConfigError, "init.profile must be sine|bump");
      sc.init.bump_center = ij.value("bump_center", sc.init.bump_center);
      sc.init.bump_width = ij.value("bump_width", sc.init.bump_width);
      const std::string pert = ij.value("perturbation", "none");
      if (pert == "none")
        sc.init.perturbation = InitialDataParams::Perturbation::None;
      else if (pert == "irrotational")
        sc.init.perturbation = InitialDataParams::Perturbation::Irrotational;
      else if (pert == "vortical")
        sc.init.perturbation = InitialDataParams::Perturbation::Vortical;
      else
        fail(ErrorCode::ConfigError, "init.perturbation must be none|irrotational|vortical");
    }
    sc.cfl = j.value("cfl", sc.cfl);
    sc.t_max = j.value("t_max", sc.t_max);
    sc.mu_stop = j.value("mu_stop", sc.mu_stop);
    sc.eikonal = j.value("eikonal", sc.eikonal);
    sc.grad_guard_factor = j.value("grad_guard_factor", sc.grad_guard_factor);
    sc.filter = j.value("filter", sc.filter);
    sc.seed = j.value("seed", sc.seed);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorCode::ConfigError, std::string("scenario field: ") + e.what());
  }
  return sc;
}

Scenario scenario_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ConfigError, "cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return scenario_from_json(ss.str());
}

std::string scenario_to_json(const Scenario& sc) {
  json j;
  j["name"] = sc.name;
  if (sc.eos.family == EquationOfState::Family::Polytropic)
    j["eos"] = {{"family", "polytropic"},
                {"gamma", sc.eos.gamma},
                {"K", sc.eos.K},
                {"rho_bar", sc.eos.rho_bar}};
  else
    j["eos"] = {{"family", "chaplygin"},
                {"C0", sc.eos.C0},
                {"C1", sc.eos.C1},
                {"rho_bar", sc.eos.rho_bar}};
  j["grid"] = {{"n", {sc.grid.n1, sc.grid.n2, sc.grid.n3}},
               {"L", {sc.grid.L1, sc.grid.L2, sc.grid.L3}},
               {"scheme",
                {scheme_name(sc.grid.scheme[0]), scheme_name(sc.grid.scheme[1]),
                 scheme_name(sc.grid.scheme[2])}}};
  const char* prof = sc.init.profile == PlaneProfile::Kind::Sine ? "sine" : "bump";
  const char* pert = sc.init.perturbation == InitialDataParams::Perturbation::None
                         ? "none"
                         : (sc.init.perturbation == InitialDataParams::Perturbation::Irrotational
                                ? "irrotational"
                                : "vortical");
  j["init"] = {{"delta", sc.init.delta},       {"epsilon", sc.init.epsilon},
               {"profile", prof},              {"bump_center", sc.init.bump_center},
               {"bump_width", sc.init.bump_width}, {"perturbation", pert}};
  j["cfl"] = sc.cfl;
  j["t_max"] = sc.t_max;
  j["mu_stop"] = sc.mu_stop;
  j["eikonal"] = sc.eikonal;
  j["grad_guard_factor"] = sc.grad_guard_factor;
  j["filter"] = sc.filter;
  j["seed"] = sc.seed;
  return j.dump(2);
}

uint64_t scenario_hash(const Scenario& sc) {
  const std::string s = scenario_to_json(sc);
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<std::string> validate_scenario(const Scenario& sc) {
  std::vector<std::string> problems;
  const EosDiagnostics d = validate(sc.eos);
  if (!d.hyperbolic) problems.push_back("eos: not hyperbolic on the sampled interval");
  if (sc.init.delta > 0.0 && sc.init.epsilon > sc.init.delta / 10.0)
    problems.push_back("init: size hierarchy violated, need epsilon <= delta/10");
  if (sc.init.delta < 0.0 || sc.init.epsilon < 0.0)
    problems.push_back("init: amplitudes must be nonnegative");
  if (!(sc.cfl > 0.0 && sc.cfl < 1.0)) problems.push_back("cfl: must lie in (0,1)");
  if (!(sc.t_max > 0.0)) problems.push_back("t_max: must be positive");
  if (!(sc.mu_stop > 0.0 && sc.mu_stop < 1.0)) problems.push_back("mu_stop: must lie in (0,1)");
  if (sc.eos.is_chaplygin() && sc.eikonal)
    problems.push_back(
        "warning: chaplygin with shock diagnostics requested; simple waves do not steepen "
        "(NoShock expected)");
  return problems;
}

}  // namespace ewt
