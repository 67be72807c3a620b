#include "walkzeta/json_io.hpp"

#include <json.hpp>

#include "walkzeta/errors.hpp"

namespace walkzeta {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  return j;
}

double require_number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw ParseError(std::string("missing numeric field \"") + key + "\"");
  return j.at(key).get<double>();
}

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw ParseError(std::string("missing integer field \"") + key + "\"");
  return j.at(key).get<int>();
}

Shift require_shift(const json& j) {
  if (!j.contains("shift") || !j.at("shift").is_string())
    throw ParseError("missing field \"shift\" (\"m\" or \"f\")");
  const std::string s = j.at("shift").get<std::string>();
  if (s.size() != 1) throw ParseError("\"shift\" must be \"m\" or \"f\"");
  return shift_from_char(s[0]);
}

WalkModel model_from_json(const json& j);

WalkModel qw_model_from_json(const json& j, const std::string& family) {
  if (family == "three_state_qw") return three_state_qw(require_number(j, "eta"), require_shift(j));
  if (family == "four_state_qw_1d")
    return four_state_qw_1d(require_number(j, "p"), require_shift(j));
  if (family == "four_state_qw_2d")
    return four_state_qw_2d(require_number(j, "p"), require_shift(j));
  throw ParseError("unknown model family \"" + family + "\"");
}

WalkModel grover_model_from_json(const json& j) {
  const Shift shift = require_shift(j);
  const double a = require_number(j, "a");
  if (!j.contains("lattice") || !j.at("lattice").is_string())
    throw ParseError(
        "generalized_grover needs \"lattice\": "
        "\"1d-3state\"|\"1d-4state\"|\"2d-4state\"|\"torus-d\"");
  const std::string lattice = j.at("lattice").get<std::string>();
  if (lattice == "1d-3state")
    return generalized_grover_coin(3, a, shift, GroverLattice::OneDimThreeState);
  if (lattice == "1d-4state")
    return generalized_grover_coin(4, a, shift, GroverLattice::OneDimFourState);
  if (lattice == "2d-4state")
    return generalized_grover_coin(4, a, shift, GroverLattice::TwoDimFourState);
  if (lattice == "torus-d") {
    const int d = require_int(j, "d");
    return generalized_grover_coin(2 * d, a, shift, GroverLattice::TorusD, d);
  }
  throw ParseError("unknown lattice \"" + lattice + "\"");
}

WalkModel rw_model_from_json(const json& j) {
  if (!j.contains("weights") || !j.at("weights").is_object())
    throw ParseError("multistate_rw needs \"weights\": {\"<displacement>\": p_x, ...}");
  std::map<int, double> weights;
  for (const auto& [key, value] : j.at("weights").items()) {
    if (!value.is_number()) throw ParseError("weight for \"" + key + "\" must be a number");
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(key, &used);
    } catch (const std::exception&) {
      throw ParseError("weight key \"" + key + "\" is not an integer displacement");
    }
    if (used != key.size())
      throw ParseError("weight key \"" + key + "\" is not an integer displacement");
    weights[x] = value.get<double>();
  }
  return multistate_rw(weights);
}

WalkModel model_from_json(const json& j) {
  if (j.contains("crw_of")) {
    const json& inner = j.at("crw_of");
    if (!inner.is_object()) throw ParseError("\"crw_of\" must hold a model object");
    return crw_from_qw(model_from_json(inner));
  }
  if (!j.contains("family") || !j.at("family").is_string())
    throw ParseError("model config needs \"family\" or \"crw_of\"");
  const std::string family = j.at("family").get<std::string>();
  if (family == "crw_of") throw ParseError("\"family\": \"crw_of\" needs a sibling \"crw_of\" object");
  if (family == "generalized_grover") return grover_model_from_json(j);
  if (family == "multistate_rw") return rw_model_from_json(j);
  return qw_model_from_json(j, family);
}

}  // namespace

WalkModel model_from_json_text(const std::string& text) {
  try {
    return model_from_json(parse(text));
  } catch (const json::exception& e) {
    throw ParseError(std::string("model config: ") + e.what());
  }
}

RegularGraph graph_from_json_text(const std::string& text) {
  try {
    const json j = parse(text);
    if (!j.contains("kind") || !j.at("kind").is_string())
      throw ParseError("graph config needs \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "cycle") return build_cycle(require_int(j, "N"));
    if (kind == "complete") return build_complete(require_int(j, "n"));
    if (kind == "petersen") return build_petersen();
    if (kind == "hypercube") return build_hypercube(require_int(j, "d"));
    if (kind == "torus") return build_torus_graph(require_int(j, "d"), require_int(j, "N"));
    throw ParseError("unknown graph kind \"" + kind + "\"");
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph config: ") + e.what());
  }
}

std::string zeta_report_to_json_text(const ZetaReport& report) {
  json j;
  j["model"] = report.model_id;
  j["u"] = {{"re", report.u.real()}, {"im", report.u.imag()}};
  j["grid"] = report.grid;
  j["route"] = report.route;
  j["zeta_inv"] = {{"re", report.zeta_inv.real()}, {"im", report.zeta_inv.imag()}};
  if (!report.c_r.empty()) {
    json coeffs = json::array();
    for (const Complex& c : report.c_r) coeffs.push_back({{"re", c.real()}, {"im", c.imag()}});
    j["c_r"] = std::move(coeffs);
  }
  json residuals = json::object();
  for (const auto& [name, value] : report.residuals) residuals[name] = value;
  j["residuals"] = std::move(residuals);
  return j.dump();
}

}  // namespace walkzeta
