// walkzeta command-line front end. Talks to the core exclusively through the
// C API in walkzeta.h; JSON/CSV plumbing is local.

#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "walkzeta.h"

namespace {

using nlohmann::json;

constexpr int kExitChecksFailed = 1;
constexpr int kExitBadConfig = 2;

std::string fmt(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

[[noreturn]] void die(const std::string& message) {
  std::cerr << "walkzeta: " << message << "\n";
  std::exit(kExitBadConfig);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) die("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A spec argument is inline JSON when it starts with '{', otherwise a path.
std::string resolve_spec(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  return read_file(arg);
}

struct ModelHandle {
  wz_model* ptr = nullptr;
  ~ModelHandle() { wz_model_free(ptr); }
};

struct GraphHandle {
  wz_graph* ptr = nullptr;
  ~GraphHandle() { wz_graph_free(ptr); }
};

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { wz_string_free(ptr); }
};

void open_model(const std::string& spec, ModelHandle& handle) {
  if (wz_model_from_json(spec.c_str(), &handle.ptr) != WZ_OK) die(wz_last_error());
}

// Options shared by the subcommands; config-file values fill anything the
// command line left unset.
struct Options {
  std::string model_spec;
  std::string graph_spec;
  std::vector<double> u;
  std::vector<double> a;
  int side = 0;       // --N
  int n_quad = 0;     // --n-quad
  int r_max = 12;
  int steps = 20;
  int p_norm = 0;
  std::string suite = "all";
  std::string out_path;
  std::string format = "csv";
  bool serial = true;  // execution is always serial; flag kept for interface parity
};

void apply_config(const std::string& path, CLI::App* cmd, Options& opt) {
  json cfg = json::parse(read_file(path), nullptr, false);
  if (cfg.is_discarded() || !cfg.is_object()) die("config '" + path + "' is not a JSON object");
  const auto unset = [&](const char* flag) {
    const CLI::Option* o = cmd->get_option_no_throw(flag);
    return o == nullptr || o->count() == 0;
  };
  if (cfg.contains("model") && unset("--model")) opt.model_spec = cfg["model"].dump();
  if (cfg.contains("graph") && unset("--graph")) opt.graph_spec = cfg["graph"].dump();
  if (cfg.contains("u") && unset("--u")) opt.u = cfg["u"].get<std::vector<double>>();
  if (cfg.contains("a") && unset("--a")) opt.a = cfg["a"].get<std::vector<double>>();
  if (cfg.contains("N") && unset("--N")) opt.side = cfg["N"].get<int>();
  if (cfg.contains("n_quad") && unset("--n-quad")) opt.n_quad = cfg["n_quad"].get<int>();
  if (cfg.contains("r_max") && unset("--r-max")) opt.r_max = cfg["r_max"].get<int>();
  if (cfg.contains("steps") && unset("--steps")) opt.steps = cfg["steps"].get<int>();
  if (cfg.contains("p") && unset("--p")) opt.p_norm = cfg["p"].get<int>();
  if (cfg.contains("suite") && unset("--suite")) opt.suite = cfg["suite"].get<std::string>();
  if (cfg.contains("out") && unset("--out")) opt.out_path = cfg["out"].get<std::string>();
  if (cfg.contains("format") && unset("--format")) opt.format = cfg["format"].get<std::string>();
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) die("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void check_format(const Options& opt) {
  if (opt.format != "csv" && opt.format != "json")
    die("--format must be csv or json");
}

// Model specs to run: the base model, or one per --a value with the config's
// "a" field swept.
std::vector<std::pair<std::string, std::string>> model_sweep(const Options& opt) {
  if (opt.model_spec.empty()) die("a model spec is required (--model or config)");
  const std::string text = resolve_spec(opt.model_spec);
  if (opt.a.empty()) return {{text, ""}};
  json base = json::parse(text, nullptr, false);
  if (base.is_discarded()) die("model spec is not valid JSON");
  if (!base.contains("family") || base["family"] != "generalized_grover")
    die("--a sweeps apply to generalized_grover models only");
  std::vector<std::pair<std::string, std::string>> specs;
  for (double a : opt.a) {
    base["a"] = a;
    specs.emplace_back(base.dump(), fmt(a));
  }
  return specs;
}

int run_zeta(const Options& opt) {
  check_format(opt);
  const bool finite = opt.side > 0;
  const int grid = finite ? opt.side : (opt.n_quad > 0 ? opt.n_quad : 512);
  if (opt.u.empty()) die("zeta needs at least one --u value");

  json rows = json::array();
  for (const auto& [spec, a_tag] : model_sweep(opt)) {
    ModelHandle model;
    open_model(spec, model);
    for (double u : opt.u) {
      OwnedString row;
      if (wz_zeta_report_json(model.ptr, grid, finite ? "finite" : "limit", u, 0.0,
                              &row.ptr) != WZ_OK)
        die(wz_last_error());
      json parsed = json::parse(row.ptr);
      if (!a_tag.empty()) parsed["a"] = a_tag;
      rows.push_back(std::move(parsed));
    }
  }

  Output out(opt.out_path);
  if (opt.format == "json") {
    out.stream() << rows.dump(2) << "\n";
  } else {
    out.stream() << "model,route,grid,u_re,u_im,zeta_inv_re,zeta_inv_im,"
                    "residual_closed_form,residual_full_operator\n";
    for (const json& r : rows) {
      const json& res = r["residuals"];
      out.stream() << r["model"].get<std::string>() << ',' << r["route"].get<std::string>()
                   << ',' << r["grid"].get<int>() << ',' << fmt(r["u"]["re"].get<double>())
                   << ',' << fmt(r["u"]["im"].get<double>()) << ','
                   << fmt(r["zeta_inv"]["re"].get<double>()) << ','
                   << fmt(r["zeta_inv"]["im"].get<double>()) << ','
                   << (res.contains("closed_form") ? fmt(res["closed_form"].get<double>()) : "")
                   << ','
                   << (res.contains("full_operator_route")
                           ? fmt(res["full_operator_route"].get<double>())
                           : "")
                   << '\n';
    }
  }
  return 0;
}

int run_coeffs(const Options& opt) {
  check_format(opt);
  if (opt.r_max < 1) die("--r-max must be >= 1");
  const int n_quad = opt.n_quad > 0 ? opt.n_quad : 512;

  json rows = json::array();
  for (const auto& [spec, a_tag] : model_sweep(opt)) {
    ModelHandle model;
    open_model(spec, model);
    for (int r = 1; r <= opt.r_max; ++r) {
      double quad_re = 0.0, quad_im = 0.0, weight_re = 0.0, weight_im = 0.0;
      wz_status s = opt.side > 0
                        ? wz_c_r_finite(model.ptr, opt.side, r, &quad_re, &quad_im)
                        : wz_c_r_quadrature(model.ptr, n_quad, r, &quad_re, &quad_im);
      if (s != WZ_OK) die(wz_last_error());
      if (wz_c_r_weight(model.ptr, r, &weight_re, &weight_im) != WZ_OK) die(wz_last_error());
      const double diff = std::abs(std::complex<double>(quad_re - weight_re, quad_im - weight_im));
      json row{{"r", r},
               {"c_r_quadrature", {{"re", quad_re}, {"im", quad_im}}},
               {"c_r_weight", {{"re", weight_re}, {"im", weight_im}}},
               {"abs_diff", diff}};
      if (!a_tag.empty()) row["a"] = a_tag;
      rows.push_back(std::move(row));
    }
  }

  Output out(opt.out_path);
  if (opt.format == "json") {
    out.stream() << rows.dump(2) << "\n";
  } else {
    out.stream() << "r,c_quad_re,c_quad_im,c_weight_re,c_weight_im,abs_diff\n";
    for (const json& r : rows)
      out.stream() << r["r"].get<int>() << ','
                   << fmt(r["c_r_quadrature"]["re"].get<double>()) << ','
                   << fmt(r["c_r_quadrature"]["im"].get<double>()) << ','
                   << fmt(r["c_r_weight"]["re"].get<double>()) << ','
                   << fmt(r["c_r_weight"]["im"].get<double>()) << ','
                   << fmt(r["abs_diff"].get<double>()) << '\n';
  }
  return 0;
}

// Konno-Sato residual table for one user-supplied graph, over the standard
// a-grid and u-spiral used by the built-in suite.
json verify_one_graph(const Options& opt) {
  GraphHandle graph;
  const std::string spec = resolve_spec(opt.graph_spec);
  if (wz_graph_from_json(spec.c_str(), &graph.ptr) != WZ_OK) die(wz_last_error());
  const std::vector<double> a_grid =
      opt.a.empty() ? std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0} : opt.a;
  // Default samples stay off the real axis: the identity's real u-roots (both
  // sides share them) would otherwise make the relative residual meaningless.
  // Users supplying --u own that precondition.
  std::vector<std::pair<double, double>> u_grid{{0.05, 0.13},  {-0.11, 0.07}, {0.17, -0.15},
                                                {-0.23, -0.09}, {0.29, 0.05},  {-0.31, 0.17},
                                                {0.33, -0.19},  {-0.12, -0.33}};
  if (!opt.u.empty()) {
    u_grid.clear();
    for (double u : opt.u) u_grid.emplace_back(u, 0.0);
  }
  double worst = 0.0;
  for (double a : a_grid)
    for (const auto& [u_re, u_im] : u_grid) {
      double lr = 0.0, li = 0.0, rr = 0.0, ri = 0.0;
      if (wz_konno_sato(graph.ptr, a, u_re, u_im, &lr, &li, &rr, &ri) != WZ_OK)
        die(wz_last_error());
      const double lhs = std::abs(std::complex<double>(lr, li));
      const double rhs = std::abs(std::complex<double>(rr, ri));
      const double residual = std::abs(std::complex<double>(lr - rr, li - ri)) /
                              std::max({lhs, rhs, 1e-30});
      worst = std::max(worst, residual);
    }
  json rows = json::array();
  rows.push_back({{"check", "konno_sato user graph"},
                  {"residual", worst},
                  {"tolerance", 1e-9},
                  {"pass", worst < 1e-9}});
  return rows;
}

int run_verify(const Options& opt) {
  check_format(opt);
  json rows;
  if (!opt.graph_spec.empty()) {
    if (opt.suite != "konno-sato" && opt.suite != "all")
      die("--graph applies to the konno-sato suite");
    rows = verify_one_graph(opt);
  } else {
    OwnedString report;
    if (wz_verify_suite(opt.suite.c_str(), &report.ptr) != WZ_OK) die(wz_last_error());
    rows = json::parse(report.ptr);
  }

  Output out(opt.out_path);
  bool all_pass = true;
  if (opt.format == "json") {
    out.stream() << rows.dump(2) << "\n";
    for (const json& r : rows) all_pass = all_pass && r["pass"].get<bool>();
  } else {
    out.stream() << "check,residual,tolerance,status\n";
    for (const json& r : rows) {
      const bool pass = r["pass"].get<bool>();
      all_pass = all_pass && pass;
      out.stream() << r["check"].get<std::string>() << ','
                   << fmt(r["residual"].get<double>()) << ','
                   << fmt(r["tolerance"].get<double>()) << ',' << (pass ? "pass" : "FAIL")
                   << '\n';
    }
  }
  if (!all_pass) {
    std::cerr << "walkzeta: verification failures:\n";
    for (const json& r : rows)
      if (!r["pass"].get<bool>())
        std::cerr << "  " << r["check"].get<std::string>() << " residual "
                  << fmt(r["residual"].get<double>()) << " >= tolerance "
                  << fmt(r["tolerance"].get<double>()) << "\n";
    return kExitChecksFailed;
  }
  return 0;
}

int run_simulate(const Options& opt) {
  check_format(opt);
  if (opt.model_spec.empty()) die("a model spec is required (--model or config)");
  if (opt.side < 2) die("simulate needs --N >= 2");
  ModelHandle model;
  open_model(resolve_spec(opt.model_spec), model);
  OwnedString csv;
  if (wz_simulate(model.ptr, opt.side, opt.steps, opt.p_norm, &csv.ptr) != WZ_OK)
    die(wz_last_error());

  Output out(opt.out_path);
  if (opt.format == "csv") {
    out.stream() << csv.ptr;
    return 0;
  }
  // JSON: re-shape the CSV rows
  std::istringstream in(csv.ptr);
  std::string line;
  std::getline(in, line);  // header
  json rows = json::array();
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string field;
    std::vector<std::string> parts;
    while (std::getline(fields, field, ',')) parts.push_back(field);
    json row{{"n", std::stoi(parts[0])}, {"mu", std::stod(parts.back())}};
    json coords = json::array();
    for (std::size_t i = 1; i + 1 < parts.size(); ++i) coords.push_back(std::stoi(parts[i]));
    row["x"] = std::move(coords);
    rows.push_back(std::move(row));
  }
  out.stream() << rows.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"walk operators on tori, walk-type zeta functions, and the "
               "generalized Konno-Sato verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", wz_version());

  Options opt;
  std::string config_path;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON run config supplying defaults");
    cmd->add_option("--out", opt.out_path, "output path (default: stdout)");
    cmd->add_option("--format", opt.format, "csv | json (default: csv)");
    cmd->add_flag("--serial", opt.serial, "force the serial, byte-reproducible path (default)");
    return cmd;
  };

  CLI::App* zeta = add_common(app.add_subcommand("zeta", "evaluate zeta-bar^{-1}"));
  zeta->add_option("--model", opt.model_spec, "model config JSON (inline or path)");
  zeta->add_option("--u", opt.u, "u values");
  zeta->add_option("--N", opt.side, "finite torus side (selects the finite route)");
  zeta->add_option("--n-quad", opt.n_quad, "quadrature points per axis (limit route)");
  zeta->add_option("--a", opt.a, "sweep the generalized Grover parameter");

  CLI::App* coeffs = add_common(app.add_subcommand("coeffs", "series coefficients C_r"));
  coeffs->add_option("--model", opt.model_spec, "model config JSON (inline or path)");
  coeffs->add_option("--r-max", opt.r_max, "largest r (default 12)");
  coeffs->add_option("--N", opt.side, "finite torus side (default: quadrature limit)");
  coeffs->add_option("--n-quad", opt.n_quad, "quadrature points per axis (default 512)");
  coeffs->add_option("--a", opt.a, "sweep the generalized Grover parameter");

  CLI::App* verify = add_common(app.add_subcommand("verify", "run verification suites"));
  verify->add_option("--suite", opt.suite,
                     "closed-forms | konno-sato | factorization | all (default all)");
  verify->add_option("--graph", opt.graph_spec,
                     "graph spec JSON; checks the konno-sato identity on this graph "
                     "instead of the built-in family");
  verify->add_option("--a", opt.a, "a grid for --graph (default {0, 0.25, 0.5, 0.75, 1})");
  verify->add_option("--u", opt.u,
                     "real u grid for --graph (default: fixed complex samples, |u| <= 0.4)");

  CLI::App* simulate = add_common(app.add_subcommand("simulate", "evolve and measure"));
  simulate->add_option("--model", opt.model_spec, "model config JSON (inline or path)");
  simulate->add_option("--N", opt.side, "torus side");
  simulate->add_option("--steps", opt.steps, "number of steps (default 20)");
  simulate->add_option("--p", opt.p_norm, "p-norm override (1 or 2; default per coin class)");

  CLI11_PARSE(app, argc, argv);

  CLI::App* chosen = app.get_subcommands().front();
  if (!config_path.empty()) apply_config(config_path, chosen, opt);

  if (chosen == zeta) return run_zeta(opt);
  if (chosen == coeffs) return run_coeffs(opt);
  if (chosen == verify) return run_verify(opt);
  if (chosen == simulate) return run_simulate(opt);
  return kExitBadConfig;
}
