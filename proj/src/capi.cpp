#include "walkzeta.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>

#include "walkzeta/errors.hpp"
#include "walkzeta/json_io.hpp"
#include "walkzeta/verify.hpp"
#include "walkzeta/zeta.hpp"

using namespace walkzeta;

struct wz_model_s {
  WalkModel model;
  std::string family;  // stable storage for wz_model_family
};

struct wz_graph_s {
  RegularGraph graph;
};

namespace {

thread_local std::string g_last_error;

wz_status fail(wz_status code, const char* what) {
  g_last_error = what;
  return code;
}

template <class Fn>
wz_status guarded(Fn&& fn) {
  try {
    fn();
    return WZ_OK;
  } catch (const ParseError& e) {
    return fail(WZ_ERR_PARSE, e.what());
  } catch (const DimensionError& e) {
    return fail(WZ_ERR_DIMENSION, e.what());
  } catch (const SizeCapError& e) {
    return fail(WZ_ERR_SIZE_CAP, e.what());
  } catch (const ConvergenceDiskError& e) {
    return fail(WZ_ERR_CONVERGENCE_DISK, e.what());
  } catch (const NoClosedFormError& e) {
    return fail(WZ_ERR_NO_CLOSED_FORM, e.what());
  } catch (const NotSimpleError& e) {
    return fail(WZ_ERR_NOT_SIMPLE, e.what());
  } catch (const NoConvergenceError& e) {
    return fail(WZ_ERR_NO_CONVERGENCE, e.what());
  } catch (const InvalidArgument& e) {
    return fail(WZ_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(WZ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(WZ_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void write_complex(Complex z, double* out_re, double* out_im) {
  if (out_re) *out_re = z.real();
  if (out_im) *out_im = z.imag();
}

wz_status require(bool ok, const char* what) {
  return ok ? WZ_OK : fail(WZ_ERR_INVALID_ARGUMENT, what);
}

std::string format_full(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace

extern "C" {

const char* wz_version(void) { return "0.1.0"; }

const char* wz_last_error(void) { return g_last_error.c_str(); }

void wz_string_free(char* text) { std::free(text); }

wz_status wz_model_from_json(const char* json_text, wz_model** out) {
  if (wz_status s = require(json_text && out, "null argument"); s != WZ_OK) return s;
  return guarded([&] {
    auto handle = std::make_unique<wz_model_s>();
    handle->model = model_from_json_text(json_text);
    handle->family = handle->model.family;
    *out = handle.release();
  });
}

void wz_model_free(wz_model* model) { delete model; }

int wz_model_states(const wz_model* model) {
  return model ? static_cast<int>(model->model.num_states()) : 0;
}

int wz_model_lattice_dim(const wz_model* model) {
  return model ? model->model.lattice_dim : 0;
}

const char* wz_model_family(const wz_model* model) {
  return model ? model->family.c_str() : "";
}

wz_status wz_model_classify(const wz_model* model, int* is_unitary,
                            int* is_column_stochastic, int* is_doubly_stochastic) {
  if (wz_status s = require(model != nullptr, "null model"); s != WZ_OK) return s;
  return guarded([&] {
    const CoinClass cls = classify(model->model);
    if (is_unitary) *is_unitary = cls.unitary ? 1 : 0;
    if (is_column_stochastic) *is_column_stochastic = cls.column_stochastic ? 1 : 0;
    if (is_doubly_stochastic) *is_doubly_stochastic = cls.doubly_stochastic ? 1 : 0;
  });
}

int wz_model_has_closed_form(const wz_model* model) {
  if (!model) return 0;
  return closed_form_for(model->model).has_value() ? 1 : 0;
}

wz_status wz_zeta_inv_finite(const wz_model* model, int side, double u_re, double u_im,
                             double* out_re, double* out_im) {
  if (wz_status s = require(model != nullptr, "null model"); s != WZ_OK) return s;
  return guarded([&] {
    const Complex value =
        zeta_inv_finite(model->model, TorusSpec{model->model.lattice_dim, side},
                        Complex(u_re, u_im));
    write_complex(value, out_re, out_im);
  });
}

wz_status wz_zeta_inv_limit(const wz_model* model, int n_quad, double u_re, double u_im,
                            double* out_re, double* out_im) {
  if (wz_status s = require(model != nullptr, "null model"); s != WZ_OK) return s;
  return guarded([&] {
    write_complex(zeta_inv_limit(model->model, Complex(u_re, u_im), n_quad), out_re, out_im);
  });
}

wz_status wz_zeta_inv_closed(const wz_model* model, int grid, double u_re, double u_im,
                             double* out_re, double* out_im) {
  if (wz_status s = require(model != nullptr, "null model"); s != WZ_OK) return s;
  return guarded([&] {
    const auto id = closed_form_for(model->model);
    if (!id)
      throw NoClosedFormError("model family '" + model->model.family +
                              "' has no tabulated closed form");
    const Complex u(u_re, u_im);
    Complex log_sum(0.0, 0.0);
    std::size_t points = 0;
    for_each_grid_point(model->model.lattice_dim, grid, [&](std::span<const double> angles) {
      log_sum += std::log(f_value(*id, angles, u));
      ++points;
    });
    write_complex(prefactor(*id, u) * std::exp(log_sum / static_cast<double>(points)), out_re,
                  out_im);
  });
}

wz_status wz_c_r_finite(const wz_model* model, int side, int r, double* out_re,
                        double* out_im) {
  if (wz_status s = require(model != nullptr, "null model"); s != WZ_OK) return s;
  return guarded([&] {
    write_complex(c_r_finite(model->model, TorusSpec{model->model.lattice_dim, side}, r),
                  out_re, out_im);
  });
}

wz_status wz_c_r_quadrature(const wz_model* model, int n_quad, int r, double* out_re,
                            double* out_im) {
  if (wz_status s = require(model != nullptr, "null model"); s != WZ_OK) return s;
  return guarded([&] {
    write_complex(c_r_limit(model->model, r, CrRoute::Quadrature, n_quad), out_re, out_im);
  });
}

wz_status wz_c_r_weight(const wz_model* model, int r, double* out_re, double* out_im) {
  if (wz_status s = require(model != nullptr, "null model"); s != WZ_OK) return s;
  return guarded(
      [&] { write_complex(c_r_limit(model->model, r, CrRoute::Weight), out_re, out_im); });
}

wz_status wz_series_consistency(const wz_model* model, int side, double u_re, double u_im,
                                int r_max, double* out_residual) {
  if (wz_status s = require(model && out_residual, "null argument"); s != WZ_OK) return s;
  return guarded([&] {
    *out_residual = series_consistency(
        model->model, TorusSpec{model->model.lattice_dim, side}, Complex(u_re, u_im), r_max);
  });
}

wz_status wz_zeta_report_json(const wz_model* model, int grid, const char* route,
                              double u_re, double u_im, char** out_json) {
  if (wz_status s = require(model && route && out_json, "null argument"); s != WZ_OK) return s;
  const std::string route_name = route;
  if (route_name != "finite" && route_name != "limit")
    return fail(WZ_ERR_INVALID_ARGUMENT, "route must be \"finite\" or \"limit\"");
  return guarded([&] {
    const ZetaReport report =
        zeta_report(model->model, Complex(u_re, u_im), grid, route_name == "finite");
    *out_json = copy_string(zeta_report_to_json_text(report));
  });
}

wz_status wz_simulate(const wz_model* model, int side, int steps, int p_norm,
                      char** out_csv) {
  if (wz_status s = require(model && out_csv, "null argument"); s != WZ_OK) return s;
  if (steps < 0) return fail(WZ_ERR_INVALID_ARGUMENT, "steps must be >= 0");
  if (p_norm != 0 && p_norm != 1 && p_norm != 2)
    return fail(WZ_ERR_INVALID_ARGUMENT, "p_norm must be 0 (auto), 1, or 2");
  return guarded([&] {
    const WalkModel& m = model->model;
    int p = p_norm;
    if (p == 0) {
      const CoinClass cls = classify(m);
      p = cls.column_stochastic ? 1 : 2;
    }
    const TorusSpec torus{m.lattice_dim, side};
    // delta start at the origin: uniform chirality vector, normalized for the
    // chosen norm
    const std::size_t dc = m.num_states();
    std::vector<Complex> chirality(dc);
    const double amp = p == 1 ? 1.0 / dc : 1.0 / std::sqrt(static_cast<double>(dc));
    for (Complex& z : chirality) z = amp;
    StateField state = StateField::delta_at_origin(torus, chirality);

    std::ostringstream csv;
    csv << "n";
    for (int j = 1; j <= torus.dim; ++j) csv << ",x" << j;
    csv << ",mu\n";
    const auto emit = [&](int n, const StateField& st) {
      const std::vector<double> mu = measure(st, p);
      for (std::size_t x = 0; x < mu.size(); ++x) {
        csv << n;
        for (int c : st.site_coords(x)) csv << ',' << c;
        csv << ',' << format_full(mu[x]) << '\n';
      }
    };
    emit(0, state);
    for (int n = 1; n <= steps; ++n) {
      state = evolve_step(m, state);
      emit(n, state);
    }
    *out_csv = copy_string(csv.str());
  });
}

wz_status wz_graph_from_json(const char* json_text, wz_graph** out) {
  if (wz_status s = require(json_text && out, "null argument"); s != WZ_OK) return s;
  return guarded([&] { *out = new wz_graph_s{graph_from_json_text(json_text)}; });
}

void wz_graph_free(wz_graph* graph) { delete graph; }

int wz_graph_vertices(const wz_graph* graph) { return graph ? graph->graph.vertex_count() : 0; }

int wz_graph_edges(const wz_graph* graph) { return graph ? graph->graph.edge_count() : 0; }

int wz_graph_degree(const wz_graph* graph) { return graph ? graph->graph.degree() : 0; }

wz_status wz_konno_sato(const wz_graph* graph, double a, double u_re, double u_im,
                        double* lhs_re, double* lhs_im, double* rhs_re, double* rhs_im) {
  if (wz_status s = require(graph != nullptr, "null graph"); s != WZ_OK) return s;
  return guarded([&] {
    const Complex u(u_re, u_im);
    write_complex(konno_sato_lhs(graph->graph, a, u), lhs_re, lhs_im);
    write_complex(konno_sato_rhs(graph->graph, a, u), rhs_re, rhs_im);
  });
}

wz_status wz_verify_suite(const char* suite, char** out_json) {
  if (wz_status s = require(suite && out_json, "null argument"); s != WZ_OK) return s;
  const std::string name = suite;
  return guarded([&] {
    std::vector<CheckResult> results;
    const auto append = [&](std::vector<CheckResult> more) {
      results.insert(results.end(), more.begin(), more.end());
    };
    if (name == "closed-forms") {
      append(verify_suite_closed_forms());
    } else if (name == "konno-sato") {
      append(verify_suite_konno_sato());
    } else if (name == "factorization") {
      append(verify_suite_factorization());
    } else if (name == "all") {
      append(verify_suite_closed_forms());
      append(verify_suite_konno_sato());
      append(verify_suite_factorization());
    } else {
      throw InvalidArgument("unknown suite '" + name +
                            "' (want closed-forms | konno-sato | factorization | all)");
    }
    nlohmann::json rows = nlohmann::json::array();
    for (const CheckResult& r : results)
      rows.push_back({{"check", r.name},
                      {"residual", r.residual},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass()}});
    *out_json = copy_string(rows.dump());
  });
}

}  // extern "C"
