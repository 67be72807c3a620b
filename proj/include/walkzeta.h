/* walkzeta C API: walk operators on tori, walk-type zeta functions, series
 * coefficients, and the generalized Konno-Sato verification, behind opaque
 * handles.
 *
 * Every function that can fail returns a wz_status; wz_last_error() holds a
 * thread-local message for the most recent failure on the calling thread.
 * Strings returned through char** are heap-allocated; release them with
 * wz_string_free().
 */
#ifndef WALKZETA_H
#define WALKZETA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wz_status {
  WZ_OK = 0,
  WZ_ERR_INVALID_ARGUMENT = 1,
  WZ_ERR_PARSE = 2,
  WZ_ERR_DIMENSION = 3,
  WZ_ERR_SIZE_CAP = 4,
  WZ_ERR_CONVERGENCE_DISK = 5,
  WZ_ERR_NO_CLOSED_FORM = 6,
  WZ_ERR_NOT_SIMPLE = 7,
  WZ_ERR_NO_CONVERGENCE = 8,
  WZ_ERR_INTERNAL = 9
} wz_status;

typedef struct wz_model_s wz_model;
typedef struct wz_graph_s wz_graph;

const char* wz_version(void);
/* Message for the most recent error on this thread; never NULL. */
const char* wz_last_error(void);
void wz_string_free(char* text);

/* ---- models -------------------------------------------------------- */

/* Model config JSON, e.g.
 *   {"family": "three_state_qw", "shift": "m", "eta": 1.0}
 *   {"family": "four_state_qw_1d", "shift": "f", "p": 0.5}
 *   {"family": "four_state_qw_2d", "shift": "f", "p": 0.5}
 *   {"family": "generalized_grover", "shift": "f", "a": 0.5,
 *    "lattice": "1d-3state"|"1d-4state"|"2d-4state"|"torus-d", "d": 3}
 *   {"family": "multistate_rw", "weights": {"-2": 0.25, "-1": 0.25,
 *    "1": 0.25, "2": 0.25}}
 *   {"crw_of": { ... any QW model config ... }}
 */
wz_status wz_model_from_json(const char* json_text, wz_model** out);
void wz_model_free(wz_model* model);

int wz_model_states(const wz_model* model);       /* d_c */
int wz_model_lattice_dim(const wz_model* model);  /* d */
/* Family label, e.g. "three_state_qw" or "crw_of:three_state_qw";
 * owned by the model. */
const char* wz_model_family(const wz_model* model);

/* Coin classification with tolerance 1e-10; flags are 0/1. */
wz_status wz_model_classify(const wz_model* model, int* is_unitary,
                            int* is_column_stochastic, int* is_doubly_stochastic);

/* 1 when the model family has a tabulated closed form. */
int wz_model_has_closed_form(const wz_model* model);

/* ---- zeta functions and series coefficients ------------------------ */

/* zeta-bar(A, T^d_N, u)^{-1} on the finite torus (side N). Fails with
 * WZ_ERR_CONVERGENCE_DISK when |u| * rho_max >= 1. */
wz_status wz_zeta_inv_finite(const wz_model* model, int side, double u_re, double u_im,
                             double* out_re, double* out_im);
/* N -> infinity limit by periodic trapezoid with n_quad points per axis. */
wz_status wz_zeta_inv_limit(const wz_model* model, int n_quad, double u_re, double u_im,
                            double* out_re, double* out_im);
/* Closed-form route on the same grid: prefactor(u) * exp-mean of log F.
 * WZ_ERR_NO_CLOSED_FORM when the family has no tabulated form. */
wz_status wz_zeta_inv_closed(const wz_model* model, int grid, double u_re, double u_im,
                             double* out_re, double* out_im);

/* C_r(A, T^d_N) = N^{-d} sum_k Tr(M(k)^r). */
wz_status wz_c_r_finite(const wz_model* model, int side, int r, double* out_re,
                        double* out_im);
/* lim_N C_r by quadrature (n_quad points per axis). */
wz_status wz_c_r_quadrature(const wz_model* model, int n_quad, int r, double* out_re,
                            double* out_im);
/* lim_N C_r as the trace of the return matrix weight Phi_r(0) on Z^d. */
wz_status wz_c_r_weight(const wz_model* model, int r, double* out_re, double* out_im);

/* |  -log zeta_inv - sum_{r<=r_max} C_r u^r / r  | on the finite torus. */
wz_status wz_series_consistency(const wz_model* model, int side, double u_re, double u_im,
                                int r_max, double* out_residual);

/* One report row as JSON: zeta_inv plus closed-form / full-operator route
 * residuals where available. route: "finite" | "limit". */
wz_status wz_zeta_report_json(const wz_model* model, int grid, const char* route,
                              double u_re, double u_im, char** out_json);

/* ---- simulation ----------------------------------------------------- */

/* Evolve a delta start at the origin for `steps` steps on T^d_N and emit
 * "n,x1[,x2],mu" CSV rows (17 significant digits). p_norm: 1, 2, or 0 to pick
 * per the coin class (1 for stochastic coins, else 2). */
wz_status wz_simulate(const wz_model* model, int side, int steps, int p_norm,
                      char** out_csv);

/* ---- regular graphs and the generalized Konno-Sato identity --------- */

/* Graph spec JSON:
 *   {"kind": "cycle", "N": 5} | {"kind": "complete", "n": 4} |
 *   {"kind": "petersen"} | {"kind": "hypercube", "d": 3} |
 *   {"kind": "torus", "d": 2, "N": 4}
 */
wz_status wz_graph_from_json(const char* json_text, wz_graph** out);
void wz_graph_free(wz_graph* graph);

int wz_graph_vertices(const wz_graph* graph);
int wz_graph_edges(const wz_graph* graph);
int wz_graph_degree(const wz_graph* graph);

/* Both sides of the generalized Konno-Sato identity at (a, u):
 * lhs = det(I_2m - u U(a)), rhs = the vertex-space determinant form. */
wz_status wz_konno_sato(const wz_graph* graph, double a, double u_re, double u_im,
                        double* lhs_re, double* lhs_im, double* rhs_re, double* rhs_im);

/* ---- verification suites -------------------------------------------- */

/* suite: "closed-forms" | "konno-sato" | "factorization" | "all".
 * The report is a JSON array of {"check", "residual", "tolerance", "pass"}.
 * Returns WZ_OK even when checks fail; inspect the rows. */
wz_status wz_verify_suite(const char* suite, char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WALKZETA_H */
