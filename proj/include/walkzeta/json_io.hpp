#ifndef WALKZETA_JSON_IO_HPP
#define WALKZETA_JSON_IO_HPP

#include <string>

#include "walkzeta/graph_zeta.hpp"
#include "walkzeta/models.hpp"
#include "walkzeta/zeta.hpp"

namespace walkzeta {

/// Model config, e.g.
///   {"family": "three_state_qw", "shift": "m", "eta": 1.0}
///   {"family": "four_state_qw_1d", "shift": "f", "p": 0.5}
///   {"family": "generalized_grover", "shift": "f", "a": 0.5,
///    "lattice": "torus-d", "d": 3}
///   {"family": "multistate_rw", "weights": {"-2": 0.25, "-1": 0.25,
///    "1": 0.25, "2": 0.25}}
///   {"crw_of": {"family": "three_state_qw", "shift": "m", "eta": 1.0}}
WalkModel model_from_json_text(const std::string& text);

/// Graph spec, e.g. {"kind": "cycle", "N": 5}, {"kind": "complete", "n": 4},
/// {"kind": "petersen"}, {"kind": "hypercube", "d": 3},
/// {"kind": "torus", "d": 2, "N": 4}.
RegularGraph graph_from_json_text(const std::string& text);

std::string zeta_report_to_json_text(const ZetaReport& report);

}  // namespace walkzeta

#endif
