#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "landauvar/graph.hpp"
#include "landauvar/poly_matrix.hpp"

namespace lv {

enum class PinchKind { linear, quadratic, general };

std::string to_string(PinchKind k);
PinchKind parse_pinch_kind(const std::string& s);

// One codimension-one piece of a Landau variety together with the data the
// hierarchy needs: the type (J, K) of the critical set, its simple type, the
// pinch kind and, for simple pinches, the parity n - m (-1 for linear).
struct LandauComponent {
  std::string id;
  Polynomial defining;
  std::set<std::string> type_J, type_K;
  std::set<std::string> simple_J, simple_K;
  PinchKind pinch = PinchKind::general;
  std::optional<int> parity;
  bool variation_known_zero = false;
  int n = 0;  // fibre dimension

  bool simple_pinch() const { return pinch != PinchKind::general; }

  // Throws lv::Error when the record is internally inconsistent.
  void validate() const;

  nlohmann::json to_json() const;
  static LandauComponent from_json(const nlohmann::json& j);
};

struct OneLoopMatrices {
  std::vector<std::string> edge_ids;  // row/column order of M
  PolyMatrix M;                       // quadratic form of F
  PolyMatrix S;                       // M at zero masses
  PolyMatrix Sprime;                  // S bordered by (0, 1, ..., 1)
};

// Requires a graph whose edges form a single cycle (h1 = 1, no bridges).
// Off-diagonal entries use s_ij = -(invariant of the momentum crossing edges
// i and j), so that x^T M x = F.
OneLoopMatrices gram_matrix(const FeynmanGraph& g);

// Components l^F_{G/I} ("F", "F/e1", ...) and l^FU_{G/I} ("FU", "FU/e1", ...)
// for proper subsets I, sorted by (|I|, I) with F before FU.  Components whose
// defining polynomial vanishes identically (massless lines) are dropped.
std::vector<LandauComponent> oneloop_landau(const FeynmanGraph& g);

// Replaces the "F" component of a massive two-edge graph by its threshold
// and pseudo-threshold branches "F+" and "F-", defined in the mass symbols
// themselves: inv - (m1 + m2)^2 and inv - (m1 - m2)^2.  Other inputs are
// returned unchanged.
std::vector<LandauComponent> split_thresholds(const FeynmanGraph& g,
                                              std::vector<LandauComponent> comps);

// Critical values of {F = 0} in the fibre variables.  The chart sets some
// fibre variables to constants; at most two free fibre variables may
// remain.  One variable: Res(F, dF/dy).  Two: Res_y(Res_x(F, F_x), Res_x(F, F_y)).
// The result may carry extraneous factors.
Polynomial eliminate_critical_values(const Polynomial& F, const std::vector<std::string>& fiber_vars,
                                     const std::map<std::string, Polynomial>& chart);

// Second-type component l_A12 of the ice cream cone: the quotient-graph F
// evaluated on the critical line of A12, with denominators cleared.
Polynomial icecream_ellA12(const FeynmanGraph& icecream);
Polynomial icecream_ellA12();
Polynomial icecream_ellA12_printed();

// Fixed component lists for arrangements whose Landau analysis needs blowups
// beyond what oneloop_landau covers: massless-triangle, sunrise,
// icecream-partial, bubble, logarithm, dilog.
std::vector<LandauComponent> fixture_landau(const std::string& name);
std::vector<std::string> fixture_names();

// Coprime integer coefficients with positive leading term.
Polynomial primitive_part(const Polynomial& p);

}  // namespace lv
