#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "landauvar/polynomial.hpp"

namespace lv {

using Complex = std::complex<double>;

// Circle t = center + radius * exp(2 pi i * orientation * s), s in [0, turns],
// in one parameter.  steps is the number of nominal steps per turn.
struct CircleLoop {
  std::string param;
  Complex center;
  double radius = 0.1;
  int orientation = 1;
  int turns = 1;
  int steps = 256;
};

// f is univariate in `var` once `fixed` and the loop parameter are bound.
struct ParametricRootSystem {
  Polynomial f;
  std::string var;
  std::map<std::string, Complex> fixed;
  CircleLoop loop;
};

struct TrackResult {
  // Root i at the start is carried to the starting position of root
  // permutation[i].  Roots are sorted by (real, imag) at the basepoint.
  std::vector<int> permutation;
  // windings[i][k]: turns of root i around marked point k.
  std::vector<std::vector<int>> windings;
  std::vector<Complex> start_roots;
  int steps = 0;
  int halvings = 0;
  double max_residual = 0;

  bool is_identity() const;
  nlohmann::json to_json() const;
};

// Roots of sum c[k] x^k via companion matrix eigenvalues.  The leading
// coefficient must be nonzero.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

// Predictor-corrector continuation of all roots around the loop.  Throws
// lv::Error when the leading coefficient vanishes on the loop, the roots at
// the basepoint are not separated, or the step size underflows.
TrackResult track(const ParametricRootSystem& sys, const std::vector<Complex>& marked,
                  double tol = 1e-10);

// Applies the permutation p after q: (p o q)[i] = p[q[i]].
std::vector<int> compose_permutations(const std::vector<int>& p, const std::vector<int>& q);

}  // namespace lv
