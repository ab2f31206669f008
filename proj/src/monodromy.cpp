#include "landauvar/monodromy.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "landauvar/error.hpp"

namespace lv {

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
  std::size_t deg = coeffs.size();
  while (deg > 0 && coeffs[deg - 1] == Complex(0)) --deg;
  if (deg == 0) throw Error("zero polynomial has no roots");
  const Eigen::Index n = static_cast<Eigen::Index>(deg - 1);
  if (n == 0) return {};
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  const Complex lead = coeffs[deg - 1];
  for (Eigen::Index i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) c(i, n - 1) = -coeffs[static_cast<std::size_t>(i)] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, false);
  if (es.info() != Eigen::Success) throw Error("companion eigenvalue solver failed");
  std::vector<Complex> roots(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return roots;
}

std::vector<int> compose_permutations(const std::vector<int>& p, const std::vector<int>& q) {
  if (p.size() != q.size()) throw Error("permutations of different size");
  std::vector<int> r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

bool TrackResult::is_identity() const {
  for (std::size_t i = 0; i < permutation.size(); ++i)
    if (permutation[i] != static_cast<int>(i)) return false;
  return true;
}

nlohmann::json TrackResult::to_json() const {
  nlohmann::json roots = nlohmann::json::array();
  for (auto z : start_roots) roots.push_back({z.real(), z.imag()});
  return {{"permutation", permutation}, {"windings", windings}, {"start_roots", roots},
          {"steps", steps},             {"halvings", halvings}, {"max_residual", max_residual}};
}

namespace {

constexpr double two_pi = 2 * std::numbers::pi;

// Coefficients of f in var, each a polynomial in the loop parameter only.
struct Family {
  std::vector<Polynomial> c, dc;  // coefficients and their t-derivatives
  std::string param;
  std::map<std::string, Complex> values;

  std::vector<Complex> at(const std::vector<Polynomial>& ps, Complex t) {
    values[param] = t;
    std::vector<Complex> out;
    for (const auto& p : ps) out.push_back(p.evaluate(values));
    return out;
  }
};

Complex horner(const std::vector<Complex>& c, Complex x) {
  Complex v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

Complex horner_derivative(const std::vector<Complex>& c, Complex x) {
  Complex v = 0;
  for (std::size_t k = c.size(); k-- > 1;) v = v * x + double(k) * c[k];
  return v;
}

double relative_residual(const std::vector<Complex>& c, Complex x) {
  double scale = 0, ax = std::abs(x), pw = 1;
  for (auto ck : c) {
    scale += std::abs(ck) * pw;
    pw *= ax;
  }
  return scale > 0 ? std::abs(horner(c, x)) / scale : 0;
}

double min_separation(const std::vector<Complex>& r) {
  double m = INFINITY;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j) m = std::min(m, std::abs(r[i] - r[j]));
  return m;
}

// Newton iteration; returns false when it does not settle.
bool correct(const std::vector<Complex>& c, Complex& x, double tol) {
  for (int it = 0; it < 20; ++it) {
    Complex d = horner_derivative(c, x);
    if (d == Complex(0)) return false;
    Complex dx = horner(c, x) / d;
    x -= dx;
    if (std::abs(dx) <= tol * std::max(1.0, std::abs(x))) return true;
  }
  return false;
}

}  // namespace

TrackResult track(const ParametricRootSystem& sys, const std::vector<Complex>& marked, double tol) {
  const auto& loop = sys.loop;
  if (loop.radius <= 0) throw Error("loop radius must be positive");
  if (loop.turns < 1 || loop.steps < 4) throw Error("loop needs at least one turn and four steps");
  if (loop.orientation != 1 && loop.orientation != -1) throw Error("orientation must be +1 or -1");
  if (loop.param == sys.var) throw Error("loop parameter equals the fibre variable");
  if (sys.fixed.count(loop.param)) throw Error("loop parameter " + loop.param + " is also fixed");

  for (const auto& v : sys.f.variables())
    if (v != sys.var && v != loop.param && !sys.fixed.count(v))
      throw Error("variable '" + v + "' is neither fixed nor looped");

  Family fam;
  fam.param = loop.param;
  fam.values = sys.fixed;
  const int deg = sys.f.degree(sys.var);
  if (deg < 1) throw Error("polynomial does not depend on " + sys.var);
  for (int k = 0; k <= deg; ++k) {
    fam.c.push_back(sys.f.coefficient(sys.var, k));
    fam.dc.push_back(partial_derivative(fam.c.back(), loop.param));
  }

  auto point = [&](double s) {
    return loop.center + loop.radius * std::polar(1.0, two_pi * loop.orientation * s);
  };
  auto velocity = [&](double s) {
    return Complex(0, two_pi * loop.orientation) * loop.radius *
           std::polar(1.0, two_pi * loop.orientation * s);
  };
  auto check_leading = [&](const std::vector<Complex>& c) {
    double scale = 0;
    for (auto ck : c) scale = std::max(scale, std::abs(ck));
    if (std::abs(c.back()) <= 1e3 * tol * scale)
      throw Error("leading coefficient vanishes along the loop");
  };

  TrackResult res;
  auto c0 = fam.at(fam.c, point(0));
  check_leading(c0);
  std::vector<Complex> roots = polynomial_roots(c0);
  for (auto& x : roots) correct(c0, x, tol);
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    return std::make_pair(a.real(), a.imag()) < std::make_pair(b.real(), b.imag());
  });
  for (auto x : roots) {
    double r = relative_residual(c0, x);
    if (r > tol) throw Error("basepoint roots do not converge");
    res.max_residual = std::max(res.max_residual, r);
  }
  if (roots.size() > 1 && min_separation(roots) < 1e3 * tol * (1 + std::abs(roots.front())))
    throw Error("basepoint lies on the discriminant");
  res.start_roots = roots;

  const std::size_t nr = roots.size();
  std::vector<std::vector<double>> angle(nr, std::vector<double>(marked.size(), 0));
  const double h_max = 1.0 / loop.steps;
  const double h_min = h_max * 1e-9;
  double s = 0, h = h_max;
  const double s_end = loop.turns;
  std::vector<Complex> x = roots;

  while (s < s_end) {
    h = std::min(h, s_end - s);
    // Tangent predictor dx/ds = -(df/dt dt/ds) / (df/dx).
    auto c = fam.at(fam.c, point(s));
    auto dc = fam.at(fam.dc, point(s));
    std::vector<Complex> pred(nr);
    for (std::size_t i = 0; i < nr; ++i) {
      Complex fx = horner_derivative(c, x[i]);
      Complex ft = horner(dc, x[i]) * velocity(s);
      pred[i] = fx == Complex(0) ? x[i] : x[i] - h * ft / fx;
    }
    auto cn = fam.at(fam.c, point(s + h));
    check_leading(cn);
    std::vector<Complex> next = pred;
    bool ok = true;
    const double sep_old = nr > 1 ? min_separation(x) : INFINITY;
    for (std::size_t i = 0; i < nr && ok; ++i) {
      ok = correct(cn, next[i], tol);
      // The step must stay well inside the basin of this root.
      if (ok && std::abs(next[i] - x[i]) > 0.25 * sep_old) ok = false;
      if (ok && std::abs(next[i] - pred[i]) > 0.1 * sep_old) ok = false;
    }
    if (ok && nr > 1 && min_separation(next) < 10 * tol * (1 + std::abs(next[0]))) ok = false;
    if (!ok) {
      h /= 2;
      ++res.halvings;
      if (h < h_min) throw Error("step size underflow: the loop passes too near a singularity");
      continue;
    }
    for (std::size_t i = 0; i < nr; ++i) {
      res.max_residual = std::max(res.max_residual, relative_residual(cn, next[i]));
      for (std::size_t k = 0; k < marked.size(); ++k) {
        Complex a = x[i] - marked[k], b = next[i] - marked[k];
        if (a == Complex(0) || b == Complex(0)) throw Error("root passes through a marked point");
        angle[i][k] += std::arg(b / a);
      }
    }
    x = next;
    s += h;
    ++res.steps;
    h = std::min(h_max, 2 * h);
  }
  if (res.max_residual > tol) throw Error("corrector residual above tolerance");

  res.permutation.assign(nr, -1);
  std::vector<bool> taken(nr, false);
  for (std::size_t i = 0; i < nr; ++i) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < nr; ++j)
      if (std::abs(x[i] - roots[j]) < std::abs(x[i] - roots[best])) best = j;
    if (taken[best]) throw Error("root collision: two tracked roots end at the same place");
    taken[best] = true;
    res.permutation[i] = static_cast<int>(best);
  }
  for (std::size_t i = 0; i < nr; ++i) {
    std::vector<int> w;
    for (double a : angle[i]) w.push_back(static_cast<int>(std::lround(a / two_pi)));
    res.windings.push_back(w);
  }
  return res;
}

}  // namespace lv
