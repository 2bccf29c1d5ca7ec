#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>

#include "fvlim/types.hpp"

namespace fvlim {

// Smoothness indicator of a two-point sub-stencil.
inline double beta(double delta) { return delta * delta; }

struct WenoWeights {
  double wm;  // weight of the upwind (dm) stencil
  double wp;  // weight of the downwind (dp) stencil
};

struct WenoParams {
  double epsilon = 1e-6;
  int power_p = 2;
  double gamma_minus = 1.0 / 3.0;
  double gamma_plus = 2.0 / 3.0;

  void validate() const {
    if (!(epsilon > 0.0)) throw std::invalid_argument("WenoParams: epsilon must be > 0");
    if (power_p < 1) throw std::invalid_argument("WenoParams: power p must be >= 1");
    if (gamma_minus + gamma_plus != 1.0)
      throw std::invalid_argument("WenoParams: ideal weights must sum to 1");
  }
};

inline double int_pow(double x, int n) {
  double r = 1.0;
  for (; n > 0; n >>= 1, x *= x)
    if (n & 1) r *= x;
  return r;
}

// Classic weights w = [gamma / (eps + beta)^p] normalized. Equal smoothness
// indicators return the ideal pair exactly.
inline WenoWeights weights_js(SlopePair s, const WenoParams& params) {
  const double bm = beta(s.dm);
  const double bp = beta(s.dp);
  if (bm == bp) return {params.gamma_minus, params.gamma_plus};
  const double am = params.gamma_minus / int_pow(params.epsilon + bm, params.power_p);
  const double ap = params.gamma_plus / int_pow(params.epsilon + bp, params.power_p);
  const double sum = am + ap;
  return {am / sum, ap / sum};
}

// Weights with the whole-stencil indicator tau = (dp - dm)^2:
// a_k = gamma_k (1 + tau/(eps + beta_k)). tau = 0 gives the ideal pair.
inline WenoWeights weights_yc(SlopePair s, double epsilon, double gamma_minus = 1.0 / 3.0,
                              double gamma_plus = 2.0 / 3.0) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("weights_yc: epsilon must be > 0");
  const double tau = (s.dp - s.dm) * (s.dp - s.dm);
  if (tau == 0.0) return {gamma_minus, gamma_plus};
  const double am = gamma_minus * (1.0 + tau / (epsilon + beta(s.dm)));
  const double ap = gamma_plus * (1.0 + tau / (epsilon + beta(s.dp)));
  const double sum = am + ap;
  return {am / sum, ap / sum};
}

// The reconstruction slope; the 1/2 and the cell average live in the
// interface-value formulas.
inline double h_weno(SlopePair s, WenoWeights w) { return w.wm * s.dm + w.wp * s.dp; }

// Leading-order behavior for |delta| << eps: the unlimited reconstruction.
inline double h_weno_small_asym(SlopePair s) { return s.dm / 3.0 + 2.0 * s.dp / 3.0; }

// Leading-order behavior for |delta| >> eps; homogeneous of degree 1, like a
// traditional limiter. Undefined at the origin.
double h_weno_large_asym(SlopePair s, int p);

// Coefficient C = max(||u0^2||_1, ||(u0')^2||_1) with the 1-norms taken as
// integrals over the domain minus the split points; composite 5-point
// Gauss-Legendre quadrature on n_subintervals pieces. The weight epsilon is
// then C * dx^2.
double epsilon_yc_coefficient(const std::function<double(double)>& u0,
                              const std::function<double(double)>& du0, double x_left,
                              double x_right, std::span<const double> split_points = {},
                              int n_subintervals = 10000);

inline double epsilon_yc(const std::function<double(double)>& u0,
                         const std::function<double(double)>& du0, double x_left, double x_right,
                         std::span<const double> split_points, double dx) {
  return epsilon_yc_coefficient(u0, du0, x_left, x_right, split_points) * dx * dx;
}

}  // namespace fvlim
