#include "fvlim/weno3.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace fvlim {

double h_weno_large_asym(SlopePair s, int p) {
  if (p < 1) throw std::invalid_argument("h_weno_large_asym: p must be >= 1");
  if (s.dm == 0.0 && s.dp == 0.0)
    throw std::domain_error("h_weno_large_asym: undefined at the origin");
  // One vanishing slope dominates the 1/delta^(2p) terms; the limit is 0.
  if (s.dm == 0.0 || s.dp == 0.0) return 0.0;
  const double tm = 1.0 / int_pow(s.dm, 2 * p);
  const double tp = 1.0 / int_pow(s.dp, 2 * p);
  const double num = (1.0 / 3.0) * s.dm * tm + (2.0 / 3.0) * s.dp * tp;
  const double den = (1.0 / 3.0) * tm + (2.0 / 3.0) * tp;
  return num / den;
}

namespace {

// 5-point Gauss-Legendre rule on [-1, 1].
constexpr std::array<double, 5> kGlNodes = {
    -0.90617984593866399, -0.53846931010568309, 0.0, 0.53846931010568309, 0.90617984593866399};
constexpr std::array<double, 5> kGlWeights = {
    0.23692688505618909, 0.47862867049936647, 0.56888888888888889, 0.47862867049936647,
    0.23692688505618909};

double integrate_abs(const std::function<double(double)>& f, double a, double b, int pieces) {
  const double h = (b - a) / pieces;
  double sum = 0.0;
  for (int k = 0; k < pieces; ++k) {
    const double lo = a + k * h;
    const double mid = lo + 0.5 * h;
    double cell = 0.0;
    for (int q = 0; q < 5; ++q) cell += kGlWeights[q] * std::abs(f(mid + 0.5 * h * kGlNodes[q]));
    sum += 0.5 * h * cell;
  }
  return sum;
}

}  // namespace

double epsilon_yc_coefficient(const std::function<double(double)>& u0,
                              const std::function<double(double)>& du0, double x_left,
                              double x_right, std::span<const double> split_points,
                              int n_subintervals) {
  if (!(x_right > x_left)) throw std::invalid_argument("epsilon_yc: empty domain");
  std::vector<double> edges = {x_left, x_right};
  for (double p : split_points)
    if (p > x_left && p < x_right) edges.push_back(p);
  std::sort(edges.begin(), edges.end());
  const double total = x_right - x_left;
  double i_u = 0.0;
  double i_du = 0.0;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    const double a = edges[k];
    const double b = edges[k + 1];
    if (b - a <= 0.0) continue;
    const int pieces = std::max(1, static_cast<int>(std::lround(n_subintervals * (b - a) / total)));
    i_u += integrate_abs([&](double x) { const double v = u0(x); return v * v; }, a, b, pieces);
    i_du += integrate_abs([&](double x) { const double v = du0(x); return v * v; }, a, b, pieces);
  }
  return std::max(i_u, i_du);
}

}  // namespace fvlim
