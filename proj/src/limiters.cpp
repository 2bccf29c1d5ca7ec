#include "fvlim/limiters.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace fvlim {

double phi_as(double theta, double q) {
  if (!(q > 0.0)) throw std::invalid_argument("phi_as: q must be > 0");
  const double t = std::pow(std::abs(theta), q);
  const double p = 2.0 * t / (1.0 + t * t);
  if (p == 0.0) return 0.0;
  // The textbook expression cancels to O((p-1)^3) in both numerator and
  // denominator and loses ~10 digits already at |p-1| = 1e-5. Substituting
  // m = p - 1 and isolating the cancellation in
  //   G = (log(p) - m + m^2/2) / m^3
  // gives the algebraically identical, uniformly stable form
  //   phi = 2p [ theta - m/2 + (2A + 2Am + m^2) G ] / (2 + m),  A = 1 - theta,
  // where G is summed as a series for small |m|.
  const double m = p - 1.0;
  double g;
  if (std::abs(m) < 0.25) {
    g = 0.0;
    double pw = 1.0;
    for (int j = 0; j < 32; ++j) {
      g += pw / (j + 3.0);
      pw *= -m;
    }
  } else {
    // log(p), not log1p(m): for p below the epsilon of 1 the sum 1 + m rounds
    // to 0 and log1p would return -inf
    g = (std::log(p) - m + 0.5 * m * m) / (m * m * m);
  }
  const double a = 1.0 - theta;
  return 2.0 * p * (theta - 0.5 * m + (2.0 * a + 2.0 * a * m + m * m) * g) / (2.0 + m);
}

double h_ct_combined(SlopePair s, const SmoothnessContext& c, bool blend) {
  const double e = eta_ct(s, c);
  if (blend && e >= 1.0 && e <= 1.1) {
    const double w = (e - 1.0) / 0.1;
    return (1.0 - w) * h_from_phi(phi3, s) + w * h_from_phi(phi_ct, s);
  }
  return e < 1.0 ? h_from_phi(phi3, s) : h_from_phi(phi_ct, s);
}

double h3l_combined(SlopePair s, const SmoothnessContext& c, bool blend) {
  const double e = eta(s, c);
  if (blend && e >= 1.0 && e <= 1.1) {
    const double w = (e - 1.0) / 0.1;
    return (1.0 - w) * h3(s) + w * h3l(s);
  }
  return e < 1.0 ? h3(s) : h3l(s);
}

namespace {

bool is_excluded(double x, std::span<const std::pair<double, double>> excluded) {
  for (const auto& [a, b] : excluded)
    if (x >= a && x <= b) return true;
  return false;
}

// Golden-section search for the maximum of |f| on [a, b].
double refine_max(const std::function<double(double)>& f, double a, double b) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = std::abs(f(c));
  double fd = std::abs(f(d));
  for (int it = 0; it < 200 && (b - a) > 1e-14 * std::max(1.0, std::abs(a) + std::abs(b)); ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = std::abs(f(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = std::abs(f(d));
    }
  }
  return std::max(fc, fd);
}

}  // namespace

double alpha_from_samples(std::span<const std::pair<double, double>> samples,
                          std::span<const std::pair<double, double>> excluded) {
  double best = 0.0;
  bool any = false;
  for (const auto& [x, d2] : samples) {
    if (is_excluded(x, excluded)) continue;
    any = true;
    best = std::max(best, std::abs(d2));
  }
  return any ? best : 0.0;
}

double alpha_from_ic(const std::function<double(double)>& second_derivative, double x_left,
                     double x_right, std::span<const std::pair<double, double>> excluded,
                     int n_samples) {
  if (!(x_right > x_left)) throw std::invalid_argument("alpha_from_ic: empty domain");
  if (n_samples < 2) throw std::invalid_argument("alpha_from_ic: need at least 2 samples");
  const double h = (x_right - x_left) / (n_samples - 1);
  double best = 0.0;
  double best_x = x_left;
  bool any = false;
  for (int i = 0; i < n_samples; ++i) {
    const double x = x_left + i * h;
    if (is_excluded(x, excluded)) continue;
    const double v = std::abs(second_derivative(x));
    if (!any || v > best) {
      best = v;
      best_x = x;
      any = true;
    }
  }
  if (!any) return 0.0;
  if (best == 0.0) return 0.0;
  const double a = std::max(x_left, best_x - h);
  const double b = std::min(x_right, best_x + h);
  return std::max(best, refine_max(second_derivative, a, b));
}

}  // namespace fvlim
