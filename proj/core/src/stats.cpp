#include "bongard/stats.hpp"

#include <cmath>
#include <limits>

namespace bongard {

namespace {

double gamma_p_series(double a, double x) {
  double sum = 1.0 / a;
  double term = sum;
  for (int n = 1; n < 500; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_cont_fraction(double a, double x) {
  // Lentz's algorithm for the continued fraction representation.
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-15) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cont_fraction(a, x);
}

double chi_square_p_value(double statistic, int dof) {
  if (dof <= 0) return std::numeric_limits<double>::quiet_NaN();
  return gamma_q(0.5 * dof, 0.5 * statistic);
}

double chi_square_uniform_p(std::span<const std::size_t> counts) {
  const std::size_t k = counts.size();
  if (k < 2) return 1.0;
  std::size_t total = 0;
  for (auto c : counts) total += c;
  if (total == 0) return 1.0;
  const double expected = static_cast<double>(total) / static_cast<double>(k);
  double stat = 0.0;
  for (auto c : counts) {
    const double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  return chi_square_p_value(stat, static_cast<int>(k) - 1);
}

std::pair<double, double> wilson_interval_95(std::size_t successes,
                                             std::size_t total) {
  if (total == 0) return {0.0, 1.0};
  const double z = 1.959963984540054;
  const double n = static_cast<double>(total);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

}  // namespace bongard
