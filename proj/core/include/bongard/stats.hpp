#pragma once

#include <cstddef>
#include <span>
#include <utility>

namespace bongard {

// Upper regularized incomplete gamma Q(a, x).
double gamma_q(double a, double x);

// P-value of a chi-square statistic with the given degrees of freedom.
double chi_square_p_value(double statistic, int dof);

// Chi-square goodness-of-fit p-value for observed counts against a uniform
// expectation.
double chi_square_uniform_p(std::span<const std::size_t> counts);

// Wilson score interval for a binomial proportion at 95% confidence.
std::pair<double, double> wilson_interval_95(std::size_t successes,
                                             std::size_t total);

}  // namespace bongard
