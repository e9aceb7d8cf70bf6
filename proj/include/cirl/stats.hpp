#pragma once

#include "cirl/rng.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace cirl {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

double mean(std::span<const double> x);
/// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
double stddev(std::span<const double> x);

/// Percentile bootstrap interval for a proportion of successes.
/// Each resample draws outcomes.size() trials with replacement.
Interval bootstrap_proportion_ci(std::span<const int> outcomes, std::size_t resamples, Rng& rng, double level = 0.95);

/// Failure rate with zero-failure cells clamped to 1 / (trials + 1).
struct FailureRate {
  double delta_hat = 0.0;
  bool clamped = false;
};
FailureRate clamped_failure_rate(std::size_t failures, std::size_t trials);

/// Spearman rank correlation with average ranks for ties. NaN when either
/// input is constant.
double spearman(std::span<const double> x, std::span<const double> y);

/// Average ranks starting at 1.
std::vector<double> average_ranks(std::span<const double> x);

}  // namespace cirl
