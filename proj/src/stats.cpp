#include "cirl/stats.hpp"

#include "cirl/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace cirl {

double mean(std::span<const double> x) {
  if (x.empty()) throw DomainError("mean of an empty sample");
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

double stddev(std::span<const double> x) {
  if (x.size() < 2) return 0.0;
  const double m = mean(x);
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(x.size() - 1));
}

Interval bootstrap_proportion_ci(std::span<const int> outcomes, std::size_t resamples, Rng& rng, double level) {
  if (outcomes.empty()) throw DomainError("bootstrap of an empty sample");
  if (resamples == 0) throw DomainError("bootstrap needs at least one resample");
  if (!(level > 0.0 && level < 1.0)) throw DomainError("bootstrap level must lie in (0, 1)");
  const std::size_t m = outcomes.size();
  std::vector<double> stats(resamples);
  for (auto& s : stats) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < m; ++i) {
      auto j = static_cast<std::size_t>(rng.uniform01() * static_cast<double>(m));
      if (j >= m) j = m - 1;
      hits += outcomes[j] != 0;
    }
    s = static_cast<double>(hits) / static_cast<double>(m);
  }
  std::sort(stats.begin(), stats.end());
  const double tail = 0.5 * (1.0 - level);
  auto at = [&](double q) {
    const double pos = q * static_cast<double>(resamples - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, resamples - 1);
    return stats[lo] + (pos - static_cast<double>(lo)) * (stats[hi] - stats[lo]);
  };
  return {at(tail), at(1.0 - tail)};
}

FailureRate clamped_failure_rate(std::size_t failures, std::size_t trials) {
  if (trials == 0) throw DomainError("failure rate over zero trials");
  if (failures > trials) throw DomainError("more failures than trials");
  if (failures == 0) return {1.0 / static_cast<double>(trials + 1), true};
  return {static_cast<double>(failures) / static_cast<double>(trials), false};
}

std::vector<double> average_ranks(std::span<const double> x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(x.size());
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i;
    while (j + 1 < idx.size() && x[idx[j + 1]] == x[idx[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[idx[t]] = r;
    i = j + 1;
  }
  return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("spearman: inputs differ in length");
  if (x.size() < 2) throw DomainError("spearman: need at least two pairs");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double mx = mean(rx);
  const double my = mean(ry);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace cirl
