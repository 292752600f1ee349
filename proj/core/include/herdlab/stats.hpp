#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace herdlab {

/// Kolmogorov-Smirnov statistic: sup-norm distance between the empirical CDF
/// of `samples` and the analytic CDF.  Requires at least 100 samples.
double ks_distance(std::span<const double> samples,
                   const std::function<double(double)>& analytic_cdf);

/// Two-sample KS statistic between two empirical CDFs.
double ks_distance_two_sample(std::span<const double> a, std::span<const double> b);

/// Fraction of samples with |sample| > threshold, one entry per threshold.
/// Thresholds must be positive and sorted ascending.
std::vector<std::pair<double, double>> exceedance(std::span<const double> samples,
                                                  std::span<const double> thresholds);

/// Arithmetic mean and unbiased (n-1) standard deviation.  Requires at least
/// 2 samples.
std::pair<double, double> moments(std::span<const double> samples);

}  // namespace herdlab
