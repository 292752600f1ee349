#include "herdlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace herdlab {

double ks_distance(std::span<const double> samples,
                   const std::function<double(double)>& analytic_cdf) {
    if (samples.size() < 100) {
        throw std::invalid_argument("ks_distance: need at least 100 samples");
    }
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double sup = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double cdf = analytic_cdf(sorted[i]);
        const double below = cdf - static_cast<double>(i) / n;
        const double above = static_cast<double>(i + 1) / n - cdf;
        sup = std::max({sup, below, above});
    }
    return sup;
}

double ks_distance_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 100 || b.size() < 100) {
        throw std::invalid_argument("ks_distance: need at least 100 samples per side");
    }
    std::vector<double> sa(a.begin(), a.end());
    std::vector<double> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    const double na = static_cast<double>(sa.size());
    const double nb = static_cast<double>(sb.size());
    std::size_t ia = 0;
    std::size_t ib = 0;
    double sup = 0.0;
    while (ia < sa.size() && ib < sb.size()) {
        const double v = std::min(sa[ia], sb[ib]);
        while (ia < sa.size() && sa[ia] <= v) ++ia;
        while (ib < sb.size() && sb[ib] <= v) ++ib;
        sup = std::max(sup, std::fabs(static_cast<double>(ia) / na -
                                      static_cast<double>(ib) / nb));
    }
    return sup;
}

std::vector<std::pair<double, double>> exceedance(std::span<const double> samples,
                                                  std::span<const double> thresholds) {
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        if (!(thresholds[i] > 0.0)) {
            throw std::invalid_argument("exceedance: thresholds must be positive");
        }
        if (i > 0 && !(thresholds[i] > thresholds[i - 1])) {
            throw std::invalid_argument("exceedance: thresholds must be sorted ascending");
        }
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(thresholds.size());
    const double n = static_cast<double>(samples.size());
    for (const double threshold : thresholds) {
        std::size_t count = 0;
        for (const double s : samples) {
            if (std::fabs(s) > threshold) ++count;
        }
        out.emplace_back(threshold, n > 0.0 ? static_cast<double>(count) / n : 0.0);
    }
    return out;
}

std::pair<double, double> moments(std::span<const double> samples) {
    if (samples.size() < 2) {
        throw std::invalid_argument("moments: need at least 2 samples");
    }
    double mean = 0.0;
    for (const double s : samples) mean += s;
    mean /= static_cast<double>(samples.size());
    double ss = 0.0;
    for (const double s : samples) {
        const double d = s - mean;
        ss += d * d;
    }
    const double var = ss / static_cast<double>(samples.size() - 1);
    return {mean, std::sqrt(var)};
}

}  // namespace herdlab
