#include "herdlab/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace herdlab {

std::string_view to_string(Binning binning) {
    return binning == Binning::linear ? "linear" : "logarithmic";
}

double EmpiricalPdf::integral() const {
    double total = 0.0;
    for (std::size_t i = 0; i < densities.size(); ++i) {
        total += densities[i] * (bin_edges[i + 1] - bin_edges[i]);
    }
    return total;
}

namespace {

EmpiricalPdf histogram_with_edges(std::span<const double> samples,
                                  std::vector<double> edges, Binning binning) {
    const std::size_t n_bins = edges.size() - 1;
    std::vector<std::size_t> counts(n_bins, 0);
    const double lo = edges.front();
    const double hi = edges.back();
    for (const double s : samples) {
        if (s < lo || s > hi) continue;
        auto it = std::upper_bound(edges.begin(), edges.end(), s);
        std::size_t idx = static_cast<std::size_t>(it - edges.begin());
        idx = idx == 0 ? 0 : idx - 1;
        if (idx >= n_bins) idx = n_bins - 1;  // right edge is inclusive
        ++counts[idx];
    }
    std::size_t in_range = 0;
    for (const auto c : counts) in_range += c;

    EmpiricalPdf pdf;
    pdf.bin_edges = std::move(edges);
    pdf.densities.resize(n_bins, 0.0);
    pdf.n_samples = samples.size();
    pdf.binning = binning;
    for (std::size_t i = 0; i < n_bins; ++i) {
        const double width = pdf.bin_edges[i + 1] - pdf.bin_edges[i];
        pdf.densities[i] =
            static_cast<double>(counts[i]) / (static_cast<double>(in_range) * width);
    }
    return pdf;
}

}  // namespace

EmpiricalPdf build_pdf(std::span<const double> samples, Binning binning,
                       std::size_t n_bins) {
    if (n_bins < 1) {
        throw std::invalid_argument("build_pdf: n_bins must be >= 1");
    }
    if (samples.size() < 2) {
        throw std::invalid_argument("build_pdf: need at least 2 samples");
    }
    const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    if (!(hi > lo)) {
        throw std::invalid_argument("build_pdf: all samples identical");
    }

    std::vector<double> edges(n_bins + 1);
    if (binning == Binning::linear) {
        for (std::size_t i = 0; i <= n_bins; ++i) {
            edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n_bins);
        }
    } else {
        if (lo <= 0.0) {
            throw std::invalid_argument(
                "build_pdf: logarithmic binning requires strictly positive samples");
        }
        const double log_lo = std::log(lo);
        const double log_hi = std::log(hi);
        for (std::size_t i = 0; i <= n_bins; ++i) {
            edges[i] = std::exp(log_lo + (log_hi - log_lo) * static_cast<double>(i) /
                                             static_cast<double>(n_bins));
        }
    }
    edges.front() = lo;
    edges.back() = hi;
    return histogram_with_edges(samples, std::move(edges), binning);
}

EmpiricalPdf build_log_pdf_per_decade(std::span<const double> samples,
                                      std::size_t bins_per_decade) {
    if (samples.size() < 2) {
        throw std::invalid_argument("build_pdf: need at least 2 samples");
    }
    const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    if (lo <= 0.0) {
        throw std::invalid_argument(
            "build_pdf: logarithmic binning requires strictly positive samples");
    }
    if (!(hi > lo)) {
        throw std::invalid_argument("build_pdf: all samples identical");
    }
    const double decades = std::log10(hi) - std::log10(lo);
    const auto n_bins = static_cast<std::size_t>(
        std::max(1.0, std::ceil(decades * static_cast<double>(bins_per_decade))));
    return build_pdf(samples, Binning::logarithmic, n_bins);
}

}  // namespace herdlab
