#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace herdlab {

enum class Binning { linear, logarithmic };

std::string_view to_string(Binning binning);

/// Binned density estimate.  Densities are normalized so that
/// sum(density * bin_width) == 1; empty bins carry density 0.
struct EmpiricalPdf {
    std::vector<double> bin_edges;  // n_bins + 1, strictly increasing
    std::vector<double> densities;  // n_bins
    std::size_t n_samples = 0;
    Binning binning = Binning::linear;

    std::size_t n_bins() const { return densities.size(); }
    double integral() const;
};

/// Histograms `samples` into `n_bins` bins spanning [min, max].  Logarithmic
/// binning uses geometrically spaced edges and requires strictly positive
/// samples.  Rejects fewer than 2 distinct samples.
EmpiricalPdf build_pdf(std::span<const double> samples, Binning binning,
                       std::size_t n_bins);

/// Log binning at a fixed bin-per-decade resolution (default 40), the layout
/// used for the absolute log-price tables.
EmpiricalPdf build_log_pdf_per_decade(std::span<const double> samples,
                                      std::size_t bins_per_decade = 40);

}  // namespace herdlab
