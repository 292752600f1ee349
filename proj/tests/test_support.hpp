#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "herdlab/two_state.hpp"

namespace herdlab::testing {

/// Stationary law of the microscopic chain from detailed balance:
/// pi_{k+1}/pi_k = rate_up(k)/rate_down(k+1), normalized.  Independent of the
/// simulation path; direct ratio recursion over the N+1 states.
std::vector<double> detailed_balance_pmf(const TwoStateParams& params);

/// CDF lookup for a discrete law on {0..N} (values scaled by `scale`, i.e.
/// the CDF is evaluated at k*scale).
std::function<double(double)> discrete_cdf(const std::vector<double>& pmf,
                                           double scale);

/// KS distance between samples drawn on the lattice {0..N} (as doubles) and
/// a pmf over the same lattice.
double lattice_ks(const std::vector<double>& samples, const std::vector<double>& pmf);

/// Reference Gamma(shape, 1) sampler (Marsaglia-Tsang), independent of the
/// library's RNG and engines.  Deterministic for a given seed.
class ReferenceSampler {
  public:
    explicit ReferenceSampler(std::uint64_t seed);
    double uniform();
    double normal();
    double gamma(double shape);
    double beta(double a, double b);

  private:
    std::uint64_t state_[2];
    double cached_ = 0.0;
    bool has_cached_ = false;
    std::uint64_t next_u64();
};

/// Integral of f over [0,1] where f may carry x^(a-1), (1-x)^(b-1)
/// endpoint singularities with a, b >= 0.5: substitutes x = sin^2(theta) and
/// applies composite Simpson on theta.
double beta_weighted_integral(const std::function<double(double)>& f,
                              std::size_t panels = 20000);

/// Composite Simpson on [lo, hi] for smooth integrands.
double simpson(const std::function<double(double)>& f, double lo, double hi,
               std::size_t panels = 4000);

// --- CLI helpers -----------------------------------------------------------

/// Path to the herdlab binary (HERDLAB_BIN environment variable).
std::string herdlab_binary();

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

/// Runs a command line through /bin/sh, capturing stdout+stderr.
CommandResult run_command(const std::string& command_line);

/// Minimal CSV reader: header row + numeric-or-string cells.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string& name) const;
    double number(std::size_t row, const std::string& column_name) const;
};

CsvTable read_csv(const std::filesystem::path& path);

/// Byte-level file comparison.
bool files_identical(const std::filesystem::path& a, const std::filesystem::path& b);

/// Fresh scratch directory under the system temp dir; removed on destruction.
class ScratchDir {
  public:
    explicit ScratchDir(const std::string& tag);
    ~ScratchDir();
    const std::filesystem::path& path() const { return path_; }

  private:
    std::filesystem::path path_;
};

}  // namespace herdlab::testing
