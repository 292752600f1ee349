#include "test_support.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace herdlab::testing {

std::vector<double> detailed_balance_pmf(const TwoStateParams& params) {
    const auto n = static_cast<std::size_t>(params.n_agents);
    std::vector<double> log_pi(n + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const double up_k = transition_rates(params, static_cast<std::int64_t>(k)).first;
        const double down_k1 =
            transition_rates(params, static_cast<std::int64_t>(k + 1)).second;
        log_pi[k + 1] = log_pi[k] + std::log(up_k) - std::log(down_k1);
    }
    const double max_log = *std::max_element(log_pi.begin(), log_pi.end());
    std::vector<double> pmf(n + 1);
    double total = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
        pmf[k] = std::exp(log_pi[k] - max_log);
        total += pmf[k];
    }
    for (auto& p : pmf) p /= total;
    return pmf;
}

std::function<double(double)> discrete_cdf(const std::vector<double>& pmf, double scale) {
    std::vector<double> cdf(pmf.size());
    std::partial_sum(pmf.begin(), pmf.end(), cdf.begin());
    return [cdf, scale](double x) -> double {
        const auto k = static_cast<std::int64_t>(std::floor(x / scale + 1e-9));
        if (k < 0) return 0.0;
        if (k >= static_cast<std::int64_t>(cdf.size())) return 1.0;
        return cdf[static_cast<std::size_t>(k)];
    };
}

double lattice_ks(const std::vector<double>& samples, const std::vector<double>& pmf) {
    std::vector<double> counts(pmf.size(), 0.0);
    for (const double s : samples) {
        const auto k = static_cast<std::size_t>(std::llround(s));
        if (k < counts.size()) counts[k] += 1.0;
    }
    const double n = static_cast<double>(samples.size());
    double emp = 0.0;
    double ana = 0.0;
    double sup = 0.0;
    for (std::size_t k = 0; k < pmf.size(); ++k) {
        emp += counts[k] / n;
        ana += pmf[k];
        sup = std::max(sup, std::fabs(emp - ana));
    }
    return sup;
}

ReferenceSampler::ReferenceSampler(std::uint64_t seed) {
    // xorshift128+ seeded by splitmix-style expansion
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
    for (auto& s : state_) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        s = z;
        z += 0x9E3779B97F4A7C15ULL;
    }
}

std::uint64_t ReferenceSampler::next_u64() {
    std::uint64_t s1 = state_[0];
    const std::uint64_t s0 = state_[1];
    state_[0] = s0;
    s1 ^= s1 << 23;
    state_[1] = s1 ^ s0 ^ (s1 >> 18) ^ (s0 >> 5);
    return state_[1] + s0;
}

double ReferenceSampler::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double ReferenceSampler::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    cached_ = v * f;
    has_cached_ = true;
    return u * f;
}

double ReferenceSampler::gamma(double shape) {
    if (shape < 1.0) {
        // Boost with a uniform power (Marsaglia-Tsang small-shape trick).
        const double u = 1.0 - uniform();
        return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    while (true) {
        double x;
        double v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = 1.0 - uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double ReferenceSampler::beta(double a, double b) {
    const double ga = gamma(a);
    const double gb = gamma(b);
    return ga / (ga + gb);
}

double beta_weighted_integral(const std::function<double(double)>& f,
                              std::size_t panels) {
    // x = sin^2(theta): dx = 2 sin(theta) cos(theta) dtheta removes
    // integrable endpoint singularities down to exponent -1/2.
    const auto g = [&f](double theta) {
        const double s = std::sin(theta);
        const double c = std::cos(theta);
        const double x = s * s;
        return f(x) * 2.0 * s * c;
    };
    return simpson(g, 0.0, M_PI / 2.0, panels);
}

double simpson(const std::function<double(double)>& f, double lo, double hi,
               std::size_t panels) {
    if (panels % 2 == 1) ++panels;
    const double h = (hi - lo) / static_cast<double>(panels);
    double total = f(lo) + f(hi);
    for (std::size_t i = 1; i < panels; ++i) {
        const double x = lo + h * static_cast<double>(i);
        total += f(x) * ((i % 2 == 1) ? 4.0 : 2.0);
    }
    return total * h / 3.0;
}

std::string herdlab_binary() {
    const char* env = std::getenv("HERDLAB_BIN");
    if (env == nullptr || *env == '\0') {
        throw std::runtime_error("HERDLAB_BIN not set; run through ctest");
    }
    return env;
}

CommandResult run_command(const std::string& command_line) {
    CommandResult result;
    FILE* pipe = popen((command_line + " 2>&1").c_str(), "r");
    if (pipe == nullptr) {
        throw std::runtime_error("popen failed for: " + command_line);
    }
    std::array<char, 4096> buffer{};
    while (std::fgets(buffer.data(), buffer.size(), pipe) != nullptr) {
        result.output += buffer.data();
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::size_t CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw std::out_of_range("csv column not found: " + name);
}

double CsvTable::number(std::size_t row, const std::string& column_name) const {
    return std::stod(rows.at(row).at(column(column_name)));
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open csv: " + path.string());
    }
    CsvTable table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        if (first) {
            table.header = std::move(cells);
            first = false;
        } else {
            table.rows.push_back(std::move(cells));
        }
    }
    return table;
}

bool files_identical(const std::filesystem::path& a, const std::filesystem::path& b) {
    std::ifstream fa(a, std::ios::binary);
    std::ifstream fb(b, std::ios::binary);
    if (!fa || !fb) return false;
    std::string ca((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
    std::string cb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
    return ca == cb;
}

ScratchDir::ScratchDir(const std::string& tag) {
    const auto base = std::filesystem::temp_directory_path();
    for (int attempt = 0; attempt < 1000; ++attempt) {
        auto candidate = base / ("herdlab_" + tag + "_" + std::to_string(attempt));
        std::error_code ec;
        if (std::filesystem::create_directory(candidate, ec)) {
            path_ = candidate;
            return;
        }
    }
    throw std::runtime_error("could not create scratch dir for tag " + tag);
}

ScratchDir::~ScratchDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

}  // namespace herdlab::testing
