#include "herdlab/stationary.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace herdlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Continued fraction for the incomplete beta function (Lentz's method).
double beta_continued_fraction(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3.0e-16;
    constexpr double kFpMin = 1.0e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double result = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        result *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        result *= del;
        if (std::fabs(del - 1.0) < kEps) return result;
    }
    throw std::runtime_error("beta_cdf: continued fraction did not converge");
}

}  // namespace

double beta_stationary_pdf(double x, const EffectiveRates& rates) {
    rates.validate();
    if (x < 0.0 || x > 1.0) {
        throw std::domain_error("beta_stationary_pdf: x outside [0, 1]");
    }
    const double e1 = rates.eps1;
    const double e2 = rates.eps2;
    if (x == 0.0) {
        if (e1 < 1.0) return kInf;
        if (e1 > 1.0) return 0.0;
        // exponent zero: density equals the prefactor times (1-x)^(e2-1) at 0
        return std::exp(std::lgamma(e1 + e2) - std::lgamma(e1) - std::lgamma(e2));
    }
    if (x == 1.0) {
        if (e2 < 1.0) return kInf;
        if (e2 > 1.0) return 0.0;
        return std::exp(std::lgamma(e1 + e2) - std::lgamma(e1) - std::lgamma(e2));
    }
    const double log_pdf = std::lgamma(e1 + e2) - std::lgamma(e1) - std::lgamma(e2) +
                           (e1 - 1.0) * std::log(x) + (e2 - 1.0) * std::log1p(-x);
    return std::exp(log_pdf);
}

double beta_cdf(double x, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::domain_error("beta_cdf: shape parameters must be > 0");
    }
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double log_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
    const double bt = std::exp(log_bt);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return bt * beta_continued_fraction(a, b, x) / a;
    }
    return 1.0 - bt * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double beta_mean(const EffectiveRates& rates) {
    rates.validate();
    return rates.eps1 / (rates.eps1 + rates.eps2);
}

double beta_variance(const EffectiveRates& rates) {
    rates.validate();
    const double s = rates.eps1 + rates.eps2;
    return rates.eps1 * rates.eps2 / (s * s * (s + 1.0));
}

double entropic_index(double eps_base, double m) {
    if (!(eps_base > 0.0) || m < 0.0) {
        throw std::domain_error("entropic_index: eps_base must be > 0 and m >= 0");
    }
    const double denom = 2.0 * eps_base + m - 2.0;
    if (denom == 0.0) {
        throw std::domain_error(
            "entropic_index: undefined at eps_tilde == 1 (2*eps + m == 2)");
    }
    return 1.0 - 2.0 / denom;
}

double q_gaussian_pdf(double x, double q) {
    if (q >= 1.0) {
        throw std::domain_error("q_gaussian_pdf: requires q < 1");
    }
    if (x < 0.0 || x > 1.0) {
        throw std::domain_error("q_gaussian_pdf: x outside [0, 1]");
    }
    const double inv = 1.0 / (1.0 - q);  // exponent, > 0 for q < 1
    if (x == 0.0 || x == 1.0) return 0.0;
    const double log_norm = std::log(3.0 - q) +
                            std::lgamma((3.0 - q) * 0.5 * inv) -
                            0.5 * std::log(M_PI) - std::lgamma(inv);
    const double core = std::log(4.0) + std::log(x) + std::log1p(-x);
    return std::exp(log_norm + inv * core);
}

QGaussianParams q_gaussian_params(double q) {
    if (q >= 1.0) {
        throw std::domain_error("q_gaussian_params: requires q < 1");
    }
    const double inv = 1.0 / (1.0 - q);
    const double norm = std::exp(std::log(3.0 - q) +
                                 std::lgamma((3.0 - q) * 0.5 * inv) -
                                 0.5 * std::log(M_PI) - std::lgamma(inv));
    return {q, (1.0 - q) / (3.0 - q), norm};
}

}  // namespace herdlab
