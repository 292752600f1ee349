#pragma once

#include "herdlab/two_state.hpp"

namespace herdlab {

/// Shape parameters of the q-Gaussian form of the symmetric stationary law.
struct QGaussianParams {
    double q = 0.0;              // entropic index, q < 1 in the controlled regime
    double width = 0.0;          // sigma_q = (1 - q) / (3 - q)
    double normalization = 0.0;  // C_q
};

/// Stationary density of the macroscopic fraction x, a Beta(eps1, eps2) law:
///
///   P0(x) = Gamma(e1+e2)/(Gamma(e1) Gamma(e2)) x^(e1-1) (1-x)^(e2-1)
///
/// The prefactor is evaluated through log-Gamma, so large eps do not
/// overflow.  At x in {0, 1} a negative exponent yields +infinity as an
/// explicit divergence marker; a positive exponent yields 0.
double beta_stationary_pdf(double x, const EffectiveRates& rates);

/// Regularized incomplete beta function I_x(a, b): the CDF of the Beta(a, b)
/// law.  Continued-fraction evaluation, accurate to ~1e-14.
double beta_cdf(double x, double a, double b);

/// Mean eps1/(eps1+eps2) and variance eps1*eps2/((eps1+eps2)^2 (eps1+eps2+1))
/// of the Beta stationary law.
double beta_mean(const EffectiveRates& rates);
double beta_variance(const EffectiveRates& rates);

/// Entropic index of the symmetric controlled law with per-side base rate
/// eps_base and m stochastically switching controlled agents:
///
///   q = 1 - 2 / (2 eps_base + m - 2)
///
/// Throws std::domain_error at the pole 2 eps_base + m == 2 (i.e. the folded
/// eps_tilde == 1, where the index is undefined).
double entropic_index(double eps_base, double m);

/// q-Gaussian density on [0,1] for q < 1:
///
///   P0(x) = (3-q) Gamma((3-q)/(2(1-q))) / (sqrt(pi) Gamma(1/(1-q)))
///           * [4 x (1-x)]^(1/(1-q))
///
/// Pointwise identical to beta_stationary_pdf with eps1 = eps2 = eps_tilde
/// where q = 1 - 1/(eps_tilde - 1).  Throws std::domain_error for q >= 1.
double q_gaussian_pdf(double x, double q);

/// Width and normalization constants that accompany the entropic index.
QGaussianParams q_gaussian_params(double q);

}  // namespace herdlab
