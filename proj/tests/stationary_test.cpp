#include "herdlab/stationary.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "test_support.hpp"

namespace herdlab {
namespace {

TEST(BetaStationaryPdf, UniformCase) {
    EXPECT_NEAR(beta_stationary_pdf(0.37, {1.0, 1.0}), 1.0, 1e-12);
}

TEST(BetaStationaryPdf, HandEvaluatedSymmetricCase) {
    // Gamma(4)/(Gamma(2)Gamma(2)) * 0.5 * 0.5 = 6 * 0.25 = 1.5
    EXPECT_NEAR(beta_stationary_pdf(0.5, {2.0, 2.0}), 1.5, 1e-12);
}

TEST(BetaStationaryPdf, BoundaryBehavior) {
    EXPECT_DOUBLE_EQ(beta_stationary_pdf(0.0, {2.0, 2.0}), 0.0);
    EXPECT_DOUBLE_EQ(beta_stationary_pdf(1.0, {2.0, 2.0}), 0.0);
    // exponent < 0 diverges and must say so explicitly
    EXPECT_TRUE(std::isinf(beta_stationary_pdf(0.0, {0.5, 2.0})));
    EXPECT_TRUE(std::isinf(beta_stationary_pdf(1.0, {2.0, 0.9})));
    // exponent == 0 is finite: Beta(1, 2) at 0 has density 2
    EXPECT_NEAR(beta_stationary_pdf(0.0, {1.0, 2.0}), 2.0, 1e-12);
}

TEST(BetaStationaryPdf, LargeArgumentsDoNotOverflow) {
    const double value = beta_stationary_pdf(0.5, {300.0, 300.0});
    EXPECT_TRUE(std::isfinite(value));
    EXPECT_GT(value, 0.0);
}

TEST(BetaStationaryPdf, NormalizesToOne) {
    for (const double eps : {0.5, 1.0, 2.0, 8.1}) {
        const EffectiveRates rates{eps, eps};
        const double integral = testing::beta_weighted_integral(
            [&rates](double x) { return beta_stationary_pdf(x, rates); });
        EXPECT_NEAR(integral, 1.0, 1e-6) << "eps = " << eps;
    }
}

TEST(BetaCdf, KnownValues) {
    EXPECT_NEAR(beta_cdf(0.3, 1.0, 1.0), 0.3, 1e-14);
    EXPECT_NEAR(beta_cdf(0.5, 2.0, 2.0), 0.5, 1e-14);
    // CDF of Beta(2,2) is 3x^2 - 2x^3
    EXPECT_NEAR(beta_cdf(0.25, 2.0, 2.0), 3 * 0.0625 - 2 * 0.015625, 1e-13);
    EXPECT_DOUBLE_EQ(beta_cdf(0.0, 2.0, 2.0), 0.0);
    EXPECT_DOUBLE_EQ(beta_cdf(1.0, 2.0, 2.0), 1.0);
}

TEST(BetaCdf, MatchesQuadratureForAsymmetricShapes) {
    const EffectiveRates rates{0.6, 3.0};
    for (const double x : {0.01, 0.1, 0.4, 0.9}) {
        const double quad = testing::beta_weighted_integral([&](double t) {
            return t <= x ? beta_stationary_pdf(t, rates) : 0.0;
        });
        EXPECT_NEAR(beta_cdf(x, rates.eps1, rates.eps2), quad, 2e-5) << "x = " << x;
    }
}

TEST(EntropicIndex, PaperLadderValues) {
    EXPECT_NEAR(entropic_index(0.1, 2.0), -9.0, 1e-12);
    EXPECT_NEAR(entropic_index(0.1, 4.0), 1.0 - 2.0 / 2.2, 1e-12);    // 0.0909...
    EXPECT_NEAR(entropic_index(0.1, 8.0), 1.0 - 2.0 / 6.2, 1e-12);    // 0.6774...
    EXPECT_NEAR(entropic_index(0.1, 16.0), 1.0 - 2.0 / 14.2, 1e-12);  // 0.8591...
    EXPECT_NEAR(entropic_index(1.0, 2.0), 0.0, 1e-12);
}

TEST(EntropicIndex, PoleIsRejected) {
    EXPECT_THROW(entropic_index(1.0, 0.0), std::domain_error);
    EXPECT_THROW(entropic_index(0.5, 1.0), std::domain_error);
}

TEST(QGaussianPdf, HandEvaluatedValues) {
    // q = 0 collapses onto Beta(2,2): 6 x (1-x)
    EXPECT_NEAR(q_gaussian_pdf(0.5, 0.0), 1.5, 1e-12);
    EXPECT_NEAR(q_gaussian_pdf(0.25, 0.0), 1.125, 1e-12);
    EXPECT_DOUBLE_EQ(q_gaussian_pdf(0.0, 0.0), 0.0);
    EXPECT_DOUBLE_EQ(q_gaussian_pdf(1.0, -3.0), 0.0);
}

TEST(QGaussianPdf, RejectsNonCompactRegime) {
    EXPECT_THROW(q_gaussian_pdf(0.5, 1.0), std::domain_error);
    EXPECT_THROW(q_gaussian_pdf(0.5, 1.5), std::domain_error);
}

// The q-Gaussian form and the Beta form are the same function: for
// eps_tilde = eps + m/2 > 1 and q = 1 - 1/(eps_tilde - 1) they must agree
// pointwise to near machine precision.
TEST(QGaussianPdf, MatchesBetaFormPointwise) {
    for (const double eps_tilde : {1.1, 2.1, 4.1, 8.1}) {
        const double m = 2.0 * (eps_tilde - 0.1);
        const double q = entropic_index(0.1, m);
        EXPECT_NEAR(q, 1.0 - 1.0 / (eps_tilde - 1.0), 1e-12);
        const EffectiveRates rates{eps_tilde, eps_tilde};
        double worst = 0.0;
        for (int i = 1; i <= 99; ++i) {
            const double x = i / 100.0;
            const double beta = beta_stationary_pdf(x, rates);
            const double qg = q_gaussian_pdf(x, q);
            worst = std::max(worst, std::fabs(qg - beta) / beta);
        }
        EXPECT_LT(worst, 1e-10) << "eps_tilde = " << eps_tilde;
    }
}

TEST(QGaussianParams, WidthFollowsTheIndex) {
    const auto params = q_gaussian_params(0.0);
    EXPECT_NEAR(params.width, 1.0 / 3.0, 1e-14);
    EXPECT_NEAR(params.normalization, 1.5, 1e-12);
    const auto narrow = q_gaussian_params(0.859154929577465);
    EXPECT_NEAR(narrow.width, (1.0 - narrow.q) / (3.0 - narrow.q), 1e-14);
}

TEST(BetaMoments, MatchClosedForms) {
    const EffectiveRates rates{8.1, 8.1};
    EXPECT_NEAR(beta_mean(rates), 0.5, 1e-14);
    EXPECT_NEAR(beta_variance(rates), 1.0 / (4.0 * 17.2), 1e-14);
}

}  // namespace
}  // namespace herdlab
