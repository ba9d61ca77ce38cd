#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "gbmhit/errors.hpp"
#include "gbmhit/wlambda.hpp"
#include "oracle_values.hpp"

using namespace gbmhit;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
} // namespace

TEST(ModelParams, Validation) {
    EXPECT_THROW(ModelParams(-0.1, 2.0), DomainError);
    EXPECT_THROW(ModelParams(1.0, 1.0), DomainError);
    EXPECT_THROW(ModelParams(1.0, std::nan("")), DomainError);
    const ModelParams p(1.0, 3.0);
    EXPECT_EQ(p.lambda(), 2.0);
    EXPECT_EQ(ModelParams::a(), 1.0);
}

TEST(H, MatchesMpmathTable) {
    for (const auto& row : oracle::kH) {
        SCOPED_TRACE(testing::Message() << "mu=" << row.mu << " x=" << row.x << " u=" << row.u);
        EXPECT_LT(rel(h_mu_lambda(row.u, ModelParams(row.mu, row.x)), row.h), 1e-11);
    }
}

TEST(H, SmallUForm) {
    // leading Bessel forms: h = C u^{2mu} e^{-lambda u} / [cos^2(pi mu)(1-r)^2 + sin^2(pi mu)(1+r)^2]
    // with r = (u/2)^{2mu} Gamma(1-mu)/Gamma(1+mu) for mu < 1, and h ~ C u^{2mu} otherwise
    for (double mu : {0.05, 0.3, 0.8, 1.0, 2.2}) {
        const ModelParams p(mu, 2.0);
        for (double u : {1e-7, 1e-12}) {
            double d = 1.0;
            if (mu < 1.0) {
                const double r = std::pow(u / 2, 2 * mu) * std::tgamma(1 - mu) / std::tgamma(1 + mu);
                const double c = std::cos(std::numbers::pi * mu);
                const double s = std::sin(std::numbers::pi * mu);
                d = c * c * (1 - r) * (1 - r) + s * s * (1 + r) * (1 + r);
            }
            const double expect = h_small_u_coefficient(p) * std::pow(u, 2 * mu) * std::exp(-u) / d;
            EXPECT_LT(rel(h_mu_lambda(u, p), expect), 1e-10) << mu << " " << u;
        }
    }
}

TEST(H, NonNegative) {
    for (double mu : {0.0, 0.4, 1.0, 3.3, 7.9})
        for (double u = 1e-12; u < 200; u *= 3.7) EXPECT_GE(h_mu_lambda(u, ModelParams(mu, 1.7)), 0.0);
}

TEST(W2, MatchesMpmathQuadrature) {
    for (const auto& row : oracle::kW2) {
        SCOPED_TRACE(testing::Message() << "mu=" << row.mu << " x=" << row.x << " v=" << row.v);
        const ModelParams p(row.mu, row.x);
        EXPECT_LT(rel(w2_eval(row.v, p), row.w2), 1e-9);
        EXPECT_LT(rel(build_w(p).w2(row.v), row.w2), 1e-9);
    }
}

TEST(W2, ExponentialSumMatchesAdaptive) {
    for (double mu : {0.0, 0.3, 1.0, 2.2, 4.2}) {
        const ModelParams p(mu, 2.0);
        const auto rep = build_w(p);
        for (double v : {1e-6, 0.05, 0.7, 3.0, 25.0, 400.0})
            EXPECT_LT(rel(rep.w2(v), w2_eval(v, p)), 1e-10) << mu << " " << v;
    }
}

TEST(W2, SignAndMonotonicity) {
    // -cos(pi mu) w2 is completely monotone: positive and decreasing in v
    for (double mu : {0.0, 0.3, 0.8, 1.0, 2.2}) {
        const ModelParams p(mu, 2.0);
        const auto rep = build_w(p);
        const double s = -std::cos(std::numbers::pi * mu);
        double prev = 1e300;
        for (double v = 1e-4; v < 1e4; v *= 2.3) {
            const double w = s * rep.w2(v);
            EXPECT_GT(w, 0.0);
            EXPECT_LT(w, prev);
            prev = w;
        }
    }
}

TEST(W2, AbsentAtHalfIntegers) {
    EXPECT_THROW(w2_eval(1.0, ModelParams(1.5, 2.0)), BranchError);
    const auto rep = build_w(ModelParams(2.5, 2.0));
    EXPECT_FALSE(rep.has_continuous());
    EXPECT_EQ(rep.w2(3.0), 0.0);
    EXPECT_TRUE(build_w(ModelParams(0.5, 2.0)).identically_zero());
}

TEST(W2, TailLimitsFromSmallUBehaviour) {
    // v^{2mu+2} w2 -> -cos(pi mu) Gamma(2mu+2) C x^mu / lambda
    const ModelParams p1(1.0, 2.0);
    EXPECT_NEAR(w2_tail_limit(p1), 9.0, 1e-12);
    const auto rep1 = build_w(p1);
    EXPECT_LT(rel(std::pow(1e4, 4) * rep1.w2(1e4), 9.0), 1e-3);
    EXPECT_LT(rel(std::pow(1e6, 4) * rep1.w2(1e6), 9.0), 1e-5);
    const ModelParams p0(0.0, 2.0);
    const auto rep0 = build_w(p0);
    const double v = 1e8;
    // (v log v)^2 w2 -> -log x / lambda with O(1/log v) corrections
    EXPECT_LT(rel(std::pow(v * std::log(v), 2) * rep0.w2(v), w2_tail_limit(p0)), 0.05);
}

TEST(W1, ThreeHalvesIsPureExponential) {
    for (double x : {1.2, 2.0, 5.0}) {
        const auto rep = build_w(ModelParams(1.5, x));
        for (double v : {0.0, 0.3, 2.0, 11.0}) EXPECT_NEAR(rep(v), std::exp(-v), 1e-14) << x << " " << v;
    }
}

TEST(W1, FiveHalvesClosedForm) {
    // zeros (-3 +- i sqrt3)/2; coefficients from the half-integer polynomial form
    const ModelParams p(2.5, 2.0);
    const auto rep = build_w(p);
    ASSERT_EQ(rep.discrete_terms().size(), 2u);
    double sum_c = 0.0;
    for (const auto& t : rep.discrete_terms()) sum_c += t.coefficient.real();
    EXPECT_NEAR(rep(0.0), sum_c, 1e-14);
    EXPECT_NEAR(rep(0.0), 9.0, 1e-12);
    EXPECT_NEAR(rep.w1(1.0), w1_eval(1.0, p, k_zero_set(2.5)), 1e-14);
}

TEST(W1, ConjugatePairsGiveRealSum) {
    const auto rep = build_w(ModelParams(3.0, 2.0));
    const auto& t = rep.discrete_terms();
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(t[0].coefficient, std::conj(t[1].coefficient));
    EXPECT_EQ(t[0].rate, std::conj(t[1].rate));
}

TEST(Moments, IdentitiesAcrossMu) {
    for (double mu : {0.0, 0.3, 1.0, 1.5, 2.2, 2.5, 3.7}) {
        for (double x : {1.2, 2.0, 5.0}) {
            const auto rep = build_w(ModelParams(mu, x));
            const double m0 = std::pow(x, mu - 0.5) * (mu * mu - 0.25) / (2 * x);
            EXPECT_NEAR(w_moment(rep, 0), m0, 1e-9 * std::max(1.0, std::abs(m0))) << mu << " " << x;
            if (mu > 0.5) {
                const double m1 = 2 * std::pow(x, mu - 0.5);
                EXPECT_NEAR(w_moment(rep, 1), m1, 1e-9 * m1) << mu << " " << x;
            }
        }
    }
    EXPECT_NEAR(w_moment(build_w(ModelParams(2.5, 2.0)), 2), 0.0, 1e-9);
}

TEST(Moments, IntegrabilityGuard) {
    EXPECT_THROW(w_moment(build_w(ModelParams(0.3, 2.0)), 1), IntegrabilityError);
    EXPECT_THROW(w_moment(build_w(ModelParams(1.0, 2.0)), 2), IntegrabilityError);
    EXPECT_THROW(build_w(ModelParams(1.0, 2.0)).w2_power_moment(3), IntegrabilityError);
}

TEST(Build, RejectsOrdersAboveTen) { EXPECT_THROW(build_w(ModelParams(10.5, 2.0)), DomainError); }
