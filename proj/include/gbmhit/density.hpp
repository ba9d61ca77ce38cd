#pragma once

// Density q_mu(t) of the stopped exponential functional A(tau), for the
// geometric Brownian motion x exp(B(t) - 2 mu t) stopped on hitting 1:
//
//   q(t) = lambda e^{-lambda^2/4t} / sqrt(pi t)
//          * ( [l = 0] x^{mu-1/2}/(2t) + int_0^inf R_l(kappa/4t) w(v) dv ),
//   R_l(s) = e^{-s} - sum_{j<=l} (-s)^j/j!,   kappa = v(2 lambda + v).
//
// Also: the Dufresne density of A(inf), the Bessel-ratio Laplace transform,
// the survival function, normalisation, and large-t tail constants.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "gbmhit/errors.hpp"
#include "gbmhit/quad.hpp"
#include "gbmhit/specfun.hpp"
#include "gbmhit/wlambda.hpp"

namespace gbmhit {

/// Number of subtracted Taylor terms: floor(mu + 1/2), or mu - 1/2 at half-integers.
inline int l_terms_for(double mu) {
    if (is_half_integer(mu)) return static_cast<int>(std::lround(mu - 0.5));
    return static_cast<int>(std::floor(mu + 0.5));
}

inline quad::QuadratureSpec default_density_quad() {
    quad::QuadratureSpec s;
    s.abs_tol = 1e-10;
    s.rel_tol = 1e-10;
    s.max_subdivisions = 2000;
    return s;
}

class DensityEvaluator {
  public:
    /// Largest t at which the v-rule tail closure is certified.
    static constexpr double kTMax = 1e24;

    explicit DensityEvaluator(const ModelParams& p, quad::QuadratureSpec q = default_density_quad())
        : DensityEvaluator(build_w(p), std::move(q)) {}

    explicit DensityEvaluator(WLambdaRep w, quad::QuadratureSpec q = default_density_quad())
        : w_(std::move(w)), quad_(std::move(q)), l_terms_(l_terms_for(w_.params().mu())) {
        quad_.validate();
        if (params().lambda() < 0.05)
            diagnostics_.push_back("warning: lambda < 0.05, density concentrates near t = 0 and is numerically fragile");
    }

    const ModelParams& params() const { return w_.params(); }
    const WLambdaRep& w() const { return w_; }
    const quad::QuadratureSpec& quad() const { return quad_; }
    int l_terms() const { return l_terms_; }
    const std::vector<std::string>& diagnostics() const { return diagnostics_; }

  private:
    WLambdaRep w_;
    quad::QuadratureSpec quad_;
    int l_terms_;
    std::vector<std::string> diagnostics_;
};

namespace detail {

/// R_l(s) = e^{-s} - sum_{j=0}^{l} (-s)^j / j!.
inline double subtracted_exp(double s, int l) {
    if (s < 1.0) {
        // Taylor remainder: sum_{j>l} (-s)^j / j!
        double term = 1.0;
        for (int j = 1; j <= l + 1; ++j) term *= -s / j;
        double sum = 0.0;
        for (int j = l + 1; j < l + 60; ++j) {
            sum += term;
            if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
            term *= -s / (j + 1);
        }
        return sum;
    }
    double poly = 0.0;
    double term = 1.0;
    for (int j = 0; j <= l; ++j) {
        poly += term;
        term *= -s / (j + 1);
    }
    return std::exp(-s) - poly;
}

/// int_{v_max}^inf kappa^j w(v) dv.
inline double kappa_power_tail(const WLambdaRep& w, int j) {
    const double tl = 2.0 * w.params().lambda();
    double s = 0.0;
    for (int i = 0; i <= j; ++i) s += binomial(j, i) * std::pow(tl, j - i) * w.power_tail(j + i);
    return s;
}

inline void check_t(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("t must be finite and > 0");
    if (t > DensityEvaluator::kTMax) throw AccuracyError("t exceeds the certified range 1e24");
}

inline bool is_stable_case(const ModelParams& p) { return std::abs(p.mu() - 0.5) < 1e-12; }

} // namespace detail

/// q_mu(t) using l subtracted terms (0 <= l <= l_terms; l = 0 carries the x^{mu-1/2}/(2t) term).
inline double q_density_form(const DensityEvaluator& ev, double t, int l) {
    detail::check_t(t);
    if (l < 0 || l > ev.l_terms()) throw DomainError("subtraction order outside [0, l_terms]");
    const auto& p = ev.params();
    const double lam = p.lambda();
    const double pref = lam * std::exp(-lam * lam / (4.0 * t)) / std::sqrt(std::numbers::pi * t);
    if (pref == 0.0) return 0.0;
    const double c4t = 1.0 / (4.0 * t);
    double bracket = l == 0 ? std::pow(p.x(), p.mu() - 0.5) / (2.0 * t) : 0.0;
    if (!ev.w().identically_zero()) {
        bracket += ev.w().integrate_head([&](double v) { return detail::subtracted_exp(v * (2.0 * lam + v) * c4t, l); });
        if (ev.w().has_continuous()) {
            double coef = 1.0;
            for (int j = 0; j <= l; ++j) {
                bracket -= coef * detail::kappa_power_tail(ev.w(), j);
                coef *= -c4t / (j + 1);
            }
        }
    }
    return pref * bracket;
}

/// q_mu(t).
inline double q_density(const DensityEvaluator& ev, double t) {
    detail::check_t(t);
    const auto& p = ev.params();
    if (detail::is_stable_case(p)) {
        const double lam = p.lambda();
        return lam * std::exp(-lam * lam / (4.0 * t)) / (2.0 * std::sqrt(std::numbers::pi * t * t * t));
    }
    return q_density_form(ev, t, ev.l_terms());
}

/// P(A(tau) > T) from the exact t-antiderivative of the representation.
inline double survival(const DensityEvaluator& ev, double T) {
    detail::check_t(T);
    const auto& p = ev.params();
    const double lam = p.lambda();
    const double sqrtT = std::sqrt(T);
    const double y0 = lam / (2.0 * sqrtT);
    const int l = detail::is_stable_case(p) ? 0 : ev.l_terms();
    double s = l == 0 ? std::pow(p.x(), p.mu() - 0.5) * std::erf(y0) : 0.0;
    if (ev.w().identically_zero()) return s;

    // psi(y) = y erf(y) + e^{-y^2}/sqrt(pi) - 1/sqrt(pi)
    auto psi = [](double y) { return y * std::erf(y) + std::expm1(-y * y) / std::sqrt(std::numbers::pi); };
    const double psi0 = psi(y0);
    const double b = lam * lam / 4.0;
    // E_j = int_T^inf t^{-1/2-j} e^{-b/t} dt
    std::vector<double> e(static_cast<std::size_t>(l) + 1, 0.0);
    for (int j = 1; j <= l; ++j) {
        const double a = j - 0.5;
        e[static_cast<std::size_t>(j)] =
            b > 0.0 ? std::pow(b, -a) * boost::math::tgamma_lower(a, b / T) : std::pow(T, -a) / a;
    }
    const double rpi = 1.0 / std::sqrt(std::numbers::pi);
    auto poly_part = [&](double kappa) {
        double acc = 0.0;
        double coef = 1.0;
        for (int j = 1; j <= l; ++j) {
            coef *= -kappa / (4.0 * j);
            acc += coef * e[static_cast<std::size_t>(j)];
        }
        return -lam * rpi * acc;
    };
    s += ev.w().integrate_head([&](double v) {
        const double y1 = (lam + v) / (2.0 * sqrtT);
        return -2.0 * lam * sqrtT * (psi(y1) - psi0) + poly_part(v * (2.0 * lam + v));
    });
    if (ev.w().has_continuous()) {
        const auto& w = ev.w();
        const double phi0 = psi0 + rpi;
        s += -lam * w.power_tail(1) + (-lam * lam + 2.0 * lam * sqrtT * phi0) * w.power_tail(0);
        double coef = 1.0;
        for (int j = 1; j <= l; ++j) {
            coef *= -1.0 / (4.0 * j);
            s += -lam * rpi * coef * e[static_cast<std::size_t>(j)] * detail::kappa_power_tail(w, j);
        }
    }
    return s;
}

/// int_0^inf q(t) dt: adaptive quadrature on [0, T] plus the survival at T.
inline double total_mass(const DensityEvaluator& ev) {
    const double lam = ev.params().lambda();
    const double T = 1e3 * std::max(1.0, lam * lam);
    auto spec = ev.quad();
    for (int k = -2; k <= 3; ++k) spec.split_points.push_back(0.25 * lam * lam * std::pow(10.0, k));
    for (int k = -3; k <= 5; ++k) spec.split_points.push_back(std::pow(10.0, k));
    const auto head = quad::integrate_finite([&](double t) { return t > 0.0 ? q_density(ev, t) : 0.0; }, 0.0, T, spec);
    if (!head.converged) throw NonConvergence("normalisation quadrature did not converge", head.value, head.err_est);
    return head.value + survival(ev, T);
}

/// Density of A(inf) = x^2/(4Z) at x = 1, Z ~ Gamma(mu, 1):
/// 2^{-2 mu} e^{-1/4t} / (Gamma(mu) t^{1+mu}).
inline double dufresne_density(double mu, double t) {
    if (!(mu > 0.0) || !std::isfinite(mu)) throw DomainError("dufresne_density requires mu > 0");
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("dufresne_density requires t > 0");
    return std::exp(-2.0 * mu * std::numbers::ln2 - 0.25 / t - std::lgamma(mu) - (1.0 + mu) * std::log(t));
}

/// P(x^2/(4Z) <= t) for Z ~ Gamma(mu, 1).
inline double dufresne_cdf(double mu, double x, double t) {
    if (!(mu > 0.0)) throw DomainError("dufresne_cdf requires mu > 0");
    if (!(t > 0.0)) return 0.0;
    return boost::math::gamma_q(mu, x * x / (4.0 * t));
}

/// CDF of A(tau) at mu = 1/2: P(A <= t) = erfc(lambda / (2 sqrt t)).
inline double stable_cdf(double lambda, double t) {
    if (!(t > 0.0)) return 0.0;
    return std::erfc(lambda / (2.0 * std::sqrt(t)));
}

/// E exp(-r^2 A(tau)) = x^mu K_mu(x r) / K_mu(r).
inline double laplace_ratio(double mu, double x, double r) {
    if (!(mu >= 0.0) || !std::isfinite(mu)) throw DomainError("laplace_ratio requires mu >= 0");
    if (!(x > 1.0) || !std::isfinite(x)) throw DomainError("laplace_ratio requires x > 1");
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("laplace_ratio requires r > 0");
    return std::pow(x, mu) * bessel_k_scaled(mu, x * r) / bessel_k_scaled(mu, r) * std::exp(-(x - 1.0) * r);
}

/// int_0^inf e^{-r^2 t} q(t) dt by quadrature.
inline double laplace_of_density(const DensityEvaluator& ev, double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("laplace_of_density requires r > 0");
    const double lam = ev.params().lambda();
    auto spec = ev.quad();
    for (int k = -2; k <= 2; ++k) spec.split_points.push_back(0.25 * lam * lam * std::pow(10.0, k));
    spec.split_points.push_back(lam / (2.0 * r)); // maximiser of e^{-r^2 t - lambda^2/4t}
    auto f = [&](double t) { return t > 0.0 ? std::exp(-r * r * t) * q_density(ev, t) : 0.0; };
    const auto res = quad::integrate_semi_infinite(f, 0.0, r * r, spec);
    if (!res.converged) throw NonConvergence("Laplace quadrature did not converge", res.value, res.err_est);
    return res.value;
}

enum class TailRegime { PowerLaw, LogCorrected };

struct TailConstant {
    double mu = 0.0;
    double value = 0.0;
    TailRegime regime = TailRegime::PowerLaw;
    double error_estimate = 0.0;
    /// (t, normalised density) pairs used for the limit.
    std::vector<std::pair<double, double>> table;
};

/// t^{mu+1} q(t), or (log t)^2 t q(t) at mu = 0.
inline double normalised_tail(const DensityEvaluator& ev, double t) {
    const double q = q_density(ev, t);
    if (ev.params().mu() == 0.0) return std::pow(std::log(t), 2) * t * q;
    return std::pow(t, ev.params().mu() + 1.0) * q;
}

/// Numerical limit of normalised_tail on t_k = t0 4^k, k < 12.
inline TailConstant tail_constant_numeric(const DensityEvaluator& ev, double t0 = 0.0) {
    const auto& p = ev.params();
    const double mu = p.mu();
    if (t0 <= 0.0) t0 = 1e4 * std::max(1.0, p.lambda() * p.lambda());
    TailConstant tc;
    tc.mu = mu;
    constexpr int npts = 12;
    constexpr double ratio = 4.0;
    std::vector<double> g;
    for (int k = 0; k < npts; ++k) {
        const double t = t0 * std::pow(ratio, k);
        g.push_back(normalised_tail(ev, t));
        tc.table.emplace_back(t, g.back());
    }
    if (mu == 0.0) {
        // Polynomial extrapolation in s = 1/log t to s = 0 (Neville).
        tc.regime = TailRegime::LogCorrected;
        auto extrapolate = [&](int deg) {
            std::vector<double> s;
            std::vector<double> v;
            for (int k = npts - 1 - deg; k < npts; ++k) {
                s.push_back(1.0 / std::log(tc.table[static_cast<std::size_t>(k)].first));
                v.push_back(g[static_cast<std::size_t>(k)]);
            }
            for (int m = 1; m <= deg; ++m)
                for (int i = deg; i >= m; --i)
                    v[static_cast<std::size_t>(i)] =
                        (s[static_cast<std::size_t>(i - m)] * v[static_cast<std::size_t>(i)] -
                         s[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i - 1)]) /
                        (s[static_cast<std::size_t>(i - m)] - s[static_cast<std::size_t>(i)]);
            return v.back();
        };
        tc.value = extrapolate(2);
        tc.error_estimate = std::abs(tc.value - extrapolate(3));
    } else {
        // Richardson elimination of the two leading t^{-d} corrections; the
        // Laplace transform expands in powers s^{k mu + j}, giving d in {mu, 2 mu, 1}.
        std::vector<double> d{mu, 2.0 * mu, 1.0};
        std::sort(d.begin(), d.end());
        d.erase(std::unique(d.begin(), d.end(), [](double a, double b) { return std::abs(a - b) < 1e-9; }), d.end());
        std::vector<double> seq = g;
        for (int pass = 0; pass < 2; ++pass) {
            const double f = std::pow(ratio, d[static_cast<std::size_t>(pass)]);
            std::vector<double> next;
            for (std::size_t k = 0; k + 1 < seq.size(); ++k) next.push_back((f * seq[k + 1] - seq[k]) / (f - 1.0));
            seq = std::move(next);
        }
        tc.value = seq.back();
        tc.error_estimate = std::abs(seq.back() - seq[seq.size() - 2]);
    }
    if (!(tc.value > 0.0)) throw NonConvergence("tail constant extrapolation is not positive", tc.value, tc.error_estimate);
    return tc;
}

/// Tail constant of q: analytic at half-integer mu, numerical otherwise.
inline TailConstant tail_constant(const DensityEvaluator& ev) {
    const auto& p = ev.params();
    const double mu = p.mu();
    if (detail::is_stable_case(p)) {
        TailConstant tc;
        tc.mu = mu;
        tc.value = p.lambda() / (2.0 * std::sqrt(std::numbers::pi));
        return tc;
    }
    if (is_half_integer(mu)) {
        const int m = static_cast<int>(std::lround(mu + 0.5));
        TailConstant tc;
        tc.mu = mu;
        const double sign = m % 2 == 0 ? 1.0 : -1.0;
        tc.value = p.lambda() * sign / (std::pow(4.0, m) * detail::factorial(m)) * w_moment(ev.w(), m) /
                   std::sqrt(std::numbers::pi);
        return tc;
    }
    return tail_constant_numeric(ev);
}

/// Density of A(tau_a) started at x > a, from the a = 1 density by scaling.
inline double rescale(const DensityEvaluator& ev_ratio, double a, double t) {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("rescale requires a > 0");
    return q_density(ev_ratio, t / (a * a)) / (a * a);
}

inline double rescale(double mu, double a, double x, double t) {
    if (!(a > 0.0) || !(x > a)) throw DomainError("rescale requires 0 < a < x");
    return rescale(DensityEvaluator(ModelParams(mu, x / a)), a, t);
}

} // namespace gbmhit
