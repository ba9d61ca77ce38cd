#pragma once

// Poisson kernel P(x, y) of the half-space {u_n > 1} in hyperbolic space H^n
// for Brownian motion with drift alpha = 2 mu - n + 1. The exit point is
// y = sqrt(A(tau)) G with G Gaussian in R^{n-1} (coordinate variance 2), so
//
//   P(rho) = (4 pi)^{-(n-1)/2} int_0^inf e^{-rho^2/4t} q_mu(t) t^{-(n-1)/2} dt.
//
// Doing the t-integral against the density representation gives a single
// v-integral of w (kernel_closed). With A0 = lambda^2 + rho^2, e = kappa/A0,
// a = n/2 - 1 and c = Gamma(a) lambda / (2 pi^{n/2} A0^{n/2}):
//
//   mu < 1/2:  P = c [ (n-2) x^{mu-1/2} + A0 int w ((1+e)^{-a} - 1) dv ]
//   mu > 1/2:  P = c A0 int w ((1+e)^{-a} - 1 + a e) dv
//   mu = 1/2:  P = Gamma(n/2) lambda / (pi^{n/2} A0^{n/2})   (Cauchy)

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "gbmhit/density.hpp"
#include "gbmhit/errors.hpp"
#include "gbmhit/quad.hpp"
#include "gbmhit/wlambda.hpp"

namespace gbmhit {

struct PoissonParams {
    int n = 2;
    ModelParams model;
    double rho = 0.0;

    PoissonParams(int n_, ModelParams m, double rho_) : n(n_), model(m), rho(rho_) { validate(); }

    void validate() const {
        if (n < 2) throw DomainError("hyperbolic dimension n must be >= 2");
        if (!(rho >= 0.0) || !std::isfinite(rho)) throw DomainError("rho must be finite and >= 0");
    }
    /// Drift of the hyperbolic Brownian motion.
    double alpha() const { return 2.0 * model.mu() - n + 1.0; }
    /// mu for a given drift alpha and dimension n.
    static double mu_from_alpha(double alpha, int n) { return 0.5 * (alpha + n - 1.0); }
};

namespace detail {

inline void check_kernel_args(int n, double rho) {
    if (n < 2) throw DomainError("hyperbolic dimension n must be >= 2");
    if (!(rho >= 0.0) || !std::isfinite(rho)) throw DomainError("rho must be finite and >= 0");
}

/// (1+e)^{-a} - 1 + a e, by its binomial series for small e.
inline double second_order_remainder(double a, double e) {
    if (e < 0.5) {
        double term = a * (a + 1.0) / 2.0 * e * e;
        double sum = 0.0;
        for (int k = 2; k < 200; ++k) {
            sum += term;
            if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
            term *= -(a + k) / (k + 1) * e;
        }
        return sum;
    }
    return std::expm1(-a * std::log1p(e)) + a * e;
}

inline double sphere_area(int dim) {
    // area of the unit sphere in R^dim
    return 2.0 * std::pow(std::numbers::pi, 0.5 * dim) / std::tgamma(0.5 * dim);
}

} // namespace detail

/// (n-1)-dimensional Cauchy density with scale lambda at distance rho.
inline double cauchy_kernel(int n, double lambda, double rho) {
    detail::check_kernel_args(n, rho);
    const double a0 = lambda * lambda + rho * rho;
    return std::tgamma(0.5 * n) * lambda / (std::pow(std::numbers::pi, 0.5 * n) * std::pow(a0, 0.5 * n));
}

inline quad::QuadratureSpec default_kernel_quad() {
    quad::QuadratureSpec s;
    s.abs_tol = 1e-300;
    s.rel_tol = 1e-11;
    s.max_subdivisions = 4000;
    return s;
}

/// P(rho) by quadrature of the Gaussian mixture over q, in y = log t on
/// [log(A0/3000), log 1e24]. The omitted t > 1e24 part is at most
/// 1e24^{-(n-1)/2} S(1e24) and is reported in the error estimate.
inline quad::QuadResult kernel_subordination_result(const DensityEvaluator& ev, int n, double rho,
                                                    const quad::QuadratureSpec& spec = default_kernel_quad()) {
    detail::check_kernel_args(n, rho);
    const double lam = ev.params().lambda();
    const double m = 0.5 * (n - 1);
    const double a0 = lam * lam + rho * rho;
    const double r4 = rho * rho / 4.0;
    const double t_cap = DensityEvaluator::kTMax;
    const double y_lo = std::log(a0 / 3000.0);
    const double y_hi = std::log(t_cap);
    auto s = spec;
    for (double f : {1e-2, 1e-1, 0.25, 1.0, 10.0, 1e2, 1e4, 1e8})
        s.split_points.push_back(std::log(a0 * f));
    auto f = [&](double y) {
        const double t = std::exp(y);
        if (t > t_cap) return 0.0;
        return std::exp(-r4 / t + (1.0 - m) * y) * q_density(ev, t);
    };
    auto res = quad::integrate_finite(f, y_lo, y_hi, s);
    const double pref = std::pow(4.0 * std::numbers::pi, -m);
    res.value *= pref;
    res.err_est = pref * (res.err_est + std::pow(t_cap, -m) * survival(ev, t_cap));
    return res;
}

inline double kernel_subordination(const DensityEvaluator& ev, int n, double rho,
                                   const quad::QuadratureSpec& spec = default_kernel_quad()) {
    const auto res = kernel_subordination_result(ev, n, rho, spec);
    if (!res.converged) throw NonConvergence("subordination quadrature did not converge", res.value, res.err_est);
    return res.value;
}

inline double kernel_subordination(const PoissonParams& p) {
    return kernel_subordination(DensityEvaluator(p.model), p.n, p.rho);
}

/// P(rho) as a single v-integral of w. Needs n >= 3 away from mu = 1/2,
/// where the Cauchy form is returned.
inline double kernel_closed(const DensityEvaluator& ev, int n, double rho) {
    detail::check_kernel_args(n, rho);
    const auto& p = ev.params();
    const double lam = p.lambda();
    if (detail::is_stable_case(p)) return cauchy_kernel(n, lam, rho);
    if (n < 3) throw BranchError("closed-form kernel needs n >= 3; use kernel_subordination for n = 2");
    const double a = 0.5 * n - 1.0;
    const double a0 = lam * lam + rho * rho;
    const double c = std::tgamma(a) * lam / (2.0 * std::pow(std::numbers::pi, 0.5 * n) * std::pow(a0, 0.5 * n));
    const auto& w = ev.w();
    double bracket = 0.0;
    if (p.mu() < 0.5) {
        bracket = (n - 2) * std::pow(p.x(), p.mu() - 0.5);
        if (!w.identically_zero()) {
            bracket += a0 * w.integrate_head([&](double v) {
                return std::expm1(-a * std::log1p(v * (2.0 * lam + v) / a0));
            });
            // beyond v_max: (1+e)^{-a} is below 1e-14
            bracket -= a0 * w.power_tail(0);
        }
    } else if (!w.identically_zero()) {
        bracket = a0 * w.integrate_head([&](double v) {
            return detail::second_order_remainder(a, v * (2.0 * lam + v) / a0);
        });
        // beyond v_max: a kappa - A0
        bracket += a * (w.power_tail(2) + 2.0 * lam * w.power_tail(1)) - a0 * w.power_tail(0);
    }
    return c * bracket;
}

inline double kernel_closed(const PoissonParams& p) { return kernel_closed(DensityEvaluator(p.model), p.n, p.rho); }

/// Closed form where it applies, subordination otherwise.
inline double kernel(const DensityEvaluator& ev, int n, double rho) {
    if (detail::is_stable_case(ev.params())) return cauchy_kernel(n, ev.params().lambda(), rho);
    if (n >= 3) return kernel_closed(ev, n, rho);
    return kernel_subordination(ev, n, rho);
}

/// rho^{n+2mu-1} P(rho), or (log rho)^2 rho^{n-1} P(rho) at mu = 0.
inline double normalised_kernel_tail(const DensityEvaluator& ev, int n, double rho) {
    const double mu = ev.params().mu();
    const double pk = kernel(ev, n, rho);
    if (mu == 0.0) return std::pow(std::log(rho), 2) * std::pow(rho, n - 1.0) * pk;
    return std::pow(rho, n + 2.0 * mu - 1.0) * pk;
}

/// Kernel tail constant implied by a density tail constant C:
/// C 4^mu Gamma(mu + (n-1)/2) / pi^{(n-1)/2} for mu > 0, and
/// C Gamma((n-1)/2) / (4 pi^{(n-1)/2}) in the log-corrected case mu = 0.
inline double kernel_tail_from_density(double density_constant, double mu, int n) {
    const double m = 0.5 * (n - 1);
    if (mu == 0.0) return density_constant * std::tgamma(m) / (4.0 * std::pow(std::numbers::pi, m));
    return density_constant * std::pow(4.0, mu) * std::tgamma(mu + m) / std::pow(std::numbers::pi, m);
}

struct KernelTail {
    double value = 0.0;
    TailRegime regime = TailRegime::PowerLaw;
    double error_estimate = 0.0;
    /// (rho, normalised kernel) pairs used for the limit.
    std::vector<std::pair<double, double>> table;
};

/// Numerical limit of normalised_kernel_tail on rho_k = rho0 2^k, k < 12.
inline KernelTail kernel_tail(const DensityEvaluator& ev, int n, double rho0 = 0.0) {
    detail::check_kernel_args(n, 1.0);
    const auto& p = ev.params();
    const double mu = p.mu();
    if (rho0 <= 0.0) rho0 = 1e2 * std::max(1.0, p.lambda());
    constexpr int npts = 12;
    constexpr double ratio = 2.0;
    KernelTail kt;
    std::vector<double> g;
    for (int k = 0; k < npts; ++k) {
        const double rho = rho0 * std::pow(ratio, k);
        g.push_back(normalised_kernel_tail(ev, n, rho));
        kt.table.emplace_back(rho, g.back());
    }
    if (detail::is_stable_case(p)) {
        kt.value = p.lambda() * std::tgamma(0.5 * n) / std::pow(std::numbers::pi, 0.5 * n);
        return kt;
    }
    if (mu == 0.0) {
        // Neville extrapolation in 1/log rho to 0.
        kt.regime = TailRegime::LogCorrected;
        auto extrapolate = [&](int deg) {
            std::vector<double> s;
            std::vector<double> v;
            for (int k = npts - 1 - deg; k < npts; ++k) {
                s.push_back(1.0 / std::log(kt.table[static_cast<std::size_t>(k)].first));
                v.push_back(g[static_cast<std::size_t>(k)]);
            }
            for (int j = 1; j <= deg; ++j)
                for (int i = deg; i >= j; --i) {
                    const auto ui = static_cast<std::size_t>(i);
                    const auto uj = static_cast<std::size_t>(i - j);
                    v[ui] = (s[uj] * v[ui] - s[ui] * v[ui - 1]) / (s[uj] - s[ui]);
                }
            return v.back();
        };
        kt.value = extrapolate(2);
        kt.error_estimate = std::abs(kt.value - extrapolate(3));
    } else {
        // Corrections rho^{-2d} for the density-tail corrections t^{-d}, d in {mu, 2 mu, 1}.
        std::vector<double> d{2.0 * mu, 4.0 * mu, 2.0};
        std::sort(d.begin(), d.end());
        d.erase(std::unique(d.begin(), d.end(), [](double a, double b) { return std::abs(a - b) < 1e-9; }), d.end());
        std::vector<double> seq = g;
        for (int pass = 0; pass < 2; ++pass) {
            const double f = std::pow(ratio, d[static_cast<std::size_t>(pass)]);
            std::vector<double> next;
            for (std::size_t k = 0; k + 1 < seq.size(); ++k) next.push_back((f * seq[k + 1] - seq[k]) / (f - 1.0));
            seq = std::move(next);
        }
        kt.value = seq.back();
        kt.error_estimate = std::abs(seq.back() - seq[seq.size() - 2]);
    }
    if (!(kt.value > 0.0)) throw NonConvergence("kernel tail extrapolation is not positive", kt.value, kt.error_estimate);
    return kt;
}

inline KernelTail kernel_tail(const PoissonParams& p) { return kernel_tail(DensityEvaluator(p.model), p.n); }

/// Local log-log slope of P between rho1 and rho2.
inline double kernel_loglog_slope(const DensityEvaluator& ev, int n, double rho1, double rho2) {
    return std::log(kernel(ev, n, rho2) / kernel(ev, n, rho1)) / std::log(rho2 / rho1);
}

/// int_{R^{n-1}} P dy: sphere area times int_0^R rho^{n-2} P drho, plus the
/// exit mass beyond R, int q(t) Q((n-1)/2, R^2/4t) dt.
inline double kernel_mass(const DensityEvaluator& ev, int n, double radius = 0.0) {
    detail::check_kernel_args(n, 0.0);
    const double lam = ev.params().lambda();
    if (radius <= 0.0) radius = 20.0 * std::max(1.0, lam);
    const double m = 0.5 * (n - 1);
    auto rspec = default_kernel_quad();
    rspec.rel_tol = 1e-9;
    rspec.split_points = {0.1 * lam, 0.5 * lam, lam, 2.0 * lam, 5.0 * lam};
    const auto radial = quad::integrate_finite(
        [&](double r) { return std::pow(r, n - 2.0) * kernel(ev, n, r); }, 0.0, radius, rspec);
    if (!radial.converged) throw NonConvergence("radial kernel quadrature did not converge", radial.value, radial.err_est);

    // t beyond t_hi: Q ~ 1 up to (R^2/4 t_hi)^m / Gamma(m+1) <= 1e-6 relative.
    const double r4 = radius * radius / 4.0;
    const double t_hi = std::min(DensityEvaluator::kTMax, 1e12 * r4 * std::max(1.0, lam * lam));
    auto tspec = default_kernel_quad();
    tspec.rel_tol = 1e-10;
    const double y_lo = std::log(std::max(1e-300, lam * lam / 3000.0));
    for (double f : {1e-2, 1.0, 1e2}) tspec.split_points.push_back(std::log(lam * lam * f));
    for (double f : {1e-2, 1.0, 1e2}) tspec.split_points.push_back(std::log(r4 * f));
    const auto outer = quad::integrate_finite(
        [&](double y) {
            const double t = std::exp(y);
            return t * q_density(ev, t) * boost::math::gamma_q(m, r4 / t);
        },
        y_lo, std::log(t_hi), tspec);
    if (!outer.converged) throw NonConvergence("exit-mass quadrature did not converge", outer.value, outer.err_est);
    return detail::sphere_area(n - 1) * radial.value + outer.value + survival(ev, t_hi);
}

inline double kernel_mass(const PoissonParams& p) { return kernel_mass(DensityEvaluator(p.model), p.n); }

} // namespace gbmhit
