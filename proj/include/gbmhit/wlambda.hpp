#pragma once

// The kernel w of the density representation,
//   w(v) = w1(v) + w2(v),
//   w1(v) = -(x^mu/lambda) sum_i z_i e^{lambda z_i} K_mu(x z_i) e^{z_i v} / K_{mu-1}(z_i),
//   w2(v) = -cos(pi mu) (x^mu/lambda) int_0^inf h(u) e^{-v u} u du,
// where z_i are the zeros of K_mu and w2 is absent when mu - 1/2 is a
// non-negative integer.
//
// WLambdaRep stores w2 as an exponential sum sum_j W_j e^{-u_j v} obtained
// from a fixed composite Gauss-Legendre rule in u (geometric panels down to
// u = 1e-20). Every v-integral of w against polynomials and exponentials then
// has a termwise closed form, which is how moments and tails are computed.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

#include "gbmhit/errors.hpp"
#include "gbmhit/quad.hpp"
#include "gbmhit/specfun.hpp"

namespace gbmhit {

/// Drift mu >= 0 and start point x > 1 of the geometric Brownian motion
/// x exp(B(t) - 2 mu t); the hitting level is fixed at a = 1.
class ModelParams {
  public:
    ModelParams(double mu, double x) : mu_(mu), x_(x) {
        if (!(mu >= 0.0) || !std::isfinite(mu)) throw DomainError("mu must be finite and >= 0");
        if (!(x > 1.0) || !std::isfinite(x)) throw DomainError("x must be finite and > 1");
    }
    double mu() const { return mu_; }
    double x() const { return x_; }
    double lambda() const { return x_ - 1.0; }
    static constexpr double a() { return 1.0; }

  private:
    double mu_;
    double x_;
};

/// h(u) = [I(xu)K(u) - I(u)K(xu)] e^{-lambda u} / [cos^2(pi mu) K(u)^2 + (pi I(u) + sin(pi mu) K(u))^2]
/// with I = I_mu, K = K_mu. Non-negative.
inline double h_mu_lambda(double u, const ModelParams& p) {
    if (!(u > 0.0) || !std::isfinite(u)) throw DomainError("h_mu_lambda requires finite u > 0");
    const double mu = p.mu();
    const double x = p.x();
    const auto a = detail::ik_scaled(mu, u);
    const auto b = detail::ik_scaled(mu, x * u);
    const double c = std::cos(std::numbers::pi * mu);
    const double s = std::sin(std::numbers::pi * mu);
    // Normalised by K(u)^2 and the exponential scalings so nothing overflows.
    const double ratio = a.i / a.k;
    const double r1 = b.i / a.k;
    const double r2 = ratio * (b.k / a.k) * std::exp(-2.0 * p.lambda() * u);
    const double e2 = std::exp(-2.0 * u);
    const double den = c * c * e2 * e2 + std::pow(std::numbers::pi * ratio + s * e2, 2);
    return std::max(0.0, (r1 - r2) * e2 / den);
}

/// Coefficient C of h(u) ~ C u^{2 mu} as u -> 0, mu > 0.
inline double h_small_u_coefficient(const ModelParams& p) {
    const double mu = p.mu();
    const double cc = std::pow(2.0, 1.0 - 2.0 * mu) / (gamma_fn(mu) * gamma_fn(mu + 1.0));
    return (std::pow(p.x(), mu) - std::pow(p.x(), -mu)) * cc;
}

/// Limit of v^{2mu+2} w2(v) (mu > 0) or (v log v)^2 w2(v) (mu = 0).
inline double w2_tail_limit(const ModelParams& p) {
    const double mu = p.mu();
    if (mu == 0.0) return -std::log(p.x()) / p.lambda();
    return -std::cos(std::numbers::pi * mu) * gamma_fn(2.0 * mu + 2.0) * h_small_u_coefficient(p) *
           std::pow(p.x(), mu) / p.lambda();
}

/// w2(v) by adaptive quadrature of the defining u-integral.
inline double w2_eval(double v, const ModelParams& p) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("w2_eval requires finite v >= 0");
    if (is_half_integer(p.mu())) throw BranchError("w2 is absent when mu - 1/2 is a non-negative integer");
    const double pref = -std::cos(std::numbers::pi * p.mu()) * std::pow(p.x(), p.mu()) / p.lambda();
    auto f = [&](double u) { return u * h_mu_lambda(u, p) * std::exp(-v * u); };
    quad::QuadratureSpec spec;
    spec.abs_tol = 1e-300;
    spec.rel_tol = 1e-11;
    spec.max_subdivisions = 2000;
    for (int k = 1; k <= 40; ++k) spec.split_points.push_back(std::ldexp(1.0, -k));
    if (v > 0.0)
        for (double c : {0.1, 1.0, 10.0, 50.0}) spec.split_points.push_back(c / v);
    const auto head = quad::integrate_finite(f, 0.0, 1.0, spec);
    quad::QuadratureSpec tail_spec;
    tail_spec.abs_tol = std::max(1e-300, 1e-13 * std::abs(head.value));
    tail_spec.rel_tol = 1e-11;
    const auto tail = quad::integrate_semi_infinite(f, 1.0, 2.0 + v, tail_spec);
    const double value = pref * (head.value + tail.value);
    if (!head.converged || !tail.converged)
        throw NonConvergence("w2 quadrature did not converge", value, std::abs(pref) * (head.err_est + tail.err_est));
    return value;
}

/// One exponential term c e^{r v} of w1.
struct DiscreteTerm {
    Complex coefficient;
    Complex rate;
};

namespace detail {

inline void check_zeros(const ModelParams& p, const KZeroSet& zeros) {
    if (std::abs(zeros.order - p.mu()) > 1e-14 || zeros.count() != k_count(p.mu()))
        throw DomainError("zero set is inconsistent with mu", "inconsistent_zeros");
}

inline Complex w1_coefficient(const ModelParams& p, Complex z) {
    const double mu = p.mu();
    const double x = p.x();
    const double lam = p.lambda();
    if (is_half_integer(mu)) {
        // e^{lambda z} K_mu(xz)/K_{mu-1}(z) = x^{-1/2} P_n(xz)/P_{n-1}(z).
        const int n = static_cast<int>(std::lround(mu - 0.5));
        return -(std::pow(x, mu - 0.5) / lam) * z * half_integer_poly(n, x * z) / half_integer_poly(n - 1, z);
    }
    const Complex kxz = k_complex_unchecked(mu, x * z);
    const Complex km1 = k_complex_pair(mu - 1.0, z).first;
    return -(std::pow(x, mu) / lam) * z * std::exp(lam * z) * kxz / km1;
}

inline std::vector<DiscreteTerm> discrete_terms(const ModelParams& p, const KZeroSet& zeros) {
    std::vector<DiscreteTerm> terms;
    for (std::size_t i = 0; i < zeros.zeros.size(); ++i) {
        const Complex z = zeros.zeros[i];
        if (z.imag() == 0.0) {
            terms.push_back({Complex(w1_coefficient(p, z).real(), 0.0), z});
        } else {
            // Zeros come as (z, conj z); share the coefficient exactly.
            const Complex c = w1_coefficient(p, z);
            terms.push_back({c, z});
            terms.push_back({std::conj(c), std::conj(z)});
            ++i;
        }
    }
    return terms;
}

inline double w1_sum(const std::vector<DiscreteTerm>& terms, double v) {
    Complex s = 0.0;
    for (const auto& t : terms) s += t.coefficient * std::exp(t.rate * v);
    return s.real();
}

inline double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Breakpoints: [0, lo], ratio-`ratio` geometric panels from lo to hi, with
/// panel width capped at `cap` on [lin_lo, lin_hi].
inline std::vector<double> graded_breaks(double lo, double hi, double ratio, double cap, double lin_hi) {
    std::vector<double> b{0.0, lo};
    double v = lo;
    while (v < hi) {
        double next = v * ratio;
        if (v < lin_hi && next - v > cap) next = v + cap;
        v = std::min(next, hi);
        b.push_back(v);
    }
    return b;
}

} // namespace detail

/// w1(v) from a precomputed zero set.
inline double w1_eval(double v, const ModelParams& p, const KZeroSet& zeros) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("w1_eval requires finite v >= 0");
    detail::check_zeros(p, zeros);
    return detail::w1_sum(detail::discrete_terms(p, zeros), v);
}

/// Immutable evaluable representation of w.
class WLambdaRep {
  public:
    static constexpr double kUMin = 1e-20;
    static constexpr double kUMax = 40.0;
    static constexpr double kVMax = 1e14;

    explicit WLambdaRep(const ModelParams& p) : params_(p), zeros_(k_zero_set(p.mu())) {
        const double mu = p.mu();
        terms_ = detail::discrete_terms(p, zeros_);
        has_continuous_ = !is_half_integer(mu);
        identically_zero_ = std::abs(mu - 0.5) < 1e-12;
        if (has_continuous_) build_continuous();
        build_v_rule();
    }

    const ModelParams& params() const { return params_; }
    const KZeroSet& zeros() const { return zeros_; }
    const std::vector<DiscreteTerm>& discrete_terms() const { return terms_; }
    bool has_continuous() const { return has_continuous_; }
    bool identically_zero() const { return identically_zero_; }
    /// Abscissae u_j and weights W_j of w2(v) = sum_j W_j e^{-u_j v}.
    const std::vector<double>& u_nodes() const { return u_; }
    const std::vector<double>& u_weights() const { return wu_; }
    /// Tail model of w2: limit and (power, log-power) of the decay.
    double tail_constant() const { return has_continuous_ ? w2_tail_limit(params_) : 0.0; }
    std::pair<double, int> tail_exponent() const {
        if (!has_continuous_) return {std::numeric_limits<double>::infinity(), 0};
        return params_.mu() == 0.0 ? std::pair<double, int>{2.0, 2} : std::pair<double, int>{2.0 * params_.mu() + 2.0, 0};
    }
    double v_max() const { return kVMax; }

    double w1(double v) const { return detail::w1_sum(terms_, v); }
    double w2(double v) const {
        double s = 0.0;
        for (std::size_t j = 0; j < u_.size(); ++j) {
            const double e = u_[j] * v;
            if (e > 745.0) break;
            s += wu_[j] * std::exp(-e);
        }
        return s;
    }
    double operator()(double v) const {
        if (!(v >= 0.0)) throw DomainError("w is defined for v >= 0");
        return identically_zero_ ? 0.0 : w1(v) + w2(v);
    }

    /// Fixed rule on [0, v_max] and w at its nodes.
    const quad::CompositeRule& v_rule() const { return vrule_; }
    const std::vector<double>& w_at_nodes() const { return wv_; }

    /// sum_k omega_k w(v_k) g(v_k) over the v-rule, i.e. int_0^{v_max} w g.
    template <class G>
    double integrate_head(G&& g) const {
        double s = 0.0;
        for (std::size_t k = 0; k < vrule_.nodes.size(); ++k) s += vrule_.weights[k] * wv_[k] * g(vrule_.nodes[k]);
        return s;
    }

    /// int_0^{u_min} h(u) u^{-p} du from the small-u form of h.
    double small_u_integral(int p) const {
        const double mu = params_.mu();
        check_power(p);
        if (mu == 0.0) {
            const double L = std::log(2.0 / kUMin) - kEulerGamma;
            const double lx = std::log(params_.x());
            if (p == 0) return lx * kUMin / (L * L + std::numbers::pi * std::numbers::pi);
            return lx / std::numbers::pi * (0.5 * std::numbers::pi - std::atan(L / std::numbers::pi));
        }
        const double e = 2.0 * mu + 1.0 - p;
        return h_small_u_coefficient(params_) * std::pow(kUMin, e) / e * small_u_correction(e);
    }

    /// int_{v_max}^inf v^p w(v) dv (w1 is negligible there).
    double power_tail(int p) const {
        if (!has_continuous_) return 0.0;
        check_power(p);
        const double V = kVMax;
        const double pf = detail::factorial(p);
        double s = 0.0;
        for (std::size_t j = 0; j < u_.size(); ++j) {
            const double y = u_[j] * V;
            if (y > 745.0) break;
            // Gamma(p+1, y) / u^{p+1}
            double poly = 0.0;
            double term = 1.0;
            for (int i = 0; i <= p; ++i) {
                poly += term;
                term *= y / (i + 1);
            }
            s += wu_[j] * pf * std::exp(-y) * poly / std::pow(u_[j], p + 1);
        }
        return s + pref_ * pf * small_u_integral(p);
    }

    /// int_0^inf v^p w2(v) dv.
    double w2_power_moment(int p) const {
        if (!has_continuous_) return 0.0;
        check_power(p);
        if (params_.mu() == 0.0 && p > 0)
            throw IntegrabilityError("v w2(v) is not integrable on [0, inf) for mu = 0");
        const double pf = detail::factorial(p);
        double s = 0.0;
        for (std::size_t j = 0; j < u_.size(); ++j) s += wu_[j] / std::pow(u_[j], p + 1);
        return pf * (s + pref_ * small_u_integral(p));
    }

    /// int_0^inf v^p w1(v) dv.
    double w1_power_moment(int p) const {
        Complex s = 0.0;
        const double pf = detail::factorial(p);
        for (const auto& t : terms_) s += t.coefficient * pf / std::pow(-t.rate, p + 1);
        return s.real();
    }

  private:
    /// Mean of h(u) / (C u^{2mu}) against d(u^e) on [0, u_min]. For 0 < mu < 1 the
    /// small-argument forms of I_mu and K_mu give, up to O(u^2),
    ///   h(u) = C u^{2mu} / [cos^2(pi mu)(1 - r)^2 + sin^2(pi mu)(1 + r)^2],
    ///   r = (u/2)^{2mu} Gamma(1-mu) / Gamma(1+mu),
    /// and r is not negligible at u_min when mu is small.
    double small_u_correction(double e) const {
        const double mu = params_.mu();
        if (mu >= 1.0) return 1.0;
        const double c = std::cos(std::numbers::pi * mu);
        const double s = std::sin(std::numbers::pi * mu);
        const double r_max = std::pow(0.5 * kUMin, 2.0 * mu) * gamma_fn(1.0 - mu) / gamma_fn(1.0 + mu);
        const double q = 2.0 * mu / e;
        // w = (u/u_min)^e
        auto f = [&](double w) {
            const double r = r_max * std::pow(w, q);
            return 1.0 / (c * c * (1.0 - r) * (1.0 - r) + s * s * (1.0 + r) * (1.0 + r));
        };
        quad::QuadratureSpec spec;
        spec.abs_tol = 1e-300;
        spec.rel_tol = 1e-14;
        spec.max_subdivisions = 2000;
        for (int k = 30; k >= 1; --k) spec.split_points.push_back(std::pow(10.0, -k));
        return quad::integrate_finite(f, 0.0, 1.0, spec).value;
    }

    void check_power(int p) const {
        const double mu = params_.mu();
        const bool ok = p >= 0 && (p < 2.0 * mu + 1.0 || (mu == 0.0 && p <= 1));
        if (!ok) {
            std::ostringstream os;
            os << "v^" << p << " w2(v) is not integrable at infinity for mu = " << mu;
            throw IntegrabilityError(os.str());
        }
    }

    void build_continuous() {
        pref_ = -std::cos(std::numbers::pi * params_.mu()) * std::pow(params_.x(), params_.mu()) / params_.lambda();
        // drop the [0, u_min] panel; it is handled analytically
        const auto coarse = detail::graded_breaks(kUMin, kUMax, 1.5, 0.5, kUMax);
        const auto breaks = refine_u_breaks(std::vector<double>(coarse.begin() + 1, coarse.end()));
        const auto rule = quad::composite_gauss16(breaks);
        std::vector<std::pair<double, double>> nodes;
        nodes.reserve(rule.nodes.size());
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            const double u = rule.nodes[j];
            nodes.emplace_back(u, pref_ * rule.weights[j] * u * h_mu_lambda(u, params_));
        }
        std::sort(nodes.begin(), nodes.end());
        for (const auto& [u, w] : nodes) {
            u_.push_back(u);
            wu_.push_back(w);
        }
    }

    /// Bisects panels until Gauss-16 agrees with its two-half refinement;
    /// resolves the narrow peak of h near |z| for mu close to a half-integer.
    std::vector<double> refine_u_breaks(const std::vector<double>& coarse) const {
        auto g = [&](double u) { return u * h_mu_lambda(u, params_); };
        auto panel = [&](double a, double b) {
            const std::array<double, 2> ab{a, b};
            return quad::composite_gauss16(ab).apply(g);
        };
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < coarse.size(); ++i) total += std::abs(panel(coarse[i], coarse[i + 1]));
        std::vector<double> out{coarse.front()};
        for (std::size_t i = 0; i + 1 < coarse.size(); ++i) {
            // depth-first so that breakpoints come out in order
            std::vector<std::pair<double, double>> stack{{coarse[i], coarse[i + 1]}};
            while (!stack.empty()) {
                const auto [a, b] = stack.back();
                stack.pop_back();
                const double m = 0.5 * (a + b);
                const double whole = panel(a, b);
                const double halves = panel(a, m) + panel(m, b);
                if (std::abs(whole - halves) > 1e-15 * total && b - a > 1e-12 * b) {
                    stack.emplace_back(m, b);
                    stack.emplace_back(a, m);
                } else {
                    out.push_back(b);
                }
            }
        }
        return out;
    }

    void build_v_rule() {
        double lin_hi = 0.0;
        for (const auto& t : terms_) lin_hi = std::max(lin_hi, 50.0 / std::abs(t.rate.real()));
        const auto breaks = detail::graded_breaks(1e-12, kVMax, 1.5, 0.5, lin_hi);
        vrule_ = quad::composite_gauss16(breaks);
        wv_.resize(vrule_.nodes.size());
        for (std::size_t k = 0; k < vrule_.nodes.size(); ++k)
            wv_[k] = identically_zero_ ? 0.0 : w1(vrule_.nodes[k]) + w2(vrule_.nodes[k]);
    }

    ModelParams params_;
    KZeroSet zeros_;
    std::vector<DiscreteTerm> terms_;
    bool has_continuous_ = false;
    bool identically_zero_ = false;
    double pref_ = 0.0;
    std::vector<double> u_;
    std::vector<double> wu_;
    quad::CompositeRule vrule_;
    std::vector<double> wv_;
};

inline WLambdaRep build_w(const ModelParams& p) {
    if (p.mu() > kMaxZeroOrder) throw DomainError("build_w supports 0 <= mu <= 10");
    return WLambdaRep(p);
}

/// int_0^inf kappa^m w(v) dv with kappa = v(2 lambda + v).
inline double w_moment(const WLambdaRep& rep, int m) {
    const double mu = rep.params().mu();
    if (m < 0) throw DomainError("moment order must be >= 0");
    if (m >= 1 && mu + 0.5 < m - 1e-12) {
        std::ostringstream os;
        os << "kappa^" << m << " w is not integrable for mu = " << mu;
        throw IntegrabilityError(os.str());
    }
    if (rep.identically_zero()) return 0.0;
    const double tl = 2.0 * rep.params().lambda();
    double s = 0.0;
    for (int k = 0; k <= m; ++k) {
        const double c = detail::binomial(m, k) * std::pow(tl, m - k);
        s += c * (rep.w1_power_moment(m + k) + rep.w2_power_moment(m + k));
    }
    return s;
}

} // namespace gbmhit
