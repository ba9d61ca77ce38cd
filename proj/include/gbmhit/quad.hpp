#pragma once

// Shared numerical-integration engine.
//
// integrate_finite is a globally adaptive Gauss-Kronrod (10/21) scheme in the
// style of QUADPACK's QAG: the panel with the largest error estimate is
// bisected until the requested tolerance is met or the subdivision budget is
// exhausted. integrate_semi_infinite walks geometrically growing panels and
// closes the remaining tail with the caller-declared exponential envelope.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <span>
#include <sstream>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gbmhit/errors.hpp"

namespace gbmhit::quad {

struct QuadratureSpec {
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    int max_subdivisions = 500;
    std::vector<double> split_points{};

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw DomainError("quadrature tolerances must be positive");
        if (max_subdivisions < 1)
            throw DomainError("max_subdivisions must be >= 1");
    }
};

struct QuadResult {
    double value = 0.0;
    double err_est = 0.0;
    bool converged = true;
    int evaluations = 0;
};

namespace detail {

struct Panel {
    double a;
    double b;
    double value;
    double err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

struct Gk21Nodes {
    std::array<double, 11> x{};
    std::array<double, 11> wk{};
    std::array<double, 5> wg{};
};

inline const Gk21Nodes& gk21_nodes() {
    static const Gk21Nodes nodes = [] {
        using boost::math::quadrature::gauss;
        using boost::math::quadrature::gauss_kronrod;
        Gk21Nodes n;
        const auto& xk = gauss_kronrod<double, 21>::abscissa();
        const auto& wk = gauss_kronrod<double, 21>::weights();
        const auto& wg = gauss<double, 10>::weights();
        for (std::size_t i = 0; i < 11; ++i) {
            n.x[i] = xk[i];
            n.wk[i] = wk[i];
        }
        // Gauss nodes sit at the odd Kronrod indices.
        for (std::size_t i = 0; i < 5; ++i) n.wg[i] = wg[i];
        return n;
    }();
    return nodes;
}

template <class F>
Panel gk21(F& f, double a, double b, int& evals) {
    const auto& n = gk21_nodes();
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double uflow = std::numeric_limits<double>::min();
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    std::array<double, 21> fv{};
    fv[0] = f(c);
    double resk = n.wk[0] * fv[0];
    double resg = 0.0;
    double resabs = std::abs(resk);
    for (std::size_t i = 1; i < 11; ++i) {
        const double f1 = f(c - h * n.x[i]);
        const double f2 = f(c + h * n.x[i]);
        fv[2 * i - 1] = f1;
        fv[2 * i] = f2;
        resk += n.wk[i] * (f1 + f2);
        resabs += n.wk[i] * (std::abs(f1) + std::abs(f2));
        if (i % 2 == 1) resg += n.wg[(i - 1) / 2] * (f1 + f2);
    }
    evals += 21;
    const double mean = 0.5 * resk;
    double resasc = n.wk[0] * std::abs(fv[0] - mean);
    for (std::size_t i = 1; i < 11; ++i)
        resasc += n.wk[i] * (std::abs(fv[2 * i - 1] - mean) + std::abs(fv[2 * i] - mean));
    const double ah = std::abs(h);
    double err = std::abs((resk - resg) * h);
    resasc *= ah;
    resabs *= ah;
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > uflow / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
    if (!std::isfinite(resk))
        throw NonConvergence("non-finite integrand value", resk * h, std::numeric_limits<double>::infinity());
    return {a, b, resk * h, err};
}

} // namespace detail

/// Adaptive integral of f over [a, b]. split_points inside (a, b) seed the
/// initial partition; a non-converged result is returned with converged=false.
template <class F>
QuadResult integrate_finite(F&& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    if (!(a < b)) {
        if (a == b) return {};
        throw DomainError("integrate_finite requires a < b");
    }
    std::vector<double> breaks{a};
    for (double s : spec.split_points)
        if (s > a && s < b) breaks.push_back(s);
    breaks.push_back(b);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    int evals = 0;
    std::priority_queue<detail::Panel> heap;
    std::vector<detail::Panel> frozen; // panels too small to bisect further
    double total = 0.0;
    double total_err = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        auto p = detail::gk21(f, breaks[i], breaks[i + 1], evals);
        total += p.value;
        total_err += p.err;
        heap.push(p);
    }
    int subdivisions = static_cast<int>(heap.size());
    auto tolerance = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };
    while (total_err > tolerance() && subdivisions < spec.max_subdivisions && !heap.empty()) {
        const auto worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) ||
            (worst.b - worst.a) < 64.0 * std::numeric_limits<double>::epsilon() *
                                      std::max(std::abs(worst.a), std::abs(worst.b))) {
            frozen.push_back(worst);
            continue;
        }
        auto left = detail::gk21(f, worst.a, mid, evals);
        auto right = detail::gk21(f, mid, worst.b, evals);
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        ++subdivisions;
    }
    // Re-sum in ascending panel order so the result does not depend on the
    // refinement history.
    std::vector<detail::Panel> all = std::move(frozen);
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const auto& l, const auto& r) { return l.a < r.a; });
    QuadResult res;
    for (const auto& p : all) {
        res.value += p.value;
        res.err_est += p.err;
    }
    res.evaluations = evals;
    res.converged = res.err_est <= std::max(spec.abs_tol, spec.rel_tol * std::abs(res.value));
    return res;
}

/// Integral of f over [a, inf) for an integrand the caller asserts obeys
/// |f(u)| <= M exp(-decay_rate u) eventually. Panels double in width; the
/// tail is closed with the envelope fitted on the last panel.
template <class F>
QuadResult integrate_semi_infinite(F&& f, double a, double decay_rate, const QuadratureSpec& spec) {
    spec.validate();
    if (!(decay_rate > 0.0) || !std::isfinite(a))
        throw DomainError("integrate_semi_infinite requires finite a and decay_rate > 0");
    constexpr int max_panels = 80;
    const double width0 = 1.0 / decay_rate;
    QuadResult res;
    double left = a;
    double width = width0;
    double prev_tail = std::numeric_limits<double>::infinity();
    int growing = 0;
    for (int k = 0; k < max_panels; ++k) {
        const double right = left + width;
        QuadratureSpec panel_spec = spec;
        panel_spec.abs_tol = spec.abs_tol * std::ldexp(1.0, -(std::min(k, 40) + 2));
        auto pr = integrate_finite(f, left, right, panel_spec);
        res.value += pr.value;
        res.err_est += pr.err_est;
        res.evaluations += pr.evaluations;
        res.converged = res.converged && pr.converged;

        // Envelope constant from samples in the outer half of the panel. The
        // tail may only be closed once the integrand is no longer growing.
        double envelope = 0.0;
        double fmax = 0.0;
        double fright = 0.0;
        for (int j = 0; j <= 8; ++j) {
            const double u = left + width * (0.5 + 0.5 * j / 8.0);
            const double fu = std::abs(f(u));
            fmax = std::max(fmax, fu);
            fright = fu;
            envelope = std::max(envelope, fu * std::exp(-decay_rate * (right - u)));
        }
        res.evaluations += 9;
        const bool decaying = fmax == 0.0 || fright < fmax;
        const double tail = 2.0 * envelope / decay_rate;
        if (!std::isfinite(tail))
            throw EnvelopeViolation("integrand is not finite on the declared envelope", res.value, tail);
        const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(res.value));
        if (decaying && tail <= 0.25 * tol) {
            res.err_est += tail;
            res.converged = res.converged && res.err_est <= 2.0 * tol;
            return res;
        }
        growing = (k > 4 && tail >= prev_tail) ? growing + 1 : 0;
        if (growing >= 4) {
            std::ostringstream os;
            os << "integrand exceeds the exp(-" << decay_rate << " u) envelope near u=" << right;
            throw EnvelopeViolation(os.str(), res.value, tail);
        }
        prev_tail = tail;
        left = right;
        width *= 2.0;
    }
    throw EnvelopeViolation("semi-infinite tail did not close", res.value, prev_tail);
}

/// Fixed composite Gauss-Legendre rule: nodes and weights on a union of panels.
struct CompositeRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    template <class F>
    double apply(F&& f) const {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
        return s;
    }
};

/// 16-point Gauss-Legendre on every interval [breaks[i], breaks[i+1]].
inline CompositeRule composite_gauss16(std::span<const double> breaks) {
    using boost::math::quadrature::gauss;
    const auto& x = gauss<double, 16>::abscissa();
    const auto& w = gauss<double, 16>::weights();
    CompositeRule rule;
    rule.nodes.reserve(16 * breaks.size());
    rule.weights.reserve(16 * breaks.size());
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double c = 0.5 * (breaks[p] + breaks[p + 1]);
        const double h = 0.5 * (breaks[p + 1] - breaks[p]);
        for (std::size_t i = 0; i < x.size(); ++i) {
            rule.nodes.push_back(c - h * x[i]);
            rule.weights.push_back(h * w[i]);
            rule.nodes.push_back(c + h * x[i]);
            rule.weights.push_back(h * w[i]);
        }
    }
    return rule;
}

} // namespace gbmhit::quad
