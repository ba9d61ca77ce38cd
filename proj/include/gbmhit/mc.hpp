#pragma once

// Monte-Carlo oracles for the stopped exponential functional A(tau).
//
// Paths of Y(t) = log x + B(t) - 2 mu t (Var B(t) = 2t) are advanced with
// exact Gaussian increments; A += trapezoid of e^{2Y} dt until Y first drops
// to 0, optionally detecting crossings between grid points with the Brownian
// bridge. Every path draws from its own Philox stream keyed by (seed, stream
// tag) with the path id in the counter, so results do not depend on how
// paths are spread over worker threads.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "gbmhit/density.hpp"
#include "gbmhit/errors.hpp"
#include "gbmhit/wlambda.hpp"

namespace gbmhit::mc {

/// Philox4x32-10 counter-based generator. Satisfies UniformRandomBitGenerator.
class Philox {
  public:
    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    Philox(std::uint64_t key, std::uint64_t stream)
        : key_{static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)},
          ctr_{0, 0, static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)} {}

    result_type operator()() {
        if (pos_ == 2) refill();
        return out_[pos_++];
    }

    /// The raw block function, exposed for known-answer tests.
    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key) {
        constexpr std::uint32_t m0 = 0xD2511F53u;
        constexpr std::uint32_t m1 = 0xCD9E8D57u;
        constexpr std::uint32_t w0 = 0x9E3779B9u;
        constexpr std::uint32_t w1 = 0xBB67AE85u;
        for (int r = 0; r < 10; ++r) {
            const std::uint64_t p0 = static_cast<std::uint64_t>(m0) * ctr[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(m1) * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
            key[0] += w0;
            key[1] += w1;
        }
        return ctr;
    }

  private:
    void refill() {
        const auto r = block(ctr_, key_);
        out_[0] = (static_cast<std::uint64_t>(r[1]) << 32) | r[0];
        out_[1] = (static_cast<std::uint64_t>(r[3]) << 32) | r[2];
        pos_ = 0;
        if (++ctr_[0] == 0) ++ctr_[1];
    }

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> ctr_;
    std::array<std::uint64_t, 2> out_{};
    int pos_ = 2;
};

/// Stream tags separating the independent samples of one configuration.
enum class Stream : std::uint64_t { Hit = 1, AInf = 2, AInfUnit = 3, Exit = 4 };

inline std::uint64_t stream_key(std::uint64_t seed, Stream tag) {
    // splitmix64 finaliser
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(tag) + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct MCConfig {
    std::uint64_t seed = 20240917;
    std::int64_t paths = 100000;
    double dt = 1e-3;
    bool bridge_correction = true;
    int workers = 1;

    void validate() const {
        if (paths < 1) throw DomainError("paths must be >= 1");
        if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("dt must be finite and > 0");
        if (workers < 1) throw DomainError("workers must be >= 1");
    }
};

struct EmpiricalSample {
    std::vector<double> values;
    std::size_t count = 0;

    EmpiricalSample() = default;
    explicit EmpiricalSample(std::vector<double> v) : values(std::move(v)) {
        std::sort(values.begin(), values.end());
        count = values.size();
    }

    double mean() const {
        double s = 0.0;
        for (double v : values) s += v;
        return s / static_cast<double>(count);
    }
    double stddev() const {
        const double m = mean();
        double s = 0.0;
        for (double v : values) s += (v - m) * (v - m);
        return std::sqrt(s / static_cast<double>(count - 1));
    }
    /// Empirical quantile by the inverse of the empirical CDF.
    double quantile(double p) const {
        if (count == 0) throw DomainError("quantile of an empty sample");
        if (!(p >= 0.0 && p <= 1.0)) throw DomainError("quantile level must lie in [0, 1]");
        const auto k = static_cast<std::size_t>(std::ceil(p * static_cast<double>(count)));
        return values[k == 0 ? 0 : k - 1];
    }
    /// Fraction of values <= v.
    double ecdf(double v) const {
        const auto it = std::upper_bound(values.begin(), values.end(), v);
        return static_cast<double>(it - values.begin()) / static_cast<double>(count);
    }
};

struct HitReport {
    EmpiricalSample sample;
    /// Paths stopped at the time cap before hitting; their A is a lower bound.
    std::size_t censored = 0;
    double time_cap = 0.0;
    double censored_fraction() const { return static_cast<double>(censored) / static_cast<double>(sample.count); }
};

/// Default time cap 1e4 max(1, 1/(4 mu^2 + 1)).
inline double default_time_cap(double mu) { return 1e4 * std::max(1.0, 1.0 / (4.0 * mu * mu + 1.0)); }

/// Runs body(i) for i in [0, count) on `workers` threads with contiguous chunks.
template <class Body>
void parallel_for(std::int64_t count, int workers, Body&& body) {
    workers = static_cast<int>(std::max<std::int64_t>(1, std::min<std::int64_t>(workers, count)));
    if (workers == 1) {
        for (std::int64_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::int64_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::int64_t lo = w * chunk;
        const std::int64_t hi = std::min(count, lo + chunk);
        pool.emplace_back([lo, hi, &body] {
            for (std::int64_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

namespace detail {

struct PathResult {
    double a;
    bool censored;
};

inline PathResult simulate_path(double mu, double x, const MCConfig& cfg, double time_cap, Philox& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double dt = cfg.dt;
    const double sigma = std::sqrt(2.0 * dt);
    const double drift = -2.0 * mu * dt;
    const auto max_steps = static_cast<std::int64_t>(std::ceil(time_cap / dt));
    double y = std::log(x);
    double ey = std::exp(2.0 * y);
    double a = 0.0;
    for (std::int64_t k = 0; k < max_steps; ++k) {
        const double y1 = y + drift + sigma * normal(rng);
        if (y1 <= 0.0) {
            // e^{2Y} runs from ey to 1 over the fraction theta of the step
            const double theta = y / (y - y1);
            return {a + 0.5 * theta * dt * (ey + 1.0), false};
        }
        const double ey1 = std::exp(2.0 * y1);
        if (cfg.bridge_correction) {
            const double expo = y * y1 / dt;
            if (expo < 40.0 && unif(rng) < std::exp(-expo)) {
                const double theta = unif(rng);
                return {a + 0.5 * theta * dt * (ey + 1.0), false};
            }
        }
        a += 0.5 * dt * (ey + ey1);
        y = y1;
        ey = ey1;
    }
    return {a, true};
}

} // namespace detail

/// A(tau) samples with the censoring report.
inline HitReport simulate_hit_report(const ModelParams& params, const MCConfig& cfg, double time_cap = 0.0) {
    cfg.validate();
    if (time_cap <= 0.0) time_cap = default_time_cap(params.mu());
    std::vector<double> out(static_cast<std::size_t>(cfg.paths));
    std::vector<char> cens(static_cast<std::size_t>(cfg.paths));
    const auto key = stream_key(cfg.seed, Stream::Hit);
    parallel_for(cfg.paths, cfg.workers, [&](std::int64_t i) {
        Philox rng(key, static_cast<std::uint64_t>(i));
        const auto r = detail::simulate_path(params.mu(), params.x(), cfg, time_cap, rng);
        out[static_cast<std::size_t>(i)] = r.a;
        cens[static_cast<std::size_t>(i)] = r.censored ? 1 : 0;
    });
    HitReport rep;
    rep.time_cap = time_cap;
    rep.censored = static_cast<std::size_t>(std::count(cens.begin(), cens.end(), 1));
    rep.sample = EmpiricalSample(std::move(out));
    return rep;
}

inline EmpiricalSample simulate_hit_functional(const ModelParams& params, const MCConfig& cfg) {
    return simulate_hit_report(params, cfg).sample;
}

namespace detail {

/// Unsorted x^2/(4Z) draws, one Philox stream per index.
inline std::vector<double> a_inf_draws(double mu, double x, const MCConfig& cfg, Stream tag) {
    std::vector<double> out(static_cast<std::size_t>(cfg.paths));
    const auto key = stream_key(cfg.seed, tag);
    parallel_for(cfg.paths, cfg.workers, [&](std::int64_t i) {
        Philox rng(key, static_cast<std::uint64_t>(i));
        std::gamma_distribution<double> gamma(mu, 1.0);
        out[static_cast<std::size_t>(i)] = x * x / (4.0 * gamma(rng));
    });
    return out;
}

} // namespace detail

/// Exact samples of A_x(inf) = x^2/(4Z), Z ~ Gamma(mu, 1).
inline EmpiricalSample sample_a_inf(double mu, double x, const MCConfig& cfg, Stream tag = Stream::AInf) {
    cfg.validate();
    if (!(mu > 0.0) || !std::isfinite(mu)) throw DomainError("sample_a_inf requires mu > 0");
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("sample_a_inf requires x > 0");
    return EmpiricalSample(detail::a_inf_draws(mu, x, cfg, tag));
}

/// sup |F_n - F| against a continuous CDF.
inline double ks_distance(const EmpiricalSample& s, const std::function<double(double)>& cdf) {
    if (s.count == 0) throw DomainError("ks_distance of an empty sample");
    const double n = static_cast<double>(s.count);
    double d = 0.0;
    for (std::size_t i = 0; i < s.count; ++i) {
        const double f = cdf(s.values[i]);
        d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
    }
    return d;
}

/// Two-sample Kolmogorov-Smirnov statistic sup |F_n - G_m|.
inline double ks_two_sample(const EmpiricalSample& a, const EmpiricalSample& b) {
    if (a.count == 0 || b.count == 0) throw DomainError("ks_two_sample of an empty sample");
    const double na = static_cast<double>(a.count);
    const double nb = static_cast<double>(b.count);
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    while (i < a.count && j < b.count) {
        const double v = std::min(a.values[i], b.values[j]);
        while (i < a.count && a.values[i] <= v) ++i;
        while (j < b.count && b.values[j] <= v) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

/// 99% Kolmogorov band for one sample of size n.
inline double ks_critical_99(std::size_t n) { return 1.63 / std::sqrt(static_cast<double>(n)); }

/// 99% two-sample band for sizes n and m.
inline double ks_critical_99(std::size_t n, std::size_t m) {
    const double nn = static_cast<double>(n);
    const double mm = static_cast<double>(m);
    return 1.63 * std::sqrt((nn + mm) / (nn * mm));
}

/// Two-sample KS between A_x(tau) + A'_1(inf) and A_x(inf).
inline double identity_check(const ModelParams& params, const MCConfig& cfg) {
    if (!(params.mu() > 0.0)) throw DomainError("identity_check requires mu > 0");
    auto sum = simulate_hit_functional(params, cfg).values;
    const auto unit = detail::a_inf_draws(params.mu(), 1.0, cfg, Stream::AInfUnit);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += unit[i];
    const auto rhs = sample_a_inf(params.mu(), params.x(), cfg, Stream::AInf);
    return ks_two_sample(EmpiricalSample(std::move(sum)), rhs);
}

/// |y| of the exit point y = sqrt(A(tau)) G, G ~ N(0, 2 I_{n-1}).
inline EmpiricalSample simulate_exit_point(int n, const ModelParams& params, const MCConfig& cfg) {
    if (n < 2) throw DomainError("hyperbolic dimension n must be >= 2");
    cfg.validate();
    const double time_cap = default_time_cap(params.mu());
    std::vector<double> out(static_cast<std::size_t>(cfg.paths));
    const auto hkey = stream_key(cfg.seed, Stream::Hit);
    const auto gkey = stream_key(cfg.seed, Stream::Exit);
    parallel_for(cfg.paths, cfg.workers, [&](std::int64_t i) {
        Philox hrng(hkey, static_cast<std::uint64_t>(i));
        const double a = detail::simulate_path(params.mu(), params.x(), cfg, time_cap, hrng).a;
        Philox grng(gkey, static_cast<std::uint64_t>(i));
        std::normal_distribution<double> normal(0.0, std::numbers::sqrt2);
        double r2 = 0.0;
        for (int k = 0; k + 1 < n; ++k) {
            const double g = normal(grng);
            r2 += g * g;
        }
        out[static_cast<std::size_t>(i)] = std::sqrt(a * r2);
    });
    return EmpiricalSample(std::move(out));
}

/// Pearson chi-square statistic and p-value for counts against bin probabilities.
struct ChiSquare {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
};

/// Bins are [edges[i], edges[i+1]) plus the overflow [edges.back(), inf);
/// probs has one entry per bin including the overflow.
inline ChiSquare chi_square(const EmpiricalSample& s, const std::vector<double>& edges, const std::vector<double>& probs) {
    if (edges.size() < 2 || probs.size() != edges.size()) throw DomainError("chi_square needs one probability per bin");
    std::vector<double> counts(probs.size(), 0.0);
    std::size_t under = 0;
    for (double v : s.values) {
        if (v < edges.front()) {
            ++under;
            continue;
        }
        const auto it = std::upper_bound(edges.begin(), edges.end(), v);
        counts[static_cast<std::size_t>(it - edges.begin()) - 1] += 1.0;
    }
    if (under > 0) throw DomainError("sample values below the first bin edge");
    ChiSquare c;
    const double n = static_cast<double>(s.count);
    for (std::size_t i = 0; i < probs.size(); ++i) {
        const double e = n * probs[i];
        if (e <= 0.0) continue;
        c.statistic += (counts[i] - e) * (counts[i] - e) / e;
        ++c.dof;
    }
    --c.dof;
    c.p_value = c.dof > 0 ? boost::math::gamma_q(0.5 * c.dof, 0.5 * c.statistic) : 1.0;
    return c;
}

struct ValidationResult {
    std::string test;
    double statistic = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

/// The oracle suite behind the mc-validate command.
inline std::vector<ValidationResult> validation_suite(const MCConfig& cfg) {
    cfg.validate();
    std::vector<ValidationResult> out;
    const auto n = static_cast<std::size_t>(cfg.paths);
    auto add = [&](std::string name, double stat, double thr) { out.push_back({std::move(name), stat, thr, stat <= thr}); };

    {
        const ModelParams p(0.5, 2.0);
        const auto rep = simulate_hit_report(p, cfg);
        add("ks_hit_functional_mu0.5_x2",
            ks_distance(rep.sample, [&](double t) { return stable_cdf(p.lambda(), t); }), ks_critical_99(n) + 0.01);
        add("censored_fraction_mu0.5_x2", rep.censored_fraction(), 1e-3);
    }
    for (const auto& [mu, x] : {std::pair{0.5, 2.0}, std::pair{1.0, 2.0}, std::pair{3.0, 1.5}}) {
        std::string name = "identity_mu" + std::to_string(mu).substr(0, 3) + "_x" + std::to_string(x).substr(0, 3);
        add(name, identity_check(ModelParams(mu, x), cfg), ks_critical_99(n, n) + 0.01);
    }
    {
        const auto s = sample_a_inf(2.0, 2.0, cfg);
        add("a_inf_mean_mu2_x2", std::abs(s.mean() - 1.0), 3.0 * s.stddev() / std::sqrt(static_cast<double>(n)));
    }
    {
        const ModelParams p(0.5, 2.0);
        const auto s = simulate_exit_point(2, p, cfg);
        const double lam = p.lambda();
        add("ks_exit_point_cauchy_n2_mu0.5_x2",
            ks_distance(s, [&](double r) { return 2.0 / std::numbers::pi * std::atan(r / lam); }),
            ks_critical_99(n) + 0.01);
    }
    return out;
}

} // namespace gbmhit::mc
