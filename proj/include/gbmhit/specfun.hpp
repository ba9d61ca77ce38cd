#pragma once

// Modified Bessel functions I_nu, K_nu of real order nu >= 0, the principal
// branch of K_nu on the cut plane, the zero set of K_mu, and Gamma.
//
// Real arguments: Temme's series for u < 2 and Steed's continued fraction
// (CF2) for u >= 2 give K_mu, K_{mu+1} at |mu| <= 1/2; forward recurrence
// lifts them to order nu, and the CF1 ratio I'/I with the Wronskian fixes I.
// Complex arguments reuse the same two algorithms with complex arithmetic.
// Half-integer orders use the terminating polynomial form
//   K_{n+1/2}(z) = sqrt(pi/(2z)) e^{-z} sum_k (n+k)!/(k!(n-k)!) (2z)^{-k}.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include <Eigen/Eigenvalues>

#include "gbmhit/errors.hpp"

namespace gbmhit {

using Complex = std::complex<double>;

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
/// Digamma at 1.
inline constexpr double kPsi1 = -kEulerGamma;
/// Largest order accepted by the zero finder.
inline constexpr double kMaxZeroOrder = 10.0;

/// Gamma(s) for s > 0.
inline double gamma_fn(double s) {
    if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("gamma_fn requires finite s > 0");
    const double g = std::tgamma(s);
    if (!std::isfinite(g)) throw OverflowError("gamma_fn overflows for s > 171.6");
    return g;
}

/// True when mu - 1/2 is a non-negative integer.
inline bool is_half_integer(double mu) {
    const double m = mu - 0.5;
    return m > -1e-12 && std::abs(m - std::round(m)) < 1e-12;
}

/// Number of zeros of K_mu in the cut plane.
inline int k_count(double mu) {
    if (is_half_integer(mu)) return static_cast<int>(std::lround(mu - 0.5));
    if (mu < 0.5) return 0;
    return 2 * static_cast<int>(std::lround((mu - 0.5) / 2.0));
}

namespace detail {

inline constexpr double kEps = 1e-16;
inline constexpr int kMaxIter = 1000000;

// Taylor coefficients of 1/Gamma(1+z) about 0 (c[0] multiplies z^0).
inline constexpr std::array<double, 28> kRecipGammaTaylor = {
    1.0,
    0.5772156649015328606065,
    -0.655878071520253881077,
    -0.042002635034095235529,
    0.1665386113822914895017,
    -0.04219773455554433674821,
    -0.009621971527876973562115,
    0.007218943246663099542395,
    -0.001165167591859065112114,
    -0.0002152416741149509728157,
    0.0001280502823881161861532,
    -0.00002013485478078823865569,
    -0.000001250493482142670657345,
    0.000001133027231981695882374,
    -2.05633841697760710345e-7,
    6.116095104481415817862e-9,
    5.002007644469222930056e-9,
    -1.181274570487020144588e-9,
    1.043426711691100510492e-10,
    7.78226343990507125405e-12,
    -3.696805618642205708188e-12,
    5.100370287454475979015e-13,
    -2.058326053566506783222e-14,
    -5.34812253942301798237e-15,
    1.226778628238260790159e-15,
    -1.181259301697458769514e-16,
    1.18669225475160033258e-18,
    1.412380655318031781556e-18,
};

struct TemmeGammas {
    double gam1;  // (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)
    double gam2;  // (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
    double gampl; // 1/Gamma(1+mu)
    double gammi; // 1/Gamma(1-mu)
};

inline TemmeGammas temme_gammas(double mu) {
    const double mu2 = mu * mu;
    double g1 = 0.0;
    double g2 = 0.0;
    double p = 1.0;
    for (std::size_t k = 0; k + 1 < kRecipGammaTaylor.size(); k += 2) {
        g2 += kRecipGammaTaylor[k] * p;
        g1 -= kRecipGammaTaylor[k + 1] * p;
        p *= mu2;
    }
    return {g1, g2, g2 - mu * g1, g2 + mu * g1};
}

// K_mu(z), K_{mu+1}(z) for -1/2 < mu <= 1/2 by Temme's series; |z| <= 2.
template <class T>
std::pair<T, T> temme_k(double mu, T z) {
    using std::abs;
    using std::cosh;
    using std::exp;
    using std::log;
    using std::sinh;
    const T x2 = 0.5 * z;
    const double pimu = std::numbers::pi * mu;
    const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    const T d = -log(x2);
    T e = mu * d;
    const T fact2 = abs(e) < kEps ? T(1.0) : T(sinh(e) / e);
    const auto g = temme_gammas(mu);
    T ff = fact * (g.gam1 * cosh(e) + g.gam2 * fact2 * d);
    T sum = ff;
    e = exp(e);
    T p = 0.5 * e / g.gampl;
    T q = 0.5 / (e * g.gammi);
    T c = 1.0;
    const T dd = x2 * x2;
    T sum1 = p;
    const double mu2 = mu * mu;
    int i = 1;
    for (; i <= kMaxIter; ++i) {
        const double di = static_cast<double>(i);
        ff = (di * ff + p + q) / (di * di - mu2);
        c *= dd / di;
        p /= (di - mu);
        q /= (di + mu);
        const T del = c * ff;
        sum += del;
        const T del1 = c * (p - di * ff);
        sum1 += del1;
        if (abs(del) < abs(sum) * kEps && abs(del1) < abs(sum1) * kEps) break;
    }
    if (i > kMaxIter) throw NonConvergence("Temme series did not converge", 0.0, 1.0);
    return {sum, sum1 * (2.0 / z)};
}

// e^z K_mu(z), e^z K_{mu+1}(z) for |mu| <= 1/2 by Steed's CF2; |z| >= 2.
template <class T>
std::pair<T, T> steed_k_scaled(double mu, T z) {
    using std::abs;
    using std::sqrt;
    const double mu2 = mu * mu;
    T b = 2.0 * (1.0 + z);
    T d = 1.0 / b;
    T h = d;
    T delh = d;
    T q1 = 0.0;
    T q2 = 1.0;
    const double a1 = 0.25 - mu2;
    T q = a1;
    T c = a1;
    double a = -a1;
    T s = 1.0 + q * delh;
    int i = 1;
    for (; i <= kMaxIter; ++i) {
        a -= 2.0 * i;
        c = -a * c / (i + 1.0);
        const T qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const T dels = q * delh;
        s += dels;
        if (abs(dels) < abs(s) * kEps) break;
    }
    if (i > kMaxIter) throw NonConvergence("continued fraction CF2 did not converge", 0.0, 1.0);
    h = a1 * h;
    const T kmu = sqrt(std::numbers::pi / (2.0 * z)) / s;
    const T k1 = kmu * (mu + z + 0.5 - h) / z;
    return {kmu, k1};
}

template <class T>
struct IKScaled {
    T i;  // I_nu(u) e^{-u}
    T i1; // I_{nu+1}(u) e^{-u}
    T k;  // K_nu(u) e^{u}
    T k1; // K_{nu+1}(u) e^{u}
};

// Scaled I and K of orders nu, nu+1. Real u > 0, or complex u with Re u >= 0.
template <class T>
IKScaled<T> ik_scaled(double nu, T x) {
    using std::abs;
    using std::exp;
    const int nl = std::max(0, static_cast<int>(std::ceil(nu - 0.5)));
    const double xmu = nu - nl;
    const T xi = 1.0 / x;
    const T xi2 = 2.0 * xi;
    constexpr double fpmin = 1e-280;

    // CF1 for r_nu = I_{nu+1}/I_nu = 1/(b_1 + 1/(b_2 + ...)), b_k = 2(nu+k)/x, by modified Lentz.
    T r = fpmin;
    T c = r;
    T d = 0.0;
    int it = 1;
    for (; it <= kMaxIter; ++it) {
        const T b = (nu + it) * xi2;
        d = b + d;
        if (abs(d) < fpmin) d = fpmin;
        d = 1.0 / d;
        c = b + 1.0 / c;
        if (abs(c) < fpmin) c = fpmin;
        const T del = c * d;
        r *= del;
        if (abs(del - 1.0) < kEps) break;
    }
    if (it > kMaxIter) throw NonConvergence("continued fraction CF1 did not converge", 0.0, 1.0);
    const T r_nu = r;

    // Downward ratio recurrence r_{l-1} = 1/(2l/x + r_l) to order xmu; prod = I_nu / I_xmu.
    T prod = 1.0;
    for (int l = nl; l >= 1; --l) {
        r = 1.0 / ((xmu + l) * xi2 + r);
        prod *= r;
    }

    T rkmu;
    T rk1;
    if (abs(x) < 2.0) {
        auto [k0, k1v] = temme_k(xmu, x);
        const T ex = exp(x);
        rkmu = k0 * ex;
        rk1 = k1v * ex;
    } else {
        std::tie(rkmu, rk1) = steed_k_scaled(xmu, x);
    }
    // Wronskian I_mu K_{mu+1} + I_{mu+1} K_mu = 1/x
    const T rimu = xi / (rk1 + r * rkmu);
    const T ri = rimu * prod;
    for (int i = 1; i <= nl; ++i) {
        const T rktemp = (xmu + i) * xi2 * rk1 + rkmu;
        rkmu = rk1;
        rk1 = rktemp;
    }
    if (!std::isfinite(abs(rkmu)) || !std::isfinite(abs(rk1)))
        throw OverflowError("Bessel K overflows at this order and argument");
    return {ri, ri * r_nu, rkmu, rk1};
}

inline void check_real_args(double nu, double u) {
    if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("Bessel order must be finite and >= 0");
    if (!(u > 0.0) || !std::isfinite(u)) throw DomainError("Bessel argument must be finite and > 0");
}

/// Coefficients (n+k)!/(k!(n-k)!) of the half-integer polynomial, k = 0..n.
inline std::vector<double> half_integer_coeffs(int n) {
    std::vector<double> a(static_cast<std::size_t>(n) + 1);
    a[0] = 1.0;
    for (int k = 1; k <= n; ++k)
        a[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k) - 1] * (n + k) * (n - k + 1) / static_cast<double>(k);
    return a;
}

/// sum_k a_k (2z)^{-k}, so that K_{n+1/2}(z) = sqrt(pi/2z) e^{-z} * value.
inline Complex half_integer_poly(int n, Complex z) {
    const auto a = half_integer_coeffs(n);
    const Complex y = 1.0 / (2.0 * z);
    Complex s = 0.0;
    for (int k = n; k >= 0; --k) s = s * y + a[static_cast<std::size_t>(k)];
    return s;
}

/// K_nu(z), K_{nu+1}(z) on the principal branch with no range check.
/// Re z < 0 goes through K_nu(z) = e^{-+i pi nu} K_nu(-z) -+ i pi I_nu(-z),
/// upper sign for Im z > 0.
inline std::pair<Complex, Complex> k_complex_pair(double nu, Complex z) {
    if (std::abs(z) <= 2.0) {
        const int nl = std::max(0, static_cast<int>(std::ceil(nu - 0.5)));
        const double xmu = nu - nl;
        auto [kmu, k1] = temme_k(xmu, z);
        const Complex zi2 = 2.0 / z;
        for (int i = 1; i <= nl; ++i) {
            const Complex t = (xmu + i) * zi2 * k1 + kmu;
            kmu = k1;
            k1 = t;
        }
        return {kmu, k1};
    }
    if (z.real() >= 0.0) {
        const auto ik = ik_scaled(nu, z);
        const Complex ez = std::exp(-z);
        return {ik.k * ez, ik.k1 * ez};
    }
    const Complex zeta = -z;
    const auto ik = ik_scaled(nu, zeta);
    const double sgn = z.imag() > 0.0 ? 1.0 : -1.0;
    const Complex ipi(0.0, sgn * std::numbers::pi);
    const Complex em = std::exp(-zeta);
    const Complex ep = std::exp(zeta);
    const Complex rot = std::exp(-ipi * nu);
    return {rot * ik.k * em - ipi * ik.i * ep, -rot * ik.k1 * em - ipi * ik.i1 * ep};
}

inline Complex k_complex_unchecked(double nu, Complex z) {
    if (is_half_integer(nu)) {
        const int n = static_cast<int>(std::lround(nu - 0.5));
        return std::sqrt(std::numbers::pi / (2.0 * z)) * std::exp(-z) * half_integer_poly(n, z);
    }
    return k_complex_pair(nu, z).first;
}

} // namespace detail

/// e^{-u} I_nu(u).
inline double bessel_i_scaled(double nu, double u) {
    detail::check_real_args(nu, u);
    return detail::ik_scaled(nu, u).i;
}

/// e^{u} K_nu(u).
inline double bessel_k_scaled(double nu, double u) {
    detail::check_real_args(nu, u);
    return detail::ik_scaled(nu, u).k;
}

inline double bessel_i(double nu, double u) {
    detail::check_real_args(nu, u);
    const double s = detail::ik_scaled(nu, u).i;
    if (s > 0.0 && u + std::log(s) > std::log(std::numeric_limits<double>::max()))
        throw OverflowError("bessel_i overflows double range");
    return s * std::exp(u);
}

inline double bessel_k(double nu, double u) {
    detail::check_real_args(nu, u);
    return detail::ik_scaled(nu, u).k * std::exp(-u);
}

/// Largest |z| accepted by bessel_k_complex.
inline double bessel_k_complex_range(double nu) { return 3.0 * nu + 8.0; }

/// Principal-branch K_nu(z) on C minus (-inf, 0].
inline Complex bessel_k_complex(double nu, Complex z) {
    if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("Bessel order must be finite and >= 0");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("complex argument must be finite");
    if (z.imag() == 0.0 && z.real() <= 0.0) throw CutViolation("argument lies on the branch cut (-inf, 0]");
    if (std::abs(z) > bessel_k_complex_range(nu)) {
        std::ostringstream os;
        os << "|z| = " << std::abs(z) << " exceeds the supported range " << bessel_k_complex_range(nu);
        throw AccuracyError(os.str());
    }
    return detail::k_complex_unchecked(nu, z);
}

/// Zeros of K_mu in the cut plane; conjugate pairs are adjacent.
struct KZeroSet {
    double order = 0.0;
    std::vector<Complex> zeros;
    int count() const { return static_cast<int>(zeros.size()); }
};

namespace detail {

inline std::vector<Complex> half_integer_zeros(int n) {
    // Roots of sum_k a_k w^{n-k} in w = 2z, from the companion matrix.
    const auto a = half_integer_coeffs(n);
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) comp(0, j) = -a[static_cast<std::size_t>(j) + 1];
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    std::vector<Complex> roots;
    for (int i = 0; i < n; ++i) {
        Complex w = es.eigenvalues()[i];
        for (int it = 0; it < 50; ++it) { // Newton polish on the polynomial
            Complex p = 1.0;
            Complex dp = 0.0;
            for (int k = 1; k <= n; ++k) {
                dp = dp * w + p;
                p = p * w + a[static_cast<std::size_t>(k)];
            }
            const Complex step = p / dp;
            w -= step;
            if (std::abs(step) <= 1e-17 * std::abs(w)) break;
        }
        roots.push_back(0.5 * w);
    }
    return roots;
}

inline std::vector<Complex> newton_zeros(double mu) {
    const double rmin = 0.05;
    const double rmax = 3.0 * mu + 4.0;
    constexpr int nr = 24;
    constexpr int nt = 12;
    std::vector<Complex> found;
    for (int ir = 0; ir < nr; ++ir) {
        const double r = rmin * std::pow(rmax / rmin, ir / (nr - 1.0));
        for (int it = 0; it < nt; ++it) {
            const double th = 0.5 * std::numbers::pi * (1.0 + (it + 0.5) / nt);
            Complex z = std::polar(r, th);
            bool ok = false;
            for (int k = 0; k < 80; ++k) {
                if (!(z.imag() > 0.0) || std::abs(z) > 4.0 * rmax) break;
                auto [km1, km] = k_complex_pair(mu - 1.0, z);
                const Complex dk = -km1 - (mu / z) * km;
                const Complex step = km / dk;
                z -= step;
                if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) break;
                if (std::abs(step) <= 1e-15 * std::abs(z)) {
                    ok = z.imag() > 0.0 && z.real() < 0.0;
                    break;
                }
            }
            if (!ok) continue;
            const bool dup = std::any_of(found.begin(), found.end(),
                                         [&](const Complex& w) { return std::abs(w - z) < 1e-6; });
            if (!dup) found.push_back(z);
        }
    }
    return found;
}

} // namespace detail

/// Zero set of K_mu for 0 <= mu <= 10.
inline KZeroSet k_zero_set(double mu) {
    if (!(mu >= 0.0) || mu > kMaxZeroOrder)
        throw DomainError("k_zero_set supports 0 <= mu <= 10");
    KZeroSet set;
    set.order = mu;
    const int expected = k_count(mu);
    if (expected == 0) return set;

    std::vector<Complex> real_zeros;
    std::vector<Complex> upper;
    if (is_half_integer(mu)) {
        for (const auto& z : detail::half_integer_zeros(expected)) {
            if (std::abs(z.imag()) <= 1e-9 * std::abs(z))
                real_zeros.emplace_back(z.real(), 0.0);
            else if (z.imag() > 0.0)
                upper.push_back(z);
        }
    } else {
        upper = detail::newton_zeros(mu);
    }
    std::sort(real_zeros.begin(), real_zeros.end(), [](auto l, auto r) { return l.real() < r.real(); });
    std::sort(upper.begin(), upper.end(), [](auto l, auto r) { return l.imag() < r.imag(); });
    for (const auto& z : real_zeros) set.zeros.push_back(z);
    for (const auto& z : upper) {
        set.zeros.push_back(z);
        set.zeros.push_back(std::conj(z));
    }
    if (set.count() != expected) {
        std::ostringstream os;
        os << "K_" << mu << " zero search found " << set.count() << " zeros, expected " << expected;
        throw CountMismatch(os.str(), expected, set.count());
    }
    return set;
}

} // namespace gbmhit
