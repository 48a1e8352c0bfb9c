#ifndef GLAB_SPECIAL_FUNCTIONS_HPP
#define GLAB_SPECIAL_FUNCTIONS_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace glab {

/// Truncation point for "infinite" Gaussian integrals: the tail mass beyond
/// |x| = 9 is below 1e-18 and invisible at double precision.
inline constexpr double kGaussianTailCutoff = 9.0;

/// Hard cap on Hermite degrees; the three-term recurrence is exact and stable
/// well past this, the cap just keeps factorials and magnitudes sane.
inline constexpr int kMaxHermiteDegree = 64;

inline constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599344;

/// Standard normal density phi(x) = exp(-x^2/2) / sqrt(2 pi).
inline double gauss_pdf(double x) noexcept { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

/// Standard normal CDF, evaluated through erfc so both tails keep full
/// absolute accuracy. gauss_cdf(-x) == 1 - gauss_cdf(x) holds exactly
/// because both sides reduce to the same erfc call.
inline double gauss_cdf(double x) noexcept { return 0.5 * std::erfc(-x * 0.7071067811865475244008443621048); }

/// Probabilists' Hermite polynomial He_k(x) via the three-term recurrence
/// He_{k+1}(x) = x He_k(x) - k He_{k-1}(x).
inline double hermite_he(int k, double x) {
    if (k < 0 || k > kMaxHermiteDegree)
        throw std::domain_error("hermite_he: degree must be in [0, 64]");
    if (k == 0) return 1.0;
    double prev = 1.0;   // He_0
    double cur = x;      // He_1
    for (int j = 1; j < k; ++j) {
        const double next = x * cur - static_cast<double>(j) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// k! as a double (exact through 22!, correctly rounded beyond).
inline double factorial(int k) {
    double f = 1.0;
    for (int j = 2; j <= k; ++j) f *= static_cast<double>(j);
    return f;
}

/// Partial Hermite-Gaussian integral  int_a^b He_k(x) phi(x) dx  in closed
/// form. For k >= 1 the antiderivative of He_k phi is -He_{k-1} phi, so the
/// value is He_{k-1}(a)phi(a) - He_{k-1}(b)phi(b); boundary terms vanish at
/// +-infinity. For k = 0 it is Phi(b) - Phi(a).
inline double hermite_partial_integral(int k, double a, double b) {
    if (k < 0 || k > kMaxHermiteDegree)
        throw std::domain_error("hermite_partial_integral: degree must be in [0, 64]");
    if (std::isnan(a) || std::isnan(b) || a > b)
        throw std::invalid_argument("hermite_partial_integral: requires a <= b");
    if (k == 0) return gauss_cdf(b) - gauss_cdf(a);
    const auto boundary = [k](double x) {
        return std::isfinite(x) ? hermite_he(k - 1, x) * gauss_pdf(x) : 0.0;
    };
    return boundary(a) - boundary(b);
}

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

namespace detail {

// 15-point Gauss-Kronrod rule on [-1, 1] with the embedded 7-point Gauss rule.
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
inline void gauss_kronrod_15(const F& f, double a, double b, double& value, double& error) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(mid - half * kKronrodNodes[i]);
        fv[14 - i] = f(mid + half * kKronrodNodes[i]);
    }
    fv[7] = f(mid);
    double kron = 0.0;
    for (int i = 0; i < 7; ++i) kron += kKronrodWeights[i] * (fv[i] + fv[14 - i]);
    kron += kKronrodWeights[7] * fv[7];
    double gauss = kGaussWeights[3] * fv[7];
    for (int i = 0; i < 3; ++i) gauss += kGaussWeights[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    value = kron * half;
    // Conservative error estimate: |K15 - G7| without the usual sharpening.
    error = std::abs((kron - gauss) * half);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod quadrature of f over [a, b]. Infinite endpoints
/// are truncated at +-kGaussianTailCutoff (the module only ever integrates
/// against Gaussian-weighted integrands). Splits the worst segment until the
/// summed error estimate is below tol; throws after the subdivision cap.
/// Test/oracle utility; nothing in the evaluation path depends on it.
inline QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                                  double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("integrate: tol must be positive");
    if (std::isnan(a) || std::isnan(b)) throw std::invalid_argument("integrate: NaN endpoint");
    if (!std::isfinite(a)) a = -kGaussianTailCutoff;
    if (!std::isfinite(b)) b = kGaussianTailCutoff;
    if (a > b) throw std::invalid_argument("integrate: requires a <= b");
    if (a == b) return {0.0, 0.0};

    struct Segment {
        double a, b, value, error;
    };
    std::vector<Segment> segments;
    double v0 = 0.0, e0 = 0.0;
    detail::gauss_kronrod_15(f, a, b, v0, e0);
    segments.push_back({a, b, v0, e0});

    constexpr std::size_t kMaxSegments = 4096;
    while (true) {
        double total_error = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < segments.size(); ++i) {
            total_error += segments[i].error;
            if (segments[i].error > segments[worst].error) worst = i;
        }
        if (total_error <= tol) {
            double total = 0.0;
            for (const auto& s : segments) total += s.value;
            return {total, total_error};
        }
        if (segments.size() >= kMaxSegments)
            throw std::runtime_error("integrate: did not converge within subdivision cap");
        const Segment s = segments[worst];
        const double mid = 0.5 * (s.a + s.b);
        Segment left{s.a, mid, 0.0, 0.0}, right{mid, s.b, 0.0, 0.0};
        detail::gauss_kronrod_15(f, left.a, left.b, left.value, left.error);
        detail::gauss_kronrod_15(f, right.a, right.b, right.value, right.error);
        segments[worst] = left;
        segments.push_back(right);
    }
}

/// Bracketing root finder: bisection with secant acceleration. Requires a
/// sign change on [lo, hi]; returns the bracket midpoint once the bracket
/// width is at most tol. Robust over fast: every accepted step keeps a
/// valid bracket, and a bisection is forced whenever the bracket fails to
/// halve, so convergence is guaranteed.
inline double find_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("find_root: tol must be positive");
    if (!(lo < hi)) throw std::invalid_argument("find_root: requires lo < hi");
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if ((f_lo > 0.0) == (f_hi > 0.0))
        throw std::invalid_argument("find_root: no sign change on [lo, hi]");

    constexpr int kMaxIterations = 400;
    double prev_width = hi - lo;
    for (int it = 0; it < kMaxIterations; ++it) {
        if (hi - lo <= tol) return 0.5 * (lo + hi);
        double x;
        const bool force_bisection = (it % 2 == 1) && (hi - lo > 0.5 * prev_width);
        prev_width = hi - lo;
        if (!force_bisection && f_hi != f_lo) {
            x = lo - f_lo * (hi - lo) / (f_hi - f_lo);
            const double margin = 0.01 * (hi - lo);
            if (!(x > lo + margin && x < hi - margin)) x = 0.5 * (lo + hi);
        } else {
            x = 0.5 * (lo + hi);
        }
        // the bracket has reached floating-point resolution
        if (!(x > lo && x < hi)) return 0.5 * (lo + hi);
        const double fx = f(x);
        if (fx == 0.0) return x;
        if ((fx > 0.0) == (f_lo > 0.0)) {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
            f_hi = fx;
        }
    }
    throw std::runtime_error("find_root: did not converge within iteration cap");
}

}  // namespace glab

#endif  // GLAB_SPECIAL_FUNCTIONS_HPP
