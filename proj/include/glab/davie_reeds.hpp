#ifndef GLAB_DAVIE_REEDS_HPP
#define GLAB_DAVIE_REEDS_HPP

#include <stdexcept>
#include <vector>

#include "glab/special_functions.hpp"

namespace glab {

/// The constants of the Davie-Reeds game, re-derived from scratch by
/// solve_constants() rather than hard-coded. c_star is the unique root of
/// h_gap in (0, 1); lambda_star = 2 c* phi(c*); c_plus is the second
/// critical point of the objective, in (1, infinity); val_dr = F(c*);
/// k_dr = (1 - lambda_star) / val_dr is the resulting integrality-gap
/// lower bound.
struct DrConstants {
    double c_star;
    double lambda_star;
    double c_plus;
    double val_dr;
    double k_dr;
};

/// H(C) = 4 phi(C)^2 - 4 Phi(-C) + 1. Its unique root in (0, 1) fixes the
/// strip half-width c_star.
inline double h_gap(double c) {
    const double p = gauss_pdf(c);
    return 4.0 * p * p - 4.0 * gauss_cdf(-c) + 1.0;
}

/// F(C) = 4 phi(C)^2 - lambda (4 Phi(-C) - 1), the one-dimensional objective
/// whose maximum over C bounds the classical game value.
inline double f_objective(double c, double lam) {
    const double p = gauss_pdf(c);
    return 4.0 * p * p - lam * (4.0 * gauss_cdf(-c) - 1.0);
}

/// F'(C) = 4 phi(C) (lambda - 2 C phi(C)).
inline double f_prime(double c, double lam) {
    const double p = gauss_pdf(c);
    return 4.0 * p * (lam - 2.0 * c * p);
}

/// F''(C) = -4 lambda C phi(C) + 8 phi(C)^2 (2 C^2 - 1).
inline double f_second(double c, double lam) {
    const double p = gauss_pdf(c);
    return -4.0 * lam * c * p + 8.0 * p * p * (2.0 * c * c - 1.0);
}

/// Solves for all Davie-Reeds constants. c_star from h_gap on (0, 1),
/// lambda_star = 2 c* phi(c*), c_plus from F' = 0 on (1, 6) where
/// 2 C phi(C) is monotone decreasing, so the bracket is safe.
inline DrConstants solve_constants() {
    constexpr double tol = 1e-14;
    DrConstants k{};
    k.c_star = find_root([](double c) { return h_gap(c); }, 0.0, 1.0, tol);
    k.lambda_star = 2.0 * k.c_star * gauss_pdf(k.c_star);
    k.c_plus = find_root(
        [lam = k.lambda_star](double c) { return lam - 2.0 * c * gauss_pdf(c); }, 1.0, 6.0, tol);
    k.val_dr = f_objective(k.c_star, k.lambda_star);
    k.k_dr = (1.0 - k.lambda_star) / k.val_dr;
    return k;
}

/// Cached copy of solve_constants(); computed once, immutable afterwards.
inline const DrConstants& dr_constants() {
    static const DrConstants k = solve_constants();
    return k;
}

/// R(C) = [4 phi^2 - 2 C phi (4 Phi(-C) - 1)] / (1 - 2 C phi): the value of
/// the game at parameter lambda = 2 C phi(C), normalized by its SDP value.
/// Only defined on [0, 1) where the denominator stays positive.
inline double integrality_ratio(double c) {
    if (!(c >= 0.0 && c < 1.0))
        throw std::domain_error("integrality_ratio: c must lie in [0, 1)");
    const double p = gauss_pdf(c);
    const double lam = 2.0 * c * p;
    return (4.0 * p * p - lam * (4.0 * gauss_cdf(-c) - 1.0)) / (1.0 - lam);
}

/// R'(C) = 2 (1 - C^2) phi / (1 - 2 C phi)^2 * (4 phi^2 - 4 Phi(-C) + 1);
/// vanishes exactly where h_gap does, which is how c_star is characterized.
inline double integrality_ratio_prime(double c) {
    if (!(c >= 0.0 && c < 1.0))
        throw std::domain_error("integrality_ratio_prime: c must lie in [0, 1)");
    const double p = gauss_pdf(c);
    const double denom = 1.0 - 2.0 * c * p;
    return 2.0 * (1.0 - c * c) * p / (denom * denom) * h_gap(c);
}

struct LandscapePoint {
    double c;
    double f;
    double f_prime;
};

/// Uniform-grid evaluation of (C, F(C), F'(C)) at lambda_star, the data
/// behind the objective/derivative landscape export.
inline std::vector<LandscapePoint> landscape(double c_min, double c_max, int steps) {
    if (steps < 2) throw std::invalid_argument("landscape: steps must be >= 2");
    const double lam = dr_constants().lambda_star;
    const double step = (c_max - c_min) / static_cast<double>(steps - 1);
    std::vector<LandscapePoint> rows;
    rows.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double c = c_min + step * static_cast<double>(i);
        rows.push_back({c, f_objective(c, lam), f_prime(c, lam)});
    }
    return rows;
}

}  // namespace glab

#endif  // GLAB_DAVIE_REEDS_HPP
