#ifndef GLAB_GAME_EVAL_HPP
#define GLAB_GAME_EVAL_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "glab/davie_reeds.hpp"
#include "glab/strip_games.hpp"

namespace glab {

/// A Hermite projection game sum_k c_k Pi_k, stored as finitely many
/// explicit degree coefficients plus an identity weight applied to every
/// degree. The effective coefficient of degree k is
/// explicit_coeffs[k] + identity_weight.
struct GameCoefficients {
    std::map<int, double> explicit_coeffs;
    double identity_weight = 0.0;

    double coefficient(int k) const {
        const auto it = explicit_coeffs.find(k);
        return identity_weight + (it == explicit_coeffs.end() ? 0.0 : it->second);
    }
};

/// The Davie-Reeds game Pi_1 - lambda* I.
inline GameCoefficients dr_game() {
    GameCoefficients g;
    g.explicit_coeffs[1] = 1.0;
    g.identity_weight = -dr_constants().lambda_star;
    return g;
}

/// The perturbed game Pi_1 - lambda* I - eps Pi_3.
inline GameCoefficients perturbed_game(double eps) {
    if (!(eps >= 0.0)) throw std::invalid_argument("perturbed_game: eps must be >= 0");
    GameCoefficients g = dr_game();
    g.explicit_coeffs[3] = -eps;
    return g;
}

struct SdpValue {
    double value;
    int degree;  // a degree attaining the sup; bare identity degrees count too
};

/// sdp(A) = sup_k |c_k|. Every non-explicit degree carries the identity
/// weight alone, so that always participates in the sup; the reported
/// degree is the smallest one attaining it.
inline SdpValue sdp_value(const GameCoefficients& game) {
    int tail_degree = 0;
    while (game.explicit_coeffs.count(tail_degree) != 0) ++tail_degree;
    SdpValue best{std::abs(game.identity_weight), tail_degree};
    for (const auto& [k, c] : game.explicit_coeffs) {
        const double a = std::abs(c + game.identity_weight);
        if (a > best.value || (a == best.value && k < best.degree)) best = {a, k};
    }
    return best;
}

/// val_A(f, g) for univariate sign functions. The projector part is summed
/// over the explicit degrees; the identity part contributes through the
/// exact overlap E[f g], so no Hermite truncation enters the identity term.
inline double val_1d(const GameCoefficients& game, const SignFunction1D& f,
                     const SignFunction1D& g, int degree_cap = kMaxHermiteDegree) {
    if (degree_cap > kMaxHermiteDegree)
        throw std::domain_error("val_1d: degree cap above the Hermite degree limit");
    double value = 0.0;
    for (const auto& [k, c] : game.explicit_coeffs) {
        if (k > degree_cap) throw std::domain_error("val_1d: explicit degree above the cap");
        if (c != 0.0) value += c * pi_k_inner(f, g, k);
    }
    if (game.identity_weight != 0.0) value += game.identity_weight * inner_product(f, g);
    return value;
}

/// Left and right side of the value-stability inequality
/// |val_A(f,g) - val_A(f~,g)| <= ||A|| * ||f - f~||_2, with the L2 distance
/// computed exactly from the disagreement measure.
inline std::pair<double, double> value_stability_gap(const GameCoefficients& game,
                                                     const SignFunction1D& f,
                                                     const SignFunction1D& f_tilde,
                                                     const SignFunction1D& g) {
    const double lhs = std::abs(val_1d(game, f, g) - val_1d(game, f_tilde, g));
    const double rhs = sdp_value(game).value * 2.0 * std::sqrt(disagreement_measure(f, f_tilde));
    return {lhs, rhs};
}

/// Gap factor of the perturbation theorem: 0.046 - 12 (2 eps)^{1/4}.
inline double perturbation_gap_term(double eps) {
    return 0.046 - 12.0 * std::pow(2.0 * eps, 0.25);
}

/// Upper bound for val(A_eps) from the two-case analysis: the stability
/// case gives val_dr - eps * gap_term, and the Cauchy-Schwarz case caps the
/// degree-3 correlation at 1 in absolute value, so the bound stays valid
/// for every eps >= 0 as val_dr - eps * max(gap_term, -1).
inline double perturbed_upper_bound(double eps) {
    if (!(eps >= 0.0)) throw std::invalid_argument("perturbed_upper_bound: eps must be >= 0");
    const double gap = perturbation_gap_term(eps);
    return dr_constants().val_dr - eps * std::max(gap, -1.0);
}

/// The full arithmetic chain behind the improved lower bound.
struct BoundChainReport {
    double epsilon;
    double val_dr;
    double gap_term;       // 0.046 - 12 (2 eps)^{1/4}
    double val_eps_upper;  // val_dr - eps * gap_term
    double kg_lower;       // k_dr + (1 - lambda*) / val_dr^2 * eps * gap_term
    double improvement;    // kg_lower - k_dr
};

/// K_G >= (1 - lambda*) / val(A_eps) >= k_dr + (1-lambda*)/val_dr^2 * eps * gap,
/// the last step by convexity of x -> (1 - lambda*)/(val_dr - x) at 0.
/// Requires a positive gap term; otherwise the chain is inapplicable.
inline BoundChainReport bound_chain(double eps) {
    if (!(eps >= 0.0)) throw std::invalid_argument("bound_chain: eps must be >= 0");
    const double gap = perturbation_gap_term(eps);
    if (!(gap > 0.0))
        throw std::domain_error("bound_chain: nonpositive gap term, the bound chain does not apply");
    const DrConstants& k = dr_constants();
    BoundChainReport r{};
    r.epsilon = eps;
    r.val_dr = k.val_dr;
    r.gap_term = gap;
    r.val_eps_upper = k.val_dr - eps * gap;
    r.improvement = (1.0 - k.lambda_star) / (k.val_dr * k.val_dr) * eps * gap;
    r.kg_lower = k.k_dr + r.improvement;
    return r;
}

}  // namespace glab

#endif  // GLAB_GAME_EVAL_HPP
