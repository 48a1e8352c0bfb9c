#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "glab/game_eval.hpp"
#include "glab/rng.hpp"

using namespace glab;
using Catch::Approx;

namespace {

SignFunction1D random_sign_function(RngStream& rng, int max_bp = 5) {
    const int m = rng.uniform_int(1, max_bp);
    std::vector<double> bp(static_cast<std::size_t>(m));
    for (auto& b : bp) b = rng.uniform(-2.5, 2.5);
    return SignFunction1D(rng.sign(), bp);
}

}  // namespace

TEST_CASE("dr_game and perturbed_game coefficients", "[game]") {
    const GameCoefficients dr = dr_game();
    REQUIRE(dr.coefficient(1) == Approx(0.80252090900501805).epsilon(1e-12));
    REQUIRE(dr.coefficient(0) == Approx(-dr_constants().lambda_star).epsilon(1e-12));
    REQUIRE(dr.coefficient(7) == dr.coefficient(0));

    const GameCoefficients p0 = perturbed_game(0.0);
    REQUIRE(p0.coefficient(1) == dr.coefficient(1));
    REQUIRE(p0.coefficient(3) == dr.coefficient(3));

    const GameCoefficients p = perturbed_game(0.1);
    REQUIRE(p.coefficient(3) == Approx(-dr_constants().lambda_star - 0.1).epsilon(1e-12));
    REQUIRE_THROWS_AS(perturbed_game(-1e-3), std::invalid_argument);
}

TEST_CASE("sdp_value is the sup of |c_k|", "[game]") {
    const auto dr = sdp_value(dr_game());
    REQUIRE(dr.value == Approx(0.80252090900501805).epsilon(1e-12));
    REQUIRE(dr.value == Approx(0.80252).margin(1e-5));
    REQUIRE(dr.degree == 1);

    const auto flipped = sdp_value(perturbed_game(1.0));
    REQUIRE(flipped.value == Approx(dr_constants().lambda_star + 1.0).epsilon(1e-12));
    REQUIRE(flipped.degree == 3);

    REQUIRE(sdp_value(GameCoefficients{}).value == 0.0);
}

TEST_CASE("val_1d on the left-column optimizer pair", "[game]") {
    const DrConstants& k = dr_constants();
    const SignFunction1D f(-1, {-k.c_star});
    const SignFunction1D g(-1, {k.c_star});
    REQUIRE(val_1d(dr_game(), f, g) == Approx(k.val_dr).margin(1e-12));
    REQUIRE(val_1d(dr_game(), f, g) == Approx(0.4786).margin(1e-4));

    for (double eps : {1e-6, 1e-3, 0.5}) {
        const double expected = k.val_dr - eps * pi_k_inner(f, g, 3);
        REQUIRE(val_1d(perturbed_game(eps), f, g) ==
                Approx(expected).margin(1e-9 * (1.0 + eps)));
    }
}

TEST_CASE("identity term uses the exact overlap", "[game]") {
    RngStream rng(7301);
    GameCoefficients identity_only;
    identity_only.identity_weight = -0.7;
    for (int trial = 0; trial < 20; ++trial) {
        const SignFunction1D f = random_sign_function(rng);
        REQUIRE(val_1d(identity_only, f, f) == Approx(-0.7).margin(1e-15));
    }
}

TEST_CASE("perturbation acts linearly through the degree-3 inner product", "[game]") {
    RngStream rng(7302);
    for (int trial = 0; trial < 50; ++trial) {
        const SignFunction1D f = random_sign_function(rng);
        const SignFunction1D g = random_sign_function(rng);
        const double base = val_1d(dr_game(), f, g);
        const double p3 = pi_k_inner(f, g, 3);
        for (double eps : {1e-6, 1e-3, 0.25}) {
            const double lhs = val_1d(perturbed_game(eps), f, g);
            const double rhs = base - eps * p3;
            REQUIRE(lhs == Approx(rhs).epsilon(1e-12).margin(1e-14));
        }
    }
}

TEST_CASE("value stability inequality on random triples", "[game]") {
    RngStream rng(7303);
    const GameCoefficients game = dr_game();
    for (int trial = 0; trial < 200; ++trial) {
        const SignFunction1D f = random_sign_function(rng);
        const SignFunction1D f_tilde = random_sign_function(rng);
        const SignFunction1D g = random_sign_function(rng);
        const auto [lhs, rhs] = value_stability_gap(game, f, f_tilde, g);
        REQUIRE(lhs <= rhs + 1e-12);
    }
}

TEST_CASE("value stability edge cases", "[game]") {
    const SignFunction1D f(-1, {0.0});
    const auto [lhs0, rhs0] = value_stability_gap(dr_game(), f, f, f);
    REQUIRE(lhs0 == 0.0);
    REQUIRE(rhs0 == 0.0);

    // f and f~ differ on a single cell of known measure
    const SignFunction1D f_tilde(-1, {0.0, 0.5, 1.0});
    const double m = gauss_cdf(1.0) - gauss_cdf(0.5);
    const auto [lhs, rhs] = value_stability_gap(dr_game(), f, f_tilde, f);
    REQUIRE(rhs == Approx(sdp_value(dr_game()).value * 2.0 * std::sqrt(m)).epsilon(1e-12));
    REQUIRE(lhs <= rhs);
}

TEST_CASE("Cauchy-Schwarz caps the degree-3 inner product", "[game]") {
    RngStream rng(7304);
    for (int trial = 0; trial < 200; ++trial) {
        const SignFunction1D f = random_sign_function(rng, 7);
        const SignFunction1D g = random_sign_function(rng, 7);
        REQUIRE(std::abs(pi_k_inner(f, g, 3)) <= 1.0);
    }
}

TEST_CASE("perturbed_upper_bound across regimes", "[game]") {
    const DrConstants& k = dr_constants();
    REQUIRE(perturbed_upper_bound(0.0) == k.val_dr);

    REQUIRE(perturbation_gap_term(4e-11) >= 0.01);
    REQUIRE(perturbed_upper_bound(4e-11) ==
            Approx(k.val_dr - 4e-11 * perturbation_gap_term(4e-11)).epsilon(1e-15));

    // at eps = 1e-2 the gap term is negative and the bound falls back to
    // the Cauchy-Schwarz case
    REQUIRE(perturbation_gap_term(1e-2) < 0.0);
    REQUIRE(perturbation_gap_term(1e-2) == Approx(0.046 - 12.0 * std::pow(0.02, 0.25)).epsilon(1e-12));
    REQUIRE(perturbed_upper_bound(1e-2) <= k.val_dr + 1e-2);
    REQUIRE(perturbed_upper_bound(1.0) == Approx(k.val_dr + 1.0).epsilon(1e-12));
}

TEST_CASE("upper bound dominates 1-d values", "[game]") {
    RngStream rng(7305);
    std::vector<std::pair<SignFunction1D, SignFunction1D>> pairs;
    const DrConstants& k = dr_constants();
    pairs.emplace_back(SignFunction1D(-1, {-k.c_star}), SignFunction1D(-1, {k.c_star}));
    for (int trial = 0; trial < 100; ++trial)
        pairs.emplace_back(random_sign_function(rng), random_sign_function(rng));
    for (double eps : {0.0, 1e-6, 1e-4}) {
        const double bound = perturbed_upper_bound(eps);
        const GameCoefficients game = perturbed_game(eps);
        for (const auto& [f, g] : pairs) REQUIRE(val_1d(game, f, g) <= bound + 1e-9);
    }
}

TEST_CASE("bound_chain reproduces the arithmetic of the improvement", "[game]") {
    const DrConstants& k = dr_constants();
    const BoundChainReport r = bound_chain(4e-11);
    REQUIRE(r.gap_term >= 0.01);
    REQUIRE(r.improvement >= 1e-12);
    REQUIRE(r.kg_lower == Approx(k.k_dr + r.improvement).epsilon(1e-15));
    REQUIRE(r.val_eps_upper == Approx(k.val_dr - 4e-11 * r.gap_term).epsilon(1e-15));
    // frozen high-precision oracle values for this epsilon
    REQUIRE(r.gap_term == Approx(0.01011162925).margin(1e-9));
    REQUIRE(r.improvement == Approx(1.417321767e-12).epsilon(1e-6));

    const BoundChainReport zero = bound_chain(0.0);
    REQUIRE(zero.improvement == 0.0);
    REQUIRE(zero.kg_lower == k.k_dr);

    const BoundChainReport tiny = bound_chain(1e-12);
    REQUIRE(tiny.gap_term == Approx(0.046 - 12.0 * std::pow(2e-12, 0.25)).epsilon(1e-12));
    REQUIRE(tiny.improvement == Approx(1.111861665e-13).epsilon(1e-6));

    REQUIRE_THROWS_AS(bound_chain(1e-2), std::domain_error);
    REQUIRE_THROWS_AS(bound_chain(-1.0), std::invalid_argument);
}

TEST_CASE("convexity step of the lower-bound chain", "[game]") {
    const DrConstants& k = dr_constants();
    const double lam = k.lambda_star;
    for (int i = 0; i <= 1000; ++i) {
        const double x = 0.5 * k.val_dr * i / 1000.0;
        const double lhs = (1.0 - lam) / (k.val_dr - x);
        const double rhs = k.k_dr + (1.0 - lam) / (k.val_dr * k.val_dr) * x;
        REQUIRE(lhs >= rhs - 1e-12);
    }
}

TEST_CASE("val_1d respects the degree cap", "[game]") {
    const SignFunction1D f(-1, {0.0});
    REQUIRE_THROWS_AS(val_1d(perturbed_game(0.1), f, f, 2), std::domain_error);
    REQUIRE_NOTHROW(val_1d(perturbed_game(0.1), f, f, 3));
    REQUIRE_THROWS_AS(val_1d(dr_game(), f, f, 65), std::domain_error);
}
