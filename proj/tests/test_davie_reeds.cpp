#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "glab/davie_reeds.hpp"
#include "glab/rng.hpp"

using namespace glab;
using Catch::Approx;

TEST_CASE("h_gap at the anchor points", "[davie_reeds]") {
    REQUIRE(h_gap(0.0) == Approx(2.0 / 3.14159265358979323846 - 1.0).margin(1e-15));
    REQUIRE(h_gap(0.0) == Approx(-0.36338).margin(1e-5));
    REQUIRE(h_gap(1.0) == Approx(0.59958).margin(1e-5));
    REQUIRE(h_gap(0.25573) == Approx(0.0).margin(1e-4));
}

TEST_CASE("h_gap has exactly one sign change on [0, 1]", "[davie_reeds]") {
    int changes = 0;
    double prev = h_gap(0.0);
    for (int i = 1; i <= 10000; ++i) {
        const double cur = h_gap(i * 1e-4);
        if ((cur > 0.0) != (prev > 0.0)) ++changes;
        prev = cur;
    }
    REQUIRE(changes == 1);
}

TEST_CASE("solve_constants reproduces the published values", "[davie_reeds]") {
    const DrConstants k = solve_constants();
    REQUIRE(k.c_star == Approx(0.25573).margin(5e-5));
    REQUIRE(k.lambda_star == Approx(0.19748).margin(5e-5));
    REQUIRE(k.c_plus == Approx(2.0582).margin(1e-3));
    REQUIRE(k.val_dr == Approx(0.4786).margin(1e-4));
    REQUIRE(k.k_dr == Approx(1.6769).margin(1e-4));
}

TEST_CASE("solve_constants internal identities", "[davie_reeds]") {
    const DrConstants k = solve_constants();
    const double p = gauss_pdf(k.c_star);
    REQUIRE(k.lambda_star == Approx(2.0 * k.c_star * p).margin(1e-12));
    REQUIRE(h_gap(k.c_star) == Approx(0.0).margin(1e-9));
    // H(c*) = 0 rewritten: 4 Phi(-c*) - 1 = 4 phi(c*)^2
    REQUIRE(4.0 * gauss_cdf(-k.c_star) - 1.0 == Approx(4.0 * p * p).margin(1e-9));
    REQUIRE(k.val_dr == Approx(4.0 * p * p * (1.0 - k.lambda_star)).margin(1e-9));
    REQUIRE(k.k_dr * 4.0 * p * p == Approx(1.0).margin(1e-9));
    REQUIRE(0.0 < k.c_star);
    REQUIRE(k.c_star < 1.0);
    REQUIRE(1.0 < k.c_plus);
}

TEST_CASE("f_objective at the quoted points", "[davie_reeds]") {
    const DrConstants k = dr_constants();
    REQUIRE(f_objective(0.0, k.lambda_star) == Approx(0.4391).margin(1e-4));
    REQUIRE(f_objective(0.5, k.lambda_star) == Approx(0.4496).margin(1e-4));
    REQUIRE(f_prime(k.c_star, k.lambda_star) == Approx(0.0).margin(1e-9));
    REQUIRE(f_prime(k.c_plus, k.lambda_star) == Approx(0.0).margin(1e-9));
}

TEST_CASE("derivatives match centered finite differences", "[davie_reeds]") {
    const double lam = dr_constants().lambda_star;
    RngStream rng(7101);
    const double h = 1e-5;
    for (int trial = 0; trial < 100; ++trial) {
        const double c = rng.uniform(0.0, 3.0);
        const double d1 = (f_objective(c + h, lam) - f_objective(c - h, lam)) / (2.0 * h);
        const double d2 =
            (f_objective(c + h, lam) - 2.0 * f_objective(c, lam) + f_objective(c - h, lam)) /
            (h * h);
        REQUIRE(f_prime(c, lam) == Approx(d1).margin(1e-6));
        REQUIRE(f_second(c, lam) == Approx(d2).margin(1e-4));
    }
}

TEST_CASE("objective is uniformly concave on [0, 1/2]", "[davie_reeds]") {
    const double lam = dr_constants().lambda_star;
    for (int i = 0; i <= 500; ++i) REQUIRE(f_second(i * 1e-3, lam) < -0.49);
}

TEST_CASE("integrality ratio and its critical point", "[davie_reeds]") {
    const DrConstants k = dr_constants();
    REQUIRE(integrality_ratio(k.c_star) == Approx(1.0 / k.k_dr).margin(1e-12));
    REQUIRE(integrality_ratio(k.c_star) == Approx(0.59634).margin(1e-4));
    REQUIRE(integrality_ratio_prime(k.c_star) == Approx(0.0).margin(1e-8));
    REQUIRE(integrality_ratio_prime(0.1) < 0.0);
    REQUIRE(integrality_ratio_prime(0.4) > 0.0);
    REQUIRE_THROWS_AS(integrality_ratio(1.0), std::domain_error);
    REQUIRE_THROWS_AS(integrality_ratio(-0.1), std::domain_error);
    REQUIRE_THROWS_AS(integrality_ratio_prime(1.2), std::domain_error);
}

TEST_CASE("integrality_ratio_prime matches a finite difference of the ratio", "[davie_reeds]") {
    const double h = 1e-6;
    for (double c : {0.05, 0.2, 0.25573, 0.5, 0.8}) {
        const double d = (integrality_ratio(c + h) - integrality_ratio(c - h)) / (2.0 * h);
        REQUIRE(integrality_ratio_prime(c) == Approx(d).margin(1e-6));
    }
}

TEST_CASE("landscape grid", "[davie_reeds]") {
    const auto rows = landscape(0.0, 4.0, 401);
    REQUIRE(rows.size() == 401);
    REQUIRE(rows.front().c == 0.0);
    REQUIRE(rows.back().c == Approx(4.0).margin(1e-12));
    REQUIRE(rows.front().f == Approx(0.4391).margin(1e-4));

    // F' changes sign only near 0.25573 and 2.0582
    std::vector<double> change_locations;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if ((rows[i].f_prime > 0.0) != (rows[i - 1].f_prime > 0.0))
            change_locations.push_back(rows[i].c);
    REQUIRE(change_locations.size() == 2);
    REQUIRE(change_locations[0] == Approx(0.25573).margin(0.02));
    REQUIRE(change_locations[1] == Approx(2.0582).margin(0.02));

    const auto degenerate = landscape(1.0, 1.0, 2);
    REQUIRE(degenerate[0].c == degenerate[1].c);
    REQUIRE(degenerate[0].f == degenerate[1].f);
    REQUIRE(degenerate[0].f_prime == degenerate[1].f_prime);

    REQUIRE_THROWS_AS(landscape(0.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("ratio critical point minimizes val/sdp on (0, 1)", "[davie_reeds]") {
    const DrConstants k = dr_constants();
    // dense scan: R = val/sdp bottoms out at c_star, where the reciprocal
    // integrality gap 1/R = k_dr peaks
    double best_c = 0.0, best_v = 2.0;
    for (int i = 0; i < 1000; ++i) {
        const double c = i * 1e-3;
        const double v = integrality_ratio(c);
        if (v < best_v) {
            best_v = v;
            best_c = c;
        }
    }
    REQUIRE(best_c == Approx(k.c_star).margin(2e-3));
    REQUIRE(1.0 / best_v == Approx(k.k_dr).margin(1e-5));
}
