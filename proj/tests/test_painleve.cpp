#include <doctest.h>

#include <cmath>

#include "aztec/painleve.hpp"
#include "aztec/special.hpp"

using namespace aztec;

TEST_CASE("solution invariants") {
    const PainleveSolution& sol = shared_painleve();
    REQUIRE(sol.grid.size() == sol.u.size());
    double prev = -1e9;
    for (std::size_t i = 0; i < sol.grid.size(); ++i) {
        CHECK(sol.u[i] > 0);
        CHECK(sol.q[i] <= 0);
        CHECK(sol.logFTW[i] >= prev);  // nondecreasing
        prev = sol.logFTW[i];
    }
    CHECK(std::fabs(sol.logFTW.back()) < 1e-10);  // -> 0 at s_max
    CHECK(sol.tol < 1e-10);
}

TEST_CASE("u matches Ai on the right") {
    const PainleveSolution& sol = shared_painleve();
    for (double s = 4; s <= 8; s += 0.5)
        CHECK(eval_u(s, sol) / airy_ai(s) ==
              doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("left asymptotics of u and q") {
    const PainleveSolution& sol = shared_painleve();
    for (double s : {-10.0, -12.0}) {
        double tol = 2 * std::pow(-s, -2.5);
        CHECK(std::fabs(eval_u(s, sol) - std::sqrt(-s / 2)) < tol);
        CHECK(std::fabs(eval_q(s, sol) - (-s * s / 4 + 1 / (8 * s))) < tol);
    }
}

TEST_CASE("tracy-widom tails") {
    const PainleveSolution& sol = shared_painleve();
    // Left tail at s=-8 (grid zone, compared against the asymptotic form).
    double lhs = log_FTW(-8.0, sol);
    CHECK(std::fabs(lhs - log_FTW_left_tail(-8.0)) <
          3 * std::pow(8.0, -1.5));
    // Right tail at s=6: 20% relative in magnitude.
    double grid_val = log_FTW(5.999999, sol);
    double tail_val = log_FTW_right_tail(6.0);
    CHECK(std::fabs(grid_val - tail_val) < 0.2 * std::fabs(tail_val));
}

TEST_CASE("derivative identity d/ds log FTW = -q") {
    const PainleveSolution& sol = shared_painleve();
    double h = 1e-4;
    for (double s = -8; s <= 4; s += 0.25) {
        double d = (log_FTW(s + h, sol) - log_FTW(s - h, sol)) / (2 * h);
        CHECK(std::fabs(d + eval_q(s, sol)) < 1e-8);
    }
}

TEST_CASE("FTW(0) regression constant") {
    // Frozen once from a dual-resolution self-check; the known value of
    // the GUE Tracy-Widom CDF at 0 is ~0.9693728283552: F(0),
    // log F(0) = -0.0311059853063709...
    const PainleveSolution& sol = shared_painleve();
    CHECK(log_FTW(0.0, sol) ==
          doctest::Approx(-0.031105985306).epsilon(1e-8));
}

TEST_CASE("ODE residual at collocation midpoints") {
    const PainleveSolution& sol = shared_painleve();
    for (double s = -14; s <= 7; s += 0.37) {
        double h = 1e-3;
        double upp = (eval_u(s + h, sol) - 2 * eval_u(s, sol) +
                      eval_u(s - h, sol)) / (h * h);
        double u = eval_u(s, sol);
        CHECK(std::fabs(upp - s * u - 2 * u * u * u) < 1e-4);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(solve_hastings_mcleod(-10, 8, 1e-10), parameter_error);
    CHECK_THROWS_AS(solve_hastings_mcleod(-16, 8, 1e-13), parameter_error);
    const PainleveSolution& sol = shared_painleve();
    CHECK_THROWS_AS(eval_u(-20.0, sol), parameter_error);
}
