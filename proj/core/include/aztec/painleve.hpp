#pragma once

#include <string>
#include <vector>

#include "aztec/errors.hpp"

namespace aztec {

// Hastings-McLeod solution of u'' = su + 2u^3 with u ~ Ai at +infinity,
// tabulated together with q(s) = -int_s^inf u^2 and
// log F^TW(s) = -int_s^inf (x-s) u(x)^2 dx.
struct PainleveSolution {
    std::vector<double> grid;   // ascending s-values
    std::vector<double> u;      // u > 0
    std::vector<double> q;      // q <= 0
    std::vector<double> logFTW;
    double tol = 0;             // achieved accuracy estimate

    double s_min() const { return grid.front(); }
    double s_max() const { return grid.back(); }
};

PainleveSolution solve_hastings_mcleod(double s_min = -16.0,
                                       double s_max = 8.0,
                                       double tol = 1e-10);

// Where a log F^TW value came from.
enum class TWSource { grid, left_tail, right_tail };

// log F^TW(s): cubic interpolation on the grid, asymptotic tails outside
// the switchover points s = -10 and s = +6.
double log_FTW(double s, const PainleveSolution& sol);
double log_FTW(double s, const PainleveSolution& sol, TWSource& source);

// Interpolated u and q on the solution grid.
double eval_u(double s, const PainleveSolution& sol);
double eval_q(double s, const PainleveSolution& sol);

// Asymptotic tails of log F^TW.
double log_FTW_left_tail(double s);
double log_FTW_right_tail(double s);

// Shared solver instance (computed once, reused by Theorem 3 queries).
const PainleveSolution& shared_painleve();

}  // namespace aztec
