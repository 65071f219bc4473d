#include "aztec/painleve.hpp"

#include <algorithm>
#include <cmath>

#include "aztec/special.hpp"

namespace aztec {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double left_bc(double s) {
    // u(s) = sqrt(-s/2) (1 + 1/(8 s^3) + ...), consistent with the
    // O(s^{-5/2}) refinement of the left asymptotics.
    return std::sqrt(-s / 2) * (1 + 1 / (8 * s * s * s));
}

// One Numerov/Newton solve of u'' = su + 2u^3 on a uniform grid.
std::vector<double> solve_grid(const std::vector<double>& s, double h) {
    const int n = static_cast<int>(s.size());
    std::vector<double> u(n);
    for (int i = 0; i < n; ++i) {
        if (s[i] <= -2)
            u[i] = std::sqrt(-s[i] / 2);
        else if (s[i] >= 0)
            u[i] = airy_ai(s[i]);
        else {
            double t = (s[i] + 2) / 2;
            u[i] = (1 - t) * std::sqrt(-s[i] / 2) + t * airy_ai(s[i]);
        }
    }
    u.front() = left_bc(s.front());
    u.back() = airy_ai(s.back());

    auto f = [&](int i, const std::vector<double>& v) {
        return s[i] * v[i] + 2 * v[i] * v[i] * v[i];
    };
    auto residual = [&](const std::vector<double>& v, std::vector<double>& r) {
        double mx = 0;
        const double c = h * h / 12;
        for (int i = 1; i + 1 < n; ++i) {
            r[i] = v[i + 1] - 2 * v[i] + v[i - 1] -
                   c * (f(i + 1, v) + 10 * f(i, v) + f(i - 1, v));
            mx = std::max(mx, std::fabs(r[i]));
        }
        return mx;
    };

    std::vector<double> r(n, 0.0), lower(n), diag(n), upper(n), rhs(n), du(n);
    double rn = residual(u, r);
    for (int it = 0; it < 80 && rn > 1e-14; ++it) {
        const double c = h * h / 12;
        for (int i = 1; i + 1 < n; ++i) {
            auto fp = [&](int j) { return s[j] + 6 * u[j] * u[j]; };
            lower[i] = 1 - c * fp(i - 1);
            diag[i] = -2 - 10 * c * fp(i);
            upper[i] = 1 - c * fp(i + 1);
            rhs[i] = -r[i];
        }
        // Thomas elimination on rows 1..n-2 (boundaries fixed).
        for (int i = 2; i + 1 < n; ++i) {
            double w = lower[i] / diag[i - 1];
            diag[i] -= w * upper[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        du[n - 2] = rhs[n - 2] / diag[n - 2];
        for (int i = n - 3; i >= 1; --i)
            du[i] = (rhs[i] - upper[i] * du[i + 1]) / diag[i];

        double lambda = 1;
        for (int half = 0; half < 30; ++half) {
            std::vector<double> trial = u;
            for (int i = 1; i + 1 < n; ++i) trial[i] += lambda * du[i];
            double rt = residual(trial, r);
            if (rt < rn || rt < 1e-14) {
                u = trial;
                rn = rt;
                break;
            }
            lambda *= 0.5;
            if (half == 29)
                throw solver_error(
                    "solve_hastings_mcleod: Newton damping failed, residual " +
                    std::to_string(rn));
        }
    }
    if (rn > 1e-12)
        throw solver_error("solve_hastings_mcleod: Newton stalled, residual " +
                           std::to_string(rn));
    return u;
}

// Cumulative integral from the right on a uniform grid, 4th order
// (cubic through the four points nearest each interval).
std::vector<double> cumulative_from_right(const std::vector<double>& f,
                                          double h, double tail) {
    const int n = static_cast<int>(f.size());
    std::vector<double> F(n);
    F[n - 1] = tail;
    auto seg = [&](int i) {  // integral over [x_i, x_{i+1}]
        if (i == 0)
            return h / 24 * (9 * f[0] + 19 * f[1] - 5 * f[2] + f[3]);
        if (i == n - 2)
            return h / 24 *
                   (9 * f[n - 1] + 19 * f[n - 2] - 5 * f[n - 3] + f[n - 4]);
        return h / 24 * (-f[i - 1] + 13 * f[i] + 13 * f[i + 1] - f[i + 2]);
    };
    for (int i = n - 2; i >= 0; --i) F[i] = F[i + 1] + seg(i);
    return F;
}

PainleveSolution assemble(double s_min, double s_max, int segments) {
    PainleveSolution sol;
    const double h = (s_max - s_min) / segments;
    sol.grid.resize(segments + 1);
    for (int i = 0; i <= segments; ++i) sol.grid[i] = s_min + i * h;
    sol.u = solve_grid(sol.grid, h);

    const int n = segments + 1;
    std::vector<double> u2(n), xu2(n);
    for (int i = 0; i < n; ++i) {
        u2[i] = sol.u[i] * sol.u[i];
        xu2[i] = sol.grid[i] * u2[i];
    }
    // Tails beyond s_max from u ~ Ai: int_s^inf Ai^2 = Ai'^2 - s Ai^2 and
    // int_s^inf x Ai^2 = -(x^2 Ai^2 - x Ai'^2 + Ai Ai')/3.
    double ai = airy_ai(s_max), aip = airy_ai_prime(s_max);
    double tailA = aip * aip - s_max * ai * ai;
    double tailB =
        -(s_max * s_max * ai * ai - s_max * aip * aip + ai * aip) / 3;
    std::vector<double> A = cumulative_from_right(u2, h, tailA);
    std::vector<double> B = cumulative_from_right(xu2, h, tailB);
    sol.q.resize(n);
    sol.logFTW.resize(n);
    for (int i = 0; i < n; ++i) {
        sol.q[i] = -A[i];
        sol.logFTW[i] = -(B[i] - sol.grid[i] * A[i]);
    }
    return sol;
}

// 4-point Lagrange interpolation on a uniform grid.
double interp(const std::vector<double>& grid, const std::vector<double>& val,
              double s) {
    const int n = static_cast<int>(grid.size());
    const double h = grid[1] - grid[0];
    int i = static_cast<int>((s - grid[0]) / h);
    i = std::clamp(i - 1, 0, n - 4);
    double x0 = grid[i], x1 = grid[i + 1], x2 = grid[i + 2], x3 = grid[i + 3];
    double l0 = (s - x1) * (s - x2) * (s - x3) /
                ((x0 - x1) * (x0 - x2) * (x0 - x3));
    double l1 = (s - x0) * (s - x2) * (s - x3) /
                ((x1 - x0) * (x1 - x2) * (x1 - x3));
    double l2 = (s - x0) * (s - x1) * (s - x3) /
                ((x2 - x0) * (x2 - x1) * (x2 - x3));
    double l3 = (s - x0) * (s - x1) * (s - x2) /
                ((x3 - x0) * (x3 - x1) * (x3 - x2));
    return l0 * val[i] + l1 * val[i + 1] + l2 * val[i + 2] + l3 * val[i + 3];
}

}  // namespace

PainleveSolution solve_hastings_mcleod(double s_min, double s_max,
                                       double tol) {
    if (!(s_min <= -12 && s_max >= 8))
        throw parameter_error(
            "solve_hastings_mcleod: need s_min <= -12 and s_max >= 8");
    if (tol < 1e-12)
        throw parameter_error("solve_hastings_mcleod: tol below 1e-12");
    int segments = static_cast<int>((s_max - s_min) / 0.004 + 0.5);
    PainleveSolution coarse = assemble(s_min, s_max, segments);
    for (int attempt = 0; attempt < 3; ++attempt) {
        PainleveSolution fine = assemble(s_min, s_max, segments * 2);
        double err = 0;
        for (std::size_t i = 0; i < coarse.grid.size(); ++i)
            err = std::max(err, std::fabs(fine.logFTW[2 * i] -
                                          coarse.logFTW[i]));
        fine.tol = err;
        if (err < tol) return fine;
        coarse = std::move(fine);
        segments *= 2;
    }
    throw accuracy_error(
        "solve_hastings_mcleod: requested tolerance not reached");
}

double log_FTW_left_tail(double s) {
    double as = std::fabs(s);
    return -as * as * as / 12 - std::log(as) / 8 + std::log(2.0) / 24 +
           kZetaPrimeMinusOne;
}

double log_FTW_right_tail(double s) {
    // Magnitude from the stated tail; log F^TW is negative since F^TW < 1.
    return -std::exp(-(4.0 / 3.0) * s * std::sqrt(s)) /
           (16 * kPi * s * std::sqrt(s));
}

double log_FTW(double s, const PainleveSolution& sol, TWSource& source) {
    if (s > 6.0) {
        source = TWSource::right_tail;
        return log_FTW_right_tail(s);
    }
    if (s < -10.0) {
        source = TWSource::left_tail;
        return log_FTW_left_tail(s);
    }
    if (s < sol.s_min() || s > sol.s_max())
        throw parameter_error("log_FTW: s outside tabulated range");
    source = TWSource::grid;
    return interp(sol.grid, sol.logFTW, s);
}

double log_FTW(double s, const PainleveSolution& sol) {
    TWSource src;
    return log_FTW(s, sol, src);
}

double eval_u(double s, const PainleveSolution& sol) {
    if (s < sol.s_min() || s > sol.s_max())
        throw parameter_error("eval_u: s outside tabulated range");
    return interp(sol.grid, sol.u, s);
}

double eval_q(double s, const PainleveSolution& sol) {
    if (s < sol.s_min() || s > sol.s_max())
        throw parameter_error("eval_q: s outside tabulated range");
    return interp(sol.grid, sol.q, s);
}

const PainleveSolution& shared_painleve() {
    static const PainleveSolution sol = solve_hastings_mcleod();
    return sol;
}

}  // namespace aztec
