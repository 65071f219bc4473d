#pragma once

#include <array>
#include <complex>

#include "aztec/errors.hpp"

namespace aztec {

struct PhaseParams {
    double mu = 0.5;    // m/N in (0,1)
    double kappa = 0;   // k/N
    double a = 1.0;     // vertical-domino weight, in (0,1]
    int epsilon = 1;
    void validate() const;
};

// Real-saddle data for the almost-maximal regime plus the edge constants.
struct SaddleData {
    double kappa2 = 0;
    double x0 = 0;          // < -a
    double phi0_at_x0 = 0;  // > 0
    double phi0pp_at_x0 = 0;
    double xstar = 0;       // in (0, 1/a)
    double cstar = 0;       // > 0
    double sstar = 0;       // cstar^{-1/3}
};

// Complex saddle of the liquid (large-corner) regime.
struct LiquidSaddleData {
    std::complex<double> z0;  // Im z0 > 0
    double gamma = 0;         // quartic root in (0, 1/a)
    double abs_z0 = 0;
    double abs_z0_plus_a = 0;
    double abs_z0_minus_inva = 0;
    std::array<double, 2> residuals{};  // plug-back residuals of the system
};

double kappa2(double mu, double a);

// x0, phi0(x0) and phi0''(x0) for phi0(z) = (1-mu)log(1-a z) + mu log(z/(z+a)).
void x0_phi0(double mu, double a, double& x0, double& phi0, double& phi0pp);
double phi0(double z, double mu, double a);
double phi0_prime(double z, double mu, double a);

// Coefficients (descending degree) of the quartic p(gamma); roots of p
// parametrize z0.
std::array<double, 5> quartic_coeffs(double mu, double kappa, double a);

LiquidSaddleData solve_z0(const PhaseParams& params);

void edge_constants(double mu, double a, double& xstar, double& cstar,
                    double& sstar);

SaddleData saddle_data(double mu, double a);

}  // namespace aztec
