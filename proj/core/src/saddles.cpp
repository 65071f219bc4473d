#include "aztec/saddles.hpp"

#include <algorithm>
#include <cmath>

namespace aztec {

namespace {

double quartic_eval(const std::array<double, 5>& c, double g) {
    double v = c[0];
    for (int t = 1; t < 5; ++t) v = v * g + c[t];
    return v;
}

// Kahan's numerically stable Heron formula; sides need not be sorted.
double triangle_area(double s1, double s2, double s3) {
    double a = s1, b = s2, c = s3;
    if (a < b) std::swap(a, b);
    if (b < c) std::swap(b, c);
    if (a < b) std::swap(a, b);
    double t = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
    if (t <= 0) return 0;
    return 0.25 * std::sqrt(t);
}

}  // namespace

void PhaseParams::validate() const {
    if (!(mu > 0 && mu < 1)) throw parameter_error("PhaseParams: mu not in (0,1)");
    if (!(a > 0 && a <= 1)) throw parameter_error("PhaseParams: a not in (0,1]");
    if (!(kappa >= 0)) throw parameter_error("PhaseParams: kappa negative");
    if (epsilon != 0 && epsilon != 1)
        throw parameter_error("PhaseParams: epsilon must be 0 or 1");
}

double kappa2(double mu, double a) {
    if (!(mu > 0 && mu < 1) || !(a > 0 && a <= 1))
        throw parameter_error("kappa2: mu in (0,1) and a in (0,1] required");
    return (a * a * (2 * mu - 1) + 2 * a * std::sqrt(mu * (1 - mu))) /
           (1 + a * a);
}

double phi0(double z, double mu, double a) {
    return (1 - mu) * std::log(1 - a * z) + mu * std::log(z / (z + a));
}

double phi0_prime(double z, double mu, double a) {
    return -a * (1 - mu) / (1 - a * z) + mu * (1 / z - 1 / (z + a));
}

void x0_phi0(double mu, double a, double& x0, double& phi0v, double& phi0pp) {
    if (!(mu > 0 && mu < 1))
        throw parameter_error("x0_phi0: mu must lie in (0,1)");
    x0 = (-a - std::sqrt(a * a + 4 * mu * (1 - mu))) / (2 * (1 - mu));
    phi0v = phi0(x0, mu, a);
    phi0pp = -a * a * (1 - mu) / ((1 - a * x0) * (1 - a * x0)) +
             mu * (-1 / (x0 * x0) + 1 / ((x0 + a) * (x0 + a)));
}

std::array<double, 5> quartic_coeffs(double mu, double kappa, double a) {
    return {a * (kappa + 1 - mu),
            a * a * kappa + a * a - kappa + 2 * mu - 2,
            -3 * a,
            a * a * (kappa - 1) + 2 * mu - kappa,
            a * (mu - kappa)};
}

LiquidSaddleData solve_z0(const PhaseParams& params) {
    params.validate();
    const double mu = params.mu, kappa = params.kappa, a = params.a;
    const double k2 = kappa2(mu, a);
    if (!(kappa > 0 && kappa < k2))
        throw regime_error("solve_z0: kappa outside (0, kappa2)");

    auto c = quartic_coeffs(mu, kappa, a);
    double lo = 0.0, hi = 1.0 / a;
    double flo = quartic_eval(c, lo), fhi = quartic_eval(c, hi);
    if (flo == 0 || fhi == 0 || (flo > 0) == (fhi > 0))
        throw regime_error("solve_z0: no sign change on (0, 1/a)");
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        double fm = quartic_eval(c, mid);
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    double gamma = 0.5 * (lo + hi);

    LiquidSaddleData out;
    out.gamma = gamma;
    const double s = kappa + 1 - mu;
    out.abs_z0_plus_a = (1 + a * a) * mu / ((a + gamma) * s);
    out.abs_z0_minus_inva = (1 + a * a) * (1 - mu) / (a * (1 - a * gamma) * s);
    out.abs_z0 = (mu - kappa) / ((1 - mu + kappa) * gamma);

    // Place z0 from the two circles centered at 0 and -a, with the
    // imaginary part from the stable triangle-area route.
    double re = (out.abs_z0_plus_a * out.abs_z0_plus_a -
                 out.abs_z0 * out.abs_z0 - a * a) /
                (2 * a);
    double im = 2 * triangle_area(out.abs_z0, out.abs_z0_plus_a, a) / a;
    if (!(im > 0))
        throw solver_error("solve_z0: reconstructed z0 has Im z0 <= 0");
    out.z0 = {re, im};

    double d1 = std::hypot(re, im);
    double d2 = std::hypot(re + a, im);
    double d3 = std::hypot(re - 1 / a, im);
    out.residuals[0] = (1 - mu) / d3 + (mu - kappa) / d1 - mu / d2;
    out.residuals[1] = kappa + 1 - mu - a * mu / d2 - (1 - mu) / (a * d3);
    return out;
}

void edge_constants(double mu, double a, double& xstar, double& cstar,
                    double& sstar) {
    const double mu_c = a * a / (1 + a * a);
    const double delta = 1e-3;
    if (!(mu > mu_c + delta && mu < 1))
        throw regime_error(
            "edge_constants: mu must exceed a^2/(1+a^2) by at least 1e-3 "
            "(degenerate strip excluded)");
    const double k2 = kappa2(mu, a);
    // Equivalent to (a-(1+a^2)sqrt(mu(1-mu)))/((1+a^2)mu-1) but regular
    // across mu = 1/(1+a^2).
    xstar = (k2 + a * a * (2 * mu - k2 - 1)) / (2 * a * (1 + k2 - mu));
    cstar = mu - k2 + std::pow(a, 3) * (1 - mu) / std::pow(1 / xstar - a, 3) -
            mu / std::pow(1 + a / xstar, 3);
    if (!(cstar > 0)) throw solver_error("edge_constants: cstar <= 0");
    sstar = std::pow(cstar, -1.0 / 3.0);
}

SaddleData saddle_data(double mu, double a) {
    SaddleData d;
    d.kappa2 = kappa2(mu, a);
    x0_phi0(mu, a, d.x0, d.phi0_at_x0, d.phi0pp_at_x0);
    edge_constants(mu, a, d.xstar, d.cstar, d.sstar);
    return d;
}

}  // namespace aztec
