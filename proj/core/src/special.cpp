#include "aztec/special.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace aztec {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Asymptotic series for Ai and Ai' at large positive x.
void airy_asymptotic(double x, double& ai, double& aip) {
    double zeta = (2.0 / 3.0) * x * std::sqrt(x);
    double u = 1.0, su = 0.0, sv = 0.0, sign = 1.0, zp = 1.0;
    for (int n = 0; n < 40; ++n) {
        double tu = sign * u / zp;
        double tv = tu * (6.0 * n + 1.0) / (1.0 - 6.0 * n);
        if (std::fabs(tu) < 1e-19 * std::fabs(su) && n > 2) break;
        su += tu;
        sv += tv;
        u *= (6.0 * n + 1.0) * (6.0 * n + 5.0) / (72.0 * (n + 1.0));
        sign = -sign;
        zp *= zeta;
    }
    double pre = std::exp(-zeta) / (2.0 * std::sqrt(kPi));
    ai = pre * su / std::pow(x, 0.25);
    aip = -pre * sv * std::pow(x, 0.25);
}

}  // namespace

namespace {

void airy_pair(double x, double& y, double& yp) {
    if (x >= 9.0) {
        airy_asymptotic(x, y, yp);
        return;
    }
    if (x < -14.0)
        throw std::domain_error("airy_ai: x below supported range [-14, inf)");
    // Taylor-series marching of y'' = x y downward from x=9; downward is
    // the stable direction for the recessive solution Ai.
    double x0 = 9.0;
    airy_asymptotic(x0, y, yp);
    const double h = -0.125;
    while (x0 > x + 1e-12) {
        double step = (x0 + h < x) ? x - x0 : h;
        std::vector<double> c(34);
        c[0] = y;
        c[1] = yp;
        c[2] = 0.5 * x0 * c[0];
        for (int n = 1; n + 2 < static_cast<int>(c.size()); ++n)
            c[n + 2] = (x0 * c[n] + c[n - 1]) / ((n + 1.0) * (n + 2.0));
        double s = 0.0, sp = 0.0;
        for (int n = static_cast<int>(c.size()) - 1; n >= 0; --n) {
            s = s * step + c[n];
            if (n >= 1) sp = sp * step + n * c[n];
        }
        y = s;
        yp = sp;
        x0 += step;
    }
}

}  // namespace

double airy_ai(double x) {
    double y, yp;
    airy_pair(x, y, yp);
    return y;
}

double airy_ai_prime(double x) {
    double y, yp;
    airy_pair(x, y, yp);
    return yp;
}

double log_barnes_g(int k_plus_1) {
    if (k_plus_1 < 1)
        throw std::domain_error("log_barnes_g: argument must be >= 1");
    double s = 0.0;
    for (int j = 1; j <= k_plus_1 - 2; ++j) s += std::lgamma(j + 1.0);
    return s;
}

double log_barnes_g_asymptotic(int k_plus_1) {
    double k = k_plus_1 - 1.0;
    double lk = std::log(k + 0.5);
    return 0.5 * k * k * lk - 0.75 * k * k - 0.25 * k +
           0.5 * k * std::log(2.0 * kPi) - lk / 12.0 + 1.0 / 16.0 +
           kZetaPrimeMinusOne;
}

}  // namespace aztec
