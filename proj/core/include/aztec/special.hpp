#pragma once

namespace aztec {

// zeta'(-1) = 1/12 - log A (A = Glaisher-Kinkelin constant).
inline constexpr double kZetaPrimeMinusOne = -0.16542114370045092;

// Airy function Ai(x) and its derivative, accurate to ~1e-14 absolute on
// [-14, +inf).
double airy_ai(double x);
double airy_ai_prime(double x);

// log Barnes G(k+1) = sum_{j=1}^{k-1} log j!  (exact integer recursion
// evaluated in double precision).
double log_barnes_g(int k_plus_1);

// Asymptotic expansion of log G(k+1) for large k (used as a cross-check).
double log_barnes_g_asymptotic(int k_plus_1);

}  // namespace aztec
