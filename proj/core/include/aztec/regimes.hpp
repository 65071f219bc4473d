#pragma once

#include <map>
#include <string>
#include <vector>

#include "aztec/painleve.hpp"
#include "aztec/saddles.hpp"

namespace aztec {

// One asymptotic prediction of log F with its coefficient breakdown.
struct RegimeEstimate {
    std::string regime;  // almost-maximal | large | critical | small
    double logF_pred = 0;
    // keys "N2", "N", "logN", "1"; logF_pred is their contraction with
    // (N^2, N, log N, 1).
    std::map<std::string, double> coefficients;
    double error_scale = 0;  // paper's error order with unit constant
};

struct IdentityReport {
    double g_residual = 0;
    double h_residual = 0;
    double f_residual = 0;
};

struct DispatchResult {
    std::vector<RegimeEstimate> candidates;
    bool ambiguous = false;
};

// Per-ratio coefficient functions of the liquid regime (explicit closed
// forms in z0). G does not depend on epsilon; H and F do.
double G_fn(double kappa, double mu, double a);
double H_fn(double kappa, double mu, double a, int eps);
double F_fn(double kappa, double mu, double a, int eps);

// Richardson-extrapolated central difference of G_fn in kappa.
double dG_dkappa(double kappa, double mu, double a);

void C_coefficients(double kappa_plus, double mu, double a, int eps,
                    double& C2, double& C1, double& C0);

// Small-kappa_+ expansions of C2, C1, C0 (cross-check targets).
void C_coefficients_small_kappa(double kappa_plus, double mu, double a,
                                int eps, double& C2, double& C1, double& C0);

// Theorems 1 and 2 predict log F_N^{m,k+1}(a;eps); Theorems 3 and 4
// predict log F_N^{m,k}(a;eps).
RegimeEstimate theorem1_logF(int N, int m, int k, int eps, double a);
RegimeEstimate theorem2_logF(int N, int m, int k, int eps, double a);
RegimeEstimate theorem3_logF(int N, int m, int k, int eps, double a,
                             const PainleveSolution& painleve);
RegimeEstimate theorem4_logF(int N, int m, int k, double a);

// Residuals of the three integral identities over (0, kappa2).
IdentityReport identity_checks(double mu, double a, int eps);

DispatchResult regime_dispatch(int N, int m, int k, int eps, double a);

}  // namespace aztec
