// Acceptance battery: one PASS/FAIL line per criterion, exit code = number
// of failed criteria.  Tolerances are pinned in code next to each check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "aztec/exact_count.hpp"
#include "aztec/painleve.hpp"
#include "aztec/regimes.hpp"
#include "aztec/regions.hpp"
#include "aztec/sampler.hpp"
#include "aztec/saddles.hpp"

using namespace aztec;

namespace {

const double kA = 0.7845;
const mpq_class kAQ(1569, 2000);

int g_failures = 0;

void report(int num, const char* name, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s — %s (%s)\n", num, pass ? "PASS" : "FAIL",
                name, detail.c_str());
    std::fflush(stdout);
    if (!pass) g_failures++;
}

int nearest_int(double x) { return static_cast<int>(std::nearbyint(x)); }

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

RegionSpec make_spec(int N, int m, int k, int eps, Variant v) {
    RegionSpec s;
    s.N = N;
    s.m = m;
    s.k = k;
    s.epsilon = eps;
    s.variant = v;
    return s;
}

// ------------------------------------------------------------ criterion 1

void criterion1() {
    int checks = 0;
    bool ok = true;
    for (mpq_class a : {mpq_class(1), mpq_class(1, 2), mpq_class(2, 3)})
        for (int N = 1; N <= 10 && ok; N++) {
            auto full = count_region(make_spec(N, 0, 0, 1, Variant::full), a);
            ok = ok && full.value == closed_form_full(N, a);
            checks++;
            for (int eps : {0, 1})
                for (int m = 1; m <= N && ok; m++) {
                    ok = ok && count_F(N, m, 1, eps, a).value ==
                                   closed_form_k1(N, m, eps, a);
                    checks++;
                }
        }
    report(1, "closed-form exactness (full and k=1 counts)", ok,
           std::to_string(checks) + " exact equalities");
}

// ------------------------------------------------------------ criterion 2

void criterion2() {
    mpq_class a(2, 3);
    int checked = 0;
    bool ok = true;
    auto compare = [&](const RegionSpec& s) {
        auto g = build_graph(build_region(s), a);
        if (g.num_cells() > 60) return;
        ok = ok && count_enumerate(g).value == count_determinant(g).value;
        checked++;
    };
    for (int N = 1; N <= 12 && ok; N++) {
        compare(make_spec(N, 0, 0, 1, Variant::full));
        for (int eps : {0, 1})
            for (int m = 1; m <= N && ok; m++)
                for (int k = 1; k <= m + 1 && ok; k++)
                    compare(make_spec(N, m, k, eps,
                                      eps ? Variant::reduced
                                          : Variant::reduced_tilde));
    }
    report(2, "enumerate vs determinant on all regions with <= 60 cells", ok,
           std::to_string(checked) + " regions");
}

// ------------------------------------------------------------ criterion 3

void criterion3() {
    bool bound_ok = true, trend_ok = true;
    double worst = 0;
    char detail[256];
    std::string medians;
    for (int eps : {0, 1}) {
        std::vector<double> nres;
        for (int N = 12; N <= 40; N++) {
            int m = nearest_int(0.7 * N);
            double r = count_F(N, m, 4, eps, kAQ).logValue -
                       theorem1_logF(N, m, 3, eps, kA).logF_pred;
            bound_ok = bound_ok && std::fabs(r) <= 5.0 / N;
            worst = std::max(worst, N * std::fabs(r));
            nres.push_back(N * std::fabs(r));
        }
        std::vector<double> first(nres.begin(), nres.begin() + 5);
        std::vector<double> last(nres.end() - 5, nres.end());
        trend_ok = trend_ok && median(last) <= median(first);
        std::snprintf(detail, sizeof detail,
                      "eps=%d medians first5=%.2f last5=%.2f; ", eps,
                      median(first), median(last));
        medians += detail;
    }
    std::snprintf(detail, sizeof detail,
                  "max N|r| = %.2f vs bound 5; %strend %s", worst,
                  medians.c_str(), trend_ok ? "ok" : "violated");
    report(3, "Figure-3 scale: |logF - theorem-1| <= 5/N and settling trend",
           bound_ok && trend_ok, detail);
}

// ------------------------------------------------------------ criterion 4

void criterion4() {
    bool ok = true;
    double prev = 1e9, last = 0;
    for (int N : {16, 24, 32, 40, 48}) {
        int m = nearest_int(0.7 * N);
        int k = nearest_int(0.25 * N);
        double r = std::fabs(count_F(N, m, k, 1, kAQ).logValue -
                             theorem2_logF(N, m, k - 1, 1, kA).logF_pred);
        ok = ok && r < prev;
        prev = r;
        last = r;
    }
    ok = ok && last < 0.1;
    char detail[128];
    std::snprintf(detail, sizeof detail, "decreasing, |r| at N=48 = %.4f",
                  last);
    report(4, "theorem-2 residual decreasing and < 0.1 at N=48", ok, detail);
}

// ------------------------------------------------------------ criterion 5

void criterion5() {
    bool ok = true;
    double gmax = 0, hmax = 0, fmax = 0;
    for (int eps : {0, 1})
        for (auto [a, mu] : {std::pair{0.7845, 0.7}, std::pair{0.75, 0.808}}) {
            IdentityReport rep = identity_checks(mu, a, eps);
            gmax = std::max(gmax, std::fabs(rep.g_residual));
            hmax = std::max(hmax, std::fabs(rep.h_residual));
            fmax = std::max(fmax, std::fabs(rep.f_residual));
        }
    ok = gmax < 1e-6 && hmax < 1e-6 && fmax < 1e-4;
    char detail[160];
    std::snprintf(detail, sizeof detail, "max |G|=%.1e |H|=%.1e |F|=%.1e",
                  gmax, hmax, fmax);
    report(5, "integral identities (G, H < 1e-6; F < 1e-4)", ok, detail);
}

// ------------------------------------------------------------ criterion 6

void criterion6() {
    bool ok = true;
    double worst = 0;
    for (int i = 0; i < 20; i++) {
        double mu = 0.12 + (0.88 - 0.12) * i / 19.0;
        double k2 = kappa2(mu, kA);
        for (int j = 1; j <= 20; j++) {
            PhaseParams p;
            p.mu = mu;
            p.kappa = k2 * j / 21.0;
            p.a = kA;
            auto sol = solve_z0(p);
            worst = std::max({worst, std::fabs(sol.residuals[0]),
                              std::fabs(sol.residuals[1])});
        }
    }
    ok = worst < 1e-12;
    // Limit checks at offsets 1e-8: the real part reaches its limit while
    // Im z0 decays at the sqrt rate (halving kappa by 100 divides Im z0 by
    // ~10; the prefactor depends on (a, mu), so the rate is what is pinned).
    for (auto [a, mu] : {std::pair{0.7845, 0.7}, std::pair{0.75, 0.808}}) {
        SaddleData sd = saddle_data(mu, a);
        PhaseParams p;
        p.mu = mu;
        p.a = a;
        p.kappa = 1e-8;
        auto lo = solve_z0(p);
        p.kappa = 1e-10;
        auto lo2 = solve_z0(p);
        double ratio_lo = lo.z0.imag() / lo2.z0.imag();
        ok = ok && std::fabs(lo.z0.real() - sd.x0) < 1e-6 &&
             lo.z0.imag() < 1e-2 && std::fabs(ratio_lo - 10.0) < 0.1;
        p.kappa = sd.kappa2 - 1e-8;
        auto hi = solve_z0(p);
        p.kappa = sd.kappa2 - 1e-10;
        auto hi2 = solve_z0(p);
        double ratio_hi = hi.z0.imag() / hi2.z0.imag();
        ok = ok && std::fabs(hi.z0.real() - sd.xstar) < 1e-6 &&
             hi.z0.imag() < 1e-2 && std::fabs(ratio_hi - 10.0) < 0.1;
    }
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "max grid residual %.1e; endpoint limits checked", worst);
    report(6, "z0 solver residuals < 1e-12 on 20x20 grid, limit checks", ok,
           detail);
}

// ------------------------------------------------------------ criterion 7

void criterion7() {
    const PainleveSolution& sol = shared_painleve();
    bool ok = true;
    double left = std::fabs(log_FTW(-8.0, sol) - log_FTW_left_tail(-8.0));
    ok = ok && left < 3 * std::pow(8.0, -1.5);
    double grid_val = log_FTW(5.999999, sol);
    double tail_val = log_FTW_right_tail(6.0);
    ok = ok && std::fabs(grid_val - tail_val) < 0.2 * std::fabs(tail_val);
    double dmax = 0;
    const double h = 1e-4;
    for (double s = -8; s <= 4; s += 0.25) {
        double d = (log_FTW(s + h, sol) - log_FTW(s - h, sol)) / (2 * h);
        dmax = std::max(dmax, std::fabs(d + eval_q(s, sol)));
    }
    ok = ok && dmax < 1e-8;
    double tol10 = 2 * std::pow(10.0, -2.5);
    double du = std::fabs(eval_u(-10, sol) - std::sqrt(5.0));
    double dq = std::fabs(eval_q(-10, sol) - (-100.0 / 4 + 1 / (8 * -10.0)));
    ok = ok && du < tol10 && dq < tol10;
    char detail[200];
    std::snprintf(detail, sizeof detail,
                  "left-tail %.2e, right-tail rel %.2f, max|dlogF+q|=%.1e, "
                  "u/q@-10 %.1e/%.1e",
                  left, std::fabs(grid_val - tail_val) / std::fabs(tail_val),
                  dmax, du, dq);
    report(7, "Painleve/Tracy-Widom tails and derivative identity", ok,
           detail);
}

// ------------------------------------------------------------ criterion 8

void criterion8() {
    const int N = 48;
    const int m = nearest_int(0.7 * N);
    double mu = static_cast<double>(m) / N;
    double k2 = kappa2(mu, kA);
    double xs, cs, ss;
    edge_constants(mu, kA, xs, cs, ss);
    double logfull = N * (N + 1) / 2.0 * std::log(1 + kA * kA);
    const PainleveSolution& sol = shared_painleve();
    bool ok = true;
    double worst = 0;
    int kc = static_cast<int>(std::lround(N * k2));
    for (int k = kc - 4; k <= kc + 4; k++) {
        double logP = count_F(N, m, k, 1, kAQ).logValue - logfull;
        double s = std::pow(N, 2.0 / 3.0) * (static_cast<double>(k) / N - k2) *
                   ss;
        double diff = std::fabs(logP - log_FTW(s, sol));
        worst = std::max(worst, diff);
        ok = ok && diff <= 0.15;
    }
    char detail[96];
    std::snprintf(detail, sizeof detail, "max |logP - logFTW| = %.4f", worst);
    report(8, "theorem-3 bridging at N=48 within 0.15", ok, detail);
}

// ------------------------------------------------------------ criterion 9

std::string tiling_key(const Tiling& t) {
    std::vector<std::string> parts;
    for (const Domino& d : t.dominoes)
        parts.push_back(std::to_string(d.anchor.i) + "," +
                        std::to_string(d.anchor.j) +
                        (d.horizontal ? "h" : "v"));
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (const std::string& p : parts) key += p + ";";
    return key;
}

double chi_square_stat(int N, double a, const mpq_class& aq,
                       std::uint64_t seed, int& df) {
    auto graph = build_graph(build_region(make_spec(N, 0, 0, 1, Variant::full)),
                             aq);
    auto matchings = enumerate_tilings(graph);
    std::map<std::string, double> expected;
    double norm = 0;
    for (const auto& mt : matchings) {
        int v = 0;
        std::vector<std::string> parts;
        for (int ei : mt) {
            const Edge& e = graph.edges()[ei];
            Cell b = graph.blacks()[e.black], w = graph.whites()[e.white];
            bool hor = b.j == w.j;
            if (!hor) v++;
            Cell anchor{std::min(b.i, w.i), std::min(b.j, w.j)};
            parts.push_back(std::to_string(anchor.i) + "," +
                            std::to_string(anchor.j) + (hor ? "h" : "v"));
        }
        std::sort(parts.begin(), parts.end());
        std::string key;
        for (const std::string& p : parts) key += p + ";";
        double w = std::pow(a, v);
        expected[key] = w;
        norm += w;
    }
    df = static_cast<int>(expected.size()) - 1;
    const long samples = 100000;
    std::map<std::string, long> observed;
    for (long s = 0; s < samples; s++)
        observed[tiling_key(sample_tiling(N, a, CounterRng::mix(seed, s)))]++;
    double chi2 = 0;
    for (const auto& [key, w] : expected) {
        double exp_cnt = samples * w / norm;
        double obs = observed.count(key) ? observed[key] : 0;
        chi2 += (obs - exp_cnt) * (obs - exp_cnt) / exp_cnt;
    }
    return chi2;
}

void criterion9() {
    bool ok = true;
    char detail[256];
    // Chi-square exactness at N = 1, 2, 3; 1% critical values for the
    // resulting 1, 7, 63 degrees of freedom.
    int df = 0;
    double c1 = chi_square_stat(1, kA, kAQ, 201, df);
    ok = ok && df == 1 && c1 < 6.635;
    double c2 = chi_square_stat(2, kA, kAQ, 202, df);
    ok = ok && df == 7 && c2 < 18.475;
    double c3 = chi_square_stat(3, 1.0, mpq_class(1), 203, df);
    ok = ok && df == 63 && c3 < 92.010;

    // E[v(T)] at N=16 within 3 sigma.
    const int N = 16;
    const long n = 20000;
    double sum = 0, sumsq = 0;
    for (long s = 0; s < n; s++) {
        double v = vertical_count(sample_tiling(N, kA, CounterRng::mix(7, s)));
        sum += v;
        sumsq += v * v;
    }
    double mean = sum / n;
    double sd = std::sqrt((sumsq / n - mean * mean) / (n - 1));
    double target = N * (N + 1) * kA * kA / (1 + kA * kA);
    ok = ok && std::fabs(mean - target) <= 3 * sd;

    // Monte-Carlo frozen-corner probability vs exact at N=6.
    double mcdiff = 0;
    for (int eps : {0, 1}) {
        auto spec = make_spec(6, 4, 3, eps,
                              eps ? Variant::reduced : Variant::reduced_tilde);
        double exact = frozen_probability(spec, mpq_class(1)).get_d();
        auto est = estimate_frozen_probability(6, 4, 3, eps, 1.0, 20000, 31);
        mcdiff = std::max(mcdiff, std::fabs(est.estimate - exact));
        ok = ok && std::fabs(est.estimate - exact) <= 3 * est.stderr_;
    }
    std::snprintf(detail, sizeof detail,
                  "chi2 = %.1f/%.1f/%.1f (crit 6.6/18.5/92.0), "
                  "E[v] off by %.2f (3sd=%.2f), max MC gap %.4f",
                  c1, c2, c3, std::fabs(mean - target), 3 * sd, mcdiff);
    report(9, "sampler statistics (chi-square, E[v], MC vs exact)", ok,
           detail);
}

void run(int num, const char* name, void (*fn)()) {
    auto t0 = std::chrono::steady_clock::now();
    try {
        fn();
    } catch (const std::exception& e) {
        report(num, name, false, std::string("exception: ") + e.what());
    }
    auto t1 = std::chrono::steady_clock::now();
    std::printf("  [%.1f s]\n", std::chrono::duration<double>(t1 - t0).count());
    std::fflush(stdout);
}

}  // namespace

int main() {
    run(1, "closed forms", criterion1);
    run(2, "oracle equivalence", criterion2);
    run(3, "figure-3 reproduction", criterion3);
    run(4, "theorem-2 residual", criterion4);
    run(5, "integral identities", criterion5);
    run(6, "z0 solver", criterion6);
    run(7, "Painleve/Tracy-Widom", criterion7);
    run(8, "theorem-3 bridging", criterion8);
    run(9, "sampler statistics", criterion9);
    std::printf("%d of 9 criteria failed\n", g_failures);
    return g_failures;
}
