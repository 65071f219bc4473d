#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "aztec/exact_count.hpp"
#include "aztec/painleve.hpp"
#include "aztec/regimes.hpp"
#include "aztec/regions.hpp"
#include "aztec/sampler.hpp"
#include "aztec/saddles.hpp"

using json = nlohmann::ordered_json;
using namespace aztec;

namespace {

// ---------------------------------------------------------------- helpers

std::string fmt15(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

// Accepts "p/q", integers, and plain decimals ("0.7845" -> 7845/10000).
mpq_class parse_rational(const std::string& s) {
    try {
        if (s.find('/') != std::string::npos) {
            mpq_class q(s);
            q.canonicalize();
            return q;
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return mpq_class(s);
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::string den = "1" + std::string(s.size() - dot - 1, '0');
        mpq_class q(digits + "/" + den);
        q.canonicalize();
        return q;
    } catch (const std::exception&) {
        throw parameter_error("cannot parse rational: " + s);
    }
}

// Nearest integer with ties to even (the {x} of the numerical experiments).
int nearest_int(double x) { return static_cast<int>(std::nearbyint(x)); }

int env_threads() {
    const char* v = std::getenv("AZTEC_THREADS");
    if (!v) return 1;
    int n = std::atoi(v);
    return n >= 1 ? n : 1;
}

// Runs fn(i) for i in [0, n) on the AZTEC_THREADS-sized pool; fn must only
// touch its own output slot.
template <typename Fn>
void parallel_for(int n, Fn fn) {
    int nt = std::min(env_threads(), n > 0 ? n : 1);
    if (nt <= 1) {
        for (int i = 0; i < n; i++) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; t++)
        pool.emplace_back([&, t] {
            for (int i = t; i < n; i += nt) fn(i);
        });
    for (auto& th : pool) th.join();
}

const PainleveSolution& painleve() {
    static PainleveSolution sol = solve_hastings_mcleod();
    return sol;
}

json estimate_to_json(const RegimeEstimate& e) {
    json j;
    j["regime"] = e.regime;
    j["logF_pred"] = e.logF_pred;
    json c;
    for (const char* key : {"N2", "N", "logN", "1"})
        c[key] = e.coefficients.count(key) ? e.coefficients.at(key) : 0.0;
    j["coefficients"] = c;
    j["error_scale"] = e.error_scale;
    return j;
}

RegionSpec make_spec(int N, int m, int k, int eps, const std::string& var) {
    RegionSpec spec;
    spec.N = N;
    spec.m = m;
    spec.k = k;
    spec.epsilon = eps;
    if (var == "full") spec.variant = Variant::full;
    else if (var == "reduced") spec.variant = Variant::reduced;
    else if (var == "reduced_tilde") spec.variant = Variant::reduced_tilde;
    else throw parameter_error("unknown variant: " + var);
    spec.validate();
    return spec;
}

// ------------------------------------------------------------ subcommands

int cmd_exact(int N, int m, int k, int eps, const std::string& a,
              const std::string& variant, const std::string& method) {
    mpq_class aq = parse_rational(a);
    auto spec = make_spec(N, m, k, eps, variant);
    auto t0 = std::chrono::steady_clock::now();
    ExactCount c = count_region(spec, aq, method);
    auto t1 = std::chrono::steady_clock::now();
    json out;
    out["value_num"] = c.value.get_num().get_str();
    out["value_den"] = c.value.get_den().get_str();
    out["log10"] = c.logValue / std::log(10.0);
    out["method"] = c.method;
    out["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_saddle(double mu, double kappa, double a, int eps) {
    SaddleData sd = saddle_data(mu, a);
    json out;
    out["kappa2"] = sd.kappa2;
    out["x0"] = sd.x0;
    out["phi0_at_x0"] = sd.phi0_at_x0;
    out["phi0pp_at_x0"] = sd.phi0pp_at_x0;
    out["xstar"] = sd.xstar;
    out["cstar"] = sd.cstar;
    out["sstar"] = sd.sstar;
    if (kappa > 0 && kappa < sd.kappa2) {
        PhaseParams p;
        p.mu = mu;
        p.kappa = kappa;
        p.a = a;
        p.epsilon = eps;
        LiquidSaddleData z = solve_z0(p);
        json liq;
        liq["z0_re"] = z.z0.real();
        liq["z0_im"] = z.z0.imag();
        liq["gamma"] = z.gamma;
        liq["abs_z0"] = z.abs_z0;
        liq["abs_z0_plus_a"] = z.abs_z0_plus_a;
        liq["abs_z0_minus_inva"] = z.abs_z0_minus_inva;
        liq["residuals"] = {z.residuals[0], z.residuals[1]};
        out["liquid"] = liq;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_asym(const std::string& regime, int N, int m, int k, int eps,
             double a) {
    json out;
    out["N"] = N;
    out["m"] = m;
    out["k"] = k;
    out["eps"] = eps;
    out["a"] = a;
    // Estimates refer to F_N^{m,k} of the requested region; Theorems 1
    // and 2 are stated for F^{m,k+1}, hence the k-1 shift.
    if (regime == "auto") {
        DispatchResult d = regime_dispatch(N, m, k, eps, a);
        json cands = json::array();
        for (const auto& e : d.candidates) cands.push_back(estimate_to_json(e));
        out["candidates"] = cands;
        out["ambiguous"] = d.ambiguous;
    } else if (regime == "1") {
        out["estimate"] = estimate_to_json(theorem1_logF(N, m, k - 1, eps, a));
    } else if (regime == "2") {
        out["estimate"] = estimate_to_json(theorem2_logF(N, m, k - 1, eps, a));
    } else if (regime == "3") {
        out["estimate"] =
            estimate_to_json(theorem3_logF(N, m, k, eps, a, painleve()));
    } else if (regime == "4") {
        out["estimate"] = estimate_to_json(theorem4_logF(N, m, k, a));
    } else {
        throw parameter_error("unknown regime: " + regime);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_identities(double mu, double a, int eps) {
    IdentityReport rep = identity_checks(mu, a, eps);
    json out;
    out["mu"] = mu;
    out["a"] = a;
    out["eps"] = eps;
    out["g_residual"] = rep.g_residual;
    out["h_residual"] = rep.h_residual;
    out["f_residual"] = rep.f_residual;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_tw(bool have_s, double s, bool table, double s0, double s1,
           double step) {
    if (table) {
        if (step <= 0) throw parameter_error("tw --table: step must be > 0");
        std::cout << "s,logFTW,FTW,source\n";
        for (double x = s0; x <= s1 + 1e-12; x += step) {
            TWSource src;
            double l = log_FTW(x, painleve(), src);
            const char* name = src == TWSource::grid ? "grid"
                               : src == TWSource::left_tail ? "left-tail"
                                                            : "right-tail";
            std::cout << fmt15(x) << "," << fmt15(l) << ","
                      << fmt15(std::exp(l)) << "," << name << "\n";
        }
        return 0;
    }
    if (!have_s) throw parameter_error("tw: need --s or --table");
    TWSource src;
    double l = log_FTW(s, painleve(), src);
    json out;
    out["s"] = s;
    out["logFTW"] = l;
    out["FTW"] = std::exp(l);
    out["source"] = src == TWSource::grid ? "grid"
                    : src == TWSource::left_tail ? "left-tail"
                                                 : "right-tail";
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_figure3(const std::string& which, int nmin, int nmax, int step,
                const std::string& a_str) {
    mpq_class aq = parse_rational(a_str);
    double a = aq.get_d();
    if (nmin < 4 || nmax < nmin) throw parameter_error("figure3: bad N range");
    std::vector<int> Ns;
    for (int N = nmin; N <= nmax; N += step) Ns.push_back(N);
    int n = static_cast<int>(Ns.size());

    if (which == "left" || which == "middle") {
        int eps = which == "left" ? 1 : 0;
        std::vector<std::array<double, 4>> rows(n);
        parallel_for(n, [&](int i) {
            int N = Ns[i];
            int m = nearest_int(0.7 * N);
            double ex = count_F(N, m, 4, eps, aq).logValue;
            double pred = theorem1_logF(N, m, 3, eps, a).logF_pred;
            rows[i] = {ex, pred, ex - pred, N * (ex - pred)};
        });
        std::cout << "N,exact_logF,predicted_logF,residual,N_residual\n";
        for (int i = 0; i < n; i++)
            std::cout << Ns[i] << "," << fmt15(rows[i][0]) << ","
                      << fmt15(rows[i][1]) << "," << fmt15(rows[i][2]) << ","
                      << fmt15(rows[i][3]) << "\n";
        return 0;
    }
    if (which != "right") throw parameter_error("figure3: --which left|middle|right");
    std::vector<double> res(n);
    parallel_for(n, [&](int i) {
        int N = Ns[i];
        int m = nearest_int(0.7 * N);
        int k = nearest_int(0.25 * N);
        double ex = count_F(N, m, k, 1, aq).logValue;
        res[i] = ex - theorem2_logF(N, m, k - 1, 1, a).logF_pred;
    });
    std::cout << "N,residual\n";
    for (int i = 0; i < n; i++)
        std::cout << Ns[i] << "," << fmt15(res[i]) << "\n";
    return 0;
}

int cmd_sweep(int N, int m_opt, int eps, const std::string& a_str) {
    mpq_class aq = parse_rational(a_str);
    double a = aq.get_d();
    if (N < 1) throw parameter_error("sweep: N must be >= 1");
    struct Row {
        int m, k;
        double exact = 0, pred = 0;
        bool have_exact = false, have_pred = false;
        std::string regime, error;
    };
    std::vector<Row> rows;
    for (int m = (m_opt > 0 ? m_opt : 1); m <= (m_opt > 0 ? m_opt : N); m++)
        for (int k = 1; k <= m + 1; k++) rows.push_back({m, k});
    int n = static_cast<int>(rows.size());
    parallel_for(n, [&](int i) {
        Row& r = rows[i];
        try {
            r.exact = count_F(N, r.m, r.k, eps, aq).logValue;
            r.have_exact = true;
        } catch (const std::exception& e) {
            r.error = e.what();
            return;
        }
        try {
            DispatchResult d = regime_dispatch(N, r.m, r.k, eps, a);
            r.regime = d.candidates.front().regime;
            if (d.ambiguous) r.regime += "+";
            r.pred = d.candidates.front().logF_pred;
            r.have_pred = true;
        } catch (const std::exception& e) {
            r.error = e.what();
        }
    });
    std::cout << "N,m,k,eps,exact_logF,regime,predicted_logF,residual,error\n";
    for (const Row& r : rows) {
        std::cout << N << "," << r.m << "," << r.k << "," << eps << ",";
        std::cout << (r.have_exact ? fmt15(r.exact) : "") << "," << r.regime
                  << "," << (r.have_pred ? fmt15(r.pred) : "") << ","
                  << (r.have_pred ? fmt15(r.exact - r.pred) : "") << ","
                  << r.error << "\n";
    }
    return 0;
}

int cmd_sample(int N, double a, std::uint64_t seed, const std::string& svg) {
    Tiling t = sample_tiling(N, a, seed);
    if (!svg.empty()) render_svg(t, svg);
    json out;
    out["N"] = N;
    out["a"] = a;
    out["seed"] = seed;
    out["dominoes"] = t.dominoes.size();
    out["vertical_count"] = vertical_count(t);
    if (!svg.empty()) out["svg"] = svg;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_mc(int N, int m, int k, int eps, double a, long samples,
           std::uint64_t seed) {
    FrozenEstimate est =
        estimate_frozen_probability(N, m, k, eps, a, samples, seed);
    json out;
    out["estimate"] = est.estimate;
    out["stderr"] = est.stderr_;
    out["successes"] = est.successes;
    out["samples"] = est.samples;
    std::cout << out.dump(2) << "\n";
    return 0;
}

// Expands `--config file.json` ({"command": ..., "options": {...}}) into an
// equivalent argv so flags and config files share one code path.
std::vector<std::string> load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parameter_error("cannot open config: " + path);
    json cfg = json::parse(in, nullptr, true);
    std::vector<std::string> args;
    args.push_back(cfg.at("command").get<std::string>());
    if (cfg.count("options"))
        for (auto& [key, val] : cfg.at("options").items()) {
            args.push_back("--" + key);
            if (val.is_string())
                args.push_back(val.get<std::string>());
            else if (val.is_boolean()) {
                if (!val.get<bool>()) args.pop_back();
            } else
                args.push_back(val.dump());
        }
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        if (args.size() == 2 && args[0] == "--config")
            args = load_config(args[1]);

        CLI::App app{"L-shaped Aztec diamond tiling counts and asymptotics"};
        app.require_subcommand(1);

        int N = 8, m = 0, k = 0, eps = 1, m_opt = 0;
        std::string a_str = "1569/2000", variant = "reduced",
                    method = "determinant", regime = "auto", which = "left",
                    svg;
        double mu = 0.7, kappa = 0, a = 0.7845, s = 0, s0 = -8, s1 = 4,
               step_s = 0.5;
        int nmin = 12, nmax = 40, step = 1;
        long samples = 1000;
        std::uint64_t seed = 1;

        auto* c_exact = app.add_subcommand("exact", "exact weighted count");
        c_exact->add_option("--N", N)->required();
        c_exact->add_option("--m", m);
        c_exact->add_option("--k", k);
        c_exact->add_option("--eps", eps);
        c_exact->add_option("--a", a_str);
        c_exact->add_option("--variant", variant);
        c_exact->add_option("--method", method);

        auto* c_saddle = app.add_subcommand("saddle", "saddle-point data");
        c_saddle->add_option("--mu", mu)->required();
        c_saddle->add_option("--kappa", kappa);
        c_saddle->add_option("--a", a);
        c_saddle->add_option("--eps", eps);

        auto* c_asym = app.add_subcommand("asym", "asymptotic prediction");
        c_asym->add_option("--regime", regime);
        c_asym->add_option("--N", N)->required();
        c_asym->add_option("--m", m)->required();
        c_asym->add_option("--k", k)->required();
        c_asym->add_option("--eps", eps);
        c_asym->add_option("--a", a);

        auto* c_id = app.add_subcommand("identities", "integral identities");
        c_id->add_option("--mu", mu)->required();
        c_id->add_option("--a", a);
        c_id->add_option("--eps", eps);

        auto* c_tw = app.add_subcommand("tw", "Tracy-Widom values");
        auto* s_opt = c_tw->add_option("--s", s);
        auto* tbl = c_tw->add_flag("--table", "CSV over [s0, s1]");
        c_tw->add_option("--s0", s0);
        c_tw->add_option("--s1", s1);
        c_tw->add_option("--step", step_s);

        auto* c_f3 = app.add_subcommand("figure3", "residual experiment CSV");
        c_f3->add_option("--which", which);
        c_f3->add_option("--nmin", nmin);
        c_f3->add_option("--nmax", nmax);
        c_f3->add_option("--step", step);
        c_f3->add_option("--a", a_str);

        auto* c_sweep = app.add_subcommand("sweep", "exact-vs-regime grid");
        c_sweep->add_option("--N", N)->required();
        c_sweep->add_option("--m", m_opt);
        c_sweep->add_option("--eps", eps);
        c_sweep->add_option("--a", a_str);

        auto* c_sample = app.add_subcommand("sample", "random tiling");
        c_sample->add_option("--N", N)->required();
        c_sample->add_option("--a", a);
        c_sample->add_option("--seed", seed);
        c_sample->add_option("--svg", svg);

        auto* c_mc = app.add_subcommand("mc", "Monte-Carlo frozen corner");
        c_mc->add_option("--N", N)->required();
        c_mc->add_option("--m", m)->required();
        c_mc->add_option("--k", k)->required();
        c_mc->add_option("--eps", eps);
        c_mc->add_option("--a", a);
        c_mc->add_option("--samples", samples);
        c_mc->add_option("--seed", seed);

        std::vector<const char*> cargs;
        cargs.push_back("aztec");
        for (const auto& x : args) cargs.push_back(x.c_str());
        try {
            app.parse(static_cast<int>(cargs.size()), cargs.data());
        } catch (const CLI::ParseError& e) {
            int code = app.exit(e);
            return code == 0 ? 0 : 2;
        }

        if (c_exact->parsed())
            return cmd_exact(N, m, k, eps, a_str, variant, method);
        if (c_saddle->parsed()) return cmd_saddle(mu, kappa, a, eps);
        if (c_asym->parsed()) return cmd_asym(regime, N, m, k, eps, a);
        if (c_id->parsed()) return cmd_identities(mu, a, eps);
        if (c_tw->parsed())
            return cmd_tw(s_opt->count() > 0, s, tbl->count() > 0, s0, s1,
                          step_s);
        if (c_f3->parsed()) return cmd_figure3(which, nmin, nmax, step, a_str);
        if (c_sweep->parsed()) return cmd_sweep(N, m_opt, eps, a_str);
        if (c_sample->parsed()) return cmd_sample(N, a, seed, svg);
        if (c_mc->parsed()) return cmd_mc(N, m, k, eps, a, samples, seed);
        return 2;
    } catch (const parameter_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const untileable_error& e) {
        std::cerr << "untileable: " << e.what() << "\n";
        return 3;
    } catch (const regime_error& e) {
        std::cerr << "regime error: " << e.what() << "\n";
        return 3;
    } catch (const accuracy_error& e) {
        std::cerr << "accuracy error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
