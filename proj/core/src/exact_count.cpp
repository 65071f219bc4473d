#include "aztec/exact_count.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <unordered_map>

#include "aztec/modular.hpp"

namespace aztec {

namespace {

double log_of_mpq(const mpq_class& v) {
    if (v == 0) return -std::numeric_limits<double>::infinity();
    signed long ne, de;
    double nd = mpz_get_d_2exp(&ne, v.get_num().get_mpz_t());
    double dd = mpz_get_d_2exp(&de, v.get_den().get_mpz_t());
    return std::log(std::fabs(nd / dd)) + (ne - de) * std::log(2.0);
}

// Cells of the graph in column-major order plus the allowed-edge adjacency.
struct CellAdjacency {
    std::vector<Cell> cells;                  // sorted
    std::vector<std::vector<int>> neighbors;  // by cell index, ascending
    int index_of(Cell c) const {
        auto it = std::lower_bound(cells.begin(), cells.end(), c);
        return it != cells.end() && *it == c
                   ? static_cast<int>(it - cells.begin())
                   : -1;
    }
};

CellAdjacency make_adjacency(const MatchingGraph& graph) {
    CellAdjacency adj;
    adj.cells = graph.blacks();
    adj.cells.insert(adj.cells.end(), graph.whites().begin(),
                     graph.whites().end());
    std::sort(adj.cells.begin(), adj.cells.end());
    adj.neighbors.resize(adj.cells.size());
    for (const Edge& e : graph.edges()) {
        int u = adj.index_of(graph.blacks()[e.black]);
        int v = adj.index_of(graph.whites()[e.white]);
        adj.neighbors[u].push_back(v);
        adj.neighbors[v].push_back(u);
    }
    for (auto& nb : adj.neighbors) std::sort(nb.begin(), nb.end());
    return adj;
}

// Polynomial in a with integer coefficients, indexed by vertical-domino count.
using Poly = std::vector<mpz_class>;

void add_scaled(Poly& dst, const Poly& src, int shift) {
    if (dst.size() < src.size() + shift) dst.resize(src.size() + shift);
    for (std::size_t t = 0; t < src.size(); ++t) dst[t + shift] += src[t];
}

struct Enumerator {
    const CellAdjacency& adj;
    std::unordered_map<std::uint64_t, Poly> memo;

    // `t` = first uncovered cell, `mask` = coverage of cells t..t+57.
    Poly run(int t, std::uint64_t mask) {
        const int n = static_cast<int>(adj.cells.size());
        while (t < n && (mask & 1)) {
            ++t;
            mask >>= 1;
        }
        if (t == n) return Poly{1};
        std::uint64_t key = (static_cast<std::uint64_t>(t) << 58) | mask;
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Poly total;
        for (int v : adj.neighbors[t]) {
            if (v < t) continue;  // lower-index cells are already covered
            int off = v - t;
            if (mask & (1ull << off)) continue;
            bool vertical = adj.cells[v].i == adj.cells[t].i;
            Poly sub = run(t + 1, (mask | (1ull << off)) >> 1);
            add_scaled(total, sub, vertical ? 1 : 0);
        }
        memo.emplace(key, total);
        return total;
    }
};

}  // namespace

ExactCount count_enumerate(const MatchingGraph& graph) {
    if (graph.num_cells() > 60)
        throw capacity_error("count_enumerate: region exceeds 60 cells");
    ExactCount out;
    out.method = "enumerate";
    if (!graph.tileable_flag() || !graph.balanced()) {
        out.value = 0;
        out.logValue = log_of_mpq(out.value);
        return out;
    }
    CellAdjacency adj = make_adjacency(graph);
    Enumerator en{adj, {}};
    Poly poly = en.run(0, 0);
    mpq_class a = graph.weight_a(), ap = 1, sum = 0;
    for (const mpz_class& c : poly) {
        sum += c * ap;
        ap *= a;
    }
    out.value = sum;
    out.value.canonicalize();
    out.logValue = log_of_mpq(out.value);
    return out;
}

ExactCount count_determinant(const MatchingGraph& graph, Signing signing) {
    ExactCount out;
    out.method = "determinant";
    if (!graph.tileable_flag() || !graph.balanced()) {
        out.value = 0;
        out.logValue = log_of_mpq(out.value);
        return out;
    }
    const int n = static_cast<int>(graph.blacks().size());
    mpq_class a = graph.weight_a();
    a.canonicalize();
    long long p = a.get_num().get_si();
    long long q = a.get_den().get_si();

    // Integer Kasteleyn matrix: entries are +-q (horizontal) or +-p
    // (vertical), i.e. the weight matrix scaled by q. Vertical edges carry
    // sign (-1)^column (or horizontal (-1)^row for the alternate signing);
    // every square face then has sign product -1, and the merged hexagon
    // left by the deleted tilde edge has product +1, as required.
    std::vector<modular::Entry> entries;
    entries.reserve(graph.edges().size());
    for (const Edge& e : graph.edges()) {
        const Cell& b = graph.blacks()[e.black];
        const Cell& w = graph.whites()[e.white];
        bool vertical = b.i == w.i;
        long long val;
        if (signing == Signing::columns)
            val = vertical ? ((b.i % 2 + 2) % 2 ? -p : p) : q;
        else
            val = vertical ? p : ((b.j % 2 + 2) % 2 ? -q : q);
        entries.push_back({e.black, e.white, val});
    }

    // Hadamard bound on |det| in bits, with slack.
    std::vector<double> rownorm2(n, 0.0);
    for (const modular::Entry& e : entries)
        rownorm2[e.row] += static_cast<double>(e.value) * e.value;
    double bits = 0;
    for (int r = 0; r < n; ++r) {
        if (rownorm2[r] == 0) {  // isolated vertex: matrix singular
            out.value = 0;
            out.logValue = log_of_mpq(out.value);
            return out;
        }
        bits += 0.5 * std::log2(rownorm2[r]);
    }
    std::size_t nprimes = static_cast<std::size_t>(bits / 61.0) + 2;

    std::vector<std::uint64_t> primes = modular::gen_primes(nprimes);
    mpz_class X = 0, M = 1;
    for (std::uint64_t pr : primes) {
        std::uint64_t r = modular::band_det_mod(n, entries, pr);
        // Garner step: X <- X + M * ((r - X) / M mod pr).
        std::uint64_t xm = mpz_fdiv_ui(X.get_mpz_t(), pr);
        std::uint64_t mm = mpz_fdiv_ui(M.get_mpz_t(), pr);
        std::uint64_t d = r >= xm ? r - xm : r + pr - xm;
        d = modular::mulmod(d, modular::invmod(mm, pr), pr);
        X += M * mpz_class(static_cast<unsigned long>(d));
        M *= mpz_class(static_cast<unsigned long>(pr));
    }
    if (X * 2 > M) X -= M;  // symmetric representative
    mpz_class det = abs(X);

    mpz_class qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(n));
    out.value = mpq_class(det, qn);
    out.value.canonicalize();
    out.logValue = log_of_mpq(out.value);
    return out;
}

ExactCount count_region(const RegionSpec& spec, const mpq_class& a,
                        const std::string& method) {
    MatchingGraph g = build_graph(build_region(spec), a);
    if (method == "enumerate") return count_enumerate(g);
    if (method == "determinant") return count_determinant(g);
    throw parameter_error("count_region: unknown method '" + method + "'");
}

ExactCount count_F(int N, int m, int k, int eps, const mpq_class& a,
                   const std::string& method) {
    RegionSpec spec;
    spec.N = N;
    spec.m = m;
    spec.k = k;
    spec.epsilon = eps;
    spec.variant = eps == 1 ? Variant::reduced : Variant::reduced_tilde;
    return count_region(spec, a, method);
}

mpq_class ratio(const RegionSpec& specHigh, const RegionSpec& specLow,
                const mpq_class& a) {
    if (specHigh.N != specLow.N || specHigh.m != specLow.m ||
        specHigh.variant != specLow.variant ||
        specHigh.k != specLow.k + 1)
        throw parameter_error("ratio: specs must differ only in k, by one");
    ExactCount hi = count_region(specHigh, a, "determinant");
    ExactCount lo = count_region(specLow, a, "determinant");
    if (lo.value == 0)
        throw untileable_error("ratio: denominator region is untileable");
    return hi.value / lo.value;
}

mpq_class frozen_probability(const RegionSpec& spec, const mpq_class& a) {
    if (spec.variant == Variant::full)
        throw parameter_error("frozen_probability: needs a reduced variant");
    if (!spec.tileable())
        throw untileable_error("frozen_probability: untileable spec");
    ExactCount num = count_region(spec, a, "determinant");
    return num.value / closed_form_full(spec.N, a);
}

mpq_class closed_form_full(int N, const mpq_class& a) {
    mpq_class base = 1 + a * a, out = 1;
    long e = static_cast<long>(N) * (N + 1) / 2;
    for (long t = 0; t < e; ++t) out *= base;
    return out;
}

mpq_class closed_form_k1(int N, int m, int eps, const mpq_class& a) {
    mpq_class base = 1 + a * a, out = 1;
    long e = static_cast<long>(N) * (N + 1) / 2 -
             static_cast<long>(m) * (N + eps - m);
    for (long t = 0; t < std::labs(e); ++t) out *= base;
    if (e < 0) out = 1 / out;
    return out;
}

std::vector<std::vector<int>> enumerate_tilings(const MatchingGraph& graph) {
    if (graph.num_cells() > 24)
        throw capacity_error("enumerate_tilings: region exceeds 24 cells");
    CellAdjacency adj = make_adjacency(graph);
    const int n = static_cast<int>(adj.cells.size());
    // Edge index lookup by (black cell index, white cell index).
    std::map<std::pair<int, int>, int> edge_of;
    for (std::size_t t = 0; t < graph.edges().size(); ++t) {
        const Edge& e = graph.edges()[t];
        int u = adj.index_of(graph.blacks()[e.black]);
        int v = adj.index_of(graph.whites()[e.white]);
        edge_of[{std::min(u, v), std::max(u, v)}] = static_cast<int>(t);
    }
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::vector<bool> covered(n, false);
    auto rec = [&](auto&& self, int t) -> void {
        while (t < n && covered[t]) ++t;
        if (t == n) {
            out.push_back(current);
            return;
        }
        covered[t] = true;
        for (int v : adj.neighbors[t]) {
            if (covered[v]) continue;
            covered[v] = true;
            current.push_back(edge_of.at({std::min(t, v), std::max(t, v)}));
            self(self, t + 1);
            current.pop_back();
            covered[v] = false;
        }
        covered[t] = false;
    };
    rec(rec, 0);
    return out;
}

}  // namespace aztec
