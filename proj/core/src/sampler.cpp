#include "aztec/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <unordered_set>

#include "aztec/errors.hpp"

namespace aztec {

namespace {

bool in_diamond(int n, int i, int j) {
    int ai = std::max(std::abs(i), std::abs(i + 1));
    int aj = std::max(std::abs(j), std::abs(j + 1));
    return ai + aj <= n + 1;
}

// Dense occupancy board over [-(N+2), N+2)^2.
class Board {
  public:
    explicit Board(int N) : off_(N + 2), w_(2 * N + 5), g_(w_ * w_, 0) {}
    int& at(int i, int j) { return g_[(i + off_) + w_ * (j + off_)]; }
    void clear() { std::fill(g_.begin(), g_.end(), 0); }

  private:
    int off_, w_;
    std::vector<int> g_;
};

struct Piece {
    int i, j;
    bool hor;
};

DominoType classify(const Piece& p, int n) {
    bool even = ((p.i + p.j + n) & 1) == 0;
    if (p.hor) return even ? DominoType::north : DominoType::south;
    return even ? DominoType::east : DominoType::west;
}

Tiling snapshot(const std::vector<Piece>& cur, int n, std::uint64_t seed) {
    Tiling t;
    t.N = n;
    t.seed = seed;
    t.dominoes.reserve(cur.size());
    for (const Piece& p : cur)
        t.dominoes.push_back({Cell{p.i, p.j}, p.hor, classify(p, n)});
    return t;
}

}  // namespace

std::uint64_t CounterRng::mix(std::uint64_t key, std::uint64_t counter) {
    std::uint64_t z = key + (counter + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<Tiling> sample_trajectory(int N, double a, std::uint64_t seed) {
    if (N < 1) throw parameter_error("sample_tiling: N must be >= 1");
    if (!(a > 0) || a > 1)
        throw parameter_error("sample_tiling: a must lie in (0, 1]");
    CounterRng rng(seed);
    const double p_horizontal = 1.0 / (1.0 + a * a);

    std::vector<Tiling> out;
    std::vector<Piece> cur, next;
    Board cover(N);
    Board owner(N);  // 1 + index into cur, for collision lookups

    for (int n = 1; n <= N; n++) {
        // Destruction: a north directly below a south (or an east directly
        // left of a west) would swap places when sliding; both vanish.
        owner.clear();
        for (std::size_t t = 0; t < cur.size(); t++)
            owner.at(cur[t].i, cur[t].j) = static_cast<int>(t) + 1;
        std::vector<char> dead(cur.size(), 0);
        for (std::size_t t = 0; t < cur.size(); t++) {
            const Piece& p = cur[t];
            if (((p.i + p.j + n - 1) & 1) != 0) continue;  // north or east
            int other = p.hor ? owner.at(p.i, p.j + 1) : owner.at(p.i + 1, p.j);
            if (other > 0 && cur[other - 1].hor == p.hor) {
                dead[t] = 1;
                dead[other - 1] = 1;
            }
        }

        // Sliding: every surviving domino moves one step along its type.
        next.clear();
        cover.clear();
        for (std::size_t t = 0; t < cur.size(); t++) {
            if (dead[t]) continue;
            Piece p = cur[t];
            switch (classify(p, n - 1)) {
                case DominoType::north: p.j++; break;
                case DominoType::south: p.j--; break;
                case DominoType::east: p.i++; break;
                case DominoType::west: p.i--; break;
            }
            next.push_back(p);
            cover.at(p.i, p.j) = 1;
            cover.at(p.i + (p.hor ? 1 : 0), p.j + (p.hor ? 0 : 1)) = 1;
        }

        // Creation: the uncovered part of A_n splits into 2x2 blocks; the
        // bottom-left-most free cell always anchors one.  Two horizontals
        // carry weight 1, two verticals weight a^2.
        for (int j = -(n + 1); j <= n; j++)
            for (int i = -(n + 1); i <= n; i++) {
                if (!in_diamond(n, i, j) || cover.at(i, j)) continue;
                bool horizontal = rng.uniform() < p_horizontal;
                if (horizontal) {
                    next.push_back({i, j, true});
                    next.push_back({i, j + 1, true});
                } else {
                    next.push_back({i, j, false});
                    next.push_back({i + 1, j, false});
                }
                cover.at(i, j) = cover.at(i + 1, j) = 1;
                cover.at(i, j + 1) = cover.at(i + 1, j + 1) = 1;
            }

        cur.swap(next);
        out.push_back(snapshot(cur, n, seed));
    }
    return out;
}

Tiling sample_tiling(int N, double a, std::uint64_t seed) {
    return sample_trajectory(N, a, seed).back();
}

int vertical_count(const Tiling& t) {
    int v = 0;
    for (const Domino& d : t.dominoes) v += d.horizontal ? 0 : 1;
    return v;
}

bool is_valid_tiling(const Tiling& t) {
    std::unordered_set<std::int64_t> seen;
    auto key = [](int i, int j) {
        return (static_cast<std::int64_t>(i) << 32) ^ (j & 0xffffffffLL);
    };
    std::size_t cells = 0;
    for (const Domino& d : t.dominoes) {
        int i2 = d.anchor.i + (d.horizontal ? 1 : 0);
        int j2 = d.anchor.j + (d.horizontal ? 0 : 1);
        for (auto [i, j] : {std::pair{d.anchor.i, d.anchor.j}, {i2, j2}}) {
            if (!in_diamond(t.N, i, j)) return false;
            if (!seen.insert(key(i, j)).second) return false;
            cells++;
        }
        Piece p{d.anchor.i, d.anchor.j, d.horizontal};
        if (classify(p, t.N) != d.type) return false;
    }
    return cells == static_cast<std::size_t>(2 * t.N * (t.N + 1));
}

FrozenEstimate estimate_frozen_probability(int N, int m, int k, int eps,
                                           double a, long samples,
                                           std::uint64_t seed) {
    RegionSpec spec;
    spec.N = N;
    spec.m = m;
    spec.k = k;
    spec.epsilon = eps;
    spec.variant = eps ? Variant::reduced : Variant::reduced_tilde;
    spec.validate();
    if (!spec.tileable())
        throw untileable_error("estimate_frozen_probability: k must be >= 1");
    if (samples < 1)
        throw parameter_error("estimate_frozen_probability: samples >= 1");

    // Cells of the corner cut away by the L-shape.  The eps=0 region has
    // the cell set of A_N^{m+1,k+1} plus the forbidden slit segment.
    RegionSpec inner = spec;
    inner.variant = Variant::reduced;
    inner.epsilon = 1;
    if (eps == 0) {
        if (m == N) {
            inner.variant = Variant::full;  // the tilde region is all of A_N
        } else {
            inner.m = m + 1;
            inner.k = k + 1;
        }
    }
    CellGrid kept = build_region(inner);
    std::vector<Cell> removed;
    for (int j = -(N + 1); j <= N; j++)
        for (int i = -(N + 1); i <= N; i++)
            if (in_diamond(N, i, j) && !kept.contains(Cell{i, j}))
                removed.push_back(Cell{i, j});
    bool check_slit = eps == 0 && m < N;
    Cell slit_anchor{2 * m - N - k, k - 1};  // south domino across the slit

    Board owner(N);
    long hits = 0;
    for (long s = 0; s < samples; s++) {
        Tiling t = sample_tiling(N, a, CounterRng::mix(seed, s));
        owner.clear();
        for (std::size_t d = 0; d < t.dominoes.size(); d++) {
            const Domino& dom = t.dominoes[d];
            owner.at(dom.anchor.i, dom.anchor.j) = static_cast<int>(d) + 1;
            owner.at(dom.anchor.i + (dom.horizontal ? 1 : 0),
                     dom.anchor.j + (dom.horizontal ? 0 : 1)) =
                static_cast<int>(d) + 1;
        }
        bool ok = true;
        for (const Cell& c : removed) {
            const Domino& dom = t.dominoes[owner.at(c.i, c.j) - 1];
            // North, and not straddling the L-shape boundary.
            if (dom.type != DominoType::north ||
                kept.contains(dom.anchor) ||
                kept.contains(Cell{dom.anchor.i + 1, dom.anchor.j})) {
                ok = false;
                break;
            }
        }
        if (ok && check_slit) {
            int d = owner.at(slit_anchor.i, slit_anchor.j);
            const Domino& dom = t.dominoes[d - 1];
            if (dom.horizontal && dom.anchor == slit_anchor) ok = false;
        }
        hits += ok ? 1 : 0;
    }

    FrozenEstimate est;
    est.samples = samples;
    est.successes = hits;
    est.estimate = static_cast<double>(hits) / samples;
    if (hits == 0 || hits == samples) {
        // One-sided 95% bound ("rule of three") for a degenerate tally.
        est.stderr_ = 3.0 / samples;
    } else {
        est.stderr_ =
            std::sqrt(est.estimate * (1 - est.estimate) / samples);
    }
    return est;
}

std::string render_svg(const Tiling& t) {
    const int s = 10;  // pixels per unit square
    const int span = 2 * (t.N + 1) * s;
    std::string svg;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" "
                  "height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                  span, span, span, span);
    svg += buf;
    svg += "<!-- legend: north=red south=yellow east=green west=blue -->\n";
    for (const Domino& d : t.dominoes) {
        const char* fill = "red";
        if (d.type == DominoType::south) fill = "yellow";
        else if (d.type == DominoType::east) fill = "green";
        else if (d.type == DominoType::west) fill = "blue";
        int w = d.horizontal ? 2 * s : s;
        int h = d.horizontal ? s : 2 * s;
        int x = (d.anchor.i + t.N + 1) * s;
        // SVG y grows downward; anchor is the lower-left cell.
        int y = span - (d.anchor.j + t.N + 1) * s - h;
        std::snprintf(buf, sizeof buf,
                      "<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" "
                      "fill=\"%s\" stroke=\"black\" stroke-width=\"0.5\"/>\n",
                      x, y, w, h, fill);
        svg += buf;
    }
    svg += "</svg>\n";
    return svg;
}

void render_svg(const Tiling& t, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw accuracy_error("render_svg: cannot open " + path);
    out << render_svg(t);
    if (!out.flush()) throw accuracy_error("render_svg: write failed");
}

}  // namespace aztec
