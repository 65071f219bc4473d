#include "aztec/regions.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace aztec {

const char* to_string(Variant v) {
    switch (v) {
        case Variant::full: return "full";
        case Variant::reduced: return "reduced";
        case Variant::reduced_tilde: return "reduced-tilde";
    }
    return "?";
}

const char* to_string(DominoType t) {
    switch (t) {
        case DominoType::north: return "north";
        case DominoType::south: return "south";
        case DominoType::east: return "east";
        case DominoType::west: return "west";
    }
    return "?";
}

void RegionSpec::validate() const {
    if (N < 1) throw parameter_error("RegionSpec: N must be >= 1");
    if (epsilon != 0 && epsilon != 1)
        throw parameter_error("RegionSpec: epsilon must be 0 or 1");
    switch (variant) {
        case Variant::full:
            break;
        case Variant::reduced:
            if (m < 1 || m > N)
                throw parameter_error("RegionSpec: reduced variant needs 1 <= m <= N");
            if (k > m + 1)
                throw parameter_error("RegionSpec: reduced variant needs k <= m+1");
            break;
        case Variant::reduced_tilde:
            if (m < 0 || m > N)
                throw parameter_error("RegionSpec: tilde variant needs 0 <= m <= N");
            if (m < N && k > m + 1)
                throw parameter_error("RegionSpec: tilde variant needs k <= m+1");
            break;
    }
}

namespace {

bool cell_in_diamond(int i, int j, int N) {
    int xmax = std::max(std::abs(i), std::abs(i + 1));
    int ymax = std::max(std::abs(j), std::abs(j + 1));
    return xmax + ymax <= N + 1;
}

// y <= max{2m-1-N-x, x-2m-1+N+2k}, evaluated at integer x.
long corner_bound(long x, int N, int m, int k) {
    return std::max(2L * m - 1 - N - x, x - 2L * m - 1 + N + 2 * k);
}

bool cell_in_reduced(int i, int j, int N, int m, int k) {
    if (!cell_in_diamond(i, j, N)) return false;
    // The bound is a convex V with integer breakpoint, so the cell fits iff
    // its top edge is below the bound at both ends.
    long v = std::min(corner_bound(i, N, m, k), corner_bound(i + 1, N, m, k));
    return j + 1 <= v;
}

}  // namespace

CellGrid build_region(const RegionSpec& spec) {
    spec.validate();
    const int N = spec.N;
    std::vector<Cell> cells;
    cells.reserve(2 * N * (N + 1));

    // Effective (m,k) for the cell set: the tilde domain has the cells of
    // A_N^{m+1,k+1}; the deleted segment only affects the edge set.
    bool is_full = spec.variant == Variant::full ||
                   (spec.variant == Variant::reduced_tilde && spec.m == N) ||
                   (spec.variant == Variant::reduced && spec.k == spec.m + 1);
    int em = spec.m, ek = spec.k;
    if (spec.variant == Variant::reduced_tilde && !is_full) {
        em = spec.m + 1;
        ek = spec.k + 1;
    }

    for (int i = -N - 1; i <= N; ++i)
        for (int j = -N - 1; j <= N; ++j) {
            bool in = is_full ? cell_in_diamond(i, j, N)
                              : cell_in_reduced(i, j, N, em, ek);
            if (in) cells.push_back({i, j});
        }
    std::sort(cells.begin(), cells.end());
    return CellGrid(spec, std::move(cells));
}

CellGrid::CellGrid(RegionSpec spec, std::vector<Cell> cells)
    : spec_(spec), cells_(std::move(cells)) {
    index_.reserve(cells_.size());
    for (std::size_t t = 0; t < cells_.size(); ++t)
        index_.emplace(key(cells_[t]), static_cast<int>(t));
}

int CellGrid::index_of(Cell c) const {
    auto it = index_.find(key(c));
    return it == index_.end() ? -1 : it->second;
}

std::string CellGrid::to_json() const {
    std::ostringstream os;
    os << "{\"N\":" << spec_.N << ",\"m\":" << spec_.m << ",\"k\":" << spec_.k
       << ",\"epsilon\":" << spec_.epsilon << ",\"variant\":\""
       << to_string(spec_.variant) << "\",\"cells\":[";
    for (std::size_t t = 0; t < cells_.size(); ++t) {
        if (t) os << ',';
        os << '[' << cells_[t].i << ',' << cells_[t].j << ']';
    }
    os << "]}";
    return os.str();
}

std::string CellGrid::to_svg() const {
    const int N = spec_.N;
    const double s = 12.0;  // pixels per unit
    const double off = (N + 1) * s;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * off
       << "\" height=\"" << 2 * off << "\">\n";
    for (const Cell& c : cells_) {
        os << "<rect x=\"" << off + c.i * s << "\" y=\"" << off - (c.j + 1) * s
           << "\" width=\"" << s << "\" height=\"" << s
           << "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

DominoType classify_domino(Cell a, Cell b, int N) {
    if (a.i > b.i || a.j > b.j) std::swap(a, b);
    int di = b.i - a.i, dj = b.j - a.j;
    bool even = ((a.i + a.j + N) % 2 + 2) % 2 == 0;
    if (di == 1 && dj == 0) return even ? DominoType::north : DominoType::south;
    if (di == 0 && dj == 1) return even ? DominoType::east : DominoType::west;
    throw parameter_error("classify_domino: cells are not adjacent");
}

MatchingGraph::MatchingGraph(const CellGrid& grid, mpq_class a)
    : spec_(grid.spec()), a_(std::move(a)) {
    if (a_ <= 0 || a_ > 1)
        throw parameter_error("build_graph: weight a must lie in (0,1]");
    const int N = spec_.N;
    std::vector<int> black_index(grid.cells().size(), -1),
        white_index(grid.cells().size(), -1);
    for (std::size_t t = 0; t < grid.cells().size(); ++t) {
        const Cell& c = grid.cells()[t];
        if (((c.i + c.j + N) % 2 + 2) % 2 == 0) {
            black_index[t] = static_cast<int>(blacks_.size());
            blacks_.push_back(c);
        } else {
            white_index[t] = static_cast<int>(whites_.size());
            whites_.push_back(c);
        }
    }

    // Deleted south-domino edge of the tilde variant: the horizontal domino
    // hanging below the inner notch corner of the enclosing staircase
    // region, i.e. crossing the vertical unit segment at x = 2m+1-N-k
    // between y = k-1 and y = k.
    bool has_cut = spec_.variant == Variant::reduced_tilde && spec_.m < N;
    int cut_x = 2 * spec_.m + 1 - N - spec_.k;
    int cut_y = spec_.k - 1;

    for (std::size_t t = 0; t < grid.cells().size(); ++t) {
        if (black_index[t] < 0) continue;
        const Cell& c = grid.cells()[t];
        const Cell nbrs[4] = {{c.i + 1, c.j}, {c.i - 1, c.j},
                              {c.i, c.j + 1}, {c.i, c.j - 1}};
        for (const Cell& w : nbrs) {
            int wt = grid.index_of(w);
            if (wt < 0) continue;
            if (has_cut) {
                Cell lo = std::min(c, w);
                if (lo.j == w.j && lo.j == c.j && lo.i == cut_x - 1 &&
                    lo.j == cut_y)
                    continue;
            }
            edges_.push_back({black_index[t], white_index[wt],
                              classify_domino(c, w, N)});
        }
    }
}

MatchingGraph build_graph(const CellGrid& grid, const mpq_class& a) {
    return MatchingGraph(grid, a);
}

}  // namespace aztec
