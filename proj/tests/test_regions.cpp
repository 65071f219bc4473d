#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "aztec/exact_count.hpp"
#include "aztec/regions.hpp"

using namespace aztec;

namespace {

RegionSpec make(int N, int m, int k, Variant v, int eps = 1) {
    RegionSpec s;
    s.N = N;
    s.m = m;
    s.k = k;
    s.epsilon = eps;
    s.variant = v;
    return s;
}

std::set<Cell> cell_set(const CellGrid& g) {
    return {g.cells().begin(), g.cells().end()};
}

}  // namespace

TEST_CASE("full diamond cell counts") {
    CHECK(build_region(make(1, 0, 0, Variant::full)).cells().size() == 4);
    CHECK(build_region(make(5, 0, 0, Variant::full)).cells().size() == 60);
    for (int N = 1; N <= 8; ++N)
        CHECK(build_region(make(N, 0, 0, Variant::full)).cells().size() ==
              static_cast<std::size_t>(2 * N * (N + 1)));
}

TEST_CASE("A_1 is the expected 2x2 block") {
    auto g = build_region(make(1, 0, 0, Variant::full));
    std::set<Cell> expect = {{-1, -1}, {-1, 0}, {0, -1}, {0, 0}};
    CHECK(cell_set(g) == expect);
}

TEST_CASE("reduced region is a subset and k=m+1 recovers the diamond") {
    for (int N = 2; N <= 7; ++N) {
        auto full = cell_set(build_region(make(N, 0, 0, Variant::full)));
        for (int m = 1; m <= N; ++m)
            for (int k = 1; k <= m + 1; ++k) {
                auto red = cell_set(build_region(make(N, m, k, Variant::reduced)));
                CHECK(std::includes(full.begin(), full.end(), red.begin(),
                                    red.end()));
                if (k == m + 1) CHECK(red == full);
                if (k >= 1) CHECK(red.size() % 2 == 0);
            }
    }
}

TEST_CASE("removed corner tiles with horizontal dominoes row by row") {
    // Each row of A_N minus A_N^{m,k} must have even length for an
    // all-north covering to exist.
    for (int N = 2; N <= 8; ++N)
        for (int m = 1; m <= N; ++m)
            for (int k = 1; k <= m; ++k) {
                auto full = build_region(make(N, 0, 0, Variant::full));
                auto red = build_region(make(N, m, k, Variant::reduced));
                std::map<int, std::vector<int>> rows;
                for (const Cell& c : full.cells())
                    if (!red.contains(c)) rows[c.j].push_back(c.i);
                for (auto& [j, xs] : rows) {
                    std::sort(xs.begin(), xs.end());
                    REQUIRE(xs.size() % 2 == 0);
                    // contiguity: corner rows are intervals
                    CHECK(xs.back() - xs.front() ==
                          static_cast<int>(xs.size()) - 1);
                }
            }
}

TEST_CASE("L-shape of Figure 2: A_7^{5,2}") {
    auto red = build_region(make(7, 5, 2, Variant::reduced));
    auto full = build_region(make(7, 0, 0, Variant::full));
    // Independent construction: y <= V(x) with V(x) = max(2m-1-N-x,
    // x-2m-1+N+2k) evaluated directly on every full-diamond cell.
    std::set<Cell> expect;
    for (const Cell& c : full.cells()) {
        auto V = [](int x) {
            return std::max(2 * 5 - 1 - 7 - x, x - 2 * 5 - 1 + 7 + 2 * 2);
        };
        if (c.j + 1 <= std::min(V(c.i), V(c.i + 1))) expect.insert(c);
    }
    CHECK(cell_set(red) == expect);
    CHECK(red.cells().size() < full.cells().size());
}

TEST_CASE("tilde region equals A_N^{m+1,k+1} with exactly one edge removed") {
    auto tilde = build_region(make(7, 5, 2, Variant::reduced_tilde, 0));
    auto plain = build_region(make(7, 6, 3, Variant::reduced));
    CHECK(cell_set(tilde) == cell_set(plain));
    auto gt = build_graph(tilde, mpq_class(1));
    auto gp = build_graph(plain, mpq_class(1));
    CHECK(gt.edges().size() + 1 == gp.edges().size());
    // The missing edge is the horizontal domino hanging below the inner
    // notch corner of the staircase cut: it crosses the vertical unit
    // segment at x = 2m+1-N-k = 2 between y = k-1 = 1 and y = k, joining
    // cells (1,1) and (2,1).
    auto has_edge = [](const MatchingGraph& g, Cell x, Cell y) {
        for (const Edge& e : g.edges()) {
            Cell b = g.blacks()[e.black], w = g.whites()[e.white];
            if ((b == x && w == y) || (b == y && w == x)) return true;
        }
        return false;
    };
    CHECK(has_edge(gp, Cell{1, 1}, Cell{2, 1}));
    CHECK(!has_edge(gt, Cell{1, 1}, Cell{2, 1}));
}

TEST_CASE("tilde with m=N is the full diamond") {
    auto tilde = build_region(make(5, 5, 3, Variant::reduced_tilde, 0));
    auto full = build_region(make(5, 0, 0, Variant::full));
    CHECK(cell_set(tilde) == cell_set(full));
    CHECK(build_graph(tilde, mpq_class(1)).edges().size() ==
          build_graph(full, mpq_class(1)).edges().size());
}

TEST_CASE("domino classification parity") {
    // Top row of A_N is at j = N-1; the horizontal domino there is north.
    for (int N = 1; N <= 5; ++N)
        CHECK(classify_domino({-1, N - 1}, {0, N - 1}, N) == DominoType::north);
    // Bottom row of A_N is at j = -N; that horizontal domino is south.
    for (int N = 1; N <= 5; ++N)
        CHECK(classify_domino({-1, -N}, {0, -N}, N) == DominoType::south);
    // j+k+N parity rules.
    CHECK(classify_domino({0, 0}, {1, 0}, 2) == DominoType::north);
    CHECK(classify_domino({0, 1}, {1, 1}, 2) == DominoType::south);
    CHECK(classify_domino({0, 1}, {0, 2}, 2) == DominoType::west);
    CHECK(classify_domino({0, 0}, {0, 1}, 2) == DominoType::east);
    CHECK_THROWS_AS(classify_domino({0, 0}, {2, 0}, 2), parameter_error);
}

TEST_CASE("reflection across the vertical axis swaps east and west") {
    int N = 4;
    auto g = build_region(make(N, 0, 0, Variant::full));
    for (const Cell& c : g.cells()) {
        Cell up{c.i, c.j + 1};
        if (!g.contains(up)) continue;
        Cell rc{-1 - c.i, c.j}, rup{-1 - c.i, c.j + 1};
        auto t = classify_domino(c, up, N);
        auto rt = classify_domino(rc, rup, N);
        bool swapped = (t == DominoType::east && rt == DominoType::west) ||
                       (t == DominoType::west && rt == DominoType::east);
        CHECK(swapped);
    }
}

TEST_CASE("graph structure of A_1") {
    auto g = build_graph(build_region(make(1, 0, 0, Variant::full)),
                         mpq_class(1));
    CHECK(g.num_cells() == 4);
    CHECK(g.edges().size() == 4);
    CHECK(g.balanced());
    auto tilings = enumerate_tilings(g);
    CHECK(tilings.size() == 2);
}

TEST_CASE("validation errors") {
    CHECK_THROWS_AS(build_region(make(0, 0, 0, Variant::full)),
                    parameter_error);
    CHECK_THROWS_AS(build_region(make(5, 6, 1, Variant::reduced)),
                    parameter_error);
    CHECK_THROWS_AS(build_region(make(5, 0, 1, Variant::reduced)),
                    parameter_error);
    CHECK_THROWS_AS(build_region(make(5, 3, 5, Variant::reduced)),
                    parameter_error);
    // k <= 0 constructs geometry but is flagged untileable.
    auto g = build_region(make(5, 3, 0, Variant::reduced));
    CHECK(!g.spec().tileable());
    CHECK_THROWS_AS(build_graph(g, mpq_class(2)), parameter_error);
}

TEST_CASE("json and svg export") {
    auto g = build_region(make(1, 0, 0, Variant::full));
    std::string j = g.to_json();
    CHECK(j.find("\"N\":1") != std::string::npos);
    CHECK(j.find("\"cells\":[[-1,-1],[-1,0],[0,-1],[0,0]]") !=
          std::string::npos);
    std::string svg = g.to_svg();
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(std::count(svg.begin(), svg.end(), '\n') >= 4);
}
