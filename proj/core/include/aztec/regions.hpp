#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "aztec/errors.hpp"

namespace aztec {

// Cell = unit square [i,i+1]x[j,j+1], addressed by its lower-left corner.
struct Cell {
    int i = 0;
    int j = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class Variant { full, reduced, reduced_tilde };

enum class DominoType { north, south, east, west };

const char* to_string(Variant v);
const char* to_string(DominoType t);

// Parameters of A_N (full), A_N^{m,k} (reduced) or the tilde variant,
// which is A_N^{m+1,k+1} with one south-domino edge deleted (or A_N when m=N).
struct RegionSpec {
    int N = 1;
    int m = 0;
    int k = 0;
    int epsilon = 1;
    Variant variant = Variant::full;

    // Throws parameter_error naming the violated bound. Accepts k <= 0
    // (untileable geometry) but rejects out-of-range N, m and k > m+1.
    void validate() const;

    bool tileable() const { return variant == Variant::full || k >= 1; }
};

// Immutable cell set of a region, column-major order (i, then j).
class CellGrid {
  public:
    CellGrid(RegionSpec spec, std::vector<Cell> cells);

    const RegionSpec& spec() const { return spec_; }
    const std::vector<Cell>& cells() const { return cells_; }
    bool contains(Cell c) const { return index_.count(key(c)) != 0; }
    // Index of a cell in cells(), or -1.
    int index_of(Cell c) const;
    int order() const { return spec_.N; }

    std::string to_json() const;
    // Outline of the region (no tiling) as a standalone SVG document.
    std::string to_svg() const;

  private:
    static std::int64_t key(Cell c) {
        return (static_cast<std::int64_t>(c.i) << 32) ^ (c.j & 0xffffffffLL);
    }
    RegionSpec spec_;
    std::vector<Cell> cells_;
    std::unordered_map<std::int64_t, int> index_;
};

// A domino is an edge between two adjacent cells.
DominoType classify_domino(Cell a, Cell b, int N);

struct Edge {
    int black = 0;  // index into MatchingGraph::blacks()
    int white = 0;  // index into MatchingGraph::whites()
    DominoType type = DominoType::north;
};

// Bipartite weighted dimer graph of a region. Perfect matchings biject with
// domino tilings; the weight of a matching is a^(#vertical dominoes).
class MatchingGraph {
  public:
    MatchingGraph(const CellGrid& grid, mpq_class a);

    const std::vector<Cell>& blacks() const { return blacks_; }
    const std::vector<Cell>& whites() const { return whites_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const mpq_class& weight_a() const { return a_; }
    const RegionSpec& spec() const { return spec_; }
    int order() const { return spec_.N; }
    std::size_t num_cells() const { return blacks_.size() + whites_.size(); }
    bool balanced() const { return blacks_.size() == whites_.size(); }
    bool tileable_flag() const { return spec_.tileable(); }

  private:
    RegionSpec spec_;
    mpq_class a_;
    std::vector<Cell> blacks_, whites_;
    std::vector<Edge> edges_;
};

CellGrid build_region(const RegionSpec& spec);
MatchingGraph build_graph(const CellGrid& grid, const mpq_class& a);

}  // namespace aztec
