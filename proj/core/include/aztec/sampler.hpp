#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aztec/regions.hpp"

namespace aztec {

// One domino, addressed by its lower-left cell.  A horizontal domino
// covers (anchor) and (anchor.i+1, anchor.j); a vertical one covers
// (anchor) and (anchor.i, anchor.j+1).
struct Domino {
    Cell anchor;
    bool horizontal = true;
    DominoType type = DominoType::north;
};

struct Tiling {
    int N = 1;
    std::uint64_t seed = 0;
    std::vector<Domino> dominoes;
};

// Stateless counter-based generator: value i of stream `key` is
// splitmix64 evaluated at state key + i*gamma.  Streams with distinct
// keys are independent for practical purposes and trivially parallel.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}
    static std::uint64_t mix(std::uint64_t key, std::uint64_t counter);
    std::uint64_t next() { return mix(key_, counter_++); }
    // Uniform in [0,1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// Exact sample of a tiling of A_N under P(T) = a^{v(T)}/(1+a^2)^{N(N+1)/2}
// by biased domino shuffling; deterministic given the seed.
Tiling sample_tiling(int N, double a, std::uint64_t seed);

// All intermediate stages: element n-1 is a tiling of A_n (n = 1..N),
// driven by the same random stream as sample_tiling with this seed.
std::vector<Tiling> sample_trajectory(int N, double a, std::uint64_t seed);

// Number of vertical dominoes (E[v] = N(N+1)a^2/(1+a^2) under P).
int vertical_count(const Tiling& t);

// Dominoes partition the cells of A_N and carry consistent types.
bool is_valid_tiling(const Tiling& t);

struct FrozenEstimate {
    double estimate = 0;
    double stderr_ = 0;  // binomial; for zero successes a one-sided bound
    long successes = 0;
    long samples = 0;
};

// Monte-Carlo estimate of P_N^{m,k}(a;eps): the corner cut away by the
// L-shape is covered by north dominoes only (and, for eps=0, the slit
// segment is not covered by a south domino).
FrozenEstimate estimate_frozen_probability(int N, int m, int k, int eps,
                                           double a, long samples,
                                           std::uint64_t seed);

// SVG with the four-direction colors north/south/east/west =
// red/yellow/green/blue.
std::string render_svg(const Tiling& t);
void render_svg(const Tiling& t, const std::string& path);

}  // namespace aztec
