#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "aztec/regions.hpp"

namespace aztec {

struct ExactCount {
    mpq_class value;       // exact weighted tiling count
    double logValue = 0;   // natural log of value (-inf represented as lowest)
    std::string method;    // "enumerate" or "determinant"
};

// Two independent Kasteleyn signings; determinant magnitudes must agree.
enum class Signing { columns, rows };

// Exhaustive frontier recursion with memoization. Guard: <= 60 cells.
ExactCount count_enumerate(const MatchingGraph& graph);

// Signed bipartite adjacency determinant, exact via multi-modular
// reduction + CRT against a Hadamard bound.
ExactCount count_determinant(const MatchingGraph& graph,
                             Signing signing = Signing::columns);

// Convenience: build region+graph and count with the scalable method
// (enumeration for tiny regions when requested).
ExactCount count_region(const RegionSpec& spec, const mpq_class& a,
                        const std::string& method = "determinant");

// F_N^{m,k}(a;eps): eps=1 counts the reduced region, eps=0 the tilde one.
ExactCount count_F(int N, int m, int k, int eps, const mpq_class& a,
                   const std::string& method = "determinant");

// F_N^{m,k+1}/F_N^{m,k}; throws untileable_error on zero denominator.
mpq_class ratio(const RegionSpec& specHigh, const RegionSpec& specLow,
                const mpq_class& a);

// P_N^{m,k}(a;eps) = F_N^{m,k}(a;eps) / F_N(a).
mpq_class frozen_probability(const RegionSpec& spec, const mpq_class& a);

// Closed form F_N(a) = (1+a^2)^{N(N+1)/2}.
mpq_class closed_form_full(int N, const mpq_class& a);
// Closed form F_N^{m,1}(a;eps) = (1+a^2)^{N(N+1)/2 - m(N+eps-m)}.
mpq_class closed_form_k1(int N, int m, int eps, const mpq_class& a);

// All perfect matchings as lists of edge indices (guard: <= 24 cells).
std::vector<std::vector<int>> enumerate_tilings(const MatchingGraph& graph);

}  // namespace aztec
