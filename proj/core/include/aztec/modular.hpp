#pragma once

#include <cstdint>
#include <vector>

namespace aztec::modular {

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t p);
std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t x, std::uint64_t p);
bool is_prime(std::uint64_t n);

// First `count` primes below 2^62, descending; deterministic.
std::vector<std::uint64_t> gen_primes(std::size_t count);

// Sparse integer matrix entry; `value` may be negative.
struct Entry {
    int row = 0;
    int col = 0;
    long long value = 0;
};

// Determinant mod p of an n x n matrix given by sparse entries, using
// banded LU with partial pivoting (band width inferred from the entries).
// Returns the residue in [0, p).
std::uint64_t band_det_mod(int n, const std::vector<Entry>& entries,
                           std::uint64_t p);

}  // namespace aztec::modular
