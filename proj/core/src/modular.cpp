#include "aztec/modular.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace aztec::modular {

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(x) * y % p);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t x, std::uint64_t p) {
    return powmod(x, p - 2, p);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) d >>= 1, ++r;
    // Deterministic Miller-Rabin witness set for n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1 && composite; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> gen_primes(std::size_t count) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    std::uint64_t n = (1ull << 62) - 1;
    while (out.size() < count) {
        if (is_prime(n)) out.push_back(n);
        n -= 2;
    }
    return out;
}

std::uint64_t band_det_mod(int n, const std::vector<Entry>& entries,
                           std::uint64_t p) {
    if (n == 0) return 1 % p;
    int bl = 0, bu = 0;
    for (const Entry& e : entries) {
        bl = std::max(bl, e.row - e.col);
        bu = std::max(bu, e.col - e.row);
    }
    // Partial pivoting can smear fill into bl extra superdiagonals.
    const int w = bl + bl + bu + 1;  // storage columns per row
    const int diag = bl;             // offset of the diagonal inside a row
    std::vector<std::uint64_t> band(static_cast<std::size_t>(n) * w, 0);
    auto at = [&](int r, int c) -> std::uint64_t& {
        return band[static_cast<std::size_t>(r) * w + (c - r + diag)];
    };
    for (const Entry& e : entries) {
        long long v = e.value % static_cast<long long>(p);
        if (v < 0) v += static_cast<long long>(p);
        at(e.row, e.col) = static_cast<std::uint64_t>(v);
    }

    std::uint64_t det = 1;
    for (int k = 0; k < n; ++k) {
        int last = std::min(n - 1, k + bl);
        int piv = -1;
        for (int r = k; r <= last; ++r)
            if (at(r, k) != 0) { piv = r; break; }
        if (piv < 0) return 0;  // singular mod p
        int cend = std::min(n - 1, k + bl + bu);
        if (piv != k) {
            for (int c = k; c <= cend; ++c) std::swap(at(k, c), at(piv, c));
            det = p - det;
        }
        std::uint64_t pk = at(k, k);
        det = mulmod(det, pk, p);
        std::uint64_t inv = invmod(pk, p);
        for (int r = k + 1; r <= last; ++r) {
            std::uint64_t f = at(r, k);
            if (!f) continue;
            f = mulmod(f, inv, p);
            at(r, k) = 0;
            for (int c = k + 1; c <= cend; ++c) {
                std::uint64_t sub = mulmod(f, at(k, c), p);
                std::uint64_t& t = at(r, c);
                t = t >= sub ? t - sub : t + p - sub;
            }
        }
    }
    return det == p ? 0 : det;
}

}  // namespace aztec::modular
