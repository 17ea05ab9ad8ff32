#pragma once

// Slow, deliberately naive reference computations used only by the tests.
// Nothing here calls into the library.

#include <cstdint>
#include <set>
#include <vector>

namespace brute {

using u64 = std::uint64_t;

u64 ipow(u64 b, unsigned e);

std::set<u64> orbit(u64 x, u64 n, u64 mult);

// Minimal representatives in increasing order.
std::vector<u64> min_reps(u64 n, u64 mult);

// 'S', 'F' or 'R' (symmetric, FR, SR); qbase = 1 for the Euclidean rule.
char kind(u64 x, u64 n, u64 mult, u64 qbase);

std::vector<u64> digits(u64 x, u64 q, unsigned count);

struct Setting {
    u64 n;
    u64 mult;
    u64 qbase;
};

Setting rs_hermitian(u64 q);
Setting bch_euclidean(u64 q);
Setting bch_hermitian(u64 q);

// Exponents of I_{m_0} ∪ ... ∪ I_{m_t}.
std::set<u64> delta(const Setting& s, std::size_t t);

// Dual defining set: complement of -qbase * Delta.
std::set<u64> dual_delta(const Setting& s, const std::set<u64>& d);

// c = |Delta| - |Delta ∩ Delta_dual|, counted element by element.
u64 c_direct(const Setting& s, std::size_t t);

// Polynomial arithmetic over GF(p)[X] / (modulus), elements as coefficient vectors.
struct PolyField {
    u64 p;
    std::vector<u64> modulus;  // monic, low degree first
    std::vector<u64> mul(const std::vector<u64>& a, const std::vector<u64>& b) const;
    std::vector<u64> add(const std::vector<u64>& a, const std::vector<u64>& b) const;
};

// Packed index (base-p digits) <-> coefficient vector of length degree.
std::vector<u64> unpack(u64 index, u64 p, unsigned degree);
u64 pack(const std::vector<u64>& coeffs, u64 p);

// Minimum weight over all nonzero combinations of the rows, over GF(p) only.
u64 min_weight_prime_field(const std::vector<std::vector<u64>>& rows, u64 p);

}  // namespace brute
