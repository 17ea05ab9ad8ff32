#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace eaqecc {

bool is_prime(std::uint64_t v);

/// base^exp, throwing Errc::out_of_range on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

/// Largest s with s*s <= v.
std::uint64_t isqrt(std::uint64_t v);

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
};

/// Decomposes q = p^e with p prime, or nullopt if q is not a prime power.
std::optional<PrimePower> prime_power(std::uint64_t q);

/// Little-endian base-q digits of x: x = a_0 + a_1 q + ... Throws
/// Errc::out_of_range unless 0 <= x < q^digits.
std::vector<std::uint64_t> qadic(std::uint64_t x, std::uint64_t base, unsigned digits);

/// Inverse of qadic.
std::uint64_t from_qadic(const std::vector<std::uint64_t>& digits, std::uint64_t base);

}  // namespace eaqecc
