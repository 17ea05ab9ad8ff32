#include "eaqecc/arith.hpp"

#include <limits>
#include <string>

#include "eaqecc/error.hpp"

namespace eaqecc {

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    for (std::uint64_t d = 3; d <= v / d; d += 2)
        if (v % d == 0) return false;
    return true;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
            throw Error(Errc::out_of_range, std::to_string(base) + "^" + std::to_string(exp) + " overflows");
        out *= base;
    }
    return out;
}

std::uint64_t isqrt(std::uint64_t v) {
    std::uint64_t s = 0;
    std::uint64_t bit = std::uint64_t{1} << 31;
    while (bit != 0) {
        const std::uint64_t cand = s | bit;
        if (cand <= v / cand) s = cand;
        bit >>= 1;
    }
    return s;
}

std::optional<PrimePower> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d <= q / d; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1) return std::nullopt;
    return PrimePower{p, e};
}

std::vector<std::uint64_t> qadic(std::uint64_t x, std::uint64_t base, unsigned digits) {
    if (base < 2) throw Error(Errc::invalid_argument, "q-adic base must be at least 2");
    std::vector<std::uint64_t> out(digits);
    for (auto& d : out) {
        d = x % base;
        x /= base;
    }
    if (x != 0) throw Error(Errc::out_of_range, "value does not fit in " + std::to_string(digits) + " q-adic digits");
    return out;
}

std::uint64_t from_qadic(const std::vector<std::uint64_t>& digits, std::uint64_t base) {
    std::uint64_t out = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) out = out * base + *it;
    return out;
}

}  // namespace eaqecc
