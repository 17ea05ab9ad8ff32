#include "eaqecc/setting.hpp"

#include <string>

#include "eaqecc/arith.hpp"
#include "eaqecc/error.hpp"

namespace eaqecc {

std::string_view to_string(Metric m) { return m == Metric::euclidean ? "euclidean" : "hermitian"; }

std::optional<Metric> parse_metric(std::string_view s) {
    if (s == "euclidean") return Metric::euclidean;
    if (s == "hermitian") return Metric::hermitian;
    return std::nullopt;
}

std::string_view to_string(Family f) {
    switch (f) {
        case Family::rs_hermitian: return "rs-hermitian";
        case Family::bch_euclidean: return "bch-euclidean";
        case Family::bch_hermitian: return "bch-hermitian";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view s) {
    if (s == "rs-hermitian") return Family::rs_hermitian;
    if (s == "bch-euclidean") return Family::bch_euclidean;
    if (s == "bch-hermitian") return Family::bch_hermitian;
    return std::nullopt;
}

std::uint64_t CodeSetting::alphabet_size() const { return checked_pow(p, r); }

std::uint64_t CodeSetting::n() const { return checked_pow(p, field_degree()) - 1; }

std::uint64_t CodeSetting::multiplier() const { return alphabet_size() % n(); }

std::uint64_t CodeSetting::inner_product_base() const {
    return metric == Metric::hermitian ? isqrt(alphabet_size()) : 1;
}

std::uint64_t CodeSetting::quantum_alphabet() const {
    return metric == Metric::hermitian ? isqrt(alphabet_size()) : alphabet_size();
}

void CodeSetting::validate() const {
    if (!is_prime(p)) throw Error(Errc::invalid_argument, "characteristic p=" + std::to_string(p) + " is not prime");
    if (r == 0) throw Error(Errc::invalid_argument, "r must be positive");
    if (extension_degree != 1 && extension_degree != 2)
        throw Error(Errc::invalid_argument, "extension degree must be 1 or 2");
    if (metric == Metric::hermitian && r % 2 != 0)
        throw Error(Errc::invalid_argument, "Hermitian metric needs a square alphabet (r even)");
    // keeps n and coset tables addressable
    const std::uint64_t order = checked_pow(p, field_degree());
    if (order > (std::uint64_t{1} << 24))
        throw Error(Errc::out_of_range, "p^l = " + std::to_string(order) + " exceeds 2^24");
    if (order < 3) throw Error(Errc::invalid_argument, "p^l must be at least 3");
}

CodeSetting make_setting(std::uint64_t p, unsigned r, unsigned extension_degree, Metric metric, bool eval_at_zero) {
    CodeSetting s{p, r, extension_degree, metric, eval_at_zero};
    s.validate();
    return s;
}

CodeSetting family_setting(Family family, std::uint64_t q, bool eval_at_zero) {
    const auto pp = prime_power(q);
    if (!pp) throw Error(Errc::invalid_argument, "q=" + std::to_string(q) + " is not a prime power");
    switch (family) {
        case Family::rs_hermitian:
            return make_setting(pp->prime, 2 * pp->exponent, 1, Metric::hermitian, eval_at_zero);
        case Family::bch_euclidean:
            return make_setting(pp->prime, pp->exponent, 2, Metric::euclidean, eval_at_zero);
        case Family::bch_hermitian:
            return make_setting(pp->prime, 2 * pp->exponent, 2, Metric::hermitian, eval_at_zero);
    }
    throw Error(Errc::invalid_argument, "unknown family");
}

std::optional<Family> family_of(const CodeSetting& s) {
    if (s.extension_degree == 1 && s.metric == Metric::hermitian) return Family::rs_hermitian;
    if (s.extension_degree == 2 && s.metric == Metric::euclidean) return Family::bch_euclidean;
    if (s.extension_degree == 2 && s.metric == Metric::hermitian) return Family::bch_hermitian;
    return std::nullopt;
}

}  // namespace eaqecc
