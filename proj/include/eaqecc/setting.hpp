#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace eaqecc {

enum class Metric { euclidean, hermitian };

std::string_view to_string(Metric m);
std::optional<Metric> parse_metric(std::string_view s);

/// The three code families that have closed-form entanglement formulas.
enum class Family { rs_hermitian, bch_euclidean, bch_hermitian };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view s);

/// Classical code over GF(p^r) obtained as the subfield subcode of an
/// evaluation code over GF(p^l), l = r * extension_degree.
///
/// Length is n = p^l - 1, or n + 1 when the code also evaluates at zero.
/// Cyclotomic cosets are taken with respect to p^r. With the Hermitian
/// metric p^r must be a square q^2 and the inner product conjugates by q;
/// the resulting quantum code is over GF(q). With the Euclidean metric it is
/// over GF(p^r).
struct CodeSetting {
    std::uint64_t p = 2;
    unsigned r = 1;
    unsigned extension_degree = 1;
    Metric metric = Metric::euclidean;
    bool eval_at_zero = false;

    unsigned field_degree() const { return r * extension_degree; }
    std::uint64_t alphabet_size() const;  // p^r
    std::uint64_t n() const;              // p^l - 1
    std::uint64_t length() const { return n() + (eval_at_zero ? 1 : 0); }
    std::uint64_t multiplier() const;     // p^r mod n
    /// Conjugation exponent of the inner product: q for Hermitian, 1 for Euclidean.
    std::uint64_t inner_product_base() const;
    /// Alphabet size of the entanglement-assisted code.
    std::uint64_t quantum_alphabet() const;

    /// Throws Errc::invalid_argument describing the first violated constraint.
    void validate() const;

    bool operator==(const CodeSetting&) const = default;
};

/// Validated setting from raw parameters.
CodeSetting make_setting(std::uint64_t p, unsigned r, unsigned extension_degree, Metric metric,
                         bool eval_at_zero);

/// Setting of `family` whose quantum alphabet is GF(q).
CodeSetting family_setting(Family family, std::uint64_t q, bool eval_at_zero);

/// Which closed-form family (if any) a setting belongs to.
std::optional<Family> family_of(const CodeSetting& s);

}  // namespace eaqecc
