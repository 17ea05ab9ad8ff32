#pragma once

#include <cstdint>
#include <vector>

#include "eaqecc/setting.hpp"

namespace eaqecc {

/// Validated input to one of the closed-form entanglement formulas.
struct FormulaCase {
    Family family = Family::rs_hermitian;
    std::uint64_t q = 2;
    std::uint64_t m_t = 0;
    bool extended = false;
    std::vector<std::uint64_t> digits;  // q-adic digits of m_t: 2 for RS and Euclidean BCH, 4 for Hermitian BCH
};

/// Checks that q is a prime power and m_t is admissible for the family
/// (any t <= q^2 - 2 for RS, a minimal representative for the BCH families).
FormulaCase make_formula_case(Family family, std::uint64_t q, std::uint64_t m_t, bool extended);

/// Dispatches to the family's formula.
std::uint64_t c_closed_form(const FormulaCase& fc);

/// Hermitian Reed-Solomon codes of length q^2 - 1 (q^2 when extended), Delta = {0..t}.
std::uint64_t c_rs_hermitian(std::uint64_t q, std::uint64_t t, bool extended);

struct EuclidPairCounts {
    std::int64_t count_lt = 0;   // pairs with a_1 < b_1 satisfying a_0 + a_1 >= q - 1
    std::int64_t overcount = 0;  // of those, pairs with a_0 < a_1 (not minimal representatives)
    std::int64_t count_eq = 0;   // pairs with a_1 = b_1
};

EuclidPairCounts euclid_pair_counts(std::uint64_t q, std::uint64_t b0, std::uint64_t b1);

struct EuclidSpecialCounts {
    std::int64_t sym1 = 0;  // symmetric singleton (q odd, m_t >= (q^2-1)/2)
    std::int64_t sr1 = 0;   // SR-asymmetric singletons in Delta
    std::int64_t sym2 = 0;  // symmetric cosets of size two in Delta
};

EuclidSpecialCounts euclid_special_counts(std::uint64_t q, std::uint64_t m_t);

/// Euclidean BCH codes over GF(q) with extension degree 2, length q^2 - 1 (q^2 when extended).
std::uint64_t c_bch_euclidean(std::uint64_t q, std::uint64_t m_t, bool extended);

/// Minimal representatives of the size-two cosets strictly between the
/// singleton (a2, a3, a2, a3) and the next singleton, modulo q^4 - 1 with
/// respect to q^2. The wrap case a2 = a3 = q - 1 has no successor and is rejected.
std::vector<std::uint64_t> interlude_elements(std::uint64_t a2, std::uint64_t a3, std::uint64_t q);

/// Number of SR-asymmetric cosets among interlude_elements(a2, a3, q).
std::uint64_t sr_count_interlude(std::uint64_t a2, std::uint64_t a3, std::uint64_t q);

/// The additive pieces of the Hermitian BCH formula above q^3 + q.
struct HermitianCase3Terms {
    std::int64_t base = 0;              // I_0 plus the first interlude and its opening singleton
    std::int64_t singletons = 0;        // remaining singletons up to m_t
    std::int64_t full_interludes = 0;   // SR cosets in interludes with a3 < b3 (each weighted 4)
    std::int64_t partial_interludes = 0;  // SR cosets with a3 = b3, up to m_t (each weighted 4)

    std::int64_t total() const { return base + singletons + 4 * (full_interludes + partial_interludes); }
};

/// Requires m_t >= q^3 + q.
HermitianCase3Terms hermitian_case3_terms(std::uint64_t q, std::uint64_t m_t, bool extended);

/// Hermitian BCH codes over GF(q^2) with extension degree 2, length q^4 - 1 (q^4 when extended).
std::uint64_t c_bch_hermitian(std::uint64_t q, std::uint64_t m_t, bool extended);

}  // namespace eaqecc
