#include "eaqecc/closed_form.hpp"

#include <algorithm>
#include <string>

#include "eaqecc/arith.hpp"
#include "eaqecc/cosets.hpp"
#include "eaqecc/error.hpp"

namespace eaqecc {

namespace {

using i64 = std::int64_t;

void require_prime_power(std::uint64_t q) {
    if (!prime_power(q)) throw Error(Errc::invalid_argument, "q=" + std::to_string(q) + " is not a prime power");
}

void require_digit(std::uint64_t d, std::uint64_t q) {
    if (d >= q) throw Error(Errc::invalid_argument, "digit " + std::to_string(d) + " is not below q=" + std::to_string(q));
}

std::uint64_t as_count(i64 v) {
    if (v < 0) throw Error(Errc::out_of_range, "closed form produced a negative count");
    return static_cast<std::uint64_t>(v);
}

i64 rs_hermitian(const FormulaCase& fc) {
    const i64 q = static_cast<i64>(fc.q);
    const i64 b0 = static_cast<i64>(fc.digits[0]);
    const i64 b1 = static_cast<i64>(fc.digits[1]);
    const i64 c = b0 + b1 < q - 1 ? 1 + b1 * b1 : b1 * b1 + 2 * (b0 + b1 - q) + 4;
    return fc.extended ? c - 1 : c;
}

i64 bch_euclidean(const FormulaCase& fc) {
    const auto pairs = euclid_pair_counts(fc.q, fc.digits[0], fc.digits[1]);
    const auto special = euclid_special_counts(fc.q, fc.m_t);
    return (fc.extended ? 0 : 1) + 4 * (pairs.count_lt - pairs.overcount + pairs.count_eq) - 3 * special.sym1 -
           2 * special.sr1 - 2 * special.sym2;
}

i64 bch_hermitian(const FormulaCase& fc) {
    const i64 q = static_cast<i64>(fc.q);
    const i64 q4 = q * q * q * q;
    const i64 quantum_end = (q4 - 1) / (q + 1);  // (q-1, 0, q-1, 0), a symmetric singleton
    const i64 m = static_cast<i64>(fc.m_t);
    const i64 offset = fc.extended ? 1 : 0;
    if (m < quantum_end) return 1 - offset;
    if (m < q * q * q + q) return 2 + 4 * (m - quantum_end) - offset;
    return hermitian_case3_terms(fc.q, fc.m_t, fc.extended).total();
}

}  // namespace

FormulaCase make_formula_case(Family family, std::uint64_t q, std::uint64_t m_t, bool extended) {
    require_prime_power(q);
    FormulaCase fc{family, q, m_t, extended, {}};
    switch (family) {
        case Family::rs_hermitian:
            if (m_t > q * q - 2)
                throw Error(Errc::out_of_range, "t=" + std::to_string(m_t) + " exceeds q^2 - 2");
            fc.digits = qadic(m_t, q, 2);
            break;
        case Family::bch_euclidean: {
            const std::uint64_t n = q * q - 1;
            if (m_t >= n) throw Error(Errc::out_of_range, "m_t must be below q^2 - 1");
            if (cyclotomic_coset(m_t, n, q).min_rep != m_t)
                throw Error(Errc::invalid_argument, std::to_string(m_t) + " is not a minimal representative");
            fc.digits = qadic(m_t, q, 2);
            break;
        }
        case Family::bch_hermitian: {
            const std::uint64_t n = checked_pow(q, 4) - 1;
            if (m_t >= n) throw Error(Errc::out_of_range, "m_t must be below q^4 - 1");
            if (cyclotomic_coset(m_t, n, q * q).min_rep != m_t)
                throw Error(Errc::invalid_argument, std::to_string(m_t) + " is not a minimal representative");
            fc.digits = qadic(m_t, q, 4);
            break;
        }
    }
    return fc;
}

std::uint64_t c_closed_form(const FormulaCase& fc) {
    switch (fc.family) {
        case Family::rs_hermitian: return as_count(rs_hermitian(fc));
        case Family::bch_euclidean: return as_count(bch_euclidean(fc));
        case Family::bch_hermitian: return as_count(bch_hermitian(fc));
    }
    throw Error(Errc::invalid_argument, "unknown family");
}

std::uint64_t c_rs_hermitian(std::uint64_t q, std::uint64_t t, bool extended) {
    return c_closed_form(make_formula_case(Family::rs_hermitian, q, t, extended));
}

EuclidPairCounts euclid_pair_counts(std::uint64_t q, std::uint64_t b0, std::uint64_t b1) {
    require_digit(b0, q);
    require_digit(b1, q);
    const i64 Q = static_cast<i64>(q);
    const i64 B0 = static_cast<i64>(b0);
    const i64 B1 = static_cast<i64>(b1);
    EuclidPairCounts out;
    out.count_lt = B1 * (B1 + 1) / 2;
    out.overcount = std::max<i64>(0, B1 - (Q + 1) / 2) * (B1 - Q / 2);
    out.count_eq = std::max<i64>(0, B0 - std::max(Q - 1 - B1, B1) + 1);
    return out;
}

EuclidSpecialCounts euclid_special_counts(std::uint64_t q, std::uint64_t m_t) {
    if (q < 2) throw Error(Errc::invalid_argument, "q must be at least 2");
    if (m_t >= q * q - 1) throw Error(Errc::out_of_range, "m_t must be below q^2 - 1");
    const i64 Q = static_cast<i64>(q);
    const i64 M = static_cast<i64>(m_t);
    EuclidSpecialCounts out;
    out.sym1 = (Q % 2 == 1 && M >= (Q * Q - 1) / 2) ? 1 : 0;
    out.sr1 = std::max<i64>(0, M / (Q + 1) - (Q - 1) / 2);
    out.sym2 = std::min(M / (Q - 1), Q / 2);
    return out;
}

std::uint64_t c_bch_euclidean(std::uint64_t q, std::uint64_t m_t, bool extended) {
    return c_closed_form(make_formula_case(Family::bch_euclidean, q, m_t, extended));
}

std::vector<std::uint64_t> interlude_elements(std::uint64_t a2, std::uint64_t a3, std::uint64_t q) {
    if (q < 2) throw Error(Errc::invalid_argument, "q must be at least 2");
    require_digit(a2, q);
    require_digit(a3, q);
    if (a2 == q - 1 && a3 == q - 1) throw Error(Errc::invalid_argument, "(q-1, q-1) bounds no interlude");
    std::vector<std::uint64_t> out;
    auto push = [&](std::uint64_t i, std::uint64_t j) { out.push_back(from_qadic({i, j, a2, a3}, q)); };
    for (std::uint64_t j = a3 + 1; j < q; ++j)
        for (std::uint64_t i = 0; i < q; ++i) push(i, j);
    if (a2 < q - 1)
        for (std::uint64_t i = a2 + 1; i < q; ++i) push(i, a3);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t sr_count_interlude(std::uint64_t a2, std::uint64_t a3, std::uint64_t q) {
    if (q < 2) throw Error(Errc::invalid_argument, "q must be at least 2");
    require_digit(a2, q);
    require_digit(a3, q);
    if (a2 == q - 1 && a3 == q - 1) throw Error(Errc::invalid_argument, "(q-1, q-1) bounds no interlude");
    if (a2 + a3 < q - 1) return a3 * (q - a3);
    return q * q - q * a3 - a2 - 1;
}

HermitianCase3Terms hermitian_case3_terms(std::uint64_t q, std::uint64_t m_t, bool extended) {
    require_prime_power(q);
    if (m_t < q * q * q + q) throw Error(Errc::out_of_range, "m_t is below q^3 + q");
    const auto b = qadic(m_t, q, 4);
    const i64 Q = static_cast<i64>(q);
    const i64 b2 = static_cast<i64>(b[2]);
    const i64 b3 = static_cast<i64>(b[3]);

    HermitianCase3Terms terms;
    // I_0, the symmetric singleton (q-1,0,q-1,0) and the q(q-1) SR cosets after it
    terms.base = (extended ? 0 : 1) + 1 + 4 * static_cast<i64>(sr_count_interlude(q - 1, 0, q));

    // singletons (i,j,i,j) with 1 <= j < b3: one symmetric (weight 1) and j SR (weight 2) each;
    // with j = b3 and i <= b2: one symmetric plus the rest SR when i + b3 >= q - 1
    terms.singletons = b3 * b3 - 1 + std::max<i64>(0, 2 * (b2 + b3 - Q + 2) - 1);

    for (std::uint64_t j = 1; j < b[3]; ++j)
        for (std::uint64_t i = 0; i < q; ++i) terms.full_interludes += static_cast<i64>(sr_count_interlude(i, j, q));

    for (std::uint64_t i = 0; i < b[2]; ++i)
        terms.partial_interludes += static_cast<i64>(sr_count_interlude(i, b[3], q));
    if (b2 + b3 < Q - 1) {
        const i64 b0 = static_cast<i64>(b[0]);
        const i64 b1 = static_cast<i64>(b[1]);
        terms.partial_interludes += b3 * (b1 - b3) + std::max<i64>(0, b0 + b3 - Q + 1);
    } else {
        // every element of m_t's interlude is SR; count those up to m_t from the opening singleton
        const i64 start = static_cast<i64>(from_qadic({b[2], b[3], b[2], b[3]}, q));
        terms.partial_interludes += static_cast<i64>(m_t) - start;
    }
    return terms;
}

std::uint64_t c_bch_hermitian(std::uint64_t q, std::uint64_t m_t, bool extended) {
    return c_closed_form(make_formula_case(Family::bch_hermitian, q, m_t, extended));
}

}  // namespace eaqecc
