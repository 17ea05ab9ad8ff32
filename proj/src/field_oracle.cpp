#include "eaqecc/field_oracle.hpp"

#include <cmath>
#include <string>

#include "eaqecc/arith.hpp"
#include "eaqecc/cosets.hpp"
#include "eaqecc/error.hpp"

namespace eaqecc {

namespace {

using i128 = __int128;

// |alphabet|^k, or nullopt once it passes `limit`
std::optional<std::uint64_t> bounded_pow(std::uint64_t base, std::size_t k, std::uint64_t limit) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (v > limit / base) return std::nullopt;
        v *= base;
    }
    return v;
}

std::uint64_t first_nonzero_weight(const std::vector<std::uint64_t>& dist) {
    for (std::size_t w = 1; w < dist.size(); ++w)
        if (dist[w] != 0) return w;
    throw Error(Errc::invalid_argument, "the zero code has no minimum distance");
}

}  // namespace

FieldMatrix rs_generator_matrix(std::shared_ptr<const FiniteField> field, const std::vector<std::uint64_t>& exponents,
                                bool eval_at_zero) {
    const std::uint64_t n = field->group_order();
    const std::size_t offset = eval_at_zero ? 1 : 0;
    FieldMatrix g(field, exponents.size(), n + offset);
    for (std::size_t row = 0; row < exponents.size(); ++row) {
        const std::uint64_t i = exponents[row];
        if (i >= n) throw Error(Errc::out_of_range, "exponent " + std::to_string(i) + " is not below n=" + std::to_string(n));
        if (eval_at_zero) g.at(row, 0) = i == 0 ? 1 : 0;
        for (std::uint64_t j = 0; j < n; ++j) g.at(row, offset + j) = field->exp(i * j);
    }
    return g;
}

FieldMatrix subfield_subcode_basis(const FieldMatrix& m, unsigned r) {
    const FiniteField& f = m.field();
    if (r == 0 || f.degree() % r != 0) throw Error(Errc::invalid_argument, "subfield degree must divide the field degree");
    // rowspace(m) = { v : H v^T = 0 }; a subfield vector satisfies that iff it
    // satisfies every coordinate equation of H over a GF(p^r)-basis
    const FieldMatrix h = nullspace(m);
    const auto expansion = f.subfield_expansion_table(r);
    const unsigned e = f.degree() / r;
    FieldMatrix expanded(m.field_ptr(), 0, m.cols(), r);
    std::vector<FieldMatrix::Element> line(m.cols());
    for (std::size_t i = 0; i < h.rows(); ++i) {
        for (unsigned b = 0; b < e; ++b) {
            for (std::size_t j = 0; j < m.cols(); ++j) line[j] = expansion[h.at(i, j)][b];
            expanded.append_row(line);
        }
    }
    return nullspace(expanded);
}

FieldMatrix dual_basis(const FieldMatrix& m, Metric metric) {
    if (metric == Metric::euclidean) return nullspace(m);
    if (m.entry_degree() % 2 != 0)
        throw Error(Errc::invalid_argument, "Hermitian dual needs entries in a field of square order");
    // sum x_i y_i^q = 0  <=>  sum x_i^q y_i = 0 over GF(q^2)
    const std::uint64_t q = checked_pow(m.field().characteristic(), m.entry_degree() / 2);
    return nullspace(power_entries(m, q));
}

std::size_t intersection_dimension(const FieldMatrix& a, const FieldMatrix& b) {
    const FieldMatrix both = stack(a, b);
    return rank(a) + rank(b) - rank(both);
}

FieldMatrix subfield_code(const CodeSetting& setting, const std::vector<std::uint64_t>& exponents,
                          std::shared_ptr<const FiniteField> field) {
    const FieldMatrix d = rs_generator_matrix(std::move(field), exponents, setting.eval_at_zero);
    return subfield_subcode_basis(d, setting.r);
}

std::uint64_t c_by_matrices(const CodeSetting& setting, const std::vector<std::uint64_t>& exponents,
                            std::shared_ptr<const FiniteField> field) {
    if (setting.length() > kMatrixOracleMaxLength)
        throw Error(Errc::unavailable, "matrix oracle limited to length " + std::to_string(kMatrixOracleMaxLength));
    const FieldMatrix e = subfield_code(setting, exponents, std::move(field));
    const FieldMatrix dual = dual_basis(e, setting.metric);
    return rank(e) - intersection_dimension(e, dual);
}

std::uint64_t c_by_matrices(const CodeSetting& setting, std::size_t t) {
    setting.validate();
    if (setting.length() > kMatrixOracleMaxLength)
        throw Error(Errc::unavailable, "matrix oracle limited to length " + std::to_string(kMatrixOracleMaxLength));
    const DefiningSet ds = defining_set(setting, t);
    return c_by_matrices(setting, ds.exponents, FiniteField::make(setting.p, setting.field_degree()));
}

std::vector<std::uint64_t> weight_distribution(const FieldMatrix& m, std::uint64_t budget) {
    const FiniteField& f = m.field();
    const Echelon basis = row_reduce(m);
    const auto alphabet = f.subfield_elements(m.entry_degree());
    const std::size_t k = basis.pivots.size();
    if (!bounded_pow(alphabet.size(), k, budget))
        throw Error(Errc::budget_exceeded, "code has more than " + std::to_string(budget) + " codewords");

    const std::size_t n = m.cols();
    std::vector<std::uint64_t> dist(n + 1, 0);
    std::vector<FieldMatrix::Element> word(n, 0);
    std::vector<std::size_t> digit(k, 0);
    auto add_scaled = [&](std::size_t row, FieldMatrix::Element coeff) {
        const auto src = basis.reduced.row(row);
        for (std::size_t j = 0; j < n; ++j)
            if (src[j] != 0) word[j] = f.add(word[j], f.mul(coeff, src[j]));
    };
    for (;;) {
        std::size_t w = 0;
        for (auto v : word) w += v != 0;
        ++dist[w];
        std::size_t b = 0;
        for (; b < k; ++b) {
            const auto old = alphabet[digit[b]];
            digit[b] = (digit[b] + 1) % alphabet.size();
            add_scaled(b, f.sub(alphabet[digit[b]], old));
            if (digit[b] != 0) break;
        }
        if (b == k) break;
    }
    return dist;
}

std::vector<std::uint64_t> macwilliams_transform(const std::vector<std::uint64_t>& dist, std::uint64_t alphabet) {
    if (dist.empty() || alphabet < 2) throw Error(Errc::invalid_argument, "bad weight distribution");
    const std::size_t n = dist.size() - 1;
    if (static_cast<double>(n) * std::log2(static_cast<double>(alphabet)) > 100.0)
        throw Error(Errc::out_of_range, "weight enumerator too large for exact transform");
    std::vector<std::vector<i128>> binom(n + 1, std::vector<i128>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : 0);
    }
    std::vector<i128> qpow(n + 1, 1);
    for (std::size_t i = 1; i <= n; ++i) qpow[i] = qpow[i - 1] * static_cast<i128>(alphabet - 1);
    i128 size = 0;
    for (auto a : dist) size += a;

    std::vector<std::uint64_t> out(n + 1, 0);
    for (std::size_t j = 0; j <= n; ++j) {
        i128 acc = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (dist[i] == 0) continue;
            i128 kraw = 0;
            for (std::size_t s = 0; s <= std::min(i, j); ++s) {
                if (j - s > n - i) continue;
                const i128 term = qpow[j - s] * binom[i][s] * binom[n - i][j - s];
                kraw += (s % 2 == 0) ? term : -term;
            }
            acc += static_cast<i128>(dist[i]) * kraw;
        }
        if (acc < 0 || acc % size != 0) throw Error(Errc::invalid_argument, "not the weight distribution of a linear code");
        out[j] = static_cast<std::uint64_t>(acc / size);
    }
    return out;
}

std::uint64_t exhaustive_min_distance(const FieldMatrix& m, std::uint64_t budget) {
    return first_nonzero_weight(weight_distribution(m, budget));
}

std::uint64_t min_distance(const FieldMatrix& m, std::uint64_t budget) {
    const std::size_t k = rank(m);
    const std::uint64_t alphabet = checked_pow(m.field().characteristic(), m.entry_degree());
    if (bounded_pow(alphabet, k, budget)) return exhaustive_min_distance(m, budget);
    if (!bounded_pow(alphabet, m.cols() - k, budget))
        throw Error(Errc::budget_exceeded, "neither the code nor its dual fits the enumeration budget");
    const FieldMatrix dual = nullspace(m);
    return first_nonzero_weight(macwilliams_transform(weight_distribution(dual, budget), alphabet));
}

}  // namespace eaqecc
