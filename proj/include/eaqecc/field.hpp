#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eaqecc {

/// GF(p^l) with elements stored as packed coefficient vectors: the element
/// c_0 + c_1 X + ... + c_{l-1} X^{l-1} (mod the defining polynomial) has
/// index c_0 + c_1 p + ... + c_{l-1} p^{l-1}. Multiplication goes through
/// discrete log tables built from a verified primitive element.
class FiniteField {
public:
    using Element = std::uint32_t;

    static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

    /// `modulus` holds the monic defining polynomial, low coefficient first
    /// (l + 1 entries). Without one, the first irreducible polynomial in
    /// packed-index order is used.
    static std::shared_ptr<const FiniteField> make(std::uint64_t p, unsigned degree,
                                                   std::optional<std::vector<std::uint32_t>> modulus = {});

    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return degree_; }
    std::uint32_t order() const { return order_; }
    std::uint32_t group_order() const { return order_ - 1; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    Element generator() const { return generator_; }

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;  // a != 0
    Element pow(Element a, std::uint64_t e) const;
    /// generator^k.
    Element exp(std::uint64_t k) const { return exp_[k % group_order()]; }
    /// Discrete log base the generator; a != 0.
    std::uint32_t log(Element a) const { return log_[a]; }
    /// a^(p^k).
    Element frobenius(Element a, unsigned k = 1) const;

    /// Whether a lies in the subfield GF(p^r); r must divide the degree.
    bool in_subfield(Element a, unsigned r) const;
    std::vector<Element> subfield_elements(unsigned r) const;

    /// Coordinates of a over the GF(p^r)-basis 1, g, ..., g^(l/r - 1).
    std::vector<std::vector<Element>> subfield_expansion_table(unsigned r) const;

private:
    FiniteField() = default;

    Element poly_mul(Element a, Element b) const;

    std::uint32_t p_ = 2;
    unsigned degree_ = 1;
    std::uint32_t order_ = 2;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> digit_weight_;  // p^i
    Element generator_ = 1;
    std::vector<Element> exp_;
    std::vector<std::uint32_t> log_;
};

/// Monic polynomials, low coefficient first.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

/// Dense row-major matrix with entries in GF(p^l). `entry_degree` records the
/// subfield GF(p^entry_degree) the entries are known to live in; it decides
/// the alphabet of enumerations and the Hermitian conjugation exponent.
class FieldMatrix {
public:
    using Element = FiniteField::Element;

    FieldMatrix(std::shared_ptr<const FiniteField> field, std::size_t rows, std::size_t cols,
                unsigned entry_degree = 0);

    const FiniteField& field() const { return *field_; }
    const std::shared_ptr<const FiniteField>& field_ptr() const { return field_; }
    unsigned entry_degree() const { return entry_degree_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Element& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Element at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<Element> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Element> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void append_row(std::span<const Element> values);

    /// Rows as lines, entries as g^k or 0.
    std::string to_exponent_grid() const;

private:
    std::shared_ptr<const FiniteField> field_;
    unsigned entry_degree_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> data_;
};

struct Echelon {
    FieldMatrix reduced;              // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
};

Echelon row_reduce(const FieldMatrix& m);
std::size_t rank(const FieldMatrix& m);
/// Basis of { y : m y^T = 0 }.
FieldMatrix nullspace(const FieldMatrix& m);
/// Rows of a followed by rows of b. Throws on field or width mismatch.
FieldMatrix stack(const FieldMatrix& a, const FieldMatrix& b);
/// Entrywise x -> x^e.
FieldMatrix power_entries(const FieldMatrix& m, std::uint64_t e);

}  // namespace eaqecc
