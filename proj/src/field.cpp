#include "eaqecc/field.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "eaqecc/arith.hpp"
#include "eaqecc/error.hpp"

namespace eaqecc {

namespace {

using Poly = std::vector<std::uint32_t>;  // low coefficient first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod_p(std::uint32_t a, std::uint32_t p) {
    // p is prime: a^(p-2)
    std::uint64_t result = 1, base = a % p;
    for (std::uint32_t e = p - 2; e != 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

// remainder of a modulo a nonzero divisor, coefficients mod p
Poly poly_mod(Poly a, const Poly& divisor, std::uint32_t p) {
    trim(a);
    const std::size_t dd = divisor.size() - 1;
    const std::uint64_t lead_inv = inverse_mod_p(divisor.back(), p);
    while (a.size() > dd) {
        const std::size_t shift = a.size() - 1 - dd;
        const std::uint64_t factor = a.back() * lead_inv % p;
        for (std::size_t i = 0; i <= dd; ++i) {
            const std::uint64_t sub = factor * divisor[i] % p;
            a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
    Poly f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    // every monic divisor of degree 1..deg/2
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        const std::uint64_t count = checked_pow(p, static_cast<unsigned>(d));
        Poly g(d + 1);
        g[d] = 1;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::shared_ptr<const FiniteField> FiniteField::make(std::uint64_t p, unsigned degree,
                                                     std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw Error(Errc::invalid_argument, "field characteristic " + std::to_string(p) + " is not prime");
    if (degree == 0) throw Error(Errc::invalid_argument, "field degree must be positive");
    const std::uint64_t order = checked_pow(p, degree);
    if (order > kMaxOrder) throw Error(Errc::out_of_range, "field of order " + std::to_string(order) + " is too large");

    std::shared_ptr<FiniteField> f(new FiniteField());
    f->p_ = static_cast<std::uint32_t>(p);
    f->degree_ = degree;
    f->order_ = static_cast<std::uint32_t>(order);
    f->digit_weight_.resize(degree);
    for (unsigned i = 0; i < degree; ++i) f->digit_weight_[i] = static_cast<std::uint32_t>(checked_pow(p, i));

    if (modulus) {
        const Poly& m = *modulus;
        if (m.size() != degree + 1 || m.back() != 1)
            throw Error(Errc::invalid_argument, "modulus must be monic of the field degree");
        if (std::any_of(m.begin(), m.end(), [&](std::uint32_t c) { return c >= p; }))
            throw Error(Errc::invalid_argument, "modulus coefficient out of range");
        if (!is_irreducible(m, f->p_)) throw Error(Errc::invalid_argument, "modulus is reducible");
        f->modulus_ = m;
    } else {
        Poly m(degree + 1);
        m[degree] = 1;
        for (std::uint64_t idx = 0; idx < order; ++idx) {
            std::uint64_t v = idx;
            for (unsigned i = 0; i < degree; ++i) {
                m[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            if (is_irreducible(m, f->p_)) break;
        }
        f->modulus_ = m;
    }

    // smallest element of multiplicative order p^l - 1
    const std::uint32_t group = f->order_ - 1;
    f->exp_.resize(group);
    f->log_.assign(f->order_, 0);
    bool found = false;
    for (Element cand = 1; cand < f->order_ && !found; ++cand) {
        Element x = 1;
        std::uint32_t k = 0;
        do {
            f->exp_[k] = x;
            x = f->poly_mul(x, cand);
            ++k;
        } while (x != 1 && k < group);
        if (x == 1 && k == group) {
            f->generator_ = cand;
            found = true;
        }
    }
    if (!found) throw Error(Errc::invalid_argument, "no primitive element found; modulus is not irreducible");
    for (std::uint32_t k = 0; k < group; ++k) f->log_[f->exp_[k]] = k;
    return f;
}

FiniteField::Element FiniteField::poly_mul(Element a, Element b) const {
    Poly pa(degree_), pb(degree_);
    for (unsigned i = 0; i < degree_; ++i) {
        pa[i] = a % p_;
        a /= p_;
        pb[i] = b % p_;
        b /= p_;
    }
    Poly prod(2 * degree_, 0);
    for (unsigned i = 0; i < degree_; ++i)
        for (unsigned j = 0; j < degree_; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p_);
    const Poly r = poly_mod(prod, modulus_, p_);
    Element out = 0;
    for (std::size_t i = 0; i < r.size(); ++i) out += r[i] * digit_weight_[i];
    return out;
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
    if (p_ == 2) return a ^ b;
    Element out = 0;
    for (unsigned i = 0; i < degree_; ++i) {
        out += ((a % p_ + b % p_) % p_) * digit_weight_[i];
        a /= p_;
        b /= p_;
    }
    return out;
}

FiniteField::Element FiniteField::neg(Element a) const {
    if (p_ == 2) return a;
    Element out = 0;
    for (unsigned i = 0; i < degree_; ++i) {
        out += ((p_ - a % p_) % p_) * digit_weight_[i];
        a /= p_;
    }
    return out;
}

FiniteField::Element FiniteField::sub(Element a, Element b) const { return add(a, neg(b)); }

FiniteField::Element FiniteField::mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    const std::uint32_t s = log_[a] + log_[b];
    const std::uint32_t g = group_order();
    return exp_[s >= g ? s - g : s];
}

FiniteField::Element FiniteField::inv(Element a) const {
    if (a == 0) throw Error(Errc::invalid_argument, "zero has no inverse");
    const std::uint32_t g = group_order();
    return exp_[(g - log_[a]) % g];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t g = group_order();
    return exp_[static_cast<std::uint64_t>(static_cast<unsigned __int128>(log_[a]) * (e % g) % g)];
}

FiniteField::Element FiniteField::frobenius(Element a, unsigned k) const {
    std::uint64_t e = 1;
    const std::uint64_t g = group_order();
    for (unsigned i = 0; i < k; ++i) e = e * p_ % g;
    // a^(p^k) with p^k reduced mod p^l - 1; the identity map when p^k == 1 mod g
    if (a == 0) return 0;
    return exp_[static_cast<std::uint64_t>(log_[a]) * e % g];
}

bool FiniteField::in_subfield(Element a, unsigned r) const {
    if (r == 0 || degree_ % r != 0) throw Error(Errc::invalid_argument, "subfield degree must divide the field degree");
    return frobenius(a, r) == a;
}

std::vector<FiniteField::Element> FiniteField::subfield_elements(unsigned r) const {
    std::vector<Element> out;
    for (Element a = 0; a < order_; ++a)
        if (in_subfield(a, r)) out.push_back(a);
    return out;
}

std::vector<std::vector<FiniteField::Element>> FiniteField::subfield_expansion_table(unsigned r) const {
    const auto sub = subfield_elements(r);
    const unsigned e = degree_ / r;
    std::vector<std::vector<Element>> table(order_);
    std::vector<std::size_t> idx(e, 0);
    for (std::uint64_t step = 0; step < order_; ++step) {
        Element value = 0;
        std::vector<Element> coords(e);
        for (unsigned b = 0; b < e; ++b) {
            coords[b] = sub[idx[b]];
            value = add(value, mul(coords[b], exp(b)));
        }
        table[value] = std::move(coords);
        for (unsigned b = 0; b < e; ++b) {
            if (++idx[b] < sub.size()) break;
            idx[b] = 0;
        }
    }
    return table;
}

FieldMatrix::FieldMatrix(std::shared_ptr<const FiniteField> field, std::size_t rows, std::size_t cols,
                         unsigned entry_degree)
    : field_(std::move(field)),
      entry_degree_(entry_degree == 0 ? field_->degree() : entry_degree),
      rows_(rows),
      cols_(cols),
      data_(rows * cols, 0) {
    if (field_->degree() % entry_degree_ != 0)
        throw Error(Errc::invalid_argument, "entry field degree must divide the field degree");
}

void FieldMatrix::append_row(std::span<const Element> values) {
    if (values.size() != cols_) throw Error(Errc::invalid_argument, "row width mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

std::string FieldMatrix::to_exponent_grid() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ' ';
            const Element v = at(i, j);
            if (v == 0)
                out << '0';
            else
                out << "g^" << field_->log(v);
        }
        out << '\n';
    }
    return out.str();
}

Echelon row_reduce(const FieldMatrix& m) {
    const FiniteField& f = m.field();
    FieldMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t piv = r;
        while (piv < a.rows() && a.at(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r) std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(r).begin());
        const auto scale = f.inv(a.at(r, col));
        for (auto& v : a.row(r)) v = f.mul(v, scale);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, col) == 0) continue;
            const auto factor = a.at(i, col);
            auto src = a.row(r);
            auto dst = a.row(i);
            for (std::size_t j = col; j < a.cols(); ++j)
                if (src[j] != 0) dst[j] = f.sub(dst[j], f.mul(factor, src[j]));
        }
        pivots.push_back(col);
        ++r;
    }
    FieldMatrix reduced(m.field_ptr(), 0, m.cols(), m.entry_degree());
    for (std::size_t i = 0; i < r; ++i) reduced.append_row(a.row(i));
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const FieldMatrix& m) { return row_reduce(m).pivots.size(); }

FieldMatrix nullspace(const FieldMatrix& m) {
    const FiniteField& f = m.field();
    const Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    FieldMatrix out(m.field_ptr(), 0, m.cols(), m.entry_degree());
    std::vector<FieldMatrix::Element> y(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(y.begin(), y.end(), 0);
        y[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) y[e.pivots[i]] = f.neg(e.reduced.at(i, free));
        out.append_row(y);
    }
    return out;
}

FieldMatrix stack(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.field_ptr() != b.field_ptr()) throw Error(Errc::invalid_argument, "matrices over different fields");
    if (a.cols() != b.cols()) throw Error(Errc::invalid_argument, "matrix width mismatch");
    const unsigned deg = a.entry_degree() == b.entry_degree() ? a.entry_degree() : a.field().degree();
    FieldMatrix out(a.field_ptr(), 0, a.cols(), deg);
    for (std::size_t i = 0; i < a.rows(); ++i) out.append_row(a.row(i));
    for (std::size_t i = 0; i < b.rows(); ++i) out.append_row(b.row(i));
    return out;
}

FieldMatrix power_entries(const FieldMatrix& m, std::uint64_t e) {
    FieldMatrix out = m;
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (auto& v : out.row(i)) v = m.field().pow(v, e);
    return out;
}

}  // namespace eaqecc
