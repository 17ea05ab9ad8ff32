#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "eaqecc/setting.hpp"

namespace eaqecc {

/// Minimal cyclotomic coset { x * multiplier^t mod n : t >= 0 }.
struct CycCoset {
    std::uint64_t modulus = 1;
    std::uint64_t multiplier = 0;  // reduced mod modulus
    std::uint64_t min_rep = 0;
    std::vector<std::uint64_t> elements;  // sorted, distinct

    std::size_t size() const { return elements.size(); }
    bool contains(std::uint64_t x) const;
    bool operator==(const CycCoset&) const = default;
};

/// Orbit of x under multiplication by `mult` modulo n.
/// Throws Errc::invalid_argument for n == 0 and Errc::out_of_range for x >= n.
CycCoset cyclotomic_coset(std::uint64_t x, std::uint64_t n, std::uint64_t mult);

/// All minimal cyclotomic cosets of Z_n, listed by increasing representative
/// m_0 = 0 < m_1 < ... < m_z.
struct CosetTable {
    std::uint64_t modulus = 1;
    std::uint64_t multiplier = 0;
    std::vector<std::uint64_t> reps;
    std::vector<std::uint32_t> sizes;

    std::size_t count() const { return reps.size(); }
    std::optional<std::size_t> index_of(std::uint64_t rep) const;
    /// Representative of the coset containing x.
    std::uint64_t rep_of(std::uint64_t x) const;
    CycCoset coset(std::size_t index) const;

private:
    friend CosetTable coset_table(std::uint64_t, std::uint64_t);
    std::vector<std::uint32_t> rep_index_;  // element -> index into reps
};

/// Requires gcd(mult, n) == 1 so that orbits partition Z_n.
CosetTable coset_table(std::uint64_t n, std::uint64_t mult);

enum class CosetKind { symmetric, fr_asymmetric, sr_asymmetric };

struct CosetClass {
    CosetKind kind = CosetKind::symmetric;
    std::uint64_t partner = 0;  // min rep of the reciprocal coset

    bool operator==(const CosetClass&) const = default;
};

/// Euclidean: coset of n - x. Hermitian: coset of n - qbase * x.
CycCoset reciprocal_coset(const CycCoset& c, Metric metric, std::uint64_t qbase);

CosetClass classify_coset(const CycCoset& c, Metric metric, std::uint64_t qbase);

/// Delta(t) = I_{m_0} u ... u I_{m_t}.
struct DefiningSet {
    CodeSetting setting;
    std::shared_ptr<const CosetTable> table;
    std::size_t t = 0;
    std::vector<std::uint64_t> exponents;  // sorted
    std::uint64_t m_t = 0;
    std::uint64_t m_next = 0;  // m_{t+1}, or n when t is the last index

    bool contains(std::uint64_t x) const;
};

/// Setting plus its coset table, shared by every defining set built from it.
class CosetContext {
public:
    explicit CosetContext(const CodeSetting& setting);

    const CodeSetting& setting() const { return setting_; }
    const CosetTable& table() const { return *table_; }
    std::size_t size() const { return table_->count(); }
    /// Index t with m_t == rep, or Errc::invalid_argument if rep is not a minimal representative.
    std::size_t index_of_rep(std::uint64_t rep) const;
    CosetClass classify(std::size_t index) const;
    DefiningSet defining_set(std::size_t t) const;

private:
    CodeSetting setting_;
    std::shared_ptr<const CosetTable> table_;
};

/// Throws Errc::out_of_range if t > z.
DefiningSet defining_set(const CodeSetting& setting, std::size_t t);

/// H \ (union of reciprocals of the cosets in ds).
std::vector<std::uint64_t> dual_defining_set(const DefiningSet& ds);

struct RLPartition {
    std::vector<std::uint64_t> right;  // I_R: asymmetric cosets whose reciprocal lies outside Delta
    std::vector<std::uint64_t> left;   // I_L: everything else
};

RLPartition partition_rl(const DefiningSet& ds);

/// Entanglement count #I_L, minus one when the code also evaluates at zero.
std::uint64_t c_by_cosets(const DefiningSet& ds);

/// Sum of coset sizes in Delta; dimension of the subfield subcode.
std::uint64_t subfield_dimension(const DefiningSet& ds);

/// Designed distance m_{t+1} + 1 of the dual code.
std::uint64_t bch_bound(const DefiningSet& ds);

}  // namespace eaqecc
