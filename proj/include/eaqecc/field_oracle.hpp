#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "eaqecc/field.hpp"
#include "eaqecc/setting.hpp"

namespace eaqecc {

/// Rows ev(X^i), i in exponents, at the points g^0, ..., g^(n-1); with
/// eval_at_zero a leading column holds the evaluations at 0.
FieldMatrix rs_generator_matrix(std::shared_ptr<const FiniteField> field,
                                const std::vector<std::uint64_t>& exponents, bool eval_at_zero);

/// Basis over GF(p^r) of the codewords of rowspace(m) with all coordinates in GF(p^r).
FieldMatrix subfield_subcode_basis(const FieldMatrix& m, unsigned r);

/// Euclidean or Hermitian dual of rowspace(m), taken over the entry field of m.
FieldMatrix dual_basis(const FieldMatrix& m, Metric metric);

std::size_t intersection_dimension(const FieldMatrix& a, const FieldMatrix& b);

/// Largest code length the matrix oracle accepts.
inline constexpr std::uint64_t kMatrixOracleMaxLength = 256;

/// c = dim E - dim(E n E^perp) computed from explicit generator matrices.
std::uint64_t c_by_matrices(const CodeSetting& setting, std::size_t t);
std::uint64_t c_by_matrices(const CodeSetting& setting, const std::vector<std::uint64_t>& exponents,
                            std::shared_ptr<const FiniteField> field);

/// The subfield subcode E_Delta for a setting's exponent set.
FieldMatrix subfield_code(const CodeSetting& setting, const std::vector<std::uint64_t>& exponents,
                          std::shared_ptr<const FiniteField> field);

/// Counts A_0..A_n of codeword weights of rowspace(m) over its entry field, by
/// enumerating all codewords. Errc::budget_exceeded if more than `budget`.
std::vector<std::uint64_t> weight_distribution(const FieldMatrix& m, std::uint64_t budget);

/// Weight distribution of the Euclidean dual of a code over GF(Q) with the given distribution.
std::vector<std::uint64_t> macwilliams_transform(const std::vector<std::uint64_t>& dist,
                                                 std::uint64_t alphabet);

/// Minimum nonzero weight by direct enumeration.
std::uint64_t exhaustive_min_distance(const FieldMatrix& m, std::uint64_t budget);

/// Minimum distance, enumerating either the code or its Euclidean dual
/// (then MacWilliams), whichever is smaller.
std::uint64_t min_distance(const FieldMatrix& m, std::uint64_t budget);

}  // namespace eaqecc
