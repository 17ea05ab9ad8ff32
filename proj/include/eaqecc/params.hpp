#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "eaqecc/cosets.hpp"

namespace eaqecc {

enum class CSource { formula, coset, matrix };

/// How c_by_formula treats the closed form: trust it, or compare against the
/// coset oracle on every call.
enum class FormulaMode { fast, cross_check };

/// [[n, k, d; c]]_q with d a designed lower bound.
struct EAQECCParams {
    std::uint64_t q = 0;
    std::uint64_t n = 0;
    std::int64_t k = 0;
    std::uint64_t d_lower = 0;
    std::uint64_t c = 0;
    bool catalytic = false;  // k > c
    bool valid = false;      // k > 0
    std::size_t t = 0;
    std::uint64_t m_t = 0;

    bool operator==(const EAQECCParams&) const = default;
};

/// Closed-form c for (setting, t). Errc::unavailable when the setting belongs
/// to no formula family; Errc::formula_mismatch in cross-check mode.
std::uint64_t c_by_formula(const CosetContext& ctx, std::size_t t, FormulaMode mode = FormulaMode::fast);

EAQECCParams eaqecc_params(const CosetContext& ctx, std::size_t t, CSource source);

/// One row per t in increasing order. threads == 0 picks the hardware count.
std::vector<EAQECCParams> sweep(const CosetContext& ctx, CSource source, unsigned threads = 0);

struct VerificationRecord {
    std::size_t t = 0;
    std::uint64_t m_t = 0;
    std::optional<std::uint64_t> c_formula;
    std::uint64_t c_coset = 0;
    std::optional<std::uint64_t> c_matrix;

    bool agrees() const;
};

struct VerificationReport {
    CodeSetting setting;
    std::vector<VerificationRecord> records;
    std::vector<VerificationRecord> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Runs every available c source at every t. The matrix source is used only
/// when requested and only up to kMatrixOracleMaxLength (else Errc::unavailable).
VerificationReport verify_setting(const CosetContext& ctx, bool use_matrix, unsigned threads = 0);

}  // namespace eaqecc
