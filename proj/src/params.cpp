#include "eaqecc/params.hpp"

#include <string>

#include "eaqecc/closed_form.hpp"
#include "eaqecc/error.hpp"
#include "eaqecc/field_oracle.hpp"
#include "parallel.hpp"

namespace eaqecc {

namespace {

std::shared_ptr<const FiniteField> matrix_field(const CodeSetting& s) {
    if (s.length() > kMatrixOracleMaxLength)
        throw Error(Errc::unavailable, "matrix oracle limited to length " + std::to_string(kMatrixOracleMaxLength) +
                                           ", setting has length " + std::to_string(s.length()));
    return FiniteField::make(s.p, s.field_degree());
}

EAQECCParams assemble(const CosetContext& ctx, std::size_t t, CSource source,
                      const std::shared_ptr<const FiniteField>& field) {
    const DefiningSet ds = ctx.defining_set(t);
    const CodeSetting& s = ctx.setting();
    std::uint64_t c = 0;
    switch (source) {
        case CSource::formula: c = c_by_formula(ctx, t); break;
        case CSource::coset: c = c_by_cosets(ds); break;
        case CSource::matrix: c = c_by_matrices(s, ds.exponents, field ? field : matrix_field(s)); break;
    }
    EAQECCParams p;
    p.q = s.quantum_alphabet();
    p.n = s.length();
    p.k = static_cast<std::int64_t>(p.n) - 2 * static_cast<std::int64_t>(subfield_dimension(ds)) +
          static_cast<std::int64_t>(c);
    p.d_lower = bch_bound(ds);
    p.c = c;
    p.catalytic = p.k > static_cast<std::int64_t>(c);
    p.valid = p.k > 0;
    p.t = t;
    p.m_t = ds.m_t;
    return p;
}

}  // namespace

std::uint64_t c_by_formula(const CosetContext& ctx, std::size_t t, FormulaMode mode) {
    const CodeSetting& s = ctx.setting();
    const auto family = family_of(s);
    if (!family) throw Error(Errc::unavailable, "no closed form for degree-1 Euclidean settings");
    if (t >= ctx.size()) throw Error(Errc::out_of_range, "t out of range");
    const std::uint64_t m_t = ctx.table().reps[t];
    const std::uint64_t c = c_closed_form(make_formula_case(*family, s.quantum_alphabet(), m_t, s.eval_at_zero));
    if (mode == FormulaMode::cross_check) {
        const std::uint64_t oracle = c_by_cosets(ctx.defining_set(t));
        if (oracle != c)
            throw Error(Errc::formula_mismatch, std::string(to_string(*family)) + " q=" +
                                                    std::to_string(s.quantum_alphabet()) + " m_t=" +
                                                    std::to_string(m_t) + ": formula " + std::to_string(c) +
                                                    " but cosets give " + std::to_string(oracle));
    }
    return c;
}

EAQECCParams eaqecc_params(const CosetContext& ctx, std::size_t t, CSource source) {
    return assemble(ctx, t, source, nullptr);
}

std::vector<EAQECCParams> sweep(const CosetContext& ctx, CSource source, unsigned threads) {
    const auto field = source == CSource::matrix ? matrix_field(ctx.setting()) : nullptr;
    std::vector<EAQECCParams> rows(ctx.size());
    detail::parallel_for(rows.size(), threads, [&](std::size_t t) { rows[t] = assemble(ctx, t, source, field); });
    return rows;
}

bool VerificationRecord::agrees() const {
    if (c_formula && *c_formula != c_coset) return false;
    if (c_matrix && *c_matrix != c_coset) return false;
    return true;
}

VerificationReport verify_setting(const CosetContext& ctx, bool use_matrix, unsigned threads) {
    const CodeSetting& s = ctx.setting();
    const auto field = use_matrix ? matrix_field(s) : nullptr;
    const bool has_formula = family_of(s).has_value();
    VerificationReport report;
    report.setting = s;
    report.records.resize(ctx.size());
    detail::parallel_for(ctx.size(), threads, [&](std::size_t t) {
        VerificationRecord& rec = report.records[t];
        const DefiningSet ds = ctx.defining_set(t);
        rec.t = t;
        rec.m_t = ds.m_t;
        rec.c_coset = c_by_cosets(ds);
        if (has_formula) rec.c_formula = c_by_formula(ctx, t);
        if (use_matrix) rec.c_matrix = c_by_matrices(s, ds.exponents, field);
    });
    for (const auto& rec : report.records)
        if (!rec.agrees()) report.mismatches.push_back(rec);
    return report;
}

}  // namespace eaqecc
