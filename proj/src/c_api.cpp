#include "eaqecc/eaqecc.h"

#include <cstring>
#include <exception>
#include <filesystem>
#include <memory>
#include <new>
#include <string>

#include "eaqecc/closed_form.hpp"
#include "eaqecc/cosets.hpp"
#include "eaqecc/error.hpp"
#include "eaqecc/field_oracle.hpp"
#include "eaqecc/params.hpp"
#include "eaqecc/table_fixture.hpp"

struct eaqecc_setting {
    eaqecc::CosetContext ctx;
};

struct eaqecc_report {
    eaqecc::VerificationReport report;
};

namespace {

thread_local std::string last_error;

eaqecc_status fail(eaqecc_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

eaqecc_status status_of(eaqecc::Errc code) {
    switch (code) {
        case eaqecc::Errc::invalid_argument: return EAQECC_ERR_INVALID_ARGUMENT;
        case eaqecc::Errc::out_of_range: return EAQECC_ERR_OUT_OF_RANGE;
        case eaqecc::Errc::unavailable: return EAQECC_ERR_UNAVAILABLE;
        case eaqecc::Errc::budget_exceeded: return EAQECC_ERR_BUDGET_EXCEEDED;
        case eaqecc::Errc::formula_mismatch: return EAQECC_ERR_FORMULA_MISMATCH;
    }
    return EAQECC_ERR_INTERNAL;
}

template <class Fn>
eaqecc_status guarded(Fn&& fn) {
    try {
        fn();
        return EAQECC_OK;
    } catch (const eaqecc::Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(EAQECC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(EAQECC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(EAQECC_ERR_INTERNAL, "unknown error");
    }
}

eaqecc::CSource to_source(eaqecc_c_source s) {
    switch (s) {
        case EAQECC_SOURCE_FORMULA: return eaqecc::CSource::formula;
        case EAQECC_SOURCE_COSET: return eaqecc::CSource::coset;
        case EAQECC_SOURCE_MATRIX: return eaqecc::CSource::matrix;
    }
    throw eaqecc::Error(eaqecc::Errc::invalid_argument, "unknown c source");
}

eaqecc::Family to_family(eaqecc_family f) {
    switch (f) {
        case EAQECC_FAMILY_RS_HERMITIAN: return eaqecc::Family::rs_hermitian;
        case EAQECC_FAMILY_BCH_EUCLIDEAN: return eaqecc::Family::bch_euclidean;
        case EAQECC_FAMILY_BCH_HERMITIAN: return eaqecc::Family::bch_hermitian;
        case EAQECC_FAMILY_NONE: break;
    }
    throw eaqecc::Error(eaqecc::Errc::invalid_argument, "unknown family");
}

eaqecc_params to_c(const eaqecc::EAQECCParams& p) {
    return {p.q, p.n, p.k, p.d_lower, p.c, p.catalytic ? 1 : 0, p.valid ? 1 : 0, p.t, p.m_t};
}

eaqecc_status null_arg(const char* name) { return fail(EAQECC_ERR_NULL_ARGUMENT, std::string(name) + " is null"); }

}  // namespace

extern "C" {

const char* eaqecc_version(void) { return EAQECC_VERSION; }

const char* eaqecc_last_error(void) { return last_error.c_str(); }

const char* eaqecc_status_string(eaqecc_status status) {
    switch (status) {
        case EAQECC_OK: return "ok";
        case EAQECC_ERR_INVALID_ARGUMENT: return "invalid argument";
        case EAQECC_ERR_OUT_OF_RANGE: return "out of range";
        case EAQECC_ERR_UNAVAILABLE: return "unavailable";
        case EAQECC_ERR_BUDGET_EXCEEDED: return "budget exceeded";
        case EAQECC_ERR_FORMULA_MISMATCH: return "formula mismatch";
        case EAQECC_ERR_NULL_ARGUMENT: return "null argument";
        case EAQECC_ERR_BUFFER_TOO_SMALL: return "buffer too small";
        case EAQECC_ERR_IO: return "i/o error";
        case EAQECC_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

eaqecc_status eaqecc_setting_create(uint64_t p, uint32_t r, uint32_t extension_degree, eaqecc_metric metric,
                                    int eval_at_zero, eaqecc_setting** out) {
    if (!out) return null_arg("out");
    *out = nullptr;
    return guarded([&] {
        if (metric != EAQECC_EUCLIDEAN && metric != EAQECC_HERMITIAN)
            throw eaqecc::Error(eaqecc::Errc::invalid_argument, "unknown metric");
        const auto m = metric == EAQECC_HERMITIAN ? eaqecc::Metric::hermitian : eaqecc::Metric::euclidean;
        const auto s = eaqecc::make_setting(p, r, extension_degree, m, eval_at_zero != 0);
        *out = new eaqecc_setting{eaqecc::CosetContext(s)};
    });
}

eaqecc_status eaqecc_setting_create_family(eaqecc_family family, uint64_t q, int eval_at_zero, eaqecc_setting** out) {
    if (!out) return null_arg("out");
    *out = nullptr;
    return guarded([&] {
        const auto s = eaqecc::family_setting(to_family(family), q, eval_at_zero != 0);
        *out = new eaqecc_setting{eaqecc::CosetContext(s)};
    });
}

void eaqecc_setting_destroy(eaqecc_setting* setting) { delete setting; }

eaqecc_status eaqecc_setting_get_info(const eaqecc_setting* setting, eaqecc_setting_info* out) {
    if (!setting) return null_arg("setting");
    if (!out) return null_arg("out");
    return guarded([&] {
        const auto& s = setting->ctx.setting();
        out->p = s.p;
        out->r = s.r;
        out->extension_degree = s.extension_degree;
        out->metric = s.metric == eaqecc::Metric::hermitian ? EAQECC_HERMITIAN : EAQECC_EUCLIDEAN;
        out->eval_at_zero = s.eval_at_zero ? 1 : 0;
        out->n = s.n();
        out->length = s.length();
        out->multiplier = s.multiplier();
        out->quantum_alphabet = s.quantum_alphabet();
        out->coset_count = setting->ctx.size();
        const auto fam = eaqecc::family_of(s);
        out->family = !fam ? EAQECC_FAMILY_NONE : static_cast<eaqecc_family>(static_cast<int>(*fam));
    });
}

eaqecc_status eaqecc_coset_get(const eaqecc_setting* setting, size_t index, eaqecc_coset_info* info,
                               uint64_t* elements, size_t capacity, size_t* written) {
    if (!setting) return null_arg("setting");
    if (!info) return null_arg("info");
    eaqecc_status buffer_status = EAQECC_OK;
    const eaqecc_status st = guarded([&] {
        const auto& ctx = setting->ctx;
        const auto coset = ctx.table().coset(index);
        const auto cls = ctx.classify(index);
        info->min_rep = coset.min_rep;
        info->size = coset.size();
        info->partner = cls.partner;
        info->kind = static_cast<eaqecc_coset_kind>(static_cast<int>(cls.kind));
        if (written) *written = coset.size();
        if (elements) {
            if (capacity < coset.size()) {
                buffer_status = fail(EAQECC_ERR_BUFFER_TOO_SMALL, "element buffer too small");
                return;
            }
            std::copy(coset.elements.begin(), coset.elements.end(), elements);
        }
    });
    return st != EAQECC_OK ? st : buffer_status;
}

eaqecc_status eaqecc_index_of_rep(const eaqecc_setting* setting, uint64_t rep, size_t* index) {
    if (!setting) return null_arg("setting");
    if (!index) return null_arg("index");
    return guarded([&] { *index = setting->ctx.index_of_rep(rep); });
}

eaqecc_status eaqecc_compute_params(const eaqecc_setting* setting, size_t t, eaqecc_c_source source,
                                    eaqecc_params* out) {
    if (!setting) return null_arg("setting");
    if (!out) return null_arg("out");
    return guarded([&] { *out = to_c(eaqecc::eaqecc_params(setting->ctx, t, to_source(source))); });
}

eaqecc_status eaqecc_sweep(const eaqecc_setting* setting, eaqecc_c_source source, unsigned threads,
                           eaqecc_params* rows, size_t capacity, size_t* written) {
    if (!setting) return null_arg("setting");
    if (!rows) return null_arg("rows");
    if (capacity < setting->ctx.size()) return fail(EAQECC_ERR_BUFFER_TOO_SMALL, "sweep needs one row per coset");
    return guarded([&] {
        const auto result = eaqecc::sweep(setting->ctx, to_source(source), threads);
        for (size_t i = 0; i < result.size(); ++i) rows[i] = to_c(result[i]);
        if (written) *written = result.size();
    });
}

eaqecc_status eaqecc_closed_form_c(eaqecc_family family, uint64_t q, uint64_t m_t, int extended, uint64_t* c) {
    if (!c) return null_arg("c");
    return guarded([&] { *c = eaqecc::c_closed_form(eaqecc::make_formula_case(to_family(family), q, m_t, extended != 0)); });
}

eaqecc_status eaqecc_verify(const eaqecc_setting* setting, int use_matrix, unsigned threads, eaqecc_report** out) {
    if (!setting) return null_arg("setting");
    if (!out) return null_arg("out");
    *out = nullptr;
    return guarded([&] {
        *out = new eaqecc_report{eaqecc::verify_setting(setting->ctx, use_matrix != 0, threads)};
    });
}

void eaqecc_report_destroy(eaqecc_report* report) { delete report; }

size_t eaqecc_report_size(const eaqecc_report* report) { return report ? report->report.records.size() : 0; }

size_t eaqecc_report_mismatch_count(const eaqecc_report* report) {
    return report ? report->report.mismatches.size() : 0;
}

eaqecc_status eaqecc_report_get(const eaqecc_report* report, size_t index, eaqecc_record* out) {
    if (!report) return null_arg("report");
    if (!out) return null_arg("out");
    if (index >= report->report.records.size()) return fail(EAQECC_ERR_OUT_OF_RANGE, "record index out of range");
    const auto& rec = report->report.records[index];
    out->t = rec.t;
    out->m_t = rec.m_t;
    out->has_formula = rec.c_formula.has_value();
    out->c_formula = rec.c_formula.value_or(0);
    out->c_coset = rec.c_coset;
    out->has_matrix = rec.c_matrix.has_value();
    out->c_matrix = rec.c_matrix.value_or(0);
    out->agrees = rec.agrees() ? 1 : 0;
    return EAQECC_OK;
}

eaqecc_status eaqecc_dump_matrices(const eaqecc_setting* setting, size_t t, char* buffer, size_t capacity,
                                   size_t* needed) {
    if (!setting) return null_arg("setting");
    std::string text;
    const eaqecc_status st = guarded([&] {
        const auto& s = setting->ctx.setting();
        if (s.length() > eaqecc::kMatrixOracleMaxLength)
            throw eaqecc::Error(eaqecc::Errc::unavailable, "matrix dump limited to the matrix oracle scale");
        const auto ds = setting->ctx.defining_set(t);
        const auto field = eaqecc::FiniteField::make(s.p, s.field_degree());
        const auto e = eaqecc::subfield_code(s, ds.exponents, field);
        const auto dual = eaqecc::dual_basis(e, s.metric);
        text = "# E (" + std::to_string(e.rows()) + " x " + std::to_string(e.cols()) + ")\n" + e.to_exponent_grid() +
               "# dual (" + std::to_string(dual.rows()) + " x " + std::to_string(dual.cols()) + ")\n" +
               dual.to_exponent_grid();
    });
    if (st != EAQECC_OK) return st;
    if (needed) *needed = text.size() + 1;
    if (!buffer) return EAQECC_OK;
    if (capacity < text.size() + 1) return fail(EAQECC_ERR_BUFFER_TOO_SMALL, "matrix buffer too small");
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    return EAQECC_OK;
}

eaqecc_status eaqecc_match_table(const eaqecc_setting* setting, const char* fixture_path, eaqecc_table_row* rows,
                                 size_t capacity, size_t* count) {
    if (!setting) return null_arg("setting");
    if (!fixture_path) return null_arg("fixture_path");
    if (!count) return null_arg("count");
    std::error_code ec;
    if (!std::filesystem::is_regular_file(fixture_path, ec))
        return fail(EAQECC_ERR_IO, std::string("cannot read table fixture ") + fixture_path);
    std::vector<eaqecc::TableMatch> matches;
    const eaqecc_status st = guarded([&] {
        const auto fixture = eaqecc::load_table_fixture(fixture_path);
        matches = eaqecc::match_table(fixture, eaqecc::sweep(setting->ctx, eaqecc::CSource::coset));
    });
    if (st != EAQECC_OK) return st;
    *count = matches.size();
    if (!rows) return EAQECC_OK;
    if (capacity < matches.size()) return fail(EAQECC_ERR_BUFFER_TOO_SMALL, "table buffer too small");
    for (size_t i = 0; i < matches.size(); ++i) {
        const auto& m = matches[i];
        eaqecc_table_row& r = rows[i];
        r = {};
        r.q = m.row.q;
        r.n = m.row.n;
        r.k = m.row.k;
        r.d = m.row.d;
        r.c = m.row.c;
        r.matched = m.match.has_value();
        if (m.match) r.match = to_c(*m.match);
        r.has_nearest = m.nearest.has_value();
        if (m.nearest) r.nearest = to_c(*m.nearest);
    }
    return EAQECC_OK;
}

}  // extern "C"
