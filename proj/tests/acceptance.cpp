// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance                 run all criteria
//   acceptance --criterion N   run only criterion N

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eaqecc/closed_form.hpp"
#include "eaqecc/error.hpp"
#include "eaqecc/cosets.hpp"
#include "eaqecc/field.hpp"
#include "eaqecc/field_oracle.hpp"
#include "eaqecc/params.hpp"
#include "eaqecc/table_fixture.hpp"
#include "lemma_checks.hpp"

namespace {

using namespace eaqecc;
using Vec = std::vector<std::uint64_t>;

constexpr std::uint64_t kBudget = std::uint64_t{1} << 22;

// Collects the first few failures of a criterion.
class Ledger {
public:
    void fail(const std::string& what) {
        if (failures_++ < 8) notes_ << "\n    " << what;
    }
    void expect(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
    bool ok() const { return failures_ == 0; }
    std::size_t failures() const { return failures_; }
    std::string notes() const { return notes_.str(); }

private:
    std::size_t failures_ = 0;
    std::ostringstream notes_;
};

struct Outcome {
    bool pass = false;
    std::string summary;
    std::string notes;
};

struct FamilyRange {
    Family family;
    Vec qs;
};

std::string label(Family f, std::uint64_t q, bool ext) {
    return std::string(to_string(f)) + " q=" + std::to_string(q) + (ext ? " ext" : "");
}

std::shared_ptr<const FiniteField> field_of(const CodeSetting& s) { return FiniteField::make(s.p, s.field_degree()); }

bool same_rowspace(const FieldMatrix& a, const FieldMatrix& b) {
    const auto ra = rank(a);
    return ra == rank(b) && rank(stack(a, b)) == ra;
}

const std::vector<FamilyRange> kFormulaRanges = {
    {Family::rs_hermitian, {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}},
    {Family::bch_euclidean, {2, 3, 4, 5, 7, 8, 9}},
    {Family::bch_hermitian, {2, 3, 4, 5}},
};

const std::vector<FamilyRange> kMatrixRanges = {
    {Family::rs_hermitian, {2, 3, 4, 5}},
    {Family::bch_euclidean, {2, 3, 4, 5}},
    {Family::bch_hermitian, {2, 3}},
};

Outcome worked_example() {
    Ledger l;
    const auto s = make_setting(2, 2, 2, Metric::hermitian, false);
    const CosetContext ctx(s);
    const std::vector<Vec> cosets = {{0}, {1, 4}, {2, 8}, {3, 12}, {5}, {6, 9}, {7, 13}, {10}, {11, 14}};
    l.expect(ctx.size() == cosets.size(), "coset count " + std::to_string(ctx.size()));
    for (std::size_t i = 0; i < ctx.size() && i < cosets.size(); ++i)
        l.expect(ctx.table().coset(i).elements == cosets[i], "coset I_" + std::to_string(cosets[i][0]));

    const auto ds = ctx.defining_set(6);
    l.expect(ds.m_t == 7, "m_6 = " + std::to_string(ds.m_t));
    l.expect(dual_defining_set(ds) == Vec{2, 8, 10}, "dual defining set");

    const auto f = field_of(s);
    const auto e = subfield_code(s, ds.exponents, f);
    const auto dual = dual_basis(e, Metric::hermitian);
    l.expect(rank(e) == 12, "dim E = " + std::to_string(rank(e)));
    l.expect(dual.cols() == 15 && rank(dual) == 3, "dual is not a [15,3] code");
    const auto d = exhaustive_min_distance(dual, kBudget);
    l.expect(d == 11, "exhaustive d = " + std::to_string(d));

    const auto part = partition_rl(ds);
    l.expect(part.right == Vec{2, 8}, "I_R");
    l.expect(part.left.size() == 10, "#I_L = " + std::to_string(part.left.size()));
    l.expect(c_by_cosets(ds) == 10, "c by cosets");
    l.expect(c_by_matrices(s, 6) == 10, "c by matrices");

    for (CSource src : {CSource::formula, CSource::coset, CSource::matrix}) {
        const auto p = eaqecc_params(ctx, 6, src);
        l.expect(p.q == 2 && p.n == 15 && p.k == 1 && p.d_lower == 11 && p.c == 10,
                 "params from source " + std::to_string(static_cast<int>(src)));
    }
    return {l.ok(), "[[15,1,>=11;10]]_2 from the coset table, dual set {2,8,10}, [15,3,11]_4", l.notes()};
}

Outcome table_reproduction() {
    Ledger l;
    std::size_t total = 0;
    std::size_t matched = 0;
    for (std::uint64_t q : {3, 4, 5, 7}) {
        const auto rows = load_table_fixture(std::string(EAQECC_FIXTURE_DIR) + "/" + table_fixture_name(q));
        const CosetContext ctx(family_setting(Family::bch_hermitian, q, false));
        const auto sweep_rows = sweep(ctx, CSource::coset);
        for (const auto& m : match_table(rows, sweep_rows)) {
            ++total;
            if (m.match) {
                ++matched;
                continue;
            }
            std::ostringstream s;
            s << "q=" << q << " unmatched [[" << m.row.n << ',' << m.row.k << ',' << m.row.d << ';' << m.row.c << "]]";
            if (m.nearest)
                s << ", nearest sweep row t=" << m.nearest->t << " [[" << m.nearest->n << ',' << m.nearest->k
                  << ",>=" << m.nearest->d_lower << ';' << m.nearest->c << "]]";
            l.fail(s.str());
        }
    }
    return {l.ok() && total == 84, std::to_string(matched) + "/" + std::to_string(total) + " table rows matched",
            l.notes()};
}

Outcome formula_vs_cosets() {
    Ledger l;
    std::size_t checked = 0;
    for (const auto& range : kFormulaRanges) {
        for (std::uint64_t q : range.qs) {
            for (bool ext : {false, true}) {
                const CosetContext ctx(family_setting(range.family, q, ext));
                for (std::size_t t = 0; t < ctx.size(); ++t, ++checked) {
                    const auto m = ctx.table().reps[t];
                    const auto formula = c_closed_form(make_formula_case(range.family, q, m, ext));
                    const auto oracle = c_by_cosets(ctx.defining_set(t));
                    l.expect(formula == oracle, label(range.family, q, ext) + " m_t=" + std::to_string(m) +
                                                    ": formula " + std::to_string(formula) + ", cosets " +
                                                    std::to_string(oracle));
                }
            }
        }
    }
    return {l.ok(), std::to_string(checked) + " (setting, t) pairs, " + std::to_string(l.failures()) + " mismatches",
            l.notes()};
}

Outcome cosets_vs_matrices() {
    Ledger l;
    std::size_t checked = 0;
    for (const auto& range : kMatrixRanges) {
        for (std::uint64_t q : range.qs) {
            for (bool ext : {false, true}) {
                const auto s = family_setting(range.family, q, ext);
                const auto f = field_of(s);
                const CosetContext ctx(s);
                for (std::size_t t = 0; t < ctx.size(); ++t, ++checked) {
                    const auto ds = ctx.defining_set(t);
                    const auto by_cosets = c_by_cosets(ds);
                    const auto by_matrices = c_by_matrices(s, ds.exponents, f);
                    l.expect(by_cosets == by_matrices, label(range.family, q, ext) + " t=" + std::to_string(t) +
                                                           ": cosets " + std::to_string(by_cosets) + ", matrices " +
                                                           std::to_string(by_matrices));
                }
            }
        }
    }
    return {l.ok(), std::to_string(checked) + " (setting, t) pairs, " + std::to_string(l.failures()) + " mismatches",
            l.notes()};
}

Outcome lemma_suites() {
    Ledger l;
    std::size_t checked = 0;
    for (const auto& r : lemmas::all()) {
        checked += r.checked;
        l.expect(r.ok() && r.checked > 0, r.name + ": " + std::to_string(r.counterexamples) + " counterexamples" +
                                              (r.first_witness.empty() ? "" : ", first " + r.first_witness));
    }
    return {l.ok(), std::to_string(lemmas::all().size()) + " lemmas, " + std::to_string(checked) + " instances",
            l.notes()};
}

Outcome structural_identities() {
    Ledger l;
    std::size_t checked = 0;

    // extension offset and the dimension identity, on every formula-range setting
    for (const auto& range : kFormulaRanges) {
        for (std::uint64_t q : range.qs) {
            const CosetContext plain(family_setting(range.family, q, false));
            const CosetContext ext(family_setting(range.family, q, true));
            for (std::size_t t = 0; t < plain.size(); ++t, ++checked) {
                const auto a = eaqecc_params(plain, t, CSource::coset);
                const auto b = eaqecc_params(ext, t, CSource::coset);
                const std::string at = label(range.family, q, false) + " t=" + std::to_string(t);
                l.expect(b.c + 1 == a.c && b.n == a.n + 1 && b.k == a.k, at + ": extension offset");
                const auto dim = static_cast<std::int64_t>(subfield_dimension(plain.defining_set(t)));
                l.expect(a.k + 2 * dim - static_cast<std::int64_t>(a.c) == static_cast<std::int64_t>(a.n),
                         at + ": k + 2 dim - c != n");
                l.expect(b.k + 2 * dim - static_cast<std::int64_t>(b.c) == static_cast<std::int64_t>(b.n),
                         at + " ext: k + 2 dim - c != n");
            }
        }
    }

    // dual of E over Delta spans E over the dual defining set
    for (const auto& range : kMatrixRanges) {
        for (std::uint64_t q : range.qs) {
            const auto s = family_setting(range.family, q, false);
            const auto f = field_of(s);
            const CosetContext ctx(s);
            for (std::size_t t = 0; t < ctx.size(); ++t, ++checked) {
                const auto ds = ctx.defining_set(t);
                const auto dual = dual_basis(subfield_code(s, ds.exponents, f), s.metric);
                const auto dual_set = dual_defining_set(ds);
                const bool same = dual_set.empty() ? rank(dual) == 0
                                                   : same_rowspace(dual, subfield_code(s, dual_set, f));
                l.expect(same, label(range.family, q, false) + " t=" + std::to_string(t) + ": dual basis");
            }
        }
    }

    // designed distance against exhaustive distance, length 15
    std::size_t skipped = 0;
    for (Family fam : {Family::rs_hermitian, Family::bch_euclidean, Family::bch_hermitian}) {
        const auto s = family_setting(fam, fam == Family::bch_hermitian ? 2 : 4, false);
        const auto f = field_of(s);
        const CosetContext ctx(s);
        for (std::size_t t = 0; t + 1 < ctx.size(); ++t) {
            const auto ds = ctx.defining_set(t);
            const auto code = dual_basis(subfield_code(s, ds.exponents, f), s.metric);
            try {
                const auto d = min_distance(code, kBudget);
                ++checked;
                l.expect(d >= bch_bound(ds), label(fam, s.quantum_alphabet(), false) + " t=" + std::to_string(t) +
                                                 ": d = " + std::to_string(d) + " below " +
                                                 std::to_string(bch_bound(ds)));
            } catch (const Error& e) {
                if (e.code() != Errc::budget_exceeded) throw;
                ++skipped;
            }
        }
    }
    return {l.ok(),
            std::to_string(checked) + " identities checked, " + std::to_string(skipped) +
                " distance checks beyond the enumeration budget",
            l.notes()};
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
};

bool report(const Criterion& c) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        out = c.run();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what(), ""};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = out.pass && in_time;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs << " s";
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << out.summary << " ["
              << time.str() << (in_time ? "" : ", over limit") << "]" << out.notes << std::endl;
    return pass;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "worked example", 1.0, worked_example},
        {2, "table reproduction", 10.0, table_reproduction},
        {3, "formula vs coset oracle", 60.0, formula_vs_cosets},
        {4, "coset vs matrix oracle", 300.0, cosets_vs_matrices},
        {5, "lemma suites", 600.0, lemma_suites},
        {6, "structural identities", 600.0, structural_identities},
    };
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 1;
        }
    }
    if (only < 0 || only > static_cast<int>(criteria.size())) {
        std::cerr << "acceptance: no criterion " << only << '\n';
        return 1;
    }
    bool all = true;
    for (const auto& c : criteria)
        if (only == 0 || only == c.id) all = report(c) && all;
    return all ? 0 : 1;
}
