#include <gtest/gtest.h>

#include <set>

#include "brute_oracle.hpp"
#include "eaqecc/arith.hpp"
#include "eaqecc/closed_form.hpp"
#include "eaqecc/cosets.hpp"
#include "test_util.hpp"

namespace eaqecc {
namespace {

using Vec = std::vector<std::uint64_t>;

TEST(RsHermitianTests, Examples) {
    EXPECT_EQ(c_rs_hermitian(3, 5, false), 5u);
    for (std::uint64_t q : {2, 3, 4, 5, 7}) EXPECT_EQ(c_rs_hermitian(q, 0, false), 1u);
    EXPECT_EQ(c_rs_hermitian(2, 1, false), 2u);
    EXPECT_EQ(c_rs_hermitian(2, 1, true), 1u);
}

TEST(RsHermitianTests, Errors) {
    EXPECT_ERRC(c_rs_hermitian(3, 8, false), Errc::out_of_range);
    EXPECT_ERRC(make_formula_case(Family::rs_hermitian, 6, 1, false), Errc::invalid_argument);
}

TEST(EuclidCountTests, Examples) {
    const auto a = euclid_pair_counts(2, 1, 0);
    EXPECT_EQ(a.count_lt, 0);
    EXPECT_EQ(a.overcount, 0);
    EXPECT_EQ(a.count_eq, 1);
    const auto b = euclid_pair_counts(3, 2, 0);
    EXPECT_EQ(b.count_lt, 0);
    EXPECT_EQ(b.overcount, 0);
    EXPECT_EQ(b.count_eq, 1);
    for (std::uint64_t q : {2, 3, 7}) {
        const auto z = euclid_pair_counts(q, 0, 0);
        EXPECT_EQ(z.count_lt - z.overcount + z.count_eq, 0);
    }
}

TEST(EuclidCountTests, SpecialExamples) {
    const auto a = euclid_special_counts(3, 2);
    EXPECT_EQ(a.sym1, 0);
    EXPECT_EQ(a.sr1, 0);
    EXPECT_EQ(a.sym2, 1);
    const auto b = euclid_special_counts(2, 1);
    EXPECT_EQ(b.sym1, 0);
    EXPECT_EQ(b.sr1, 0);
    EXPECT_EQ(b.sym2, 1);
    const auto c = euclid_special_counts(3, 0);
    EXPECT_EQ(c.sym1, 0);
    EXPECT_EQ(c.sr1, 0);
    EXPECT_EQ(c.sym2, 0);
}

// The pair counts, summed, give the number of nonzero minimal representatives
// a <= m_t with a_0 + a_1 >= q - 1.
TEST(EuclidCountTests, PairCountsMatchEnumeration) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        const auto b = brute::bch_euclidean(q);
        const auto reps = brute::min_reps(b.n, b.mult);
        for (std::uint64_t m : reps) {
            const auto d = brute::digits(m, q, 2);
            const auto pc = euclid_pair_counts(q, d[0], d[1]);
            std::int64_t want = 0;
            for (std::uint64_t a : reps) {
                const auto ad = brute::digits(a, q, 2);
                if (a != 0 && a <= m && ad[0] + ad[1] >= q - 1) ++want;
            }
            EXPECT_EQ(pc.count_lt - pc.overcount + pc.count_eq, want) << "q=" << q << " m_t=" << m;
        }
    }
}

TEST(EuclidCountTests, SpecialCountsMatchEnumeration) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        const auto b = brute::bch_euclidean(q);
        const auto reps = brute::min_reps(b.n, b.mult);
        for (std::uint64_t m : reps) {
            std::int64_t sr1 = 0, sym2 = 0, sym_single_nonzero = 0;
            for (std::uint64_t a : reps) {
                if (a > m) break;
                const auto size = brute::orbit(a, b.n, b.mult).size();
                const char k = brute::kind(a, b.n, b.mult, b.qbase);
                if (size == 1 && k == 'R') ++sr1;
                if (size == 2 && k == 'S') ++sym2;
                if (size == 1 && k == 'S' && a != 0) ++sym_single_nonzero;
            }
            const auto sc = euclid_special_counts(q, m);
            EXPECT_EQ(sc.sr1, sr1) << "q=" << q << " m_t=" << m;
            EXPECT_EQ(sc.sym2, sym2) << "q=" << q << " m_t=" << m;
            EXPECT_EQ(sc.sym1, sym_single_nonzero) << "q=" << q << " m_t=" << m;
        }
    }
}

TEST(BchEuclideanTests, Examples) {
    EXPECT_EQ(c_bch_euclidean(2, 1, false), 3u);
    EXPECT_EQ(c_bch_euclidean(3, 2, false), 3u);
    EXPECT_EQ(c_bch_euclidean(4, 0, false), 1u);
    EXPECT_EQ(c_bch_euclidean(4, 0, true), 0u);
}

TEST(BchEuclideanTests, RejectsNonRepresentative) {
    EXPECT_ERRC(c_bch_euclidean(3, 6, false), Errc::invalid_argument);
    EXPECT_ERRC(c_bch_euclidean(3, 8, false), Errc::out_of_range);
}

TEST(InterludeTests, Examples) {
    EXPECT_EQ(interlude_elements(1, 0, 2), (Vec{6, 7}));
    EXPECT_EQ(interlude_elements(0, 0, 2), (Vec{1, 2, 3}));
    for (std::uint64_t q : {2, 3, 4, 5}) {
        const auto e = interlude_elements(0, q - 1, q);
        EXPECT_EQ(e.size(), q - 1);
        for (std::uint64_t i = 1; i < q; ++i) EXPECT_EQ(e[i - 1], from_qadic({i, q - 1, 0, q - 1}, q));
    }
    EXPECT_EQ(sr_count_interlude(1, 0, 2), 2u);
    EXPECT_EQ(sr_count_interlude(0, 0, 5), 0u);
    for (std::uint64_t q : {2, 3, 4, 5, 7}) EXPECT_EQ(sr_count_interlude(q - 1, 0, q), q * q - q);
}

TEST(InterludeTests, Errors) {
    EXPECT_ERRC(interlude_elements(2, 2, 3), Errc::invalid_argument);
    EXPECT_ERRC(interlude_elements(3, 0, 3), Errc::invalid_argument);
    EXPECT_ERRC(sr_count_interlude(0, 3, 3), Errc::invalid_argument);
}

// Each interlude is exactly the set of size-two minimal representatives strictly
// between its bounding singletons, and sr_count_interlude counts its SR members.
TEST(InterludeTests, MatchesEnumeration) {
    for (std::uint64_t q : {2, 3, 4, 5}) {
        const auto b = brute::bch_hermitian(q);
        const auto reps = brute::min_reps(b.n, b.mult);
        for (std::uint64_t a3 = 0; a3 < q; ++a3) {
            for (std::uint64_t a2 = 0; a2 < q; ++a2) {
                if (a2 == q - 1 && a3 == q - 1) continue;
                const std::uint64_t lo = from_qadic({a2, a3, a2, a3}, q);
                const std::uint64_t hi =
                    a2 < q - 1 ? from_qadic({a2 + 1, a3, a2 + 1, a3}, q) : from_qadic({0, a3 + 1, 0, a3 + 1}, q);
                Vec want;
                std::uint64_t sr = 0;
                for (std::uint64_t x : reps) {
                    if (x <= lo || x >= hi || brute::orbit(x, b.n, b.mult).size() != 2) continue;
                    want.push_back(x);
                    sr += brute::kind(x, b.n, b.mult, b.qbase) == 'R';
                }
                EXPECT_EQ(interlude_elements(a2, a3, q), want) << "q=" << q << " a2=" << a2 << " a3=" << a3;
                EXPECT_EQ(sr_count_interlude(a2, a3, q), sr) << "q=" << q << " a2=" << a2 << " a3=" << a3;
            }
        }
    }
}

TEST(BchHermitianTests, Examples) {
    EXPECT_EQ(c_bch_hermitian(2, 7, false), 10u);
    EXPECT_EQ(c_bch_hermitian(3, 1, false), 1u);
    EXPECT_EQ(c_bch_hermitian(2, 11, false), 15u);
    EXPECT_EQ(c_bch_hermitian(2, 10, false), 11u);
    EXPECT_EQ(c_bch_hermitian(2, 0, true), 0u);
}

TEST(BchHermitianTests, RejectsNonRepresentative) {
    EXPECT_ERRC(c_bch_hermitian(2, 4, false), Errc::invalid_argument);
    EXPECT_ERRC(c_bch_hermitian(2, 15, false), Errc::out_of_range);
}

// Each named case-3 sub-term counts what it claims to, checked against enumeration.
TEST(BchHermitianTests, CaseThreeTermsMatchEnumeration) {
    for (std::uint64_t q : {2, 3, 4, 5}) {
        const auto b = brute::bch_hermitian(q);
        const auto reps = brute::min_reps(b.n, b.mult);
        const std::uint64_t start = q * q * q + q;
        for (std::uint64_t m : reps) {
            if (m < start) continue;
            const std::uint64_t b3 = brute::digits(m, q, 4)[3];
            std::int64_t singles = 0, full = 0, partial = 0;
            for (std::uint64_t x : reps) {
                if (x < start || x > m) continue;
                const char k = brute::kind(x, b.n, b.mult, b.qbase);
                if (brute::orbit(x, b.n, b.mult).size() == 1) {
                    singles += k == 'S' ? 1 : k == 'R' ? 2 : 0;
                } else if (k == 'R') {
                    (brute::digits(x, q, 4)[3] < b3 ? full : partial) += 1;
                }
            }
            for (bool ext : {false, true}) {
                const auto terms = hermitian_case3_terms(q, m, ext);
                EXPECT_EQ(terms.base, (ext ? 0 : 1) + 1 + 4 * static_cast<std::int64_t>(q * q - q));
                EXPECT_EQ(terms.singletons, singles) << "q=" << q << " m_t=" << m;
                EXPECT_EQ(terms.full_interludes, full) << "q=" << q << " m_t=" << m;
                EXPECT_EQ(terms.partial_interludes, partial) << "q=" << q << " m_t=" << m;
            }
        }
    }
}

// The printed case-3 tail subtracts b_2 + b_3 q + b_2 q^3 + b_3 q^3 from m_t.
// A witness with b_2 > 0 and b_2 + b_3 >= q - 1 separates that reading from
// the interlude start b_2 + b_3 q + b_2 q^2 + b_3 q^3; only the latter agrees
// with the coset oracle.
TEST(BchHermitianTests, InterludeStartReading) {
    const std::uint64_t q = 3;
    const auto ctx = CosetContext(family_setting(Family::bch_hermitian, q, false));
    std::size_t witnesses = 0;
    for (std::size_t t = 0; t < ctx.size(); ++t) {
        const std::uint64_t m = ctx.table().reps[t];
        const auto d = qadic(m, q, 4);
        if (m < q * q * q + q || d[2] == 0 || d[2] + d[3] < q - 1 || ctx.table().sizes[t] != 2) continue;
        ++witnesses;
        const auto c = static_cast<std::int64_t>(c_by_cosets(ctx.defining_set(t)));
        const auto formula = static_cast<std::int64_t>(c_bch_hermitian(q, m, false));
        const auto literal = formula - 4 * static_cast<std::int64_t>(d[2] * (q * q * q - q * q));
        EXPECT_EQ(formula, c) << "m_t=" << m;
        EXPECT_NE(literal, c) << "m_t=" << m;
    }
    EXPECT_GT(witnesses, 0u);
}

TEST(BchHermitianTests, CaseTwoAdditivity) {
    for (std::uint64_t q : {2, 3, 4, 5, 7}) {
        const CosetContext ctx(family_setting(Family::bch_hermitian, q, false));
        const std::uint64_t lo = (q * q * q * q - 1) / (q + 1);
        std::optional<std::uint64_t> prev;
        for (std::uint64_t m : ctx.table().reps) {
            if (m < lo || m >= q * q * q + q) continue;
            const auto c = c_bch_hermitian(q, m, false);
            if (prev) {
                EXPECT_EQ(c, *prev + 4) << "q=" << q << " m_t=" << m;
            }
            prev = c;
        }
        EXPECT_TRUE(prev.has_value());
    }
}

struct FamilyRange {
    Family family;
    std::vector<std::uint64_t> qs;
};

const std::vector<FamilyRange> kOracleRanges = {
    {Family::rs_hermitian, {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}},
    {Family::bch_euclidean, {2, 3, 4, 5, 7, 8, 9}},
    {Family::bch_hermitian, {2, 3, 4, 5}},
};

TEST(ClosedFormOracleTests, AgreesWithCosetOracle) {
    for (const auto& range : kOracleRanges) {
        for (std::uint64_t q : range.qs) {
            for (bool ext : {false, true}) {
                const CosetContext ctx(family_setting(range.family, q, ext));
                for (std::size_t t = 0; t < ctx.size(); ++t) {
                    const std::uint64_t m = ctx.table().reps[t];
                    EXPECT_EQ(c_closed_form(make_formula_case(range.family, q, m, ext)),
                              c_by_cosets(ctx.defining_set(t)))
                        << to_string(range.family) << " q=" << q << " m_t=" << m << " ext=" << ext;
                }
            }
        }
    }
}

TEST(ClosedFormOracleTests, AgreesWithElementwiseHull) {
    for (std::uint64_t q : {2, 3}) {
        const auto b = brute::bch_hermitian(q);
        const auto reps = brute::min_reps(b.n, b.mult);
        for (std::size_t t = 0; t < reps.size(); ++t)
            EXPECT_EQ(c_bch_hermitian(q, reps[t], false), brute::c_direct(b, t)) << "q=" << q << " t=" << t;
    }
    for (std::uint64_t q : {2, 3, 4, 5, 7}) {
        const auto b = brute::rs_hermitian(q);
        for (std::size_t t = 0; t + 1 < q * q; ++t)
            EXPECT_EQ(c_rs_hermitian(q, t, false), brute::c_direct(b, t)) << "q=" << q << " t=" << t;
    }
}

TEST(ClosedFormOracleTests, ExtendedIsOneLess) {
    for (const auto& range : kOracleRanges) {
        for (std::uint64_t q : range.qs) {
            const CosetContext ctx(family_setting(range.family, q, false));
            for (std::uint64_t m : ctx.table().reps) {
                EXPECT_EQ(c_closed_form(make_formula_case(range.family, q, m, true)) + 1,
                          c_closed_form(make_formula_case(range.family, q, m, false)));
            }
        }
    }
}

TEST(FormulaCaseTests, Digits) {
    EXPECT_EQ(make_formula_case(Family::bch_hermitian, 2, 11, false).digits, (Vec{1, 1, 0, 1}));
    EXPECT_EQ(make_formula_case(Family::rs_hermitian, 3, 5, true).digits, (Vec{2, 1}));
    EXPECT_EQ(make_formula_case(Family::bch_euclidean, 3, 2, false).digits, (Vec{2, 0}));
}

}  // namespace
}  // namespace eaqecc
