#include <gtest/gtest.h>

#include <chrono>

#include "arcpat/enumerate.hpp"
#include "arcpat/formulas.hpp"

using namespace arcpat;

namespace {

std::vector<Integer> ints(std::initializer_list<long> c) {
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return v;
}

std::vector<Integer> head(FormulaId id, int order, int k = 0) { return coefficients(id, order, k); }

bool all_zero(const AuxSeries& s, int upto) {
    for (int i = 0; i <= upto; ++i)
        if (!s[i].is_zero()) return false;
    return true;
}

}  // namespace

TEST(Formulas, NamesRoundTrip) {
    for (auto id : all_formulas()) EXPECT_EQ(parse_formula(to_string(id)), id);
    EXPECT_EQ(all_formulas().size(), 17u);
    try {
        parse_formula("m999");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::parse);
    }
}

TEST(Formulas, FrozenValues) {
    EXPECT_EQ(head(FormulaId::m312, 9), ints({1, 1, 3, 14, 83, 570, 4318, 35068, 299907, 2668994}));
    EXPECT_EQ(head(FormulaId::p312, 11), ints({1, 1, 2, 5, 15, 52, 202, 858, 3909, 18822, 94712, 493834}));
    EXPECT_EQ(head(FormulaId::catalan_v, 4), ints({1, 1, 2, 5, 14}));
    EXPECT_EQ(head(FormulaId::maps, 5), ints({1, 2, 9, 54, 378, 2916}));
    EXPECT_EQ(head(FormulaId::s1342, 7), ints({1, 1, 2, 6, 23, 103, 512, 2740}));
    EXPECT_EQ(head(FormulaId::s3124, 7), head(FormulaId::s1342, 7));
    EXPECT_EQ(head(FormulaId::classI_m, 7), ints({1, 1, 3, 13, 67, 381, 2307, 14589}));
    EXPECT_EQ(head(FormulaId::classII_III_m, 7), ints({1, 1, 3, 13, 66, 364, 2112, 12688}));
    EXPECT_EQ(head(FormulaId::classIV_m, 7), ints({1, 1, 3, 13, 63, 313, 1563, 7813}));
    EXPECT_EQ(head(FormulaId::classIV_exact, 7)[7], 7813);
    EXPECT_EQ(head(FormulaId::classV_m, 7), ints({1, 1, 3, 13, 68, 399, 2528, 16916}));
    EXPECT_EQ(head(FormulaId::classI_p, 8), ints({1, 1, 2, 5, 15, 52, 201, 841, 3726}));
    EXPECT_EQ(head(FormulaId::classII_III_p, 8)[8], 3725);
    EXPECT_EQ(head(FormulaId::classIV_p, 8)[8], 3722);
    EXPECT_EQ(head(FormulaId::gouyou_m123, 6), ints({1, 1, 3, 14, 84, 594, 4719}));
    EXPECT_EQ(head(FormulaId::dnk_pairs, 3, 1), ints({1, 3, 14, 84}));
}

TEST(Formulas, RoutesAgreeThroughTwenty) {
    for (auto id : all_formulas()) {
        const int order = std::min(20, order_cap(id));
        auto rs = routes(id, order);
        ASSERT_FALSE(rs.empty()) << to_string(id);
        for (const auto& r : rs) {
            ASSERT_EQ(r.values.size(), static_cast<size_t>(order + 1)) << to_string(id) << " " << r.name;
            EXPECT_EQ(r.values, rs.front().values) << to_string(id) << ": " << r.name << " vs " << rs.front().name;
        }
    }
}

TEST(Formulas, MostFormulasHaveSeveralRoutes) {
    for (auto id : all_formulas()) {
        if (id == FormulaId::classV_m) continue;
        EXPECT_GE(routes(id, 6).size(), 2u) << to_string(id);
    }
}

TEST(Formulas, CrossCheckAgainstBruteForce) {
    auto a = cross_check(FormulaId::p312, 9);
    EXPECT_TRUE(a.ok());
    EXPECT_EQ(a.rows.size(), 10u);
    EXPECT_TRUE(cross_check(FormulaId::classV_m, 6).ok());
    EXPECT_TRUE(cross_check(FormulaId::gouyou_m123, 6).ok());
    EXPECT_TRUE(cross_check(FormulaId::s3124, 8).ok());
    EXPECT_TRUE(cross_check(FormulaId::dnk_pairs, 4, 2).ok());
}

TEST(Formulas, CapsAndArguments) {
    try {
        coefficients(FormulaId::catalan_v, order_cap(FormulaId::catalan_v) + 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::resource_cap);
    }
    EXPECT_LE(order_cap(FormulaId::classV_m), order_cap(FormulaId::m312));
    EXPECT_THROW(coefficients(FormulaId::m312, 5, 1), Error);
    EXPECT_THROW(coefficients(FormulaId::m312, -1), Error);
}

TEST(Formulas, ToIntegersRejectsFractions) {
    TruncSeries s(1);
    s[0] = 1;
    s[1] = Rational(1, 2);
    EXPECT_THROW(to_integers(s), Error);
}

TEST(Generating, HCubicVanishesWithSymbolicV) {
    const int n = 10;
    AuxSeries c = gf::catalan_v(n);
    AuxSeries h = set_var(fe_iterate(Equation::K_lt2, n), AuxPoly::U, 0);
    EXPECT_TRUE(all_zero(evaluate_poly(gf::h_cubic(c), h), n));
}

TEST(Generating, SRootGivesValleyRefinedK) {
    const int n = 9;
    AuxSeries k = gf::k0_from_s(gf::s_root(n));
    AuxSeries direct = set_var(fe_iterate(Equation::K_Llv, n), AuxPoly::U, 0);
    ASSERT_GE(k.order(), n - 1);
    for (int i = 0; i <= n - 1; ++i) EXPECT_EQ(k[i], direct[i]) << "z^" << i;
    EXPECT_TRUE(all_zero(evaluate_poly(gf::s_cubic(n), gf::s_root(n)), n));
}

TEST(Generating, CatalanClosedFormMatchesValleys) {
    auto a = gf::catalan_v(8), b = gf::catalan_v_closed(8);
    for (int i = 0; i <= 8; ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(Generating, ClassIBinomialSum) {
    // Matchings of size 2 with both class I patterns avoided, summed by valleys.
    auto a = gf::A1(4);
    Integer total = 0;
    a[2].for_each([&](int, int, int, const Rational& q) { total += q.get_num(); });
    EXPECT_EQ(total, 3);
    EXPECT_EQ(head(FormulaId::classI_m, 3)[3], 13);
}

TEST(Generating, DnkAtZeroIsGouyou) {
    EXPECT_EQ(gf::dnk_pairs(8, 0), head(FormulaId::gouyou_m123, 8));
    for (int k = 0; k <= 2; ++k) {
        auto d = gf::dnk_pairs(5 - k, k);
        for (int n = 0; n + k <= 5; ++n) {
            CountOptions o;
            o.k = k;
            EXPECT_EQ(d[n], static_cast<long>(count(Family::path_pair, n, {}, o).total)) << n << " " << k;
        }
    }
}

TEST(Generating, SplitAtReturnsOfMapsIsL312) {
    auto k = set_var(fe_iterate(Equation::K_Llv, 6), AuxPoly::U, 0);
    auto l = gf::L312(6);
    auto s = gf::split_at_returns(k);
    for (int i = 0; i <= 6; ++i) EXPECT_EQ(s[i], l[i]);
    EXPECT_EQ(to_trunc(set_var(l, AuxPoly::V, 1))[5], 570);
}
