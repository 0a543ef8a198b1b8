#include <gtest/gtest.h>

#include <random>

#include "arcpat/series.hpp"

using namespace arcpat;

namespace {

TruncSeries from(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return TruncSeries(v);
}

TruncSeries random_series(std::mt19937& rng, int order, bool unit) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    TruncSeries s(order);
    for (int i = 0; i <= order; ++i) {
        s[i] = Rational(num(rng), den(rng));
        s[i].canonicalize();
    }
    if (unit) s[0] = 1;
    return s;
}

const auto U = AuxPoly::U;
const auto V = AuxPoly::V;
const auto T = AuxPoly::T;

}  // namespace

TEST(Rational, Printing) {
    EXPECT_EQ(to_string(Rational(3)), "3");
    Rational half(-2, 4);
    half.canonicalize();
    EXPECT_EQ(to_string(half), "-1/2");
    EXPECT_EQ(binomial(10, 3), 120);
}

TEST(AuxPoly, Arithmetic) {
    AuxPoly u = AuxPoly::var(U), v = AuxPoly::var(V);
    AuxPoly p = (u + v) * (u - v);
    EXPECT_EQ(p, AuxPoly::var(U, 2) - AuxPoly::var(V, 2));
    EXPECT_EQ(p.coeff(2, 0, 0), 1);
    EXPECT_EQ(p.degree(V), 2);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ((p - p).degree(U), -1);
    EXPECT_EQ(p.set_var(U, 2), AuxPoly(4) - AuxPoly::var(V, 2));
    EXPECT_FALSE(p.constant().has_value());
    EXPECT_EQ(AuxPoly(Rational(3, 2)).constant(), Rational(3, 2));
}

TEST(AuxPoly, DivideVar) {
    AuxPoly p = AuxPoly::monomial(2, 1, 0, 3) + AuxPoly::monomial(1, 0, 0, 5);
    EXPECT_EQ(p.divide_var(U), AuxPoly::monomial(1, 1, 0, 3) + AuxPoly(5));
    try {
        p.divide_var(V);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::not_divisible);
    }
}

TEST(AuxPoly, TuQuotient) {
    // t^3 -> t^3 (1 + u + u^2)
    AuxPoly t3 = AuxPoly::var(T, 3);
    EXPECT_EQ(t3.tu_quotient(), AuxPoly::monomial(0, 0, 3) + AuxPoly::monomial(1, 0, 3) + AuxPoly::monomial(2, 0, 3));
    EXPECT_TRUE(AuxPoly(7).tu_quotient().is_zero());
    EXPECT_THROW(AuxPoly::var(U).tu_quotient(), Error);
}

TEST(Series, InverseAndDivide) {
    auto one_minus_z = from({1, -1, 0, 0, 0});
    auto geo = inverse(one_minus_z);
    EXPECT_EQ(geo, from({1, 1, 1, 1, 1}));
    EXPECT_EQ(divide(from({1, 0, 0, 0, 0}), geo), one_minus_z);
    EXPECT_THROW(inverse(from({0, 1, 2})), Error);
}

TEST(Series, Shifts) {
    auto s = from({0, 0, 3, 4});
    EXPECT_EQ(s.shift_down(2), from({3, 4}));
    EXPECT_EQ(from({1, 2, 3}).shift_up(1), from({0, 1, 2}));
    try {
        s.shift_down(3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::not_divisible);
    }
}

TEST(Series, MixedOrdersTruncateToTheSmaller) {
    auto a = from({1, 1, 1, 1}), b = from({1, 2});
    EXPECT_EQ((a + b).order(), 1);
    EXPECT_EQ((a * b).order(), 1);
    EXPECT_THROW(b.truncate(3), Error);
}

TEST(Series, SqrtSquaresBack) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto s = random_series(rng, 12, true);
        auto r = sqrt(s);
        EXPECT_EQ(r * r, s);
        EXPECT_EQ(r[0], 1);
    }
    EXPECT_THROW(sqrt(from({4, 1})), Error);
}

TEST(Series, InverseTimesSelfIsOne) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto s = random_series(rng, 15, false);
        if (sgn(s[0]) == 0) s[0] = 1;
        auto one = s * inverse(s);
        EXPECT_EQ(one, TruncSeries::constant(1, 15));
    }
}

TEST(Series, PowAndCompose) {
    auto one_plus_z = from({1, 1, 0, 0, 0});
    EXPECT_EQ(pow(one_plus_z, 4), from({1, 4, 6, 4, 1}));
    EXPECT_EQ(pow(one_plus_z, 0), TruncSeries::constant(1, 4));
    // 1/(1-x) at x = 2z
    EXPECT_EQ(compose(from({1, 1, 1, 1, 1}), from({0, 2, 0, 0, 0})), from({1, 2, 4, 8, 16}));
    EXPECT_THROW(compose(from({1, 1}), from({1, 1})), Error);
}

TEST(Series, AlgebraicSolveCatalan) {
    // z C^2 - C + 1 = 0
    const int n = 10;
    std::vector<TruncSeries> p = {TruncSeries::constant(1, n), TruncSeries::constant(-1, n), TruncSeries::z(n)};
    auto c = algebraic_solve(p, 1, n);
    const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (int i = 0; i <= n; ++i) EXPECT_EQ(c[i], catalan[i]);
    EXPECT_EQ(evaluate_poly(p, c), TruncSeries(n));
}

TEST(Series, AlgebraicSolvePreconditions) {
    const int n = 5;
    // (F - 1)^2: double root
    std::vector<TruncSeries> p = {TruncSeries::constant(1, n), TruncSeries::constant(-2, n), TruncSeries::constant(1, n)};
    EXPECT_THROW(algebraic_solve(p, 1, n), Error);
    EXPECT_THROW(algebraic_solve(p, 3, n), Error);  // not a root
}

TEST(Series, PartitionTransformOfCatalan) {
    // Noncrossing matchings by valleys go to noncrossing partitions.
    auto c = fe_iterate(Equation::C_valleys, 9);
    auto nc = partition_transform(c, 10);
    const long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (int i = 0; i <= 10; ++i) EXPECT_EQ(nc[i], expected[i]) << i;
}

TEST(Series, AuxHelpers) {
    auto x = lift(from({1, 2, 3}));
    EXPECT_EQ(to_trunc(x), from({1, 2, 3}));
    AuxSeries y(2);
    y[1] = AuxPoly::var(V);
    EXPECT_THROW(to_trunc(y), Error);
    EXPECT_EQ(to_trunc(set_var(y, V, 3)), from({0, 3, 0}));
    EXPECT_EQ(divide_var(y, V)[1], AuxPoly(1));
}

TEST(FunctionalEquations, ResidualsVanish) {
    for (auto e : {Equation::K_Ll, Equation::K_Llv, Equation::K_lt2, Equation::K_peak, Equation::G_classV, Equation::C_valleys}) {
        auto x = fe_iterate(e, 12);
        auto r = fe_residual(e, x);
        for (int i = 0; i <= r.order(); ++i) EXPECT_TRUE(r[i].is_zero()) << to_string(e) << " z^" << i;
        EXPECT_NO_THROW(check_degree_caps(e, x));
    }
}

TEST(FunctionalEquations, NonSolutionLeavesResidual) {
    auto x = fe_iterate(Equation::K_Ll, 6);
    x[3] += AuxPoly(1);
    auto r = fe_residual(Equation::K_Ll, x);
    bool any = false;
    for (int i = 0; i <= r.order(); ++i) any = any || !r[i].is_zero();
    EXPECT_TRUE(any);
}

TEST(FunctionalEquations, DegreeCapsCatchOverflow) {
    AuxSeries x = fe_iterate(Equation::C_valleys, 4);
    x[2] += AuxPoly::var(V, 5);
    EXPECT_THROW(check_degree_caps(Equation::C_valleys, x), Error);
}

TEST(FunctionalEquations, CatalanByValleys) {
    auto c = fe_iterate(Equation::C_valleys, 5);
    // Narayana: z^4 -> 1 + 6v + 6v^2 + v^3
    EXPECT_EQ(c[4], AuxPoly(1) + AuxPoly(6) * AuxPoly::var(V) + AuxPoly(6) * AuxPoly::var(V, 2) + AuxPoly::var(V, 3));
}

TEST(FunctionalEquations, KZeroCoefficients) {
    auto k0 = to_trunc(set_var(fe_iterate(Equation::K_Ll, 6), U, 0));
    const long expected[] = {1, 2, 9, 54, 378, 2916, 24057};
    for (int i = 0; i <= 6; ++i) EXPECT_EQ(k0[i], expected[i]);
}
