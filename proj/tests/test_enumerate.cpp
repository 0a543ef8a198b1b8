#include <gtest/gtest.h>

#include <set>

#include "arcpat/enumerate.hpp"
#include "arcpat/series.hpp"

using namespace arcpat;

namespace {

long catalan(int n) {
    long c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

}  // namespace

TEST(Streams, Sizes) {
    const long double_factorial[] = {1, 1, 3, 15, 105, 945, 10395};
    const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
    for (int n = 0; n <= 6; ++n) {
        EXPECT_EQ(static_cast<long>(matchings(n).size()), double_factorial[n]);
        EXPECT_EQ(static_cast<long>(dyck_paths(n).size()), catalan(n));
        EXPECT_EQ(static_cast<long>(boards(n).size()), catalan(n));
    }
    for (int n = 0; n <= 7; ++n) EXPECT_EQ(static_cast<long>(partitions(n).size()), bell[n]);
    EXPECT_EQ(permutations(5).size(), 120u);
    EXPECT_EQ(placements(4).size(), 105u);
}

TEST(Streams, NoDuplicates) {
    auto m = matchings(5);
    EXPECT_EQ(std::set<Matching>(m.begin(), m.end()).size(), m.size());
    auto d = dyck_paths(6);
    EXPECT_EQ(std::set<DyckPath>(d.begin(), d.end()).size(), d.size());
}

TEST(Streams, Deterministic) {
    EXPECT_EQ(matchings(5), matchings(5));
    EXPECT_EQ(partitions(6), partitions(6));
    EXPECT_EQ(path_pairs(4), path_pairs(4));
}

TEST(Streams, MatchingsWithFixedPoints) {
    // C(2n+k, k) (2n-1)!!
    EXPECT_EQ(matchings_with_fixed(1, 2).size(), 6u);
    EXPECT_EQ(matchings_with_fixed(2, 1).size(), 15u);
    for (const auto& m : matchings_with_fixed(2, 2)) EXPECT_EQ(m.fixed_points.size(), 2u);
}

TEST(Streams, PathPairsAreNoncrossing) {
    // Pairs of noncrossing Dyck paths: C_n C_{n+2} - C_{n+1}^2.
    for (int n = 0; n <= 6; ++n) {
        auto pairs = path_pairs(n);
        EXPECT_EQ(static_cast<long>(pairs.size()), catalan(n) * catalan(n + 2) - catalan(n + 1) * catalan(n + 1));
        for (const auto& p : pairs) ASSERT_TRUE(NoncrossingPathPair::noncrossing(p.bottom, p.top));
    }
}

TEST(Caps, ExceedingThrows) {
    try {
        matchings(caps().matchings + 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::resource_cap);
    }
    EXPECT_THROW(count_total(Family::partition, caps().partitions + 1, {}), Error);
    EXPECT_THROW(count_total(Family::permutation, caps().permutations + 1, {}), Error);
}

TEST(Count, SpecExamples) {
    EXPECT_EQ(count_total(Family::matching, 3, parse_pattern_set("132")), 14u);
    EXPECT_EQ(count_total(Family::partition, 0, parse_pattern_set("123")), 1u);
    CountOptions o;
    o.by_shape = true;
    auto t = count(Family::matching, 2, parse_pattern_set("321"), o);
    EXPECT_EQ(t.total, 3u);
    EXPECT_EQ(t.by_shape, (std::map<std::string, std::uint64_t>{{"EESS", 2}, {"ESES", 1}}));
}

TEST(Count, ShardCountDoesNotMatter) {
    CountOptions one, many;
    one.by_shape = many.by_shape = true;
    one.by_valleys = many.by_valleys = true;
    many.shards = 5;
    for (const char* t : {"123", "231,312"}) {
        auto a = count(Family::matching, 6, parse_pattern_set(t), one);
        auto b = count(Family::matching, 6, parse_pattern_set(t), many);
        EXPECT_EQ(a.total, b.total);
        EXPECT_EQ(a.by_shape, b.by_shape);
        EXPECT_EQ(a.by_valleys, b.by_valleys);
    }
}

TEST(Count, ShapesSumToTotal) {
    CountOptions o;
    o.by_shape = true;
    for (int n = 1; n <= 5; ++n)
        for (const char* t : {"123", "132", "231", "312", "321"}) {
            auto table = count(Family::matching, n, parse_pattern_set(t), o);
            std::uint64_t sum = 0;
            for (const auto& [b, c] : table.by_shape) {
                sum += c;
                EXPECT_EQ(c, count_on_board(FerrersBoard(DyckPath(b)), parse_pattern_set(t)));
            }
            EXPECT_EQ(sum, table.total);
        }
}

TEST(Count, Gouyou) {
    for (int n = 0; n <= 6; ++n)
        EXPECT_EQ(static_cast<long>(count_total(Family::matching, n, parse_pattern_set("123"))),
                  catalan(n) * catalan(n + 2) - catalan(n + 1) * catalan(n + 1));
}

TEST(Count, PlacementsAgreeWithMatchings) {
    for (int n = 1; n <= 5; ++n)
        for (const char* t : {"123", "132", "231", "123,312"})
            EXPECT_EQ(count_total(Family::placement, n, parse_pattern_set(t)), count_total(Family::matching, n, parse_pattern_set(t)));
}

// Inserting singletons and splitting vertices rebuilds every partition from matchings.
TEST(Count, PartitionsFromMatchings) {
    for (int n = 0; n <= 8; ++n)
        for (const char* t : {"123", "312"}) {
            auto tau = parse_pattern_set(t);
            std::uint64_t rebuilt = 0;
            for_each_partition(n, [&](const SetPartition& p) {
                if (matching_avoids(partition_to_matching(p), tau)) ++rebuilt;
            });
            EXPECT_EQ(rebuilt, count_total(Family::partition, n, tau));
        }
}

TEST(Count, FixedMatchingsAgainstPathPairs) {
    for (int k = 0; k <= 2; ++k)
        for (int n = 0; n + k <= 5; ++n) {
            CountOptions o;
            o.k = k;
            auto pairs = count(Family::path_pair, n, {}, o).total;
            EXPECT_EQ(count(Family::fixed_matching, n, parse_pattern_set("321"), o).total, pairs);
            EXPECT_EQ(count(Family::fixed_matching, n, parse_pattern_set("213"), o).total, pairs);
        }
}

TEST(BoardFormulas, ClassesIAndIV) {
    auto one = classI_board_formula_check(5);
    EXPECT_TRUE(one.ok);
    EXPECT_EQ(one.boards_checked, 9 * (1 + 2 + 5 + 14 + 42));  // every class-I pair on every board
    EXPECT_TRUE(classIV_board_formula_check(5).ok);
}

TEST(ShapeWilf, CounterexampleBoard) {
    auto f = FerrersBoard::from_column_heights({5, 5, 5, 4, 4});
    EXPECT_EQ(count_on_board(f, parse_pattern_set("123,231")), 14u);
    EXPECT_EQ(count_on_board(f, parse_pattern_set("123,312")), 15u);
    auto r = shape_wilf_check(parse_pattern_set("123,231"), parse_pattern_set("123,312"), 5);
    EXPECT_FALSE(r.equivalent);
    ASSERT_TRUE(r.board.has_value());
    EXPECT_EQ(r.board->n(), 5);
    EXPECT_TRUE(shape_wilf_check(parse_pattern_set("123,231"), parse_pattern_set("123,312"), 4).equivalent);
}

TEST(PairClasses, FifteenPairsInSevenClasses) {
    std::set<PatternSet> seen;
    for (const auto& c : pair_classes())
        for (const auto& p : c) seen.insert(p);
    EXPECT_EQ(pair_classes().size(), 7u);
    EXPECT_EQ(seen.size(), 15u);
}

TEST(LabeledPaths, ClassCounts) {
    const long lt3[] = {1, 3, 13, 66, 364};
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(static_cast<long>(labeled_paths(n, LabeledClass::L_lt3).size()), lt3[n - 1]);
        EXPECT_EQ(static_cast<long>(count_total(Family::matching, n, parse_pattern_set("123,312"))), lt3[n - 1]);
    }
}

TEST(B2Pairs, MatchClassVSeries) {
    auto g = fe_iterate(Equation::G_classV, 8);
    for (int m = 0; m <= 8; ++m) {
        std::map<std::pair<int, int>, long> counted, series;
        for (const auto& p : b2_pairs(m)) ++counted[{p.h, p.eps}];
        g[m].for_each([&](int u, int, int t, const Rational& q) { series[{t, u}] = q.get_num().get_si(); });
        EXPECT_EQ(counted, series) << "z^" << m;
    }
}
