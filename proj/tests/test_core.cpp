#include <gtest/gtest.h>

#include <set>

#include "arcpat/core.hpp"
#include "arcpat/enumerate.hpp"

using namespace arcpat;

TEST(Matching, ParseEncodeRoundTrip) {
    auto m = Matching::parse("(1,6)(2,12)(3,4)(5,7)(8,10)(9,11)");
    EXPECT_EQ(m.n, 6);
    EXPECT_EQ(m.encode(), "(1,6)(2,12)(3,4)(5,7)(8,10)(9,11)");
    EXPECT_EQ(Matching::parse(m.encode()), m);
}

TEST(Matching, FixedPointsAreSingletons) {
    auto m = Matching::parse("(1,4)(2)(3,7)(5)(6,8)");
    EXPECT_EQ(m.n, 3);
    EXPECT_EQ(m.fixed_points, (std::vector<int>{2, 5}));
    EXPECT_EQ(m.vertex_types(), "OFOCFOCC");
    EXPECT_EQ(m.without_fixed_points(), Matching::parse("(1,3)(2,5)(4,6)"));
}

TEST(Matching, RejectsInvalid) {
    EXPECT_THROW(Matching::parse("(1,2)(2,3)"), Error);
    EXPECT_THROW(Matching::parse("(1,3)"), Error);  // vertex 2 missing
    EXPECT_THROW(Matching::parse("(2,1)"), Error);
    EXPECT_THROW(Matching::parse("1,2"), Error);
}

TEST(Matching, Partners) {
    auto m = Matching::parse("(1,3)(2,4)");
    EXPECT_EQ(m.partners(), (std::vector<int>{0, 3, 4, 1, 2}));
}

TEST(SetPartition, ArcsAndEncoding) {
    auto p = SetPartition::parse("{1,3,5}{2}{4,7}{6,8}");
    EXPECT_EQ(p.n, 8);
    EXPECT_EQ(p.arcs(), (std::vector<std::pair<int, int>>{{1, 3}, {3, 5}, {4, 7}, {6, 8}}));
    EXPECT_EQ(p.encode(), "{1,3,5}{2}{4,7}{6,8}");
    EXPECT_THROW(SetPartition::parse("{1,2}{2,3}"), Error);
}

TEST(SetPartition, ToMatchingSplitsTransitoryAndDropsSingletons) {
    auto m = partition_to_matching(SetPartition::parse("{1,3,5}{2}{4,7}{6,8}"));
    EXPECT_EQ(m.n, 4);
    EXPECT_TRUE(m.perfect());
    // 1 3' 3'' 4 5 6 7 8 -> 1..8
    EXPECT_EQ(m, Matching::parse("(1,2)(3,5)(4,7)(6,8)"));
}

TEST(DyckPath, HeightsAndVertices) {
    DyckPath d("EESESS");
    EXPECT_EQ(d.heights(), (std::vector<int>{0, 1, 2, 1, 2, 1, 0}));
    EXPECT_EQ(d.vertex(0), std::make_pair(0, 3));
    EXPECT_EQ(d.vertex(3), std::make_pair(2, 2));
    EXPECT_TRUE(d.is_peak(2));
    EXPECT_FALSE(d.is_peak(3));
    EXPECT_FALSE(DyckPath::valid("SE"));
    EXPECT_FALSE(DyckPath::valid("EES"));
    EXPECT_THROW(DyckPath("ESSE"), Error);
}

TEST(FerrersBoard, ColumnsAndRows) {
    FerrersBoard f(DyckPath("EESESS"));
    EXPECT_EQ(f.column_heights(), (std::vector<int>{3, 3, 2}));
    EXPECT_EQ(f.row_lengths(), (std::vector<int>{3, 3, 2}));
    EXPECT_EQ(FerrersBoard::from_column_heights({3, 3, 2}), f);
    EXPECT_TRUE(f.contains(FerrersBoard(DyckPath("ESESES"))));
    EXPECT_FALSE(FerrersBoard(DyckPath("ESESES")).contains(f));
}

TEST(RookPlacement, ValidatesAndRoundTrips) {
    auto p = RookPlacement::parse("border:EESS;rooks:2,1");
    EXPECT_EQ(p.rows, (Perm{2, 1}));
    EXPECT_EQ(RookPlacement::parse(p.encode()), p);
    EXPECT_THROW(RookPlacement::parse("border:ESES;rooks:1,2"), Error);  // rook outside the board
    EXPECT_THROW(RookPlacement::parse("border:EESS;rooks:1,1"), Error);
}

TEST(Kappa, ExampleMatching) {
    auto m = Matching::parse("(1,6)(2,12)(3,4)(5,7)(8,10)(9,11)");
    EXPECT_EQ(shape(m).steps, "EEESESSEESSS");
    auto p = kappa(m);
    EXPECT_EQ(p.board.border.steps, "EEESESSEESSS");
    EXPECT_EQ(kappa_inv(p), m);
}

TEST(Kappa, RoundTripAllSmallMatchings) {
    for (int n = 0; n <= 5; ++n)
        for_each_matching(n, [&](const Matching& m) {
            auto p = kappa(m);
            ASSERT_EQ(p.board.border, shape(m));
            ASSERT_EQ(kappa_inv(p), m);
        });
}

TEST(Kappa, BijectiveOntoPlacements) {
    for (int n = 1; n <= 4; ++n) {
        std::set<RookPlacement> image;
        for (const auto& m : matchings(n)) image.insert(kappa(m));
        auto all = placements(n);
        EXPECT_EQ(image, std::set<RookPlacement>(all.begin(), all.end()));
    }
}

TEST(GammaRestriction, RookPlacementExample) {
    RookPlacement p(FerrersBoard(DyckPath("EEESESESEESESSSS")), {1, 7, 8, 6, 3, 2, 5, 4});
    EXPECT_EQ(gamma_restriction(p, 7), (Perm{1, 3, 2}));
    EXPECT_EQ(gamma_restriction(p, 0), Perm{});
    EXPECT_EQ(gamma_restriction(p, 16), Perm{});
}

TEST(Statistics, PathAndBoard) {
    auto s = statistics(DyckPath("EESESSES"));
    EXPECT_EQ(s.valleys, 2);
    EXPECT_EQ(s.peaks, 3);
    EXPECT_EQ(s.returns, 2);
    EXPECT_EQ(s.height, 2);
    EXPECT_EQ(s.eta, 2);
    EXPECT_EQ(statistics(FerrersBoard(DyckPath("EESESSES"))), s);
}

TEST(Standardize, Basic) {
    EXPECT_EQ(standardize({7, 2, 9}), (Perm{2, 1, 3}));
    EXPECT_EQ(standardize({}), Perm{});
}
