#include "macs/poset.hpp"
#include "macs/duality.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace macs;

namespace {

PointSet from_oracle(GridShape shape, const oracle::Set& s) {
    std::vector<Point> pts;
    for (auto [x, y] : s) {
        pts.push_back({x, y});
    }
    return PointSet(shape, pts);
}

oracle::Set to_oracle(const std::vector<Point>& pts) {
    oracle::Set out;
    for (const Point& p : pts) {
        out.emplace_back(p.x, p.y);
    }
    return out;
}

const PointSet kExample(GridShape(5, 6), {{2, 4}, {4, 2}});

} // namespace

TEST(GridShape, RejectsEmptyDimensions) {
    EXPECT_THROW(GridShape(0, 3), Error);
    EXPECT_THROW(GridShape(3, 0), Error);
    EXPECT_EQ(GridShape(5, 6).cells(), 30);
}

TEST(PointSet, ValidatesAndSorts) {
    const PointSet s(GridShape(3, 3), {{3, 1}, {1, 3}});
    EXPECT_EQ(s[0], (Point{1, 3}));
    EXPECT_THROW(PointSet(GridShape(3, 3), {{4, 1}}), Error);
    EXPECT_THROW(PointSet(GridShape(3, 3), {{0, 1}}), Error);
    EXPECT_THROW(PointSet(GridShape(3, 3), {{1, 1}, {1, 1}}), Error);
}

TEST(Orders, DominanceIsComponentwise) {
    EXPECT_TRUE(dominates({2, 2}, {2, 1}));
    EXPECT_FALSE(dominates({2, 2}, {2, 2}));
    EXPECT_FALSE(strongly_dominates({2, 2}, {2, 1}));
    EXPECT_TRUE(strongly_dominates({3, 2}, {2, 1}));
}

TEST(Classify, AgreesWithOracleOnEverySubsetOf3x3) {
    const GridShape shape(3, 3);
    const auto all = oracle::subsets(3, 3, [](const oracle::Set&) { return true; });
    ASSERT_EQ(all.size(), 512u);
    for (const auto& s : all) {
        const auto flags = classify(from_oracle(shape, s));
        EXPECT_EQ(flags.is_antichain, oracle::is_antichain(s));
        EXPECT_EQ(flags.is_strict_chain, oracle::is_strict_chain(s));
        bool chain = true;
        bool weak = true;
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                chain = chain && (oracle::dom(s[i], s[j]) || oracle::dom(s[j], s[i]));
                weak = weak && !oracle::strongly_comparable(s[i], s[j]);
            }
        }
        EXPECT_EQ(flags.is_chain, chain);
        EXPECT_EQ(flags.is_weak_antichain, weak);
    }
}

TEST(StepMatrices, ExampleAntichainMatchesPublishedMatrices) {
    const auto [nw, se] = step_matrices(kExample);
    EXPECT_EQ(format_matrix(nw), "000011\n000011\n001111\n001111\n111111\n");
    EXPECT_EQ(format_matrix(se), "111111\n111000\n111000\n100000\n100000\n");
    const BinaryMatrix aug = augmentation_matrix(kExample, SetKind::Antichain);
    EXPECT_EQ(format_matrix(aug), "000011\n000000\n001000\n000000\n100000\n");
    EXPECT_EQ(format_points(aug.positions(1)), "(1,5);(1,6);(3,3);(5,1)");
}

TEST(StepMatrices, ExampleStrictChainAugmentation) {
    const PointSet chain(GridShape(5, 6), {{2, 3}, {4, 5}});
    EXPECT_EQ(format_matrix(augmentation_matrix(chain, SetKind::StrictChain)),
              "110000\n000000\n000100\n000000\n000001\n");
    const PointSet single(GridShape(4, 3), {{2, 2}});
    EXPECT_EQ(format_matrix(augmentation_matrix(single, SetKind::StrictChain)), "100\n000\n001\n001\n");
}

TEST(StepMatrices, StaircaseShape) {
    const auto [nw, se] = step_matrices(kExample);
    EXPECT_TRUE(nw.satisfies_staircase());
    EXPECT_TRUE(se.satisfies_staircase());
    BinaryMatrix relabelled(nw.shape(), MatrixRole::SEStep, 1);
    relabelled.set(1, 1, 0);
    EXPECT_FALSE(relabelled.satisfies_staircase());
    EXPECT_THROW(noses(relabelled), Error);
    EXPECT_THROW(noses(augmentation_matrix(kExample, SetKind::Antichain)), Error);
}

TEST(Augmentation, WrongKindIsRejected) {
    const PointSet chain(GridShape(5, 6), {{2, 3}, {4, 5}});
    EXPECT_THROW(augmentation_matrix(chain, SetKind::Antichain), Error);
    EXPECT_THROW(augmentation_matrix(kExample, SetKind::StrictChain), Error);
}

class SmallShapes : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(SmallShapes, AntichainAugmentationMatchesOracle) {
    const auto [m1, m2] = GetParam();
    const GridShape shape(m1, m2);
    for (const auto& s : oracle::antichains(m1, m2)) {
        const PointSet a = from_oracle(shape, s);
        const BinaryMatrix aug = augmentation_matrix(a, SetKind::Antichain);
        EXPECT_EQ(to_oracle(aug.positions(1)), oracle::addable_to_antichain(s, m1, m2));
        EXPECT_EQ(is_maximal(a, SetKind::Antichain), oracle::addable_to_antichain(s, m1, m2).empty());
        EXPECT_TRUE(has_consecutive_ones(aug));
        const auto [nw, se] = step_matrices(a);
        EXPECT_TRUE(nw.satisfies_staircase());
        EXPECT_TRUE(se.satisfies_staircase());
        EXPECT_EQ(noses(nw), a);
        EXPECT_EQ(noses(se), a);
    }
}

TEST_P(SmallShapes, StrictChainAugmentationMatchesOracle) {
    const auto [m1, m2] = GetParam();
    const GridShape shape(m1, m2);
    for (const auto& s : oracle::strict_chains(m1, m2)) {
        const PointSet c = from_oracle(shape, s);
        const BinaryMatrix aug = augmentation_matrix(c, SetKind::StrictChain);
        EXPECT_EQ(to_oracle(aug.positions(1)), oracle::addable_to_strict_chain(s, m1, m2));
        EXPECT_TRUE(has_consecutive_ones(aug));
        const auto [ne, sw] = chain_step_matrices(c);
        EXPECT_TRUE(ne.satisfies_staircase());
        EXPECT_TRUE(sw.satisfies_staircase());
        EXPECT_EQ(noses(ne), c);
        EXPECT_EQ(noses(sw), c);
    }
}

TEST_P(SmallShapes, DualityIsAnInvolutionBetweenKinds) {
    const auto [m1, m2] = GetParam();
    const GridShape shape(m1, m2);
    std::size_t chains = 0;
    for (const auto& s : oracle::antichains(m1, m2)) {
        const PointSet a = from_oracle(shape, s);
        const PointSet c = antichain_to_strict_chain(a);
        EXPECT_TRUE(oracle::is_strict_chain(to_oracle(c.points())));
        EXPECT_EQ(strict_chain_to_antichain(c), a);
        EXPECT_EQ(reflect_columns(reflect_columns(a)), a);
        ++chains;
    }
    EXPECT_EQ(chains, oracle::strict_chains(m1, m2).size());
}

INSTANTIATE_TEST_SUITE_P(UpTo4x5, SmallShapes,
                         ::testing::Values(std::pair{1, 1}, std::pair{1, 4}, std::pair{2, 3}, std::pair{3, 3},
                                           std::pair{3, 4}, std::pair{4, 2}, std::pair{4, 5}, std::pair{5, 4}));

TEST(ConsecutiveOnes, DetectsGaps) {
    BinaryMatrix m(GridShape(1, 3), MatrixRole::Augmentation, 1);
    EXPECT_TRUE(has_consecutive_ones(m));
    m.set(1, 2, 0);
    EXPECT_FALSE(has_consecutive_ones(m));
}

TEST(TextForms, PointsRoundTrip) {
    EXPECT_EQ(format_points(kExample), "(2,4);(4,2)");
    EXPECT_EQ(parse_points("(2,4);(4,2)", GridShape(5, 6)), kExample);
    EXPECT_EQ(parse_points(" (4, 2) ; (2,4) ", GridShape(5, 6)), kExample);
    EXPECT_TRUE(parse_points("{}", GridShape(2, 2)).empty());
    EXPECT_TRUE(parse_points("", GridShape(2, 2)).empty());
    EXPECT_EQ(format_points(PointSet(GridShape(2, 2))), "{}");
    EXPECT_THROW(parse_points("(2,4", GridShape(5, 6)), Error);
    EXPECT_THROW(parse_points("(2;4)", GridShape(5, 6)), Error);
    EXPECT_THROW(parse_points("(9,9)", GridShape(5, 6)), Error);
}

TEST(TextForms, MatrixRoundTrip) {
    const auto [nw, se] = step_matrices(kExample);
    EXPECT_EQ(parse_matrix(format_matrix(nw), MatrixRole::NWStep), nw);
    EXPECT_EQ(parse_matrix(format_matrix(se), MatrixRole::SEStep), se);
    EXPECT_THROW(parse_matrix("01\n0\n", MatrixRole::NWStep), Error);
    EXPECT_THROW(parse_matrix("02\n", MatrixRole::NWStep), Error);
}
