#include "macs/codec.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <set>

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

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no macs::Error thrown";
    return ErrorCode::InvalidArgument;
}

const GridShape k5x6(5, 6);
const PointSet kAntichain(k5x6, {{2, 4}, {4, 2}});
const PointSet kChain(k5x6, {{2, 3}, {4, 5}});

const std::vector<std::pair<int, int>> kShapes{{1, 1}, {1, 3}, {2, 2}, {2, 4}, {3, 3}, {3, 5}, {4, 4}, {5, 3}, {4, 6}};

} // namespace

// --- words ----------------------------------------------------------------

TEST(Word, WorkedExample) {
    EXPECT_EQ(antichain_to_word(kAntichain).str(), "vhhdvhdvh");
    EXPECT_EQ(strict_chain_to_word(kChain).str(), "vhhdvhdvh");
    EXPECT_EQ(antichain_to_strict_chain(kAntichain), kChain);
    EXPECT_EQ(word_to_antichain(Word("vhhdvhdvh"), k5x6), kAntichain);
    EXPECT_EQ(word_to_strict_chain(Word("vhhdvhdvh")), kChain);
    EXPECT_FALSE(word_is_maximal(Word("vhhdvhdvh")));
}

TEST(Word, SingleCell) {
    EXPECT_EQ(format_points(word_to_antichain(Word("d"), GridShape(1, 1))), "(1,1)");
    EXPECT_EQ(Word("vhd").implied_shape(), GridShape(2, 2));
}

TEST(Word, Errors) {
    EXPECT_EQ(code_of([] { Word("vhx"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { word_to_antichain(Word("hvd"), GridShape(2, 2)); }), ErrorCode::NonCanonicalWord);
    EXPECT_EQ(code_of([] { word_is_maximal(Word("dhv")); }), ErrorCode::NonCanonicalWord);
    EXPECT_EQ(code_of([] { word_to_strict_chain(Word("vd"), GridShape(3, 3)); }), ErrorCode::LengthMismatch);
    EXPECT_EQ(code_of([] { Word("vv").implied_shape(); }), ErrorCode::LengthMismatch);
}

TEST(Word, CanonicalWordsAreExactlyTheEncodings) {
    for (auto [m1, m2] : kShapes) {
        const GridShape shape(m1, m2);
        const auto expected = oracle::words(m1, m2, {"hv"});
        EXPECT_EQ(expected.size(), oracle::binomial(m1 + m2, m1));
        std::set<std::string> from_antichains;
        std::set<std::string> from_chains;
        for (const auto& s : oracle::antichains(m1, m2)) {
            const PointSet a = from_oracle(shape, s);
            const Word w = antichain_to_word(a);
            from_antichains.insert(w.str());
            EXPECT_EQ(word_to_antichain(w, shape), a);
            EXPECT_EQ(w.count(Letter::D), a.size());
        }
        for (const auto& s : oracle::strict_chains(m1, m2)) {
            const PointSet c = from_oracle(shape, s);
            const Word w = strict_chain_to_word(c);
            from_chains.insert(w.str());
            EXPECT_EQ(word_to_strict_chain(w, shape), c);
        }
        EXPECT_EQ(from_antichains, std::set<std::string>(expected.begin(), expected.end()));
        EXPECT_EQ(from_chains, from_antichains);
    }
}

TEST(Word, MaximalWordsAreExactlyTheMaximalAntichains) {
    for (auto [m1, m2] : kShapes) {
        const GridShape shape(m1, m2);
        const auto expected = oracle::words(m1, m2, {"hv", "vh"});
        std::set<std::string> maximal;
        for (const auto& s : oracle::antichains(m1, m2)) {
            const Word w = antichain_to_word(from_oracle(shape, s));
            const bool oracle_maximal = oracle::addable_to_antichain(s, m1, m2).empty();
            EXPECT_EQ(word_is_maximal(w), oracle_maximal) << w.str();
            if (oracle_maximal) {
                maximal.insert(w.str());
            }
        }
        EXPECT_EQ(maximal, std::set<std::string>(expected.begin(), expected.end()));
    }
}

TEST(Word, LetterRoles) {
    // The strict-chain line crosses (r+1, c+1); the antichain line (r+1, c)
    // with c counted down from m2.
    EXPECT_EQ(format_points(word_to_strict_chain(Word("hdv"))), "(1,2)");
    EXPECT_EQ(format_points(word_to_antichain(Word("hdv"))), "(1,1)");
    EXPECT_EQ(format_points(word_to_antichain(Word("vdh"))), "(2,2)");
}

// --- alignments -----------------------------------------------------------

TEST(Alignment, PublishedLayoutOfTheExampleChain) {
    const Alignment al = strict_chain_to_alignment(kChain);
    EXPECT_EQ(al, Alignment(5, 6, {{2, 3}, {4, 5}}));
    const AlignmentRows rows = render_alignment(al, "ABCDE", "UVWXYZ");
    EXPECT_EQ(rows.first, "A--BC-DE-");
    EXPECT_EQ(rows.second, "-UVW-XY-Z");
    EXPECT_EQ(alignment_to_word(al).str(), "vhhdvhdvh");
    EXPECT_TRUE(alignment_has_alternate_skips(al));
}

TEST(Alignment, LayoutsMatchingTheSameLettersAreEqual) {
    const Alignment a = parse_alignment_rows("A-BC-D", "-XY-Z-");
    const Alignment b = parse_alignment_rows("-AB-CD", "X-YZ--");
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, Alignment(4, 3, {{2, 2}}));
    // The canonical layout lists string-1 skips before string-2 skips.
    EXPECT_EQ(alignment_to_word(a).str(), "vhdvvh");
    const AlignmentRows rows = render_alignment(a, "ABCD", "XYZ");
    EXPECT_EQ(rows.first, "A-BCD-");
    EXPECT_EQ(rows.second, "-XY--Z");
    EXPECT_EQ(format_matrix(augmentation_matrix(alignment_to_strict_chain(a), SetKind::StrictChain)),
              "100\n000\n001\n001\n");
}

TEST(Alignment, JsonRoundTrip) {
    const Alignment al(5, 6, {{2, 3}, {4, 5}});
    EXPECT_EQ(alignment_to_json(al).dump(), R"({"len1":5,"len2":6,"matches":[[2,3],[4,5]]})");
    EXPECT_EQ(parse_alignment_json(alignment_to_json(al).dump()), al);
    EXPECT_EQ(code_of([] { parse_alignment_json("{\"len1\":2"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_alignment_json(R"({"len1":2,"len2":2,"matches":[[1]]})"); }),
              ErrorCode::ParseError);
    EXPECT_THROW(Alignment(3, 3, {{2, 2}, {1, 3}}), Error);
    EXPECT_THROW(Alignment(3, 3, {{2, 2}, {3, 2}}), Error);
}

TEST(Alignment, AlternateSkipsIffChainNotMaximal) {
    for (auto [m1, m2] : kShapes) {
        const GridShape shape(m1, m2);
        for (const auto& s : oracle::strict_chains(m1, m2)) {
            const PointSet c = from_oracle(shape, s);
            const Alignment al = strict_chain_to_alignment(c);
            EXPECT_EQ(alignment_to_strict_chain(al), c);
            EXPECT_EQ(word_to_alignment(alignment_to_word(al)), al);
            EXPECT_EQ(alignment_has_alternate_skips(al), !oracle::addable_to_strict_chain(s, m1, m2).empty());
            const AlignmentRows rows = render_alignment(al);
            EXPECT_EQ(parse_alignment_rows(rows.first, rows.second), al);
        }
    }
}

// --- walks ----------------------------------------------------------------

TEST(Walk, UpWalkOfTheFigure) {
    const Walk w = parse_walk("h'v'v'h'h'v'h'v'h'h'v'", WalkOrientation::Up);
    EXPECT_EQ(w.shape(), GridShape(6, 5));
    EXPECT_EQ(format_walk(w), "HVVHHVHVHHV");
    EXPECT_EQ(format_points(walk_to_strict_chain(w)), "(1,1);(3,3);(4,4);(6,5)");
    EXPECT_FALSE(walk_strict_chain_is_maximal(w));
    EXPECT_EQ(format_points(walk_augmenting_points(w)), "(2,2)");
    EXPECT_EQ(walk_to_word(w).str(), "dvhddvd");
}

TEST(Walk, DownWalkOfTheFigure) {
    const Walk w = parse_walk("h'v'v'h'h'v'h'v'h'h'v'", WalkOrientation::Down);
    EXPECT_EQ(w.node(0), (Point{0, 5}));
    EXPECT_EQ(w.node(w.size()), (Point{6, 0}));
    EXPECT_EQ(format_points(walk_to_antichain(w)), "(1,4);(3,2);(4,1);(6,0)");
    EXPECT_FALSE(walk_antichain_is_maximal(w));

    // The sole disjoint V'H' pair runs (1,4) -> (1,3) -> (2,3); its endpoint
    // is the mirror image of the up walk's (2,2).
    const auto aug = walk_augmenting_points(w);
    ASSERT_EQ(aug.size(), 1u);
    EXPECT_EQ(aug[0], (Point{2, 3}));

    // Shift onto [6]x[5] and confirm with the oracle that the point can be
    // added while (1,3) cannot.
    oracle::Set shifted;
    for (const Point& p : walk_to_antichain(w)) {
        shifted.emplace_back(p.x, p.y + 1);
    }
    ASSERT_TRUE(oracle::is_antichain(shifted));
    const auto addable = oracle::addable_to_antichain(shifted, 6, 5);
    EXPECT_EQ(addable, (oracle::Set{{2, 4}}));
}

TEST(Walk, SmallCases) {
    EXPECT_EQ(format_points(walk_to_strict_chain(parse_walk("HHHVV", WalkOrientation::Up))), "(3,1)");
    const Walk hvhv = parse_walk("HVHV", WalkOrientation::Up);
    EXPECT_EQ(format_points(walk_to_strict_chain(hvhv)), "(1,1);(2,2)");
    EXPECT_TRUE(walk_strict_chain_is_maximal(hvhv));
    EXPECT_TRUE(walk_augmenting_points(hvhv).empty());
}

TEST(Walk, OrientationIsEnforced) {
    const Walk up = parse_walk("HV", WalkOrientation::Up);
    EXPECT_EQ(code_of([&] { walk_to_antichain(up); }), ErrorCode::WrongOrientation);
    EXPECT_EQ(code_of([&] { walk_to_strict_chain(up.mirrored()); }), ErrorCode::WrongOrientation);
    EXPECT_EQ(code_of([] { parse_walk("HX", WalkOrientation::Up); }), ErrorCode::ParseError);
    EXPECT_THROW(parse_walk("HH", WalkOrientation::Up), Error);
}

TEST(Walk, EveryWalkAgreesWithTheOracle) {
    for (auto [m1, m2] : kShapes) {
        const GridShape shape(m1, m2);
        std::string steps = std::string(static_cast<std::size_t>(m1), 'H') + std::string(static_cast<std::size_t>(m2), 'V');
        std::size_t walks = 0;
        do {
            ++walks;
            const Walk up = parse_walk(steps, WalkOrientation::Up);
            const auto nodes = oracle::walk_nodes(steps);
            oracle::Set expected;
            for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
                if (steps[i] == 'H' && steps[i + 1] == 'V') {
                    expected.push_back(nodes[i + 2]);
                }
            }
            const PointSet chain = walk_to_strict_chain(up);
            EXPECT_EQ(to_oracle(chain.points()), expected);
            ASSERT_TRUE(oracle::is_strict_chain(expected));
            const auto addable = oracle::addable_to_strict_chain(expected, m1, m2);
            EXPECT_EQ(walk_strict_chain_is_maximal(up), addable.empty()) << steps;
            for (const Point& p : walk_augmenting_points(up)) {
                EXPECT_TRUE(std::count(addable.begin(), addable.end(), oracle::Pt{p.x, p.y})) << steps;
            }
            EXPECT_EQ(walk_to_word(up).str(), strict_chain_to_word(chain).str());

            const Walk down = up.mirrored();
            oracle::Set anti;
            for (const Point& p : walk_to_antichain(down)) {
                anti.emplace_back(p.x, p.y + 1);
            }
            ASSERT_TRUE(oracle::is_antichain(anti)) << steps;
            EXPECT_EQ(walk_antichain_is_maximal(down), oracle::addable_to_antichain(anti, m1, m2).empty());

            // Mirroring by y -> m2 - y carries the up-walk results over unchanged.
            oracle::Set reflected;
            for (const Point& p : chain.points()) {
                reflected.emplace_back(p.x, m2 - p.y);
            }
            EXPECT_EQ(to_oracle(walk_to_antichain(down)), reflected) << steps;
            oracle::Set up_aug;
            for (const Point& p : walk_augmenting_points(up)) {
                up_aug.emplace_back(p.x, m2 - p.y);
            }
            EXPECT_EQ(to_oracle(walk_augmenting_points(down)), up_aug) << steps;
        } while (std::next_permutation(steps.begin(), steps.end()));
        EXPECT_EQ(walks, oracle::binomial(m1 + m2, m1));
    }
}

TEST(Walk, ChainToWalkRoundTrip) {
    for (auto [m1, m2] : kShapes) {
        const GridShape shape(m1, m2);
        for (const auto& s : oracle::strict_chains(m1, m2)) {
            const PointSet c = from_oracle(shape, s);
            const Walk w = strict_chain_to_walk(c);
            EXPECT_EQ(w.shape(), shape);
            EXPECT_EQ(walk_to_strict_chain(w), c);
            EXPECT_EQ(walk_strict_chain_is_maximal(w), is_maximal(c, SetKind::StrictChain));
        }
    }
}
