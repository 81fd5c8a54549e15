#pragma once

// Order-preserving partial matchings of two strings. Only the set of matched
// index pairs is stored; the two-row layout with '-' skips is derived.

#include "macs/poset.hpp"
#include "macs/word.hpp"

#include "json.hpp"

#include <string>
#include <utility>
#include <vector>

namespace macs {

/// Letter i of string 1 matched with letter j of string 2 (both 1-based).
struct Match {
    int i = 0;
    int j = 0;

    friend auto operator<=>(const Match&, const Match&) = default;
};

class Alignment {
public:
    Alignment(int len1, int len2, std::vector<Match> matches)
        : len1_(len1), len2_(len2), matches_(std::move(matches)) {
        if (len1 < 1 || len2 < 1) {
            throw Error(ErrorCode::InvalidArgument, "alignment strings must be non-empty");
        }
        for (std::size_t k = 0; k < matches_.size(); ++k) {
            const Match& m = matches_[k];
            if (m.i < 1 || m.i > len1 || m.j < 1 || m.j > len2) {
                throw Error(ErrorCode::InvalidArgument, "alignment match index out of range");
            }
            if (k > 0 && !(matches_[k - 1].i < m.i && matches_[k - 1].j < m.j)) {
                throw Error(ErrorCode::InvalidArgument,
                            "alignment matches must increase strictly in both strings");
            }
        }
    }

    int len1() const { return len1_; }
    int len2() const { return len2_; }
    const std::vector<Match>& matches() const { return matches_; }
    GridShape shape() const { return GridShape(len1_, len2_); }

    friend bool operator==(const Alignment&, const Alignment&) = default;

private:
    int len1_;
    int len2_;
    std::vector<Match> matches_;
};

inline PointSet alignment_to_strict_chain(const Alignment& al) {
    std::vector<Point> points;
    points.reserve(al.matches().size());
    for (const Match& m : al.matches()) {
        points.push_back({m.i, m.j});
    }
    return PointSet(al.shape(), std::move(points));
}

inline Alignment strict_chain_to_alignment(const PointSet& chain) {
    require_kind(chain, SetKind::StrictChain, ErrorCode::NotStrictChain);
    std::vector<Match> matches;
    for (const Point& p : chain) {
        matches.push_back({p.x, p.y});
    }
    return Alignment(chain.shape().m1, chain.shape().m2, std::move(matches));
}

/// d per matched pair, v per skipped letter of string 1, h per skipped
/// letter of string 2; skips of string 1 are listed first in every block.
inline Word alignment_to_word(const Alignment& al) { return strict_chain_to_word(alignment_to_strict_chain(al)); }

inline Alignment word_to_alignment(const Word& w) { return strict_chain_to_alignment(word_to_strict_chain(w)); }

/// A skip in string 1 directly followed by a skip in string 2. Present iff
/// another pair could still be matched.
inline bool alignment_has_alternate_skips(const Alignment& al) { return alignment_to_word(al).contains_vh(); }

struct AlignmentRows {
    std::string first;
    std::string second;
};

/// Two-row layout in the canonical column order. `s1` / `s2` supply the
/// letters; they must have lengths len1 / len2.
inline AlignmentRows render_alignment(const Alignment& al, std::string_view s1, std::string_view s2) {
    if (s1.size() != static_cast<std::size_t>(al.len1()) || s2.size() != static_cast<std::size_t>(al.len2())) {
        throw Error(ErrorCode::LengthMismatch, "alignment strings do not match alignment lengths");
    }
    AlignmentRows rows;
    std::size_t a = 0;
    std::size_t b = 0;
    for (char letter : alignment_to_word(al).str()) {
        switch (letter) {
        case 'v':
            rows.first.push_back(s1[a++]);
            rows.second.push_back('-');
            break;
        case 'h':
            rows.first.push_back('-');
            rows.second.push_back(s2[b++]);
            break;
        default:
            rows.first.push_back(s1[a++]);
            rows.second.push_back(s2[b++]);
            break;
        }
    }
    return rows;
}

/// Default letters: A, B, C, ... for string 1 and a, b, c, ... for string 2.
inline AlignmentRows render_alignment(const Alignment& al) {
    std::string s1;
    std::string s2;
    for (int k = 0; k < al.len1(); ++k) {
        s1.push_back(static_cast<char>('A' + k % 26));
    }
    for (int k = 0; k < al.len2(); ++k) {
        s2.push_back(static_cast<char>('a' + k % 26));
    }
    return render_alignment(al, s1, s2);
}

/// Reads any two-row layout (not only the canonical one); alignments that
/// match the same letters come out equal.
inline Alignment parse_alignment_rows(std::string_view first, std::string_view second) {
    if (first.size() != second.size()) {
        throw Error(ErrorCode::ParseError, "alignment rows differ in length");
    }
    int a = 0;
    int b = 0;
    std::vector<Match> matches;
    for (std::size_t k = 0; k < first.size(); ++k) {
        const bool top = first[k] != '-';
        const bool bottom = second[k] != '-';
        if (!top && !bottom) {
            throw Error(ErrorCode::ParseError, "alignment column skips both strings");
        }
        if (top) {
            ++a;
        }
        if (bottom) {
            ++b;
        }
        if (top && bottom) {
            matches.push_back({a, b});
        }
    }
    return Alignment(a, b, std::move(matches));
}

inline nlohmann::json alignment_to_json(const Alignment& al) {
    nlohmann::json matches = nlohmann::json::array();
    for (const Match& m : al.matches()) {
        matches.push_back({m.i, m.j});
    }
    return {{"len1", al.len1()}, {"len2", al.len2()}, {"matches", matches}};
}

inline Alignment alignment_from_json(const nlohmann::json& j) {
    try {
        std::vector<Match> matches;
        for (const auto& pair : j.at("matches")) {
            if (!pair.is_array() || pair.size() != 2) {
                throw Error(ErrorCode::ParseError, "alignment match must be a pair [i, j]");
            }
            matches.push_back({pair[0].get<int>(), pair[1].get<int>()});
        }
        return Alignment(j.at("len1").get<int>(), j.at("len2").get<int>(), std::move(matches));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("alignment JSON: ") + e.what());
    }
}

inline Alignment parse_alignment_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("alignment JSON: ") + e.what());
    }
    return alignment_from_json(j);
}

} // namespace macs
