#pragma once

// (h, v, d)-words describing the grid line of a strict chain (NW -> SE) or
// of an antichain (NE -> SW). v moves one row down, h one column across and
// d crosses the cell of a set element diagonally.

#include "macs/duality.hpp"
#include "macs/poset.hpp"

#include <algorithm>
#include <string>
#include <string_view>

namespace macs {

enum class Letter : char { D = 'd', H = 'h', V = 'v' };

/// Which grid line a word was read from; the letters are identical for a
/// set and its dual, only the meaning of h and d changes.
enum class LineKind { StrictChain, Antichain };

class Word {
public:
    Word() = default;

    explicit Word(std::string_view letters, LineKind kind = LineKind::StrictChain)
        : letters_(letters), kind_(kind) {
        for (char c : letters_) {
            if (c != 'd' && c != 'h' && c != 'v') {
                throw Error(ErrorCode::ParseError,
                            std::string("word letter must be one of h, v, d; got '") + c + "'");
            }
        }
    }

    const std::string& str() const { return letters_; }
    LineKind kind() const { return kind_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }

    std::size_t count(Letter l) const {
        return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), static_cast<char>(l)));
    }

    /// Canonical words never contain "hv": inside every d-delimited block
    /// the v's come first.
    bool is_canonical() const { return letters_.find("hv") == std::string::npos; }
    bool contains_vh() const { return letters_.find("vh") != std::string::npos; }

    /// Shape implied by the letter counts: m1 = #v + #d, m2 = #h + #d.
    GridShape implied_shape() const {
        const int d = static_cast<int>(count(Letter::D));
        const int rows = d + static_cast<int>(count(Letter::V));
        const int cols = d + static_cast<int>(count(Letter::H));
        if (rows < 1 || cols < 1) {
            throw Error(ErrorCode::LengthMismatch, "word '" + letters_ + "' does not span a grid of at least 1x1");
        }
        return GridShape(rows, cols);
    }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::string letters_;
    LineKind kind_ = LineKind::StrictChain;
};

namespace detail {

inline void require_decodable(const Word& w, GridShape shape) {
    if (!w.is_canonical()) {
        throw Error(ErrorCode::NonCanonicalWord, "word '" + w.str() + "' contains \"hv\"");
    }
    const auto d = w.count(Letter::D);
    if (w.count(Letter::V) + d != static_cast<std::size_t>(shape.m1) ||
        w.count(Letter::H) + d != static_cast<std::size_t>(shape.m2)) {
        throw Error(ErrorCode::LengthMismatch, "word '" + w.str() + "' does not fit shape " +
                                                   std::to_string(shape.m1) + "x" + std::to_string(shape.m2));
    }
}

} // namespace detail

/// Cursor starts at the NW corner (0, 0). Each element (x, y) is reached by
/// v's down to row x-1, h's across to column y-1, then a d through the cell.
inline Word strict_chain_to_word(const PointSet& chain) {
    require_kind(chain, SetKind::StrictChain, ErrorCode::NotStrictChain);
    std::string out;
    int r = 0;
    int c = 0;
    for (const Point& p : chain) {
        out.append(static_cast<std::size_t>(p.x - 1 - r), 'v');
        out.append(static_cast<std::size_t>(p.y - 1 - c), 'h');
        out.push_back('d');
        r = p.x;
        c = p.y;
    }
    out.append(static_cast<std::size_t>(chain.shape().m1 - r), 'v');
    out.append(static_cast<std::size_t>(chain.shape().m2 - c), 'h');
    return Word(out, LineKind::StrictChain);
}

inline PointSet word_to_strict_chain(const Word& w, GridShape shape) {
    detail::require_decodable(w, shape);
    std::vector<Point> points;
    int r = 0;
    int c = 0;
    for (char letter : w.str()) {
        switch (letter) {
        case 'v': ++r; break;
        case 'h': ++c; break;
        default:
            points.push_back({r + 1, c + 1});
            ++r;
            ++c;
            break;
        }
    }
    return PointSet(shape, std::move(points));
}

inline PointSet word_to_strict_chain(const Word& w) { return word_to_strict_chain(w, w.implied_shape()); }

/// Cursor starts at the NE corner (0, m2); h moves left and d crosses the
/// cell (r+1, c) anti-diagonally. Elements are visited by increasing x,
/// hence decreasing y.
inline Word antichain_to_word(const PointSet& antichain) {
    require_kind(antichain, SetKind::Antichain, ErrorCode::NotAntichain);
    std::string out;
    int r = 0;
    int c = antichain.shape().m2;
    for (const Point& p : antichain) {
        out.append(static_cast<std::size_t>(p.x - 1 - r), 'v');
        out.append(static_cast<std::size_t>(c - p.y), 'h');
        out.push_back('d');
        r = p.x;
        c = p.y - 1;
    }
    out.append(static_cast<std::size_t>(antichain.shape().m1 - r), 'v');
    out.append(static_cast<std::size_t>(c), 'h');
    return Word(out, LineKind::Antichain);
}

inline PointSet word_to_antichain(const Word& w, GridShape shape) {
    detail::require_decodable(w, shape);
    std::vector<Point> points;
    int r = 0;
    int c = shape.m2;
    for (char letter : w.str()) {
        switch (letter) {
        case 'v': ++r; break;
        case 'h': --c; break;
        default:
            points.push_back({r + 1, c});
            ++r;
            --c;
            break;
        }
    }
    return PointSet(shape, std::move(points));
}

inline PointSet word_to_antichain(const Word& w) { return word_to_antichain(w, w.implied_shape()); }

/// A canonical word encodes a maximal set iff it has no "vh".
inline bool word_is_maximal(const Word& w) {
    if (!w.is_canonical()) {
        throw Error(ErrorCode::NonCanonicalWord, "word '" + w.str() + "' contains \"hv\"");
    }
    return !w.contains_vh();
}

} // namespace macs
