#pragma once

// Monotone lattice walks of unit steps H' (first coordinate +1) and V'
// (second coordinate +1 going up, -1 going down). The endpoints of the H'V'
// pairs of a walk form a strict chain (walk from (0,0) to (m1,m2)) or an
// antichain on grid nodes (walk from (0,m2) to (m1,0)).

#include "macs/poset.hpp"
#include "macs/word.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace macs {

enum class Step : char { H = 'H', V = 'V' };

enum class WalkOrientation { Up, Down };

inline const char* to_string(WalkOrientation o) { return o == WalkOrientation::Up ? "up" : "down"; }

class Walk {
public:
    Walk(std::vector<Step> steps, WalkOrientation orientation)
        : steps_(std::move(steps)), orientation_(orientation) {
        if (count(Step::H) < 1 || count(Step::V) < 1) {
            throw Error(ErrorCode::LengthMismatch, "walk needs at least one H' and one V' step");
        }
    }

    const std::vector<Step>& steps() const { return steps_; }
    WalkOrientation orientation() const { return orientation_; }
    std::size_t size() const { return steps_.size(); }
    Step operator[](std::size_t i) const { return steps_[i]; }

    int count(Step s) const { return static_cast<int>(std::count(steps_.begin(), steps_.end(), s)); }

    /// m1 = number of H' steps, m2 = number of V' steps.
    GridShape shape() const { return GridShape(count(Step::H), count(Step::V)); }

    /// Grid node reached after the first `k` steps.
    Point node(std::size_t k) const {
        int x = 0;
        int v = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (steps_[i] == Step::H) {
                ++x;
            } else {
                ++v;
            }
        }
        return orientation_ == WalkOrientation::Up ? Point{x, v} : Point{x, count(Step::V) - v};
    }

    Walk mirrored() const {
        return Walk(steps_, orientation_ == WalkOrientation::Up ? WalkOrientation::Down : WalkOrientation::Up);
    }

    friend bool operator==(const Walk&, const Walk&) = default;

private:
    std::vector<Step> steps_;
    WalkOrientation orientation_;
};

/// Accepts "HVVH..." or the primed form "h'v'v'h'..." (case-insensitive).
inline Walk parse_walk(std::string_view text, WalkOrientation orientation) {
    std::vector<Step> steps;
    for (char c : text) {
        const char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (u == 'H') {
            steps.push_back(Step::H);
        } else if (u == 'V') {
            steps.push_back(Step::V);
        } else if (c != '\'' && c != ' ') {
            throw Error(ErrorCode::ParseError, std::string("walk step must be H or V; got '") + c + "'");
        }
    }
    return Walk(std::move(steps), orientation);
}

inline std::string format_walk(const Walk& w) {
    std::string out;
    for (Step s : w.steps()) {
        out.push_back(static_cast<char>(s));
    }
    return out;
}

inline std::string format_walk_primed(const Walk& w) {
    std::string out;
    for (Step s : w.steps()) {
        out.push_back(s == Step::H ? 'h' : 'v');
        out.push_back('\'');
    }
    return out;
}

/// Start indices i of the H'V' pairs (steps i, i+1). Such pairs can never
/// overlap, so scanning left to right is the greedy extraction.
inline std::vector<std::size_t> hv_pairs(const Walk& w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == Step::H && w[i + 1] == Step::V) {
            out.push_back(i);
        }
    }
    return out;
}

/// Start indices of V'H' pairs sharing no step with any H'V' pair.
inline std::vector<std::size_t> disjoint_vh_pairs(const Walk& w) {
    std::vector<bool> used(w.size(), false);
    for (std::size_t i : hv_pairs(w)) {
        used[i] = used[i + 1] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == Step::V && w[i + 1] == Step::H && !used[i] && !used[i + 1]) {
            out.push_back(i);
        }
    }
    return out;
}

namespace detail {

inline std::vector<Point> pair_endpoints(const Walk& w, const std::vector<std::size_t>& starts) {
    std::vector<Point> out;
    out.reserve(starts.size());
    for (std::size_t i : starts) {
        out.push_back(w.node(i + 2));
    }
    return out;
}

inline void require_orientation(const Walk& w, WalkOrientation expected) {
    if (w.orientation() != expected) {
        throw Error(ErrorCode::WrongOrientation,
                    std::string("expected a walk oriented ") + to_string(expected) + ", got " +
                        to_string(w.orientation()));
    }
}

} // namespace detail

inline PointSet walk_to_strict_chain(const Walk& w) {
    detail::require_orientation(w, WalkOrientation::Up);
    return PointSet(w.shape(), detail::pair_endpoints(w, hv_pairs(w)));
}

inline bool walk_strict_chain_is_maximal(const Walk& w) {
    detail::require_orientation(w, WalkOrientation::Up);
    return disjoint_vh_pairs(w).empty();
}

/// Endpoints, in the walk's own grid coordinates, of the disjoint V'H'
/// pairs; each can be added to the set the walk encodes.
inline std::vector<Point> walk_augmenting_points(const Walk& w) {
    return detail::pair_endpoints(w, disjoint_vh_pairs(w));
}

/// Grid-node coordinates, 0-based, exactly as the walk visits them. The
/// result may contain second coordinate 0 and is not shifted into [m1]x[m2].
inline std::vector<Point> walk_to_antichain(const Walk& w) {
    detail::require_orientation(w, WalkOrientation::Down);
    return detail::pair_endpoints(w, hv_pairs(w));
}

inline bool walk_antichain_is_maximal(const Walk& w) {
    detail::require_orientation(w, WalkOrientation::Down);
    return disjoint_vh_pairs(w).empty();
}

/// An up walk whose H'V' endpoints are exactly `chain`. Between elements
/// the V' steps go first so no extra H'V' pair appears.
inline Walk strict_chain_to_walk(const PointSet& chain) {
    require_kind(chain, SetKind::StrictChain, ErrorCode::NotStrictChain);
    std::vector<Step> steps;
    int x = 0;
    int y = 0;
    auto advance = [&](int tx, int ty) {
        steps.insert(steps.end(), static_cast<std::size_t>(ty - y), Step::V);
        steps.insert(steps.end(), static_cast<std::size_t>(tx - x), Step::H);
        x = tx;
        y = ty;
    };
    for (const Point& p : chain) {
        advance(p.x - 1, p.y - 1);
        steps.push_back(Step::H);
        steps.push_back(Step::V);
        x = p.x;
        y = p.y;
    }
    advance(chain.shape().m1, chain.shape().m2);
    return Walk(std::move(steps), WalkOrientation::Up);
}

/// Renames H' -> v and V' -> h, collapses every H'V' pair into d and puts
/// each d-delimited block in v-before-h order. The result is the canonical
/// word of walk_to_strict_chain(w).
inline Word walk_to_word(const Walk& w) {
    detail::require_orientation(w, WalkOrientation::Up);
    std::string out;
    std::size_t block_v = 0;
    std::size_t block_h = 0;
    auto flush = [&]() {
        out.append(block_v, 'v');
        out.append(block_h, 'h');
        block_v = block_h = 0;
    };
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == Step::H && i + 1 < w.size() && w[i + 1] == Step::V) {
            flush();
            out.push_back('d');
            ++i;
        } else if (w[i] == Step::H) {
            ++block_v;
        } else {
            ++block_h;
        }
    }
    flush();
    return Word(out, LineKind::StrictChain);
}

} // namespace macs
