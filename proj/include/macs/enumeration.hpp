#pragma once

// Exhaustive, duplicate-free streams over canonical words, maximal words,
// (maximal) antichains and walks of one shape. Words come out in
// lexicographic order with d < h < v; antichains in the order of their words;
// walks in lexicographic order with H' < V'.

#include "macs/bigint.hpp"
#include "macs/poset.hpp"
#include "macs/walk.hpp"
#include "macs/word.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace macs {

inline constexpr int kDefaultEnumerationGuard = 20;

enum class WordFilter {
    Canonical, // no "hv"
    Maximal,   // no "hv" and no "vh"
};

/// Streams the words of one shape with letter budgets m1 = #v + #d and
/// m2 = #h + #d. Single owner; not safe to share mid-iteration.
class WordCursor {
public:
    WordCursor(GridShape shape, WordFilter filter) : shape_(shape), filter_(filter) {}

    std::optional<Word> next() {
        if (done_) {
            return std::nullopt;
        }
        if (!started_) {
            started_ = true;
            current_.clear();
            complete(0, shape_.m1, shape_.m2);
            return Word(current_);
        }
        // Rightmost position whose letter can be bumped to a larger one with
        // a feasible completion; everything after it is rebuilt minimally.
        for (std::size_t i = current_.size(); i-- > 0;) {
            int a = shape_.m1;
            int b = shape_.m2;
            for (std::size_t k = 0; k < i; ++k) {
                consume(current_[k], a, b);
            }
            const char last = i > 0 ? current_[i - 1] : 0;
            for (char c : {'d', 'h', 'v'}) {
                if (c <= current_[i] || !allowed(last, c, a, b)) {
                    continue;
                }
                int a2 = a;
                int b2 = b;
                consume(c, a2, b2);
                if (!feasible(c, a2, b2)) {
                    continue;
                }
                current_.resize(i);
                current_.push_back(c);
                complete(current_.size(), a2, b2);
                return Word(current_);
            }
        }
        done_ = true;
        return std::nullopt;
    }

private:
    static void consume(char c, int& a, int& b) {
        if (c == 'd' || c == 'v') {
            --a;
        }
        if (c == 'd' || c == 'h') {
            --b;
        }
    }

    bool allowed(char last, char c, int a, int b) const {
        switch (c) {
        case 'd': return a > 0 && b > 0;
        case 'v': return a > 0 && last != 'h';
        default: return b > 0 && !(filter_ == WordFilter::Maximal && last == 'v');
        }
    }

    /// Whether some admissible suffix spends exactly (a, b) after `last`.
    bool feasible(char last, int a, int b) const {
        if (last == 'h' && b == 0 && a > 0) {
            return false;
        }
        if (filter_ == WordFilter::Maximal && last == 'v' && a == 0 && b > 0) {
            return false;
        }
        return true;
    }

    void complete(std::size_t from, int a, int b) {
        current_.resize(from);
        while (a > 0 || b > 0) {
            const char last = current_.empty() ? 0 : current_.back();
            for (char c : {'d', 'h', 'v'}) {
                if (!allowed(last, c, a, b)) {
                    continue;
                }
                int a2 = a;
                int b2 = b;
                consume(c, a2, b2);
                if (feasible(c, a2, b2)) {
                    current_.push_back(c);
                    a = a2;
                    b = b2;
                    break;
                }
            }
        }
    }

    GridShape shape_;
    WordFilter filter_;
    std::string current_;
    bool started_ = false;
    bool done_ = false;
};

/// Antichains decoded from the word stream (NE -> SW grid line).
class AntichainCursor {
public:
    AntichainCursor(GridShape shape, bool maximal_only)
        : shape_(shape), words_(shape, maximal_only ? WordFilter::Maximal : WordFilter::Canonical) {}

    std::optional<PointSet> next() {
        if (auto w = words_.next()) {
            return word_to_antichain(*w, shape_);
        }
        return std::nullopt;
    }

private:
    GridShape shape_;
    WordCursor words_;
};

/// All C(m1 + m2, m1) arrangements of m1 H' and m2 V' steps.
class WalkCursor {
public:
    WalkCursor(GridShape shape, WalkOrientation orientation) : orientation_(orientation) {
        steps_.assign(static_cast<std::size_t>(shape.m1), Step::H);
        steps_.insert(steps_.end(), static_cast<std::size_t>(shape.m2), Step::V);
    }

    std::optional<Walk> next() {
        if (done_) {
            return std::nullopt;
        }
        if (!started_) {
            started_ = true;
            return Walk(steps_, orientation_);
        }
        if (!std::next_permutation(steps_.begin(), steps_.end())) {
            done_ = true;
            return std::nullopt;
        }
        return Walk(steps_, orientation_);
    }

private:
    WalkOrientation orientation_;
    std::vector<Step> steps_;
    bool started_ = false;
    bool done_ = false;
};

template <class Cursor>
auto collect(Cursor cursor) {
    using Value = typename decltype(cursor.next())::value_type;
    std::vector<Value> out;
    while (auto v = cursor.next()) {
        out.push_back(std::move(*v));
    }
    return out;
}

inline std::vector<Word> enumerate_canonical_words(GridShape shape) {
    return collect(WordCursor(shape, WordFilter::Canonical));
}

inline std::vector<Word> enumerate_maximal_words(GridShape shape) {
    return collect(WordCursor(shape, WordFilter::Maximal));
}

inline std::vector<PointSet> enumerate_antichains(GridShape shape) { return collect(AntichainCursor(shape, false)); }

inline std::vector<PointSet> enumerate_maximal_antichains(GridShape shape) {
    return collect(AntichainCursor(shape, true));
}

inline std::vector<Walk> enumerate_walks(GridShape shape, WalkOrientation orientation) {
    return collect(WalkCursor(shape, orientation));
}

inline void require_enumerable(GridShape shape, int guard) {
    if (shape.m1 + shape.m2 > guard) {
        throw Error(ErrorCode::TooLarge, "enumeration limited to m1 + m2 <= " + std::to_string(guard) + ", got " +
                                             std::to_string(shape.m1) + "x" + std::to_string(shape.m2));
    }
}

/// Counts every antichain whose augmentation matrix is null. Independent of
/// the no-"vh" word characterisation used by the maximal-word stream.
inline BigCount brute_force_count_maximal(GridShape shape, int guard = kDefaultEnumerationGuard) {
    require_enumerable(shape, guard);
    BigCount count = 0;
    AntichainCursor cursor(shape, false);
    while (auto a = cursor.next()) {
        if (is_maximal(*a, SetKind::Antichain)) {
            ++count;
        }
    }
    return count;
}

} // namespace macs
