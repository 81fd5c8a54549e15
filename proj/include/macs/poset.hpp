#pragma once

// The poset [m1] x [m2] under componentwise dominance, the four set
// classifications, and the 0/1 step / augmentation matrices built on them.

#include "macs/error.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace macs {

/// Shape of the product of chains [m1] x [m2]; both sides are at least 1.
struct GridShape {
    int m1 = 1;
    int m2 = 1;

    GridShape() = default;
    GridShape(int rows, int cols) : m1(rows), m2(cols) {
        if (rows < 1 || cols < 1) {
            throw Error(ErrorCode::InvalidArgument,
                        "grid shape must be at least 1x1, got " + std::to_string(rows) + "x" +
                            std::to_string(cols));
        }
    }

    int cells() const { return m1 * m2; }
    bool contains(int x, int y) const { return x >= 1 && x <= m1 && y >= 1 && y <= m2; }

    friend bool operator==(const GridShape&, const GridShape&) = default;
};

/// A 1-based element (x, y) of [m1] x [m2]. Also used for raw grid-node
/// coordinates by the walk codec, where 0 is a legal coordinate.
struct Point {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
};

/// (x,y) >* (z,w): componentwise >= with at least one strict inequality.
constexpr bool dominates(Point p, Point q) {
    return p.x >= q.x && p.y >= q.y && (p.x > q.x || p.y > q.y);
}

/// (x,y) >> (z,w): both coordinates strictly greater.
constexpr bool strongly_dominates(Point p, Point q) { return p.x > q.x && p.y > q.y; }

constexpr bool comparable(Point p, Point q) { return dominates(p, q) || dominates(q, p); }

constexpr bool strongly_comparable(Point p, Point q) {
    return strongly_dominates(p, q) || strongly_dominates(q, p);
}

/// A set of points of one shape, kept sorted by x then y with no duplicates.
class PointSet {
public:
    explicit PointSet(GridShape shape) : shape_(shape) {}

    PointSet(GridShape shape, std::vector<Point> points) : shape_(shape), points_(std::move(points)) {
        for (const Point& p : points_) {
            if (!shape_.contains(p.x, p.y)) {
                throw Error(ErrorCode::InvalidArgument,
                            "point (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                                ") outside " + std::to_string(shape_.m1) + "x" +
                                std::to_string(shape_.m2));
            }
        }
        std::sort(points_.begin(), points_.end());
        if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
            throw Error(ErrorCode::InvalidArgument, "duplicate point in set");
        }
    }

    const GridShape& shape() const { return shape_; }
    const std::vector<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }

    bool contains(Point p) const { return std::binary_search(points_.begin(), points_.end(), p); }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    GridShape shape_;
    std::vector<Point> points_;
};

struct ClassificationFlags {
    bool is_antichain = true;
    bool is_strict_chain = true;
    bool is_chain = true;
    bool is_weak_antichain = true;

    friend bool operator==(const ClassificationFlags&, const ClassificationFlags&) = default;
};

inline ClassificationFlags classify(const PointSet& s) {
    ClassificationFlags flags;
    const auto& pts = s.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const Point p = pts[i];
            const Point q = pts[j];
            if (comparable(p, q)) {
                flags.is_antichain = false;
            }
            if (!strongly_comparable(p, q)) {
                flags.is_strict_chain = false;
            } else {
                flags.is_weak_antichain = false;
            }
            // x_i > x_j together with y_i < y_j, in either order
            if ((p.x > q.x && p.y < q.y) || (q.x > p.x && q.y < p.y)) {
                flags.is_chain = false;
            }
        }
    }
    return flags;
}

enum class SetKind { Antichain, StrictChain };

inline const char* to_string(SetKind kind) {
    return kind == SetKind::Antichain ? "antichain" : "strict chain";
}

inline void require_kind(const PointSet& s, SetKind kind, ErrorCode code) {
    const ClassificationFlags flags = classify(s);
    const bool ok = kind == SetKind::Antichain ? flags.is_antichain : flags.is_strict_chain;
    if (!ok) {
        throw Error(code, std::string("point set is not a ") + to_string(kind));
    }
}

/// True iff p can be added to s (p not in s) and s stays of the given kind.
inline bool can_extend(const PointSet& s, Point p, SetKind kind) {
    if (s.contains(p)) {
        return false;
    }
    for (const Point& q : s) {
        const bool ok = kind == SetKind::Antichain ? !comparable(p, q) : strongly_comparable(p, q);
        if (!ok) {
            return false;
        }
    }
    return true;
}

enum class MatrixRole { NWStep, SEStep, NEStep, SWStep, Augmentation };

inline const char* to_string(MatrixRole role) {
    switch (role) {
    case MatrixRole::NWStep: return "NW_step";
    case MatrixRole::SEStep: return "SE_step";
    case MatrixRole::NEStep: return "NE_step";
    case MatrixRole::SWStep: return "SW_step";
    case MatrixRole::Augmentation: return "augmentation";
    }
    return "unknown";
}

/// m1 x m2 matrix over {0,1}, row-major, addressed with 1-based (row, col)
/// so that rows are labelled by [m1] and columns by [m2].
class BinaryMatrix {
public:
    BinaryMatrix(GridShape shape, MatrixRole role, std::uint8_t fill = 1)
        : shape_(shape), role_(role), bits_(static_cast<std::size_t>(shape.cells()), fill ? 1 : 0) {}

    BinaryMatrix(GridShape shape, MatrixRole role, std::vector<std::uint8_t> bits)
        : shape_(shape), role_(role), bits_(std::move(bits)) {
        if (bits_.size() != static_cast<std::size_t>(shape_.cells())) {
            throw Error(ErrorCode::InvalidArgument, "matrix bit count does not match shape");
        }
        for (auto& b : bits_) {
            b = b ? 1 : 0;
        }
    }

    const GridShape& shape() const { return shape_; }
    MatrixRole role() const { return role_; }
    int rows() const { return shape_.m1; }
    int cols() const { return shape_.m2; }

    int at(int row, int col) const { return bits_[index(row, col)]; }
    void set(int row, int col, int bit) { bits_[index(row, col)] = bit ? 1 : 0; }

    bool is_null() const {
        return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
    }

    /// Positions holding `bit`, in row-major order.
    std::vector<Point> positions(int bit) const {
        std::vector<Point> out;
        for (int i = 1; i <= rows(); ++i) {
            for (int j = 1; j <= cols(); ++j) {
                if (at(i, j) == bit) {
                    out.push_back({i, j});
                }
            }
        }
        return out;
    }

    /// Staircase test for step roles: a zero forces zeros over the whole
    /// quadrant that opens toward the role's corner. Always false for
    /// augmentation matrices.
    bool satisfies_staircase() const {
        int sx = 0;
        int sy = 0;
        if (!corner_signs(role_, sx, sy)) {
            return false;
        }
        // A zero's two neighbours toward the corner must be zero; applied to
        // every cell this covers the whole quadrant.
        for (int i = 1; i <= rows(); ++i) {
            for (int j = 1; j <= cols(); ++j) {
                if (at(i, j) != 0) {
                    continue;
                }
                const int ni = i + sx;
                const int nj = j + sy;
                if (ni >= 1 && ni <= rows() && at(ni, j) != 0) {
                    return false;
                }
                if (nj >= 1 && nj <= cols() && at(i, nj) != 0) {
                    return false;
                }
            }
        }
        return true;
    }

    /// Direction (sx, sy) in which the zero region of a step role extends.
    static bool corner_signs(MatrixRole role, int& sx, int& sy) {
        switch (role) {
        case MatrixRole::NWStep: sx = -1; sy = -1; return true;
        case MatrixRole::SEStep: sx = 1; sy = 1; return true;
        case MatrixRole::NEStep: sx = -1; sy = 1; return true;
        case MatrixRole::SWStep: sx = 1; sy = -1; return true;
        case MatrixRole::Augmentation: return false;
        }
        return false;
    }

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    std::size_t index(int row, int col) const {
        if (!shape_.contains(row, col)) {
            throw Error(ErrorCode::InvalidArgument, "matrix index out of range");
        }
        return static_cast<std::size_t>((row - 1) * shape_.m2 + (col - 1));
    }

    GridShape shape_;
    MatrixRole role_;
    std::vector<std::uint8_t> bits_;
};

namespace detail {

template <class ZeroPredicate>
BinaryMatrix matrix_from(GridShape shape, MatrixRole role, ZeroPredicate is_zero) {
    BinaryMatrix m(shape, role, 1);
    for (int i = 1; i <= shape.m1; ++i) {
        for (int j = 1; j <= shape.m2; ++j) {
            if (is_zero(Point{i, j})) {
                m.set(i, j, 0);
            }
        }
    }
    return m;
}

inline BinaryMatrix conjunction(const BinaryMatrix& a, const BinaryMatrix& b) {
    BinaryMatrix out(a.shape(), MatrixRole::Augmentation, 1);
    for (int i = 1; i <= a.rows(); ++i) {
        for (int j = 1; j <= a.cols(); ++j) {
            out.set(i, j, a.at(i, j) & b.at(i, j));
        }
    }
    return out;
}

} // namespace detail

/// NW and SE step matrices of an antichain: zeros on the elements plus,
/// respectively, everything they dominate and everything dominating them.
inline std::pair<BinaryMatrix, BinaryMatrix> step_matrices(const PointSet& antichain) {
    require_kind(antichain, SetKind::Antichain, ErrorCode::NotAntichain);
    auto nw = detail::matrix_from(antichain.shape(), MatrixRole::NWStep, [&](Point p) {
        return std::any_of(antichain.begin(), antichain.end(),
                           [&](Point q) { return p == q || dominates(q, p); });
    });
    auto se = detail::matrix_from(antichain.shape(), MatrixRole::SEStep, [&](Point p) {
        return std::any_of(antichain.begin(), antichain.end(),
                           [&](Point q) { return p == q || dominates(p, q); });
    });
    return {std::move(nw), std::move(se)};
}

/// NE and SW step matrices of a strict chain. A zero marks an element or a
/// point lying weakly north-east (resp. south-west) of one, i.e. a point
/// that cannot be strongly compared with it.
inline std::pair<BinaryMatrix, BinaryMatrix> chain_step_matrices(const PointSet& chain) {
    require_kind(chain, SetKind::StrictChain, ErrorCode::NotStrictChain);
    auto ne = detail::matrix_from(chain.shape(), MatrixRole::NEStep, [&](Point p) {
        return std::any_of(chain.begin(), chain.end(),
                           [&](Point c) { return p.x <= c.x && p.y >= c.y; });
    });
    auto sw = detail::matrix_from(chain.shape(), MatrixRole::SWStep, [&](Point p) {
        return std::any_of(chain.begin(), chain.end(),
                           [&](Point c) { return p.x >= c.x && p.y <= c.y; });
    });
    return {std::move(ne), std::move(sw)};
}

/// Ones mark the points that can be added, one at a time, to `s`.
inline BinaryMatrix augmentation_matrix(const PointSet& s, SetKind kind) {
    require_kind(s, kind, ErrorCode::WrongKind);
    if (kind == SetKind::Antichain) {
        auto [nw, se] = step_matrices(s);
        return detail::conjunction(nw, se);
    }
    auto [ne, sw] = chain_step_matrices(s);
    return detail::conjunction(ne, sw);
}

/// Extremal zeros of a step matrix. For NW/SE matrices these form an
/// antichain, for NE/SW a strict chain; in both cases they are exactly the
/// set the matrix was built from.
inline PointSet noses(const BinaryMatrix& m) {
    int sx = 0;
    int sy = 0;
    if (!BinaryMatrix::corner_signs(m.role(), sx, sy) || !m.satisfies_staircase()) {
        throw Error(ErrorCode::NotStepMatrix,
                    std::string("matrix tagged ") + to_string(m.role()) + " is not a step matrix");
    }
    const std::vector<Point> zeros = m.positions(0);
    std::vector<Point> out;
    for (const Point& p : zeros) {
        const bool covered = std::any_of(zeros.begin(), zeros.end(), [&](Point q) {
            return q != p && sx * (q.x - p.x) <= 0 && sy * (q.y - p.y) <= 0;
        });
        if (!covered) {
            out.push_back(p);
        }
    }
    return PointSet(m.shape(), std::move(out));
}

inline bool is_maximal(const PointSet& s, SetKind kind) { return augmentation_matrix(s, kind).is_null(); }

/// No row or column contains the pattern 1...0...1.
inline bool has_consecutive_ones(const BinaryMatrix& m) {
    auto line_ok = [](const std::vector<int>& line) {
        int runs = 0;
        int prev = 0;
        for (int b : line) {
            if (b == 1 && prev == 0) {
                ++runs;
            }
            prev = b;
        }
        return runs <= 1;
    };
    for (int i = 1; i <= m.rows(); ++i) {
        std::vector<int> row;
        for (int j = 1; j <= m.cols(); ++j) {
            row.push_back(m.at(i, j));
        }
        if (!line_ok(row)) {
            return false;
        }
    }
    for (int j = 1; j <= m.cols(); ++j) {
        std::vector<int> col;
        for (int i = 1; i <= m.rows(); ++i) {
            col.push_back(m.at(i, j));
        }
        if (!line_ok(col)) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Text forms

inline std::string format_points(const std::vector<Point>& points) {
    if (points.empty()) {
        return "{}";
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) {
            out << ';';
        }
        out << '(' << points[i].x << ',' << points[i].y << ')';
    }
    return out.str();
}

inline std::string format_points(const PointSet& s) { return format_points(s.points()); }

/// Parses `(x,y);(x,y);...`. Whitespace is ignored; "" and "{}" are empty.
inline PointSet parse_points(std::string_view text, GridShape shape) {
    std::string compact;
    for (char c : text) {
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') {
            compact.push_back(c);
        }
    }
    std::vector<Point> points;
    if (compact.empty() || compact == "{}") {
        return PointSet(shape, std::move(points));
    }
    std::size_t pos = 0;
    auto fail = [&]() {
        throw Error(ErrorCode::ParseError, "malformed point list: '" + std::string(text) + "'");
    };
    auto read_int = [&]() {
        std::size_t start = pos;
        if (pos < compact.size() && compact[pos] == '-') {
            ++pos;
        }
        while (pos < compact.size() && compact[pos] >= '0' && compact[pos] <= '9') {
            ++pos;
        }
        if (pos == start || (pos == start + 1 && compact[start] == '-')) {
            fail();
        }
        return std::stoi(compact.substr(start, pos - start));
    };
    auto expect = [&](char c) {
        if (pos >= compact.size() || compact[pos] != c) {
            fail();
        }
        ++pos;
    };
    while (true) {
        expect('(');
        const int x = read_int();
        expect(',');
        const int y = read_int();
        expect(')');
        points.push_back({x, y});
        if (pos == compact.size()) {
            break;
        }
        expect(';');
    }
    return PointSet(shape, std::move(points));
}

/// One line of 0/1 characters per row, row 1 first, LF terminated.
inline std::string format_matrix(const BinaryMatrix& m) {
    std::string out;
    for (int i = 1; i <= m.rows(); ++i) {
        for (int j = 1; j <= m.cols(); ++j) {
            out.push_back(m.at(i, j) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

inline BinaryMatrix parse_matrix(std::string_view text, MatrixRole role) {
    std::vector<std::string> rows;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            if (!current.empty()) {
                rows.push_back(current);
            }
            current.clear();
        } else if (c == '0' || c == '1') {
            current.push_back(c);
        } else if (c != '\r' && c != ' ') {
            throw Error(ErrorCode::ParseError, std::string("unexpected matrix character '") + c + "'");
        }
    }
    if (!current.empty()) {
        rows.push_back(current);
    }
    if (rows.empty()) {
        throw Error(ErrorCode::ParseError, "empty matrix");
    }
    const std::size_t width = rows.front().size();
    std::vector<std::uint8_t> bits;
    for (const auto& r : rows) {
        if (r.size() != width) {
            throw Error(ErrorCode::ParseError, "ragged matrix rows");
        }
        for (char c : r) {
            bits.push_back(c == '1' ? 1 : 0);
        }
    }
    return BinaryMatrix(GridShape(static_cast<int>(rows.size()), static_cast<int>(width)), role,
                        std::move(bits));
}

} // namespace macs
