#pragma once

// Exact counts of antichains (dE) and maximal antichains (dF) of
// [m1] x [m2], by four independent routes:
//   - Heinz's conjectured four-term diagonal recurrence,
//   - the explicit double sum over (k d-letters, t transitions),
//   - the double recurrence coupling dF with dFh,
//   - the simple recurrence partitioning by the element met on the border.

#include "macs/bigint.hpp"
#include "macs/error.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace macs {

/// (rows + 1) x (cols + 1) grid of counts indexed from 0.
class CountGrid {
public:
    CountGrid() = default;
    CountGrid(int rows, int cols)
        : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>((rows + 1) * (cols + 1))) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const BigCount& at(int i, int j) const { return cells_[index(i, j)]; }
    BigCount& at(int i, int j) { return cells_[index(i, j)]; }

private:
    std::size_t index(int i, int j) const {
        if (i < 0 || i > rows_ || j < 0 || j > cols_) {
            throw Error(ErrorCode::InvalidArgument,
                        "count grid index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
        }
        return static_cast<std::size_t>(i * (cols_ + 1) + j);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigCount> cells_;
};

namespace detail {

inline void require_non_negative(int a, int b) {
    if (a < 0 || b < 0) {
        throw Error(ErrorCode::InvalidArgument, "chain sizes must be non-negative");
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// Antichains

/// dE(m1, m2) = C(m1 + m2, m1): one antichain per monotone lattice walk.
inline BigCount count_antichains(int m1, int m2) {
    detail::require_non_negative(m1, m2);
    return binomial(m1 + m2, m1);
}

// ---------------------------------------------------------------------------
// Heinz recurrence (diagonal only, unproven)

struct HeinzRun {
    std::vector<BigCount> values;    // dF(m, m) for m = 0 .. last computed
    std::optional<int> first_failure; // first m whose bracket is not divisible by m
};

/// m * dF(m,m) = (4m-3) dF(m-1) - (2m-5) dF(m-2) + dF(m-3) - (m-3) dF(m-4),
/// seeded with 1, 1, 3, 9 for m = 0..3. Stops at the first non-integral step.
inline HeinzRun run_heinz(int mmax) {
    if (mmax < 0) {
        throw Error(ErrorCode::InvalidArgument, "Heinz recurrence needs m >= 0");
    }
    HeinzRun run;
    const BigCount seeds[] = {1, 1, 3, 9};
    for (int m = 0; m <= std::min(mmax, 3); ++m) {
        run.values.push_back(seeds[m]);
    }
    for (int m = 4; m <= mmax; ++m) {
        const auto& v = run.values;
        BigCount bracket = BigCount(4 * m - 3) * v[m - 1] - BigCount(2 * m - 5) * v[m - 2] + v[m - 3] -
                           BigCount(m - 3) * v[m - 4];
        if (bracket % m != 0) {
            run.first_failure = m;
            break;
        }
        run.values.push_back(bracket / m);
    }
    return run;
}

inline std::vector<BigCount> heinz_diagonal(int mmax) {
    HeinzRun run = run_heinz(mmax);
    if (run.first_failure) {
        throw Error(ErrorCode::NonIntegerStep,
                    "Heinz bracket not divisible by m = " + std::to_string(*run.first_failure));
    }
    return std::move(run.values);
}

inline BigCount count_maximal_heinz(int m) { return heinz_diagonal(m).back(); }

// ---------------------------------------------------------------------------
// Explicit double sum (diagonal only)

/// Words of type k d + l h + l v (l = m - k) that start, after their leading
/// d's, with an h and have t transitions. `multiplicity` is 2 for these rows
/// (the v-first mirror images) and 1 for the single all-d word (k = m, t = 0).
struct TransitionProfile {
    int k = 0;
    int t = 0;
    BigCount schema_count;    // C(l-1, floor(t/2)) * C(l-1, floor((t-1)/2))
    BigCount insertion_count; // C(2m-k-t, k-t): spare d's spread over 2l+1 slots
    BigCount term;            // schema_count * insertion_count
    int multiplicity = 2;

    BigCount words() const { return term * multiplicity; }
};

inline std::vector<TransitionProfile> explicit_breakdown(int m) {
    if (m < 1) {
        throw Error(ErrorCode::InvalidArgument, "explicit formula needs m >= 1");
    }
    std::vector<TransitionProfile> rows;
    const int split = (2 * m - 1) / 3;
    for (int k = 1; k <= m - 1; ++k) {
        const int t_max = k <= split ? k : 2 * m - 2 * k - 1;
        for (int t = 1; t <= t_max; ++t) {
            TransitionProfile row;
            row.k = k;
            row.t = t;
            row.schema_count = binomial(m - k - 1, t / 2) * binomial(m - k - 1, (t - 1) / 2);
            row.insertion_count = binomial(2 * m - k - t, k - t);
            row.term = row.schema_count * row.insertion_count;
            rows.push_back(std::move(row));
        }
    }
    TransitionProfile all_d;
    all_d.k = m;
    all_d.t = 0;
    all_d.schema_count = 1;
    all_d.insertion_count = 1;
    all_d.term = 1;
    all_d.multiplicity = 1;
    rows.push_back(std::move(all_d));
    return rows;
}

/// Doubled subtotal per k, in increasing k (the k = m entry is 1).
inline std::vector<std::pair<int, BigCount>> explicit_subtotals(const std::vector<TransitionProfile>& rows) {
    std::vector<std::pair<int, BigCount>> out;
    for (const auto& row : rows) {
        if (out.empty() || out.back().first != row.k) {
            out.emplace_back(row.k, 0);
        }
        out.back().second += row.words();
    }
    return out;
}

inline BigCount count_maximal_explicit(int m) {
    BigCount total = 0;
    for (const auto& row : explicit_breakdown(m)) {
        total += row.words();
    }
    return total;
}

// ---------------------------------------------------------------------------
// Double recurrence

struct DoubleRecurrence {
    CountGrid dF;
    CountGrid dFh;
};

/// dF(m1,m2)  = dFh(m1,m2) + dFh(m2,m1) + dF(m1-1,m2-1)
/// dFh(m1,m2) = dF(m1-1,m2) - dF(m1-1,m2-1) + dFh(m1-1,m2-1)
/// for m1, m2 >= 2. Row and column 1 are seeded with dF(1,m) = m,
/// dFh(1,m) = 0 and dFh(m,1) = m-1; dF is 1 on row and column 0.
/// The grid is square since dF(m1,m2) needs the transposed dFh cell.
inline DoubleRecurrence double_recurrence(int n) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "double recurrence needs size >= 1");
    }
    DoubleRecurrence r{CountGrid(n, n), CountGrid(n, n)};
    for (int i = 0; i <= n; ++i) {
        r.dF.at(i, 0) = 1;
        r.dF.at(0, i) = 1;
    }
    for (int i = 1; i <= n; ++i) {
        r.dF.at(1, i) = i;
        r.dF.at(i, 1) = i;
        r.dFh.at(1, i) = 0;
        r.dFh.at(i, 1) = i - 1;
    }
    // Every dependency of (i, j) lies on an earlier anti-diagonal, except the
    // transposed dFh cell, which is why dFh is filled first on each diagonal.
    for (int s = 4; s <= 2 * n; ++s) {
        const int lo = std::max(2, s - n);
        const int hi = std::min(n, s - 2);
        for (int i = lo; i <= hi; ++i) {
            const int j = s - i;
            BigCount h = r.dF.at(i - 1, j) - r.dF.at(i - 1, j - 1) + r.dFh.at(i - 1, j - 1);
            if (h < 0) {
                throw Error(ErrorCode::MethodDisagreement,
                            "double recurrence produced a negative dFh at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
            }
            r.dFh.at(i, j) = std::move(h);
        }
        for (int i = lo; i <= hi; ++i) {
            const int j = s - i;
            r.dF.at(i, j) = r.dFh.at(i, j) + r.dFh.at(j, i) + r.dF.at(i - 1, j - 1);
        }
    }
    return r;
}

struct DoubleCount {
    BigCount dF;
    BigCount dFh;
};

inline DoubleCount count_maximal_double(int m1, int m2) {
    if (m1 < 1 || m2 < 1) {
        throw Error(ErrorCode::InvalidArgument, "double recurrence needs m1, m2 >= 1");
    }
    const DoubleRecurrence r = double_recurrence(std::max(m1, m2));
    return {r.dF.at(m1, m2), r.dFh.at(m1, m2)};
}

// ---------------------------------------------------------------------------
// Simple recurrence

/// dF(m1,m2) = dF(m1-1,m2-1) + sum_{i=0}^{m1-2} dF(i,m2-1) + sum_{i=0}^{m2-2} dF(m1-1,i)
/// with dF(m,0) = dF(0,m) = 1, evaluated with running column / row sums.
inline CountGrid simple_recurrence(int max1, int max2) {
    detail::require_non_negative(max1, max2);
    CountGrid dF(max1, max2);
    CountGrid col_sum(max1, max2); // sum_{i' <= i} dF(i', j)
    CountGrid row_sum(max1, max2); // sum_{j' <= j} dF(i, j')
    for (int i = 0; i <= max1; ++i) {
        for (int j = 0; j <= max2; ++j) {
            if (i == 0 || j == 0) {
                dF.at(i, j) = 1;
            } else {
                BigCount v = dF.at(i - 1, j - 1);
                if (i >= 2) {
                    v += col_sum.at(i - 2, j - 1);
                }
                if (j >= 2) {
                    v += row_sum.at(i - 1, j - 2);
                }
                dF.at(i, j) = std::move(v);
            }
            col_sum.at(i, j) = dF.at(i, j) + (i > 0 ? col_sum.at(i - 1, j) : BigCount(0));
            row_sum.at(i, j) = dF.at(i, j) + (j > 0 ? row_sum.at(i, j - 1) : BigCount(0));
        }
    }
    return dF;
}

inline BigCount count_maximal_simple(int m1, int m2) { return simple_recurrence(m1, m2).at(m1, m2); }

/// dF(m, m) for m = 0 .. mmax by the simple recurrence.
inline std::vector<BigCount> maximal_diagonal(int mmax) {
    const CountGrid grid = simple_recurrence(mmax, mmax);
    std::vector<BigCount> out;
    for (int m = 0; m <= mmax; ++m) {
        out.push_back(grid.at(m, m));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cross-checked table

struct CountTable {
    int max1 = 0;
    int max2 = 0;
    CountGrid dE;
    CountGrid dF;
    CountGrid dFh;
};

namespace detail {

[[noreturn]] inline void disagree(const char* a, const char* b, int i, int j, const BigCount& x, const BigCount& y) {
    std::ostringstream msg;
    msg << a << " and " << b << " differ at (" << i << "," << j << "): " << x << " vs " << y;
    throw Error(ErrorCode::MethodDisagreement, msg.str());
}

} // namespace detail

/// dE by binomials, dF by the simple recurrence and dFh by the double one;
/// dF is checked against the double recurrence on every cell and against
/// the Heinz and explicit formulas on the diagonal.
inline CountTable build_table(int max1, int max2) {
    if (max1 < 1 || max2 < 1) {
        throw Error(ErrorCode::InvalidArgument, "table dimensions must be >= 1");
    }
    CountTable table;
    table.max1 = max1;
    table.max2 = max2;
    table.dE = CountGrid(max1, max2);
    table.dF = simple_recurrence(max1, max2);
    table.dFh = CountGrid(max1, max2);

    const DoubleRecurrence dbl = double_recurrence(std::max(max1, max2));
    for (int i = 0; i <= max1; ++i) {
        for (int j = 0; j <= max2; ++j) {
            table.dE.at(i, j) = count_antichains(i, j);
            table.dFh.at(i, j) = dbl.dFh.at(i, j);
            if (i >= 1 && j >= 1 && table.dF.at(i, j) != dbl.dF.at(i, j)) {
                detail::disagree("simple", "double", i, j, table.dF.at(i, j), dbl.dF.at(i, j));
            }
        }
    }

    const int diag = std::min(max1, max2);
    const HeinzRun heinz = run_heinz(diag);
    if (heinz.first_failure) {
        throw Error(ErrorCode::NonIntegerStep,
                    "Heinz bracket not divisible by m = " + std::to_string(*heinz.first_failure));
    }
    for (int m = 1; m <= diag; ++m) {
        if (heinz.values[m] != table.dF.at(m, m)) {
            detail::disagree("simple", "heinz", m, m, table.dF.at(m, m), heinz.values[m]);
        }
        const BigCount explicit_value = count_maximal_explicit(m);
        if (explicit_value != table.dF.at(m, m)) {
            detail::disagree("simple", "explicit", m, m, table.dF.at(m, m), explicit_value);
        }
    }
    return table;
}

enum class TableKind { DF, DFh, DE };

inline const CountGrid& select(const CountTable& table, TableKind kind) {
    switch (kind) {
    case TableKind::DF: return table.dF;
    case TableKind::DFh: return table.dFh;
    case TableKind::DE: return table.dE;
    }
    return table.dF;
}

/// Header `m2=1,...,m2=N`, then one line per m1 = 1..max1 of decimal values.
inline std::string to_csv(const CountTable& table, TableKind kind) {
    const CountGrid& grid = select(table, kind);
    std::ostringstream out;
    for (int j = 1; j <= table.max2; ++j) {
        out << (j > 1 ? "," : "") << "m2=" << j;
    }
    out << '\n';
    for (int i = 1; i <= table.max1; ++i) {
        for (int j = 1; j <= table.max2; ++j) {
            out << (j > 1 ? "," : "") << grid.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

} // namespace macs
