#pragma once

// Published values used as fixed reference points: dF and dFh for
// m1, m2 = 1..8, and the (k, t) breakdown of dF(7, 7).

#include <array>

namespace macs::reference {

inline constexpr int kTableSize = 8;

/// dF(m1, m2), row m1 = 1..8, column m2 = 1..8.
inline constexpr std::array<std::array<long long, 8>, 8> kMaximalAntichains{{
    {1, 2, 3, 4, 5, 6, 7, 8},
    {2, 3, 5, 8, 12, 17, 23, 30},
    {3, 5, 9, 15, 24, 37, 55, 79},
    {4, 8, 15, 27, 46, 75, 118, 180},
    {5, 12, 24, 46, 83, 143, 237, 380},
    {6, 17, 37, 75, 143, 259, 450, 755},
    {7, 23, 55, 118, 237, 450, 817, 1429},
    {8, 30, 79, 180, 380, 755, 1429, 2599},
}};

/// dFh(m1, m2), same layout.
inline constexpr std::array<std::array<long long, 8>, 8> kMaximalFirstStep{{
    {0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 1, 1, 1, 1, 1},
    {2, 2, 3, 4, 5, 6, 7, 8},
    {3, 4, 6, 9, 13, 18, 24, 31},
    {4, 7, 11, 18, 28, 42, 61, 86},
    {5, 11, 19, 33, 55, 88, 136, 204},
    {6, 16, 31, 57, 101, 171, 279, 441},
    {7, 22, 48, 94, 176, 314, 538, 891},
}};

struct BreakdownRow {
    int k;
    int t;
    long long count;
};

/// Undoubled (k, t) counts for m = 7, t >= 1.
inline constexpr std::array<BreakdownRow, 14> kBreakdown7{{
    {1, 1, 1},
    {2, 1, 11}, {2, 2, 4},
    {3, 1, 45}, {3, 2, 27}, {3, 3, 9},
    {4, 1, 84}, {4, 2, 56}, {4, 3, 28}, {4, 4, 2},
    {5, 1, 70}, {5, 2, 35}, {5, 3, 15},
    {6, 1, 21},
}};

/// Doubled subtotals per k = 1..7 for m = 7 (k = 7 is the all-d word).
inline constexpr std::array<long long, 7> kBreakdown7Subtotals{2, 30, 162, 340, 240, 42, 1};

inline constexpr long long kBreakdown7Total = 817;

} // namespace macs::reference
