#pragma once

// Growth diagnostics for dF(m, m). Counts stay exact until the final
// division; doubles appear only in the returned ratios.

#include "macs/bigint.hpp"
#include "macs/counting.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace macs {

/// a^3 - 3a^2 - a - 1, i.e. the fixed-point equation a = 4 - 2/a - 1/a^3
/// with the spurious root a = 1 divided out.
constexpr double rho_cubic(double a) { return ((a - 3.0) * a - 1.0) * a - 1.0; }

/// The quartic a^4 - 4a^3 + 2a^2 + 1 before removing the root a = 1.
constexpr double rho_quartic(double a) { return (((a - 4.0) * a + 2.0) * a) * a + 1.0; }

/// Real root of rho_cubic in (3, 4), bracketed TOMS 748 to full double precision.
inline double rho() {
    std::uintmax_t max_iter = 200;
    const auto [lo, hi] = boost::math::tools::toms748_solve(
        [](double a) { return rho_cubic(a); }, 3.0, 4.0, boost::math::tools::eps_tolerance<double>(52), max_iter);
    return 0.5 * (lo + hi);
}

/// (1/3) (3 + cbrt(54 - 6 sqrt 33) + cbrt(6 (9 + sqrt 33))).
inline double rho_radical() {
    const double s = std::sqrt(33.0);
    return (3.0 + std::cbrt(54.0 - 6.0 * s) + std::cbrt(6.0 * (9.0 + s))) / 3.0;
}

inline double exact_ratio(const BigCount& num, const BigCount& den) {
    return BigRational(num, den).convert_to<double>();
}

/// dF(m,m) / dF(m-1,m-1) for m = 2..mmax.
inline std::vector<double> ratio_series(int mmax) {
    if (mmax < 2) {
        throw Error(ErrorCode::InvalidArgument, "ratio series needs mmax >= 2");
    }
    const auto diag = maximal_diagonal(mmax);
    std::vector<double> out;
    for (int m = 2; m <= mmax; ++m) {
        out.push_back(exact_ratio(diag[m], diag[m - 1]));
    }
    return out;
}

/// dF(m,m) / dE(m,m) for m = 1..mmax.
inline std::vector<double> density_series(int mmax) {
    if (mmax < 1) {
        throw Error(ErrorCode::InvalidArgument, "density series needs mmax >= 1");
    }
    const auto diag = maximal_diagonal(mmax);
    std::vector<double> out;
    for (int m = 1; m <= mmax; ++m) {
        out.push_back(exact_ratio(diag[m], count_antichains(m, m)));
    }
    return out;
}

/// dE(m+1,m+1) / dE(m,m) = (2m+2)(2m+1) / (m+1)^2, which tends to 4.
inline double antichain_ratio(int m) {
    const double a = static_cast<double>(m);
    return (2.0 * a + 2.0) * (2.0 * a + 1.0) / ((a + 1.0) * (a + 1.0));
}

/// True iff dF(m,m)/dE(m,m) strictly decreases over [from, to], decided by
/// exact cross-multiplication.
inline bool density_strictly_decreasing(int from, int to) {
    const auto diag = maximal_diagonal(to);
    for (int m = from; m < to; ++m) {
        if (diag[m + 1] * count_antichains(m, m) >= diag[m] * count_antichains(m + 1, m + 1)) {
            return false;
        }
    }
    return true;
}

/// CSV `m,dF,ratio,density` for m = 2..mmax followed by `rho,<10 decimals>`.
/// Ratios are printed with 4 decimals, densities with 6 significant digits.
inline std::string asymptotics_csv(int mmax) {
    if (mmax < 2) {
        throw Error(ErrorCode::InvalidArgument, "asymptotics need mmax >= 2");
    }
    const auto diag = maximal_diagonal(mmax);
    std::ostringstream out;
    out << "m,dF,ratio,density\n";
    for (int m = 2; m <= mmax; ++m) {
        std::ostringstream ratio;
        ratio << std::fixed << std::setprecision(4) << exact_ratio(diag[m], diag[m - 1]);
        std::ostringstream density;
        density << std::setprecision(6) << exact_ratio(diag[m], count_antichains(m, m));
        out << m << ',' << diag[m] << ',' << ratio.str() << ',' << density.str() << '\n';
    }
    out << "rho," << std::fixed << std::setprecision(10) << rho() << '\n';
    return out.str();
}

} // namespace macs
