#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace macs {

/// Exact counts. Signed so intermediate brackets may go negative; every
/// published count is checked to be non-negative where it is produced.
using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigCount& value) { return value.str(); }

/// binomial(n, r), zero whenever r < 0 or r > n (including n < 0).
inline BigCount binomial(long long n, long long r) {
    if (n < 0 || r < 0 || r > n) {
        return 0;
    }
    if (r > n - r) {
        r = n - r;
    }
    BigCount result = 1;
    for (long long i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i;
    }
    return result;
}

} // namespace macs
