#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace charclass {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline std::string to_string(const BigInt& value) { return value.str(); }

} // namespace charclass
