#pragma once

#include "bigint.hpp"

namespace charclass {

// Ring constants for coefficient types whose zero and one depend on runtime
// context (the characteristic of a RatFun, the presentation of a K0Element).
// Both functions take a sample element that carries that context.
template <class T>
struct RingTraits;

template <>
struct RingTraits<BigInt> {
    static BigInt zero(const BigInt&) { return 0; }
    static BigInt one(const BigInt&) { return 1; }
    static BigInt from_int(const BigInt&, long long n) { return n; }
};

template <>
struct RingTraits<long long> {
    static long long zero(long long) { return 0; }
    static long long one(long long) { return 1; }
    static long long from_int(long long, long long n) { return n; }
};

} // namespace charclass
