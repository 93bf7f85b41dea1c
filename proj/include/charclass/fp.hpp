#pragma once

#include "errors.hpp"
#include "traits.hpp"

#include <cstdint>
#include <ostream>

namespace charclass {

inline constexpr unsigned kMaxPrime = 97;

constexpr bool is_prime(unsigned n)
{
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Throws unless 2 <= p <= 97 and p prime.
inline void check_prime(unsigned p)
{
    require(p >= 2 && p <= kMaxPrime && is_prime(p),
            "characteristic must be a prime in [2, 97], got " + std::to_string(p));
}

namespace modp {

inline std::uint32_t reduce(long long a, unsigned p)
{
    long long r = a % static_cast<long long>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}
inline std::uint32_t add(std::uint32_t a, std::uint32_t b, unsigned p) { return (a + b) % p; }
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, unsigned p) { return (a + p - b) % p; }
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, unsigned p) { return (a * b) % p; }
inline std::uint32_t neg(std::uint32_t a, unsigned p) { return a == 0 ? 0 : p - a; }

inline std::uint32_t pow(std::uint32_t a, unsigned long long e, unsigned p)
{
    std::uint32_t result = 1 % p;
    while (e > 0) {
        if (e & 1) result = mul(result, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return result;
}

inline std::uint32_t inv(std::uint32_t a, unsigned p)
{
    if (a % p == 0) throw PreconditionError("division by zero in F_" + std::to_string(p));
    return pow(a, p - 2, p);
}

} // namespace modp

// Element of the prime field F_p.
class FpElem {
public:
    FpElem(long long value, unsigned p) : value_(modp::reduce(value, p)), p_(p) { check_prime(p); }

    std::uint32_t value() const { return value_; }
    unsigned prime() const { return p_; }
    bool is_zero() const { return value_ == 0; }

    FpElem inverse() const { return from_raw(modp::inv(value_, p_), p_); }
    FpElem pow(unsigned long long e) const { return from_raw(modp::pow(value_, e, p_), p_); }

    friend FpElem operator+(FpElem a, FpElem b) { return from_raw(modp::add(a.value_, b.check(a), a.p_), a.p_); }
    friend FpElem operator-(FpElem a, FpElem b) { return from_raw(modp::sub(a.value_, b.check(a), a.p_), a.p_); }
    friend FpElem operator*(FpElem a, FpElem b) { return from_raw(modp::mul(a.value_, b.check(a), a.p_), a.p_); }
    friend FpElem operator/(FpElem a, FpElem b) { return a * b.inverse(); }
    friend FpElem operator-(FpElem a) { return from_raw(modp::neg(a.value_, a.p_), a.p_); }
    friend bool operator==(FpElem a, FpElem b) { return a.value_ == b.value_ && a.p_ == b.p_; }

    friend std::ostream& operator<<(std::ostream& os, FpElem a) { return os << a.value_; }

private:
    static FpElem from_raw(std::uint32_t value, unsigned p)
    {
        FpElem r;
        r.value_ = value;
        r.p_ = p;
        return r;
    }
    FpElem() = default;

    std::uint32_t check(const FpElem& other) const
    {
        require(p_ == other.p_, "mismatched characteristic");
        return value_;
    }

    std::uint32_t value_ = 0;
    unsigned p_ = 2;
};

template <>
struct RingTraits<FpElem> {
    static FpElem zero(const FpElem& like) { return FpElem(0, like.prime()); }
    static FpElem one(const FpElem& like) { return FpElem(1, like.prime()); }
    static FpElem from_int(const FpElem& like, long long n) { return FpElem(n, like.prime()); }
};

} // namespace charclass
