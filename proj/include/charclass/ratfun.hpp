#pragma once

#include "upoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace charclass {

// Element of K = F_p(t) in canonical form: gcd(num, den) = 1, den monic,
// zero stored as 0/1. Equality is structural.
class RatFun {
public:
    explicit RatFun(unsigned p) : num_(p), den_(UPoly::constant(p, 1)) {}
    RatFun(UPoly num); // NOLINT(google-explicit-constructor)
    RatFun(UPoly num, UPoly den);

    static RatFun zero(unsigned p) { return RatFun(p); }
    static RatFun one(unsigned p) { return constant(p, 1); }
    static RatFun constant(unsigned p, long long c) { return RatFun(UPoly::constant(p, c)); }
    static RatFun variable(unsigned p) { return RatFun(UPoly::variable(p)); }

    unsigned prime() const { return num_.prime(); }
    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return den_.is_one() && num_.is_constant(); }

    RatFun inverse() const;
    RatFun pow(long long e) const;

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a) { return RatFun(-a.num_, a.den_, Canonical{}); }
    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator<(const RatFun& a, const RatFun& b)
    {
        if (!(a.num_ == b.num_)) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

private:
    struct Canonical {};
    RatFun(UPoly num, UPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    UPoly num_;
    UPoly den_;
};

// d/dt by the quotient rule.
RatFun derivative(const RatFun& f);

// g with g^p = f if f lies in K^p = F_p(t^p), none otherwise.
std::optional<RatFun> pth_root(const RatFun& f);

// f^p, computed as f(t^p) (Frobenius fixes the prime field).
RatFun frobenius(const RatFun& f);

struct PartialFractionTerm {
    UPoly factor;       // monic irreducible q
    int multiplicity;   // m, the term is numerator / q^m
    UPoly numerator;    // deg < deg q, nonzero
};

struct PartialFractions {
    UPoly polynomial;
    std::vector<PartialFractionTerm> terms; // grouped by factor, increasing multiplicity
};

// f = polynomial + sum numerator / factor^multiplicity.
PartialFractions partial_fractions(const RatFun& f);

std::string to_string(const RatFun& f, const std::string& var = "t");

template <>
struct RingTraits<RatFun> {
    static RatFun zero(const RatFun& like) { return RatFun::zero(like.prime()); }
    static RatFun one(const RatFun& like) { return RatFun::one(like.prime()); }
    static RatFun from_int(const RatFun& like, long long n) { return RatFun::constant(like.prime(), n); }
};

} // namespace charclass
