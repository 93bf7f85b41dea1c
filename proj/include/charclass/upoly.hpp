#pragma once

#include "fp.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace charclass {

// Dense univariate polynomial over F_p, coefficients stored low degree first
// with no trailing zeros. The zero polynomial has degree -1.
class UPoly {
public:
    using Coeff = std::uint32_t;

    explicit UPoly(unsigned p);
    UPoly(unsigned p, std::vector<long long> coeffs);

    static UPoly constant(unsigned p, long long c);
    static UPoly monomial(unsigned p, long long c, std::size_t degree);
    static UPoly variable(unsigned p) { return monomial(p, 1, 1); }

    unsigned prime() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    Coeff leading() const { return c_.empty() ? 0 : c_.back(); }
    Coeff operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
    std::span<const Coeff> coeffs() const { return c_; }

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator-(const UPoly& a);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(Coeff c, const UPoly& a);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

    Coeff eval(Coeff x) const;
    UPoly monic() const;
    UPoly pow(unsigned long long e) const;

    // t -> t^k
    UPoly inflate(std::size_t k) const;
    // Inverse of inflate; none if some exponent is not a multiple of k.
    std::optional<UPoly> deflate(std::size_t k) const;

    // Deterministic total order (degree, then coefficients from the top).
    friend bool operator<(const UPoly& a, const UPoly& b);

private:
    void trim();

    unsigned p_;
    std::vector<Coeff> c_;
};

UPoly derivative(const UPoly& f);

// Euclidean division a = q*b + r with deg r < deg b.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
inline UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
inline UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

// Monic gcd (zero if both are zero).
UPoly gcd(UPoly a, UPoly b);

struct ExtendedGcd {
    UPoly g; // monic
    UPoly s;
    UPoly t; // s*a + t*b = g
};
ExtendedGcd xgcd(const UPoly& a, const UPoly& b);

// Inverse of a modulo m; throws if gcd(a, m) != 1.
UPoly inverse_mod(const UPoly& a, const UPoly& m);

UPoly powmod(const UPoly& base, const BigInt& exponent, const UPoly& modulus);

struct Factorization {
    UPoly::Coeff unit = 0;
    // Monic irreducible factors with multiplicities, sorted by operator<.
    std::vector<std::pair<UPoly, int>> factors;
};

// Complete factorization over F_p (square-free, distinct-degree and
// equal-degree splitting). Requires f != 0.
Factorization factor(const UPoly& f);

bool is_irreducible(const UPoly& f);

// Textual form in the variable `var`, e.g. "t^2 + 2*t + 1".
std::string to_string(const UPoly& f, const std::string& var = "t");

} // namespace charclass
