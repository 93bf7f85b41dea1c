#pragma once

#include "bigint.hpp"
#include "traits.hpp"

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace charclass {

// Exponent vector over an ordered alphabet of indeterminates. The alphabet
// itself (names) lives with whoever owns the polynomial; IntPoly only sees
// positions.
struct Monomial {
    boost::container::small_vector<std::uint16_t, 12> exps;

    unsigned degree() const;
    bool is_one() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
};

// Graded order: lower total degree first; within a degree, a monomial comes
// first when it has the larger exponent at the first differing position
// (lexicographic order of the sorted symbol lists).
bool monomial_less(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients. Terms are kept sorted by monomial_less with no zero
// coefficients, so structural equality is ring equality.
class IntPoly {
public:
    struct Term {
        Monomial monomial;
        BigInt coeff;
    };

    explicit IntPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static IntPoly constant(std::size_t nvars, const BigInt& c);
    static IntPoly variable(std::size_t nvars, std::size_t index);
    // Builds from arbitrary (possibly repeated, unsorted) terms.
    static IntPoly from_terms(std::size_t nvars, std::vector<Term> terms);

    std::size_t nvars() const { return nvars_; }
    std::span<const Term> terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned total_degree() const;
    // Coefficient of the constant monomial.
    BigInt constant_term() const;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
    IntPoly& operator*=(const BigInt& c);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator-(IntPoly a) { return a *= BigInt(-1); }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const BigInt& c, IntPoly a) { return a *= c; }
    friend bool operator==(const IntPoly& a, const IntPoly& b);

    IntPoly pow(unsigned e) const;

    // Ring map to the integers sending indeterminate i to values[i].
    BigInt evaluate(std::span<const BigInt> values) const;

    // Ring map sending indeterminate i to images[i]; all images share
    // target_nvars indeterminates.
    IntPoly substitute(std::span<const IntPoly> images, std::size_t target_nvars) const;

private:
    std::size_t nvars_;
    std::vector<Term> terms_;
};

template <>
struct RingTraits<IntPoly> {
    static IntPoly zero(const IntPoly& like) { return IntPoly(like.nvars()); }
    static IntPoly one(const IntPoly& like) { return IntPoly::constant(like.nvars(), 1); }
    static IntPoly from_int(const IntPoly& like, long long n) { return IntPoly::constant(like.nvars(), n); }
};

} // namespace charclass
