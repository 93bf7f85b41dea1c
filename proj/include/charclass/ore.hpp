#pragma once

#include "connections.hpp"
#include "ratfun.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace charclass {

// Σ c_i T^i over K = F_p(t), coefficients on the left, with Ta = aT + a'.
class SkewPoly {
public:
    explicit SkewPoly(unsigned p) : p_(p) {}
    SkewPoly(unsigned p, std::vector<RatFun> coeffs);

    static SkewPoly constant(const RatFun& c) { return SkewPoly(c.prime(), {c}); }
    static SkewPoly T(unsigned p, std::size_t k = 1);

    unsigned prime() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    const RatFun& leading() const;
    RatFun coeff(std::size_t i) const { return i < c_.size() ? c_[i] : RatFun::zero(p_); }
    const std::vector<RatFun>& coeffs() const { return c_; }

    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b);
    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b);
    friend SkewPoly operator-(const SkewPoly& a);
    // Left scalar multiplication.
    friend SkewPoly operator*(const RatFun& a, const SkewPoly& b);
    friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

private:
    void trim();

    unsigned p_;
    std::vector<RatFun> c_;
};

SkewPoly ore_mul(const SkewPoly& a, const SkewPoly& b);
SkewPoly ore_pow(const SkewPoly& a, unsigned e);

struct OreDivision {
    SkewPoly quotient;
    SkewPoly remainder;
};

// P = Q D + R with deg R < deg D.
OreDivision ore_right_divide(const SkewPoly& p, const SkewPoly& d);

// Connection on K{T}/K{T}P with basis 1, T, ..., T^{d-1}; ∂ acts as T.
MatrixConnection companion_connection(const SkewPoly& p);

RatMatrix ore_pcurvature(const SkewPoly& p);

// A' = G^{-1}(A G + G'), the matrix of ∇ in the basis given by the columns of G.
RatMatrix gauge_transform(const RatMatrix& a, const RatMatrix& g);

struct CyclicVector {
    RatVector v;
    SkewPoly minimal; // monic, P(∇)v = 0
    RatMatrix basis;  // columns v, ∇v, ..., ∇^{n-1}v
};

struct CyclicSearch {
    std::optional<CyclicVector> found;
    int attempts = 0;
};

// Tries standard basis vectors, then fixed vectors with entries of t-degree
// at most 2, then seeded random vectors, stopping after max_attempts.
CyclicSearch cyclic_vector(const MatrixConnection& c, int max_attempts = 64, std::uint64_t seed = 0);

std::string to_string(const SkewPoly& p);

} // namespace charclass
