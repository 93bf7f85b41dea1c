#pragma once

#include "ratfun.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace charclass {

// f * d/dt, an element of Der(K) for K = F_p(t).
struct Derivation {
    RatFun coeff;

    static Derivation d_dt(unsigned p) { return {RatFun::one(p)}; }
    unsigned prime() const { return coeff.prime(); }
    RatFun operator()(const RatFun& x) const { return coeff * derivative(x); }

    friend bool operator==(const Derivation&, const Derivation&) = default;
};

// [f d, g d] = (f g' - g f') d
Derivation der_bracket(const Derivation& a, const Derivation& b);

// The p-fold composite, again a derivation in characteristic p. Its
// coefficient is read off from d^p(t) and checked against direct p-fold
// application on sample functions.
Derivation der_pth_power(const Derivation& d);

// Applies d n times.
RatFun apply_power(const Derivation& d, const RatFun& x, unsigned n);

// h dt, paired with derivations by (h dt)(f d/dt) = f h.
struct OneForm {
    RatFun h;

    unsigned prime() const { return h.prime(); }
    RatFun operator()(const Derivation& d) const { return h * d.coeff; }

    friend OneForm operator+(const OneForm& a, const OneForm& b) { return {a.h + b.h}; }
    friend OneForm operator*(const RatFun& x, const OneForm& w) { return {x * w.h}; }
    friend bool operator==(const OneForm&, const OneForm&) = default;
};

// df = f' dt
inline OneForm exterior_derivative(const RatFun& f) { return {derivative(f)}; }

// Element of K^{1/p}, stored as a rational function of s with t = s^p.
class RootValue {
public:
    // x in K, embedded as x(s^p).
    static RootValue embed(const RatFun& x);
    // The unique p-th root of x in K^{1/p}: x(s).
    static RootValue root_of(const RatFun& x);

    const RatFun& in_s() const { return value_; }
    // Back in K when the value lies in F_p(s^p).
    std::optional<RatFun> in_base() const;
    // y^p lies in K; returned as an element of K.
    RatFun pth_power() const { return value_; }

    friend RootValue operator+(const RootValue& a, const RootValue& b) { return RootValue(a.value_ + b.value_); }
    friend RootValue operator-(const RootValue& a, const RootValue& b) { return RootValue(a.value_ - b.value_); }
    friend RootValue operator*(const RootValue& a, const RootValue& b) { return RootValue(a.value_ * b.value_); }
    friend bool operator==(const RootValue&, const RootValue&) = default;

private:
    explicit RootValue(RatFun value) : value_(std::move(value)) {}
    RatFun value_;
};

std::string to_string(const RootValue& v);

// Cω(d) = (ω(d^[p]) - d^{p-1}(ω(d)))^{1/p}.
RootValue cartier_op(const OneForm& w, const Derivation& d);

// r(d)(x) = d(x) + ω(d) x
RatFun omega_connection_apply(const OneForm& w, const Derivation& d, const RatFun& x);

// Curvature of the ω-connection, computed both as an operator
// r([d1,d2]) - [r(d1), r(d2)] and as dω(d1, d2); the two must agree up to
// the sign convention. Returns dω(d1, d2).
RatFun curvature_rank1(const OneForm& w, const Derivation& d1, const Derivation& d2);

// ψ(d) = r(d^[p]) - r(d)^p as a multiplication operator, read off at the
// constant 1 and checked for K-linearity on sample arguments.
RatFun p_curvature_rank1(const OneForm& w, const Derivation& d);

// x with x'/x = h, if ω = h dt is a logarithmic derivative. The witness
// is a product of monic irreducibles with exponents in [1, p-1].
std::optional<RatFun> is_logarithmic(const OneForm& w);

struct AdjointReport {
    std::size_t trials = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// For sampled η checks ad(d^[p])(η) = ad(d)^p(η) and the Leibniz rule
// ad(d)(αη) = α ad(d)(η) + d(α) η.
AdjointReport adjoint_pth_check(const Derivation& d, std::size_t trials, std::uint64_t seed = 0);

} // namespace charclass
