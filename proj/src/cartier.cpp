#include "charclass/cartier.hpp"

#include "charclass/errors.hpp"
#include "charclass/sampling.hpp"

namespace charclass {

namespace {

// Fixed sample arguments for the internal linearity checks.
std::vector<RatFun> sample_functions(unsigned p, std::size_t count, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<RatFun> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_nonzero_ratfun(rng, p, 3));
    return out;
}

} // namespace

Derivation der_bracket(const Derivation& a, const Derivation& b)
{
    return {a.coeff * derivative(b.coeff) - b.coeff * derivative(a.coeff)};
}

RatFun apply_power(const Derivation& d, const RatFun& x, unsigned n)
{
    RatFun y = x;
    for (unsigned i = 0; i < n; ++i) y = d(y);
    return y;
}

Derivation der_pth_power(const Derivation& d)
{
    const unsigned p = d.prime();
    Derivation result{apply_power(d, RatFun::variable(p), p)};
    for (const auto& x : sample_functions(p, 10, 0xd0d0 + p)) {
        if (!(apply_power(d, x, p) == result(x)))
            throw VerificationError("p-th power of " + to_string(d.coeff) + " d/dt is not a derivation on " + to_string(x));
    }
    return result;
}

RootValue RootValue::embed(const RatFun& x) { return RootValue(frobenius(x)); }

RootValue RootValue::root_of(const RatFun& x) { return RootValue(x); }

std::optional<RatFun> RootValue::in_base() const { return pth_root(value_); }

std::string to_string(const RootValue& v) { return to_string(v.in_s(), "s"); }

RootValue cartier_op(const OneForm& w, const Derivation& d)
{
    require(w.prime() == d.prime(), "mismatched characteristic");
    const unsigned p = d.prime();
    const RatFun radicand = w(der_pth_power(d)) - apply_power(d, w(d), p - 1);
    return RootValue::root_of(radicand);
}

RatFun omega_connection_apply(const OneForm& w, const Derivation& d, const RatFun& x) { return d(x) + w(d) * x; }

RatFun curvature_rank1(const OneForm& w, const Derivation& d1, const Derivation& d2)
{
    const unsigned p = w.prime();
    const Derivation br = der_bracket(d1, d2);
    auto operator_value = [&](const RatFun& x) {
        const RatFun r12 = omega_connection_apply(w, d1, omega_connection_apply(w, d2, x));
        const RatFun r21 = omega_connection_apply(w, d2, omega_connection_apply(w, d1, x));
        return omega_connection_apply(w, br, x) - (r12 - r21);
    };
    const RatFun as_operator = operator_value(RatFun::one(p));
    for (const auto& x : sample_functions(p, 3, 0xc0c0 + p))
        if (!(operator_value(x) == as_operator * x))
            throw VerificationError("curvature is not K-linear on " + to_string(x));
    const RatFun d_omega = d1(w(d2)) - d2(w(d1)) - w(br);
    if (!(as_operator == d_omega) && !(as_operator == -d_omega))
        throw VerificationError("curvature " + to_string(as_operator) + " disagrees with dω = " + to_string(d_omega));
    return d_omega;
}

RatFun p_curvature_rank1(const OneForm& w, const Derivation& d)
{
    require(w.prime() == d.prime(), "mismatched characteristic");
    const unsigned p = d.prime();
    const Derivation dp = der_pth_power(d);
    auto psi_at = [&](const RatFun& x) {
        RatFun y = x;
        for (unsigned i = 0; i < p; ++i) y = omega_connection_apply(w, d, y);
        return omega_connection_apply(w, dp, x) - y;
    };
    const RatFun psi = psi_at(RatFun::one(p));
    for (const auto& x : sample_functions(p, 3, 0xa0a0 + p))
        if (!(psi_at(x) == psi * x)) throw VerificationError("p-curvature is not K-linear on " + to_string(x));
    return psi;
}

std::optional<RatFun> is_logarithmic(const OneForm& w)
{
    const unsigned p = w.prime();
    const auto pf = partial_fractions(w.h);
    if (!pf.polynomial.is_zero()) return std::nullopt;
    RatFun x = RatFun::one(p);
    for (const auto& term : pf.terms) {
        if (term.multiplicity != 1) return std::nullopt;
        // numerator must be r * q' with r in F_p (deg q' < deg q).
        const UPoly dq = derivative(term.factor);
        if (dq.is_zero() || term.numerator.degree() != dq.degree()) return std::nullopt;
        const auto r = modp::mul(term.numerator.leading(), modp::inv(dq.leading(), p), p);
        if (!(r * dq == term.numerator)) return std::nullopt;
        x *= RatFun(term.factor.pow(r));
    }
    if (!(derivative(x) / x == w.h))
        throw VerificationError("logarithmic witness " + to_string(x) + " does not reproduce " + to_string(w.h));
    return x;
}

AdjointReport adjoint_pth_check(const Derivation& d, std::size_t trials, std::uint64_t seed)
{
    const unsigned p = d.prime();
    AdjointReport report;
    report.trials = trials;
    const Derivation dp = der_pth_power(d);
    for (std::size_t i = 0; i < trials; ++i) {
        Rng rng(seed + i);
        const Derivation eta{random_ratfun(rng, p, 3)};
        Derivation iterated = eta;
        for (unsigned k = 0; k < p; ++k) iterated = der_bracket(d, iterated);
        const Derivation lhs = der_bracket(dp, eta);
        if (!(lhs == iterated))
            report.failures.push_back("trial " + std::to_string(i) + ": ad(d^[p])(" + to_string(eta.coeff) +
                                      " d/dt) = " + to_string(lhs.coeff) + " but ad(d)^p gives " + to_string(iterated.coeff));
        const RatFun alpha = random_ratfun(rng, p, 3);
        const Derivation left = der_bracket(d, Derivation{alpha * eta.coeff});
        const Derivation right{alpha * der_bracket(d, eta).coeff + d(alpha) * eta.coeff};
        if (!(left == right))
            report.failures.push_back("trial " + std::to_string(i) + ": Leibniz rule fails for α = " + to_string(alpha));
    }
    return report;
}

} // namespace charclass
