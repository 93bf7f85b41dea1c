#include "charclass/ratfun.hpp"

#include <algorithm>

namespace charclass {

RatFun::RatFun(UPoly num) : num_(std::move(num)), den_(UPoly::constant(num_.prime(), 1)) {}

RatFun::RatFun(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den))
{
    require(num_.prime() == den_.prime(), "mismatched characteristic");
    if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
    const unsigned p = num_.prime();
    if (num_.is_zero()) {
        den_ = UPoly::constant(p, 1);
        return;
    }
    UPoly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    const auto li = modp::inv(den_.leading(), p);
    if (li != 1) {
        num_ = li * num_;
        den_ = li * den_;
    }
}

RatFun RatFun::inverse() const
{
    if (is_zero()) throw PreconditionError("division by zero rational function");
    return RatFun(den_, num_);
}

RatFun RatFun::pow(long long e) const
{
    if (e < 0) return inverse().pow(-e);
    return RatFun(num_.pow(e), den_.pow(e), Canonical{});
}

RatFun operator+(const RatFun& a, const RatFun& b)
{
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b)
{
    if (a.den_ == b.den_) return RatFun(a.num_ - b.num_, a.den_);
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b)
{
    if (a.is_zero() || b.is_zero()) {
        require(a.prime() == b.prime(), "mismatched characteristic");
        return RatFun::zero(a.prime());
    }
    // Cross-cancel first to keep intermediate degrees down.
    UPoly g1 = gcd(a.num_, b.den_);
    UPoly g2 = gcd(b.num_, a.den_);
    return RatFun((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

RatFun derivative(const RatFun& f)
{
    const UPoly dn = derivative(f.num());
    if (f.is_polynomial()) return RatFun(dn);
    return RatFun(dn * f.den() - f.num() * derivative(f.den()), f.den() * f.den());
}

std::optional<RatFun> pth_root(const RatFun& f)
{
    const unsigned p = f.prime();
    auto n = f.num().deflate(p);
    auto d = f.den().deflate(p);
    if (!n || !d) return std::nullopt;
    return RatFun(*n, *d);
}

RatFun frobenius(const RatFun& f)
{
    const unsigned p = f.prime();
    return RatFun(f.num().inflate(p), f.den().inflate(p));
}

PartialFractions partial_fractions(const RatFun& f)
{
    const unsigned p = f.prime();
    auto [poly, rem] = divmod(f.num(), f.den());
    PartialFractions out{poly, {}};
    if (rem.is_zero()) return out;
    const auto fac = factor(f.den());
    for (const auto& [q, m] : fac.factors) {
        const UPoly qm = q.pow(m);
        const UPoly cofactor = f.den() / qm;
        // A / q^m with A = rem * cofactor^{-1} mod q^m.
        UPoly a = (rem * inverse_mod(cofactor, qm)) % qm;
        // q-adic expansion A = sum_j c_j q^j gives c_j / q^(m-j).
        std::vector<PartialFractionTerm> local;
        for (int j = 0; j < m && !a.is_zero(); ++j) {
            auto [quo, c] = divmod(a, q);
            if (!c.is_zero()) local.push_back({q, m - j, c});
            a = quo;
        }
        for (auto it = local.rbegin(); it != local.rend(); ++it) out.terms.push_back(*it);
    }
    (void)p;
    return out;
}

std::string to_string(const RatFun& f, const std::string& var)
{
    const bool simple_num = f.num().coeffs().size() <= 1 ||
                            (f.num().degree() >= 1 && std::count_if(f.num().coeffs().begin(), f.num().coeffs().end(),
                                                                    [](auto c) { return c != 0; }) == 1);
    if (f.is_polynomial()) return to_string(f.num(), var);
    std::string num = to_string(f.num(), var);
    if (!simple_num) num = "(" + num + ")";
    std::string den = to_string(f.den(), var);
    const bool simple_den = f.den().degree() >= 1 &&
                            std::count_if(f.den().coeffs().begin(), f.den().coeffs().end(),
                                          [](auto c) { return c != 0; }) == 1 &&
                            f.den().leading() == 1;
    if (!simple_den) den = "(" + den + ")";
    return num + "/" + den;
}

} // namespace charclass
