#pragma once

#include "errors.hpp"
#include "traits.hpp"

#include <string>
#include <utility>
#include <vector>

namespace charclass {

// Truncated power series c_0 + c_1 t + ... + c_N t^N over a commutative
// ring C. Arithmetic discards degrees above N. C needs +, -, *, == and a
// RingTraits<C> specialization.
template <class C>
class TruncSeries {
public:
    explicit TruncSeries(std::vector<C> coeffs) : c_(std::move(coeffs))
    {
        require(!c_.empty(), "a truncated series needs at least the constant coefficient");
    }

    // c + 0 t + ... + 0 t^N
    static TruncSeries constant(const C& c, std::size_t order)
    {
        std::vector<C> coeffs(order + 1, RingTraits<C>::zero(c));
        coeffs[0] = c;
        return TruncSeries(std::move(coeffs));
    }

    std::size_t order() const { return c_.size() - 1; }
    const C& operator[](std::size_t k) const { return c_[k]; }
    C& operator[](std::size_t k) { return c_[k]; }
    const std::vector<C>& coeffs() const { return c_; }

    TruncSeries truncated(std::size_t order) const
    {
        require(order <= this->order(), "cannot extend a truncated series");
        return TruncSeries(std::vector<C>(c_.begin(), c_.begin() + order + 1));
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b)
    {
        check_orders(a, b);
        TruncSeries r = a;
        for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = r.c_[k] + b.c_[k];
        return r;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b)
    {
        check_orders(a, b);
        TruncSeries r = a;
        for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = r.c_[k] - b.c_[k];
        return r;
    }

    // Cauchy product.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
    {
        check_orders(a, b);
        const std::size_t n = a.order();
        std::vector<C> out(n + 1, RingTraits<C>::zero(a.c_[0]));
        for (std::size_t i = 0; i <= n; ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (is_zero(b.c_[j])) continue;
                out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return TruncSeries(std::move(out));
    }

private:
    static bool is_zero(const C& c) { return c == RingTraits<C>::zero(c); }

    static void check_orders(const TruncSeries& a, const TruncSeries& b)
    {
        if (a.order() != b.order())
            throw PreconditionError("mismatched truncation orders " + std::to_string(a.order()) + " and " +
                                    std::to_string(b.order()));
    }

    std::vector<C> c_;
};

template <class C>
TruncSeries<C> ps_mul(const TruncSeries<C>& a, const TruncSeries<C>& b)
{
    return a * b;
}

namespace detail {
template <class C>
void require_unit_constant(const TruncSeries<C>& a, const char* what)
{
    if (!(a[0] == RingTraits<C>::one(a[0])))
        throw PreconditionError(std::string(what) + ": constant term must be 1");
}
} // namespace detail

// Multiplicative inverse of a series with constant term 1.
template <class C>
TruncSeries<C> ps_inverse(const TruncSeries<C>& a)
{
    detail::require_unit_constant(a, "ps_inverse");
    const std::size_t n = a.order();
    std::vector<C> b(n + 1, RingTraits<C>::zero(a[0]));
    b[0] = a[0];
    // b_k = -sum_{i=1..k} a_i b_{k-i}
    for (std::size_t k = 1; k <= n; ++k) {
        C acc = RingTraits<C>::zero(a[0]);
        for (std::size_t i = 1; i <= k; ++i) acc = acc + a[i] * b[k - i];
        b[k] = RingTraits<C>::zero(a[0]) - acc;
    }
    return TruncSeries<C>(std::move(b));
}

// a^e for any integer e; negative exponents need constant term 1.
template <class C>
TruncSeries<C> ps_pow(const TruncSeries<C>& a, long long e)
{
    if (e < 0) return ps_pow(ps_inverse(a), -e);
    auto result = TruncSeries<C>::constant(RingTraits<C>::one(a[0]), a.order());
    auto base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

// a(u) with u = t/(1-t), by Horner's rule. Multiplying by u is a shift
// followed by multiplication with 1/(1-t), i.e. prefix sums.
template <class C>
TruncSeries<C> ps_gamma_substitute(const TruncSeries<C>& a)
{
    detail::require_unit_constant(a, "ps_gamma_substitute");
    const std::size_t n = a.order();
    const C zero = RingTraits<C>::zero(a[0]);
    std::vector<C> acc(n + 1, zero);
    for (std::size_t k = n + 1; k-- > 0;) {
        // acc <- acc * u
        for (std::size_t i = n; i >= 1; --i) acc[i] = acc[i - 1];
        acc[0] = zero;
        for (std::size_t i = 1; i <= n; ++i) acc[i] = acc[i] + acc[i - 1];
        // acc <- acc + a_k
        acc[0] = acc[0] + a[k];
    }
    return TruncSeries<C>(std::move(acc));
}

// Same substitution through the closed form
// coefficient k = sum_{j=1..k} C(k-1, j-1) a_j for k >= 1.
template <class C>
TruncSeries<C> ps_gamma_substitute_binomial(const TruncSeries<C>& a)
{
    detail::require_unit_constant(a, "ps_gamma_substitute_binomial");
    const std::size_t n = a.order();
    require(n <= 60, "binomial substitution supports truncation orders up to 60");
    std::vector<C> out(n + 1, RingTraits<C>::zero(a[0]));
    out[0] = a[0];
    for (std::size_t k = 1; k <= n; ++k) {
        // Pascal row k-1 built incrementally in long long (k <= N stays small).
        long long binom = 1; // C(k-1, 0)
        for (std::size_t j = 1; j <= k; ++j) {
            out[k] = out[k] + RingTraits<C>::from_int(a[0], binom) * a[j];
            binom = binom * static_cast<long long>(k - j) / static_cast<long long>(j);
        }
    }
    return TruncSeries<C>(std::move(out));
}

} // namespace charclass
