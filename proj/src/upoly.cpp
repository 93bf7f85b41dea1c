#include "charclass/upoly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace charclass {

UPoly::UPoly(unsigned p) : p_(p) { check_prime(p); }

UPoly::UPoly(unsigned p, std::vector<long long> coeffs) : p_(p)
{
    check_prime(p);
    c_.reserve(coeffs.size());
    for (long long c : coeffs) c_.push_back(modp::reduce(c, p));
    trim();
}

UPoly UPoly::constant(unsigned p, long long c) { return UPoly(p, {c}); }

UPoly UPoly::monomial(unsigned p, long long c, std::size_t degree)
{
    std::vector<long long> coeffs(degree + 1, 0);
    coeffs[degree] = c;
    return UPoly(p, std::move(coeffs));
}

void UPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& o)
{
    require(p_ == o.p_, "mismatched characteristic");
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = modp::add(c_[i], o.c_[i], p_);
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o)
{
    require(p_ == o.p_, "mismatched characteristic");
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = modp::sub(c_[i], o.c_[i], p_);
    trim();
    return *this;
}

UPoly operator-(const UPoly& a)
{
    UPoly r = a;
    for (auto& c : r.c_) c = modp::neg(c, r.p_);
    return r;
}

UPoly operator*(const UPoly& a, const UPoly& b)
{
    require(a.p_ == b.p_, "mismatched characteristic");
    UPoly r(a.p_);
    if (a.is_zero() || b.is_zero()) return r;
    const unsigned p = a.p_;
    // Accumulate in 64 bits and reduce once per output coefficient.
    std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += std::uint64_t(a.c_[i]) * b.c_[j];
    }
    r.c_.resize(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) r.c_[k] = static_cast<UPoly::Coeff>(acc[k] % p);
    r.trim();
    return r;
}

UPoly operator*(UPoly::Coeff c, const UPoly& a)
{
    UPoly r = a;
    for (auto& x : r.c_) x = modp::mul(x, c % a.p_, a.p_);
    r.trim();
    return r;
}

bool operator<(const UPoly& a, const UPoly& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

UPoly::Coeff UPoly::eval(Coeff x) const
{
    Coeff r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = modp::add(modp::mul(r, x, p_), *it, p_);
    return r;
}

UPoly UPoly::monic() const
{
    if (is_zero()) return *this;
    return modp::inv(leading(), p_) * *this;
}

UPoly UPoly::pow(unsigned long long e) const
{
    UPoly result = constant(p_, 1);
    UPoly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

UPoly UPoly::inflate(std::size_t k) const
{
    UPoly r(p_);
    if (is_zero()) return r;
    r.c_.assign((c_.size() - 1) * k + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
    return r;
}

std::optional<UPoly> UPoly::deflate(std::size_t k) const
{
    UPoly r(p_);
    if (is_zero()) return r;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0 && i % k != 0) return std::nullopt;
    r.c_.assign((c_.size() - 1) / k + 1, 0);
    for (std::size_t i = 0; i < c_.size(); i += k) r.c_[i / k] = c_[i];
    return r;
}

UPoly derivative(const UPoly& f)
{
    const unsigned p = f.prime();
    std::vector<long long> d;
    for (std::size_t k = 1; k < f.coeffs().size(); ++k) d.push_back(static_cast<long long>(k % p) * f[k]);
    return UPoly(p, std::move(d));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b)
{
    require(a.prime() == b.prime(), "mismatched characteristic");
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    const unsigned p = a.prime();
    if (a.degree() < b.degree()) return {UPoly(p), a};
    std::vector<long long> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<long long> quo(a.degree() - b.degree() + 1, 0);
    const auto lead_inv = modp::inv(b.leading(), p);
    const int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        const auto c = modp::mul(static_cast<UPoly::Coeff>(rem[k]), lead_inv, p);
        quo[k - db] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j)
            rem[k - db + j] = modp::sub(static_cast<UPoly::Coeff>(rem[k - db + j]), modp::mul(c, b[j], p), p);
    }
    rem.resize(db);
    return {UPoly(p, std::move(quo)), UPoly(p, std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b)
{
    while (!b.is_zero()) {
        UPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtendedGcd xgcd(const UPoly& a, const UPoly& b)
{
    const unsigned p = a.prime();
    UPoly r0 = a, r1 = b;
    UPoly s0 = UPoly::constant(p, 1), s1(p);
    UPoly t0(p), t1 = UPoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const auto li = modp::inv(r0.leading(), p);
    return {li * r0, li * s0, li * t0};
}

UPoly inverse_mod(const UPoly& a, const UPoly& m)
{
    auto e = xgcd(a % m, m);
    if (!e.g.is_one()) throw PreconditionError("polynomial not invertible modulo " + to_string(m));
    return e.s % m;
}

UPoly powmod(const UPoly& base, const BigInt& exponent, const UPoly& modulus)
{
    UPoly result = UPoly::constant(base.prime(), 1) % modulus;
    UPoly b = base % modulus;
    const auto bits = exponent == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(exponent)) + 1;
    for (unsigned i = bits; i-- > 0;) {
        result = (result * result) % modulus;
        if (boost::multiprecision::bit_test(exponent, i)) result = (result * b) % modulus;
    }
    return result;
}

namespace {

// Square-free decomposition of a monic polynomial: pairs (g_i, i) with
// f = prod g_i^i and each g_i square-free.
void square_free(const UPoly& f, int multiplier, std::vector<std::pair<UPoly, int>>& out)
{
    const unsigned p = f.prime();
    if (f.degree() < 1) return;
    UPoly c = gcd(f, derivative(f));
    UPoly w = f / c;
    int i = 1;
    while (!w.is_one()) {
        UPoly y = gcd(w, c);
        UPoly fac = w / y;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i * multiplier);
        w = y;
        c = c / y;
        ++i;
    }
    if (!c.is_one()) {
        // c is a p-th power: c = g(t^p) = g(t)^p over F_p.
        auto root = c.deflate(p);
        square_free(root->monic(), multiplier * static_cast<int>(p), out);
    }
}

// Distinct-degree split of a square-free monic polynomial.
std::vector<std::pair<UPoly, int>> distinct_degree(UPoly f)
{
    const unsigned p = f.prime();
    std::vector<std::pair<UPoly, int>> out;
    const UPoly x = UPoly::variable(p);
    UPoly h = x;
    int i = 1;
    while (f.degree() >= 2 * i) {
        h = powmod(h, p, f);
        UPoly g = gcd(f, h - x);
        if (!g.is_one()) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
        ++i;
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

void equal_degree(const UPoly& f, int d, std::mt19937_64& rng, std::vector<UPoly>& out)
{
    const unsigned p = f.prime();
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    BigInt half = (boost::multiprecision::pow(BigInt(p), d) - 1) / 2;
    for (;;) {
        std::vector<long long> coeffs(f.degree());
        for (auto& c : coeffs) c = static_cast<long long>(rng() % p);
        UPoly a(p, std::move(coeffs));
        if (a.degree() < 1) continue;
        UPoly b(p);
        if (p == 2) {
            UPoly term = a;
            b = a;
            for (int k = 1; k < d; ++k) {
                term = (term * term) % f;
                b += term;
            }
        } else {
            b = powmod(a, half, f) - UPoly::constant(p, 1);
        }
        UPoly g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

} // namespace

Factorization factor(const UPoly& f)
{
    require(!f.is_zero(), "cannot factor the zero polynomial");
    Factorization result;
    result.unit = f.leading();
    std::vector<std::pair<UPoly, int>> sq;
    square_free(f.monic(), 1, sq);
    std::mt19937_64 rng(0x5eed);
    for (auto& [g, mult] : sq) {
        for (auto& [part, d] : distinct_degree(g)) {
            std::vector<UPoly> irreducibles;
            equal_degree(part, d, rng, irreducibles);
            for (auto& q : irreducibles) result.factors.emplace_back(q.monic(), mult);
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first || (a.first == b.first && a.second < b.second); });
    // The same irreducible can appear from different square-free layers only
    // through the p-th power recursion; merge multiplicities.
    std::vector<std::pair<UPoly, int>> merged;
    for (auto& fm : result.factors) {
        if (!merged.empty() && merged.back().first == fm.first) merged.back().second += fm.second;
        else merged.push_back(fm);
    }
    result.factors = std::move(merged);
    return result;
}

bool is_irreducible(const UPoly& f)
{
    if (f.degree() < 1) return false;
    auto fac = factor(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

std::string to_string(const UPoly& f, const std::string& var)
{
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = f.degree(); k >= 0; --k) {
        const auto c = f[k];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c << '*';
        os << var;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

} // namespace charclass
