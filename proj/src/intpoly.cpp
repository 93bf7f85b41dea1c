#include "charclass/intpoly.hpp"

#include "charclass/errors.hpp"

#include <algorithm>

namespace charclass {

unsigned Monomial::degree() const
{
    unsigned d = 0;
    for (auto e : exps) d += e;
    return d;
}

bool Monomial::is_one() const
{
    return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = static_cast<std::uint16_t>(r.exps[i] + b.exps[i]);
    return r;
}

bool monomial_less(const Monomial& a, const Monomial& b)
{
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
    return false;
}

namespace {

// Sort by monomial, merge equal monomials and drop zeros.
void canonicalize(std::vector<IntPoly::Term>& terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return monomial_less(x.monomial, y.monomial); });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        BigInt sum = std::move(terms[i].coeff);
        while (j < terms.size() && terms[j].monomial == terms[i].monomial) sum += terms[j++].coeff;
        if (sum != 0) {
            if (out != i) terms[out].monomial = std::move(terms[i].monomial);
            terms[out].coeff = std::move(sum);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

Monomial unit_monomial(std::size_t nvars)
{
    Monomial m;
    m.exps.assign(nvars, 0);
    return m;
}

} // namespace

IntPoly IntPoly::constant(std::size_t nvars, const BigInt& c)
{
    IntPoly r(nvars);
    if (c != 0) r.terms_.push_back({unit_monomial(nvars), c});
    return r;
}

IntPoly IntPoly::variable(std::size_t nvars, std::size_t index)
{
    require(index < nvars, "indeterminate index out of range");
    IntPoly r(nvars);
    Monomial m = unit_monomial(nvars);
    m.exps[index] = 1;
    r.terms_.push_back({std::move(m), 1});
    return r;
}

IntPoly IntPoly::from_terms(std::size_t nvars, std::vector<Term> terms)
{
    for (const auto& t : terms) require(t.monomial.exps.size() == nvars, "monomial has wrong number of indeterminates");
    IntPoly r(nvars);
    r.terms_ = std::move(terms);
    canonicalize(r.terms_);
    return r;
}

unsigned IntPoly::total_degree() const { return terms_.empty() ? 0 : terms_.back().monomial.degree(); }

BigInt IntPoly::constant_term() const
{
    if (!terms_.empty() && terms_.front().monomial.is_one()) return terms_.front().coeff;
    return 0;
}

namespace {

template <class Combine>
std::vector<IntPoly::Term> merge_sorted(std::span<const IntPoly::Term> a, std::span<const IntPoly::Term> b, Combine sign)
{
    std::vector<IntPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && monomial_less(a[i].monomial, b[j].monomial))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || monomial_less(b[j].monomial, a[i].monomial)) {
            out.push_back({b[j].monomial, sign(b[j].coeff)});
            ++j;
        } else {
            BigInt c = a[i].coeff + sign(b[j].coeff);
            if (c != 0) out.push_back({a[i].monomial, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

IntPoly& IntPoly::operator+=(const IntPoly& o)
{
    require(nvars_ == o.nvars_, "mismatched polynomial alphabets");
    terms_ = merge_sorted(terms_, o.terms_, [](const BigInt& c) { return c; });
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o)
{
    require(nvars_ == o.nvars_, "mismatched polynomial alphabets");
    terms_ = merge_sorted(terms_, o.terms_, [](const BigInt& c) { return BigInt(-c); });
    return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    require(a.nvars_ == b.nvars_, "mismatched polynomial alphabets");
    IntPoly r(a.nvars_);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.terms_.size() == 1 && a.terms_[0].monomial.is_one()) return a.terms_[0].coeff * b;
    if (b.terms_.size() == 1 && b.terms_[0].monomial.is_one()) return b.terms_[0].coeff * a;
    std::vector<IntPoly::Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) prod.push_back({x.monomial * y.monomial, x.coeff * y.coeff});
    canonicalize(prod);
    r.terms_ = std::move(prod);
    return r;
}

bool operator==(const IntPoly& a, const IntPoly& b)
{
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

IntPoly IntPoly::pow(unsigned e) const
{
    IntPoly result = constant(nvars_, 1);
    IntPoly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

BigInt IntPoly::evaluate(std::span<const BigInt> values) const
{
    require(values.size() == nvars_, "evaluation point has wrong arity");
    BigInt sum = 0;
    for (const auto& t : terms_) {
        BigInt v = t.coeff;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (t.monomial.exps[i] != 0) v *= boost::multiprecision::pow(values[i], t.monomial.exps[i]);
        sum += v;
    }
    return sum;
}

IntPoly IntPoly::substitute(std::span<const IntPoly> images, std::size_t target_nvars) const
{
    require(images.size() == nvars_, "substitution has wrong arity");
    for (const auto& img : images) require(img.nvars() == target_nvars, "substitution image has wrong alphabet");
    // Cache powers per indeterminate.
    std::vector<std::vector<IntPoly>> powers(nvars_);
    IntPoly result(target_nvars);
    for (const auto& t : terms_) {
        IntPoly v = constant(target_nvars, t.coeff);
        for (std::size_t i = 0; i < nvars_; ++i) {
            const unsigned e = t.monomial.exps[i];
            if (e == 0) continue;
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(constant(target_nvars, 1));
            while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
            v *= cache[e];
        }
        result += v;
    }
    return result;
}

} // namespace charclass
