#include "charclass/ore.hpp"

#include "charclass/errors.hpp"
#include "charclass/fp.hpp"
#include "charclass/sampling.hpp"

namespace charclass {

SkewPoly::SkewPoly(unsigned p, std::vector<RatFun> coeffs) : p_(p), c_(std::move(coeffs))
{
    check_prime(p);
    for (const auto& c : c_) require(c.prime() == p, "mismatched characteristic in skew polynomial");
    trim();
}

SkewPoly SkewPoly::T(unsigned p, std::size_t k)
{
    std::vector<RatFun> c(k + 1, RatFun::zero(p));
    c[k] = RatFun::one(p);
    return SkewPoly(p, std::move(c));
}

const RatFun& SkewPoly::leading() const
{
    require(!c_.empty(), "zero skew polynomial has no leading coefficient");
    return c_.back();
}

void SkewPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

SkewPoly operator+(const SkewPoly& a, const SkewPoly& b)
{
    require(a.p_ == b.p_, "mismatched characteristic");
    std::vector<RatFun> c(std::max(a.c_.size(), b.c_.size()), RatFun::zero(a.p_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return SkewPoly(a.p_, std::move(c));
}

SkewPoly operator-(const SkewPoly& a) { return RatFun::constant(a.p_, -1) * a; }

SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }

SkewPoly operator*(const RatFun& a, const SkewPoly& b)
{
    require(a.prime() == b.p_, "mismatched characteristic");
    std::vector<RatFun> c;
    c.reserve(b.c_.size());
    for (const auto& x : b.c_) c.push_back(a * x);
    return SkewPoly(b.p_, std::move(c));
}

namespace {

// T · Σ b_j T^j = Σ (b_j T^{j+1} + b_j' T^j).
SkewPoly shift(const SkewPoly& b)
{
    const unsigned p = b.prime();
    std::vector<RatFun> c(b.coeffs().size() + 1, RatFun::zero(p));
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
        c[j + 1] += b.coeffs()[j];
        c[j] += derivative(b.coeffs()[j]);
    }
    return SkewPoly(p, std::move(c));
}

} // namespace

SkewPoly ore_mul(const SkewPoly& a, const SkewPoly& b)
{
    require(a.prime() == b.prime(), "mismatched characteristic");
    SkewPoly out(a.prime());
    SkewPoly power = b; // T^i b
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (!a.coeffs()[i].is_zero()) out = out + a.coeffs()[i] * power;
        if (i + 1 < a.coeffs().size()) power = shift(power);
    }
    return out;
}

SkewPoly ore_pow(const SkewPoly& a, unsigned e)
{
    SkewPoly out = SkewPoly::constant(RatFun::one(a.prime()));
    for (unsigned i = 0; i < e; ++i) out = ore_mul(out, a);
    return out;
}

OreDivision ore_right_divide(const SkewPoly& p, const SkewPoly& d)
{
    require(p.prime() == d.prime(), "mismatched characteristic");
    if (d.is_zero()) throw PreconditionError("division by zero skew polynomial");
    SkewPoly q(p.prime());
    SkewPoly r = p;
    const RatFun lead_inv = d.leading().inverse();
    while (r.degree() >= d.degree()) {
        // T^k D has leading coefficient lc(D), so this cancels the top term.
        const auto k = static_cast<std::size_t>(r.degree() - d.degree());
        const SkewPoly term = (r.leading() * lead_inv) * SkewPoly::T(p.prime(), k);
        q = q + term;
        r = r - ore_mul(term, d);
    }
    return {q, r};
}

MatrixConnection companion_connection(const SkewPoly& p)
{
    require(p.degree() >= 1, "companion connection needs degree >= 1");
    require(p.is_monic(), "companion connection needs a monic skew polynomial");
    const auto d = static_cast<std::size_t>(p.degree());
    RatMatrix a = zero_matrix(p.prime(), d, d);
    for (std::size_t i = 0; i + 1 < d; ++i) a(i + 1, i) = RatFun::one(p.prime());
    for (std::size_t i = 0; i < d; ++i) a(i, d - 1) = -p.coeffs()[i];
    return MatrixConnection(std::move(a));
}

RatMatrix ore_pcurvature(const SkewPoly& p) { return p_curvature_matrix(companion_connection(p)); }

RatMatrix gauge_transform(const RatMatrix& a, const RatMatrix& g)
{
    auto inv = inverse(g);
    require(inv.has_value(), "gauge matrix is singular");
    return *inv * (a * g + derivative(g));
}

namespace {

std::optional<CyclicVector> try_vector(const MatrixConnection& c, const RatVector& v)
{
    const std::size_t n = c.dim();
    const unsigned p = c.prime();
    RatMatrix g = zero_matrix(p, n, n);
    RatVector cur = v;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) g(i, j) = cur[i];
        cur = c.apply(cur);
    }
    if (rank(g) < n) return std::nullopt;
    RatMatrix rhs = zero_matrix(p, n, 1);
    for (std::size_t i = 0; i < n; ++i) rhs(i, 0) = cur[i];
    auto sol = solve(g, rhs);
    if (!sol) throw VerificationError("cyclic basis is invertible but the system has no solution");
    std::vector<RatFun> coeffs;
    for (std::size_t i = 0; i < n; ++i) coeffs.push_back(-(*sol)(i, 0));
    coeffs.push_back(RatFun::one(p));
    SkewPoly minimal(p, std::move(coeffs));
    if (!(gauge_transform(c.matrix(), g) == companion_connection(minimal).matrix()))
        throw VerificationError("gauge transform by the cyclic basis is not the companion matrix");
    return CyclicVector{v, std::move(minimal), std::move(g)};
}

std::vector<RatVector> fixed_candidates(unsigned p, std::size_t n)
{
    const RatFun t = RatFun::variable(p);
    const RatFun one = RatFun::one(p);
    std::vector<RatVector> out;
    for (std::size_t e = 0; e < n; ++e) {
        RatVector v(n, RatFun::zero(p));
        v[e] = one;
        out.push_back(std::move(v));
    }
    for (std::size_t s = 0; s < 3; ++s) {
        RatVector v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(t.pow(static_cast<long long>((i + s) % 3)));
        out.push_back(std::move(v));
    }
    for (std::size_t s = 0; s < 3; ++s) {
        RatVector v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(one + t.pow(static_cast<long long>((i + s) % 3 + 1)));
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

CyclicSearch cyclic_vector(const MatrixConnection& c, int max_attempts, std::uint64_t seed)
{
    require(max_attempts >= 0, "attempt bound must be nonnegative");
    CyclicSearch out;
    const unsigned p = c.prime();
    const std::size_t n = c.dim();
    for (const auto& v : fixed_candidates(p, n)) {
        if (out.attempts >= max_attempts) return out;
        ++out.attempts;
        if ((out.found = try_vector(c, v))) return out;
    }
    Rng rng(seed);
    while (out.attempts < max_attempts) {
        ++out.attempts;
        RatVector v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(RatFun(random_upoly(rng, p, 2)));
        if ((out.found = try_vector(c, v))) return out;
    }
    return out;
}

std::string to_string(const SkewPoly& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const RatFun& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? "T" : "T^" + std::to_string(i));
        std::string coef = to_string(c);
        std::string term;
        const bool wrap = coef.find_first_of(" /") != std::string::npos;
        if (i == 0) term = coef;
        else if (c.is_one()) term = mono;
        else term = (wrap ? "(" + coef + ")" : coef) + "*" + mono;
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

} // namespace charclass
