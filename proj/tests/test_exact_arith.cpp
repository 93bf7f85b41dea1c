#include "helpers.hpp"

#include "charclass/errors.hpp"
#include "charclass/fp.hpp"
#include "charclass/intpoly.hpp"
#include "charclass/sampling.hpp"

using namespace charclass;
using test::R;

namespace {

// Derivative of a polynomial, coefficient by coefficient.
UPoly naive_derivative(const UPoly& f)
{
    std::vector<long long> c;
    for (std::size_t k = 1; k < f.coeffs().size(); ++k) c.push_back(static_cast<long long>(k) * f[k]);
    return UPoly(f.prime(), c);
}

// All polynomials of degree <= d over F_p.
std::vector<UPoly> all_polys(unsigned p, int d)
{
    std::vector<UPoly> out;
    std::size_t total = 1;
    for (int i = 0; i <= d; ++i) total *= p;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<long long> c;
        for (std::size_t x = code, i = 0; i <= static_cast<std::size_t>(d); ++i, x /= p) c.push_back(static_cast<long long>(x % p));
        out.emplace_back(p, c);
    }
    return out;
}

} // namespace

TEST_CASE("F_p field axioms on samples")
{
    for (unsigned p : {2u, 3u, 5u, 7u, 97u}) {
        Rng rng(p);
        for (int i = 0; i < 100; ++i) {
            FpElem a(static_cast<long long>(rng.next() % 1000), p), b(static_cast<long long>(rng.next() % 1000), p),
                c(static_cast<long long>(rng.next() % 1000), p);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == FpElem(0, p));
            if (!a.is_zero()) CHECK(a * a.inverse() == FpElem(1, p));
            CHECK(a.pow(p) == a);
        }
    }
    CHECK_THROWS_AS(FpElem(1, 4), PreconditionError);
    CHECK_THROWS_AS(FpElem(1, 101), PreconditionError);
    CHECK_THROWS_AS(FpElem(0, 5).inverse(), PreconditionError);
    CHECK_THROWS_AS(FpElem(1, 5) + FpElem(1, 7), PreconditionError);
}

TEST_CASE("rational functions are kept in canonical form")
{
    const RatFun f = R(5, "(t^2 - 1)/(2*t - 2)");
    CHECK(f.den().is_one());
    CHECK(f == R(5, "3*t + 3"));
    CHECK(R(5, "(t^2+2)/(t^3+t+1)").den().leading() == 1);
    CHECK(R(7, "0/(t+1)") == RatFun::zero(7));
    CHECK(R(3, "t/t") == RatFun::one(3));
    CHECK_THROWS_AS(RatFun::zero(5).inverse(), PreconditionError);
    CHECK_THROWS_AS(R(5, "t") + R(7, "t"), PreconditionError);
}

TEST_CASE("rational function field axioms")
{
    for (unsigned p : {2u, 3u, 5u}) {
        Rng rng(100 + p);
        for (int i = 0; i < 50; ++i) {
            const RatFun a = random_ratfun(rng, p, 3), b = random_ratfun(rng, p, 3), c = random_ratfun(rng, p, 3);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            if (!a.is_zero()) CHECK(a * a.inverse() == RatFun::one(p));
        }
    }
}

TEST_CASE("derivative examples")
{
    CHECK(derivative(R(5, "t^2")) == R(5, "2*t"));
    CHECK(derivative(R(5, "1/t")) == R(5, "-1/t^2"));
    CHECK(derivative(R(3, "t^3 + 1")).is_zero());
}

TEST_CASE("derivative agrees with the coefficientwise formula and the Leibniz rule")
{
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        Rng rng(200 + p);
        for (int i = 0; i < 100; ++i) {
            const UPoly u = random_upoly(rng, p, 6);
            CHECK(derivative(RatFun(u)) == RatFun(naive_derivative(u)));
            const RatFun f = random_ratfun(rng, p, 3), g = random_ratfun(rng, p, 3);
            CHECK(derivative(f * g) == f * derivative(g) + g * derivative(f));
        }
    }
}

TEST_CASE("p-th roots")
{
    CHECK(pth_root(R(3, "t^3")) == R(3, "t"));
    CHECK(pth_root(R(3, "(t^3+1)/t^6")) == R(3, "(t+1)/t^2"));
    CHECK_FALSE(pth_root(R(3, "t")).has_value());
    // No g = a/b with deg a, deg b <= 1 has g^3 = t (g^3 = a(t^3)/b(t^3)).
    for (const auto& a : all_polys(3, 1))
        for (const auto& b : all_polys(3, 1)) {
            if (b.is_zero()) continue;
            CHECK_FALSE(RatFun(a, b).pow(3) == R(3, "t"));
        }
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        Rng rng(300 + p);
        for (int i = 0; i < 100; ++i) {
            const RatFun f = random_ratfun(rng, p, 3);
            CHECK(pth_root(f.pow(p)) == f);
            CHECK(frobenius(f) == f.pow(p));
        }
    }
}

TEST_CASE("partial fractions")
{
    SUBCASE("1/(t^2 - t) over F_5")
    {
        const auto pf = partial_fractions(R(5, "1/(t^2 - t)"));
        CHECK(pf.polynomial.is_zero());
        REQUIRE(pf.terms.size() == 2);
        CHECK(pf.terms[0].factor == UPoly(5, {0, 1}));
        CHECK(pf.terms[0].numerator == UPoly(5, {-1}));
        CHECK(pf.terms[1].factor == UPoly(5, {-1, 1}));
        CHECK(pf.terms[1].numerator == UPoly(5, {1}));
    }
    SUBCASE("polynomial input")
    {
        const auto pf = partial_fractions(R(7, "t^2"));
        CHECK(pf.polynomial == UPoly(7, {0, 0, 1}));
        CHECK(pf.terms.empty());
    }
    SUBCASE("(2t+1)/t^2 over F_3")
    {
        const auto pf = partial_fractions(R(3, "(2*t+1)/t^2"));
        REQUIRE(pf.terms.size() == 2);
        CHECK(pf.terms[0].multiplicity == 1);
        CHECK(pf.terms[1].multiplicity == 2);
        CHECK(RatFun(pf.terms[0].numerator, pf.terms[0].factor) + RatFun(pf.terms[1].numerator, pf.terms[1].factor.pow(2)) ==
              R(3, "(2*t+1)/t^2"));
    }
    SUBCASE("recombination on random inputs")
    {
        for (unsigned p : {2u, 3u, 5u, 7u}) {
            Rng rng(400 + p);
            for (int i = 0; i < 100; ++i) {
                const RatFun f(random_upoly(rng, p, 8), random_nonzero_upoly(rng, p, 6));
                const auto pf = partial_fractions(f);
                RatFun sum(pf.polynomial);
                std::vector<UPoly> distinct;
                for (const auto& term : pf.terms) {
                    CHECK(is_irreducible(term.factor));
                    CHECK(term.numerator.degree() < term.factor.degree());
                    sum += RatFun(term.numerator, term.factor.pow(static_cast<unsigned>(term.multiplicity)));
                    if (distinct.empty() || !(distinct.back() == term.factor)) distinct.push_back(term.factor);
                }
                CHECK(sum == f);
                for (std::size_t a = 0; a < distinct.size(); ++a)
                    for (std::size_t b = a + 1; b < distinct.size(); ++b) CHECK_FALSE(distinct[a] == distinct[b]);
            }
        }
    }
}

TEST_CASE("factorization reproduces the input and is irreducible by brute force")
{
    for (unsigned p : {2u, 3u, 5u}) {
        Rng rng(500 + p);
        for (int i = 0; i < 40; ++i) {
            const UPoly f = random_nonzero_upoly(rng, p, 7);
            const auto fac = factor(f);
            UPoly prod = UPoly::constant(p, fac.unit);
            for (const auto& [q, m] : fac.factors) {
                CHECK(q.leading() == 1);
                prod = prod * q.pow(static_cast<unsigned>(m));
                // Irreducible: no monic divisor of degree 1..deg/2.
                for (int d = 1; 2 * d <= q.degree(); ++d)
                    for (const auto& g : all_polys(p, d))
                        if (g.degree() == d && g.leading() == 1) CHECK_FALSE((q % g).is_zero());
            }
            CHECK(prod == f);
        }
    }
}

TEST_CASE("integer polynomials")
{
    const std::size_t n = 3;
    const IntPoly x = IntPoly::variable(n, 0), y = IntPoly::variable(n, 1), z = IntPoly::variable(n, 2);
    const IntPoly one = IntPoly::constant(n, 1);
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x + one).pow(3) == x * x * x + BigInt(3) * x * x + BigInt(3) * x + one);
    CHECK((x - x).is_zero());
    CHECK((x * y * z).total_degree() == 3);
    const std::vector<BigInt> vals{2, 3, 5};
    CHECK((x * y + z).evaluate(vals) == 11);
    // Coefficients grow past 64 bits without loss.
    const IntPoly big = (BigInt(1) << 70) * x;
    CHECK((big * big).terms()[0].coeff == (BigInt(1) << 140));
    // Substitution is a ring map.
    const std::vector<IntPoly> images{y + z, y * z, one};
    const IntPoly f = x * x - y + BigInt(4) * z;
    const IntPoly g = x * y * y + one;
    CHECK((f * g).substitute(images, n) == f.substitute(images, n) * g.substitute(images, n));
}
