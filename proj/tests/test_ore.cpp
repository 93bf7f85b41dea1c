#include "helpers.hpp"

#include "charclass/errors.hpp"
#include "charclass/ore.hpp"
#include "charclass/sampling.hpp"

using namespace charclass;
using test::R;

namespace {

SkewPoly S(unsigned p, std::string_view s) { return parse_skewpoly(s, p); }

SkewPoly random_skew(Rng& rng, unsigned p, int max_degree)
{
    std::vector<RatFun> c;
    const auto d = rng.range(0, max_degree);
    for (long long i = 0; i < d; ++i) c.push_back(random_ratfun(rng, p, 2));
    c.push_back(random_nonzero_ratfun(rng, p, 2));
    return SkewPoly(p, std::move(c));
}

} // namespace

TEST_CASE("multiplication follows Ta = aT + a'")
{
    CHECK(ore_mul(S(5, "T"), S(5, "t")) == SkewPoly(5, {R(5, "1"), R(5, "t")}));
    for (unsigned p : {2u, 3u, 5u}) {
        Rng rng(p);
        for (int i = 0; i < 10; ++i) {
            const RatFun a = random_ratfun(rng, p, 2);
            const auto lhs = ore_mul(SkewPoly::T(p) + SkewPoly::constant(a), SkewPoly::T(p) - SkewPoly::constant(a));
            CHECK(lhs == SkewPoly(p, {-derivative(a) - a * a, RatFun::zero(p), RatFun::one(p)}));
            const auto q = random_skew(rng, p, 3);
            CHECK(ore_mul(q, SkewPoly::constant(RatFun::one(p))) == q);
            CHECK(ore_mul(SkewPoly::constant(RatFun::one(p)), q) == q);
        }
    }
    CHECK_THROWS_AS(ore_mul(S(3, "T"), S(5, "T")), PreconditionError);
}

TEST_CASE("associativity and degree additivity")
{
    for (unsigned p : {2u, 3u, 5u}) {
        Rng rng(10 + p);
        for (int i = 0; i < 30; ++i) {
            const auto a = random_skew(rng, p, 3), b = random_skew(rng, p, 3), c = random_skew(rng, p, 3);
            CHECK(ore_mul(ore_mul(a, b), c) == ore_mul(a, ore_mul(b, c)));
            CHECK(ore_mul(a, b).degree() == a.degree() + b.degree());
        }
    }
}

TEST_CASE("right division")
{
    const unsigned p = 5;
    const RatFun a = R(p, "(t+1)/t");
    const auto d = SkewPoly::T(p) - SkewPoly::constant(a);
    const auto [q, r] = ore_right_divide(SkewPoly::T(p, 2), d);
    CHECK(q == SkewPoly::T(p) + SkewPoly::constant(a));
    CHECK(r == SkewPoly::constant(a * a + derivative(a)));

    const auto big = S(p, "T^3 + t*T + 1/t");
    const auto self = ore_right_divide(big, big);
    CHECK(self.quotient == SkewPoly::constant(RatFun::one(p)));
    CHECK(self.remainder.is_zero());
    const auto small = ore_right_divide(S(p, "T + t"), big);
    CHECK(small.quotient.is_zero());
    CHECK(small.remainder == S(p, "T + t"));
    CHECK_THROWS_AS(ore_right_divide(big, SkewPoly(p)), PreconditionError);

    for (unsigned q0 : {2u, 3u, 5u}) {
        Rng rng(20 + q0);
        for (int i = 0; i < 30; ++i) {
            const auto num = random_skew(rng, q0, 5), den = random_skew(rng, q0, 3);
            const auto [qq, rr] = ore_right_divide(num, den);
            CHECK(ore_mul(qq, den) + rr == num);
            CHECK(rr.degree() < den.degree());
        }
    }
}

TEST_CASE("companion connections")
{
    CHECK(companion_connection(S(3, "T")).matrix() == zero_matrix(3, 1, 1));
    const RatFun h = R(3, "t^2 + 1/t");
    const auto c = companion_connection(SkewPoly::T(3) - SkewPoly::constant(h));
    CHECK(c.matrix()(0, 0) == h);
    const RatFun x = R(3, "t/(t+2)");
    CHECK(c.apply({x})[0] == omega_connection_apply(OneForm{h}, Derivation::d_dt(3), x));
    const RatFun b = R(5, "t^3");
    const auto c2 = companion_connection(SkewPoly::T(5, 2) - SkewPoly::constant(b));
    RatMatrix expected = zero_matrix(5, 2, 2);
    expected(0, 1) = b;
    expected(1, 0) = RatFun::one(5);
    CHECK(c2.matrix() == expected);
    CHECK_THROWS_AS(companion_connection(S(3, "2*T + 1")), PreconditionError);
    CHECK_THROWS_AS(companion_connection(S(3, "1")), PreconditionError);
}

TEST_CASE("cyclic vectors")
{
    SUBCASE("trivial rank two")
    {
        const auto found = cyclic_vector(MatrixConnection::trivial(3, 2));
        REQUIRE(found.found);
        CHECK(found.found->v == RatVector{R(3, "1"), R(3, "t")});
        CHECK(found.found->minimal == SkewPoly::T(3, 2));
        // The gauge transform uses +G'; with -G' the companion matrix is missed.
        const auto& g = found.found->basis;
        const RatMatrix minus = *inverse(g) * (zero_matrix(3, 2, 2) * g - derivative(g));
        CHECK(gauge_transform(zero_matrix(3, 2, 2), g) == companion_connection(SkewPoly::T(3, 2)).matrix());
        CHECK_FALSE(minus == companion_connection(SkewPoly::T(3, 2)).matrix());
    }
    SUBCASE("companion round trip")
    {
        const auto P = S(5, "T^3 + t*T^2 + (1/t)*T + t + 1");
        const auto found = cyclic_vector(companion_connection(P));
        REQUIRE(found.found);
        CHECK(found.attempts == 1);
        CHECK(found.found->v == RatVector{R(5, "1"), R(5, "0"), R(5, "0")});
        CHECK(found.found->minimal == P);
    }
    SUBCASE("rank one")
    {
        const RatFun h = R(7, "t^2/(t+1)");
        RatMatrix a = zero_matrix(7, 1, 1);
        a(0, 0) = h;
        const auto found = cyclic_vector(MatrixConnection(a));
        REQUIRE(found.found);
        CHECK(found.found->v == RatVector{R(7, "1")});
        CHECK(found.found->minimal == SkewPoly::T(7) - SkewPoly::constant(h));
    }
    SUBCASE("exhausted attempt bound is reported")
    {
        const auto none = cyclic_vector(MatrixConnection::trivial(3, 2), 2);
        CHECK_FALSE(none.found);
        CHECK(none.attempts == 2);
    }
    SUBCASE("random connections")
    {
        Rng rng(33);
        for (int i = 0; i < 15; ++i) {
            const unsigned p = i % 2 ? 3 : 5;
            const std::size_t n = static_cast<std::size_t>(rng.range(1, 3));
            RatMatrix a = zero_matrix(p, n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) a(r, c) = random_ratfun(rng, p, 1);
            const auto found = cyclic_vector(MatrixConnection(a), 64, static_cast<std::uint64_t>(i));
            REQUIRE(found.found);
            CHECK(gauge_transform(a, found.found->basis) == companion_connection(found.found->minimal).matrix());
        }
    }
}

TEST_CASE("p-curvature of cyclic modules")
{
    CHECK(ore_pcurvature(S(3, "T")).is_zero());
    for (unsigned p : {2u, 3u, 5u, 7u}) CHECK(ore_pcurvature(S(p, "T - 1/t")).is_zero());
    CHECK(ore_pcurvature(S(3, "T - t"))(0, 0) == R(3, "-t^3"));
    const auto psi = ore_pcurvature(S(3, "T^2 - t"));
    CHECK(psi == p_curvature_matrix(companion_connection(S(3, "T^2 - t"))));
    CHECK_THROWS_AS(ore_pcurvature(S(3, "t*T")), PreconditionError);
}
