#include "helpers.hpp"

#include "charclass/errors.hpp"
#include "charclass/verify.hpp"

using namespace charclass;
using test::el;
using test::ring;

TEST_CASE("presentation validation")
{
    CHECK_THROWS_AS(ring({{"E", 0}}), PreconditionError);
    CHECK_THROWS_AS(ring({{"E", 2}, {"E", 1}}), PreconditionError);
    CHECK_THROWS_AS(ring({{"2E", 1}}), PreconditionError);
    const auto pres = ring({{"F", 3}, {"E", 2}});
    CHECK(pres->symbol_count() == 5);
    REQUIRE(pres->find_symbol("L2 F"));
    CHECK(pres->symbols()[*pres->find_symbol("L2 F")].rank == 3);
    CHECK_FALSE(pres->find_symbol("L4 F"));
}

TEST_CASE("K0 arithmetic")
{
    const auto pres = ring({{"E", 2}, {"F", 3}});
    const auto e = K0Element::generator(pres, "E");
    const auto f = K0Element::generator(pres, "F");
    const auto one = K0Element::unit(pres);
    CHECK(one * e == e);
    CHECK((BigInt(2) * e - f) + f == BigInt(2) * e);
    CHECK(e * e == el(pres, "[E]^2"));
    CHECK((e * e).poly().terms().size() == 1);
    CHECK(e * f == f * e);
    const auto other = ring({{"E", 2}});
    CHECK_THROWS_AS(e + K0Element::generator(other, "E"), PreconditionError);
}

TEST_CASE("rank, d and specialization")
{
    const auto pres = ring({{"E", 2}, {"F", 3}});
    CHECK(rank_e(K0Element::unit(pres)) == 1);
    CHECK(rank_e(el(pres, "2*[E] - [F]")) == 1);
    CHECK(rank_e(el(ring({{"E", 3}}), "[L2 E]")) == 3);
    CHECK(d_op(K0Element::unit(pres)) == K0Element::unit(pres));
    CHECK(d_op(el(pres, "[E]")) == el(pres, "2"));
    CHECK(d_op(el(pres, "2*[E] - [F]")) == el(pres, "1"));
    CHECK(specialize_to_Z(el(pres, "[E]")) == 2);
    CHECK(specialize_to_Z(el(pres, "[L2 E]")) == 1);
    CHECK(specialize_to_Z(el(pres, "1 - [E] + [L2 E]")) == 0);

    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        const auto p2 = random_presentation(rng, 3, 5);
        const auto x = random_element(rng, p2), y = random_element(rng, p2);
        CHECK(rank_e(x * y) == rank_e(x) * rank_e(y));
        CHECK(rank_e(x + y) == rank_e(x) + rank_e(y));
    }
}

TEST_CASE("lambda series")
{
    const auto pres = ring({{"E", 2}});
    const auto one = K0Element::unit(pres);
    const auto e = el(pres, "[E]");
    const auto l2 = el(pres, "[L2 E]");
    const auto zero = K0Element::zero(pres);

    CHECK(lambda_series(one, 3) == TruncSeries<K0Element>({one, one, zero, zero}));
    CHECK(lambda_series(e, 3) == TruncSeries<K0Element>({one, e, l2, zero}));
    // λ_t(-E) is the inverse of 1 + E t + Λ²E t².
    const auto neg = lambda_series(-e, 2);
    CHECK(neg == TruncSeries<K0Element>({one, -e, e * e - l2}));
    CHECK(neg * lambda_series(e, 2) == TruncSeries<K0Element>::constant(one, 2));

    // λ of a composite object of rank > 1 is not part of the presentation.
    const auto pres3 = ring({{"E", 2}, {"F", 2}});
    CHECK_THROWS_AS(lambda_series(el(pres3, "[E]*[F]"), 2), PreconditionError);
    // Rank-one monomials are line-like.
    const auto top = el(pres3, "[L2 E]*[L2 F]");
    CHECK(lambda_series(top, 3)[1] == top);
    CHECK(lambda_series(top, 3)[2].is_zero());
}

TEST_CASE("lambda series properties")
{
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        const auto pres = random_presentation(rng, 3, 5);
        const auto x = random_element(rng, pres), y = random_element(rng, pres);
        const std::size_t n = 6;
        CHECK(lambda_series(x + y, n) == lambda_series(x, n) * lambda_series(y, n));
        CHECK(gamma_series(x + y, n) == gamma_series(x, n) * gamma_series(y, n));
        CHECK(lambda_series(x, n) * lambda_series(-x, n) == TruncSeries<K0Element>::constant(K0Element::unit(pres), n));
    }
    // Sums of generators specialize to binomial coefficients.
    const auto pres = ring({{"E", 3}, {"F", 2}});
    const auto x = el(pres, "2*[E] + [F]");
    const auto lam = specialize_to_Z(lambda_series(x, 10));
    for (std::size_t k = 0; k <= 10; ++k) CHECK(lam[k] == binomial(8, static_cast<long long>(k)));
}

TEST_CASE("gamma series")
{
    const auto pres = ring({{"E", 2}});
    const auto one = K0Element::unit(pres);
    const auto g = gamma_series(one, 5);
    for (std::size_t k = 0; k <= 5; ++k) CHECK(g[k] == one);
    const auto ge = gamma_series(el(pres, "[E]"), 3);
    CHECK(ge[1] == el(pres, "[E]"));
    CHECK(ge[2] == el(pres, "[E] + [L2 E]"));
    CHECK(ge[3] == el(pres, "[E] + 2*[L2 E]"));
}

TEST_CASE("morphisms")
{
    const auto src = ring({{"g", 2}, {"h", 3}});
    const auto dst = ring({{"a", 1}, {"b", 1}, {"k", 3}});
    const RingMorphism f(src, dst, {{"g", el(dst, "[a] + [b]")}, {"h", el(dst, "[k]")}});
    CHECK(f.apply(el(src, "[L2 g]")) == el(dst, "[a]*[b]"));
    CHECK(f.apply(el(src, "[L2 h]")) == el(dst, "[L2 k]"));
    CHECK(f.apply(el(src, "[L3 h]")) == el(dst, "[L3 k]"));

    const auto id = RingMorphism::identity(src);
    const auto x = el(src, "3*[g]*[L2 h] - 2");
    CHECK(id.apply(x) == x);

    CHECK_THROWS_AS(RingMorphism(src, dst, {{"g", el(dst, "[k]")}, {"h", el(dst, "[k]")}}), PreconditionError);
    CHECK_THROWS_AS(RingMorphism(src, dst, {{"g", el(dst, "3*[a] - [b]")}, {"h", el(dst, "[k]")}}), PreconditionError);
    CHECK_THROWS_AS(f.apply(el(dst, "[a]")), PreconditionError);

    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        const auto s = random_presentation(rng, 3, 4);
        const auto t = random_presentation(rng, 3, 4, {"P", "Q", "R"});
        const auto m = random_morphism(rng, s, t);
        const auto y = random_element(rng, s);
        CHECK(m.apply(gamma_series(y, 5)) == gamma_series(m.apply(y), 5));
        CHECK(rank_e(m.apply(y)) == rank_e(y));
    }
}
