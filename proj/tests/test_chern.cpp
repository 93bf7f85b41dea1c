#include "helpers.hpp"

#include "charclass/chern.hpp"
#include "charclass/errors.hpp"
#include "charclass/verify.hpp"

using namespace charclass;
using test::el;
using test::ring;

TEST_CASE("Chern classes of small objects")
{
    const auto pres = ring({{"L", 1}, {"E", 2}});
    CHECK(chern_class(el(pres, "[L]"), 1) == el(pres, "1 - [L]"));
    CHECK(chern_class(el(pres, "[E]"), 1) == el(pres, "2 - [E]"));
    CHECK(chern_class(el(pres, "[E]"), 2) == el(pres, "1 - [E] + [L2 E]"));
    CHECK(chern_class(el(pres, "3*[E] - [L]^2"), 0) == K0Element::unit(pres));
    const auto one = chern_series(K0Element::unit(pres), 4);
    CHECK(one == TruncSeries<K0Element>::constant(K0Element::unit(pres), 4));
    const auto cl = chern_series(el(pres, "[L]"), 4);
    CHECK(cl[1] == el(pres, "1 - [L]"));
    for (std::size_t k = 2; k <= 4; ++k) CHECK(cl[k].is_zero());
}

TEST_CASE("Karoubi closed form agrees for ranks up to 8")
{
    for (int n = 1; n <= 8; ++n) {
        const auto pres = ring({{"E", n}});
        const auto c = chern_series(K0Element::generator(pres, "E"), static_cast<std::size_t>(n) + 3);
        for (int i = 0; i <= n; ++i) {
            // Independent assembly of sum_j (-1)^j C(n-j, i-j) [Λ^j E].
            auto expected = K0Element::zero(pres);
            for (int j = 0; j <= i; ++j) {
                const auto sym = j == 0 ? K0Element::unit(pres) : K0Element::symbol(pres, "E", j);
                expected += BigInt(j % 2 ? -1 : 1) * binomial(n - j, i - j) * sym;
            }
            CHECK(c[static_cast<std::size_t>(i)] == expected);
            CHECK(karoubi_closed_form(pres, "E", i) == expected);
        }
        for (int i = n + 1; i <= n + 3; ++i) CHECK(c[static_cast<std::size_t>(i)].is_zero());
    }
    const auto pres = ring({{"E", 2}});
    CHECK(karoubi_closed_form(pres, "E", 0) == K0Element::unit(pres));
    CHECK_THROWS_AS(karoubi_closed_form(pres, "E", 3), PreconditionError);
    CHECK_THROWS_AS(karoubi_closed_form(pres, "F", 1), PreconditionError);
}

TEST_CASE("Segre classes")
{
    const auto pres = ring({{"L", 1}, {"E", 3}});
    const auto l = el(pres, "[L]");
    const auto s = segre_series(l, 5);
    for (unsigned k = 0; k <= 5; ++k) CHECK(s[k] == (l - K0Element::unit(pres)).pow(k));
    CHECK_FALSE(s[2].is_zero());
    const auto x = el(pres, "2*[E] - [L] + 3");
    CHECK(segre_series(x, 3)[1] == -chern_class(x, 1));
}

TEST_CASE("total class")
{
    const auto pres = ring({{"L", 1}, {"E", 2}});
    CHECK(total_class(K0Element::unit(pres)) == K0Element::unit(pres));
    CHECK(total_class(el(pres, "[L]")) == el(pres, "2 - [L]"));
    CHECK(total_class(el(pres, "[E]")) == el(pres, "4 - 2*[E] + [L2 E]"));
    CHECK_THROWS_AS(total_class(el(pres, "[E] - [L]")), PreconditionError);
    CHECK(total_class(el(pres, "[E] - [L]"), 1) == K0Element::unit(pres) + chern_class(el(pres, "[E] - [L]"), 1));
    CHECK(default_order(el(pres, "[E]")) == 4);
    CHECK(default_order(el(pres, "[L] - [E]")) == 2);
}

TEST_CASE("Whitney, vanishing and augmentation on random elements")
{
    Rng rng(21);
    for (int i = 0; i < 60; ++i) {
        const auto pres = random_presentation(rng, 3, 4);
        const auto x = random_element(rng, pres), y = random_element(rng, pres);
        const std::size_t n = 6;
        const auto cx = chern_series(x, n);
        CHECK(chern_series(x + y, n) == cx * chern_series(y, n));
        CHECK(cx * segre_series(x, n) == TruncSeries<K0Element>::constant(K0Element::unit(pres), n));
        const auto z = specialize_to_Z(cx);
        CHECK(z[0] == 1);
        for (std::size_t l = 1; l <= n; ++l) CHECK(z[l] == 0);

        const auto eff = random_effective(rng, pres, 8);
        const auto e = static_cast<std::size_t>(rank_e(eff));
        const auto ce = chern_series(eff, e + 4);
        for (std::size_t l = e + 1; l <= e + 4; ++l) CHECK(ce[l].is_zero());
    }
}
