#include "helpers.hpp"

#include "charclass/chern.hpp"
#include "charclass/errors.hpp"
#include "charclass/sampling.hpp"
#include "charclass/verify.hpp"

using namespace charclass;
using test::R;

TEST_CASE("rational function grammar")
{
    CHECK(parse_ratfun("(t^2+2)/(t^3+t+1)", 5) == RatFun(UPoly(5, {2, 0, 1}), UPoly(5, {1, 1, 0, 1})));
    CHECK(parse_ratfun("-t^-2", 3) == -RatFun(UPoly(3, {1}), UPoly(3, {0, 0, 1})));
    CHECK(parse_ratfun("7", 5) == RatFun::constant(5, 2));
    CHECK(parse_ratfun("2*3 - 1", 7) == RatFun::constant(7, 5));
    CHECK(parse_ratfun("t - t^2 * 2", 7) == parse_ratfun("t + 5*t^2", 7));

    auto position = [](std::string_view s, unsigned p) -> std::size_t {
        try {
            parse_ratfun(s, p);
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::string_view::npos;
    };
    CHECK(position("t + x", 5) == 4);
    CHECK(position("(t + 1", 5) == 6);
    CHECK(position("t ^ y", 5) == 4);
    CHECK(position("1/(t-t)", 5) == 1);
    CHECK(position("", 5) == 0);
    CHECK(position("t $", 5) == 2);
    CHECK_THROWS_AS(parse_ratfun("t", 6), PreconditionError);

    for (unsigned p : {2u, 3u, 5u, 7u}) {
        Rng rng(p);
        for (int i = 0; i < 100; ++i) {
            const RatFun f = random_ratfun(rng, p, 4);
            CHECK(parse_ratfun(to_string(f), p) == f);
        }
    }
}

TEST_CASE("one-form grammar")
{
    CHECK(parse_form("(1/t) dt", 3).h == R(3, "1/t"));
    CHECK(parse_form("t*dt", 3).h == R(3, "t"));
    CHECK(to_string(parse_form("(1/t) dt", 3)) == "(1/t) dt");
    CHECK(to_string(parse_form("t^2 dt", 3)) == "t^2 dt");
    CHECK_THROWS_AS(parse_form("1/t", 3), ParseError);
    Rng rng(4);
    for (int i = 0; i < 50; ++i) {
        const OneForm w{random_ratfun(rng, 5, 3)};
        CHECK(parse_form(to_string(w), 5) == w);
    }
}

TEST_CASE("element grammar")
{
    const auto pres = parse_presentation(R"({"generators":[{"name":"E","rank":2},{"name":"F","rank":3}]})");
    const auto x = parse_element("2*[E] - [F]", pres);
    CHECK(x.poly().terms().size() == 2);
    CHECK(x == BigInt(2) * K0Element::generator(pres, "E") - K0Element::generator(pres, "F"));
    CHECK(parse_element("3*[L2 E]*[F]", pres) == BigInt(3) * K0Element::symbol(pres, "E", 2) * K0Element::generator(pres, "F"));
    CHECK(parse_element("[1] + 1", pres) == K0Element::integer(pres, 2));
    CHECK(parse_element("([E] + 1)^2", pres) == parse_element("[E]^2 + 2*[E] + 1", pres));
    CHECK_THROWS_AS(parse_element("[G]", pres), ParseError);
    CHECK_THROWS_AS(parse_element("[L3 E]", pres), ParseError);
    CHECK_THROWS_AS(parse_element("E", pres), ParseError);
    CHECK_THROWS_AS(parse_element("[E]/2", pres), ParseError);
    CHECK_THROWS_AS(parse_element("[E", pres), ParseError);

    CHECK(to_string(K0Element::zero(pres)) == "0");
    CHECK(to_string(parse_element("1 - [E] + [L2 E]", pres)) == "1 - [E] + [L2 E]");
    CHECK(to_string(parse_element("-[E]*[F]^2", pres)) == "-[E]*[F]^2");
    Rng rng(8);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_presentation(rng, 3, 5);
        const auto y = random_element(rng, p, 5) * random_element(rng, p, 3);
        CHECK(parse_element(to_string(y), p) == y);
    }
}

TEST_CASE("element serialization")
{
    const auto pres = make_presentation({{"E", 2}});
    const auto c2 = chern_class(K0Element::generator(pres, "E"), 2);
    CHECK(to_json(c2, 2) ==
          R"({"degree":2,"class":[{"coeff":1,"monomial":[]},{"coeff":-1,"monomial":["E"]},{"coeff":1,"monomial":["L2 E"]}]})");
    CHECK(to_latex(K0Element::unit(pres)) == "[\\mathbf{1}]");
    CHECK(to_latex(K0Element::zero(pres)) == "0");
    CHECK(to_latex(c2) == "[\\mathbf{1}] - [E] + [\\lambda^{2} E]");
    CHECK(to_json(K0Element::zero(pres), 3) == R"({"degree":3,"class":[]})");
    CHECK(to_json(parse_element("[E]^2", pres), 0) == R"({"degree":0,"class":[{"coeff":1,"monomial":["E","E"]}]})");
}

TEST_CASE("skew polynomial grammar")
{
    const auto p = parse_skewpoly("T^2 - t", 5);
    CHECK(p.degree() == 2);
    CHECK(parse_skewpoly("T*t", 5) == parse_skewpoly("t*T + 1", 5));
    CHECK(parse_skewpoly("T^2 + (1/t)*T + (t+1)", 5).coeff(1) == R(5, "1/t"));
    CHECK(parse_skewpoly("T/t", 5) == parse_skewpoly("(1/t)*T - 1/t^2", 5));
    CHECK_THROWS_AS(parse_skewpoly("1/T", 5), ParseError);
    CHECK_THROWS_AS(parse_skewpoly("T^-1", 5), ParseError);
    CHECK_THROWS_AS(parse_skewpoly("x", 5), ParseError);
    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        std::vector<RatFun> c;
        for (int k = 0; k < 4; ++k) c.push_back(random_ratfun(rng, 3, 2));
        const SkewPoly q(3, std::move(c));
        CHECK(parse_skewpoly(to_string(q), 3) == q);
    }
}

TEST_CASE("matrix and presentation JSON")
{
    const auto m = parse_matrix(R"({"p":3,"matrix":[["t","1/t"],["0","t^2+1"]]})", std::nullopt);
    CHECK(m(0, 1) == R(3, "1/t"));
    CHECK(parse_matrix(R"([["t"]])", 5)(0, 0) == R(5, "t"));
    CHECK(parse_matrix(matrix_to_json(m), std::nullopt) == m);
    CHECK(matrix_to_json(m) == R"({"p":3,"matrix":[["t","1/t"],["0","t^2 + 1"]]})");
    CHECK_THROWS_AS(parse_matrix(R"([["t"]])", std::nullopt), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"p":3,"matrix":[["t"],["t","1"]]})", std::nullopt), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"p":3,"matrix":[["t+"]]})", std::nullopt), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"p":3,)", std::nullopt), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"p":3,"matrix":[["t"]]})", 5), PreconditionError);

    const std::string json = R"({"generators":[{"name":"E","rank":2},{"name":"F","rank":3}]})";
    const auto pres = parse_presentation(json);
    CHECK(presentation_to_json(*pres) == json);
    CHECK_THROWS_AS(parse_presentation(R"({"gens":[]})"), ParseError);
    CHECK_THROWS_AS(parse_presentation(R"({"generators":[{"name":"E","rank":0}]})"), PreconditionError);
}
