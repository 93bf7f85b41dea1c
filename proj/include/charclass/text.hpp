#pragma once

#include "cartier.hpp"
#include "connections.hpp"
#include "lambda_ring.hpp"
#include "ore.hpp"
#include "ratfun.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace charclass {

// Expressions over t with + - * / ^ and parentheses; integers reduce mod p.
RatFun parse_ratfun(std::string_view text, unsigned p);

// "<ratfun> dt"
OneForm parse_form(std::string_view text, unsigned p);
std::string to_string(const OneForm& w);

// Integer combinations of bracketed symbols: `2*[E] - [F] + [L2 E]*[F]^2`.
// A bare integer is a multiple of the unit, as is `[1]`.
K0Element parse_element(std::string_view text, const PresentationPtr& pres);
std::string to_string(const K0Element& x);
std::string to_latex(const K0Element& x);
// {"degree":l,"class":[{"coeff":n,"monomial":[...]}, ...]}, compact.
std::string to_json(const K0Element& x, long long degree);

// Skew polynomials in T with RatFun coefficients; products use Ta = aT + a'.
SkewPoly parse_skewpoly(std::string_view text, unsigned p);

// {"p": 3, "matrix": [["t", "0"], ...]} or a bare array of rows, in which
// case `p` must be supplied.
RatMatrix parse_matrix(std::string_view text, std::optional<unsigned> p);
std::string matrix_to_json(const RatMatrix& m);
std::string matrix_to_text(const RatMatrix& m);

// {"generators": [{"name": "E", "rank": 2}, ...]}
PresentationPtr parse_presentation(std::string_view text);
std::string presentation_to_json(const RingPresentation& pres);

} // namespace charclass
