#pragma once

#include "lambda_ring.hpp"

#include <optional>
#include <string_view>

namespace charclass {

// c_t(x) = sum_l (-1)^l γ^l(x - d(x)) t^l, truncated at `order`.
TruncSeries<K0Element> chern_series(const K0Element& x, std::size_t order);

// c_l(x) = (-1)^l γ^l(x - d(x)).
K0Element chern_class(const K0Element& x, std::size_t degree);

// s_t(x) = c_t(x)^{-1}.
TruncSeries<K0Element> segre_series(const K0Element& x, std::size_t order);

// sum_{j=0..i} (-1)^j C(n-j, i-j) [Λ^j g] for a generator g of rank n.
K0Element karoubi_closed_form(const PresentationPtr& pres, std::string_view generator, int degree);

// c(x) = sum_{l=0..e(x)} c_l(x) for effective x. With `max_degree` the sum
// runs to that degree instead and any element is accepted.
K0Element total_class(const K0Element& x, std::optional<std::size_t> max_degree = std::nullopt);

// Smallest truncation order that still exhibits vanishing: max(e(x), 0) + 2.
std::size_t default_order(const K0Element& x);

} // namespace charclass
