#include "charclass/chern.hpp"

#include "charclass/errors.hpp"

namespace charclass {

TruncSeries<K0Element> chern_series(const K0Element& x, std::size_t order)
{
    auto gamma = gamma_series(x - d_op(x), order);
    std::vector<K0Element> c = gamma.coeffs();
    for (std::size_t l = 1; l < c.size(); l += 2) c[l] = -c[l];
    return TruncSeries<K0Element>(std::move(c));
}

K0Element chern_class(const K0Element& x, std::size_t degree) { return chern_series(x, degree)[degree]; }

TruncSeries<K0Element> segre_series(const K0Element& x, std::size_t order) { return ps_inverse(chern_series(x, order)); }

K0Element karoubi_closed_form(const PresentationPtr& pres, std::string_view generator, int degree)
{
    auto gi = pres->generator_index(generator);
    require(gi.has_value(), "unknown generator '" + std::string(generator) + "'");
    const int n = pres->generators()[*gi].rank;
    require(degree >= 0 && degree <= n, "closed form needs 0 <= i <= rank");
    K0Element sum = K0Element::integer(pres, binomial(n, degree));
    for (int j = 1; j <= degree; ++j) {
        BigInt coeff = binomial(n - j, degree - j);
        if (j % 2 == 1) coeff = -coeff;
        sum += coeff * K0Element::symbol(pres, generator, j);
    }
    return sum;
}

std::size_t default_order(const K0Element& x)
{
    const BigInt e = rank_e(x);
    require(e <= 100000, "rank too large for a truncated class computation");
    return (e > 0 ? e.convert_to<std::size_t>() : 0) + 2;
}

K0Element total_class(const K0Element& x, std::optional<std::size_t> max_degree)
{
    std::size_t top;
    if (max_degree) {
        top = *max_degree;
    } else {
        require(x.is_effective(), "total class needs an effective element (pass a maximum degree to truncate)");
        top = rank_e(x).convert_to<std::size_t>();
    }
    auto series = chern_series(x, top);
    K0Element sum = K0Element::zero(x.presentation());
    for (const auto& c : series.coeffs()) sum += c;
    return sum;
}

} // namespace charclass
