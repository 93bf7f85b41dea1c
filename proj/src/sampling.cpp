#include "charclass/sampling.hpp"

namespace charclass {

UPoly random_upoly(Rng& rng, unsigned p, int max_degree)
{
    std::vector<long long> c(static_cast<std::size_t>(max_degree) + 1);
    for (auto& x : c) x = static_cast<long long>(rng.below(p));
    return UPoly(p, std::move(c));
}

UPoly random_nonzero_upoly(Rng& rng, unsigned p, int max_degree)
{
    for (;;) {
        UPoly f = random_upoly(rng, p, max_degree);
        if (!f.is_zero()) return f;
    }
}

UPoly random_monic(Rng& rng, unsigned p, int degree)
{
    std::vector<long long> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = static_cast<long long>(rng.below(p));
    c.back() = 1;
    return UPoly(p, std::move(c));
}

RatFun random_ratfun(Rng& rng, unsigned p, int max_degree)
{
    UPoly num = random_upoly(rng, p, max_degree);
    UPoly den = random_nonzero_upoly(rng, p, max_degree);
    return RatFun(std::move(num), std::move(den));
}

RatFun random_nonzero_ratfun(Rng& rng, unsigned p, int max_degree)
{
    return RatFun(random_nonzero_upoly(rng, p, max_degree), random_nonzero_upoly(rng, p, max_degree));
}

} // namespace charclass
