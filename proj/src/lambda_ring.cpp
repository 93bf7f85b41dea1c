#include "charclass/lambda_ring.hpp"

#include "charclass/errors.hpp"

#include <algorithm>
#include <cctype>

namespace charclass {

namespace {

bool valid_generator_name(std::string_view name)
{
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    });
}

} // namespace

std::string lambda_symbol_name(std::string_view generator, int degree)
{
    if (degree == 1) return std::string(generator);
    return "L" + std::to_string(degree) + " " + std::string(generator);
}

RingPresentation::RingPresentation(std::vector<Generator> generators) : generators_(std::move(generators))
{
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const auto& g = generators_[i];
        require(valid_generator_name(g.name), "invalid generator name '" + g.name + "'");
        require(g.rank >= 1, "generator '" + g.name + "' must have rank >= 1");
        for (std::size_t j = 0; j < i; ++j)
            require(generators_[j].name != g.name, "duplicate generator name '" + g.name + "'");
        for (int k = 1; k <= g.rank; ++k) symbols_.push_back({i, k, lambda_symbol_name(g.name, k), binomial(g.rank, k)});
    }
    std::sort(symbols_.begin(), symbols_.end(), [this](const LambdaSymbol& a, const LambdaSymbol& b) {
        const auto& na = generators_[a.generator].name;
        const auto& nb = generators_[b.generator].name;
        if (na != nb) return na < nb;
        return a.degree < b.degree;
    });
    for (const auto& s : symbols_) ranks_.push_back(s.rank);
}

std::optional<std::size_t> RingPresentation::generator_index(std::string_view name) const
{
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name) return i;
    return std::nullopt;
}

std::optional<std::size_t> RingPresentation::symbol_index(std::string_view generator, int degree) const
{
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].degree == degree && generators_[symbols_[i].generator].name == generator) return i;
    return std::nullopt;
}

std::optional<std::size_t> RingPresentation::find_symbol(std::string_view symbol_name) const
{
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].name == symbol_name) return i;
    return std::nullopt;
}

PresentationPtr make_presentation(std::vector<Generator> generators)
{
    return std::make_shared<const RingPresentation>(std::move(generators));
}

bool same_presentation(const PresentationPtr& a, const PresentationPtr& b)
{
    return a == b || (a && b && *a == *b);
}

K0Element::K0Element(PresentationPtr presentation, IntPoly poly) : pres_(std::move(presentation)), poly_(std::move(poly))
{
    require(pres_ != nullptr, "element needs a presentation");
    require(poly_.nvars() == pres_->symbol_count(), "element polynomial does not match its presentation");
}

K0Element K0Element::zero(const PresentationPtr& pres) { return K0Element(pres, IntPoly(pres->symbol_count())); }

K0Element K0Element::integer(const PresentationPtr& pres, const BigInt& n)
{
    return K0Element(pres, IntPoly::constant(pres->symbol_count(), n));
}

K0Element K0Element::generator(const PresentationPtr& pres, std::string_view name) { return symbol(pres, name, 1); }

K0Element K0Element::symbol(const PresentationPtr& pres, std::string_view generator, int degree)
{
    auto idx = pres->symbol_index(generator, degree);
    require(idx.has_value(), "no λ-symbol " + lambda_symbol_name(generator, degree) + " in presentation");
    return K0Element(pres, IntPoly::variable(pres->symbol_count(), *idx));
}

bool K0Element::is_effective() const
{
    return std::all_of(poly_.terms().begin(), poly_.terms().end(), [](const auto& t) { return t.coeff >= 1; });
}

void K0Element::check_same(const K0Element& o) const
{
    require(same_presentation(pres_, o.pres_), "elements belong to different presentations");
}

K0Element& K0Element::operator+=(const K0Element& o)
{
    check_same(o);
    poly_ += o.poly_;
    return *this;
}

K0Element& K0Element::operator-=(const K0Element& o)
{
    check_same(o);
    poly_ -= o.poly_;
    return *this;
}

K0Element& K0Element::operator*=(const K0Element& o)
{
    check_same(o);
    poly_ *= o.poly_;
    return *this;
}

bool operator==(const K0Element& a, const K0Element& b)
{
    return same_presentation(a.pres_, b.pres_) && a.poly_ == b.poly_;
}

BigInt rank_e(const K0Element& x) { return x.poly().evaluate(x.presentation()->symbol_ranks()); }

K0Element d_op(const K0Element& x) { return K0Element::integer(x.presentation(), rank_e(x)); }

BigInt specialize_to_Z(const K0Element& x) { return rank_e(x); }

TruncSeries<BigInt> specialize_to_Z(const TruncSeries<K0Element>& s)
{
    std::vector<BigInt> out;
    out.reserve(s.order() + 1);
    for (const auto& c : s.coeffs()) out.push_back(specialize_to_Z(c));
    return TruncSeries<BigInt>(std::move(out));
}

namespace {

// λ_t of a single object (monomial with coefficient 1).
TruncSeries<K0Element> lambda_of_object(const PresentationPtr& pres, const Monomial& m, std::size_t order)
{
    const std::size_t n = pres->symbol_count();
    const K0Element zero = K0Element::zero(pres);
    std::vector<K0Element> c(order + 1, zero);
    c[0] = K0Element::unit(pres);
    if (order == 0) return TruncSeries<K0Element>(std::move(c));

    // A lone generator: its λ-symbols.
    std::size_t nonzero = 0, where = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (m.exps[i] != 0) {
            ++nonzero;
            where = i;
        }
    if (nonzero == 1 && m.exps[where] == 1 && pres->symbols()[where].degree == 1) {
        const auto& sym = pres->symbols()[where];
        const auto& gen = pres->generators()[sym.generator];
        for (int k = 1; k <= gen.rank && static_cast<std::size_t>(k) <= order; ++k)
            c[k] = K0Element::symbol(pres, gen.name, k);
        return TruncSeries<K0Element>(std::move(c));
    }

    // Rank-one objects (the unit, top exterior powers and their products):
    // λ_t = 1 + [m] t.
    BigInt rank = 1;
    for (std::size_t i = 0; i < n; ++i)
        if (m.exps[i] != 0) rank *= boost::multiprecision::pow(pres->symbol_ranks()[i], m.exps[i]);
    if (rank == 1) {
        c[1] = K0Element(pres, IntPoly::from_terms(n, {{m, 1}}));
        return TruncSeries<K0Element>(std::move(c));
    }
    throw PreconditionError("λ-operations of composite objects of rank " + rank.str() +
                            " are not part of the presented ring");
}

} // namespace

TruncSeries<K0Element> lambda_series(const K0Element& x, std::size_t order)
{
    const auto& pres = x.presentation();
    auto result = TruncSeries<K0Element>::constant(K0Element::unit(pres), order);
    for (const auto& term : x.poly().terms()) {
        require(boost::multiprecision::abs(term.coeff) <= 1000000, "coefficient too large for λ-series expansion");
        const auto count = term.coeff.convert_to<long long>();
        result = result * ps_pow(lambda_of_object(pres, term.monomial, order), count);
    }
    return result;
}

TruncSeries<K0Element> gamma_series(const K0Element& x, std::size_t order)
{
    return ps_gamma_substitute(lambda_series(x, order));
}

K0Element rebase(const K0Element& x, const PresentationPtr& target)
{
    if (same_presentation(x.presentation(), target)) return K0Element(target, x.poly());
    const auto& src = *x.presentation();
    std::vector<IntPoly> images;
    images.reserve(src.symbol_count());
    for (const auto& s : src.symbols()) {
        auto idx = target->find_symbol(s.name);
        require(idx.has_value(), "symbol " + s.name + " missing from target presentation");
        require(target->symbols()[*idx].rank == s.rank, "symbol " + s.name + " has a different rank in target");
        images.push_back(IntPoly::variable(target->symbol_count(), *idx));
    }
    return K0Element(target, x.poly().substitute(images, target->symbol_count()));
}

RingMorphism::RingMorphism(PresentationPtr source, PresentationPtr target,
                           std::vector<std::pair<std::string, K0Element>> assignment)
    : source_(std::move(source)), target_(std::move(target))
{
    const auto& gens = source_->generators();
    std::vector<std::optional<K0Element>> images(gens.size());
    for (auto& [name, image] : assignment) {
        auto idx = source_->generator_index(name);
        require(idx.has_value(), "morphism assigns unknown generator '" + name + "'");
        require(!images[*idx].has_value(), "generator '" + name + "' assigned twice");
        require(same_presentation(image.presentation(), target_), "image of '" + name + "' is not over the target");
        require(image.is_effective() && !image.is_zero(), "image of '" + name + "' must be effective");
        require(rank_e(image) == gens[*idx].rank, "image of '" + name + "' must have rank " + std::to_string(gens[*idx].rank));
        images[*idx] = image;
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        require(images[i].has_value(), "generator '" + gens[i].name + "' has no image");
        generator_images_.push_back(*images[i]);
    }
    // Λ^k g -> λ^k(f(g)); the λ-series of an image of rank r stops at t^r.
    std::vector<TruncSeries<K0Element>> lambdas;
    for (std::size_t i = 0; i < gens.size(); ++i)
        lambdas.push_back(lambda_series(generator_images_[i], static_cast<std::size_t>(gens[i].rank)));
    for (const auto& sym : source_->symbols()) symbol_images_.push_back(lambdas[sym.generator][sym.degree].poly());
}

RingMorphism RingMorphism::identity(const PresentationPtr& pres)
{
    std::vector<std::pair<std::string, K0Element>> assignment;
    for (const auto& g : pres->generators()) assignment.emplace_back(g.name, K0Element::generator(pres, g.name));
    return RingMorphism(pres, pres, std::move(assignment));
}

K0Element RingMorphism::apply(const K0Element& x) const
{
    require(same_presentation(x.presentation(), source_), "element is not over the morphism's source");
    return K0Element(target_, x.poly().substitute(symbol_images_, target_->symbol_count()));
}

TruncSeries<K0Element> RingMorphism::apply(const TruncSeries<K0Element>& s) const
{
    std::vector<K0Element> out;
    out.reserve(s.order() + 1);
    for (const auto& c : s.coeffs()) out.push_back(apply(c));
    return TruncSeries<K0Element>(std::move(out));
}

} // namespace charclass
