#pragma once

#include "bigint.hpp"
#include "intpoly.hpp"
#include "series.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace charclass {

struct Generator {
    std::string name;
    int rank = 1;

    friend bool operator==(const Generator&, const Generator&) = default;
};

// The symbol Λ^degree of a generator. Λ^1 g is g itself.
struct LambdaSymbol {
    std::size_t generator;
    int degree;
    std::string name; // "E" for degree 1, "L2 E" for degree 2, ...
    BigInt rank;      // C(rank g, degree)
};

// Generators with ranks and their λ-symbols Λ^k g, 1 <= k <= rank g. The
// symbols form the indeterminate alphabet of K0Element, ordered by
// (generator name, degree).
class RingPresentation {
public:
    explicit RingPresentation(std::vector<Generator> generators);

    const std::vector<Generator>& generators() const { return generators_; }
    const std::vector<LambdaSymbol>& symbols() const { return symbols_; }
    std::size_t symbol_count() const { return symbols_.size(); }

    std::optional<std::size_t> generator_index(std::string_view name) const;
    std::optional<std::size_t> symbol_index(std::string_view generator, int degree) const;
    // Looks up "E" or "L2 E".
    std::optional<std::size_t> find_symbol(std::string_view symbol_name) const;
    const std::vector<BigInt>& symbol_ranks() const { return ranks_; }

    friend bool operator==(const RingPresentation& a, const RingPresentation& b)
    {
        return a.generators_ == b.generators_;
    }

private:
    std::vector<Generator> generators_;
    std::vector<LambdaSymbol> symbols_;
    std::vector<BigInt> ranks_;
};

using PresentationPtr = std::shared_ptr<const RingPresentation>;

PresentationPtr make_presentation(std::vector<Generator> generators);

std::string lambda_symbol_name(std::string_view generator, int degree);

// Element of the presented Grothendieck ring: an integer combination of
// monomials in λ-symbols. The empty monomial is the unit class [1].
class K0Element {
public:
    K0Element(PresentationPtr presentation, IntPoly poly);

    static K0Element zero(const PresentationPtr& pres);
    static K0Element unit(const PresentationPtr& pres) { return integer(pres, 1); }
    static K0Element integer(const PresentationPtr& pres, const BigInt& n);
    static K0Element generator(const PresentationPtr& pres, std::string_view name);
    static K0Element symbol(const PresentationPtr& pres, std::string_view generator, int degree);

    const PresentationPtr& presentation() const { return pres_; }
    const IntPoly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }
    // All coefficients >= 1 (the zero element is the empty sum).
    bool is_effective() const;

    K0Element& operator+=(const K0Element& o);
    K0Element& operator-=(const K0Element& o);
    K0Element& operator*=(const K0Element& o);

    friend K0Element operator+(K0Element a, const K0Element& b) { return a += b; }
    friend K0Element operator-(K0Element a, const K0Element& b) { return a -= b; }
    friend K0Element operator*(K0Element a, const K0Element& b) { return a *= b; }
    friend K0Element operator*(const BigInt& n, const K0Element& a) { return K0Element(a.pres_, n * a.poly_); }
    friend K0Element operator-(const K0Element& a) { return K0Element(a.pres_, -a.poly_); }
    friend bool operator==(const K0Element& a, const K0Element& b);

    K0Element pow(unsigned e) const { return K0Element(pres_, poly_.pow(e)); }

private:
    void check_same(const K0Element& o) const;

    PresentationPtr pres_;
    IntPoly poly_;
};

template <>
struct RingTraits<K0Element> {
    static K0Element zero(const K0Element& like) { return K0Element::zero(like.presentation()); }
    static K0Element one(const K0Element& like) { return K0Element::unit(like.presentation()); }
    static K0Element from_int(const K0Element& like, long long n) { return K0Element::integer(like.presentation(), n); }
};

bool same_presentation(const PresentationPtr& a, const PresentationPtr& b);

// Augmentation e: additive and multiplicative, rank of a monomial is the
// product of its symbol ranks.
BigInt rank_e(const K0Element& x);

// e(x) copies of the unit class.
K0Element d_op(const K0Element& x);

// Ring map to the integers with g -> rk g and Λ^k g -> C(rk g, k).
BigInt specialize_to_Z(const K0Element& x);
TruncSeries<BigInt> specialize_to_Z(const TruncSeries<K0Element>& s);

// λ_t(x) truncated at order N. λ^0 is the unit; negative coefficients go
// through series inversion. Monomials must be the unit, a generator, or a
// rank-one object; λ of other composite objects is not part of the
// presentation and throws PreconditionError.
TruncSeries<K0Element> lambda_series(const K0Element& x, std::size_t order);

// γ_t(x) = λ_u(x), u = t/(1-t).
TruncSeries<K0Element> gamma_series(const K0Element& x, std::size_t order);

// Re-expresses x over another presentation by matching symbol names.
K0Element rebase(const K0Element& x, const PresentationPtr& target);

// Ring homomorphism induced by sending each source generator to an
// effective target element of the same rank. λ-symbols map to the
// λ-coefficients of the image (Whitney multiplicativity).
class RingMorphism {
public:
    RingMorphism(PresentationPtr source, PresentationPtr target,
                 std::vector<std::pair<std::string, K0Element>> assignment);

    static RingMorphism identity(const PresentationPtr& pres);

    const PresentationPtr& source() const { return source_; }
    const PresentationPtr& target() const { return target_; }
    const K0Element& image_of_generator(std::size_t index) const { return generator_images_[index]; }

    K0Element apply(const K0Element& x) const;
    TruncSeries<K0Element> apply(const TruncSeries<K0Element>& s) const;

private:
    PresentationPtr source_;
    PresentationPtr target_;
    std::vector<K0Element> generator_images_;
    std::vector<IntPoly> symbol_images_;
};

} // namespace charclass
