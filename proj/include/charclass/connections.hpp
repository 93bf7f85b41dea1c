#pragma once

#include "cartier.hpp"
#include "lambda_ring.hpp"
#include "matrix.hpp"
#include "ratfun.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace charclass {

using RatMatrix = Matrix<RatFun>;
using RatVector = std::vector<RatFun>;

RatMatrix zero_matrix(unsigned p, std::size_t rows, std::size_t cols);
RatMatrix derivative(const RatMatrix& m);
RatVector derivative(const RatVector& v);

// ∇(∂) = ∂ + A on K^n: ∇(v) = v' + A v, extended K-linearly to f∂.
class MatrixConnection {
public:
    explicit MatrixConnection(RatMatrix a);

    static MatrixConnection trivial(unsigned p, std::size_t n) { return MatrixConnection(zero_matrix(p, n, n)); }

    unsigned prime() const { return a_.zero().prime(); }
    std::size_t dim() const { return a_.rows(); }
    const RatMatrix& matrix() const { return a_; }

    RatVector apply(const RatVector& v) const;
    RatVector apply(const Derivation& d, const RatVector& v) const;

    friend bool operator==(const MatrixConnection&, const MatrixConnection&) = default;

private:
    RatMatrix a_;
};

MatrixConnection conn_sum(const MatrixConnection& a, const MatrixConnection& b);
// A1 ⊗ I + I ⊗ A2 on the Kronecker basis.
MatrixConnection conn_tensor(const MatrixConnection& a, const MatrixConnection& b);
// Λ^l on the basis of increasing l-subsets in lexicographic order; l = 0
// gives the trivial rank-one connection.
MatrixConnection conn_exterior(const MatrixConnection& c, std::size_t l);
// Sym^l on the basis of non-decreasing l-tuples in lexicographic order.
MatrixConnection conn_sym(const MatrixConnection& c, std::size_t l);

// Lexicographically ordered l-subsets of {0, ..., n-1}.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t l);

// ψ(∂) = -M_p with M_1 = A, M_{k+1} = M_k' + A M_k (∂^[p] = 0 on F_p(t)),
// cross-checked against p-fold application of ∇ on sample vectors.
RatMatrix p_curvature_matrix(const MatrixConnection& c);

// 0 -> U -> V -> W -> 0 with V given by [[A_U, B], [0, A_W]].
struct ExactTriple {
    RatMatrix a_u;
    RatMatrix b;
    RatMatrix a_w;

    ExactTriple(RatMatrix a_u, RatMatrix b, RatMatrix a_w);

    unsigned prime() const { return a_u.zero().prime(); }
    std::size_t sub_dim() const { return a_u.rows(); }
    std::size_t quotient_dim() const { return a_w.rows(); }
    RatMatrix block_matrix() const;
    MatrixConnection total() const { return MatrixConnection(block_matrix()); }
    MatrixConnection sub() const { return MatrixConnection(a_u); }
    MatrixConnection quotient() const { return MatrixConnection(a_w); }
};

struct FiltrationStep {
    std::size_t index;      // i, F_i spanned by wedges with >= i factors from U
    std::size_t quotient_dim;
    bool stable;
    bool quotient_matches;  // F_i/F_{i+1} equals Λ^i U ⊗ Λ^{l-i} W exactly
};

struct FiltrationReport {
    std::size_t degree;
    std::vector<FiltrationStep> steps;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

FiltrationReport filtration_check(const ExactTriple& triple, std::size_t l);

struct HorizontalSections {
    std::vector<RatVector> basis; // K^p-independent solutions of ∇v = 0
    std::size_t dimension = 0;    // over K^p
};

// Solves ∇v = 0 as a K^p-linear system on the basis t^i e_j, 0 <= i < p.
HorizontalSections horizontal_sections(const MatrixConnection& c);

// Coordinates of v over K^p = F_p(u), u = t^p, in the basis t^i e_j
// (index j*p + i). Entries are rational functions of u.
RatVector kp_coordinates(const RatVector& v);

// Grothendieck ring of registered connections. Each new connection becomes
// a generator of rank dim; its λ-symbols stand for exterior powers, which
// are materialized on request. Identifications: a repeated connection maps
// to its existing generator, a rank-one connection whose matrix differs
// from a registered one (or from 0) by a logarithmic derivative maps to
// that generator (or to the unit [θ_K]), and an exact triple gives
// [V] = [U] + [W]. Registration is thread-safe and append-only.
class ConnectionRegistry {
public:
    explicit ConnectionRegistry(unsigned p);

    unsigned prime() const { return p_; }

    // Class of c over the presentation current after registration.
    K0Element class_of(const MatrixConnection& c, std::optional<std::string> name = std::nullopt);
    K0Element class_of(const ExactTriple& triple);

    PresentationPtr presentation() const;
    K0Element unit() const { return K0Element::unit(presentation()); }
    // Re-expresses an element from an earlier snapshot over the current one.
    K0Element lift(const K0Element& x) const { return rebase(x, presentation()); }

    MatrixConnection generator_connection(std::string_view name) const;
    // Λ^k of a registered generator (cached).
    MatrixConnection exterior_connection(std::string_view name, int k);

private:
    struct Entry {
        std::string name;
        MatrixConnection connection;
        std::map<int, MatrixConnection> exteriors;
    };
    const Entry& find(std::string_view name) const;

    unsigned p_;
    mutable std::mutex mutex_;
    std::deque<Entry> entries_;
    PresentationPtr pres_;
};

K0Element conn_class(ConnectionRegistry& registry, const MatrixConnection& c);
// c_l of the class of c; exterior powers for the symbols that occur are
// materialized in the registry.
K0Element conn_chern(ConnectionRegistry& registry, const MatrixConnection& c, std::size_t l);

// φ(ω) = total class of the rank-one connection ∂ + h; equals [θ_K] iff ω
// is a logarithmic derivative.
K0Element phi_class(ConnectionRegistry& registry, const OneForm& w);

} // namespace charclass
