#include "charclass/connections.hpp"

#include "charclass/chern.hpp"
#include "charclass/errors.hpp"
#include "charclass/sampling.hpp"

#include <algorithm>
#include <set>

namespace charclass {

RatMatrix zero_matrix(unsigned p, std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols, RatFun::zero(p)); }

RatMatrix derivative(const RatMatrix& m)
{
    return map(m, [](const RatFun& x) { return derivative(x); });
}

RatVector derivative(const RatVector& v)
{
    RatVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(derivative(x));
    return out;
}

MatrixConnection::MatrixConnection(RatMatrix a) : a_(std::move(a))
{
    require(a_.is_square(), "connection matrix must be square");
    require(a_.rows() >= 1, "connection must have dimension >= 1");
    const unsigned p = prime();
    for (std::size_t i = 0; i < a_.rows(); ++i)
        for (std::size_t j = 0; j < a_.cols(); ++j) require(a_(i, j).prime() == p, "mismatched characteristic in matrix");
}

RatVector MatrixConnection::apply(const RatVector& v) const
{
    require(v.size() == dim(), "vector has wrong dimension");
    RatVector out = a_ * v;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] += derivative(v[i]);
    return out;
}

RatVector MatrixConnection::apply(const Derivation& d, const RatVector& v) const
{
    RatVector out = apply(v);
    for (auto& x : out) x = d.coeff * x;
    return out;
}

namespace {

void check_same_prime(const MatrixConnection& a, const MatrixConnection& b)
{
    require(a.prime() == b.prime(), "mismatched characteristic");
}

} // namespace

MatrixConnection conn_sum(const MatrixConnection& a, const MatrixConnection& b)
{
    check_same_prime(a, b);
    return MatrixConnection(block_diag(a.matrix(), b.matrix()));
}

MatrixConnection conn_tensor(const MatrixConnection& a, const MatrixConnection& b)
{
    check_same_prime(a, b);
    const unsigned p = a.prime();
    const auto ia = RatMatrix::identity(a.dim(), RatFun::zero(p));
    const auto ib = RatMatrix::identity(b.dim(), RatFun::zero(p));
    return MatrixConnection(kron(a.matrix(), ib) + kron(ia, b.matrix()));
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t l)
{
    std::vector<std::vector<std::size_t>> out;
    if (l > n) return out;
    std::vector<std::size_t> cur(l);
    for (std::size_t i = 0; i < l; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        std::size_t i = l;
        while (i > 0 && cur[i - 1] == n - l + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < l; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

namespace {

std::vector<std::vector<std::size_t>> multisets(std::size_t n, std::size_t l)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(l, 0);
    if (n == 0) return l == 0 ? std::vector<std::vector<std::size_t>>{{}} : out;
    for (;;) {
        out.push_back(cur);
        std::size_t i = l;
        while (i > 0 && cur[i - 1] == n - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < l; ++j) cur[j] = cur[i - 1];
    }
    return out;
}

} // namespace

MatrixConnection conn_exterior(const MatrixConnection& c, std::size_t l)
{
    const std::size_t n = c.dim();
    require(l <= n, "exterior power degree exceeds dimension");
    const unsigned p = c.prime();
    if (l == 0) return MatrixConnection::trivial(p, 1);
    const auto basis = subsets(n, l);
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
    const auto& a = c.matrix();
    RatMatrix out = zero_matrix(p, basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto& s = basis[col];
        for (std::size_t slot = 0; slot < l; ++slot) {
            // A e_{s[slot]} = sum_k A(k, s[slot]) e_k placed into this slot.
            for (std::size_t k = 0; k < n; ++k) {
                const RatFun& entry = a(k, s[slot]);
                if (entry.is_zero()) continue;
                auto t = s;
                t[slot] = k;
                if (k != s[slot] && std::find(s.begin(), s.end(), k) != s.end()) continue;
                // Sort t, tracking the sign of the permutation.
                int sign = 1;
                for (std::size_t i = 0; i < l; ++i)
                    for (std::size_t j = 0; j + 1 < l - i; ++j)
                        if (t[j] > t[j + 1]) {
                            std::swap(t[j], t[j + 1]);
                            sign = -sign;
                        }
                auto& target = out(index.at(t), col);
                target = sign > 0 ? target + entry : target - entry;
            }
        }
    }
    return MatrixConnection(std::move(out));
}

MatrixConnection conn_sym(const MatrixConnection& c, std::size_t l)
{
    const std::size_t n = c.dim();
    const unsigned p = c.prime();
    if (l == 0) return MatrixConnection::trivial(p, 1);
    const auto basis = multisets(n, l);
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
    const auto& a = c.matrix();
    RatMatrix out = zero_matrix(p, basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto& s = basis[col];
        for (std::size_t slot = 0; slot < l; ++slot)
            for (std::size_t k = 0; k < n; ++k) {
                const RatFun& entry = a(k, s[slot]);
                if (entry.is_zero()) continue;
                auto t = s;
                t[slot] = k;
                std::sort(t.begin(), t.end());
                auto& target = out(index.at(t), col);
                target = target + entry;
            }
    }
    return MatrixConnection(std::move(out));
}

RatMatrix p_curvature_matrix(const MatrixConnection& c)
{
    const unsigned p = c.prime();
    const auto& a = c.matrix();
    RatMatrix m = a;
    for (unsigned k = 1; k < p; ++k) m = derivative(m) + a * m;
    // ∇^p is K-linear with matrix M_p; compare on sample vectors.
    Rng rng(0xbeef + p);
    for (int trial = 0; trial < 2; ++trial) {
        RatVector v;
        for (std::size_t i = 0; i < c.dim(); ++i) v.push_back(random_ratfun(rng, p, 2));
        RatVector w = v;
        for (unsigned k = 0; k < p; ++k) w = c.apply(w);
        if (!(w == m * v)) throw VerificationError("p-curvature matrix disagrees with p-fold application of ∇");
    }
    return -m;
}

ExactTriple::ExactTriple(RatMatrix a_u_, RatMatrix b_, RatMatrix a_w_)
    : a_u(std::move(a_u_)), b(std::move(b_)), a_w(std::move(a_w_))
{
    require(a_u.is_square() && a_w.is_square(), "diagonal blocks must be square");
    require(b.rows() == a_u.rows() && b.cols() == a_w.rows(), "off-diagonal block has inconsistent shape");
    require(a_u.zero().prime() == a_w.zero().prime() && b.zero().prime() == a_u.zero().prime(),
            "mismatched characteristic");
}

RatMatrix ExactTriple::block_matrix() const
{
    const std::size_t a = sub_dim(), bdim = quotient_dim();
    RatMatrix m = zero_matrix(prime(), a + bdim, a + bdim);
    set_block(m, 0, 0, a_u);
    set_block(m, 0, a, b);
    set_block(m, a, a, a_w);
    return m;
}

FiltrationReport filtration_check(const ExactTriple& triple, std::size_t l)
{
    const std::size_t a = triple.sub_dim(), bdim = triple.quotient_dim(), n = a + bdim;
    require(l >= 2 && l <= n, "filtration check needs 2 <= l <= dim V");
    const unsigned p = triple.prime();
    FiltrationReport report{l, {}, {}};

    const auto wedge = conn_exterior(triple.total(), l).matrix();
    const auto basis = subsets(n, l);
    auto u_count = [a](const std::vector<std::size_t>& s) {
        return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [a](std::size_t x) { return x < a; }));
    };

    for (std::size_t i = 0; i <= l; ++i) {
        FiltrationStep step{i, 0, true, true};
        // Stability of F_i: no column in F_i reaches a row outside F_i.
        for (std::size_t col = 0; col < basis.size(); ++col) {
            if (u_count(basis[col]) < i) continue;
            for (std::size_t row = 0; row < basis.size(); ++row)
                if (u_count(basis[row]) < i && !wedge(row, col).is_zero()) step.stable = false;
        }
        // Induced matrix on F_i / F_{i+1}: rows and columns with exactly i
        // factors from U.
        std::vector<std::size_t> graded;
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (u_count(basis[k]) == i) graded.push_back(k);
        step.quotient_dim = graded.size();
        if (i <= a && l - i <= bdim) {
            // Basis of Λ^i U ⊗ Λ^{l-i} W in Kronecker order corresponds to
            // S_U ∪ S_W, which is already increasing.
            const auto su = subsets(a, i);
            const auto sw = subsets(bdim, l - i);
            std::map<std::vector<std::size_t>, std::size_t> position;
            for (std::size_t k = 0; k < graded.size(); ++k) position[basis[graded[k]]] = k;
            std::vector<std::size_t> order;
            for (const auto& x : su)
                for (const auto& y : sw) {
                    std::vector<std::size_t> s = x;
                    for (auto w : y) s.push_back(a + w);
                    order.push_back(graded[position.at(s)]);
                }
            RatMatrix induced = zero_matrix(p, order.size(), order.size());
            for (std::size_t r = 0; r < order.size(); ++r)
                for (std::size_t c = 0; c < order.size(); ++c) induced(r, c) = wedge(order[r], order[c]);
            // Λ^0 is the trivial rank-one connection.
            const auto ext_u = i == 0 ? MatrixConnection::trivial(p, 1) : conn_exterior(triple.sub(), i);
            const auto ext_w = l - i == 0 ? MatrixConnection::trivial(p, 1) : conn_exterior(triple.quotient(), l - i);
            step.quotient_matches = induced == conn_tensor(ext_u, ext_w).matrix();
        } else {
            step.quotient_matches = graded.empty();
        }
        if (!step.stable) report.failures.push_back("F_" + std::to_string(i) + " is not stable under the connection");
        if (!step.quotient_matches)
            report.failures.push_back("F_" + std::to_string(i) + "/F_" + std::to_string(i + 1) +
                                      " does not match Λ^" + std::to_string(i) + " U ⊗ Λ^" + std::to_string(l - i) + " W");
        report.steps.push_back(step);
    }
    return report;
}

namespace {

// r = sum_i t^i c_i(t^p); returns c_i as rational functions of u = t^p.
std::vector<RatFun> kp_components(const RatFun& r)
{
    const unsigned p = r.prime();
    const UPoly num = r.num() * r.den().pow(p - 1);
    std::vector<RatFun> out;
    for (unsigned i = 0; i < p; ++i) {
        std::vector<long long> c;
        for (std::size_t k = i; k < num.coeffs().size(); k += p) c.push_back(num[k]);
        // den^p = den(t^p) since Frobenius fixes F_p.
        out.emplace_back(UPoly(p, std::move(c)), r.den());
    }
    return out;
}

} // namespace

RatVector kp_coordinates(const RatVector& v)
{
    RatVector out;
    for (const auto& x : v)
        for (auto& c : kp_components(x)) out.push_back(std::move(c));
    return out;
}

HorizontalSections horizontal_sections(const MatrixConnection& c)
{
    const unsigned p = c.prime();
    const std::size_t n = c.dim();
    const RatFun t = RatFun::variable(p);
    RatMatrix m = zero_matrix(p, p * n, p * n);
    for (std::size_t j = 0; j < n; ++j)
        for (unsigned i = 0; i < p; ++i) {
            RatVector v(n, RatFun::zero(p));
            v[j] = t.pow(i);
            const auto image = kp_coordinates(c.apply(v));
            for (std::size_t row = 0; row < image.size(); ++row) m(row, j * p + i) = image[row];
        }
    HorizontalSections out;
    for (const auto& coords : nullspace(m)) {
        RatVector v(n, RatFun::zero(p));
        for (std::size_t j = 0; j < n; ++j)
            for (unsigned i = 0; i < p; ++i) v[j] += t.pow(i) * frobenius(coords[j * p + i]);
        const auto check = c.apply(v);
        if (!std::all_of(check.begin(), check.end(), [](const RatFun& x) { return x.is_zero(); }))
            throw VerificationError("computed horizontal section is not horizontal");
        out.basis.push_back(std::move(v));
    }
    out.dimension = out.basis.size();
    return out;
}

ConnectionRegistry::ConnectionRegistry(unsigned p) : p_(p), pres_(make_presentation({})) { check_prime(p); }

PresentationPtr ConnectionRegistry::presentation() const
{
    std::lock_guard lock(mutex_);
    return pres_;
}

const ConnectionRegistry::Entry& ConnectionRegistry::find(std::string_view name) const
{
    for (const auto& e : entries_)
        if (e.name == name) return e;
    throw PreconditionError("no registered connection named '" + std::string(name) + "'");
}

K0Element ConnectionRegistry::class_of(const MatrixConnection& c, std::optional<std::string> name)
{
    require(c.prime() == p_, "connection has a different characteristic than the registry");
    std::lock_guard lock(mutex_);
    for (const auto& e : entries_)
        if (e.connection == c) return K0Element::generator(pres_, e.name);
    if (c.dim() == 1) {
        const RatFun& h = c.matrix()(0, 0);
        if (is_logarithmic(OneForm{h})) return K0Element::unit(pres_);
        for (const auto& e : entries_)
            if (e.connection.dim() == 1 && is_logarithmic(OneForm{h - e.connection.matrix()(0, 0)}))
                return K0Element::generator(pres_, e.name);
    }
    std::string chosen = name ? *name : "C" + std::to_string(entries_.size() + 1);
    for (const auto& e : entries_) require(e.name != chosen, "connection name '" + chosen + "' already registered");
    entries_.push_back({chosen, c, {}});
    std::vector<Generator> gens;
    for (const auto& e : entries_) gens.push_back({e.name, static_cast<int>(e.connection.dim())});
    pres_ = make_presentation(std::move(gens));
    return K0Element::generator(pres_, chosen);
}

K0Element ConnectionRegistry::class_of(const ExactTriple& triple)
{
    K0Element u = class_of(triple.sub());
    K0Element w = class_of(triple.quotient());
    return lift(u) + lift(w);
}

MatrixConnection ConnectionRegistry::generator_connection(std::string_view name) const
{
    std::lock_guard lock(mutex_);
    return find(name).connection;
}

MatrixConnection ConnectionRegistry::exterior_connection(std::string_view name, int k)
{
    std::lock_guard lock(mutex_);
    auto& entry = const_cast<Entry&>(find(name));
    require(k >= 0 && static_cast<std::size_t>(k) <= entry.connection.dim(), "exterior degree out of range");
    auto it = entry.exteriors.find(k);
    if (it == entry.exteriors.end())
        it = entry.exteriors.emplace(k, conn_exterior(entry.connection, static_cast<std::size_t>(k))).first;
    return it->second;
}

K0Element conn_class(ConnectionRegistry& registry, const MatrixConnection& c) { return registry.class_of(c); }

K0Element conn_chern(ConnectionRegistry& registry, const MatrixConnection& c, std::size_t l)
{
    const K0Element x = registry.class_of(c);
    K0Element result = chern_class(x, l);
    const auto& pres = *result.presentation();
    std::set<std::size_t> used;
    for (const auto& term : result.poly().terms())
        for (std::size_t i = 0; i < term.monomial.exps.size(); ++i)
            if (term.monomial.exps[i] != 0) used.insert(i);
    for (auto i : used) {
        const auto& sym = pres.symbols()[i];
        registry.exterior_connection(pres.generators()[sym.generator].name, sym.degree);
    }
    return result;
}

K0Element phi_class(ConnectionRegistry& registry, const OneForm& w)
{
    RatMatrix a = zero_matrix(w.prime(), 1, 1);
    a(0, 0) = w.h;
    return total_class(registry.class_of(MatrixConnection(std::move(a))));
}

} // namespace charclass
