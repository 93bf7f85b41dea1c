#include "charclass/verify.hpp"

#include "charclass/cartier.hpp"
#include "charclass/chern.hpp"
#include "charclass/connections.hpp"
#include "charclass/errors.hpp"
#include "charclass/fp.hpp"
#include "charclass/ore.hpp"
#include "charclass/text.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

namespace charclass {

namespace {

struct TrialOutcome {
    std::size_t index = 0;
    std::vector<std::string> failures;
    std::map<std::string, std::size_t> tallies;

    void fail(std::string what) { failures.push_back(std::move(what)); }
    void count(const std::string& key, std::size_t n = 1) { tallies[key] += n; }
};

using TrialFn = std::function<void(Rng&, const VerifyOptions&, TrialOutcome&)>;

struct Suite {
    std::string name;
    std::vector<unsigned> default_primes;
    TrialFn trial;
};

std::string describe(const K0Element& x) { return to_string(x) + " over " + presentation_to_json(*x.presentation()); }

// ---- λ-ring suites

void whitney_trial(Rng& rng, const VerifyOptions&, TrialOutcome& out)
{
    const auto pres = random_presentation(rng, 3, 5);
    const auto x = random_element(rng, pres);
    const auto y = random_element(rng, pres);
    const auto n = static_cast<std::size_t>(rng.range(1, 12));
    const auto lhs = chern_series(x + y, n);
    const auto rhs = chern_series(x, n) * chern_series(y, n);
    if (!(lhs == rhs))
        out.fail("c_t(x+y) != c_t(x)c_t(y) mod t^" + std::to_string(n + 1) + " for x = " + to_string(x) +
                 ", y = " + to_string(y) + " over " + presentation_to_json(*pres));
}

void vanishing_trial(Rng& rng, const VerifyOptions&, TrialOutcome& out)
{
    const auto pres = random_presentation(rng, 3, 5);
    const auto x = random_effective(rng, pres, 8);
    const auto e = static_cast<std::size_t>(rank_e(x));
    const auto c = chern_series(x, e + 4);
    for (std::size_t l = e + 1; l <= e + 4; ++l)
        if (!c[l].is_zero())
            out.fail("c_" + std::to_string(l) + "(x) = " + to_string(c[l]) + " != 0 with e(x) = " + std::to_string(e) +
                     " for x = " + describe(x));
    if (!c[e].is_zero()) out.count("strict: c_e(x) != 0");
    else out.count("c_e(x) = 0");
}

void naturality_trial(Rng& rng, const VerifyOptions&, TrialOutcome& out)
{
    const auto source = random_presentation(rng, 3, 4);
    const auto target = random_presentation(rng, 3, 4, {"P", "Q", "R"});
    const auto f = random_morphism(rng, source, target);
    const auto x = random_element(rng, source);
    const auto lhs = f.apply(chern_series(x, 6));
    const auto rhs = chern_series(f.apply(x), 6);
    for (std::size_t l = 0; l <= 6; ++l)
        if (!(lhs[l] == rhs[l])) {
            std::string images;
            for (std::size_t g = 0; g < source->generators().size(); ++g)
                images += " " + source->generators()[g].name + " -> " + to_string(f.image_of_generator(g)) + ";";
            out.fail("f*(c_" + std::to_string(l) + "(x)) != c_" + std::to_string(l) + "(f*x) for x = " + describe(x) +
                     ", f:" + images + " target " + presentation_to_json(*target));
        }
}

void segre_trial(Rng& rng, const VerifyOptions&, TrialOutcome& out)
{
    const auto pres = random_presentation(rng, 3, 4);
    const auto x = random_element(rng, pres);
    const auto y = random_element(rng, pres);
    const auto n = static_cast<std::size_t>(rng.range(1, 10));
    const auto c = chern_series(x, n);
    const auto s = segre_series(x, n);
    if (!(c * s == TruncSeries<K0Element>::constant(K0Element::unit(pres), n)))
        out.fail("c_t(x) s_t(x) != 1 for x = " + describe(x));
    if (!(segre_series(x + y, n) == s * segre_series(y, n)))
        out.fail("s_t(x+y) != s_t(x)s_t(y) for x = " + to_string(x) + ", y = " + describe(y));

    const auto target = random_presentation(rng, 2, 4, {"P", "Q"});
    const auto f = random_morphism(rng, pres, target);
    if (!(f.apply(s) == segre_series(f.apply(x), n))) out.fail("f*(s_t(x)) != s_t(f*x) for x = " + describe(x));

    // A line bundle has s_2 = (l - 1)^2, which does not vanish.
    const auto line = make_presentation({{"L", 1}});
    const auto l = K0Element::generator(line, "L");
    const auto s2 = segre_series(l, 2)[2];
    const auto expected = (l - K0Element::unit(line)).pow(2);
    if (!(s2 == expected)) out.fail("s_2(L) = " + to_string(s2) + ", expected " + to_string(expected));
    else if (!s2.is_zero()) out.count("s_2(L) = ([L] - 1)^2 != 0");
}

void karoubi_trial(Rng& rng, const VerifyOptions&, TrialOutcome& out)
{
    // Ranks cycle through 1..6 so six trials cover every case.
    const int n = static_cast<int>(out.index % 6) + 1;
    auto pres = make_presentation({{"E", n}, {"F", static_cast<int>(rng.range(1, 4))}});
    const auto e = K0Element::generator(pres, "E");
    const auto c = chern_series(e, static_cast<std::size_t>(n) + 2);
    for (int i = 0; i <= n; ++i) {
        const auto closed = karoubi_closed_form(pres, "E", i);
        if (!(c[static_cast<std::size_t>(i)] == closed))
            out.fail("c_" + std::to_string(i) + "(E) = " + to_string(c[static_cast<std::size_t>(i)]) +
                     " but the closed form gives " + to_string(closed) + " for rank " + std::to_string(n));
        else
            out.count("rank " + std::to_string(n) + " cases");
    }
}

void specialize_trial(Rng& rng, const VerifyOptions&, TrialOutcome& out)
{
    const auto pres = random_presentation(rng, 3, 5);
    const auto x = random_element(rng, pres);
    const auto y = random_element(rng, pres);
    const auto n = static_cast<std::size_t>(rng.range(1, 10));
    const auto cx = specialize_to_Z(chern_series(x, n));
    const auto cy = specialize_to_Z(chern_series(y, n));
    const auto cxy = specialize_to_Z(chern_series(x + y, n));
    if (!(cxy == cx * cy)) out.fail("Whitney fails after specialization for x = " + to_string(x) + ", y = " + describe(y));
    for (std::size_t l = 1; l <= n; ++l)
        if (cx[l] != 0) out.fail("specialize(c_" + std::to_string(l) + "(x)) = " + to_string(cx[l]) + " for x = " + describe(x));
    const auto sx = specialize_to_Z(segre_series(x, n));
    if (!(sx == TruncSeries<BigInt>::constant(BigInt(1), n)))
        out.fail("specialized Segre series is not 1 for x = " + describe(x));
    // Binomial λ-structure on Z: λ_t(m) = (1+t)^m.
    const auto lam = specialize_to_Z(lambda_series(x, n));
    const BigInt m = rank_e(x);
    TruncSeries<BigInt> one_plus_t(std::vector<BigInt>(n + 1, BigInt(0)));
    one_plus_t[0] = 1;
    if (n >= 1) one_plus_t[1] = 1;
    const auto expected = ps_pow(one_plus_t, m.convert_to<long long>());
    if (!(lam == expected)) out.fail("specialized λ_t(x) != (1+t)^e(x) for x = " + describe(x));
}

void lambda_inverse_trial(Rng& rng, const VerifyOptions&, TrialOutcome& out)
{
    const auto pres = random_presentation(rng, 3, 5);
    const auto x = random_element(rng, pres);
    const auto n = static_cast<std::size_t>(rng.range(1, 10));
    const auto prod = lambda_series(x, n) * lambda_series(-x, n);
    if (!(prod == TruncSeries<K0Element>::constant(K0Element::unit(pres), n)))
        out.fail("λ_t(x)λ_t(-x) != 1 mod t^" + std::to_string(n + 1) + " for x = " + describe(x));
}

void gamma_closed_form_trial(Rng&, const VerifyOptions&, TrialOutcome& out)
{
    // Ranks cycle through 1..8; past k = 8 the closed form no longer changes with the rank.
    const int r = static_cast<int>(out.index % 8) + 1;
    const auto pres = make_presentation({{"E", r}});
    const auto g = K0Element::generator(pres, "E");
    constexpr std::size_t n = 8;
    const auto horner = gamma_series(g, n);
    const auto closed_series = ps_gamma_substitute_binomial(lambda_series(g, n));
    for (std::size_t k = 1; k <= n; ++k) {
        auto closed = K0Element::zero(pres);
        for (int j = 1; j <= std::min<int>(static_cast<int>(k), r); ++j)
            closed += binomial(static_cast<long long>(k) - 1, j - 1) * K0Element::symbol(pres, "E", j);
        if (!(horner[k] == closed) || !(closed_series[k] == closed))
            out.fail("γ^" + std::to_string(k) + "(E) disagrees for rank " + std::to_string(r) + ": " + to_string(horner[k]) +
                     " vs " + to_string(closed_series[k]) + " vs " + to_string(closed));
        else
            out.count("rank " + std::to_string(r) + " coefficients");
    }
}

// ---- characteristic p suites

Derivation random_derivation(Rng& rng, unsigned p)
{
    // Half of the time the plain d/dt.
    if (rng.coin()) return Derivation::d_dt(p);
    return Derivation{random_nonzero_ratfun(rng, p, 2)};
}

void cartier_trial(Rng& rng, const VerifyOptions& opt, TrialOutcome& out)
{
    for (unsigned p : opt.primes) {
        const OneForm w{random_ratfun(rng, p, 3)};
        const OneForm v{random_ratfun(rng, p, 3)};
        const RatFun f = random_ratfun(rng, p, 3);
        const RatFun g = random_ratfun(rng, p, 2);
        const Derivation d = random_derivation(rng, p);
        const std::string ctx = " (p=" + std::to_string(p) + ", d = (" + to_string(d.coeff) + ") d/dt)";
        if (!(cartier_op(w + v, d) == cartier_op(w, d) + cartier_op(v, d)))
            out.fail("C(ω+η) != Cω + Cη for ω = " + to_string(w) + ", η = " + to_string(v) + ctx);
        if (!(cartier_op(frobenius(g) * w, d) == RootValue::embed(g) * cartier_op(w, d)))
            out.fail("C(g^p ω) != g Cω for g = " + to_string(g) + ", ω = " + to_string(w) + ctx);
        if (!(cartier_op(exterior_derivative(f), d) == RootValue::embed(RatFun::zero(p))))
            out.fail("C(df) != 0 for f = " + to_string(f) + ctx);
    }
}

void pcurv_trial(Rng& rng, const VerifyOptions& opt, TrialOutcome& out)
{
    for (unsigned p : opt.primes) {
        const OneForm w{random_ratfun(rng, p, 3)};
        const Derivation d = random_derivation(rng, p);
        const RatFun psi = p_curvature_rank1(w, d);
        const RatFun unsigned_form = (cartier_op(w, d) - RootValue::embed(w(d))).pth_power();
        const RatFun signed_form = p % 2 == 0 ? unsigned_form : -unsigned_form;
        const std::string ctx = "ω = " + to_string(w) + ", d = (" + to_string(d.coeff) + ") d/dt, p = " + std::to_string(p);
        const std::string tag = " (p=" + std::to_string(p) + ")";
        if (!(psi == unsigned_form)) out.fail("ψ = " + to_string(psi) + " != (Cω - ω)^p = " + to_string(unsigned_form) + " for " + ctx);
        if (psi == signed_form) {
            out.count("signed form holds" + tag);
        } else {
            out.count("signed form fails" + tag);
            if (opt.signed_variant)
                out.fail("ψ = " + to_string(psi) + " != (-1)^p (Cω - ω)^p = " + to_string(signed_form) + " for " + ctx);
        }
        // Rank-one matrix formula for d/dt: ψ = -(h^p + h^{(p-1)}).
        const RatFun h = w.h;
        const RatFun formula = -(h.pow(p) + apply_power(Derivation::d_dt(p), h, p - 1));
        RatMatrix a = zero_matrix(p, 1, 1);
        a(0, 0) = h;
        const RatFun via_matrix = p_curvature_matrix(MatrixConnection(a))(0, 0);
        if (!(via_matrix == formula) || !(p_curvature_rank1(w, Derivation::d_dt(p)) == formula))
            out.fail("rank-one p-curvature formula disagrees for h = " + to_string(h) + tag);
    }
}

void operator_identity_trial(Rng& rng, const VerifyOptions& opt, TrialOutcome& out)
{
    for (unsigned p : opt.primes) {
        const RatFun a = random_ratfun(rng, p, 3);
        const Derivation d = random_derivation(rng, p);
        const RatFun rhs_coeff = a.pow(p) + apply_power(d, a, p - 1);
        for (int k = 0; k < 10; ++k) {
            const RatFun f = random_ratfun(rng, p, 3);
            RatFun lhs = f;
            for (unsigned i = 0; i < p; ++i) lhs = a * lhs + d(lhs);
            const RatFun rhs = rhs_coeff * f + apply_power(d, f, p);
            if (!(lhs == rhs))
                out.fail("(a+d)^p f != (a^p + d^{p-1}a) f + d^p f for a = " + to_string(a) + ", d = (" + to_string(d.coeff) +
                         ") d/dt, f = " + to_string(f) + ", p = " + std::to_string(p));
        }
    }
}

void dlog_trial(Rng& rng, const VerifyOptions& opt, TrialOutcome& out)
{
    for (unsigned p : opt.primes) {
        const std::string tag = ", p = " + std::to_string(p);
        const RatFun x = random_nonzero_ratfun(rng, p, 3);
        const OneForm w{derivative(x) / x};
        const auto witness = is_logarithmic(w);
        if (!witness) out.fail("dx/x not recognised as logarithmic for x = " + to_string(x) + tag);
        else if (!(derivative(*witness) / *witness == w.h)) out.fail("witness " + to_string(*witness) + " does not reproduce x'/x for x = " + to_string(x) + tag);
        if (!p_curvature_rank1(w, Derivation::d_dt(p)).is_zero()) out.fail("ψ != 0 for dx/x with x = " + to_string(x) + tag);

        const long long c = rng.range(1, static_cast<long long>(p) - 1);
        const RatFun t = RatFun::variable(p);
        const OneForm pole{RatFun::constant(p, c) / (t * t)};
        if (is_logarithmic(pole)) out.fail("c/t^2 dt recognised as logarithmic for c = " + std::to_string(c) + tag);
        const RatFun expected = -RatFun::constant(p, c).pow(p) * t.pow(-2 * static_cast<long long>(p));
        const RatFun psi = p_curvature_rank1(pole, Derivation::d_dt(p));
        if (!(psi == expected) || psi.is_zero())
            out.fail("ψ(c/t^2 dt) = " + to_string(psi) + ", expected " + to_string(expected) + tag);
    }
}

RatMatrix random_matrix(Rng& rng, unsigned p, std::size_t rows, std::size_t cols, int degree)
{
    RatMatrix m = zero_matrix(p, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_ratfun(rng, p, degree);
    return m;
}

RatMatrix random_polynomial_matrix(Rng& rng, unsigned p, std::size_t n, int degree)
{
    RatMatrix m = zero_matrix(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = RatFun(random_upoly(rng, p, degree));
    return m;
}

void filtration_trial(Rng& rng, const VerifyOptions& opt, TrialOutcome& out)
{
    for (unsigned p : opt.primes)
        for (std::size_t n = 2; n <= 4; ++n)
            for (std::size_t a = 1; a < n; ++a) {
                const ExactTriple triple(random_matrix(rng, p, a, a, 1), random_matrix(rng, p, a, n - a, 1),
                                         random_matrix(rng, p, n - a, n - a, 1));
                for (std::size_t l = 2; l <= n; ++l) {
                    const auto report = filtration_check(triple, l);
                    for (const auto& f : report.failures)
                        out.fail(f + " for l = " + std::to_string(l) + ", V = " + matrix_to_json(triple.block_matrix()) +
                                 ", dim U = " + std::to_string(a));
                    out.count("checks");
                }
            }
}

void descent_trial(Rng& rng, const VerifyOptions& opt, TrialOutcome& out)
{
    for (unsigned p : opt.primes) {
        const auto n = static_cast<std::size_t>(rng.range(1, 3));
        RatMatrix g = random_polynomial_matrix(rng, p, n, 2);
        for (int tries = 0; !inverse(g); ++tries) {
            if (tries > 100) throw VerificationError("could not draw an invertible gauge matrix");
            g = random_polynomial_matrix(rng, p, n, 2);
        }
        const RatMatrix a = -(derivative(g) * *inverse(g));
        const MatrixConnection c(a);
        const std::string ctx = " for A = " + matrix_to_json(a);
        const auto psi = p_curvature_matrix(c);
        if (!psi.is_zero()) out.fail("gauge-trivial connection has ψ != 0" + ctx);
        const auto h = horizontal_sections(c);
        if (h.dimension != n)
            out.fail("horizontal sections have dimension " + std::to_string(h.dimension) + " != " + std::to_string(n) + ctx);
        // Each column of G must lie in the K^p-span of the computed basis.
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<RatVector> coords;
            for (const auto& v : h.basis) coords.push_back(kp_coordinates(v));
            coords.push_back(kp_coordinates(g.col(j)));
            RatMatrix span = zero_matrix(p, coords[0].size(), coords.size());
            for (std::size_t c = 0; c < coords.size(); ++c)
                for (std::size_t r = 0; r < coords[c].size(); ++r) span(r, c) = coords[c][r];
            if (rank(span) != h.dimension) out.fail("column " + std::to_string(j) + " of G is not in the span of the sections" + ctx);
        }

        RatMatrix at = zero_matrix(p, 1, 1);
        at(0, 0) = RatFun::variable(p);
        if (horizontal_sections(MatrixConnection(at)).dimension != 0)
            out.fail("A = [t] has horizontal sections, p = " + std::to_string(p));
    }
}

SkewPoly random_skew(Rng& rng, unsigned p, int max_degree, bool monic = false)
{
    const auto d = static_cast<std::size_t>(rng.range(monic ? 1 : 0, max_degree));
    std::vector<RatFun> c;
    for (std::size_t i = 0; i < d; ++i) c.push_back(random_ratfun(rng, p, 1));
    c.push_back(monic ? RatFun::one(p) : random_nonzero_ratfun(rng, p, 1));
    return SkewPoly(p, std::move(c));
}

void ore_trial(Rng& rng, const VerifyOptions& opt, TrialOutcome& out)
{
    for (unsigned p : opt.primes) {
        const std::string tag = ", p = " + std::to_string(p);
        const auto a = random_skew(rng, p, 3);
        const auto b = random_skew(rng, p, 3);
        const auto c = random_skew(rng, p, 3);
        const auto ab = ore_mul(a, b);
        if (!(ore_mul(ab, c) == ore_mul(a, ore_mul(b, c))))
            out.fail("(ab)c != a(bc) for a = " + to_string(a) + ", b = " + to_string(b) + ", c = " + to_string(c) + tag);
        if (ab.degree() != a.degree() + b.degree())
            out.fail("deg(ab) != deg a + deg b for a = " + to_string(a) + ", b = " + to_string(b) + tag);

        const auto num = random_skew(rng, p, 4);
        const auto den = random_skew(rng, p, 2);
        const auto [q, r] = ore_right_divide(num, den);
        if (!(ore_mul(q, den) + r == num) || r.degree() >= den.degree())
            out.fail("division P = QD + R fails for P = " + to_string(num) + ", D = " + to_string(den) + tag);

        // Companion round trip from a random monic operator.
        const auto mon = random_skew(rng, p, 3, true);
        const auto from_companion = cyclic_vector(companion_connection(mon), 64, rng.next());
        if (!from_companion.found || !(from_companion.found->minimal == mon))
            out.fail("cyclic vector of the companion connection does not recover P = " + to_string(mon) + tag);

        // Cyclic vector of a random connection.
        const auto n = static_cast<std::size_t>(rng.range(1, 3));
        const MatrixConnection conn(random_matrix(rng, p, n, n, 1));
        const auto search = cyclic_vector(conn, 64, rng.next());
        if (!search.found) {
            out.fail("no cyclic vector in " + std::to_string(search.attempts) + " attempts for A = " + matrix_to_json(conn.matrix()) + tag);
        } else {
            const auto& cv = *search.found;
            out.count("cyclic vector attempts", static_cast<std::size_t>(search.attempts));
            if (!(gauge_transform(conn.matrix(), cv.basis) == companion_connection(cv.minimal).matrix()))
                out.fail("G^{-1}(AG + G') is not the companion matrix for A = " + matrix_to_json(conn.matrix()) + tag);
            // P(∇)v = 0
            RatVector acc(n, RatFun::zero(p)), cur = cv.v;
            for (std::size_t i = 0; i <= n; ++i) {
                for (std::size_t k = 0; k < n; ++k) acc[k] += cv.minimal.coeff(i) * cur[k];
                cur = conn.apply(cur);
            }
            if (!std::all_of(acc.begin(), acc.end(), [](const RatFun& x) { return x.is_zero(); }))
                out.fail("P(∇)v != 0 for A = " + matrix_to_json(conn.matrix()) + tag);
        }

        const RatFun h = random_ratfun(rng, p, 3);
        const auto op = SkewPoly::T(p) - SkewPoly::constant(h);
        const RatFun expected = p_curvature_rank1(OneForm{h}, Derivation::d_dt(p));
        if (!(ore_pcurvature(op)(0, 0) == expected))
            out.fail("ore_pcurvature(T - h) != rank-one ψ for h = " + to_string(h) + tag);
    }
}

void adjoint_trial(Rng& rng, const VerifyOptions& opt, TrialOutcome& out)
{
    for (unsigned p : opt.primes) {
        const Derivation d{random_nonzero_ratfun(rng, p, 2)};
        const auto report = adjoint_pth_check(d, 3, rng.next());
        for (const auto& f : report.failures) out.fail(f + " for d = (" + to_string(d.coeff) + ") d/dt, p = " + std::to_string(p));
    }
}

const std::vector<Suite>& suites()
{
    static const std::vector<Suite> all = {
        {"whitney", {}, whitney_trial},
        {"vanishing", {}, vanishing_trial},
        {"naturality", {}, naturality_trial},
        {"segre", {}, segre_trial},
        {"karoubi", {}, karoubi_trial},
        {"specialize", {}, specialize_trial},
        {"cartier-props", {2, 3, 5, 7}, cartier_trial},
        {"pcurv-theorem", {2, 3, 5}, pcurv_trial},
        {"operator-identity", {2, 3, 5}, operator_identity_trial},
        {"dlog", {2, 3, 5, 7}, dlog_trial},
        {"filtration", {2, 3}, filtration_trial},
        {"descent", {2, 3}, descent_trial},
        {"ore", {2, 3, 5}, ore_trial},
        {"adjoint", {2, 3, 5}, adjoint_trial},
        {"lambda-inverse", {}, lambda_inverse_trial},
        {"gamma-closed-form", {}, gamma_closed_form_trial},
    };
    return all;
}

std::vector<std::string> known_generator_names(const std::vector<std::string>& names, std::size_t count)
{
    return {names.begin(), names.begin() + static_cast<std::ptrdiff_t>(std::min(count, names.size()))};
}

} // namespace

const std::vector<std::string>& verify_suites()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : suites()) out.push_back(s.name);
        return out;
    }();
    return names;
}

bool is_verify_suite(std::string_view name)
{
    const auto& all = verify_suites();
    return std::find(all.begin(), all.end(), name) != all.end();
}

VerifyReport run_verify(std::string_view suite_name, const VerifyOptions& options)
{
    const auto& all = suites();
    const auto it = std::find_if(all.begin(), all.end(), [&](const Suite& s) { return s.name == suite_name; });
    require(it != all.end(), "unknown verification suite '" + std::string(suite_name) + "'");
    const Suite& suite = *it;

    VerifyOptions opt = options;
    if (!suite.default_primes.empty()) {
        if (opt.primes.empty()) opt.primes = suite.default_primes;
        for (unsigned p : opt.primes) check_prime(p);
    } else {
        opt.primes.clear();
    }

    std::vector<TrialOutcome> outcomes(opt.trials);
    auto run_one = [&](std::size_t i) {
        Rng rng(opt.seed + i);
        outcomes[i].index = i;
        try {
            suite.trial(rng, opt, outcomes[i]);
        } catch (const std::exception& e) {
            outcomes[i].fail(std::string("exception: ") + e.what());
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(std::max<std::size_t>(opt.trials, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < opt.trials; ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < opt.trials;) run_one(i);
            });
        for (auto& th : pool) th.join();
    }

    VerifyReport report;
    report.suite = suite.name;
    report.trials = opt.trials;
    report.seed = opt.seed;
    report.primes = opt.primes;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        for (auto& f : outcomes[i].failures) report.failures.push_back({i, std::move(f)});
        for (const auto& [k, v] : outcomes[i].tallies) report.tallies[k] += v;
    }
    return report;
}

std::string VerifyReport::to_text() const
{
    std::ostringstream out;
    out << "suite " << suite << "\ntrials " << trials << "\nseed " << seed << "\n";
    if (!primes.empty()) {
        out << "primes";
        for (unsigned p : primes) out << " " << p;
        out << "\n";
    }
    for (const auto& [k, v] : tallies) out << "tally " << k << ": " << v << "\n";
    for (const auto& f : failures) out << "FAIL trial " << f.trial << ": " << f.description << "\n";
    out << "failures " << failures.size() << "\n" << (ok() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string VerifyReport::to_json() const
{
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["trials"] = trials;
    j["seed"] = seed;
    j["primes"] = primes;
    j["tallies"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : tallies) j["tallies"][k] = v;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : failures) j["failures"].push_back({{"trial", f.trial}, {"description", f.description}});
    j["ok"] = ok();
    return j.dump();
}

// ---- generators

PresentationPtr random_presentation(Rng& rng, std::size_t max_generators, int max_rank, const std::vector<std::string>& names)
{
    const auto count = static_cast<std::size_t>(rng.range(1, static_cast<long long>(std::min(max_generators, names.size()))));
    std::vector<Generator> gens;
    for (const auto& name : known_generator_names(names, count))
        gens.push_back({name, static_cast<int>(rng.range(1, max_rank))});
    return make_presentation(std::move(gens));
}

namespace {

// Top exterior power of generator g, a rank-one symbol.
K0Element top_power(const PresentationPtr& pres, std::size_t g)
{
    const auto& gen = pres->generators()[g];
    return K0Element::symbol(pres, gen.name, gen.rank);
}

} // namespace

K0Element random_element(Rng& rng, const PresentationPtr& pres, int bound)
{
    auto coeff = [&] { return BigInt(rng.range(-bound, bound)); };
    K0Element x = K0Element::integer(pres, coeff());
    const std::size_t ng = pres->generators().size();
    for (std::size_t g = 0; g < ng; ++g) x += coeff() * K0Element::generator(pres, pres->generators()[g].name);
    if (rng.below(3) == 0) {
        const auto g = static_cast<std::size_t>(rng.below(ng));
        x += coeff() * top_power(pres, g);
    }
    if (ng >= 2 && rng.below(4) == 0) {
        const auto g = static_cast<std::size_t>(rng.below(ng));
        const auto h = static_cast<std::size_t>(rng.below(ng));
        x += coeff() * (top_power(pres, g) * top_power(pres, h));
    }
    return x;
}

K0Element random_effective(Rng& rng, const PresentationPtr& pres, int max_rank)
{
    K0Element x = K0Element::zero(pres);
    int rank = 0;
    const std::size_t ng = pres->generators().size();
    const auto pieces = rng.range(1, 4);
    for (long long k = 0; k < pieces; ++k) {
        const auto choice = rng.below(ng + 2);
        K0Element piece = choice == ng ? K0Element::unit(pres)
                        : choice == ng + 1 ? top_power(pres, static_cast<std::size_t>(rng.below(ng)))
                                           : K0Element::generator(pres, pres->generators()[choice].name);
        const int r = static_cast<int>(rank_e(piece));
        if (rank + r > max_rank) continue;
        rank += r;
        x += piece;
    }
    return x;
}

RingMorphism random_morphism(Rng& rng, const PresentationPtr& source, const PresentationPtr& target)
{
    std::vector<std::pair<std::string, K0Element>> assignment;
    const std::size_t nt = target->generators().size();
    for (const auto& gen : source->generators()) {
        K0Element image = K0Element::zero(target);
        int remaining = gen.rank;
        while (remaining > 0) {
            std::vector<K0Element> options{K0Element::unit(target)};
            for (std::size_t g = 0; g < nt; ++g) {
                options.push_back(top_power(target, g));
                if (target->generators()[g].rank <= remaining)
                    options.push_back(K0Element::generator(target, target->generators()[g].name));
            }
            const auto& pick = options[rng.below(options.size())];
            remaining -= static_cast<int>(rank_e(pick));
            image += pick;
        }
        assignment.emplace_back(gen.name, std::move(image));
    }
    return RingMorphism(source, target, std::move(assignment));
}

} // namespace charclass
