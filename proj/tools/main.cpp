// charclass: command-line front end.
//
// Exit codes: 0 ok, 1 parse or usage error, 2 precondition violation,
// 3 verification failure.

#include "charclass/chern.hpp"
#include "charclass/connections.hpp"
#include "charclass/errors.hpp"
#include "charclass/ore.hpp"
#include "charclass/text.hpp"
#include "charclass/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace charclass;

namespace {

enum Exit { kOk = 0, kUsage = 1, kPrecondition = 2, kVerification = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& arg)
{
    // Inline JSON is accepted wherever a file is expected.
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot read '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Options {
    unsigned p = 0;
    std::string ring;
    std::string format = "text";
    std::string matrix;
    std::optional<std::size_t> degree;
    std::optional<std::size_t> max_degree;
    std::string derivation = "1";
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::vector<unsigned> primes;
    bool signed_variant = false;
    unsigned jobs = 1;
    std::size_t sub_dim = 0;
    int attempts = 64;
    std::string arg1, arg2, arg3;
    std::vector<std::string> args;
};

unsigned need_p(const Options& o)
{
    if (o.p == 0) throw UsageError("--p is required");
    return o.p;
}

PresentationPtr need_ring(const Options& o)
{
    if (o.ring.empty()) throw UsageError("--ring is required");
    return parse_presentation(read_source(o.ring));
}

RatMatrix need_matrix(const Options& o)
{
    if (o.matrix.empty()) throw UsageError("--matrix is required");
    return parse_matrix(read_source(o.matrix), o.p ? std::optional<unsigned>(o.p) : std::nullopt);
}

const std::string& arg(const Options& o, std::size_t i, const char* what)
{
    if (i >= o.args.size()) throw UsageError(std::string("missing argument: ") + what);
    return o.args[i];
}

void print_element(const Options& o, const K0Element& x, long long degree, const std::string& label)
{
    if (o.format == "json") std::cout << to_json(x, degree) << "\n";
    else if (o.format == "latex") std::cout << to_latex(x) << "\n";
    else std::cout << label << " = " << to_string(x) << "\n";
}

void print_matrix(const Options& o, const RatMatrix& m)
{
    if (o.format == "json") std::cout << matrix_to_json(m) << "\n";
    else std::cout << matrix_to_text(m);
}

// chern / segre / gamma share the shape "class of degree l, or all up to N".
int class_command(const Options& o, const std::string& which)
{
    const auto pres = need_ring(o);
    const auto x = parse_element(arg(o, 0, "element"), pres);
    const std::size_t order = o.degree ? *o.degree : (o.max_degree ? *o.max_degree : default_order(x));
    TruncSeries<K0Element> s = which == "c" ? chern_series(x, order)
                             : which == "s" ? segre_series(x, order)
                                            : gamma_series(x, order);
    const std::string name = which == "g" ? "gamma^" : which + "_";
    if (o.degree) {
        print_element(o, s[*o.degree], static_cast<long long>(*o.degree), name + std::to_string(*o.degree));
    } else {
        for (std::size_t l = 0; l <= order; ++l) print_element(o, s[l], static_cast<long long>(l), name + std::to_string(l));
    }
    return kOk;
}

int total_command(const Options& o)
{
    const auto pres = need_ring(o);
    const auto x = parse_element(arg(o, 0, "element"), pres);
    const auto c = total_class(x, o.max_degree);
    const long long top = o.max_degree ? static_cast<long long>(*o.max_degree) : static_cast<long long>(rank_e(x));
    print_element(o, c, top, "c");
    return kOk;
}

Derivation derivation_of(const Options& o, unsigned p) { return Derivation{parse_ratfun(o.derivation, p)}; }

int cartier_command(const Options& o)
{
    const unsigned p = need_p(o);
    const auto w = parse_form(arg(o, 0, "form"), p);
    const auto c = cartier_op(w, derivation_of(o, p));
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["p"] = p;
        j["form"] = to_string(w);
        j["cartier"] = to_string(c);
        if (auto base = c.in_base()) j["in_K"] = to_string(*base);
        std::cout << j.dump() << "\n";
    } else {
        if (auto base = c.in_base()) std::cout << "C(" << to_string(w) << ") = " << to_string(*base) << "\n";
        else std::cout << "C(" << to_string(w) << ") = " << to_string(c) << "   (s = t^(1/" << p << "))\n";
    }
    return kOk;
}

int pcurv_command(const Options& o)
{
    if (!o.matrix.empty()) {
        print_matrix(o, p_curvature_matrix(MatrixConnection(need_matrix(o))));
        return kOk;
    }
    const unsigned p = need_p(o);
    const auto w = parse_form(arg(o, 0, "form"), p);
    const auto psi = p_curvature_rank1(w, derivation_of(o, p));
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["p"] = p;
        j["form"] = to_string(w);
        j["psi"] = to_string(psi);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "psi = " << to_string(psi) << "\n";
    }
    return kOk;
}

int dlog_command(const Options& o)
{
    const unsigned p = need_p(o);
    const auto w = parse_form(arg(o, 0, "form"), p);
    const auto x = is_logarithmic(w);
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["p"] = p;
        j["form"] = to_string(w);
        j["logarithmic"] = x.has_value();
        j["witness"] = x ? nlohmann::ordered_json(to_string(*x)) : nlohmann::ordered_json(nullptr);
        std::cout << j.dump() << "\n";
    } else if (x) {
        std::cout << to_string(w) << " = dx/x with x = " << to_string(*x) << "\n";
    } else {
        std::cout << to_string(w) << " is not a logarithmic derivative\n";
    }
    return kOk;
}

int descend_command(const Options& o)
{
    const MatrixConnection c(need_matrix(o));
    const auto psi = p_curvature_matrix(c);
    const auto h = horizontal_sections(c);
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["p"] = c.prime();
        j["dim"] = c.dim();
        j["p_flat"] = psi.is_zero();
        j["horizontal_dimension"] = h.dimension;
        auto basis = nlohmann::ordered_json::array();
        for (const auto& v : h.basis) {
            auto col = nlohmann::ordered_json::array();
            for (const auto& x : v) col.push_back(to_string(x));
            basis.push_back(std::move(col));
        }
        j["basis"] = std::move(basis);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "p-flat: " << (psi.is_zero() ? "yes" : "no") << "\n";
        std::cout << "horizontal sections: dimension " << h.dimension << " of " << c.dim() << " over K^p\n";
        for (const auto& v : h.basis) {
            std::cout << "  (";
            for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? ", " : "") << to_string(v[i]);
            std::cout << ")\n";
        }
    }
    return kOk;
}

int filtration_command(const Options& o)
{
    const auto m = need_matrix(o);
    require(m.is_square(), "connection matrix must be square");
    const std::size_t n = m.rows(), a = o.sub_dim;
    if (a == 0 || a >= n) throw UsageError("--sub-dim must lie strictly between 0 and the dimension");
    for (std::size_t i = a; i < n; ++i)
        for (std::size_t j = 0; j < a; ++j)
            require(m(i, j).is_zero(), "matrix is not block upper triangular for --sub-dim " + std::to_string(a));
    const ExactTriple triple(block(m, 0, 0, a, a), block(m, 0, a, a, n - a), block(m, a, a, n - a, n - a));
    std::vector<std::size_t> degrees;
    if (o.degree) degrees.push_back(*o.degree);
    else
        for (std::size_t l = 2; l <= n; ++l) degrees.push_back(l);
    bool ok = true;
    for (auto l : degrees) {
        const auto report = filtration_check(triple, l);
        ok = ok && report.ok();
        if (o.format == "json") {
            nlohmann::ordered_json j;
            j["degree"] = l;
            auto steps = nlohmann::ordered_json::array();
            for (const auto& s : report.steps)
                steps.push_back({{"index", s.index}, {"quotient_dim", s.quotient_dim}, {"stable", s.stable},
                                 {"quotient_matches", s.quotient_matches}});
            j["steps"] = std::move(steps);
            j["ok"] = report.ok();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "l = " << l << ": " << (report.ok() ? "ok" : "FAILED") << "\n";
            for (const auto& s : report.steps)
                std::cout << "  F_" << s.index << "/F_" << s.index + 1 << " dim " << s.quotient_dim
                          << (s.stable ? " stable" : " NOT stable") << (s.quotient_matches ? " matches" : " MISMATCH") << "\n";
            for (const auto& f : report.failures) std::cerr << f << "\n";
        }
    }
    return ok ? kOk : kVerification;
}

int conn_chern_command(const Options& o)
{
    const MatrixConnection c(need_matrix(o));
    ConnectionRegistry registry(c.prime());
    const auto x = registry.class_of(c);
    const std::size_t order = o.degree ? *o.degree : default_order(x);
    std::vector<std::size_t> degrees;
    if (o.degree) degrees.push_back(*o.degree);
    else
        for (std::size_t l = 0; l <= order; ++l) degrees.push_back(l);
    for (auto l : degrees) {
        const auto cl = registry.lift(conn_chern(registry, c, l));
        print_element(o, cl, static_cast<long long>(l), "c_" + std::to_string(l));
    }
    if (o.format == "text") std::cerr << "class [" << to_string(x) << "] in " << presentation_to_json(*registry.presentation()) << "\n";
    return kOk;
}

int ore_command(const Options& o, const std::string& op)
{
    if (op == "cyclic") {
        const MatrixConnection c(need_matrix(o));
        const auto search = cyclic_vector(c, o.attempts, o.seed);
        if (!search.found) {
            std::cout << "no cyclic vector found in " << search.attempts << " attempts\n";
            return kVerification;
        }
        const auto& cv = *search.found;
        if (o.format == "json") {
            nlohmann::ordered_json j;
            auto v = nlohmann::ordered_json::array();
            for (const auto& x : cv.v) v.push_back(to_string(x));
            j["v"] = std::move(v);
            j["P"] = to_string(cv.minimal);
            j["attempts"] = search.attempts;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "v = (";
            for (std::size_t i = 0; i < cv.v.size(); ++i) std::cout << (i ? ", " : "") << to_string(cv.v[i]);
            std::cout << ")\nP = " << to_string(cv.minimal) << "\nattempts = " << search.attempts << "\n";
        }
        return kOk;
    }
    const unsigned p = need_p(o);
    const auto a = parse_skewpoly(arg(o, 0, "skew polynomial"), p);
    if (op == "mul") {
        const auto b = parse_skewpoly(arg(o, 1, "second skew polynomial"), p);
        std::cout << to_string(ore_mul(a, b)) << "\n";
    } else if (op == "div") {
        const auto d = parse_skewpoly(arg(o, 1, "divisor"), p);
        const auto [q, r] = ore_right_divide(a, d);
        if (o.format == "json") {
            nlohmann::ordered_json j;
            j["quotient"] = to_string(q);
            j["remainder"] = to_string(r);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "Q = " << to_string(q) << "\nR = " << to_string(r) << "\n";
        }
    } else if (op == "pcurv") {
        print_matrix(o, ore_pcurvature(a));
    }
    return kOk;
}

int verify_command(const Options& o)
{
    const auto& suite = arg(o, 0, "suite");
    if (!is_verify_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
    VerifyOptions v;
    v.trials = o.trials;
    v.seed = o.seed;
    v.primes = o.primes;
    if (o.p) v.primes.push_back(o.p);
    v.signed_variant = o.signed_variant;
    v.jobs = o.jobs;
    const auto report = run_verify(suite, v);
    std::cout << (o.format == "json" ? report.to_json() + "\n" : report.to_text());
    return report.ok() ? kOk : kVerification;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chern classes in presented λ-rings and connections in characteristic p"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
        // Separate string positionals: CLI11 would expand "[E]" in a vector option.
        sub->add_option("arg1", o.arg1, "first positional argument");
        sub->add_option("arg2", o.arg2, "second positional argument");
        sub->add_option("arg3", o.arg3, "third positional argument");
    };
    auto add_ring = [&](CLI::App* sub) {
        sub->add_option("--ring", o.ring, "presentation JSON file (or inline JSON)");
        sub->add_option("--degree", o.degree, "single degree l");
        sub->add_option("--max-degree", o.max_degree, "truncation degree");
    };
    auto add_p = [&](CLI::App* sub) { sub->add_option("--p", o.p, "characteristic"); };
    auto add_matrix = [&](CLI::App* sub) {
        sub->add_option("--matrix", o.matrix, "connection matrix JSON file (or inline JSON)");
    };
    auto add_der = [&](CLI::App* sub) {
        sub->add_option("--derivation", o.derivation, "coefficient f of the derivation f d/dt (default 1)");
    };

    std::string command;
    auto define = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->callback([&command, name] { command = name; });
        add_common(sub);
        return sub;
    };

    add_ring(define("chern", "virtual Chern classes c_l(x)"));
    add_ring(define("segre", "virtual Segre classes s_l(x)"));
    add_ring(define("gamma", "γ-operations γ^l(x)"));
    add_ring(define("total", "total Chern class of an element"));
    {
        auto* s = define("cartier", "Cartier operator of a 1-form");
        add_p(s);
        add_der(s);
    }
    {
        auto* s = define("pcurv", "p-curvature of a 1-form or a matrix connection");
        add_p(s);
        add_der(s);
        add_matrix(s);
    }
    add_p(define("dlog", "logarithmic derivative test"));
    {
        auto* s = define("descend", "horizontal sections over K^p");
        add_p(s);
        add_matrix(s);
    }
    {
        auto* s = define("filtration-check", "exterior power filtration of an extension");
        add_p(s);
        add_matrix(s);
        s->add_option("--sub-dim", o.sub_dim, "dimension of the sub-connection")->required();
        s->add_option("--degree", o.degree, "exterior degree l (default: all 2..n)");
    }
    {
        auto* s = define("conn-chern", "Chern classes of a connection");
        add_p(s);
        add_matrix(s);
        s->add_option("--degree", o.degree, "single degree l");
    }
    {
        auto* s = define("ore", "skew polynomial arithmetic: mul, div, pcurv, cyclic");
        add_p(s);
        add_matrix(s);
        s->add_option("--attempts", o.attempts, "cyclic vector attempt bound");
        s->add_option("--seed", o.seed, "seed for the cyclic vector search");
    }
    {
        auto* s = define("verify", "run a property suite");
        s->add_option("--trials", o.trials, "number of trials");
        s->add_option("--seed", o.seed, "base seed");
        s->add_option("--p", o.primes, "prime(s) to use instead of the suite default")->delimiter(',');
        s->add_flag("--signed", o.signed_variant, "pcurv-theorem: treat the (-1)^p form as the claim");
        s->add_option("--jobs", o.jobs, "worker threads");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    for (auto* a : {&o.arg1, &o.arg2, &o.arg3})
        if (!a->empty()) o.args.push_back(*a);

    try {
        if (command == "chern") return class_command(o, "c");
        if (command == "segre") return class_command(o, "s");
        if (command == "gamma") return class_command(o, "g");
        if (command == "total") return total_command(o);
        if (command == "cartier") return cartier_command(o);
        if (command == "pcurv") return pcurv_command(o);
        if (command == "dlog") return dlog_command(o);
        if (command == "descend") return descend_command(o);
        if (command == "filtration-check") return filtration_command(o);
        if (command == "conn-chern") return conn_chern_command(o);
        if (command == "verify") return verify_command(o);
        if (command == "ore") {
            const std::string op = arg(o, 0, "ore operation (mul, div, pcurv, cyclic)");
            if (op != "mul" && op != "div" && op != "pcurv" && op != "cyclic") throw UsageError("unknown ore operation '" + op + "'");
            o.args.erase(o.args.begin());
            return ore_command(o, op);
        }
        throw UsageError("no command");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kPrecondition;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kVerification;
    }
}
