#include "charclass/text.hpp"

#include "charclass/errors.hpp"
#include "charclass/fp.hpp"

#include <json.hpp>

#include <cctype>
#include <limits>
#include <sstream>

namespace charclass {

namespace {

using Json = nlohmann::ordered_json;

// Recursive descent over
//   expr  := ['+'|'-'] term (('+'|'-') term)*
//   term  := power (('*'|'/') power)*
//   power := atom ['^' ['-'] integer]
//   atom  := integer | identifier | '[' ... ']' | '(' expr ')'
// Ops supplies the value type and its arithmetic.
template <class Ops>
class ExprParser {
public:
    using Value = typename Ops::Value;

    ExprParser(std::string_view text, Ops& ops) : s_(text), ops_(ops) {}

    Value parse()
    {
        skip();
        if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
        Value v = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return v;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value expr()
    {
        skip();
        bool negate = false;
        if (eat('-')) negate = true;
        else eat('+');
        Value v = term();
        if (negate) v = ops_.neg(v);
        for (;;) {
            if (eat('+')) v = ops_.add(v, term());
            else if (eat('-')) v = ops_.sub(v, term());
            else return v;
        }
    }

    Value term()
    {
        Value v = power();
        for (;;) {
            skip();
            const std::size_t at = pos_;
            if (eat('*')) v = ops_.mul(v, power());
            else if (eat('/')) v = ops_.div(v, power(), at);
            else return v;
        }
    }

    Value power()
    {
        Value v = atom();
        skip();
        const std::size_t at = pos_;
        if (!eat('^')) return v;
        const bool negative = eat('-');
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer exponent", pos_);
        if (pos_ - start > 6) throw ParseError("exponent too large", start);
        long long e = std::stoll(std::string(s_.substr(start, pos_ - start)));
        return ops_.pow(v, negative ? -e : e, at);
    }

    Value atom()
    {
        skip();
        if (pos_ == s_.size()) throw ParseError("unexpected end of input", pos_);
        const std::size_t start = pos_;
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        if (c == '[') {
            const auto close = s_.find(']', pos_);
            if (close == std::string_view::npos) throw ParseError("unterminated '['", start);
            pos_ = close + 1;
            return ops_.bracket(s_.substr(start + 1, close - start - 1), start);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return ops_.number(BigInt(std::string(s_.substr(start, pos_ - start))), start);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            return ops_.ident(s_.substr(start, pos_ - start), start);
        }
        throw ParseError(std::string("unexpected '") + c + "'", start);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    Ops& ops_;
};

long long mod_of(const BigInt& n, unsigned p)
{
    BigInt r = n % p;
    if (r < 0) r += p;
    return r.convert_to<long long>();
}

struct RatFunOps {
    using Value = RatFun;
    unsigned p;

    Value number(const BigInt& n, std::size_t) const { return RatFun::constant(p, mod_of(n, p)); }
    Value ident(std::string_view name, std::size_t at) const
    {
        if (name != "t") throw ParseError("unknown symbol '" + std::string(name) + "'", at);
        return RatFun::variable(p);
    }
    Value bracket(std::string_view, std::size_t at) const { throw ParseError("unexpected '['", at); }
    Value neg(const Value& a) const { return -a; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value div(const Value& a, const Value& b, std::size_t at) const
    {
        if (b.is_zero()) throw ParseError("division by zero", at);
        return a / b;
    }
    Value pow(const Value& a, long long e, std::size_t at) const
    {
        if (e < 0 && a.is_zero()) throw ParseError("negative power of zero", at);
        return a.pow(e);
    }
};

struct SkewOps {
    using Value = SkewPoly;
    unsigned p;

    Value number(const BigInt& n, std::size_t) const { return SkewPoly::constant(RatFun::constant(p, mod_of(n, p))); }
    Value ident(std::string_view name, std::size_t at) const
    {
        if (name == "t") return SkewPoly::constant(RatFun::variable(p));
        if (name == "T") return SkewPoly::T(p);
        throw ParseError("unknown symbol '" + std::string(name) + "'", at);
    }
    Value bracket(std::string_view, std::size_t at) const { throw ParseError("unexpected '['", at); }
    Value neg(const Value& a) const { return -a; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return ore_mul(a, b); }
    Value div(const Value& a, const Value& b, std::size_t at) const
    {
        if (b.degree() != 0) throw ParseError("can only divide by a nonzero function of t", at);
        return ore_mul(a, SkewPoly::constant(b.leading().inverse()));
    }
    Value pow(const Value& a, long long e, std::size_t at) const
    {
        if (e < 0) {
            if (a.degree() != 0) throw ParseError("negative powers need a nonzero function of t", at);
            return SkewPoly::constant(a.leading().pow(e));
        }
        return ore_pow(a, static_cast<unsigned>(e));
    }
};

struct ElementOps {
    using Value = K0Element;
    PresentationPtr pres;

    Value number(const BigInt& n, std::size_t) const { return K0Element::integer(pres, n); }
    Value ident(std::string_view name, std::size_t at) const
    {
        throw ParseError("symbols must be bracketed, as in [" + std::string(name) + "]", at);
    }
    Value bracket(std::string_view content, std::size_t at) const
    {
        std::string name(content);
        const auto first = name.find_first_not_of(' ');
        const auto last = name.find_last_not_of(' ');
        if (first == std::string::npos) throw ParseError("empty symbol", at);
        name = name.substr(first, last - first + 1);
        if (name == "1") return K0Element::unit(pres);
        const auto idx = pres->find_symbol(name);
        if (!idx) throw ParseError("unknown symbol [" + name + "]", at);
        return K0Element(pres, IntPoly::variable(pres->symbol_count(), *idx));
    }
    Value neg(const Value& a) const { return -a; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value div(const Value&, const Value&, std::size_t at) const { throw ParseError("division is not defined here", at); }
    Value pow(const Value& a, long long e, std::size_t at) const
    {
        if (e < 0) throw ParseError("negative exponent", at);
        return a.pow(static_cast<unsigned>(e));
    }
};

template <class Ops>
typename Ops::Value run(std::string_view text, Ops ops)
{
    return ExprParser<Ops>(text, ops).parse();
}

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
}

// Symbols of a monomial, with repetition, in alphabet order.
std::vector<std::pair<std::string, unsigned>> monomial_symbols(const RingPresentation& pres, const Monomial& m)
{
    std::vector<std::pair<std::string, unsigned>> out;
    for (std::size_t i = 0; i < m.exps.size(); ++i)
        if (m.exps[i] != 0) out.emplace_back(pres.symbols()[i].name, m.exps[i]);
    return out;
}

} // namespace

RatFun parse_ratfun(std::string_view text, unsigned p)
{
    check_prime(p);
    return run(text, RatFunOps{p});
}

OneForm parse_form(std::string_view text, unsigned p)
{
    std::string_view body = text;
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
    if (body.size() < 2 || body.substr(body.size() - 2) != "dt")
        throw ParseError("a 1-form must end in 'dt'", body.size());
    body.remove_suffix(2);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
    if (!body.empty() && body.back() == '*') body.remove_suffix(1);
    return {parse_ratfun(body, p)};
}

std::string to_string(const OneForm& w)
{
    if (w.h.is_zero()) return "0 dt";
    std::string h = to_string(w.h);
    const bool wrap = h.find_first_of(" /") != std::string::npos;
    return (wrap ? "(" + h + ")" : h) + " dt";
}

K0Element parse_element(std::string_view text, const PresentationPtr& pres)
{
    return run(text, ElementOps{pres});
}

std::string to_string(const K0Element& x)
{
    if (x.is_zero()) return "0";
    const auto& pres = *x.presentation();
    std::string out;
    for (const auto& term : x.poly().terms()) {
        BigInt c = term.coeff;
        const bool negative = c < 0;
        if (negative) c = -c;
        out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
        const auto syms = monomial_symbols(pres, term.monomial);
        if (syms.empty()) {
            out += to_string(c);
            continue;
        }
        std::string mono;
        for (const auto& [name, e] : syms) {
            if (!mono.empty()) mono += "*";
            mono += "[" + name + "]";
            if (e > 1) mono += "^" + std::to_string(e);
        }
        out += c == 1 ? mono : to_string(c) + "*" + mono;
    }
    return out;
}

std::string to_latex(const K0Element& x)
{
    if (x.is_zero()) return "0";
    const auto& pres = *x.presentation();
    std::string out;
    for (const auto& term : x.poly().terms()) {
        BigInt c = term.coeff;
        const bool negative = c < 0;
        if (negative) c = -c;
        out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
        std::string mono;
        for (std::size_t i = 0; i < term.monomial.exps.size(); ++i) {
            const unsigned e = term.monomial.exps[i];
            if (e == 0) continue;
            const auto& sym = pres.symbols()[i];
            const auto& g = pres.generators()[sym.generator].name;
            std::string s = sym.degree == 1 ? "[" + g + "]" : "[\\lambda^{" + std::to_string(sym.degree) + "} " + g + "]";
            if (e > 1) s += "^{" + std::to_string(e) + "}";
            mono += s;
        }
        if (mono.empty()) mono = "[\\mathbf{1}]";
        out += c == 1 ? mono : to_string(c) + mono;
    }
    return out;
}

std::string to_json(const K0Element& x, long long degree)
{
    Json cls = Json::array();
    for (const auto& term : x.poly().terms()) {
        Json mono = Json::array();
        for (const auto& [name, e] : monomial_symbols(*x.presentation(), term.monomial))
            for (unsigned k = 0; k < e; ++k) mono.push_back(name);
        Json entry;
        if (term.coeff >= std::numeric_limits<long long>::min() && term.coeff <= std::numeric_limits<long long>::max())
            entry["coeff"] = term.coeff.convert_to<long long>();
        else
            entry["coeff"] = to_string(term.coeff);
        entry["monomial"] = std::move(mono);
        cls.push_back(std::move(entry));
    }
    Json out;
    out["degree"] = degree;
    out["class"] = std::move(cls);
    return out.dump();
}

SkewPoly parse_skewpoly(std::string_view text, unsigned p)
{
    check_prime(p);
    return run(text, SkewOps{p});
}

RatMatrix parse_matrix(std::string_view text, std::optional<unsigned> p)
{
    const Json doc = parse_json(text);
    const Json* rows = &doc;
    if (doc.is_object()) {
        if (doc.contains("p")) {
            if (!doc["p"].is_number_unsigned()) throw ParseError("\"p\" must be a positive integer", 0);
            const auto q = doc["p"].get<unsigned>();
            if (p && *p != q) throw PreconditionError("matrix characteristic disagrees with --p");
            p = q;
        }
        if (!doc.contains("matrix")) throw ParseError("missing \"matrix\"", 0);
        rows = &doc["matrix"];
    }
    if (!p) throw ParseError("matrix needs a characteristic (\"p\" field or --p)", 0);
    check_prime(*p);
    if (!rows->is_array() || rows->empty()) throw ParseError("matrix must be a nonempty array of rows", 0);
    const std::size_t n = rows->size();
    const std::size_t m = (*rows)[0].is_array() ? (*rows)[0].size() : 0;
    if (m == 0) throw ParseError("matrix rows must be nonempty arrays", 0);
    RatMatrix out = zero_matrix(*p, n, m);
    for (std::size_t i = 0; i < n; ++i) {
        const Json& row = (*rows)[i];
        if (!row.is_array() || row.size() != m) throw ParseError("row " + std::to_string(i) + " has the wrong length", 0);
        for (std::size_t j = 0; j < m; ++j) {
            const Json& cell = row[j];
            if (cell.is_string()) {
                try {
                    out(i, j) = parse_ratfun(cell.get<std::string>(), *p);
                } catch (const ParseError& e) {
                    throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + e.what(),
                                     e.position());
                }
            } else if (cell.is_number_integer()) {
                out(i, j) = RatFun::constant(*p, mod_of(BigInt(cell.get<long long>()), *p));
            } else {
                throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not a string", 0);
            }
        }
    }
    return out;
}

std::string matrix_to_json(const RatMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    Json out;
    out["p"] = m.zero().prime();
    out["matrix"] = std::move(rows);
    return out.dump();
}

std::string matrix_to_text(const RatMatrix& m)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << to_string(m(i, j));
        out << "]\n";
    }
    return out.str();
}

PresentationPtr parse_presentation(std::string_view text)
{
    const Json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("generators") || !doc["generators"].is_array())
        throw ParseError("expected {\"generators\": [...]}", 0);
    std::vector<Generator> gens;
    for (const auto& g : doc["generators"]) {
        if (!g.is_object() || !g.contains("name") || !g["name"].is_string())
            throw ParseError("each generator needs a string \"name\"", 0);
        int rank = 1;
        if (g.contains("rank")) {
            if (!g["rank"].is_number_integer()) throw ParseError("\"rank\" must be an integer", 0);
            rank = g["rank"].get<int>();
        }
        gens.push_back({g["name"].get<std::string>(), rank});
    }
    return make_presentation(std::move(gens));
}

std::string presentation_to_json(const RingPresentation& pres)
{
    Json gens = Json::array();
    for (const auto& g : pres.generators()) {
        Json entry;
        entry["name"] = g.name;
        entry["rank"] = g.rank;
        gens.push_back(std::move(entry));
    }
    Json out;
    out["generators"] = std::move(gens);
    return out.dump();
}

} // namespace charclass
