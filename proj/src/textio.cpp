#include "ffeq/textio.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ffeq {

namespace {

// Recursive-descent parser over a small env:
//   expr := term (('+'|'-') term)*
//   term := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom := ident | uint | '(' expr ')'
template <class Env>
class Parser {
public:
    using V = typename Env::V;
    Parser(std::string_view s, Env& env) : s_(s), env_(env) {}

    V parse() {
        V v = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + why);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    uint64_t number() {
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected number");
        uint64_t n = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            n = n * 10 + (s_[pos_] - '0');
            if (n > (1ull << 40)) fail("number too large");
            ++pos_;
        }
        return n;
    }
    V expr() {
        V v = term();
        while (true) {
            if (eat('+'))
                v = env_.add(v, term());
            else if (eat('-'))
                v = env_.sub(v, term());
            else
                return v;
        }
    }
    V term() {
        V v = factor();
        while (eat('*')) v = env_.mul(v, factor());
        return v;
    }
    V factor() {
        V v = atom();
        if (eat('^')) {
            uint64_t e = number();
            if (e > 4096) fail("exponent too large");
            V acc = env_.lit(1);
            for (uint64_t i = 0; i < e; ++i) acc = env_.mul(acc, v);
            v = acc;
        }
        return v;
    }
    V atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            V v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return env_.lit(number());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return env_.sym(std::string(s_.substr(start, pos_ - start)));
        }
        fail("unexpected character");
    }

    std::string_view s_;
    size_t pos_ = 0;
    Env& env_;
};

// X-polynomials with Poly coefficients; plain polynomials are the X-degree-0
// case of the same evaluation.
struct XPolyEnv {
    using V = std::vector<Poly>;  // index = X power
    FqFieldPtr field;
    std::string var;
    bool allow_x;

    V lit(uint64_t n) { return {Poly::constant(field->from_int(static_cast<long long>(n)))}; }
    V sym(const std::string& name) {
        if (name == var) return {Poly::x(field)};
        if (allow_x && name == "X") return {Poly::zero(field), Poly::one(field)};
        if (name == "z") {
            if (field->degree() < 2)
                throw std::invalid_argument("symbol z requires a field containing F_4");
            return {Poly::constant(field->gen())};
        }
        throw std::invalid_argument("unknown symbol: " + name);
    }
    static V trim(V v) {
        while (v.size() > 1 && v.back().is_zero()) v.pop_back();
        return v;
    }
    V add(const V& a, const V& b) {
        V out(std::max(a.size(), b.size()), Poly::zero(field));
        for (size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
        for (size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
        return trim(std::move(out));
    }
    V sub(const V& a, const V& b) {
        V out(std::max(a.size(), b.size()), Poly::zero(field));
        for (size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
        for (size_t i = 0; i < b.size(); ++i) out[i] = out[i] - b[i];
        return trim(std::move(out));
    }
    V mul(const V& a, const V& b) {
        V out(a.size() + b.size() - 1, Poly::zero(field));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
        return trim(std::move(out));
    }
};

struct TowerEnv {
    using V = TowerElement;
    TowerSpecPtr spec;

    V lit(uint64_t n) {
        return n % 2 ? TowerElement::one(spec) : TowerElement::zero(spec);
    }
    V sym(const std::string& name) {
        if (name == "T") return TowerElement::rational(spec, F2Poly::t());
        int i = spec->index_of(name);
        if (i >= 0) return TowerElement::generator(spec, i);
        if (auto d = spec->derived(name)) return *d;
        throw std::invalid_argument("unknown symbol: " + name);
    }
    V add(const V& a, const V& b) { return a + b; }
    V sub(const V& a, const V& b) { return a + b; }
    V mul(const V& a, const V& b) { return a * b; }
};

std::string format_coeff(const FqElement& c) {
    if (c.is_scalar()) return std::to_string(c.scalar_value());
    // Characteristic-2 degree-2 coefficients print via z.
    const auto& v = c.coords();
    if (v.size() == 2) {
        std::string s;
        if (v[1]) s = "z";
        if (v[0]) s = s.empty() ? "1" : s + "+1";
        return s.find('+') != std::string::npos ? "(" + s + ")" : s;
    }
    return c.str();
}

}  // namespace

Poly parse_poly(const FqFieldPtr& field, std::string_view text, const std::string& var) {
    XPolyEnv env{field, var, false};
    auto v = Parser<XPolyEnv>(text, env).parse();
    return v[0];
}

std::string format_poly(const Poly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::string s;
    for (int i = f.degree(); i >= 0; --i) {
        const FqElement c = f.coeff(i);
        if (c.is_zero()) continue;
        if (!s.empty()) s += "+";
        std::string cs = format_coeff(c);
        if (i == 0) {
            s += cs;
            continue;
        }
        std::string xs = i == 1 ? var : var + "^" + std::to_string(i);
        if (c.is_one())
            s += xs;
        else
            s += cs + "*" + xs;
    }
    return s;
}

TowerElement parse_tower_element(const TowerSpecPtr& spec, std::string_view text) {
    TowerEnv env{spec};
    return Parser<TowerEnv>(text, env).parse();
}

TowerSpecPtr parse_tower_spec(std::string_view text) {
    auto spec = TowerSpec::empty();
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw != "gen")
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'gen'");
        std::string name, eq;
        if (!(ls >> name >> eq) || eq != "=")
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'gen <name> = <expr>'");
        std::string rest;
        std::getline(ls, rest);
        spec = TowerSpec::extend(spec, name, parse_tower_element(spec, rest));
    }
    if (spec->count() == 0) throw std::invalid_argument("empty tower spec");
    return spec;
}

std::vector<Poly> parse_xpoly_coeffs(const FqFieldPtr& field, std::string_view text) {
    XPolyEnv env{field, "T", true};
    auto v = Parser<XPolyEnv>(text, env).parse();
    return v;
}

std::string format_xpoly(const std::vector<Poly>& coeffs, const std::string& var) {
    std::string s;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        const Poly& c = coeffs[i];
        if (c.is_zero()) continue;
        if (!s.empty()) s += "+";
        std::string xs = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        std::string cs = format_poly(c);
        if (xs.empty()) {
            s += cs.find('+') != std::string::npos ? "(" + cs + ")" : cs;
            continue;
        }
        if (c.degree() == 0 && c.coeff(0).is_one()) {
            s += xs;
            continue;
        }
        bool wrap = cs.find('+') != std::string::npos;
        s += (wrap ? "(" + cs + ")" : cs) + "*" + xs;
    }
    return s.empty() ? "0" : s;
}

}  // namespace ffeq
