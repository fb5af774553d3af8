#include "gtype/serialize.hpp"

#include <cctype>
#include <stdexcept>

namespace gtype {

namespace {

struct ExprParser {
    std::string_view s;
    size_t pos = 0;
    char var;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
    }

    RationalFunction parse_expr() {
        RationalFunction acc = parse_term();
        while (true) {
            if (eat('+')) acc = acc + parse_term();
            else if (eat('-')) acc = acc - parse_term();
            else return acc;
        }
    }
    RationalFunction parse_term() {
        RationalFunction acc = parse_factor();
        while (true) {
            if (eat('*')) acc = acc * parse_factor();
            else if (eat('/')) acc = acc / parse_factor();
            else return acc;
        }
    }
    RationalFunction parse_factor() {
        RationalFunction base = parse_base();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            bool neg = eat('-');
            long long e = parse_uint();
            return base.pow(neg ? -e : e);
        }
        return base;
    }
    long long parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
        long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > (1LL << 62)) fail("exponent too large");
            ++pos;
        }
        return v;
    }
    RationalFunction parse_base() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (eat('(')) {
            RationalFunction inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (eat('-')) return -parse_factor();
        char c = s[pos];
        if (c == var) { ++pos; return RationalFunction::t(); }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return RationalFunction(Rational(BigInt::from_string(s.substr(start, pos - start))));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

RationalFunction parse_ratfunc(std::string_view expr, char var) {
    ExprParser p{expr, 0, var};
    RationalFunction r = p.parse_expr();
    p.skip_ws();
    if (p.pos != expr.size()) p.fail("trailing input");
    return r;
}

Poly parse_poly(std::string_view expr, char var) {
    RationalFunction f = parse_ratfunc(expr, var);
    if (!f.is_polynomial()) throw std::invalid_argument("parse_poly: expression is not a polynomial");
    Rational inv = f.den()[0].inverse();
    return inv * f.num();
}

std::string poly_to_text(const Poly& p, char var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        const Rational& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
        else if (c.sign() < 0) out += "-";
        Rational a = c.sign() < 0 ? -c : c;
        if (i == 0) {
            out += a.str();
        } else {
            if (!a.is_one()) { out += a.str(); out += "*"; }
            out += var;
            if (i > 1) { out += "^"; out += std::to_string(i); }
        }
    }
    return out;
}

Poly poly_from_text(std::string_view s, char var) { return parse_poly(s, var); }

nlohmann::ordered_json poly_to_json(const Poly& p) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Rational& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

Poly poly_from_json(const nlohmann::json& j) {
    std::vector<Rational> coeffs;
    for (const auto& e : j) coeffs.push_back(Rational::from_string(e.get<std::string>()));
    return Poly(std::move(coeffs));
}

nlohmann::ordered_json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const nlohmann::json& j) {
    return Rational::from_string(j.get<std::string>());
}

nlohmann::ordered_json ratfunc_to_json(const RationalFunction& f) {
    nlohmann::ordered_json j;
    j["num"] = poly_to_json(f.num());
    j["den"] = poly_to_json(f.den());
    return j;
}

} // namespace gtype
