#include "gkmod/expr_parse.hpp"

#include <cctype>
#include <stdexcept>

namespace gkmod {
namespace {

struct Parser {
    const std::string& src;
    size_t pos = 0;
    int n;

    explicit Parser(const std::string& s, int ambient_dim) : src(s), n(ambient_dim) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos) + " in '" + src +
                                    "': " + what);
    }

    long parse_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return std::stol(src.substr(start, pos - start));
    }

    Polynomial parse_expr() {
        Polynomial acc = eat('-') ? -parse_term() : parse_term();
        while (true) {
            if (eat('+'))
                acc += parse_term();
            else if (eat('-'))
                acc -= parse_term();
            else
                return acc;
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_power();
        while (true) {
            if (eat('*')) {
                acc = acc * parse_power();
            } else if (eat('/')) {
                Polynomial d = parse_power();
                if (d.degree() > 0) fail("division only by constants");
                GaussianRational c = d.coeff(Monomial(n, 0));
                if (c.is_zero()) fail("division by zero");
                acc = acc.scaled(c.inverse());
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_power() {
        Polynomial base = parse_atom();
        if (eat('^')) {
            long e = parse_integer();
            if (e < 0) fail("negative exponent");
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    Polynomial parse_atom() {
        skip_ws();
        if (pos >= src.size()) fail("unexpected end of input");
        char c = src[pos];
        if (c == '(') {
            ++pos;
            Polynomial inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') {
            ++pos;
            return -parse_atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = parse_integer();
            return Polynomial::constant(n, GaussianRational(make_rational(v)));
        }
        if (c == 'i') {
            ++pos;
            return Polynomial::constant(n, GaussianRational::i());
        }
        if (c == 'm') {
            ++pos;
            long idx = parse_integer();
            if (idx < 1 || idx > n) fail("variable m" + std::to_string(idx) + " out of range (n=" +
                                         std::to_string(n) + ")");
            return Polynomial::variable(n, static_cast<int>(idx - 1));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& src, int ambient_dim) {
    Parser p(src, ambient_dim);
    Polynomial out = p.parse_expr();
    p.skip_ws();
    if (p.pos != src.size()) p.fail("trailing input");
    return out;
}

GaussianRational gaussian_from_string(const std::string& s) {
    Polynomial p = parse_polynomial(s, 0);
    return p.coeff(Monomial{});
}

}  // namespace gkmod
