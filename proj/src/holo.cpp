#include "eds/holo.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

namespace eds::holo {

namespace {

HoloPtr make(Node::Kind k, HoloPtr a = nullptr, HoloPtr b = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

}  // namespace

HoloPtr constant(const Rational& c) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::constant;
    n->value = c;
    return n;
}

HoloPtr variable() { return make(Node::Kind::var); }
HoloPtr add(HoloPtr a, HoloPtr b) { return make(Node::Kind::add, std::move(a), std::move(b)); }
HoloPtr sub(HoloPtr a, HoloPtr b) { return make(Node::Kind::sub, std::move(a), std::move(b)); }
HoloPtr mul(HoloPtr a, HoloPtr b) { return make(Node::Kind::mul, std::move(a), std::move(b)); }
HoloPtr div(HoloPtr a, HoloPtr b) { return make(Node::Kind::div, std::move(a), std::move(b)); }

HoloPtr pow(HoloPtr a, long k) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::pow;
    n->a = std::move(a);
    n->exponent = k;
    return n;
}

HoloPtr exp(HoloPtr a) { return make(Node::Kind::exp, std::move(a)); }
HoloPtr neg(HoloPtr a) { return make(Node::Kind::neg, std::move(a)); }

std::complex<double> eval(const HoloPtr& e, std::complex<double> z) {
    switch (e->kind) {
        case Node::Kind::constant: return {to_double(e->value), 0.0};
        case Node::Kind::var: return z;
        case Node::Kind::add: return eval(e->a, z) + eval(e->b, z);
        case Node::Kind::sub: return eval(e->a, z) - eval(e->b, z);
        case Node::Kind::mul: return eval(e->a, z) * eval(e->b, z);
        case Node::Kind::div: return eval(e->a, z) / eval(e->b, z);
        case Node::Kind::pow: {
            std::complex<double> base = eval(e->a, z);
            return std::pow(base, static_cast<double>(e->exponent));
        }
        case Node::Kind::exp: return std::exp(eval(e->a, z));
        case Node::Kind::neg: return -eval(e->a, z);
    }
    return {};
}

HoloPtr derivative(const HoloPtr& e) {
    switch (e->kind) {
        case Node::Kind::constant: return constant(Rational(0));
        case Node::Kind::var: return constant(Rational(1));
        case Node::Kind::add: return add(derivative(e->a), derivative(e->b));
        case Node::Kind::sub: return sub(derivative(e->a), derivative(e->b));
        case Node::Kind::mul:
            return add(mul(derivative(e->a), e->b), mul(e->a, derivative(e->b)));
        case Node::Kind::div:
            return div(sub(mul(derivative(e->a), e->b), mul(e->a, derivative(e->b))),
                       pow(e->b, 2));
        case Node::Kind::pow:
            if (e->exponent == 0) return constant(Rational(0));
            return mul(mul(constant(Rational(e->exponent)), pow(e->a, e->exponent - 1)),
                       derivative(e->a));
        case Node::Kind::exp: return mul(derivative(e->a), exp(e->a));
        case Node::Kind::neg: return neg(derivative(e->a));
    }
    return constant(Rational(0));
}

std::string to_string(const HoloPtr& e, const std::string& varname) {
    switch (e->kind) {
        case Node::Kind::constant: return eds::to_string(e->value);
        case Node::Kind::var: return varname;
        case Node::Kind::add:
            return "(" + to_string(e->a, varname) + " + " + to_string(e->b, varname) + ")";
        case Node::Kind::sub:
            return "(" + to_string(e->a, varname) + " - " + to_string(e->b, varname) + ")";
        case Node::Kind::mul:
            return "(" + to_string(e->a, varname) + "*" + to_string(e->b, varname) + ")";
        case Node::Kind::div:
            return "(" + to_string(e->a, varname) + "/" + to_string(e->b, varname) + ")";
        case Node::Kind::pow:
            return "(" + to_string(e->a, varname) + "^" + std::to_string(e->exponent) + ")";
        case Node::Kind::exp: return "exp(" + to_string(e->a, varname) + ")";
        case Node::Kind::neg: return "(-" + to_string(e->a, varname) + ")";
    }
    return "?";
}

namespace {

struct HoloParser {
    std::string text, var;
    std::size_t pos = 0;

    void skip() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw Error("expression parse error at column " + std::to_string(pos + 1) + ": " + msg);
    }

    HoloPtr parse() {
        HoloPtr e = expr();
        skip();
        if (pos != text.size()) fail("trailing input");
        return e;
    }

    HoloPtr expr() {
        HoloPtr l = term();
        while (true) {
            skip();
            if (eat('+'))
                l = add(l, term());
            else if (eat('-'))
                l = sub(l, term());
            else
                return l;
        }
    }

    HoloPtr term() {
        HoloPtr l = unary();
        while (true) {
            skip();
            if (eat('*'))
                l = mul(l, unary());
            else if (eat('/'))
                l = div(l, unary());
            else
                return l;
        }
    }

    HoloPtr unary() {
        skip();
        if (eat('-')) return neg(unary());
        return powered();
    }

    HoloPtr powered() {
        HoloPtr base = atom();
        skip();
        while (eat('^')) {
            skip();
            bool negexp = eat('-');
            skip();
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) fail("integer exponent expected");
            long k = std::stol(text.substr(start, pos - start));
            base = pow(base, negexp ? -k : k);
            skip();
        }
        return base;
    }

    HoloPtr atom() {
        skip();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            return constant(Rational(mpz_class(text.substr(start, pos - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            if (name == "exp") {
                if (!eat('(')) fail("exp expects '('");
                HoloPtr inner = expr();
                if (!eat(')')) fail("expected ')'");
                return exp(inner);
            }
            if (name == var) return variable();
            fail("unknown name '" + name + "' (the variable is '" + var + "')");
        }
        if (c == '(') {
            ++pos;
            HoloPtr e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        fail("expected a number, the variable, exp(...), or '('");
    }
};

}  // namespace

HoloPtr parse_holomorphic(const std::string& text, const std::string& varname) {
    HoloParser p{text, varname};
    return p.parse();
}

}  // namespace eds::holo
