#pragma once

#include <complex>
#include <memory>
#include <string>

#include "eds/errors.hpp"
#include "eds/rational.hpp"

namespace eds::holo {

// Expression tree in one complex variable with exact rational constants.
// Evaluation is double-precision; derivatives are formed symbolically.
struct Node;
using HoloPtr = std::shared_ptr<const Node>;

struct Node {
    enum class Kind { constant, var, add, sub, mul, div, pow, exp, neg };
    Kind kind;
    Rational value;  // constant
    HoloPtr a, b;
    long exponent = 0;  // pow
};

HoloPtr constant(const Rational& c);
HoloPtr variable();
HoloPtr add(HoloPtr a, HoloPtr b);
HoloPtr sub(HoloPtr a, HoloPtr b);
HoloPtr mul(HoloPtr a, HoloPtr b);
HoloPtr div(HoloPtr a, HoloPtr b);
HoloPtr pow(HoloPtr a, long k);
HoloPtr exp(HoloPtr a);
HoloPtr neg(HoloPtr a);

std::complex<double> eval(const HoloPtr& e, std::complex<double> z);
HoloPtr derivative(const HoloPtr& e);
std::string to_string(const HoloPtr& e, const std::string& varname = "w");

// Grammar: rational constants ("3", "3/2"), the variable (any identifier),
// + - * / ^<int> exp(...) and parentheses. Throws Error on malformed input.
HoloPtr parse_holomorphic(const std::string& text, const std::string& varname);

}  // namespace eds::holo
