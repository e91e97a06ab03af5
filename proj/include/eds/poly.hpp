#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eds/rational.hpp"

namespace eds {

// Exponent vector; arity is fixed per declaration (one slot per scalar
// variable, in declaration order).
using Exponents = std::vector<std::uint32_t>;

// Sparse multivariate polynomial over Rational. Invariant: no stored zero
// coefficients, and every exponent vector has length nvars.
class ScalarPoly {
  public:
    ScalarPoly() : nvars_(0) {}
    explicit ScalarPoly(std::uint32_t nvars) : nvars_(nvars) {}

    static ScalarPoly constant(std::uint32_t nvars, const Rational& c);
    static ScalarPoly variable(std::uint32_t nvars, std::uint32_t index);

    std::uint32_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (the whole value when is_constant()).
    Rational constant_value() const;

    const std::map<Exponents, Rational>& terms() const { return terms_; }

    void add_term(const Exponents& e, const Rational& c);

    ScalarPoly operator-() const;
    ScalarPoly operator+(const ScalarPoly& o) const;
    ScalarPoly operator-(const ScalarPoly& o) const;
    ScalarPoly operator*(const ScalarPoly& o) const;
    ScalarPoly operator*(const Rational& c) const;
    ScalarPoly pow(std::uint32_t k) const;
    bool operator==(const ScalarPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const ScalarPoly& o) const { return !(*this == o); }

    ScalarPoly derivative(std::uint32_t var) const;

    // Full evaluation; `point` must have one entry per variable.
    Rational eval(const std::vector<Rational>& point) const;

    // Substitute rationals for a subset of the variables (entries present in
    // `partial`), keeping the arity.
    ScalarPoly substitute(const std::map<std::uint32_t, Rational>& partial) const;

    // Reindex variables into a wider declaration. `map[i]` is the new index
    // of old variable i; new_nvars >= nvars().
    ScalarPoly reindex(const std::vector<std::uint32_t>& map, std::uint32_t new_nvars) const;

    // Total degree in the given variable set; 0 for the zero polynomial.
    std::uint32_t degree_in(const std::vector<std::uint32_t>& vars) const;

    std::string to_string(const std::vector<std::string>& names) const;

  private:
    std::uint32_t nvars_;
    std::map<Exponents, Rational> terms_;
};

inline ScalarPoly operator*(const Rational& c, const ScalarPoly& p) { return p * c; }

}  // namespace eds
