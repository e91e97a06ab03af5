#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eds/coframe.hpp"
#include "eds/errors.hpp"
#include "eds/poly.hpp"

namespace eds {

// Strictly increasing coframe indices; the empty tuple is the degree-0 slot.
using IndexTuple = std::vector<std::uint32_t>;

// Element of the exterior algebra over a declared coframe, with ScalarPoly
// coefficients. Monomials are stored on their canonical representative
// (strictly increasing index tuple); no zero coefficients are kept. Mixed
// degrees are allowed; most callers work with homogeneous forms.
class Form {
  public:
    Form() = default;
    explicit Form(CoframePtr decl) : decl_(std::move(decl)) {}

    static Form zero(CoframePtr decl) { return Form(std::move(decl)); }
    static Form scalar(CoframePtr decl, ScalarPoly c);
    static Form symbol(CoframePtr decl, std::uint32_t index);
    // c * xi_{i1} ^ ... ^ xi_{ip}; indices need not be sorted, the canonical
    // sign is tracked.
    static Form monomial(CoframePtr decl, std::vector<std::uint32_t> indices, ScalarPoly c);

    const CoframePtr& decl() const { return decl_; }
    const std::map<IndexTuple, ScalarPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Degree when homogeneous, nullopt for 0 or mixed.
    std::optional<std::uint32_t> degree() const;
    bool homogeneous_of_degree(std::uint32_t d) const;
    std::uint32_t max_degree() const;

    void add_term(const IndexTuple& sorted, const ScalarPoly& c);
    // Adds with sorting + sign; duplicate indices contribute nothing.
    void add_unsorted(std::vector<std::uint32_t> idx, ScalarPoly c);

    Form operator-() const;
    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator*(const ScalarPoly& c) const;
    Form operator*(const Rational& c) const;
    bool operator==(const Form& o) const;
    bool operator!=(const Form& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    void check_compatible(const Form& o) const;

    CoframePtr decl_;
    std::map<IndexTuple, ScalarPoly> terms_;
};

// Graded-anticommutative, bilinear, associative product.
Form wedge(const Form& a, const Form& b);

// Contraction with a vector written in the dual coframe basis; components
// may be polynomial. Degree-0 input yields the zero form.
Form interior_product(const std::vector<ScalarPoly>& v, const Form& a);
Form interior_product(const std::vector<Rational>& v, const Form& a);

// Substitute rational values for all scalar variables. Throws
// MissingAssignmentError naming the first unassigned variable that actually
// occurs in `a`.
Form evaluate(const Form& a, const std::map<std::uint32_t, Rational>& point);

}  // namespace eds
