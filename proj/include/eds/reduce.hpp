#pragma once

#include <optional>

#include "eds/form.hpp"

namespace eds {

// A row-reduced presentation of the algebraic ideal generated by degree-1
// forms: each leader symbol maps to a tail form free of leader symbols, so
// xi_leader == tail holds modulo the ideal.
struct IdealBasis {
    CoframePtr decl;
    std::map<std::uint32_t, Form> tails;  // leader symbol -> tail

    bool is_leader(std::uint32_t sym) const { return tails.count(sym) != 0; }
};

// Row-reduces the generators, choosing leaders by coframe order with
// theta-block symbols preferred. Pivots must be exact nonzero constants
// after elimination; generators whose surviving coefficients are all
// non-constant polynomials cannot be normalized in the polynomial ring and
// raise DegenerateIdealError. A supplied point additionally certifies
// pointwise independence of the generators.
IdealBasis row_reduce_generators(const std::vector<Form>& gens,
                                 const std::map<std::uint32_t, Rational>* point = nullptr);

// Canonical normal form of `a` modulo the algebraic ideal of the given
// degree-1 generators: no monomial of the result contains a leader symbol.
// Idempotent, and absorbs g ^ b for any generator g.
Form reduce_mod(const Form& a, const std::vector<Form>& gens,
                const std::map<std::uint32_t, Rational>* point = nullptr);
Form reduce_mod(const Form& a, const IdealBasis& basis);

}  // namespace eds
