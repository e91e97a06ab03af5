#include "eds/reduce.hpp"

#include <algorithm>

namespace eds {

namespace {

// Coefficient of a single symbol inside a degree-1 form.
ScalarPoly coefficient_of(const Form& f, std::uint32_t sym) {
    auto it = f.terms().find(IndexTuple{sym});
    if (it == f.terms().end())
        return ScalarPoly(f.decl() ? f.decl()->nscalars() : 0);
    return it->second;
}

}  // namespace

IdealBasis row_reduce_generators(const std::vector<Form>& gens,
                                 const std::map<std::uint32_t, Rational>* point) {
    IdealBasis basis;
    if (gens.empty()) return basis;
    CoframePtr decl = gens.front().decl();
    basis.decl = decl;
    for (const auto& g : gens) {
        if (!compatible(decl, g.decl()))
            throw DeclarationMismatchError("ideal generators over different coframes");
        if (!g.is_zero() && !g.homogeneous_of_degree(1))
            throw Error("ideal generators must be degree-1 forms");
    }

    // leader preference: theta-block symbols first, then coframe order
    std::vector<std::uint32_t> preference;
    for (std::uint32_t i = 0; i < decl->size(); ++i)
        if (decl->blocks[i] == Block::theta) preference.push_back(i);
    for (std::uint32_t i = 0; i < decl->size(); ++i)
        if (decl->blocks[i] != Block::theta) preference.push_back(i);

    std::vector<Form> rows = gens;
    for (auto& row : rows) {
        // eliminate the leaders found so far
        row = reduce_mod(row, basis);
        if (row.is_zero()) {
            if (point)
                throw DegenerateIdealError("dependent ideal generators at the supplied point");
            continue;
        }
        // pick the first preferred symbol with an exactly constant nonzero
        // coefficient
        std::optional<std::uint32_t> lead;
        for (auto sym : preference) {
            ScalarPoly c = coefficient_of(row, sym);
            if (c.is_constant() && !c.is_zero()) {
                lead = sym;
                break;
            }
        }
        if (!lead)
            throw DegenerateIdealError(
                "no generator pivot with an exact constant coefficient; "
                "present the system with normalized leading terms");
        Rational pv = coefficient_of(row, *lead).constant_value();
        Rational inv = Rational(-1) / pv;
        // tail = leader - row / pivot
        Form tail(decl);
        for (const auto& [idx, c] : row.terms()) {
            if (idx.size() == 1 && idx[0] == *lead) continue;
            tail.add_term(idx, c * inv);
        }
        // normalize historical tails so none contains the new leader
        for (auto& [sym, t] : basis.tails) {
            ScalarPoly c = coefficient_of(t, *lead);
            if (c.is_zero()) continue;
            Form repl = t;
            repl.add_term(IndexTuple{*lead}, -c);
            t = repl + tail * c;
        }
        basis.tails[*lead] = std::move(tail);
    }
    return basis;
}

Form reduce_mod(const Form& a, const IdealBasis& basis) {
    if (basis.tails.empty()) return a;
    Form out(a.decl());
    for (const auto& [idx, c] : a.terms()) {
        bool touched = false;
        for (auto sym : idx)
            if (basis.is_leader(sym)) touched = true;
        if (!touched) {
            out.add_term(idx, c);
            continue;
        }
        // expand the monomial with each leader replaced by its tail
        Form acc = Form::scalar(a.decl(), c);
        for (auto sym : idx) {
            auto it = basis.tails.find(sym);
            if (it == basis.tails.end())
                acc = wedge(acc, Form::symbol(a.decl(), sym));
            else
                acc = wedge(acc, it->second);
        }
        out = out + acc;
    }
    return out;
}

Form reduce_mod(const Form& a, const std::vector<Form>& gens,
                const std::map<std::uint32_t, Rational>* point) {
    return reduce_mod(a, row_reduce_generators(gens, point));
}

}  // namespace eds
