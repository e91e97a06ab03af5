#include "eds/structure.hpp"

namespace eds {

void StructureRules::set_dcoframe(std::uint32_t symbol, Form f) {
    if (!compatible(decl, f.decl()))
        throw DeclarationMismatchError("rule form over a different coframe");
    dcoframe[symbol] = std::move(f);
}

void StructureRules::set_dscalar(std::uint32_t var, Form f) {
    if (!compatible(decl, f.decl()))
        throw DeclarationMismatchError("rule form over a different coframe");
    dscalar[var] = std::move(f);
}

void StructureRules::set_dcoframe(const std::string& symbol, Form f) {
    set_dcoframe(decl->name_index.at(symbol), std::move(f));
}

void StructureRules::set_dscalar(const std::string& var, Form f) {
    set_dscalar(decl->scalar_index.at(var), std::move(f));
}

namespace {

// d of a polynomial coefficient: sum of (dc/dx_v) * dscalar rule for v.
Form d_poly(const ScalarPoly& c, const StructureRules& rules, const CoframePtr& decl) {
    Form out(decl);
    for (std::uint32_t v = 0; v < c.nvars(); ++v) {
        ScalarPoly dc = c.derivative(v);
        if (dc.is_zero()) continue;
        auto it = rules.dscalar.find(v);
        if (it == rules.dscalar.end()) throw IncompleteRulesError(decl->scalars[v]);
        out = out + it->second * dc;
    }
    return out;
}

}  // namespace

Form ext_d(const Form& a, const StructureRules& rules) {
    const CoframePtr& decl = a.decl() ? a.decl() : rules.decl;
    if (!compatible(decl, rules.decl))
        throw DeclarationMismatchError("form and rules over different coframes");
    Form out(decl);
    for (const auto& [idx, c] : a.terms()) {
        // d(c) ^ xi_I
        Form dc = d_poly(c, rules, decl);
        if (!dc.is_zero()) {
            Form mono = Form::monomial(decl, std::vector<std::uint32_t>(idx.begin(), idx.end()),
                                       ScalarPoly::constant(decl->nscalars(), Rational(1)));
            out = out + wedge(dc, mono);
        }
        // c * sum_k (-1)^{k-1} xi_{i1} ^ ... ^ d(xi_{ik}) ^ ... ^ xi_{ip}
        for (std::size_t k = 0; k < idx.size(); ++k) {
            auto it = rules.dcoframe.find(idx[k]);
            if (it == rules.dcoframe.end()) throw IncompleteRulesError(decl->names[idx[k]]);
            const Form& dxi = it->second;
            if (dxi.is_zero()) continue;
            Form left = Form::scalar(decl, k % 2 == 0 ? c : -c);
            for (std::size_t m = 0; m < idx.size(); ++m) {
                if (m == k) continue;
                left = wedge(left, Form::symbol(decl, idx[m]));
            }
            // reattach d(xi_k) in place: sign accounted by moving it to front
            // of the remaining symbols; wedge(dxi, rest) with the (-1)^{k-1}
            // prefactor equals the Leibniz term.
            out = out + wedge(dxi, left);
        }
    }
    return out;
}

ConsistencyReport mc_check(const StructureRules& rules) {
    ConsistencyReport rep;
    const CoframePtr& decl = rules.decl;
    for (const auto& [sym, rule] : rules.dcoframe) {
        try {
            if (!ext_d(rule, rules).is_zero()) rep.inconsistent.push_back(decl->names[sym]);
        } catch (const IncompleteRulesError&) {
            rep.unchecked.push_back(decl->names[sym]);
        }
    }
    for (const auto& [var, rule] : rules.dscalar) {
        try {
            if (!ext_d(rule, rules).is_zero()) rep.inconsistent.push_back(decl->scalars[var]);
        } catch (const IncompleteRulesError&) {
            rep.unchecked.push_back(decl->scalars[var]);
        }
    }
    return rep;
}

}  // namespace eds
