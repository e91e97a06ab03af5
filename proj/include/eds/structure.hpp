#pragma once

#include <map>
#include <string>
#include <vector>

#include "eds/form.hpp"

namespace eds {

// User-declared structure equations: a degree-2 form for d of each coframe
// symbol, a degree-1 form for d of each scalar variable. ext_d is driven
// entirely by these rules; nothing is differentiated "for free".
struct StructureRules {
    CoframePtr decl;
    std::map<std::uint32_t, Form> dcoframe;
    std::map<std::uint32_t, Form> dscalar;

    StructureRules() = default;
    explicit StructureRules(CoframePtr d) : decl(std::move(d)) {}

    void set_dcoframe(std::uint32_t symbol, Form f);
    void set_dscalar(std::uint32_t var, Form f);
    void set_dcoframe(const std::string& symbol, Form f);
    void set_dscalar(const std::string& var, Form f);
};

// Exterior derivative of `a` under `rules`. Linear, satisfies the graded
// Leibniz rule, and squares to zero exactly when the rules are consistent.
// Throws IncompleteRulesError naming the first symbol or variable that
// occurs in `a` without a rule.
Form ext_d(const Form& a, const StructureRules& rules);

struct ConsistencyReport {
    // Symbols/variables whose d(d xi) is not identically zero.
    std::vector<std::string> inconsistent;
    // Symbols/variables whose second derivative could not be formed because
    // some rule is missing (the offending rule is named in the message).
    std::vector<std::string> unchecked;

    bool consistent() const { return inconsistent.empty() && unchecked.empty(); }
};

// d-squared check over every coframe symbol and scalar variable that has a
// rule. Symbols without rules are reported in `unchecked` (a rule set may
// legitimately omit symbols never differentiated).
ConsistencyReport mc_check(const StructureRules& rules);

}  // namespace eds
