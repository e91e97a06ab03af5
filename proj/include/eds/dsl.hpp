#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eds/pfaffian.hpp"

namespace eds::dsl {

// ---- expression trees ----

enum class ExprKind { number, name, add, sub, mul, div, pow, wedge, neg, d };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind;
    Rational value;          // number
    std::string name;        // name, d
    ExprPtr lhs, rhs;        // binary nodes; neg and d use lhs
    long exponent = 0;       // pow
    int line = 0, col = 0;
};

bool expr_equal(const ExprPtr& a, const ExprPtr& b);
std::string print_expr(const ExprPtr& e);

// ---- documents ----

struct SystemDocument {
    int version = 1;
    std::vector<std::pair<std::string, Block>> coframe;
    std::vector<std::string> vars;
    std::vector<std::pair<std::string, ExprPtr>> rules;  // "d name = expr"
    std::vector<std::string> ideal;                      // optional; defaults to the theta block
    ExprPtr independence;                                // optional; defaults to wedge of omegas
    std::vector<std::pair<std::string, Rational>> point;

    bool operator==(const SystemDocument& o) const;
};

struct Diagnostic {
    int line = 0;
    int col = 0;
    std::string message;
};

struct ParseResult {
    std::optional<SystemDocument> doc;
    std::optional<PfaffianSystem> system;  // built when the document is semantically sound
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return doc.has_value() && system.has_value() && diagnostics.empty(); }
};

// Parses and semantically validates a system document. Never throws on bad
// input; every problem is a positioned diagnostic.
ParseResult parse_system(const std::string& text);

// Canonical printer; parse(print_system(doc)) reproduces the document.
std::string print_system(const SystemDocument& doc);

// Standalone polynomial parser over the given variable names (used for
// catalog expression parameters). Throws Error with a readable message on
// non-polynomial input.
ScalarPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

// Renders a system as a document (rules become expression trees); the
// catalog systems round-trip through print_system / parse_system.
SystemDocument document_from_system(const PfaffianSystem& sys);

}  // namespace eds::dsl
