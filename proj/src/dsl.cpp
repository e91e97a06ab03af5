#include "eds/dsl.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace eds::dsl {

namespace {

// ---- tokens ----

enum class Tok { name, number, plus, minus, star, slash, caret, wedge, lparen, rparen, eq, colon, end };

struct Token {
    Tok kind;
    std::string text;
    int line = 0, col = 0;
};

struct LexError {
    Diagnostic diag;
};

std::vector<Token> lex_line(const std::string& s, int line) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto push = [&](Tok k, std::string t, std::size_t at) {
        out.push_back({k, std::move(t), line, static_cast<int>(at) + 1});
    };
    while (i < s.size()) {
        char c = s[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            push(Tok::name, s.substr(i, j - i), i);
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            push(Tok::number, s.substr(i, j - i), i);
            i = j;
            continue;
        }
        if (c == '/' && i + 1 < s.size() && s[i + 1] == '\\') {
            push(Tok::wedge, "/\\", i);
            i += 2;
            continue;
        }
        switch (c) {
            case '+': push(Tok::plus, "+", i); break;
            case '-': push(Tok::minus, "-", i); break;
            case '*': push(Tok::star, "*", i); break;
            case '/': push(Tok::slash, "/", i); break;
            case '^': push(Tok::caret, "^", i); break;
            case '(': push(Tok::lparen, "(", i); break;
            case ')': push(Tok::rparen, ")", i); break;
            case '=': push(Tok::eq, "=", i); break;
            case ':': push(Tok::colon, ":", i); break;
            default:
                throw LexError{{line, static_cast<int>(i) + 1,
                                std::string("unexpected character '") + c + "'"}};
        }
        ++i;
    }
    push(Tok::end, "", s.size());
    return out;
}

// ---- expression parser ----
// precedence (tight to loose): power, unary minus, wedge, *, /, +/-

struct ExprParser {
    const std::vector<Token>& toks;
    std::size_t pos = 0;

    explicit ExprParser(const std::vector<Token>& t) : toks(t) {}

    const Token& peek() const { return toks[pos]; }
    Token take() { return toks[pos++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw LexError{{peek().line, peek().col, msg}};
    }

    ExprPtr make(ExprKind k, const Token& at, ExprPtr l = nullptr, ExprPtr r = nullptr) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->lhs = std::move(l);
        e->rhs = std::move(r);
        e->line = at.line;
        e->col = at.col;
        return e;
    }

    ExprPtr parse() {
        ExprPtr e = add_sub();
        if (peek().kind != Tok::end) fail("trailing tokens after expression");
        return e;
    }

    ExprPtr add_sub() {
        ExprPtr l = div_level();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            Token op = take();
            ExprPtr r = div_level();
            l = make(op.kind == Tok::plus ? ExprKind::add : ExprKind::sub, op, l, r);
        }
        return l;
    }

    ExprPtr div_level() {
        ExprPtr l = mul_level();
        while (peek().kind == Tok::slash) {
            Token op = take();
            ExprPtr r = mul_level();
            l = make(ExprKind::div, op, l, r);
        }
        return l;
    }

    ExprPtr mul_level() {
        ExprPtr l = wedge_level();
        while (peek().kind == Tok::star) {
            Token op = take();
            ExprPtr r = wedge_level();
            l = make(ExprKind::mul, op, l, r);
        }
        return l;
    }

    ExprPtr wedge_level() {
        ExprPtr l = unary();
        while (peek().kind == Tok::wedge) {
            Token op = take();
            ExprPtr r = unary();
            l = make(ExprKind::wedge, op, l, r);
        }
        return l;
    }

    ExprPtr unary() {
        if (peek().kind == Tok::minus) {
            Token op = take();
            ExprPtr e = unary();
            return make(ExprKind::neg, op, e);
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        while (peek().kind == Tok::caret) {
            Token op = take();
            bool negexp = false;
            if (peek().kind == Tok::minus) {
                take();
                negexp = true;
            }
            if (peek().kind != Tok::number) fail("integer exponent expected after '^'");
            Token n = take();
            auto e = make(ExprKind::pow, op, base);
            auto mut = std::const_pointer_cast<Expr>(e);
            mut->exponent = std::stol(n.text) * (negexp ? -1 : 1);
            base = e;
        }
        return base;
    }

    ExprPtr atom() {
        const Token& t = peek();
        if (t.kind == Tok::number) {
            Token n = take();
            auto e = make(ExprKind::number, n);
            std::const_pointer_cast<Expr>(e)->value = Rational(mpz_class(n.text));
            return e;
        }
        if (t.kind == Tok::name) {
            Token n = take();
            if (n.text == "d" && peek().kind == Tok::lparen) {
                take();
                if (peek().kind != Tok::name) fail("d(...) expects a symbol name");
                Token inner = take();
                if (peek().kind != Tok::rparen) fail("expected ')'");
                take();
                auto e = make(ExprKind::d, n);
                std::const_pointer_cast<Expr>(e)->name = inner.text;
                return e;
            }
            auto e = make(ExprKind::name, n);
            std::const_pointer_cast<Expr>(e)->name = n.text;
            return e;
        }
        if (t.kind == Tok::lparen) {
            take();
            ExprPtr e = add_sub();
            if (peek().kind != Tok::rparen) fail("expected ')'");
            take();
            return e;
        }
        fail("expected a number, name, or '('");
    }
};

ExprPtr parse_expr_tokens(const std::vector<Token>& toks) {
    ExprParser p(toks);
    return p.parse();
}

// ---- expression evaluation over a declaration ----

struct EvalContext {
    CoframePtr decl;
    std::vector<Diagnostic>* diags = nullptr;

    [[noreturn]] void fail(const Expr& e, const std::string& msg) const {
        throw LexError{{e.line, e.col, msg}};
    }

    Form eval(const ExprPtr& ep) const {
        const Expr& e = *ep;
        const std::uint32_t nv = decl->nscalars();
        switch (e.kind) {
            case ExprKind::number:
                return Form::scalar(decl, ScalarPoly::constant(nv, e.value));
            case ExprKind::name: {
                auto itc = decl->name_index.find(e.name);
                if (itc != decl->name_index.end()) return Form::symbol(decl, itc->second);
                auto itv = decl->scalar_index.find(e.name);
                if (itv != decl->scalar_index.end())
                    return Form::scalar(decl, ScalarPoly::variable(nv, itv->second));
                fail(e, "unknown symbol '" + e.name + "'");
            }
            case ExprKind::add: return eval(e.lhs) + eval(e.rhs);
            case ExprKind::sub: return eval(e.lhs) - eval(e.rhs);
            case ExprKind::neg: return -eval(e.lhs);
            case ExprKind::wedge: return wedge(eval(e.lhs), eval(e.rhs));
            case ExprKind::mul: {
                Form l = eval(e.lhs), r = eval(e.rhs);
                bool l0 = l.homogeneous_of_degree(0), r0 = r.homogeneous_of_degree(0);
                if (l0 && r0) {
                    ScalarPoly p = l.terms().empty() ? ScalarPoly(nv) : l.terms().begin()->second;
                    ScalarPoly q = r.terms().empty() ? ScalarPoly(nv) : r.terms().begin()->second;
                    return Form::scalar(decl, p * q);
                }
                if (l0) {
                    ScalarPoly p = l.terms().empty() ? ScalarPoly(nv) : l.terms().begin()->second;
                    return r * p;
                }
                if (r0) {
                    ScalarPoly q = r.terms().empty() ? ScalarPoly(nv) : r.terms().begin()->second;
                    return l * q;
                }
                fail(e, "'*' multiplies by scalars; use '/\\' for products of forms");
            }
            case ExprKind::div: {
                Form l = eval(e.lhs), r = eval(e.rhs);
                if (!r.homogeneous_of_degree(0)) fail(e, "division by a non-scalar");
                ScalarPoly q = r.terms().empty() ? ScalarPoly(nv) : r.terms().begin()->second;
                if (!q.is_constant() || q.is_zero())
                    fail(e, "division is only defined by nonzero rational constants");
                return l * (Rational(1) / q.constant_value());
            }
            case ExprKind::pow: {
                Form b = eval(e.lhs);
                if (!b.homogeneous_of_degree(0)) fail(e, "'^' applies to scalars only");
                ScalarPoly p = b.terms().empty() ? ScalarPoly(nv) : b.terms().begin()->second;
                if (e.exponent < 0) {
                    if (!p.is_constant() || p.is_zero())
                        fail(e, "negative powers are only defined for nonzero rational constants");
                    Rational inv = Rational(1) / p.constant_value();
                    Rational acc(1);
                    for (long k = 0; k < -e.exponent; ++k) acc *= inv;
                    return Form::scalar(decl, ScalarPoly::constant(nv, acc));
                }
                return Form::scalar(decl, p.pow(static_cast<std::uint32_t>(e.exponent)));
            }
            case ExprKind::d:
                fail(e, "'d' may appear only on the left-hand side of a structure rule");
        }
        fail(e, "unreachable expression kind");
    }
};

struct Section {
    std::string keyword;
    std::vector<Token> toks;  // payload tokens (keyword removed), end-terminated
    int line = 0;
};

}  // namespace

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprKind::number: return a->value == b->value;
        case ExprKind::name: return a->name == b->name;
        case ExprKind::d: return a->name == b->name;
        case ExprKind::pow:
            return a->exponent == b->exponent && expr_equal(a->lhs, b->lhs);
        case ExprKind::neg: return expr_equal(a->lhs, b->lhs);
        default: return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
    }
}

std::string print_expr(const ExprPtr& ep) {
    if (!ep) return "0";
    const Expr& e = *ep;
    auto wrap = [](const std::string& s) { return "(" + s + ")"; };
    switch (e.kind) {
        case ExprKind::number: return to_string(e.value);
        case ExprKind::name: return e.name;
        case ExprKind::d: return "d(" + e.name + ")";
        case ExprKind::add: return wrap(print_expr(e.lhs) + " + " + print_expr(e.rhs));
        case ExprKind::sub: return wrap(print_expr(e.lhs) + " - " + print_expr(e.rhs));
        case ExprKind::mul: return wrap(print_expr(e.lhs) + "*" + print_expr(e.rhs));
        case ExprKind::div: return wrap(print_expr(e.lhs) + "/" + print_expr(e.rhs));
        case ExprKind::wedge: return wrap(print_expr(e.lhs) + "/\\" + print_expr(e.rhs));
        case ExprKind::neg: return wrap("-" + print_expr(e.lhs));
        case ExprKind::pow: return wrap(print_expr(e.lhs) + "^" + std::to_string(e.exponent));
    }
    return "?";
}

bool SystemDocument::operator==(const SystemDocument& o) const {
    if (version != o.version || coframe != o.coframe || vars != o.vars || ideal != o.ideal ||
        point != o.point)
        return false;
    if (rules.size() != o.rules.size()) return false;
    for (std::size_t k = 0; k < rules.size(); ++k)
        if (rules[k].first != o.rules[k].first || !expr_equal(rules[k].second, o.rules[k].second))
            return false;
    return expr_equal(independence, o.independence);
}

ParseResult parse_system(const std::string& text) {
    ParseResult res;
    std::vector<Diagnostic>& diags = res.diagnostics;

    // split into sections
    std::vector<Section> sections;
    static const std::vector<std::string> keywords = {
        "version", "coframe", "vars", "structure", "ideal", "independence", "point"};
    {
        std::istringstream is(text);
        std::string line;
        int lineno = 0;
        Section* cur = nullptr;
        while (std::getline(is, line)) {
            ++lineno;
            std::vector<Token> toks;
            try {
                toks = lex_line(line, lineno);
            } catch (const LexError& e) {
                diags.push_back(e.diag);
                continue;
            }
            if (toks.size() == 1) continue;  // blank / comment line
            bool starts_section = toks[0].kind == Tok::name &&
                                  std::find(keywords.begin(), keywords.end(), toks[0].text) !=
                                      keywords.end();
            if (starts_section) {
                sections.push_back({toks[0].text, {}, lineno});
                cur = &sections.back();
                cur->toks.assign(toks.begin() + 1, toks.end());
            } else if (cur) {
                if (!cur->toks.empty() && cur->toks.back().kind == Tok::end)
                    cur->toks.pop_back();
                cur->toks.insert(cur->toks.end(), toks.begin(), toks.end());
            } else {
                diags.push_back({lineno, toks[0].col, "content before any section keyword"});
            }
        }
    }
    if (!diags.empty() && sections.empty()) return res;

    SystemDocument doc;
    bool saw_version = false;

    auto split_lines = [](const std::vector<Token>& toks) {
        // split a section payload at line boundaries
        std::vector<std::vector<Token>> rows;
        std::vector<Token> cur;
        int curline = -1;
        for (const auto& t : toks) {
            if (t.kind == Tok::end) continue;
            if (t.line != curline && !cur.empty()) {
                cur.push_back({Tok::end, "", curline, 0});
                rows.push_back(std::move(cur));
                cur.clear();
            }
            curline = t.line;
            cur.push_back(t);
        }
        if (!cur.empty()) {
            cur.push_back({Tok::end, "", curline, 0});
            rows.push_back(std::move(cur));
        }
        return rows;
    };

    for (const auto& sec : sections) {
        if (sec.keyword == "version") {
            if (sec.toks.size() < 2 || sec.toks[0].kind != Tok::number) {
                diags.push_back({sec.line, 1, "version section expects an integer"});
            } else {
                doc.version = std::stoi(sec.toks[0].text);
                saw_version = true;
                if (doc.version != 1)
                    diags.push_back({sec.line, 1, "unsupported document version " + sec.toks[0].text});
            }
        } else if (sec.keyword == "coframe") {
            std::size_t k = 0;
            while (k < sec.toks.size() && sec.toks[k].kind != Tok::end) {
                if (sec.toks[k].kind != Tok::name) {
                    diags.push_back({sec.toks[k].line, sec.toks[k].col, "symbol name expected"});
                    break;
                }
                std::string nm = sec.toks[k].text;
                Block b = Block::other;
                k += 1;
                if (k < sec.toks.size() && sec.toks[k].kind == Tok::colon) {
                    k += 1;
                    if (k >= sec.toks.size() || sec.toks[k].kind != Tok::name) {
                        diags.push_back({sec.toks[k - 1].line, sec.toks[k - 1].col,
                                         "block tag expected after ':'"});
                        break;
                    }
                    std::string tag = sec.toks[k].text;
                    if (tag == "theta")
                        b = Block::theta;
                    else if (tag == "omega")
                        b = Block::omega;
                    else if (tag == "pi")
                        b = Block::pi;
                    else if (tag == "other")
                        b = Block::other;
                    else
                        diags.push_back({sec.toks[k].line, sec.toks[k].col,
                                         "unknown block tag '" + tag + "'"});
                    k += 1;
                } else {
                    diags.push_back({sec.toks[k - 1].line, sec.toks[k - 1].col,
                                     "expected ':tag' after coframe symbol '" + nm + "'"});
                }
                doc.coframe.emplace_back(nm, b);
            }
        } else if (sec.keyword == "vars") {
            for (const auto& t : sec.toks) {
                if (t.kind == Tok::end) continue;
                if (t.kind != Tok::name) {
                    diags.push_back({t.line, t.col, "variable name expected"});
                    continue;
                }
                doc.vars.push_back(t.text);
            }
        } else if (sec.keyword == "structure") {
            for (auto& row : split_lines(sec.toks)) {
                // d <name> = <expr>
                if (row.size() < 4 || row[0].kind != Tok::name || row[0].text != "d" ||
                    row[1].kind != Tok::name || row[2].kind != Tok::eq) {
                    diags.push_back({row[0].line, row[0].col,
                                     "structure rule must have the shape 'd name = expr'"});
                    continue;
                }
                std::vector<Token> expr_toks(row.begin() + 3, row.end());
                try {
                    doc.rules.emplace_back(row[1].text, parse_expr_tokens(expr_toks));
                } catch (const LexError& e) {
                    diags.push_back(e.diag);
                }
            }
        } else if (sec.keyword == "ideal") {
            for (const auto& t : sec.toks) {
                if (t.kind == Tok::end) continue;
                if (t.kind != Tok::name) {
                    diags.push_back({t.line, t.col, "ideal section lists theta symbols"});
                    continue;
                }
                doc.ideal.push_back(t.text);
            }
        } else if (sec.keyword == "independence") {
            try {
                doc.independence = parse_expr_tokens(sec.toks);
            } catch (const LexError& e) {
                diags.push_back(e.diag);
            }
        } else if (sec.keyword == "point") {
            for (auto& row : split_lines(sec.toks)) {
                std::size_t k = 0;
                while (k < row.size() && row[k].kind != Tok::end) {
                    if (row[k].kind != Tok::name || k + 1 >= row.size() ||
                        row[k + 1].kind != Tok::eq) {
                        diags.push_back({row[k].line, row[k].col, "point entry must be 'var = rational'"});
                        break;
                    }
                    std::string var = row[k].text;
                    k += 2;
                    bool negative = false;
                    if (k < row.size() && row[k].kind == Tok::minus) {
                        negative = true;
                        k += 1;
                    }
                    if (k >= row.size() || row[k].kind != Tok::number) {
                        diags.push_back({row[k - 1].line, row[k - 1].col, "rational value expected"});
                        break;
                    }
                    std::string num = row[k].text;
                    k += 1;
                    std::string den = "1";
                    if (k + 1 < row.size() && row[k].kind == Tok::slash &&
                        row[k + 1].kind == Tok::number) {
                        den = row[k + 1].text;
                        k += 2;
                    }
                    Rational q{mpz_class(num), mpz_class(den)};
                    q.canonicalize();
                    if (negative) q = -q;
                    doc.point.emplace_back(var, q);
                }
            }
        }
    }
    if (!saw_version) diags.push_back({1, 1, "a 'version 1' header line is required"});

    // semantic validation + construction
    std::vector<std::string> names, scalars;
    std::vector<Block> blocks;
    {
        int cof_line = 1, var_line = 1;
        for (const auto& sec : sections) {
            if (sec.keyword == "coframe") cof_line = sec.line;
            if (sec.keyword == "vars") var_line = sec.line;
        }
        std::set<std::string> seen;
        for (const auto& [nm, b] : doc.coframe) {
            if (!seen.insert(nm).second)
                diags.push_back(
                    {cof_line, 1, "duplicate declaration of coframe symbol '" + nm + "'"});
            names.push_back(nm);
            blocks.push_back(b);
        }
        for (const auto& v : doc.vars) {
            if (!seen.insert(v).second)
                diags.push_back({var_line, 1, "duplicate declaration of '" + v + "'"});
            scalars.push_back(v);
        }
    }
    res.doc = doc;
    if (!diags.empty()) return res;

    CoframePtr decl;
    try {
        decl = make_coframe(names, blocks, scalars);
    } catch (const std::exception& e) {
        diags.push_back({1, 1, e.what()});
        return res;
    }
    EvalContext ctx{decl, &diags};
    PfaffianSystem sys;
    sys.coframe = decl;
    sys.rules = StructureRules(decl);
    for (const auto& [nm, expr] : doc.rules) {
        bool is_sym = decl->name_index.count(nm) != 0;
        bool is_var = decl->scalar_index.count(nm) != 0;
        if (!is_sym && !is_var) {
            diags.push_back({expr ? expr->line : 0, expr ? expr->col : 0,
                             "structure rule for undeclared name '" + nm + "'"});
            continue;
        }
        Form f;
        try {
            f = ctx.eval(expr);
        } catch (const LexError& e) {
            diags.push_back(e.diag);
            continue;
        }
        if (is_sym) {
            if (!f.is_zero() && !f.homogeneous_of_degree(2)) {
                diags.push_back({expr->line, expr->col,
                                 "degree mismatch: d of a 1-form must be a degree-2 form"});
                continue;
            }
            sys.rules.set_dcoframe(decl->name_index.at(nm), f);
        } else {
            if (!f.is_zero() && !f.homogeneous_of_degree(1)) {
                diags.push_back({expr->line, expr->col,
                                 "degree mismatch: d of a scalar must be a degree-1 form"});
                continue;
            }
            sys.rules.set_dscalar(decl->scalar_index.at(nm), f);
        }
    }
    // ideal section must match the theta block when present
    if (!doc.ideal.empty()) {
        std::vector<std::string> thetas;
        for (std::uint32_t i = 0; i < decl->size(); ++i)
            if (decl->blocks[i] == Block::theta) thetas.push_back(decl->names[i]);
        std::vector<std::string> sorted_ideal = doc.ideal;
        std::sort(sorted_ideal.begin(), sorted_ideal.end());
        std::sort(thetas.begin(), thetas.end());
        for (const auto& nm : doc.ideal)
            if (!decl->name_index.count(nm))
                diags.push_back({1, 1, "ideal lists undeclared symbol '" + nm + "'"});
        if (diags.empty() && sorted_ideal != thetas)
            diags.push_back({1, 1, "ideal generators must be exactly the theta-block symbols"});
    }
    // independence defaults to the omega block; when present it must equal it
    if (doc.independence) {
        Form f;
        try {
            f = ctx.eval(doc.independence);
        } catch (const LexError& e) {
            diags.push_back(e.diag);
        }
        if (diags.empty() && !(f == sys.independence()))
            diags.push_back({doc.independence->line, doc.independence->col,
                             "independence condition must be the wedge of the omega block in "
                             "declaration order"});
    }
    for (const auto& [var, q] : doc.point) {
        auto it = decl->scalar_index.find(var);
        if (it == decl->scalar_index.end()) {
            diags.push_back({1, 1, "point assigns undeclared variable '" + var + "'"});
            continue;
        }
        if (!sys.point) sys.point = PointAssignment{};
        (*sys.point)[it->second] = q;
    }
    if (!sys.point) sys.point = PointAssignment{};
    try {
        sys.validate();
    } catch (const std::exception& e) {
        diags.push_back({1, 1, e.what()});
    }
    if (diags.empty()) res.system = std::move(sys);
    return res;
}

std::string print_system(const SystemDocument& doc) {
    std::ostringstream os;
    os << "version " << doc.version << "\n";
    os << "coframe";
    for (const auto& [nm, b] : doc.coframe) os << " " << nm << ":" << block_name(b);
    os << "\n";
    if (!doc.vars.empty()) {
        os << "vars";
        for (const auto& v : doc.vars) os << " " << v;
        os << "\n";
    }
    os << "structure\n";
    for (const auto& [nm, e] : doc.rules) os << "  d " << nm << " = " << print_expr(e) << "\n";
    if (!doc.ideal.empty()) {
        os << "ideal";
        for (const auto& t : doc.ideal) os << " " << t;
        os << "\n";
    }
    if (doc.independence) os << "independence " << print_expr(doc.independence) << "\n";
    if (!doc.point.empty()) {
        os << "point";
        for (const auto& [v, q] : doc.point) os << " " << v << " = " << to_string(q);
        os << "\n";
    }
    return os.str();
}

namespace {

ExprPtr expr_number(const Rational& q) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::number;
    e->value = q;
    return e;
}

ExprPtr expr_name(const std::string& nm) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::name;
    e->name = nm;
    return e;
}

ExprPtr expr_bin(ExprKind k, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr expr_neg(ExprPtr a) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::neg;
    e->lhs = std::move(a);
    return e;
}

// Emits the tree the parser would produce for the printed text: numbers are
// nonnegative integers, fractions are division nodes, signs are neg nodes.
ExprPtr expr_rational(const Rational& q) {
    Rational a = q < 0 ? Rational(-q) : q;
    ExprPtr e = expr_number(Rational(a.get_num()));
    if (a.get_den() != 1) e = expr_bin(ExprKind::div, e, expr_number(Rational(a.get_den())));
    return q < 0 ? expr_neg(e) : e;
}

ExprPtr poly_to_expr(const ScalarPoly& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return expr_number(Rational(0));
    ExprPtr acc;
    for (const auto& [e, c] : p.terms()) {
        ExprPtr term;
        bool has_var = false;
        for (std::uint32_t v = 0; v < e.size(); ++v) {
            for (std::uint32_t k = 0; k < e[v]; ++k) {
                ExprPtr nv = expr_name(vars[v]);
                term = term ? expr_bin(ExprKind::mul, term, nv) : nv;
                has_var = true;
            }
        }
        Rational mag = c < 0 ? Rational(-c) : c;
        if (!has_var || mag != 1) {
            ExprPtr num = expr_rational(mag);
            term = term ? expr_bin(ExprKind::mul, num, term) : num;
        }
        if (c < 0) term = expr_neg(term);
        acc = acc ? expr_bin(ExprKind::add, acc, term) : term;
    }
    return acc;
}

ExprPtr form_to_expr(const Form& f) {
    const CoframePtr& decl = f.decl();
    if (f.is_zero()) return expr_number(Rational(0));
    ExprPtr acc;
    for (const auto& [idx, c] : f.terms()) {
        ExprPtr term;
        for (auto s2 : idx) {
            ExprPtr sym = expr_name(decl->names[s2]);
            term = term ? expr_bin(ExprKind::wedge, term, sym) : sym;
        }
        bool plus_one = c.is_constant() && !c.is_zero() && c.constant_value() == 1;
        bool minus_one = c.is_constant() && !c.is_zero() && c.constant_value() == -1;
        if (!term) {
            term = poly_to_expr(c, decl->scalars);
        } else if (minus_one) {
            term = expr_neg(term);
        } else if (!plus_one) {
            term = expr_bin(ExprKind::mul, poly_to_expr(c, decl->scalars), term);
        }
        acc = acc ? expr_bin(ExprKind::add, acc, term) : term;
    }
    return acc;
}

}  // namespace

SystemDocument document_from_system(const PfaffianSystem& sys) {
    SystemDocument doc;
    const CoframePtr& decl = sys.coframe;
    for (std::uint32_t i = 0; i < decl->size(); ++i)
        doc.coframe.emplace_back(decl->names[i], decl->blocks[i]);
    doc.vars = decl->scalars;
    for (std::uint32_t i = 0; i < decl->size(); ++i) {
        auto it = sys.rules.dcoframe.find(i);
        if (it != sys.rules.dcoframe.end())
            doc.rules.emplace_back(decl->names[i], form_to_expr(it->second));
    }
    for (const auto& [v, f] : sys.rules.dscalar)
        doc.rules.emplace_back(decl->scalars[v], form_to_expr(f));
    for (auto t : sys.thetas()) doc.ideal.push_back(decl->names[t]);
    ExprPtr ind;
    for (auto o : sys.omegas()) {
        ExprPtr sym = expr_name(decl->names[o]);
        ind = ind ? expr_bin(ExprKind::wedge, ind, sym) : sym;
    }
    doc.independence = ind;
    if (sys.point)
        for (const auto& [v, q] : *sys.point) doc.point.emplace_back(decl->scalars[v], q);
    return doc;
}

ScalarPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
    auto decl = make_coframe({}, {}, vars);
    std::vector<Token> toks;
    try {
        toks = lex_line(text, 1);
        ExprPtr e = parse_expr_tokens(toks);
        EvalContext ctx{decl, nullptr};
        Form f = ctx.eval(e);
        if (!f.homogeneous_of_degree(0)) throw Error("expression is not a scalar polynomial");
        if (f.terms().empty()) return ScalarPoly(decl->nscalars());
        return f.terms().begin()->second;
    } catch (const LexError& e) {
        throw Error("parse error at " + std::to_string(e.diag.line) + ":" +
                    std::to_string(e.diag.col) + ": " + e.diag.message);
    }
}

}  // namespace eds::dsl
