#include "eds/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace eds {

ScalarPoly ScalarPoly::constant(std::uint32_t nvars, const Rational& c) {
    ScalarPoly p(nvars);
    if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
    return p;
}

ScalarPoly ScalarPoly::variable(std::uint32_t nvars, std::uint32_t index) {
    if (index >= nvars) throw std::out_of_range("variable index out of range");
    ScalarPoly p(nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.terms_[e] = Rational(1);
    return p;
}

bool ScalarPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    for (auto x : e)
        if (x) return false;
    return true;
}

Rational ScalarPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

void ScalarPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ScalarPoly ScalarPoly::operator-() const {
    ScalarPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

ScalarPoly ScalarPoly::operator+(const ScalarPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    ScalarPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

ScalarPoly ScalarPoly::operator-(const ScalarPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    ScalarPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

ScalarPoly ScalarPoly::operator*(const ScalarPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    ScalarPoly r(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(nvars_);
            for (std::uint32_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

ScalarPoly ScalarPoly::operator*(const Rational& c) const {
    ScalarPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

ScalarPoly ScalarPoly::pow(std::uint32_t k) const {
    ScalarPoly r = constant(nvars_, Rational(1));
    for (std::uint32_t i = 0; i < k; ++i) r = r * *this;
    return r;
}

ScalarPoly ScalarPoly::derivative(std::uint32_t var) const {
    if (var >= nvars_) throw std::out_of_range("variable index out of range");
    ScalarPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * Rational(e[var]));
    }
    return r;
}

Rational ScalarPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("point arity mismatch");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::uint32_t i = 0; i < nvars_; ++i) {
            for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
        }
        total += t;
    }
    return total;
}

ScalarPoly ScalarPoly::substitute(const std::map<std::uint32_t, Rational>& partial) const {
    ScalarPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Rational coeff = c;
        Exponents rest = e;
        for (const auto& [v, val] : partial) {
            for (std::uint32_t k = 0; k < e[v]; ++k) coeff *= val;
            rest[v] = 0;
        }
        r.add_term(rest, coeff);
    }
    return r;
}

ScalarPoly ScalarPoly::reindex(const std::vector<std::uint32_t>& map,
                               std::uint32_t new_nvars) const {
    if (map.size() != nvars_) throw std::invalid_argument("reindex map arity mismatch");
    ScalarPoly r(new_nvars);
    for (const auto& [e, c] : terms_) {
        Exponents ne(new_nvars, 0);
        for (std::uint32_t i = 0; i < nvars_; ++i) ne[map[i]] = e[i];
        r.add_term(ne, c);
    }
    return r;
}

std::uint32_t ScalarPoly::degree_in(const std::vector<std::uint32_t>& vars) const {
    std::uint32_t deg = 0;
    for (const auto& [e, c] : terms_) {
        std::uint32_t d = 0;
        for (auto v : vars) d += e[v];
        if (d > deg) deg = d;
    }
    return deg;
}

std::string ScalarPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = false;
        for (auto x : e)
            if (x) has_var = true;
        if (a != 1 || !has_var) os << eds::to_string(a);
        bool star = (a != 1 || !has_var) ? has_var : false;
        if (star) os << "*";
        bool first_var = true;
        for (std::uint32_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << names.at(i);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace eds
