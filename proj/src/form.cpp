#include "eds/form.hpp"

#include <algorithm>
#include <sstream>

namespace eds {

std::string block_name(Block b) {
    switch (b) {
        case Block::theta: return "theta";
        case Block::omega: return "omega";
        case Block::pi: return "pi";
        case Block::other: return "other";
    }
    return "?";
}

CoframeDecl::CoframeDecl(std::vector<std::string> names_, std::vector<Block> blocks_,
                         std::vector<std::string> scalars_)
    : names(std::move(names_)), blocks(std::move(blocks_)), scalars(std::move(scalars_)) {
    if (names.size() != blocks.size())
        throw std::invalid_argument("coframe names/blocks length mismatch");
    for (std::uint32_t i = 0; i < names.size(); ++i) {
        if (!name_index.emplace(names[i], i).second)
            throw std::invalid_argument("duplicate coframe symbol '" + names[i] + "'");
    }
    for (std::uint32_t i = 0; i < scalars.size(); ++i) {
        if (name_index.count(scalars[i]))
            throw std::invalid_argument("scalar '" + scalars[i] + "' collides with a coframe symbol");
        if (!scalar_index.emplace(scalars[i], i).second)
            throw std::invalid_argument("duplicate scalar variable '" + scalars[i] + "'");
    }
}

std::vector<std::uint32_t> CoframeDecl::block_indices(Block b) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < names.size(); ++i)
        if (blocks[i] == b) out.push_back(i);
    return out;
}

CoframePtr make_coframe(std::vector<std::string> names, std::vector<Block> blocks,
                        std::vector<std::string> scalars) {
    return std::make_shared<const CoframeDecl>(std::move(names), std::move(blocks),
                                               std::move(scalars));
}

Form Form::scalar(CoframePtr decl, ScalarPoly c) {
    Form f(std::move(decl));
    if (!c.is_zero()) f.terms_[{}] = std::move(c);
    return f;
}

Form Form::symbol(CoframePtr decl, std::uint32_t index) {
    Form f(decl);
    if (index >= decl->size()) throw std::out_of_range("coframe index out of range");
    f.terms_[{index}] = ScalarPoly::constant(decl->nscalars(), Rational(1));
    return f;
}

Form Form::monomial(CoframePtr decl, std::vector<std::uint32_t> indices, ScalarPoly c) {
    Form f(decl);
    f.add_unsorted(std::move(indices), std::move(c));
    return f;
}

std::optional<std::uint32_t> Form::degree() const {
    std::optional<std::uint32_t> d;
    for (const auto& [idx, c] : terms_) {
        if (!d)
            d = static_cast<std::uint32_t>(idx.size());
        else if (*d != idx.size())
            return std::nullopt;
    }
    return d;
}

bool Form::homogeneous_of_degree(std::uint32_t d) const {
    for (const auto& [idx, c] : terms_)
        if (idx.size() != d) return false;
    return true;
}

std::uint32_t Form::max_degree() const {
    std::uint32_t d = 0;
    for (const auto& [idx, c] : terms_) d = std::max<std::uint32_t>(d, idx.size());
    return d;
}

void Form::add_term(const IndexTuple& sorted, const ScalarPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(sorted);
    if (it == terms_.end()) {
        terms_.emplace(sorted, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Form::add_unsorted(std::vector<std::uint32_t> idx, ScalarPoly c) {
    if (c.is_zero()) return;
    // insertion sort, tracking the sign of the permutation
    bool negative = false;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        for (std::size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
            std::swap(idx[j], idx[j - 1]);
            negative = !negative;
        }
    }
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return;  // repeated symbol wedges to zero
    add_term(idx, negative ? -c : c);
}

void Form::check_compatible(const Form& o) const {
    if (!compatible(decl_, o.decl_))
        throw DeclarationMismatchError("forms built over different coframe declarations");
}

Form Form::operator-() const {
    Form r(decl_);
    for (const auto& [idx, c] : terms_) r.terms_[idx] = -c;
    return r;
}

Form Form::operator+(const Form& o) const {
    check_compatible(o);
    Form r = *this;
    for (const auto& [idx, c] : o.terms_) r.add_term(idx, c);
    return r;
}

Form Form::operator-(const Form& o) const {
    check_compatible(o);
    Form r = *this;
    for (const auto& [idx, c] : o.terms_) r.add_term(idx, -c);
    return r;
}

Form Form::operator*(const ScalarPoly& c) const {
    Form r(decl_);
    for (const auto& [idx, k] : terms_) {
        ScalarPoly p = k * c;
        if (!p.is_zero()) r.terms_[idx] = std::move(p);
    }
    return r;
}

Form Form::operator*(const Rational& c) const {
    return *this * ScalarPoly::constant(decl_ ? decl_->nscalars() : 0, c);
}

bool Form::operator==(const Form& o) const {
    if (!compatible(decl_, o.decl_)) return false;
    return terms_ == o.terms_;
}

std::string Form::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_string(decl_->scalars);
        bool simple = (cs == "1") && !idx.empty();
        if (!simple) os << "(" << cs << ")";
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (k > 0 || !simple) os << (k > 0 ? "/\\" : "*");
            os << decl_->names[idx[k]];
        }
    }
    return os.str();
}

Form wedge(const Form& a, const Form& b) {
    if (!compatible(a.decl(), b.decl()))
        throw DeclarationMismatchError("wedge of forms over different coframe declarations");
    Form r(a.decl() ? a.decl() : b.decl());
    for (const auto& [ia, ca] : a.terms()) {
        for (const auto& [ib, cb] : b.terms()) {
            std::vector<std::uint32_t> idx;
            idx.reserve(ia.size() + ib.size());
            idx.insert(idx.end(), ia.begin(), ia.end());
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add_unsorted(std::move(idx), ca * cb);
        }
    }
    return r;
}

Form interior_product(const std::vector<ScalarPoly>& v, const Form& a) {
    if (a.decl() && v.size() != a.decl()->size())
        throw DeclarationMismatchError("contraction vector length != coframe size");
    Form r(a.decl());
    for (const auto& [idx, c] : a.terms()) {
        for (std::size_t k = 0; k < idx.size(); ++k) {
            const ScalarPoly& vk = v[idx[k]];
            if (vk.is_zero()) continue;
            IndexTuple rest;
            rest.reserve(idx.size() - 1);
            for (std::size_t m = 0; m < idx.size(); ++m)
                if (m != k) rest.push_back(idx[m]);
            ScalarPoly coeff = c * vk;
            if (k % 2 == 1) coeff = -coeff;
            r.add_term(rest, coeff);
        }
    }
    return r;
}

Form interior_product(const std::vector<Rational>& v, const Form& a) {
    std::uint32_t nv = a.decl() ? a.decl()->nscalars() : 0;
    std::vector<ScalarPoly> vp;
    vp.reserve(v.size());
    for (const auto& q : v) vp.push_back(ScalarPoly::constant(nv, q));
    return interior_product(vp, a);
}

Form evaluate(const Form& a, const std::map<std::uint32_t, Rational>& point) {
    Form r(a.decl());
    const auto& names = a.decl()->scalars;
    for (const auto& [idx, c] : a.terms()) {
        for (const auto& [e, coef] : c.terms()) {
            for (std::uint32_t i = 0; i < e.size(); ++i)
                if (e[i] > 0 && !point.count(i)) throw MissingAssignmentError(names[i]);
        }
        ScalarPoly sub = c.substitute(point);
        r.add_term(idx, sub);
    }
    return r;
}

}  // namespace eds
