#include "folia/fields.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace folia {

VectorField::VectorField(VarList vars) : vars_(std::move(vars)) {
    components_.assign(vars_->size(), Poly(vars_));
}

VectorField::VectorField(VarList vars, std::vector<Poly> components)
    : vars_(std::move(vars)), components_(std::move(components)) {
    if (components_.size() != vars_->size())
        throw std::invalid_argument("vector field needs one component per variable");
    for (auto& c : components_) c = c + Poly(vars_);
}

bool VectorField::is_zero() const {
    return std::all_of(components_.begin(), components_.end(), [](const Poly& p) { return p.is_zero(); });
}

VectorField VectorField::operator-() const {
    VectorField r = *this;
    for (auto& c : r.components_) c = -c;
    return r;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
    if (!same_vars(a.vars_, b.vars_)) throw IncompatibleVariables("vector fields on different spaces");
    VectorField r = a;
    for (std::size_t i = 0; i < r.components_.size(); ++i) r.components_[i] += b.components_[i];
    return r;
}

VectorField operator-(const VectorField& a, const VectorField& b) { return a + (-b); }

VectorField operator*(const Poly& f, const VectorField& x) {
    VectorField r = x;
    for (auto& c : r.components_) c = f * c;
    return r;
}

bool operator==(const VectorField& a, const VectorField& b) {
    return same_vars(a.vars_, b.vars_) && a.components_ == b.components_;
}

Poly VectorField::apply(const Poly& f) const {
    Poly r(vars_);
    for (std::size_t i = 0; i < components_.size(); ++i)
        if (!components_[i].is_zero()) r += components_[i] * f.derive(i);
    return r;
}

RatFunc VectorField::apply(const RatFunc& f) const {
    if (f.is_polynomial()) return RatFunc(apply(f.as_poly()));
    // X(N/D) = (X(N) D - N X(D)) / D^2
    return RatFunc(apply(f.num()) * f.den() - f.num() * apply(f.den()), f.den() * f.den());
}

RatLogExpr VectorField::apply(const RatLogExpr& f) const {
    RatFunc r = apply(f.rational());
    for (const auto& [p, c] : f.logs()) r = r + RatFunc(apply(p) * c, p);
    return RatLogExpr(r);
}

std::vector<Rational> VectorField::evaluate(std::span<const Rational> point) const {
    std::vector<Rational> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(c.evaluate(point));
    return out;
}

std::string VectorField::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (components_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << components_[i].to_string() << ")*d/d" << (*vars_)[i];
    }
    if (first) os << "0";
    return os.str();
}

Poly apply_vf(const VectorField& x, const Poly& f) { return x.apply(f); }
RatLogExpr apply_vf(const VectorField& x, const RatLogExpr& f) { return x.apply(f); }

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
    if (!same_vars(x.vars(), y.vars())) throw IncompatibleVariables("vector fields on different spaces");
    std::vector<Poly> comps;
    comps.reserve(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) comps.push_back(x.apply(y[i]) - y.apply(x[i]));
    return VectorField(x.vars(), std::move(comps));
}

Poly divergence(const VectorField& x) {
    Poly r(x.vars());
    for (std::size_t i = 0; i < x.dim(); ++i) r += x[i].derive(i);
    return r;
}

Rational evaluate_at(const Poly& f, std::span<const Rational> point) { return f.evaluate(point); }

std::vector<Rational> evaluate_at(const VectorField& x, std::span<const Rational> point) {
    if (point.size() != x.dim()) throw std::invalid_argument("evaluation point has wrong dimension");
    return x.evaluate(point);
}

DifferentialForm::DifferentialForm(VarList vars, int degree) : vars_(std::move(vars)), degree_(degree) {
    if (degree < 0 || static_cast<std::size_t>(degree) > vars_->size())
        throw std::invalid_argument("form degree out of range");
}

DifferentialForm DifferentialForm::top(VarList vars, const RatFunc& c) {
    const int n = static_cast<int>(vars->size());
    DifferentialForm w(vars, n);
    Word all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    w.add(all, c);
    return w;
}

void DifferentialForm::add(Word w, const RatFunc& c) {
    if (static_cast<int>(w.size()) != degree_) throw std::invalid_argument("word length differs from form degree");
    if (c.is_zero()) return;
    // Bubble sort, tracking the sign; repeated indices give zero.
    int sign = 1;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j + 1 < w.size() - i; ++j) {
            if (w[j] == w[j + 1]) return;
            if (w[j] > w[j + 1]) {
                std::swap(w[j], w[j + 1]);
                sign = -sign;
            }
        }
    for (std::size_t j = 0; j + 1 < w.size(); ++j)
        if (w[j] == w[j + 1]) return;
    for (int k : w)
        if (k < 0 || static_cast<std::size_t>(k) >= vars_->size())
            throw std::out_of_range("form index out of range");
    RatFunc v = sign > 0 ? c : -c;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(std::move(w), v);
        return;
    }
    it->second = it->second + v;
    if (it->second.is_zero()) terms_.erase(it);
}

RatFunc DifferentialForm::coefficient(const Word& sorted) const {
    auto it = terms_.find(sorted);
    return it == terms_.end() ? RatFunc() : it->second;
}

DifferentialForm DifferentialForm::operator-() const {
    DifferentialForm r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

DifferentialForm operator+(const DifferentialForm& a, const DifferentialForm& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("adding forms of different degree");
    if (!same_vars(a.vars_, b.vars_)) throw IncompatibleVariables("forms on different spaces");
    DifferentialForm r = a;
    for (const auto& [w, c] : b.terms_) r.add(w, c);
    return r;
}

DifferentialForm operator-(const DifferentialForm& a, const DifferentialForm& b) { return a + (-b); }

DifferentialForm operator*(const RatFunc& f, const DifferentialForm& w) {
    DifferentialForm r(w.vars_, w.degree_);
    for (const auto& [word, c] : w.terms_) r.add(word, f * c);
    return r;
}

bool operator==(const DifferentialForm& a, const DifferentialForm& b) {
    if (a.degree_ != b.degree_ || a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
}

std::string DifferentialForm::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (std::size_t i = 0; i < w.size(); ++i) os << (i == 0 ? "*" : "^") << "d" << (*vars_)[w[i]];
    }
    return os.str();
}

DifferentialForm exterior_derivative(const DifferentialForm& w) {
    const int n = static_cast<int>(w.vars()->size());
    if (w.degree() >= n) throw std::domain_error("exterior derivative of a top-degree form");
    DifferentialForm r(w.vars(), w.degree() + 1);
    for (const auto& [word, c] : w.terms())
        for (int j = 0; j < n; ++j) {
            RatFunc dc = c.derive(static_cast<std::size_t>(j));
            if (dc.is_zero()) continue;
            DifferentialForm::Word v;
            v.reserve(word.size() + 1);
            v.push_back(j);
            v.insert(v.end(), word.begin(), word.end());
            r.add(std::move(v), dc);
        }
    return r;
}

DifferentialForm interior_product(const VectorField& x, const DifferentialForm& w) {
    if (w.degree() < 1) throw std::invalid_argument("interior product needs a form of degree >= 1");
    if (!same_vars(x.vars(), w.vars())) throw IncompatibleVariables("vector field and form on different spaces");
    DifferentialForm r(w.vars(), w.degree() - 1);
    for (const auto& [word, c] : w.terms())
        for (std::size_t l = 0; l < word.size(); ++l) {
            const Poly& xi = x[static_cast<std::size_t>(word[l])];
            if (xi.is_zero()) continue;
            DifferentialForm::Word v;
            for (std::size_t m = 0; m < word.size(); ++m)
                if (m != l) v.push_back(word[m]);
            RatFunc coeff = RatFunc(xi) * c;
            r.add(std::move(v), (l % 2 == 0) ? coeff : -coeff);
        }
    return r;
}

}  // namespace folia
