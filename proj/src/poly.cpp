#include "folia/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace folia {

VarList make_vars(std::vector<std::string> names) {
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw std::invalid_argument("duplicate variable name '" + names[i] + "'");
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarList default_vars(std::size_t n, bool alias) {
    std::vector<std::string> names;
    if (alias && n <= 3) {
        static const char* xyz[] = {"x", "y", "z"};
        for (std::size_t i = 0; i < n; ++i) names.emplace_back(xyz[i]);
    } else {
        for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    }
    return make_vars(std::move(names));
}

bool same_vars(const VarList& a, const VarList& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

VarList common_vars(const VarList& a, const VarList& b) {
    if (!a) return b;
    if (!b) return a;
    if (!same_vars(a, b)) throw IncompatibleVariables("polynomials live in different variable lists");
    return a;
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly::Poly(VarList vars, const Rational& c) : vars_(std::move(vars)) {
    if (c != 0) terms_.emplace(Exponents(nvars(), 0), c);
}

Poly Poly::constant(const Rational& c) { return Poly(nullptr, c); }

Poly Poly::variable(VarList vars, std::size_t i) {
    Exponents e(vars->size(), 0);
    if (i >= e.size()) throw std::out_of_range("variable index out of range");
    e[i] = 1;
    return monomial(std::move(vars), std::move(e));
}

Poly Poly::monomial(VarList vars, Exponents e, const Rational& c) {
    Poly p(std::move(vars));
    if (e.size() != p.nvars()) throw std::invalid_argument("exponent vector length mismatch");
    p.add_term(e, c);
    return p;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

// A context-free constant is re-keyed to this ring's zero exponent vector.
void Poly::adopt(const Poly& o) {
    VarList v = common_vars(vars_, o.vars_);
    if (v == vars_) return;
    vars_ = v;
    TermMap old = std::move(terms_);
    terms_.clear();
    for (auto& [e, c] : old) terms_.emplace(Exponents(nvars(), 0), c);
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && degree() == 0);
}

Rational Poly::constant_term() const {
    for (const auto& [e, c] : terms_)
        if (std::all_of(e.begin(), e.end(), [](int k) { return k == 0; })) return c;
    return 0;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

int Poly::homogeneous_degree() const {
    if (terms_.empty()) return -1;
    const int d = degree();
    const auto& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0) == d ? d : -2;
}

Rational Poly::leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    Poly other = o;
    adopt(other);
    other.adopt(*this);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
    Poly lhs = a, rhs = b;
    lhs.adopt(rhs);
    rhs.adopt(lhs);
    Poly r(lhs.vars_);
    Exponents e(r.nvars());
    for (const auto& [ea, ca] : lhs.terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (a.terms_.empty()) return true;
    if (a.vars_ && b.vars_ && !same_vars(a.vars_, b.vars_)) return false;
    if (!a.vars_ || !b.vars_) {
        // One side is a context-free constant.
        return a.is_constant() && b.is_constant() && a.constant_term() == b.constant_term();
    }
    return a.terms_ == b.terms_;
}

Poly Poly::pow(unsigned k) const {
    Poly r(vars_, 1);
    Poly base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return r;
}

Poly Poly::derive(std::size_t i) const {
    Poly r(vars_);
    if (!vars_) return r;
    if (i >= nvars()) throw std::out_of_range("derivative index out of range");
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents f = e;
        f[i] -= 1;
        r.add_term(f, c * e[i]);
    }
    return r;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
    if (vars_ && point.size() != nvars())
        throw std::invalid_argument("evaluation point has wrong dimension");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        sum += t;
    }
    return sum;
}

Poly Poly::embed(const VarList& target) const {
    Poly r(target);
    std::vector<std::size_t> map(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
        auto it = std::find(target->begin(), target->end(), (*vars_)[i]);
        if (it == target->end())
            throw IncompatibleVariables("variable '" + (*vars_)[i] + "' missing from target list");
        map[i] = static_cast<std::size_t>(it - target->begin());
    }
    for (const auto& [e, c] : terms_) {
        Exponents f(target->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) f[map[i]] += e[i];
        r.add_term(f, c);
    }
    return r;
}

bool Poly::divides_by(const Poly& d, Poly& quotient) const {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    Poly r = *this;
    r.adopt(d);
    Poly dd = d;
    dd.adopt(r);
    Poly q(r.vars_);
    const auto& [lead_e, lead_c] = *dd.terms_.begin();
    while (!r.is_zero()) {
        const auto& [e, c] = *r.terms_.begin();
        Exponents f(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            f[i] = e[i] - lead_e[i];
            if (f[i] < 0) return false;
        }
        Poly t = Poly::monomial(r.vars_, f, c / lead_c);
        q += t;
        r -= t * dd;
    }
    quotient = q;
    return true;
}

std::string rational_to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
        bool wrote = false;
        if (mag != 1 || unit) {
            os << rational_to_string(mag);
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << (*vars_)[i];
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

std::vector<Exponents> monomials_of_degree(std::size_t n, int d) {
    std::vector<Exponents> out;
    if (d < 0) return out;
    if (n == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    Exponents e(n, 0);
    // Enumerate compositions of d into n parts in grlex-descending order.
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == n) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, d);
    return out;
}

std::vector<Exponents> monomials_up_to(std::size_t n, int d) {
    std::vector<Exponents> out;
    for (int k = d; k >= 0; --k) {
        auto m = monomials_of_degree(n, k);
        out.insert(out.end(), m.begin(), m.end());
    }
    return out;
}

}  // namespace folia
