#include "folia/ratlog.hpp"

#include <algorithm>
#include <sstream>

namespace folia {

bool PolyLess::operator()(const Poly& a, const Poly& b) const {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    GrlexGreater gt;
    auto ia = ta.begin(), ib = tb.begin();
    for (; ia != ta.end() && ib != tb.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return gt(ia->first, ib->first);
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == ta.end() && ib != tb.end();
}

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

namespace {

// Largest monomial dividing every term of p.
Exponents monomial_content(const Poly& p) {
    Exponents m;
    for (const auto& [e, c] : p.terms()) {
        if (m.empty()) {
            m = e;
            continue;
        }
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    }
    return m;
}

}  // namespace

void RatFunc::normalize() {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        num_ = Poly(common_vars(num_.vars(), den_.vars()));
        den_ = Poly::constant(1);
        return;
    }
    Poly q;
    if (num_.divides_by(den_, q)) {
        num_ = q;
        den_ = Poly::constant(1);
        return;
    }
    if (den_.divides_by(num_, q)) {
        // num/den = 1/q
        num_ = Poly(num_.vars(), 1);
        den_ = q;
    }
    if (num_.nvars() > 0 && den_.nvars() > 0) {
        Exponents mn = monomial_content(num_), md = monomial_content(den_);
        Exponents common(mn.size());
        bool any = false;
        for (std::size_t i = 0; i < mn.size(); ++i) {
            common[i] = std::min(mn[i], md[i]);
            any = any || common[i] > 0;
        }
        if (any) {
            Poly m = Poly::monomial(num_.vars(), common);
            num_.divides_by(m, num_);
            den_.divides_by(m, den_);
        }
    }
    Rational lc = den_.leading_coefficient();
    if (lc != 1) {
        num_ *= Rational(1 / lc);
        den_ *= Rational(1 / lc);
    }
    if (den_.is_constant()) {
        // den is exactly 1 after scaling.
        den_ = Poly::constant(1);
    }
}

Poly RatFunc::as_poly() const {
    if (!den_.is_constant()) throw std::domain_error("rational function is not a polynomial: " + to_string());
    return num_ * Rational(1 / den_.constant_term());
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

RatFunc RatFunc::derive(std::size_t i) const {
    if (den_.is_constant()) return RatFunc(num_.derive(i));
    return RatFunc(num_.derive(i) * den_ - num_ * den_.derive(i), den_ * den_);
}

std::string RatFunc::to_string() const {
    if (den_.is_constant()) return as_poly().to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatLogExpr RatLogExpr::log(const Poly& arg, const Rational& c) {
    RatLogExpr r;
    Rational q = c;
    q.canonicalize();
    r.add_log(arg, q);
    return r;
}

void RatLogExpr::add_log(const Poly& arg, const Rational& c) {
    if (arg.is_zero()) throw std::domain_error("logarithm of the zero polynomial");
    if (c == 0) return;
    Poly key = arg;
    Rational lc = arg.leading_coefficient();
    if (lc > 0) {
        key *= Rational(1 / lc);
        if (lc != 1) {
            Rational& slot = const_logs_[lc];
            slot += c;
            if (slot == 0) const_logs_.erase(lc);
        }
    }
    if (key.is_constant()) {
        // ln of a constant: fold into the constant part (ln 1 == 0).
        Rational k = key.constant_term();
        if (k != 1) {
            Rational& slot = const_logs_[k];
            slot += c;
            if (slot == 0) const_logs_.erase(k);
        }
        return;
    }
    Rational& slot = logs_[key];
    slot += c;
    if (slot == 0) logs_.erase(key);
}

RatLogExpr RatLogExpr::operator-() const { return Rational(-1) * *this; }

RatLogExpr operator+(const RatLogExpr& a, const RatLogExpr& b) {
    RatLogExpr r = a;
    r.rational_ = a.rational_ + b.rational_;
    for (const auto& [p, c] : b.logs_) r.add_log(p, c);
    for (const auto& [k, c] : b.const_logs_) {
        Rational& slot = r.const_logs_[k];
        slot += c;
        if (slot == 0) r.const_logs_.erase(k);
    }
    return r;
}

RatLogExpr operator*(const Rational& c, const RatLogExpr& a) {
    RatLogExpr r;
    r.rational_ = RatFunc(Poly::constant(c)) * a.rational_;
    if (c == 0) return r;
    for (const auto& [p, v] : a.logs_) r.logs_[p] = v * c;
    for (const auto& [k, v] : a.const_logs_) r.const_logs_[k] = v * c;
    return r;
}

bool operator==(const RatLogExpr& a, const RatLogExpr& b) {
    if (!(a.rational_ == b.rational_)) return false;
    if (a.const_logs_ != b.const_logs_) return false;
    if (a.logs_.size() != b.logs_.size()) return false;
    auto ia = a.logs_.begin();
    for (auto ib = b.logs_.begin(); ib != b.logs_.end(); ++ia, ++ib)
        if (!(ia->first == ib->first) || ia->second != ib->second) return false;
    return true;
}

RatLogExpr RatLogExpr::derive(std::size_t i) const {
    RatFunc d = rational_.derive(i);
    for (const auto& [p, c] : logs_) d = d + RatFunc(p.derive(i) * c, p);
    return RatLogExpr(d);
}

std::string RatLogExpr::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (!rational_.is_zero() || !has_logs()) {
        os << rational_.to_string();
        first = false;
    }
    auto emit = [&](const Rational& c, const std::string& arg) {
        Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1) os << rational_to_string(mag) << "*";
        os << "ln(" << arg << ")";
    };
    for (const auto& [k, c] : const_logs_) emit(c, rational_to_string(k));
    for (const auto& [p, c] : logs_) emit(c, p.to_string());
    return os.str();
}

}  // namespace folia
