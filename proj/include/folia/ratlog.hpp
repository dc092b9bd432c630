// Rational functions and rational-plus-logarithm expressions.
#pragma once

#include "folia/poly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace folia {

/// Total order on polynomials (by term sequence) for use as map keys.
struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const;
};

/// num/den with den != 0. Normalized so den has leading coefficient 1 and
/// a polynomial quotient is taken whenever den divides num exactly.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::constant(1)) {}
    RatFunc(Poly num);  // NOLINT: polynomials are rational functions
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// The polynomial value; throws if the denominator is not constant.
    Poly as_poly() const;

    RatFunc operator-() const { return RatFunc(-num_, den_); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    /// Equality by cross-multiplication.
    friend bool operator==(const RatFunc& a, const RatFunc& b);

    RatFunc derive(std::size_t i) const;
    std::string to_string() const;

private:
    void normalize();
    Poly num_;
    Poly den_;
};

/// rational part + sum of c_k * ln(P_k).
///
/// Log arguments are stored normalized: an argument c*P with c a positive
/// rational and P of leading coefficient 1 is split into ln c + ln P, the
/// ln c part kept as a separate constant term. Arguments with negative
/// leading coefficient are kept as given.
class RatLogExpr {
public:
    RatLogExpr() = default;
    RatLogExpr(RatFunc r) : rational_(std::move(r)) {}  // NOLINT
    RatLogExpr(Poly p) : rational_(std::move(p)) {}     // NOLINT

    /// c * ln(arg). arg must be a nonzero polynomial.
    static RatLogExpr log(const Poly& arg, const Rational& c = 1);

    const RatFunc& rational() const { return rational_; }
    const std::map<Poly, Rational, PolyLess>& logs() const { return logs_; }
    const std::map<Rational, Rational>& const_logs() const { return const_logs_; }
    bool has_logs() const { return !logs_.empty() || !const_logs_.empty(); }
    bool is_zero() const { return rational_.is_zero() && !has_logs(); }

    RatLogExpr operator-() const;
    friend RatLogExpr operator+(const RatLogExpr& a, const RatLogExpr& b);
    friend RatLogExpr operator-(const RatLogExpr& a, const RatLogExpr& b) { return a + (-b); }
    /// Scale by a constant. Multiplying logs by non-constants leaves the grammar.
    friend RatLogExpr operator*(const Rational& c, const RatLogExpr& a);
    friend bool operator==(const RatLogExpr& a, const RatLogExpr& b);

    /// Formal partial derivative; d(c ln P) = c (dP)/P. The result is log-free.
    RatLogExpr derive(std::size_t i) const;
    std::string to_string() const;

private:
    void add_log(const Poly& arg, const Rational& c);
    RatFunc rational_;
    std::map<Poly, Rational, PolyLess> logs_;
    std::map<Rational, Rational> const_logs_;
};

}  // namespace folia
