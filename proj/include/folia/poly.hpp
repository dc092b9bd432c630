// Exact multivariate polynomials over Q in named variables.
//
// Terms are kept in a map ordered by graded-lex (descending), so iteration
// order is the canonical print order and equality is structural.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace folia {

using Rational = mpq_class;

/// p/q in lowest terms (mpq_class(p, q) is not canonicalized).
inline Rational ratio(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_vars(std::vector<std::string> names);
/// x1..xn, or x,y,z when alias is set and n <= 3.
VarList default_vars(std::size_t n, bool alias = false);
bool same_vars(const VarList& a, const VarList& b);

using Exponents = std::vector<int>;

/// Graded lex: higher total degree first, then lex with x1 > x2 > ...
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class IncompatibleVariables : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Poly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexGreater>;

    Poly() = default;
    explicit Poly(VarList vars) : vars_(std::move(vars)) {}
    Poly(VarList vars, const Rational& c);
    /// A constant with no variable context; it adapts to any ring in arithmetic.
    static Poly constant(const Rational& c);
    static Poly variable(VarList vars, std::size_t i);
    static Poly monomial(VarList vars, Exponents e, const Rational& c = 1);

    const VarList& vars() const { return vars_; }
    std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    /// Maximum total degree; -1 for the zero polynomial.
    int degree() const;
    /// Total degree if every term has the same degree, -1 for zero, -2 otherwise.
    int homogeneous_degree() const;
    /// Leading coefficient in grlex order (zero for the zero polynomial).
    Rational leading_coefficient() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b);

    Poly pow(unsigned k) const;
    Poly derive(std::size_t i) const;
    Rational evaluate(std::span<const Rational> point) const;
    /// Re-express in a larger variable list containing all current names.
    Poly embed(const VarList& target) const;
    /// Exact quotient if `d` divides this polynomial, otherwise nullopt-like false.
    bool divides_by(const Poly& d, Poly& quotient) const;

    /// Canonical graded-lex text, e.g. "x^2*y - 3/2*x + 1".
    std::string to_string() const;

    void add_term(const Exponents& e, const Rational& c);

private:
    void adopt(const Poly& o);

    VarList vars_;
    TermMap terms_;
};

std::string rational_to_string(const Rational& q);

/// Adopt a common variable context for a binary operation, or throw.
VarList common_vars(const VarList& a, const VarList& b);

/// All exponent vectors in n variables of total degree exactly d (grlex descending).
std::vector<Exponents> monomials_of_degree(std::size_t n, int d);
/// All exponent vectors of total degree <= d.
std::vector<Exponents> monomials_up_to(std::size_t n, int d);

}  // namespace folia
