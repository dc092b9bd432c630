// Polynomial vector fields and rational differential forms on R^n.
#pragma once

#include "folia/poly.hpp"
#include "folia/ratlog.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace folia {

class VectorField {
public:
    VectorField() = default;
    explicit VectorField(VarList vars);
    VectorField(VarList vars, std::vector<Poly> components);

    const VarList& vars() const { return vars_; }
    std::size_t dim() const { return components_.size(); }
    const Poly& operator[](std::size_t i) const { return components_[i]; }
    const std::vector<Poly>& components() const { return components_; }
    bool is_zero() const;

    VectorField operator-() const;
    friend VectorField operator+(const VectorField& a, const VectorField& b);
    friend VectorField operator-(const VectorField& a, const VectorField& b);
    friend VectorField operator*(const Poly& f, const VectorField& x);
    friend bool operator==(const VectorField& a, const VectorField& b);

    /// sum_i X^i d_i f
    Poly apply(const Poly& f) const;
    RatFunc apply(const RatFunc& f) const;
    RatLogExpr apply(const RatLogExpr& f) const;

    std::vector<Rational> evaluate(std::span<const Rational> point) const;
    std::string to_string() const;

private:
    VarList vars_;
    std::vector<Poly> components_;
};

Poly apply_vf(const VectorField& x, const Poly& f);
RatLogExpr apply_vf(const VectorField& x, const RatLogExpr& f);
/// Jacobi-Lie bracket [X, Y] = X o Y - Y o X.
VectorField lie_bracket(const VectorField& x, const VectorField& y);
/// Divergence with respect to dx1 ^ ... ^ dxn.
Poly divergence(const VectorField& x);
Rational evaluate_at(const Poly& f, std::span<const Rational> point);
std::vector<Rational> evaluate_at(const VectorField& x, std::span<const Rational> point);

/// Differential k-form; coefficients indexed by strictly increasing index words.
class DifferentialForm {
public:
    using Word = std::vector<int>;

    DifferentialForm() = default;
    DifferentialForm(VarList vars, int degree);

    /// Add c * dx_{w[0]} ^ ... ^ dx_{w[k-1]}; w need not be sorted.
    void add(Word w, const RatFunc& c);
    static DifferentialForm top(VarList vars, const RatFunc& c = RatFunc(Poly::constant(1)));

    const VarList& vars() const { return vars_; }
    int degree() const { return degree_; }
    const std::map<Word, RatFunc>& terms() const { return terms_; }
    RatFunc coefficient(const Word& sorted) const;
    bool is_zero() const { return terms_.empty(); }

    DifferentialForm operator-() const;
    friend DifferentialForm operator+(const DifferentialForm& a, const DifferentialForm& b);
    friend DifferentialForm operator-(const DifferentialForm& a, const DifferentialForm& b);
    friend DifferentialForm operator*(const RatFunc& f, const DifferentialForm& w);
    friend bool operator==(const DifferentialForm& a, const DifferentialForm& b);

    std::string to_string() const;

private:
    VarList vars_;
    int degree_ = 0;
    std::map<Word, RatFunc> terms_;
};

DifferentialForm exterior_derivative(const DifferentialForm& w);
DifferentialForm interior_product(const VectorField& x, const DifferentialForm& w);

}  // namespace folia
