// Lie n-algebroids with polynomial structure data.
//
// Sections are homogeneous: a Section lives at one level i (degree -i) and
// carries one polynomial coefficient per constant basis element there.
// l1 and l3 are C-infinity multilinear; l2 obeys the Leibniz rule
//   l2(a, f b) = f l2(a, b) + rho(a)[f] b   for a in E_0,
// and vanishes on function coefficients otherwise. Bracket tables are
// partial: a block of entries is either declared (absent entries are zero),
// structurally zero (its output level does not exist), or missing.
#pragma once

#include "folia/fields.hpp"
#include "folia/graded.hpp"

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace folia {

class MissingBracket : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Section {
    int level = 0;
    std::vector<Poly> coeffs;  // empty means the zero section

    static Section zero(int level) { return Section{level, {}}; }
    bool is_zero() const;
    std::string to_string(const class LieNAlgebroid& a) const;

    Section& operator+=(const Section& o);
    friend Section operator+(Section a, const Section& b) { return a += b; }
    friend Section operator*(const Poly& f, const Section& s);
    friend Section operator-(const Section& s) { return Poly::constant(-1) * s; }
};

class LieNAlgebroid {
public:
    LieNAlgebroid(VarList vars, GradedBundle bundle);

    const VarList& vars() const { return vars_; }
    const GradedBundle& bundle() const { return bundle_; }
    int depth() const { return bundle_.depth(); }
    int rank(int level) const { return bundle_.rank(level); }

    Section basis(BasisRef b) const;
    Section basis(int level, int index) const { return basis({level, index}); }
    Section make_section(int level, std::vector<Poly> coeffs) const;

    void set_anchor(int index, VectorField x);
    /// l1(e^{(level)}_index), a section at level - 1. level >= 1.
    void set_differential(int level, int index, Section image);
    /// Stores l2(a, b) and, by graded antisymmetry, l2(b, a).
    void set_l2(BasisRef a, BasisRef b, Section value);
    void set_l3(BasisRef a, BasisRef b, BasisRef c, Section value);
    void declare_l2(int la, int lb);
    void declare_l3(int la, int lb, int lc);

    const VectorField& anchor(int index) const { return anchor_.at(index); }
    const Section& differential(int level, int index) const { return differential_.at(level).at(index); }

    /// Declared, or structurally zero.
    bool l2_known(int la, int lb) const;
    bool l3_known(int la, int lb, int lc) const;
    bool l2_declared(int la, int lb) const;
    bool l3_declared(int la, int lb, int lc) const;
    const std::map<std::pair<BasisRef, BasisRef>, Section>& l2_entries() const { return l2_; }
    const std::map<std::array<BasisRef, 3>, Section>& l3_entries() const { return l3_; }
    const std::set<std::pair<int, int>>& l2_declared_blocks() const { return l2_blocks_; }
    const std::set<std::array<int, 3>>& l3_declared_blocks() const { return l3_blocks_; }

    /// Brackets on constant basis elements. Throw MissingBracket when undeclared.
    Section l2(BasisRef a, BasisRef b) const;
    Section l3(BasisRef a, BasisRef b, BasisRef c) const;

    VectorField rho(const Section& s) const;
    Section l1(const Section& s) const;
    Section l2(const Section& a, const Section& b) const;
    Section l3(const Section& a, const Section& b, const Section& c) const;
    /// l_k for k in {1, 2, 3}; higher brackets are not modelled.
    Section bracket(const std::vector<Section>& args) const;

    /// Human-readable basis label.
    std::string label(BasisRef b) const { return bundle_.label(b.level, b.index); }
    std::vector<BasisRef> basis_refs(int level) const;
    std::vector<BasisRef> all_basis_refs() const;

private:
    void check_section(const Section& s, int expected_level) const;

    VarList vars_;
    GradedBundle bundle_;
    std::vector<VectorField> anchor_;
    std::vector<std::vector<Section>> differential_;  // indexed [level][index], level 0 unused
    std::map<std::pair<BasisRef, BasisRef>, Section> l2_;
    std::map<std::array<BasisRef, 3>, Section> l3_;
    std::set<std::pair<int, int>> l2_blocks_;
    std::set<std::array<int, 3>> l3_blocks_;
};

/// Output degree of l_k on arguments of the given total degree (l_k has degree 2 - k).
inline int bracket_output_degree(int arity, int total_input_degree) { return total_input_degree + 2 - arity; }

// ---- verification -------------------------------------------------------

struct Unchecked {
    std::string missing;
};
using JacobiResult = std::variant<Section, Unchecked>;

/// Left-hand side of the k-th higher Jacobi identity (k in 1..3) on a tuple of
/// basis elements. A zero Section means the identity holds on this tuple.
JacobiResult jacobi_residual(const LieNAlgebroid& a, const std::vector<BasisRef>& tuple);

/// rho(l2(a, b)) - [rho(a), rho(b)], for a, b in E_0.
VectorField anchor_morphism_check(const LieNAlgebroid& a, BasisRef x, BasisRef y);

struct Failure {
    std::string where;
    std::string residual;
};

struct ComplexReport {
    bool pass = true;
    std::vector<Failure> failures;
};
/// l1 o l1 = 0 and rho o l1 = 0 on every basis element.
ComplexReport complex_check(const LieNAlgebroid& a);

struct AnchorReport {
    bool pass = true;
    int checked = 0;
    std::vector<Failure> failures;
    std::vector<std::string> unchecked;
};
AnchorReport anchor_morphism_sweep(const LieNAlgebroid& a);

struct JacobiReport {
    bool pass = true;
    int checked = 0;
    std::vector<Failure> failures;
    /// Level blocks skipped because some bracket they need is not declared.
    std::vector<std::string> unchecked_blocks;
    int unchecked_tuples = 0;
};
/// Sweeps all tuples a <= b (<= c) for k = 2 and k = 3 (plus k = 1 on levels >= 2).
JacobiReport jacobi_sweep(const LieNAlgebroid& a, int max_arity = 3);

class NonHomogeneous : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SliceEntry {
    int level = 0;  // position E_{-level}
    int degree = 0; // coefficient degree of the slice
    std::size_t kernel_dim = 0;
    std::size_t image_dim = 0;
    bool exact() const { return kernel_dim == image_dim; }
};

struct SliceReport {
    int bound = 0;
    std::vector<SliceEntry> entries;
    bool exact_at(int level) const;
    bool exact() const;
};

/// Compares, on each polynomial-degree slice d <= bound, the kernel of the
/// outgoing map (rho at level 0, l1 otherwise) with the image of the incoming
/// l1. Every map must be homogeneous (all nonzero entries of one degree).
SliceReport sliced_exactness(const LieNAlgebroid& a, int bound);

// ---- forms of form-degree 0 and 1 ----------------------------------------

/// A 1-form supported on E_0^*: one value per degree-0 basis element.
struct EOneForm {
    std::vector<Poly> values;
    Poly operator()(const Section& s) const;
};

/// d_E f (a) = rho(a)[f].
EOneForm d_function(const LieNAlgebroid& a, const Poly& f);
/// u -> theta(l1(u)) for u in E_{-1}; empty when depth == 1.
std::vector<Poly> d0_on_oneform(const LieNAlgebroid& a, const EOneForm& theta);
/// rho(x)[theta(y)] - rho(y)[theta(x)] - theta(l2(x, y)).
Poly d1_on_oneform(const LieNAlgebroid& a, const EOneForm& theta, BasisRef x, BasisRef y);

/// A degree-0 section s with rho(s) = x and coefficients of degree <= bound,
/// searching bounds 0..bound in turn; nullopt if none exists within the bound.
std::optional<Section> lift_vector_field(const LieNAlgebroid& a, const VectorField& x, int bound);

}  // namespace folia
