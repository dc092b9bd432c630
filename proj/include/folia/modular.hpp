// Modular 1-form of a Lie n-algebroid, closedness, and exactness verdicts.
//
// With Omega the constant wedge of all basis elements tensored with the
// standard volume form,
//   theta(a) = div(rho(a)) + sum_i (-1)^i tr(b -> l2(a, b) on E_{-i}).
#pragma once

#include "folia/algebroid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace folia {

/// Matrix of b -> l2(a, b) on level i in the constant basis: m[row][col] is the
/// coefficient of basis element `row` in l2(a, e_col).
std::vector<std::vector<Poly>> adjoint_matrix(const LieNAlgebroid& A, int a, int level);
/// Trace of adjoint_matrix. Throws MissingBracket if l2(E_0, E_{-level}) is undeclared.
Poly adjoint_trace(const LieNAlgebroid& A, int a, int level);
/// sum_i (-1)^i tr([ad_a, ad_b] on E_{-i}).
Poly supertrace_of_commutator(const LieNAlgebroid& A, int a, int b);

struct BerezinianDescriptor {
    bool depth_even = false;
    std::vector<std::string> factors;  // top powers: T*M, E_0, (E_-1)*, E_-2, ...
    std::vector<int> weights;          // sign attached to each level's trace
};
BerezinianDescriptor berezinian(const LieNAlgebroid& A);

struct ModularOneForm {
    std::vector<Poly> values;
    std::vector<Poly> divergences;           // div(rho(e_a))
    std::vector<std::vector<Poly>> traces;   // traces[a][i] = tr(ad_a on E_{-i}), unsigned
    std::string provenance;

    EOneForm form() const { return EOneForm{values}; }
};

ModularOneForm modular_one_form(const LieNAlgebroid& A);

struct ClosednessReport {
    bool pass = true;
    int d0_checked = 0;
    int d1_checked = 0;
    std::vector<Failure> failures;
    std::vector<std::string> unchecked;
};
ClosednessReport closedness_check(const LieNAlgebroid& A, const EOneForm& theta);

/// A polynomial g of degree <= bound with rho(a)[g] = theta(a) for every basis a.
std::optional<Poly> exactness_search(const LieNAlgebroid& A, const EOneForm& theta, int bound);

struct Obstruction {
    bool obstructed = false;
    std::vector<Rational> point;
    int basis_index = -1;  // a basis element with theta nonzero at the point
    Rational value;
};
Obstruction origin_obstruction(const LieNAlgebroid& A, const EOneForm& theta, const std::vector<Rational>& point);

struct WitnessCheck {
    bool pass = true;
    std::vector<RatLogExpr> residuals;  // rho(a)[g] - theta(a), per basis element
};
WitnessCheck verify_witness(const LieNAlgebroid& A, const EOneForm& theta, const RatLogExpr& g);

/// theta_{f Omega}(a) = (rho(a)[f] + f theta(a)) / f.
std::vector<RatFunc> scaled_modular_form(const LieNAlgebroid& A, const EOneForm& theta, const Poly& f);
/// theta_{f Omega} - theta_Omega == d_E ln|f|, as rational-log identities.
bool scaling_invariance_holds(const LieNAlgebroid& A, const EOneForm& theta, const Poly& f);

enum class Verdict { ExactWithWitness, NotExactNear, InconclusiveAtBound };
enum class Unimodular { Yes, No, Unknown };

struct ExactnessVerdict {
    Verdict kind = Verdict::InconclusiveAtBound;
    std::optional<RatLogExpr> witness;
    std::string domain;
    std::vector<Rational> point;
    int basis_index = -1;
    int bound = 0;
};

struct ReportOptions {
    int degree_bound = 6;
    /// Candidate singular points; the origin when empty.
    std::vector<std::vector<Rational>> obstruction_points;
    std::optional<RatLogExpr> witness;
    std::string witness_locus;
};

struct ModularReport {
    ModularOneForm theta;
    ClosednessReport closedness;
    ExactnessVerdict exactness;
    std::vector<Obstruction> obstructions;
    std::optional<WitnessCheck> witness_check;
    Unimodular unimodular = Unimodular::Unknown;
};

ModularReport assemble_report(const LieNAlgebroid& A, const ReportOptions& options = {});

std::string to_string(Verdict v);
std::string to_string(Unimodular u);

}  // namespace folia
