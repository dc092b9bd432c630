// The example Lie n-algebroids and regular presentations.
#pragma once

#include "folia/algebroid.hpp"
#include "folia/regfol.hpp"

#include <stdexcept>

namespace folia {

class CrossBracketNonZero : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rank-one algebroid with rho(one) = x.
LieNAlgebroid build_single_vf(const VectorField& x);
/// Rank-one algebroid whose anchor is the Euler field sum x_i d/dx_i, in x1..xn.
LieNAlgebroid build_euler(int n);
/// Cotangent algebroid of the linear Poisson structure on R^3 resolved by one
/// element of degree -1 (variables x, y, z).
LieNAlgebroid build_poisson_r3();
/// Vector fields A(x,y) X for quadratic forms A and constant X on R^2; a Lie
/// 2-algebroid with a 3-bracket.
LieNAlgebroid build_quadratic_r2();
/// Action of gl_n on R^n, resolved by n copies of the exterior powers of R^n.
LieNAlgebroid build_gln(int n);
/// Infinitesimal rotations of R^n resolved by the Koszul complex of
/// phi = (x1^2 + ... + xn^2) / 2.
LieNAlgebroid build_son(int n);

/// Block-diagonal sum with zero cross brackets. Labels of b that clash with
/// labels of a get the suffix "_b". Throws CrossBracketNonZero when some pair
/// of anchors does not commute.
LieNAlgebroid direct_sum(const LieNAlgebroid& a, const LieNAlgebroid& b);

/// so_n plus the Euler field, with l2(one, e) = i e on level i so that l1
/// commutes with the action of the Euler generator.
LieNAlgebroid build_son_euler_lifted(int n);

RegularPresentation spiral_presentation();
RegularPresentation circles_presentation();
RegularPresentation euler_regular_presentation(int n);
RegularPresentation poisson3_regular_presentation();

}  // namespace folia
