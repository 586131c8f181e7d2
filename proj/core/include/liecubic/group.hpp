#pragma once

#include <string>

#include <Eigen/Dense>

#include "liecubic/algebra.hpp"
#include "liecubic/types.hpp"

namespace liecubic {

/// A point of G in the catalog algebra's matrix realization.
struct GroupElement {
  Eigen::MatrixXd mat;
  std::string algebra_id;
};

GroupElement identity(const Algebra& alg);

/// Wraps a matrix, rejecting it if the membership residual exceeds `tol`.
GroupElement make_element(const Algebra& alg, Eigen::MatrixXd mat, double tol = 1e-9);

/// For orthogonal groups max(‖MᵀM − I‖, |det M − 1|); for translation
/// groups the distance from the unipotent translation form.
double membership_residual(const Algebra& alg, const GroupElement& x);

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const Algebra& alg, const GroupElement& x);

/// exp(t · sum_i y_i Â_i). Scaling-and-squaring Padé for the compact groups,
/// the exact polynomial for translations.
GroupElement exp_map(const Algebra& alg, const AlgebraVector& y, double t = 1.0);

/// Nearest group element: polar factor for orthogonal groups, translation
/// form for abelian ones. Applied after every integrator step.
GroupElement project_to_group(const Algebra& alg, const GroupElement& x);

/// Matrix of Ad_x on coefficient vectors (column j is Ad_x A_j). Throws
/// DomainError when x is more than 1e-9 away from the group.
Eigen::MatrixXd adjoint_matrix(const Algebra& alg, const GroupElement& x);

AlgebraVector adjoint_Ad(const Algebra& alg, const GroupElement& x, const AlgebraVector& y);

/// Ad*_x, i.e. precomposition with Ad_x: (Ad*_x xi)(Y) = xi(Ad_x Y).
AlgebraCovector coadjoint_Ad_star(const Algebra& alg, const GroupElement& x, const AlgebraCovector& xi);

/// T_{(e,0)} L_{(x,Y)} (Z, U) on the semidirect product G ⊛ g, with the first
/// slot expressed in the body frame at x.
struct SemidirectTangent {
  AlgebraVector body;
  AlgebraVector fiber;
};
SemidirectTangent semidirect_left_translate(const Algebra& alg, const GroupElement& x, const AlgebraVector& y,
                                            const AlgebraVector& z, const AlgebraVector& u);

/// Element (x, Y) of G ⊛ g with law (x,Y)(g,Z) = (xg, Ad_{g^-1} Y + Z).
struct SemidirectElement {
  GroupElement x;
  AlgebraVector y;
};
SemidirectElement semidirect_multiply(const Algebra& alg, const SemidirectElement& a, const SemidirectElement& b);
SemidirectElement semidirect_inverse(const Algebra& alg, const SemidirectElement& a);

}  // namespace liecubic
