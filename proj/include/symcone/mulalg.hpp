#pragma once

#include <functional>
#include <string>

#include "symcone/algebra.hpp"
#include "symcone/random.hpp"

namespace symcone {

enum class RuleKind { Quadratic, Triangular, Interpolated };

/// Strategy tag selecting a multiplication algorithm x -> w(x):
///   Quadratic:     w(x) = P(x^{1/2})
///   Triangular:    w(x) = t_x, congruence by the Cholesky factor of x
///   Interpolated:  w(x) = P(x^alpha) t_{x^{1-2alpha}}
/// Interpolated(1/2) coincides with Quadratic, Interpolated(0) with
/// Triangular. Triangular and Interpolated act relative to the canonical
/// frame and are defined on RealSymmetric only.
struct MultiplicationRule {
  RuleKind kind;
  double alpha = 0.5;

  static MultiplicationRule quadratic() { return {RuleKind::Quadratic, 0.5}; }
  static MultiplicationRule triangular() { return {RuleKind::Triangular, 0.0}; }
  static MultiplicationRule interpolated(double a) {
    return {RuleKind::Interpolated, a};
  }
  std::string name() const;
};

/// Cone automorphism fixing the identity: conjugation by an orthogonal
/// r x r matrix on RealSymmetric, rotation of the spatial part on Lorentz.
struct OrthogonalAutomorphism {
  AlgebraDescriptor algebra;
  Eigen::MatrixXd matrix;
};

Element automorphism_apply(const OrthogonalAutomorphism& k, const Element& x);
ConeOperator automorphism_operator(const OrthogonalAutomorphism& k);
OrthogonalAutomorphism random_automorphism(const AlgebraDescriptor& alg,
                                           Rng& rng);

/// The operator w(x). Requires x in the open cone. Satisfies w(x)e = x and
/// Det w(x) = (det x)^{dim/rank}.
ConeOperator mul_operator(const MultiplicationRule& rule, const Element& x);

/// Exact operator inverse of mul_operator; div_operator(rule, x)(x) = e.
ConeOperator div_operator(const MultiplicationRule& rule, const Element& x);

/// Lower-triangular Cholesky factor with positive diagonal, c.c^T = x.
/// Throws DomainError naming the pivot index when a pivot is nonpositive.
Eigen::MatrixXd cholesky_triangular(const Element& x, const JordanFrame& frame);

/// Residual of the multiplicative functional equation at (x, y):
///   f(w(x)y) - f(x) - f(w(e)y).
double w_log_residual(const MultiplicationRule& rule,
                      const std::function<double(const Element&)>& f,
                      const Element& x, const Element& y);

/// Max residuals of the multiplication-algorithm axioms over sampled cone
/// points: identity w(x)e = x, degree-1 homogeneity, continuity at e,
/// the operator-determinant law Det w(y) = (det y)^{dim/rank}, and
/// det(w(y)x) = det y det x.
struct AxiomReport {
  std::string rule;
  std::string algebra;
  int n_samples = 0;
  double identity_residual = 0;
  double homogeneity_residual = 0;
  double continuity_residual = 0;
  double operator_det_residual = 0;
  double det_multiplicativity_residual = 0;
  bool surjectivity_tested = false;

  double max_residual() const;
  bool pass(double tol = 1e-8) const { return max_residual() < tol; }
};

AxiomReport check_axioms(const AlgebraDescriptor& alg,
                         const MultiplicationRule& rule, int n_samples,
                         std::uint64_t seed);

}  // namespace symcone
