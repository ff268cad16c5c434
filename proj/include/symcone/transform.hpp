#pragma once

#include <functional>
#include <utility>

#include "symcone/dist.hpp"
#include "symcone/mulalg.hpp"

namespace symcone {

/// The pair of multiplication algorithms (w, wt) defining the bijection
///   psi(x, y) = (e - w(x)y, wt(u)^{-1}(e - x)),  u = e - w(x)y,
/// on D x D, together with its inverse
///   psi_inv(u, v) = (e - wt(u)v, w(x)^{-1}(e - u)),  x = e - wt(u)v.
struct TransformSpec {
  AlgebraDescriptor algebra;
  MultiplicationRule w_rule;
  MultiplicationRule wt_rule;
};

/// Minimum eigenvalue every input and intermediate must keep away from the
/// domain boundary; the operator inverses degenerate there.
inline constexpr double kBoundaryMargin = 1e-10;

std::pair<Element, Element> psi(const TransformSpec& spec, const Element& x,
                                const Element& y);
std::pair<Element, Element> psi_inv(const TransformSpec& spec,
                                    const Element& u, const Element& v);

/// |Jacobian| of psi_inv at (u, v): (det u / det(e - wt(u)v))^{dim/rank}.
double jacobian_analytic(const TransformSpec& spec, const Element& u,
                         const Element& v);

/// Central-difference |Jacobian| of psi_inv; step h is scaled by the point
/// norm. Requires (u, v) interior with margin above the effective step.
double jacobian_numeric(const TransformSpec& spec, const Element& u,
                        const Element& v, double h = 1e-5);

/// log of the joint density of (U, V) = psi(X, Y) when X, Y are independent
/// with log densities logf_x, logf_y:
///   logf_x(x) + logf_y(y) + (dim/rank) (log det u - log det x),
/// with (x, y) = psi_inv(u, v); -inf when an inner argument leaves D.
double joint_uv_logpdf(const TransformSpec& spec,
                       const std::function<double(const Element&)>& logf_x,
                       const std::function<double(const Element&)>& logf_y,
                       const Element& u, const Element& v);

/// The four input/output law assignments, one per rule pair:
///   case 1 (quad, quad), case 2 (tri, tri), case 3 (quad, tri),
///   case 4 (tri, quad).
struct PredictedLaws {
  int case_id = 0;
  LawParams law_x;
  LawParams law_y;
  LawParams law_u;
  LawParams law_v;
};

/// Rule pair of a case.
TransformSpec case_transform(int case_id, const AlgebraDescriptor& alg);

/// Input laws from the characterization and output laws from the joint
/// density factorization, per case:
///   1: X ~ B(p1+p3, p2),      Y ~ B(p3, p1),  U ~ B(p1+p2, p3),      V ~ B(p2, p1)
///   2: X ~ BR(s1+s3, s2),     Y ~ BR(s3, s1), U ~ BR(s1+s2, s3),     V ~ BR(s2, s1)
///   3: X ~ BR((p1+p3)1, s2),  Y ~ B(p3, p1),  U ~ BR(p1 1 + s2, p3 1), V ~ BR(s2, p1 1)
///   4: X ~ BR(p1 1 + s3, p2 1), Y ~ BR(s3, p1 1), U ~ BR((p1+p2)1, s3), V ~ B(p2, p1)
/// Scalar parameters are passed as constant vectors; cases 1, 3, 4 require
/// the corresponding entries to be constant.
PredictedLaws predicted_uv_params(int case_id, const AlgebraDescriptor& alg,
                                  const Eigen::VectorXd& s1,
                                  const Eigen::VectorXd& s2,
                                  const Eigen::VectorXd& s3);

}  // namespace symcone
