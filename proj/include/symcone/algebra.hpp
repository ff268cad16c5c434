#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "symcone/errors.hpp"

namespace symcone {

enum class AlgebraKind { RealSymmetric, Lorentz };

/// Which irreducible symmetric cone we work on, with its basic numerology.
///
/// RealSymmetric: r x r real symmetric matrices, ambient dimension r(r+1)/2,
/// Peirce constant d = 1. Lorentz: R^{n+1} with the spin product, rank 2,
/// Peirce constant d = n - 1.
struct AlgebraDescriptor {
  AlgebraKind kind;
  int rank;
  int ambient_dim;
  int peirce_d;

  static AlgebraDescriptor real_symmetric(int rank);
  static AlgebraDescriptor lorentz(int ambient_dim);

  double dim_over_rank() const {
    return static_cast<double>(ambient_dim) / static_cast<double>(rank);
  }
  std::string name() const;
  bool operator==(const AlgebraDescriptor&) const = default;
};

/// A point of the ambient algebra in canonical orthonormal coordinates.
///
/// RealSymmetric layout: upper triangle, row-major, i.e. (0,0),(0,1),...,
/// (0,r-1),(1,1),...,(r-1,r-1), with off-diagonal entries stored once and
/// scaled by sqrt(2), so that <x,y> = Trace(x.y) is the plain dot product
/// of coordinate vectors. Lorentz layout: (x0, x1, ..., xn).
struct Element {
  AlgebraDescriptor algebra;
  Eigen::VectorXd coords;
};

/// Eigenvalues (descending) together with a complete system of primitive
/// orthogonal idempotents reconstructing the decomposed element.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  std::vector<Element> idempotents;
};

/// A complete system of r primitive orthogonal idempotents. `canonical` is
/// set only by canonical_frame(); triangular-group operations require it.
struct JordanFrame {
  AlgebraDescriptor algebra;
  std::vector<Element> idempotents;
  bool canonical = false;
};

/// A linear endomorphism of the ambient space, stored as its matrix in the
/// canonical orthonormal coordinate basis.
struct ConeOperator {
  AlgebraDescriptor algebra;
  Eigen::MatrixXd mat;

  Element apply(const Element& x) const;
  ConeOperator inverse() const;
};

ConeOperator operator*(const ConeOperator& a, const ConeOperator& b);

// --- construction -----------------------------------------------------------

Element zero_element(const AlgebraDescriptor& alg);
Element identity_element(const AlgebraDescriptor& alg);
Element basis_element(const AlgebraDescriptor& alg, int k);
ConeOperator identity_operator(const AlgebraDescriptor& alg);

/// Coordinate index of matrix entry (i,j), i <= j, for RealSymmetric rank r.
int sym_coord_index(int rank, int i, int j);

/// RealSymmetric only: dense r x r matrix view of an element.
Eigen::MatrixXd to_matrix(const Element& x);
Element from_matrix(const AlgebraDescriptor& alg, const Eigen::MatrixXd& m);

/// Operator of y -> a.y.a^T on RealSymmetric, for an arbitrary r x r matrix a.
ConeOperator congruence_operator(const AlgebraDescriptor& alg,
                                 const Eigen::MatrixXd& a);

// --- products and operators -------------------------------------------------

double inner(const Element& x, const Element& y);
double norm(const Element& x);

Element operator+(const Element& x, const Element& y);
Element operator-(const Element& x, const Element& y);
Element operator*(double s, const Element& x);

/// The Jordan product: (x.y + y.x)/2 for matrices, the spin product on the
/// Lorentz algebra.
Element jordan_product(const Element& x, const Element& y);

/// Matrix of the multiplication operator L(x), L(x)y = xy. Self-adjoint.
ConeOperator lmap(const Element& x);

/// The quadratic representation P(x) as an operator.
ConeOperator quad_rep(const Element& x);

/// P(x)y without forming the operator matrix.
Element quad_rep_apply(const Element& x, const Element& y);

/// Determinant of an endomorphism of the ambient space (LU factorization).
double operator_det(const ConeOperator& g);

// --- spectral theory --------------------------------------------------------

SpectralDecomposition spectral_decomposition(const Element& x);

double determinant(const Element& x);
double trace(const Element& x);
double min_eigenvalue(const Element& x);

/// Jordan inverse. Throws SingularError if some |eigenvalue| <= tol.
Element inverse(const Element& x, double tol = 1e-12);

/// Square root / real power on the open cone (all eigenvalues > tol).
Element sqrt_psd(const Element& x, double tol = 1e-12);
Element power(const Element& x, double alpha, double tol = 1e-12);

/// Default absolute eigenvalue tolerance for cone membership.
inline constexpr double kConeTol = 1e-9;

bool in_cone(const Element& x, double tol = kConeTol);
bool in_unit_domain(const Element& x, double tol = kConeTol);

// --- frames, minors, generalized powers -------------------------------------

/// The fixed canonical frame: diagonal unit matrices for RealSymmetric;
/// (1, +-u)/2 with u the first spatial unit vector for Lorentz.
JordanFrame canonical_frame(const AlgebraDescriptor& alg);

/// Principal minors (Delta_1,...,Delta_r) with respect to the canonical
/// frame; Delta_r(x) = det x.
Eigen::VectorXd principal_minors(const Element& x, const JordanFrame& frame);

/// log Delta_s(x) = sum_k (s_k - s_{k+1}) log Delta_k(x), s_{r+1} = 0.
/// Throws DomainError if some minor is nonpositive.
double log_generalized_power(const Element& x, const Eigen::VectorXd& s,
                             const JordanFrame& frame);
double generalized_power(const Element& x, const Eigen::VectorXd& s,
                         const JordanFrame& frame);

/// Logs of the r leading minors, or nullopt if x is not positive definite.
/// Cheap path used by density evaluations; equivalent to principal_minors
/// on the open cone.
std::optional<Eigen::VectorXd> try_log_leading_minors(const Element& x);

/// log Delta_s from precomputed log-minors.
double log_generalized_power_from_logs(const Eigen::VectorXd& log_minors,
                                       const Eigen::VectorXd& s);

// --- Frobenius transformations ----------------------------------------------

/// Unit lower-triangular Frobenius matrix F with column `col` (0-based)
/// filled below the diagonal by z: F(j, col) = z[j - col - 1], j > col.
Eigen::MatrixXd frobenius_matrix(int rank, int col, const Eigen::VectorXd& z);

/// tau_{c_col}(z) x = F.x.F^T on RealSymmetric. Throws UnsupportedError on
/// the Lorentz algebra.
Element frobenius_apply(int col, const Eigen::VectorXd& z, const Element& x,
                        const JordanFrame& frame);
ConeOperator frobenius_operator(const AlgebraDescriptor& alg, int col,
                                const Eigen::VectorXd& z);

// --- internal checks --------------------------------------------------------

void require_same_algebra(const Element& x, const Element& y);
void require_real_symmetric(const AlgebraDescriptor& alg,
                            const std::string& op);

}  // namespace symcone
