#include "symcone/algebra.hpp"

#include <cmath>

namespace symcone {

namespace {
const double kSqrt2 = std::sqrt(2.0);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}  // namespace

AlgebraDescriptor AlgebraDescriptor::real_symmetric(int rank) {
  if (rank < 1) throw DimensionError("real_symmetric: rank must be >= 1");
  return {AlgebraKind::RealSymmetric, rank, rank * (rank + 1) / 2, 1};
}

AlgebraDescriptor AlgebraDescriptor::lorentz(int ambient_dim) {
  if (ambient_dim < 3)
    throw DimensionError("lorentz: ambient dimension must be >= 3");
  return {AlgebraKind::Lorentz, 2, ambient_dim, ambient_dim - 2};
}

std::string AlgebraDescriptor::name() const {
  if (kind == AlgebraKind::RealSymmetric)
    return "sym(r=" + std::to_string(rank) + ")";
  return "lorentz(dim=" + std::to_string(ambient_dim) + ")";
}

void require_same_algebra(const Element& x, const Element& y) {
  if (!(x.algebra == y.algebra))
    throw DimensionError("elements belong to different algebras: " +
                         x.algebra.name() + " vs " + y.algebra.name());
}

void require_real_symmetric(const AlgebraDescriptor& alg,
                            const std::string& op) {
  if (alg.kind != AlgebraKind::RealSymmetric)
    throw UnsupportedError(op + ": not defined on " + alg.name());
}

// --- construction ------------------------------------------------------------

Element zero_element(const AlgebraDescriptor& alg) {
  return {alg, Eigen::VectorXd::Zero(alg.ambient_dim)};
}

Element identity_element(const AlgebraDescriptor& alg) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(alg.ambient_dim);
  if (alg.kind == AlgebraKind::RealSymmetric) {
    for (int i = 0; i < alg.rank; ++i) c[sym_coord_index(alg.rank, i, i)] = 1.0;
  } else {
    c[0] = 1.0;
  }
  return {alg, c};
}

Element basis_element(const AlgebraDescriptor& alg, int k) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(alg.ambient_dim);
  c[k] = 1.0;
  return {alg, c};
}

ConeOperator identity_operator(const AlgebraDescriptor& alg) {
  return {alg, Eigen::MatrixXd::Identity(alg.ambient_dim, alg.ambient_dim)};
}

int sym_coord_index(int rank, int i, int j) {
  return i * rank - i * (i - 1) / 2 + (j - i);
}

Eigen::MatrixXd to_matrix(const Element& x) {
  require_real_symmetric(x.algebra, "to_matrix");
  const int r = x.algebra.rank;
  Eigen::MatrixXd m(r, r);
  for (int i = 0; i < r; ++i) {
    m(i, i) = x.coords[sym_coord_index(r, i, i)];
    for (int j = i + 1; j < r; ++j) {
      const double v = x.coords[sym_coord_index(r, i, j)] * kInvSqrt2;
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

Element from_matrix(const AlgebraDescriptor& alg, const Eigen::MatrixXd& m) {
  require_real_symmetric(alg, "from_matrix");
  if (m.rows() != alg.rank || m.cols() != alg.rank)
    throw DimensionError("from_matrix: matrix size does not match rank");
  Eigen::VectorXd c(alg.ambient_dim);
  for (int i = 0; i < alg.rank; ++i) {
    c[sym_coord_index(alg.rank, i, i)] = m(i, i);
    for (int j = i + 1; j < alg.rank; ++j)
      c[sym_coord_index(alg.rank, i, j)] = 0.5 * (m(i, j) + m(j, i)) * kSqrt2;
  }
  return {alg, c};
}

ConeOperator congruence_operator(const AlgebraDescriptor& alg,
                                 const Eigen::MatrixXd& a) {
  require_real_symmetric(alg, "congruence_operator");
  const int m = alg.ambient_dim;
  Eigen::MatrixXd op(m, m);
  for (int k = 0; k < m; ++k) {
    Eigen::MatrixXd bk = to_matrix(basis_element(alg, k));
    op.col(k) = from_matrix(alg, a * bk * a.transpose()).coords;
  }
  return {alg, op};
}

// --- operator ----------------------------------------------------------------

Element ConeOperator::apply(const Element& x) const {
  if (!(x.algebra == algebra))
    throw DimensionError("operator applied to element of a different algebra");
  return {algebra, mat * x.coords};
}

ConeOperator ConeOperator::inverse() const {
  return {algebra, mat.inverse()};
}

ConeOperator operator*(const ConeOperator& a, const ConeOperator& b) {
  if (!(a.algebra == b.algebra))
    throw DimensionError("composing operators over different algebras");
  return {a.algebra, a.mat * b.mat};
}

double operator_det(const ConeOperator& g) { return g.mat.determinant(); }

// --- products ----------------------------------------------------------------

double inner(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  return x.coords.dot(y.coords);
}

double norm(const Element& x) { return x.coords.norm(); }

Element operator+(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  return {x.algebra, x.coords + y.coords};
}

Element operator-(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  return {x.algebra, x.coords - y.coords};
}

Element operator*(double s, const Element& x) {
  return {x.algebra, s * x.coords};
}

Element jordan_product(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  if (x.algebra.kind == AlgebraKind::RealSymmetric) {
    Eigen::MatrixXd a = to_matrix(x), b = to_matrix(y);
    return from_matrix(x.algebra, 0.5 * (a * b + b * a));
  }
  const auto& u = x.coords;
  const auto& v = y.coords;
  Eigen::VectorXd c(x.algebra.ambient_dim);
  c[0] = u.dot(v);
  for (int i = 1; i < x.algebra.ambient_dim; ++i)
    c[i] = u[0] * v[i] + v[0] * u[i];
  return {x.algebra, c};
}

ConeOperator lmap(const Element& x) {
  const int m = x.algebra.ambient_dim;
  Eigen::MatrixXd op(m, m);
  for (int k = 0; k < m; ++k)
    op.col(k) = jordan_product(x, basis_element(x.algebra, k)).coords;
  return {x.algebra, op};
}

ConeOperator quad_rep(const Element& x) {
  if (x.algebra.kind == AlgebraKind::RealSymmetric)
    return congruence_operator(x.algebra, to_matrix(x));
  const int m = x.algebra.ambient_dim;
  Eigen::MatrixXd op(m, m);
  for (int k = 0; k < m; ++k)
    op.col(k) = quad_rep_apply(x, basis_element(x.algebra, k)).coords;
  return {x.algebra, op};
}

Element quad_rep_apply(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  if (x.algebra.kind == AlgebraKind::RealSymmetric) {
    Eigen::MatrixXd a = to_matrix(x), b = to_matrix(y);
    return from_matrix(x.algebra, a * b * a);
  }
  // Lorentz closed form: P(x)y = 2<x,y> x - (det x) (y0, -ybar).
  const double d = determinant(x);
  const double s = 2.0 * x.coords.dot(y.coords);
  Eigen::VectorXd c = s * x.coords;
  c[0] -= d * y.coords[0];
  for (int i = 1; i < x.algebra.ambient_dim; ++i) c[i] += d * y.coords[i];
  return {x.algebra, c};
}

// --- spectral theory ----------------------------------------------------------

SpectralDecomposition spectral_decomposition(const Element& x) {
  const auto& alg = x.algebra;
  SpectralDecomposition dec;
  if (alg.kind == AlgebraKind::RealSymmetric) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_matrix(x));
    const int r = alg.rank;
    dec.eigenvalues.resize(r);
    dec.idempotents.reserve(r);
    for (int i = 0; i < r; ++i) {
      const int src = r - 1 - i;  // descending order
      dec.eigenvalues[i] = es.eigenvalues()[src];
      Eigen::VectorXd v = es.eigenvectors().col(src);
      dec.idempotents.push_back(from_matrix(alg, v * v.transpose()));
    }
    return dec;
  }
  const double x0 = x.coords[0];
  Eigen::VectorXd xs = x.coords.tail(alg.ambient_dim - 1);
  const double nrm = xs.norm();
  dec.eigenvalues.resize(2);
  dec.eigenvalues << x0 + nrm, x0 - nrm;
  Eigen::VectorXd dir;
  if (nrm > 0) {
    dir = xs / nrm;
  } else {
    // eigenvalue collision: any frame is valid, return the canonical one
    dir = Eigen::VectorXd::Zero(alg.ambient_dim - 1);
    dir[0] = 1.0;
  }
  for (double sign : {1.0, -1.0}) {
    Eigen::VectorXd c(alg.ambient_dim);
    c[0] = 0.5;
    c.tail(alg.ambient_dim - 1) = 0.5 * sign * dir;
    dec.idempotents.push_back({alg, c});
  }
  return dec;
}

double determinant(const Element& x) {
  if (x.algebra.kind == AlgebraKind::RealSymmetric)
    return to_matrix(x).determinant();
  const double x0 = x.coords[0];
  return x0 * x0 - x.coords.tail(x.algebra.ambient_dim - 1).squaredNorm();
}

double trace(const Element& x) {
  if (x.algebra.kind == AlgebraKind::RealSymmetric) {
    double t = 0;
    for (int i = 0; i < x.algebra.rank; ++i)
      t += x.coords[sym_coord_index(x.algebra.rank, i, i)];
    return t;
  }
  return 2.0 * x.coords[0];
}

double min_eigenvalue(const Element& x) {
  const auto& alg = x.algebra;
  if (alg.kind == AlgebraKind::Lorentz)
    return x.coords[0] - x.coords.tail(alg.ambient_dim - 1).norm();
  if (alg.rank == 1) return x.coords[0];
  if (alg.rank == 2) {
    const double a = x.coords[0];
    const double b = x.coords[1] * kInvSqrt2;
    const double c = x.coords[2];
    return 0.5 * (a + c) - std::sqrt(0.25 * (a - c) * (a - c) + b * b);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_matrix(x),
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues()[0];
}

Element inverse(const Element& x, double tol) {
  SpectralDecomposition dec = spectral_decomposition(x);
  const double min_abs = dec.eigenvalues.cwiseAbs().minCoeff();
  if (min_abs <= tol)
    throw SingularError("inverse: singular element, min |eigenvalue| = " +
                            std::to_string(min_abs),
                        min_abs);
  Element out = zero_element(x.algebra);
  for (int i = 0; i < x.algebra.rank; ++i)
    out = out + (1.0 / dec.eigenvalues[i]) * dec.idempotents[i];
  return out;
}

Element sqrt_psd(const Element& x, double tol) { return power(x, 0.5, tol); }

Element power(const Element& x, double alpha, double tol) {
  SpectralDecomposition dec = spectral_decomposition(x);
  if (dec.eigenvalues.minCoeff() <= tol)
    throw DomainError("power: element not in the open cone (min eigenvalue " +
                      std::to_string(dec.eigenvalues.minCoeff()) + ")");
  Element out = zero_element(x.algebra);
  for (int i = 0; i < x.algebra.rank; ++i)
    out = out + std::pow(dec.eigenvalues[i], alpha) * dec.idempotents[i];
  return out;
}

bool in_cone(const Element& x, double tol) { return min_eigenvalue(x) > tol; }

bool in_unit_domain(const Element& x, double tol) {
  return in_cone(x, tol) && in_cone(identity_element(x.algebra) - x, tol);
}

// --- frames, minors, generalized powers ---------------------------------------

JordanFrame canonical_frame(const AlgebraDescriptor& alg) {
  JordanFrame frame{alg, {}, true};
  if (alg.kind == AlgebraKind::RealSymmetric) {
    for (int i = 0; i < alg.rank; ++i) {
      Element c = zero_element(alg);
      c.coords[sym_coord_index(alg.rank, i, i)] = 1.0;
      frame.idempotents.push_back(c);
    }
  } else {
    for (double sign : {1.0, -1.0}) {
      Element c = zero_element(alg);
      c.coords[0] = 0.5;
      c.coords[1] = 0.5 * sign;
      frame.idempotents.push_back(c);
    }
  }
  return frame;
}

namespace {

void require_canonical(const JordanFrame& frame, const std::string& op) {
  if (!frame.canonical)
    throw UnsupportedError(op + ": only the canonical frame is supported");
}

}  // namespace

Eigen::VectorXd principal_minors(const Element& x, const JordanFrame& frame) {
  require_canonical(frame, "principal_minors");
  if (!(x.algebra == frame.algebra))
    throw DimensionError("principal_minors: frame/element algebra mismatch");
  Eigen::VectorXd minors(x.algebra.rank);
  if (x.algebra.kind == AlgebraKind::RealSymmetric) {
    Eigen::MatrixXd m = to_matrix(x);
    for (int k = 1; k <= x.algebra.rank; ++k)
      minors[k - 1] = m.topLeftCorner(k, k).determinant();
  } else {
    minors[0] = x.coords[0] + x.coords[1];
    minors[1] = determinant(x);
  }
  return minors;
}

double log_generalized_power(const Element& x, const Eigen::VectorXd& s,
                             const JordanFrame& frame) {
  if (s.size() != x.algebra.rank)
    throw DimensionError("log_generalized_power: s has wrong length");
  Eigen::VectorXd minors = principal_minors(x, frame);
  Eigen::VectorXd logs(minors.size());
  for (int k = 0; k < minors.size(); ++k) {
    if (minors[k] <= 0.0)
      throw DomainError("log_generalized_power: nonpositive minor Delta_" +
                        std::to_string(k + 1) + " = " +
                        std::to_string(minors[k]));
    logs[k] = std::log(minors[k]);
  }
  return log_generalized_power_from_logs(logs, s);
}

double generalized_power(const Element& x, const Eigen::VectorXd& s,
                         const JordanFrame& frame) {
  return std::exp(log_generalized_power(x, s, frame));
}

double log_generalized_power_from_logs(const Eigen::VectorXd& log_minors,
                                       const Eigen::VectorXd& s) {
  const int r = static_cast<int>(log_minors.size());
  double acc = 0.0;
  for (int k = 0; k < r; ++k) {
    const double expo = (k + 1 < r) ? s[k] - s[k + 1] : s[k];
    acc += expo * log_minors[k];
  }
  return acc;
}

std::optional<Eigen::VectorXd> try_log_leading_minors(const Element& x) {
  const auto& alg = x.algebra;
  if (alg.kind == AlgebraKind::Lorentz) {
    const double det = determinant(x);
    if (x.coords[0] <= 0.0 || det <= 0.0) return std::nullopt;
    Eigen::VectorXd logs(2);
    logs[0] = std::log(x.coords[0] + x.coords[1]);
    logs[1] = std::log(det);
    return logs;
  }
  // Cholesky sweep: log Delta_k = 2 sum_{i<=k} log L_ii.
  const int r = alg.rank;
  Eigen::MatrixXd m = to_matrix(x);
  Eigen::VectorXd logs(r);
  double acc = 0.0;
  for (int i = 0; i < r; ++i) {
    double pivot = m(i, i);
    for (int k = 0; k < i; ++k) pivot -= m(i, k) * m(i, k);
    if (pivot <= 0.0) return std::nullopt;
    const double lii = std::sqrt(pivot);
    m(i, i) = lii;
    for (int j = i + 1; j < r; ++j) {
      double v = m(j, i);
      for (int k = 0; k < i; ++k) v -= m(j, k) * m(i, k);
      m(j, i) = v / lii;
    }
    acc += 2.0 * std::log(lii);
    logs[i] = acc;
  }
  return logs;
}

// --- Frobenius transformations -------------------------------------------------

Eigen::MatrixXd frobenius_matrix(int rank, int col, const Eigen::VectorXd& z) {
  if (col < 0 || col >= rank - 1)
    throw DimensionError("frobenius_matrix: column index out of range");
  if (z.size() != rank - 1 - col)
    throw DimensionError("frobenius_matrix: coefficient vector has length " +
                         std::to_string(z.size()) + ", expected " +
                         std::to_string(rank - 1 - col));
  Eigen::MatrixXd f = Eigen::MatrixXd::Identity(rank, rank);
  for (int j = col + 1; j < rank; ++j) f(j, col) = z[j - col - 1];
  return f;
}

Element frobenius_apply(int col, const Eigen::VectorXd& z, const Element& x,
                        const JordanFrame& frame) {
  require_real_symmetric(x.algebra, "frobenius_apply");
  require_canonical(frame, "frobenius_apply");
  Eigen::MatrixXd f = frobenius_matrix(x.algebra.rank, col, z);
  return from_matrix(x.algebra, f * to_matrix(x) * f.transpose());
}

ConeOperator frobenius_operator(const AlgebraDescriptor& alg, int col,
                                const Eigen::VectorXd& z) {
  require_real_symmetric(alg, "frobenius_operator");
  return congruence_operator(alg, frobenius_matrix(alg.rank, col, z));
}

}  // namespace symcone
