#include "symcone/random.hpp"

namespace symcone {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  return Rng(mix_seed(seed, stream));
}

Eigen::MatrixXd random_orthogonal(int n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i)
    if (r(i, i) < 0) q.col(i) = -q.col(i);
  return q;
}

Element random_element(const AlgebraDescriptor& alg, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd c(alg.ambient_dim);
  for (int i = 0; i < alg.ambient_dim; ++i) c[i] = gauss(rng);
  return {alg, c};
}

namespace {

Element from_eigenvalues(const AlgebraDescriptor& alg,
                         const Eigen::VectorXd& lambda, Rng& rng) {
  if (alg.kind == AlgebraKind::RealSymmetric) {
    Eigen::MatrixXd o = random_orthogonal(alg.rank, rng);
    return from_matrix(alg, o * lambda.asDiagonal() * o.transpose());
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int n = alg.ambient_dim - 1;
  Eigen::VectorXd dir(n);
  do {
    for (int i = 0; i < n; ++i) dir[i] = gauss(rng);
  } while (dir.norm() == 0.0);
  dir.normalize();
  Eigen::VectorXd c(alg.ambient_dim);
  c[0] = 0.5 * (lambda[0] + lambda[1]);
  c.tail(n) = 0.5 * (lambda[0] - lambda[1]) * dir;
  return {alg, c};
}

}  // namespace

Element random_cone_element(const AlgebraDescriptor& alg, Rng& rng, double lo,
                            double hi) {
  std::uniform_real_distribution<double> unif(lo, hi);
  Eigen::VectorXd lambda(alg.rank);
  for (int i = 0; i < alg.rank; ++i) lambda[i] = unif(rng);
  return from_eigenvalues(alg, lambda, rng);
}

Element random_unit_domain_element(const AlgebraDescriptor& alg, Rng& rng,
                                   double margin) {
  return random_cone_element(alg, rng, margin, 1.0 - margin);
}

}  // namespace symcone
