#pragma once

#include <cstdint>
#include <random>

#include "symcone/algebra.hpp"

namespace symcone {

using Rng = std::mt19937_64;

/// Splitmix64 step; used to derive independent streams from one seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Haar-distributed orthogonal matrix (QR of a Gaussian matrix, sign-fixed).
Eigen::MatrixXd random_orthogonal(int n, Rng& rng);

/// Element with i.i.d. standard normal coordinates.
Element random_element(const AlgebraDescriptor& alg, Rng& rng);

/// Random point of the open cone with eigenvalues uniform in (lo, hi),
/// conjugated by a random automorphism.
Element random_cone_element(const AlgebraDescriptor& alg, Rng& rng,
                            double lo = 0.2, double hi = 2.0);

/// Random point of the unit domain D with eigenvalues uniform in
/// (margin, 1 - margin).
Element random_unit_domain_element(const AlgebraDescriptor& alg, Rng& rng,
                                   double margin = 0.05);

}  // namespace symcone
