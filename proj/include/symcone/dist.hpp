#pragma once

#include <functional>
#include <iosfwd>
#include <variant>
#include <vector>

#include "symcone/algebra.hpp"
#include "symcone/random.hpp"

namespace symcone {

/// log of the cone gamma function,
///   Gamma_V(s) = (2 pi)^{(dim-r)/2} prod_j Gamma(s_j - (j-1) d/2).
/// Throws ParameterError naming the first index with s_j <= (j-1) d/2.
double cone_log_gamma(const Eigen::VectorXd& s, const AlgebraDescriptor& alg);

/// Parameters (s, t) of the beta-Riesz distribution BR(s, t) on the unit
/// domain D, with the existence constraints s_i, t_i > (i-1) d/2.
struct BetaRieszParams {
  AlgebraDescriptor algebra;
  Eigen::VectorXd s;
  Eigen::VectorXd t;
  double log_normalizer = 0.0;  // log B_V(s, t), cached at construction

  static BetaRieszParams make(const AlgebraDescriptor& alg,
                              const Eigen::VectorXd& s,
                              const Eigen::VectorXd& t);
};

/// Parameters of the beta distribution B(p, q); requires p, q > dim/r - 1.
struct BetaParams {
  AlgebraDescriptor algebra;
  double p = 0.0;
  double q = 0.0;
  double log_normalizer = 0.0;

  static BetaParams make(const AlgebraDescriptor& alg, double p, double q);
};

double log_beta_normalizer(const BetaRieszParams& params);
double log_beta_normalizer(const BetaParams& params);

/// log density of BR(s, t) at x; -inf off the unit domain.
double beta_riesz_logpdf(const Element& x, const BetaRieszParams& params);

/// log density of B(p, q) at x; -inf off the unit domain.
double beta_logpdf(const Element& x, const BetaParams& params);

struct SampleDiagnostics {
  int resamples = 0;
};

/// Either law, for places that handle both uniformly.
using LawParams = std::variant<BetaParams, BetaRieszParams>;

double law_logpdf(const LawParams& law, const Element& x);
Element law_sample(const LawParams& law, Rng& rng,
                   SampleDiagnostics* diag = nullptr);
const AlgebraDescriptor& law_algebra(const LawParams& law);
/// Compact JSON object describing the law, e.g. {"law":"beta","p":2,"q":3}.
std::string law_to_json(const LawParams& law);

// --- samplers -----------------------------------------------------------------

/// Triangular (Bartlett-type) draw from the Riesz law with parameter s on the
/// RealSymmetric cone: x = c.c^T with c lower triangular, c_ii^2 ~
/// Gamma(shape s_i - (i-1) d/2, scale 1) and c_ij ~ N(0, 1/2) below the
/// diagonal. The absolute scale cancels in all quotient laws built from it.
Element sample_riesz_bartlett(const Eigen::VectorXd& s,
                              const AlgebraDescriptor& alg, Rng& rng);

/// x = P((a+b)^{-1/2}) a with independent a ~ Riesz(p 1), b ~ Riesz(q 1).
Element sample_beta(const BetaParams& params, Rng& rng,
                    SampleDiagnostics* diag = nullptr);

/// x = t_{a+b}^{-1} a with independent a ~ Riesz(s), b ~ Riesz(t).
Element sample_beta_riesz(const BetaRieszParams& params, Rng& rng,
                          SampleDiagnostics* diag = nullptr);

// --- batches ------------------------------------------------------------------

/// A batch of draws from one law; every element lies in the unit domain.
struct SampleBatch {
  AlgebraDescriptor algebra;
  std::vector<Element> elements;
  std::string params_json;  // serialized law / sampler parameters
  std::uint64_t seed = 0;
  int shards = 1;
  std::string sampler_kind;       // "exact" | "mcmc"
  double acceptance_rate = -1.0;  // mcmc only
  int resamples = 0;              // exact only

  /// One row per sample, columns = canonical coordinates, with header.
  void write_csv(std::ostream& os) const;
  /// JSON sidecar: algebra, parameters, seed, sampler kind.
  std::string metadata_json() const;
};

std::vector<std::string> coordinate_names(const AlgebraDescriptor& alg);

/// Deterministic sharded batch: shard k draws with an rng seeded by
/// (seed, k); the merged output depends only on (seed, shards).
SampleBatch sample_batch(const LawParams& law, int n, std::uint64_t seed,
                         int shards = 8, int threads = 0);

// --- Metropolis-Hastings --------------------------------------------------------

struct MhOptions {
  int steps = 100000;          // post burn-in iterations
  int burn_in = 10000;
  int thin = 10;
  double proposal_scale = -1;  // <= 0: 0.05 sqrt(2/ambient_dim)
  int stall_window = 5000;     // zero accepts in a window -> error
};

/// Random-walk Metropolis over ambient coordinates targeting exp(logpdf).
/// Moves with logpdf = -inf are rejected, so chains started in D stay in D.
SampleBatch sample_mh(const std::function<double(const Element&)>& logpdf,
                      const Element& init, const MhOptions& opts, Rng& rng);

// --- quadrature oracle -----------------------------------------------------------

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Integral of exp(logpdf) over the unit domain of the rank-2 RealSymmetric
/// algebra, by a midpoint product rule over matrix entries (a, b, c) with the
/// exact bound b^2 < min(ac, (1-a)(1-c)); the error estimate compares against
/// a half-resolution grid.
QuadratureResult numeric_normalization(
    const std::function<double(const Element&)>& logpdf,
    const AlgebraDescriptor& alg, int grid = 200);

}  // namespace symcone
