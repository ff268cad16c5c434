#include "symcone/dist.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "symcone/mulalg.hpp"
#include "symcone/parallel.hpp"

namespace symcone {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLog2Pi = std::log(2.0 * M_PI);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

using nlohmann::json;

json algebra_json(const AlgebraDescriptor& alg) {
  return {{"kind", alg.kind == AlgebraKind::RealSymmetric ? "sym" : "lorentz"},
          {"rank", alg.rank},
          {"ambient_dim", alg.ambient_dim},
          {"peirce_d", alg.peirce_d}};
}

}  // namespace

double cone_log_gamma(const Eigen::VectorXd& s, const AlgebraDescriptor& alg) {
  if (s.size() != alg.rank)
    throw DimensionError("cone_log_gamma: parameter vector length " +
                         std::to_string(s.size()) + ", rank " +
                         std::to_string(alg.rank));
  const double half_d = 0.5 * alg.peirce_d;
  double acc = 0.5 * (alg.ambient_dim - alg.rank) * kLog2Pi;
  for (int j = 0; j < alg.rank; ++j) {
    const double arg = s[j] - j * half_d;
    if (arg <= 0.0)
      throw ParameterError("cone_log_gamma: s[" + std::to_string(j) +
                               "] = " + std::to_string(s[j]) +
                               " must exceed " + std::to_string(j * half_d),
                           j);
    acc += std::lgamma(arg);
  }
  return acc;
}

BetaRieszParams BetaRieszParams::make(const AlgebraDescriptor& alg,
                                      const Eigen::VectorXd& s,
                                      const Eigen::VectorXd& t) {
  BetaRieszParams params{alg, s, t, 0.0};
  params.log_normalizer = cone_log_gamma(s, alg) + cone_log_gamma(t, alg) -
                          cone_log_gamma(s + t, alg);
  return params;
}

BetaParams BetaParams::make(const AlgebraDescriptor& alg, double p, double q) {
  const double bound = alg.dim_over_rank() - 1.0;
  if (p <= bound)
    throw ParameterError("beta: p = " + std::to_string(p) +
                         " must exceed dim/rank - 1 = " + std::to_string(bound));
  if (q <= bound)
    throw ParameterError("beta: q = " + std::to_string(q) +
                         " must exceed dim/rank - 1 = " + std::to_string(bound));
  const Eigen::VectorXd ps = Eigen::VectorXd::Constant(alg.rank, p);
  const Eigen::VectorXd qs = Eigen::VectorXd::Constant(alg.rank, q);
  BetaParams params{alg, p, q, 0.0};
  params.log_normalizer = cone_log_gamma(ps, alg) + cone_log_gamma(qs, alg) -
                          cone_log_gamma(ps + qs, alg);
  return params;
}

double log_beta_normalizer(const BetaRieszParams& params) {
  return params.log_normalizer;
}

double log_beta_normalizer(const BetaParams& params) {
  return params.log_normalizer;
}

double beta_riesz_logpdf(const Element& x, const BetaRieszParams& params) {
  if (!(x.algebra == params.algebra))
    throw DimensionError("beta_riesz_logpdf: algebra mismatch");
  const auto logs_x = try_log_leading_minors(x);
  if (!logs_x) return kNegInf;
  const auto logs_ex = try_log_leading_minors(identity_element(x.algebra) - x);
  if (!logs_ex) return kNegInf;
  const double q = params.algebra.dim_over_rank();
  const Eigen::VectorXd sq = params.s.array() - q;
  const Eigen::VectorXd tq = params.t.array() - q;
  return -params.log_normalizer + log_generalized_power_from_logs(*logs_x, sq) +
         log_generalized_power_from_logs(*logs_ex, tq);
}

double beta_logpdf(const Element& x, const BetaParams& params) {
  if (!(x.algebra == params.algebra))
    throw DimensionError("beta_logpdf: algebra mismatch");
  const auto logs_x = try_log_leading_minors(x);
  if (!logs_x) return kNegInf;
  const auto logs_ex = try_log_leading_minors(identity_element(x.algebra) - x);
  if (!logs_ex) return kNegInf;
  const double q = params.algebra.dim_over_rank();
  const int r = params.algebra.rank;
  return -params.log_normalizer + (params.p - q) * (*logs_x)[r - 1] +
         (params.q - q) * (*logs_ex)[r - 1];
}

double law_logpdf(const LawParams& law, const Element& x) {
  if (std::holds_alternative<BetaParams>(law))
    return beta_logpdf(x, std::get<BetaParams>(law));
  return beta_riesz_logpdf(x, std::get<BetaRieszParams>(law));
}

Element law_sample(const LawParams& law, Rng& rng, SampleDiagnostics* diag) {
  if (std::holds_alternative<BetaParams>(law))
    return sample_beta(std::get<BetaParams>(law), rng, diag);
  return sample_beta_riesz(std::get<BetaRieszParams>(law), rng, diag);
}

const AlgebraDescriptor& law_algebra(const LawParams& law) {
  if (std::holds_alternative<BetaParams>(law))
    return std::get<BetaParams>(law).algebra;
  return std::get<BetaRieszParams>(law).algebra;
}

std::string law_to_json(const LawParams& law) {
  json j;
  if (std::holds_alternative<BetaParams>(law)) {
    const auto& p = std::get<BetaParams>(law);
    j = {{"law", "beta"}, {"p", p.p}, {"q", p.q}};
  } else {
    const auto& p = std::get<BetaRieszParams>(law);
    j = {{"law", "beta-riesz"},
         {"s", std::vector<double>(p.s.data(), p.s.data() + p.s.size())},
         {"t", std::vector<double>(p.t.data(), p.t.data() + p.t.size())}};
  }
  return j.dump();
}

// --- samplers -------------------------------------------------------------------

Element sample_riesz_bartlett(const Eigen::VectorXd& s,
                              const AlgebraDescriptor& alg, Rng& rng) {
  require_real_symmetric(alg, "sample_riesz_bartlett");
  const double half_d = 0.5 * alg.peirce_d;
  for (int j = 0; j < alg.rank; ++j)
    if (s[j] - j * half_d <= 0.0)
      throw ParameterError("sample_riesz_bartlett: s[" + std::to_string(j) +
                               "] must exceed " + std::to_string(j * half_d),
                           j);
  std::normal_distribution<double> gauss(0.0, kInvSqrt2);
  const int r = alg.rank;
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(r, r);
  for (int i = 0; i < r; ++i) {
    std::gamma_distribution<double> gamma(s[i] - i * half_d, 1.0);
    c(i, i) = std::sqrt(gamma(rng));
    for (int j = 0; j < i; ++j) c(i, j) = gauss(rng);
  }
  return from_matrix(alg, c * c.transpose());
}

namespace {

// Quotient draw with resampling of numerically singular denominators.
template <typename DrawA, typename DrawB, typename Quotient>
Element quotient_sample(const AlgebraDescriptor& alg, DrawA&& draw_a,
                        DrawB&& draw_b, Quotient&& quotient,
                        SampleDiagnostics* diag) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    const Element a = draw_a();
    const Element b = draw_b();
    const Element sum = a + b;
    if (min_eigenvalue(sum) < 1e-12) {
      if (diag) ++diag->resamples;
      continue;
    }
    const Element x = quotient(a, sum);
    if (!in_unit_domain(x, 1e-12)) {
      if (diag) ++diag->resamples;
      continue;
    }
    return x;
  }
  throw Error("quotient sampler: repeated degenerate draws");
}

}  // namespace

Element sample_beta(const BetaParams& params, Rng& rng,
                    SampleDiagnostics* diag) {
  const auto& alg = params.algebra;
  const Eigen::VectorXd ps = Eigen::VectorXd::Constant(alg.rank, params.p);
  const Eigen::VectorXd qs = Eigen::VectorXd::Constant(alg.rank, params.q);
  return quotient_sample(
      alg, [&] { return sample_riesz_bartlett(ps, alg, rng); },
      [&] { return sample_riesz_bartlett(qs, alg, rng); },
      [&](const Element& a, const Element& sum) {
        return quad_rep_apply(power(sum, -0.5), a);
      },
      diag);
}

Element sample_beta_riesz(const BetaRieszParams& params, Rng& rng,
                          SampleDiagnostics* diag) {
  const auto& alg = params.algebra;
  const JordanFrame frame = canonical_frame(alg);
  return quotient_sample(
      alg, [&] { return sample_riesz_bartlett(params.s, alg, rng); },
      [&] { return sample_riesz_bartlett(params.t, alg, rng); },
      [&](const Element& a, const Element& sum) {
        Eigen::MatrixXd c = cholesky_triangular(sum, frame);
        Eigen::MatrixXd am = to_matrix(a);
        Eigen::MatrixXd ci = c.triangularView<Eigen::Lower>().solve(
            Eigen::MatrixXd::Identity(alg.rank, alg.rank));
        return from_matrix(alg, ci * am * ci.transpose());
      },
      diag);
}

// --- batches --------------------------------------------------------------------

std::vector<std::string> coordinate_names(const AlgebraDescriptor& alg) {
  std::vector<std::string> names;
  names.reserve(alg.ambient_dim);
  if (alg.kind == AlgebraKind::RealSymmetric) {
    for (int i = 0; i < alg.rank; ++i)
      for (int j = i; j < alg.rank; ++j)
        names.push_back("x_" + std::to_string(i + 1) + "_" +
                        std::to_string(j + 1));
  } else {
    for (int i = 0; i < alg.ambient_dim; ++i)
      names.push_back("x" + std::to_string(i));
  }
  return names;
}

void SampleBatch::write_csv(std::ostream& os) const {
  const auto names = coordinate_names(algebra);
  for (std::size_t i = 0; i < names.size(); ++i)
    os << names[i] << (i + 1 < names.size() ? "," : "\n");
  char buf[32];
  for (const auto& el : elements) {
    for (int i = 0; i < el.coords.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", el.coords[i]);
      os << buf << (i + 1 < el.coords.size() ? "," : "\n");
    }
  }
}

std::string SampleBatch::metadata_json() const {
  json j = {{"algebra", algebra_json(algebra)},
            {"params", json::parse(params_json.empty() ? "{}" : params_json)},
            {"seed", seed},
            {"shards", shards},
            {"sampler_kind", sampler_kind},
            {"n", elements.size()}};
  if (sampler_kind == "mcmc") j["acceptance_rate"] = acceptance_rate;
  if (sampler_kind == "exact") j["resamples"] = resamples;
  return j.dump(2);
}

SampleBatch sample_batch(const LawParams& law, int n, std::uint64_t seed,
                         int shards, int threads) {
  if (n < 0 || shards < 1) throw ParameterError("sample_batch: bad n/shards");
  const auto& alg = law_algebra(law);
  SampleBatch batch{alg, {}, law_to_json(law), seed, shards, "exact"};
  batch.elements.resize(n, zero_element(alg));
  std::vector<int> resamples(shards, 0);
  parallel_for(shards, threads, [&](int k) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(k));
    SampleDiagnostics diag;
    const int lo = static_cast<int>(static_cast<long long>(n) * k / shards);
    const int hi = static_cast<int>(static_cast<long long>(n) * (k + 1) / shards);
    for (int i = lo; i < hi; ++i) batch.elements[i] = law_sample(law, rng, &diag);
    resamples[k] = diag.resamples;
  });
  for (int k = 0; k < shards; ++k) batch.resamples += resamples[k];
  return batch;
}

// --- Metropolis-Hastings ----------------------------------------------------------

SampleBatch sample_mh(const std::function<double(const Element&)>& logpdf,
                      const Element& init, const MhOptions& opts, Rng& rng) {
  const auto& alg = init.algebra;
  double current_lp = logpdf(init);
  if (!std::isfinite(current_lp))
    throw DomainError("sample_mh: logpdf not finite at the initial point");
  const double scale = opts.proposal_scale > 0
                           ? opts.proposal_scale
                           : 0.05 * std::sqrt(2.0 / alg.ambient_dim);
  std::normal_distribution<double> gauss(0.0, scale);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  Element current = init;
  SampleBatch batch{alg, {}, "", 0, 1, "mcmc"};
  batch.elements.reserve(opts.steps / std::max(1, opts.thin));

  long long accepted = 0, proposed = 0;
  int window_accepts = 0, window_count = 0;
  const int total = opts.burn_in + opts.steps;
  for (int it = 0; it < total; ++it) {
    Element prop = current;
    for (int i = 0; i < alg.ambient_dim; ++i) prop.coords[i] += gauss(rng);
    const double lp = logpdf(prop);
    ++proposed;
    ++window_count;
    if (std::log(unif(rng)) < lp - current_lp) {
      current = prop;
      current_lp = lp;
      ++accepted;
      ++window_accepts;
    }
    if (window_count >= opts.stall_window) {
      if (window_accepts == 0)
        throw Error(
            "sample_mh: zero acceptances over a full window; "
            "reduce proposal_scale");
      window_accepts = 0;
      window_count = 0;
    }
    if (it >= opts.burn_in && (it - opts.burn_in) % std::max(1, opts.thin) == 0)
      batch.elements.push_back(current);
  }
  batch.acceptance_rate = static_cast<double>(accepted) / proposed;
  json j = {{"sampler", "mh"},
            {"proposal_scale", scale},
            {"burn_in", opts.burn_in},
            {"thin", opts.thin},
            {"steps", opts.steps}};
  batch.params_json = j.dump();
  return batch;
}

// --- quadrature oracle -------------------------------------------------------------

namespace {

double quad_grid(const std::function<double(const Element&)>& logpdf,
                 const AlgebraDescriptor& alg, int n) {
  const double h = 1.0 / n;
  const double sqrt2 = std::sqrt(2.0);
  Element x = zero_element(alg);
  double total = 0.0;
  for (int ia = 0; ia < n; ++ia) {
    const double a = (ia + 0.5) * h;
    for (int ic = 0; ic < n; ++ic) {
      const double c = (ic + 0.5) * h;
      const double bmax = std::sqrt(std::min(a * c, (1.0 - a) * (1.0 - c)));
      const double hb = 2.0 * bmax / n;
      double slice = 0.0;
      for (int ib = 0; ib < n; ++ib) {
        const double b = -bmax + (ib + 0.5) * hb;
        x.coords[0] = a;
        x.coords[1] = b * sqrt2;
        x.coords[2] = c;
        const double lp = logpdf(x);
        if (std::isfinite(lp)) slice += std::exp(lp);
      }
      total += slice * hb;
    }
  }
  // volume element: matrix-entry coordinates (a, b, c) vs orthonormal
  // coordinates (a, sqrt(2) b, c)
  return total * h * h * sqrt2;
}

}  // namespace

QuadratureResult numeric_normalization(
    const std::function<double(const Element&)>& logpdf,
    const AlgebraDescriptor& alg, int grid) {
  if (alg.kind != AlgebraKind::RealSymmetric || alg.rank != 2)
    throw UnsupportedError("numeric_normalization: rank-2 RealSymmetric only");
  const double fine = quad_grid(logpdf, alg, grid);
  const double coarse = quad_grid(logpdf, alg, std::max(2, grid / 2));
  return {fine, std::abs(fine - coarse)};
}

}  // namespace symcone
