#include "symmea/applications.hpp"

#include <cmath>
#include <numbers>

#include "symmea/eigh.hpp"
#include "symmea/errors.hpp"
#include "symmea/kernels.hpp"

namespace symmea {

DualFrame dual_frame(const GeneralizedSymmetricMeasurement& g) {
  const ICResult ic = is_informationally_complete(g);
  if (!ic.complete)
    throw NotInformationallyComplete(
        "dual frame requires an informationally complete measurement: " +
            std::to_string(ic.total_operators) + " operators (need " + std::to_string(ic.required_count) +
            "), numerical rank " + std::to_string(ic.rank) + " of " + std::to_string(ic.full_rank),
        ic.rank, ic.full_rank);

  const double d = static_cast<double>(g.dim);
  const double n = static_cast<double>(g.n_povms());
  DualFrame f;
  f.a.resize(g.n_povms());
  f.b.resize(g.n_povms());
  f.blocks.resize(g.n_povms());
  const HermitianOperator eye = HermitianOperator::identity(g.dim);
  for (std::size_t alpha = 0; alpha < g.n_povms(); ++alpha) {
    const double gap = g.params.x[alpha] - g.params.y[alpha];
    f.a[alpha] = 1.0 / gap;
    f.b[alpha] = g.params.w[alpha] / (d * gap) - 1.0 / (d * n);
    f.blocks[alpha].reserve(g.block_sizes[alpha]);
    for (const auto& e : g.blocks[alpha])
      f.blocks[alpha].push_back(f.a[alpha] * e - f.b[alpha] * eye);
  }
  return f;
}

HermitianOperator reconstruct(const DualFrame& f, const std::vector<std::vector<double>>& probabilities) {
  if (probabilities.size() != f.blocks.size())
    throw DimensionMismatch("probability table does not match the frame layout");
  const std::size_t d = f.blocks.front().front().dim();
  ComplexMatrix acc(d, d);
  for (std::size_t a = 0; a < f.blocks.size(); ++a) {
    if (probabilities[a].size() != f.blocks[a].size())
      throw DimensionMismatch("probability table does not match the frame layout");
    for (std::size_t k = 0; k < f.blocks[a].size(); ++k)
      kernels::axpy(probabilities[a][k], f.blocks[a][k].matrix().data(), acc.data(), acc.size());
  }
  return hermitian_unchecked(std::move(acc));
}

ProbabilityTable probabilities(const GeneralizedSymmetricMeasurement& g, const DensityMatrix& rho) {
  if (rho.dim() != g.dim) throw DimensionMismatch("state dimension does not match the measurement");
  ProbabilityTable t;
  t.blocks.resize(g.n_povms());
  for (std::size_t a = 0; a < g.n_povms(); ++a) {
    double sum = 0.0;
    t.blocks[a].reserve(g.block_sizes[a]);
    for (const auto& e : g.blocks[a]) {
      double p = hs_inner(rho.op(), e);
      if (p < 0.0) {
        if (p < -1e-12) throw Error("negative outcome probability " + std::to_string(p));
        p = 0.0;
      }
      t.blocks[a].push_back(p);
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-10)
      throw Error("block probabilities sum to " + std::to_string(sum) + " instead of 1");
  }
  return t;
}

double index_of_coincidence(const ProbabilityTable& t) {
  double c = 0.0;
  for (const auto& block : t.blocks)
    for (double p : block) c += p * p;
  return c;
}

double c_max(const GeneralizedSymmetricMeasurement& g) {
  const ClassTags tags = classify(g);
  if (!tags.r_class)
    throw BoundUnavailable(
        "C_max has no closed form unless x_alpha - y_alpha is constant (r-class measurement)");
  const double d = static_cast<double>(g.dim);
  return (d - 1.0) / d * *tags.r + g.mu();
}

EurBound eur_bound(const GeneralizedSymmetricMeasurement& g) {
  const double bound = std::log(static_cast<double>(g.n_povms()) / c_max(g));
  return {bound, bound / std::numbers::ln2};
}

double eur_state_bound(const ProbabilityTable& t) {
  return std::log(static_cast<double>(t.n_povms()) / index_of_coincidence(t));
}

EntropyReport shannon_renyi_check(const ProbabilityTable& t) {
  EntropyReport rep;
  rep.blocks.reserve(t.blocks.size());
  rep.jensen_ok = true;
  double mean = 0.0;
  for (const auto& block : t.blocks) {
    EntropyReport::Block b;
    double c_block = 0.0;
    for (double p : block) {
      if (p > 0.0) b.shannon -= p * std::log(p);
      c_block += p * p;
    }
    b.renyi2 = -std::log(c_block);
    rep.jensen_ok = rep.jensen_ok && b.shannon >= b.renyi2 - 1e-12;
    mean += b.shannon;
    rep.blocks.push_back(b);
  }
  rep.mean_shannon = mean / static_cast<double>(t.blocks.size());
  rep.state_bound = eur_state_bound(t);
  rep.mean_bound_ok = rep.mean_shannon >= rep.state_bound - 1e-10;
  return rep;
}

double CorrelationMatrix::trace() const {
  if (p.rows() != p.cols()) throw DimensionMismatch("correlation matrix trace needs a square layout");
  double t = 0.0;
  for (std::size_t i = 0; i < p.rows(); ++i) t += p(i, i);
  return t;
}

double CorrelationMatrix::trace_norm() const {
  ComplexMatrix m(p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) m(i, j) = p(i, j);
  return symmea::trace_norm(m);
}

CorrelationMatrix correlation_matrix(const GeneralizedSymmetricMeasurement& ga,
                                     const GeneralizedSymmetricMeasurement& gb,
                                     const DensityMatrix& rho_ab) {
  const std::size_t da = ga.dim, db = gb.dim;
  if (rho_ab.dim() != da * db)
    throw DimensionMismatch("bipartite state dimension must be d_A * d_B");
  CorrelationMatrix out;
  out.row_blocks = ga.block_sizes;
  out.col_blocks = gb.block_sizes;
  out.p = RealMatrix(ga.total_operators(), gb.total_operators());

  const ComplexMatrix& rho = rho_ab.matrix();
  std::size_t row = 0;
  for (const auto& block_a : ga.blocks)
    for (const auto& ea : block_a) {
      // Contract the A side once per operator:
      // m_b[b, b'] = sum_{a,a'} EA[a', a] rho[(a b), (a' b')], so that
      // P = sum_{b,b'} m_b[b, b'] EB[b', b] = Tr(m_b EB).
      ComplexMatrix mb(db, db);
      for (std::size_t a = 0; a < da; ++a)
        for (std::size_t ap = 0; ap < da; ++ap) {
          const cplx w = std::conj(ea(a, ap));  // = EA[a', a]
          if (w == cplx{0.0, 0.0}) continue;
          for (std::size_t b = 0; b < db; ++b)
            for (std::size_t bp = 0; bp < db; ++bp) mb(b, bp) += w * rho(a * db + b, ap * db + bp);
        }
      std::size_t col = 0;
      for (const auto& block_b : gb.blocks)
        for (const auto& eb : block_b) {
          out.p(row, col) = trace_of_product(mb, eb.matrix()).real();
          ++col;
        }
      ++row;
    }
  return out;
}

SeparabilityReport separability_test(const GeneralizedSymmetricMeasurement& ga,
                                     const GeneralizedSymmetricMeasurement& gb,
                                     const DensityMatrix& rho_ab, double tol) {
  SeparabilityReport rep;
  rep.c_max_a = c_max(ga);
  rep.c_max_b = c_max(gb);
  const CorrelationMatrix p = correlation_matrix(ga, gb, rho_ab);

  rep.norm_value = p.trace_norm();
  rep.norm_bound = std::sqrt(rep.c_max_a * rep.c_max_b);
  rep.norm_margin = rep.norm_value - rep.norm_bound;

  rep.trace_applicable = ga.dim == gb.dim && p.p.rows() == p.p.cols();
  if (rep.trace_applicable) {
    rep.trace_value = p.trace();
    rep.trace_bound = 0.5 * (rep.c_max_a + rep.c_max_b);
    rep.trace_margin = rep.trace_value - rep.trace_bound;
  }

  const bool violated =
      rep.norm_margin > tol || (rep.trace_applicable && rep.trace_margin > tol);
  rep.verdict = violated ? Verdict::entangled : Verdict::inconclusive;
  return rep;
}

DensityMatrix sample_separable_state(std::size_t d_a, std::size_t d_b, std::size_t max_terms, Rng& rng) {
  if (max_terms < 1) throw Error("separable sampler needs at least one term");
  const std::size_t terms = 1 + static_cast<std::size_t>(rng.uniform() * static_cast<double>(max_terms));
  const std::size_t k = std::min(terms, max_terms);
  const auto weights = dirichlet_weights(k, rng);

  ComplexMatrix acc(d_a * d_b, d_a * d_b);
  for (std::size_t i = 0; i < k; ++i) {
    const auto psi_a = haar_state(d_a, rng);
    const auto psi_b = haar_state(d_b, rng);
    const ComplexMatrix rho_a = pure_state(psi_a).matrix();
    const ComplexMatrix rho_b = pure_state(psi_b).matrix();
    const ComplexMatrix prod = kron(rho_a, rho_b);
    kernels::axpy(weights[i], prod.data(), acc.data(), acc.size());
  }
  return DensityMatrix(hermitian_unchecked(std::move(acc)));
}

}  // namespace symmea
