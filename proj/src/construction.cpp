#include "symmea/construction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symmea/eigh.hpp"
#include "symmea/errors.hpp"

namespace symmea {

namespace {

double variant_factor(std::size_t m, bool primed) {
  const double root = std::sqrt(static_cast<double>(m));
  return primed ? (1.0 - root) : (1.0 + root);
}

}  // namespace

std::vector<HermitianOperator> build_h_operators(const BasisPartition& p, std::size_t alpha, bool primed) {
  const auto gs = p.block(alpha);
  const std::size_t m = p.block_size(alpha);
  const double root = std::sqrt(static_cast<double>(m));
  const double f = variant_factor(m, primed);

  HermitianOperator g_sum = p.block_sum(alpha);
  std::vector<HermitianOperator> h;
  h.reserve(m);
  for (std::size_t k = 0; k + 1 < m; ++k) {
    // g_sum -/+ sqrt(M) f G_k; the variant's sign pattern is carried by f.
    h.push_back(g_sum + (primed ? root * f : -root * f) * gs[k]);
  }
  h.push_back(f * g_sum);
  return h;
}

Interval t_range(std::span<const HermitianOperator> h_ops, std::size_t m_alpha) {
  double lo_ev = 0.0, hi_ev = 0.0;
  bool any = false;
  for (const auto& h : h_ops) {
    const auto ev = eigvalsh(h.matrix());
    if (ev.empty()) continue;
    if (!any) {
      lo_ev = ev.front();
      hi_ev = ev.back();
      any = true;
    } else {
      lo_ev = std::min(lo_ev, ev.front());
      hi_ev = std::max(hi_ev, ev.back());
    }
  }
  if (!any || (hi_ev <= 1e-14 && lo_ev >= -1e-14))
    throw Error("degenerate block: all H operators vanish");
  const double m = static_cast<double>(m_alpha);
  return {-1.0 / (m * hi_ev), 1.0 / (m * std::abs(lo_ev))};
}

std::vector<HermitianOperator> build_measurement_block(const BasisPartition& p, std::size_t alpha,
                                                       VariantTag variant, double t) {
  if (t == 0.0)
    throw InfeasibleConstruction("t = 0 is excluded (trivial POVM with x = d/M^2)", 0, 0.0);
  const std::size_t m = p.block_size(alpha);
  const auto h = build_h_operators(p, alpha, variant.primed);
  const Interval range = t_range(h, m);
  if (!range.contains(t, 1e-12)) {
    // Identify the eigenvalue that breaks positivity for the diagnostic.
    for (std::size_t k = 0; k < h.size(); ++k) {
      const auto ev = eigvalsh(h[k].matrix());
      const double worst = 1.0 / static_cast<double>(m) + t * (t > 0 ? ev.front() : ev.back());
      if (worst < -1e-10)
        throw InfeasibleConstruction(
            "t = " + std::to_string(t) + " outside admissible range [" + std::to_string(range.lo) +
                ", " + std::to_string(range.hi) + "]: operator " + std::to_string(k + 1) +
                " acquires eigenvalue " + std::to_string(worst),
            k, worst);
    }
    throw InfeasibleConstruction("t outside admissible range [" + std::to_string(range.lo) + ", " +
                                     std::to_string(range.hi) + "]",
                                 0, 0.0);
  }

  const HermitianOperator eye = HermitianOperator::identity(p.dim());
  std::vector<HermitianOperator> e;
  e.reserve(m);
  for (std::size_t k = 0; k < m; ++k) e.push_back((1.0 / static_cast<double>(m)) * eye + t * h[k]);
  return e;
}

double x_from_t(double t, std::size_t m_alpha, std::size_t d, bool primed) {
  const double m = static_cast<double>(m_alpha);
  const double f = variant_factor(m_alpha, primed);
  return (t * t * m * m * (m - 1.0) * f * f + static_cast<double>(d)) / (m * m);
}

double t_magnitude_from_x(double x, std::size_t m_alpha, std::size_t d, bool primed) {
  const double m = static_cast<double>(m_alpha);
  const double f = variant_factor(m_alpha, primed);
  const double num = m * m * x - static_cast<double>(d);
  if (num < 0.0) throw Error("x below the d/M^2 lower bound has no real t");
  return std::sqrt(num / (m * m * (m - 1.0) * f * f));
}

std::vector<HermitianOperator> recover_basis_block(std::span<const HermitianOperator> e_ops, double t,
                                                   VariantTag variant, double tol) {
  if (e_ops.size() < 2) throw Error("recovery needs a block of at least two operators");
  if (t == 0.0) throw Error("recovery needs t != 0");
  const std::size_t m = e_ops.size();
  const std::size_t d = e_ops.front().dim();
  const double root = std::sqrt(static_cast<double>(m));
  const double f = variant_factor(m, variant.primed);
  const double denom = t * static_cast<double>(m) * f * f;
  const HermitianOperator eye = HermitianOperator::identity(d);

  std::vector<HermitianOperator> gs;
  gs.reserve(m - 1);
  for (std::size_t k = 0; k + 1 < m; ++k) {
    HermitianOperator g = eye;
    if (variant.primed) {
      g -= root * e_ops[m - 1];
      g += root * f * e_ops[k];
    } else {
      g += root * e_ops[m - 1];
      g -= root * f * e_ops[k];
    }
    gs.push_back((1.0 / denom) * g);
  }

  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (std::abs(trace(gs[i].matrix())) > tol)
      throw Error("recovered operator " + std::to_string(i + 1) + " is not traceless; inputs do not " +
                  "match the declared variant/t");
    for (std::size_t j = i; j < gs.size(); ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      const double dev = std::abs(hs_inner(gs[i], gs[j]) - expected);
      if (dev > tol)
        throw Error("recovered operators fail orthonormality by " + std::to_string(dev) +
                    "; inputs do not match the declared variant/t");
    }
  }
  return gs;
}

VariantCoincidenceReport variant_coincidence(const BasisPartition& p, std::size_t alpha, double x,
                                             double tol) {
  const std::size_t m = p.block_size(alpha);
  const std::size_t d = p.dim();
  VariantCoincidenceReport rep;
  rep.x = x;
  rep.t_unprimed = t_magnitude_from_x(x, m, d, false);
  rep.t_primed = -t_magnitude_from_x(x, m, d, true);

  const auto e = build_measurement_block(p, alpha, {false, +1}, rep.t_unprimed);
  const auto ep = build_measurement_block(p, alpha, {true, -1}, rep.t_primed);

  // Greedy set matching; blocks are tiny.
  rep.pairing.assign(m, m);
  std::vector<bool> used(m, false);
  double worst = 0.0;
  bool all_matched = true;
  for (std::size_t k = 0; k < m; ++k) {
    double best = 0.0;
    std::size_t best_j = m;
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j]) continue;
      const double dev = max_abs_diff(e[k].matrix(), ep[j].matrix());
      if (best_j == m || dev < best) {
        best = dev;
        best_j = j;
      }
    }
    rep.pairing[k] = best_j;
    used[best_j] = true;
    worst = std::max(worst, best);
    if (best > tol) all_matched = false;
  }
  rep.max_pair_deviation = worst;
  rep.equal_sets = all_matched;
  return rep;
}

std::vector<std::vector<HermitianOperator>> build_measurement_blocks(const BasisPartition& p,
                                                                     std::span<const BlockSpec> specs) {
  if (specs.size() != p.n_blocks()) throw Error("one BlockSpec per block required");
  std::vector<std::vector<HermitianOperator>> blocks;
  blocks.reserve(specs.size());
  for (std::size_t a = 0; a < specs.size(); ++a)
    blocks.push_back(build_measurement_block(p, a, specs[a].variant, specs[a].t));
  return blocks;
}

}  // namespace symmea
