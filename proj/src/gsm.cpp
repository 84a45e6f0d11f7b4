#include "symmea/gsm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "symmea/eigh.hpp"
#include "symmea/errors.hpp"

namespace symmea {

std::size_t GeneralizedSymmetricMeasurement::total_operators() const {
  std::size_t n = 0;
  for (std::size_t m : block_sizes) n += m;
  return n;
}

double GeneralizedSymmetricMeasurement::mu() const {
  double mu = 0.0;
  for (std::size_t m : block_sizes) mu += 1.0 / static_cast<double>(m);
  return mu;
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << condition;
  if (alpha != npos) {
    os << " [alpha=" << alpha + 1;
    if (k != npos) os << ", k=" << k + 1;
    if (beta != npos) os << ", beta=" << beta + 1;
    if (l != npos) os << ", l=" << l + 1;
    os << "]";
  }
  os << ": measured " << measured << ", expected " << expected << ", deviation " << deviation;
  return os.str();
}

namespace {

void push_violation(VerifyReport& rep, std::string condition, std::size_t alpha, std::size_t k,
                    std::size_t beta, std::size_t l, double measured, double expected) {
  Violation v;
  v.condition = std::move(condition);
  v.alpha = alpha;
  v.k = k;
  v.beta = beta;
  v.l = l;
  v.measured = measured;
  v.expected = expected;
  v.deviation = std::abs(measured - expected);
  rep.violations.push_back(std::move(v));
}

constexpr std::size_t npos = Violation::npos;

}  // namespace

VerifyResult verify_gsm(std::vector<std::vector<HermitianOperator>> blocks, std::size_t d,
                        const VerifyOptions& opt) {
  VerifyResult result;
  VerifyReport& rep = result.report;

  if (blocks.empty()) {
    push_violation(rep, "no POVM blocks", npos, npos, npos, npos, 0.0, 1.0);
    return result;
  }
  const std::size_t n = blocks.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (blocks[a].size() < 2)
      push_violation(rep, "POVM needs at least two elements", a, npos, npos, npos,
                     static_cast<double>(blocks[a].size()), 2.0);
    for (const auto& e : blocks[a])
      if (e.dim() != d) {
        push_violation(rep, "operator dimension mismatch", a, npos, npos, npos,
                       static_cast<double>(e.dim()), static_cast<double>(d));
        return result;
      }
  }
  if (!rep.violations.empty()) return result;

  // POVM structure: completeness and positivity.
  const ComplexMatrix eye = ComplexMatrix::identity(d);
  for (std::size_t a = 0; a < n; ++a) {
    ComplexMatrix sum(d, d);
    for (const auto& e : blocks[a]) sum += e.matrix();
    const double dev = max_abs_diff(sum, eye);
    if (dev > opt.identity_tol)
      push_violation(rep, "block does not sum to identity", a, npos, npos, npos, dev, 0.0);
    for (std::size_t k = 0; k < blocks[a].size(); ++k) {
      const auto ev = eigvalsh(blocks[a][k].matrix());
      if (!ev.empty() && ev.front() < -opt.psd_tol)
        push_violation(rep, "operator is not positive semidefinite", a, k, npos, npos, ev.front(), 0.0);
    }
  }

  // Trace conditions of the definition: extract parameters by averaging,
  // then validate every pair against the averages.
  SymmetryParameters params;
  params.w.resize(n);
  params.x.resize(n);
  params.y.resize(n);
  params.z = RealMatrix(n, n);

  auto check = [&](const char* cond, std::size_t a, std::size_t k, std::size_t b, std::size_t l,
                   double measured, double expected) {
    const double dev = std::abs(measured - expected);
    rep.max_trace_deviation = std::max(rep.max_trace_deviation, dev);
    if (dev > opt.trace_tol) push_violation(rep, cond, a, k, b, l, measured, expected);
  };

  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t m = blocks[a].size();
    double w = 0.0, x = 0.0, y = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      w += trace(blocks[a][k].matrix()).real();
      x += hs_inner(blocks[a][k], blocks[a][k]);
    }
    w /= static_cast<double>(m);
    x /= static_cast<double>(m);
    std::size_t pairs = 0;
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = k + 1; l < m; ++l) {
        y += hs_inner(blocks[a][k], blocks[a][l]);
        ++pairs;
      }
    y /= static_cast<double>(pairs);
    params.w[a] = w;
    params.x[a] = x;
    params.y[a] = y;
    params.z(a, a) = static_cast<double>(d) / static_cast<double>(m * m);

    for (std::size_t k = 0; k < m; ++k) {
      check("Tr E_{a,k} is not constant in k", a, k, npos, npos, trace(blocks[a][k].matrix()).real(), w);
      check("Tr E_{a,k}^2 is not constant in k", a, k, npos, npos, hs_inner(blocks[a][k], blocks[a][k]),
            x);
      for (std::size_t l = k + 1; l < m; ++l)
        check("Tr E_{a,k} E_{a,l} is not constant over pairs", a, k, a, l,
              hs_inner(blocks[a][k], blocks[a][l]), y);
    }
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      double z = 0.0;
      std::size_t cnt = 0;
      for (const auto& ea : blocks[a])
        for (const auto& eb : blocks[b]) {
          z += hs_inner(ea, eb);
          ++cnt;
        }
      z /= static_cast<double>(cnt);
      params.z(a, b) = params.z(b, a) = z;
      for (std::size_t k = 0; k < blocks[a].size(); ++k)
        for (std::size_t l = 0; l < blocks[b].size(); ++l)
          check("Tr E_{a,k} E_{b,l} is not constant across blocks", a, k, b, l,
                hs_inner(blocks[a][k], blocks[b][l]), z);
    }

  // Parameter closure: w = d/M, y = (d - Mx)/(M(M-1)), z_ab = d/(Ma Mb),
  // and the strict range of x.
  for (std::size_t a = 0; a < n; ++a) {
    const double m = static_cast<double>(blocks[a].size());
    const double dd = static_cast<double>(d);
    check("w_alpha must equal d/M_alpha", a, npos, npos, npos, params.w[a], dd / m);
    check("y_alpha must equal (d - M x)/(M(M-1))", a, npos, npos, npos, params.y[a],
          (dd - m * params.x[a]) / (m * (m - 1.0)));
    const double x_lo = dd / (m * m);
    const double x_hi = std::min(dd * dd / (m * m), dd / m);
    if (params.x[a] <= x_lo + opt.trace_tol)
      push_violation(rep, "x_alpha violates the strict lower bound d/M^2", a, npos, npos, npos,
                     params.x[a], x_lo);
    if (params.x[a] > x_hi + opt.trace_tol)
      push_violation(rep, "x_alpha exceeds min{d^2/M^2, d/M}", a, npos, npos, npos, params.x[a], x_hi);
    for (std::size_t b = 0; b < n; ++b)
      if (b != a)
        check("z_{alpha,beta} must equal d/(M_alpha M_beta)", a, npos, b, npos, params.z(a, b),
              dd / (m * static_cast<double>(blocks[b].size())));
  }

  if (!rep.violations.empty()) return result;

  GeneralizedSymmetricMeasurement g;
  g.dim = d;
  g.block_sizes.reserve(n);
  for (const auto& b : blocks) g.block_sizes.push_back(b.size());
  g.blocks = std::move(blocks);
  g.params = std::move(params);
  result.gsm = std::move(g);
  return result;
}

ICResult is_informationally_complete(const GeneralizedSymmetricMeasurement& g) {
  ICResult r;
  const std::size_t d = g.dim;
  r.full_rank = d * d;
  r.total_operators = g.total_operators();
  r.required_count = d * d + g.n_povms() - 1;
  r.count_ok = r.total_operators == r.required_count;

  // Vectorize {I, E_{alpha,k}: k <= M_alpha - 1}; within a POVM the last
  // element is fixed by the identity decomposition.
  std::size_t cols = 1;
  for (std::size_t m : g.block_sizes) cols += m - 1;
  ComplexMatrix v(d * d, cols);
  for (std::size_t i = 0; i < d; ++i) v(i * d + i, 0) = 1.0;
  std::size_t c = 1;
  for (const auto& block : g.blocks)
    for (std::size_t k = 0; k + 1 < block.size(); ++k, ++c)
      for (std::size_t idx = 0; idx < d * d; ++idx) v(idx, c) = block[k].matrix().data()[idx];

  r.singular_values = singular_values(v);
  const double cut = r.singular_values.empty() ? 0.0 : 1e-8 * r.singular_values.front();
  for (double s : r.singular_values)
    if (s > cut) ++r.rank;
  r.complete = r.count_ok && r.rank == r.full_rank;
  return r;
}

namespace {

bool nearly_constant(const std::vector<double>& v, double tol, double& mean_out) {
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  mean_out = mean;
  for (double x : v)
    if (std::abs(x - mean) > tol) return false;
  return true;
}

}  // namespace

std::vector<std::string> ClassTags::labels() const {
  std::vector<std::string> out;
  if (r_class) out.push_back("R_CLASS");
  if (s_class) out.push_back("S_CLASS");
  if (constant_x) out.push_back("CONSTANT_X");
  if (constant_y) out.push_back("CONSTANT_Y");
  if (equinumerous) out.push_back("EQUINUMEROUS");
  if (generic) out.push_back("GENERIC");
  return out;
}

ClassTags classify(const GeneralizedSymmetricMeasurement& g, double tol) {
  ClassTags tags;
  const std::size_t n = g.n_povms();
  const double d = static_cast<double>(g.dim);

  tags.equinumerous =
      std::all_of(g.block_sizes.begin(), g.block_sizes.end(), [&](std::size_t m) { return m == g.block_sizes.front(); });

  double mean = 0.0;
  tags.constant_x = nearly_constant(g.params.x, tol, mean);
  tags.constant_y = nearly_constant(g.params.y, tol, mean);

  std::vector<double> diff(n), ratio(n);
  for (std::size_t a = 0; a < n; ++a) {
    diff[a] = g.params.x[a] - g.params.y[a];
    ratio[a] = diff[a] / g.params.w[a];
  }

  double r = 0.0;
  if (nearly_constant(diff, tol, r)) {
    double r_hi = std::numeric_limits<double>::infinity();
    for (std::size_t m : g.block_sizes) {
      const double md = static_cast<double>(m);
      r_hi = std::min({r_hi, d / md, d * (d - 1.0) / (md * (md - 1.0))});
    }
    if (r > 0.0 && r <= r_hi + tol) {
      tags.r_class = true;
      tags.r = r;
    }
  }
  double s = 0.0;
  if (nearly_constant(ratio, tol, s)) {
    double s_hi = 1.0;
    for (std::size_t m : g.block_sizes)
      s_hi = std::min(s_hi, (d - 1.0) / (static_cast<double>(m) - 1.0));
    if (s > 0.0 && s <= s_hi + tol) {
      tags.s_class = true;
      tags.s = s;
    }
  }

  tags.generic = !(tags.r_class || tags.s_class || tags.constant_x || tags.constant_y);
  return tags;
}

ParameterRanges feasible_parameter_ranges(std::size_t d, std::span<const std::size_t> block_sizes) {
  if (block_sizes.empty()) throw Error("feasible_parameter_ranges needs at least one block");
  const double dd = static_cast<double>(d);
  ParameterRanges out;

  double x_lo = 0.0, x_hi = std::numeric_limits<double>::infinity();
  double y_lo = 0.0, y_hi = std::numeric_limits<double>::infinity();
  double r_hi = std::numeric_limits<double>::infinity();
  double s_hi = 1.0;
  for (std::size_t ms : block_sizes) {
    if (ms < 2) throw Error("block sizes must be at least 2");
    const double m = static_cast<double>(ms);
    x_lo = std::max(x_lo, dd / (m * m));
    x_hi = std::min({x_hi, dd / m, dd * dd / (m * m)});
    y_lo = std::max(y_lo, std::max(0.0, dd * (m - dd) / (m * m * (m - 1.0))));
    y_hi = std::min(y_hi, dd / (m * m));
    r_hi = std::min({r_hi, dd / m, dd * (d - 1.0) / (m * (m - 1.0))});
    s_hi = std::min(s_hi, (dd - 1.0) / (m - 1.0));
  }
  out.constant_x = {x_lo, x_hi, x_lo < x_hi};
  out.constant_y = {y_lo, y_hi, y_lo < y_hi};
  out.r = {0.0, r_hi, r_hi > 0.0};
  out.s = {0.0, s_hi, s_hi > 0.0};
  return out;
}

}  // namespace symmea
