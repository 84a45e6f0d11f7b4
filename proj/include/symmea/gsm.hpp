#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symmea/hermitian.hpp"

namespace symmea {

/// Defining parameters (w_alpha, x_alpha, y_alpha, z_{alpha beta}) extracted
/// from the measured traces. The z matrix stores z_{alpha alpha} = d/M_alpha^2
/// on its diagonal.
struct SymmetryParameters {
  std::vector<double> w, x, y;
  RealMatrix z;
};

struct GeneralizedSymmetricMeasurement {
  std::size_t dim = 0;
  std::vector<std::size_t> block_sizes;
  std::vector<std::vector<HermitianOperator>> blocks;
  SymmetryParameters params;

  std::size_t n_povms() const { return block_sizes.size(); }
  std::size_t total_operators() const;
  /// mu = sum_alpha 1/M_alpha
  double mu() const;
};

struct Violation {
  std::string condition;
  // Indices of the operators involved; npos when not applicable.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t alpha = npos, k = npos, beta = npos, l = npos;
  double measured = 0.0, expected = 0.0, deviation = 0.0;
  std::string describe() const;
};

struct VerifyReport {
  std::vector<Violation> violations;
  double max_trace_deviation = 0.0;
  bool ok() const { return violations.empty(); }
};

struct VerifyOptions {
  double trace_tol = 1e-9;     // Definition trace conditions and closure
  double identity_tol = 1e-9;  // per-block sum to identity
  double psd_tol = 1e-10;      // eigenvalue floor
};

struct VerifyResult {
  std::optional<GeneralizedSymmetricMeasurement> gsm;
  VerifyReport report;
  bool ok() const { return gsm.has_value(); }
};

/// Checks Definition-1 symmetry, POVM structure, and parameter constraints.
/// Violations are collected exhaustively, not fail-fast.
VerifyResult verify_gsm(std::vector<std::vector<HermitianOperator>> blocks, std::size_t d,
                        const VerifyOptions& options = {});

struct ICResult {
  bool complete = false;
  bool count_ok = false;
  std::size_t total_operators = 0;
  std::size_t required_count = 0;  // d^2 + N - 1
  std::size_t rank = 0;
  std::size_t full_rank = 0;  // d^2
  std::vector<double> singular_values;
};

/// Informational completeness: operator count d^2 + N - 1 and numerical rank
/// d^2 of {I, E_{alpha,k}: k <= M_alpha - 1} (threshold 1e-8 sigma_max).
ICResult is_informationally_complete(const GeneralizedSymmetricMeasurement& g);

struct ClassTags {
  bool r_class = false;
  bool s_class = false;
  bool constant_x = false;
  bool constant_y = false;
  bool equinumerous = false;
  bool generic = false;  // none of the symmetrization classes apply
  std::optional<double> r, s;
  std::vector<std::string> labels() const;
};

/// Symmetry-recovery classification of a verified measurement.
ClassTags classify(const GeneralizedSymmetricMeasurement& g, double tol = 1e-9);

struct IntervalFlag {
  double lo = 0.0, hi = 0.0;
  bool non_empty = false;
};

struct ParameterRanges {
  IntervalFlag constant_x;  // (max d/M^2, min{d/M, d^2/M^2}]
  IntervalFlag constant_y;
  IntervalFlag r;  // (0, min{d/M, d(d-1)/(M(M-1))}]
  IntervalFlag s;  // (0, min{1, (d-1)/(M-1)}]
};

ParameterRanges feasible_parameter_ranges(std::size_t d, std::span<const std::size_t> block_sizes);

}  // namespace symmea
