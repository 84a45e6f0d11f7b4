// symmea: construct, verify, certify and apply generalized symmetric
// measurements from the command line.
//
// Exit codes: 0 success, 1 usage/parse error, 2 infeasible construction or
// dimension/class mismatch, 3 validation failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "symmea/applications.hpp"
#include "symmea/basis.hpp"
#include "symmea/construction.hpp"
#include "symmea/designs.hpp"
#include "symmea/errors.hpp"
#include "symmea/gsm.hpp"
#include "symmea/json_io.hpp"
#include "symmea/random.hpp"

namespace {

using namespace symmea;

struct UsageError : Error {
  using Error::Error;
};

struct VariantSpec {
  bool primed = false;
  int sign = 0;  // 0 = unspecified
};

VariantSpec parse_variant(const std::string& s) {
  VariantSpec v;
  std::string family = s;
  if (const auto colon = s.find(':'); colon != std::string::npos) {
    family = s.substr(0, colon);
    const std::string sign = s.substr(colon + 1);
    if (sign == "+")
      v.sign = +1;
    else if (sign == "-")
      v.sign = -1;
    else
      throw UsageError("variant sign must be '+' or '-': " + s);
  }
  if (family == "unprimed")
    v.primed = false;
  else if (family == "primed")
    v.primed = true;
  else
    throw UsageError("variant must be 'unprimed' or 'primed', optionally ':+' or ':-': " + s);
  return v;
}

std::string variant_label(VariantTag v) {
  return std::string(v.primed ? "primed" : "unprimed") + (v.sign >= 0 ? ":+" : ":-");
}

void emit(const json& j, const std::string& output) {
  if (output.empty() || output == "-")
    std::cout << j.dump(2) << '\n';
  else
    write_json_file(output, j);
}

json violations_to_json(const VerifyReport& rep, double tol) {
  json arr = json::array();
  for (const auto& v : rep.violations) {
    json e;
    e["condition"] = v.condition;
    if (v.alpha != Violation::npos) e["alpha"] = v.alpha + 1;
    if (v.k != Violation::npos) e["k"] = v.k + 1;
    if (v.beta != Violation::npos) e["beta"] = v.beta + 1;
    if (v.l != Violation::npos) e["l"] = v.l + 1;
    e["measured"] = v.measured;
    e["expected"] = v.expected;
    e["deviation"] = toleranced(v.deviation, tol);
    arr.push_back(std::move(e));
  }
  return arr;
}

json verification_json(const VerifyResult& result, double tol) {
  json j;
  j["valid"] = result.ok();
  j["max_trace_deviation"] = toleranced(result.report.max_trace_deviation, tol);
  j["violations"] = violations_to_json(result.report, tol);
  if (!result.ok()) return j;

  const auto& g = *result.gsm;
  json params;
  params["d"] = g.dim;
  params["block_sizes"] = g.block_sizes;
  params["w"] = g.params.w;
  params["x"] = g.params.x;
  params["y"] = g.params.y;
  json zrows = json::array();
  for (std::size_t a = 0; a < g.n_povms(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < g.n_povms(); ++b) row.push_back(g.params.z(a, b));
    zrows.push_back(std::move(row));
  }
  params["z"] = std::move(zrows);
  params["mu"] = g.mu();
  j["parameters"] = std::move(params);

  const auto ic = is_informationally_complete(g);
  json icj;
  icj["complete"] = ic.complete;
  icj["count_ok"] = ic.count_ok;
  icj["operator_count"] = ic.total_operators;
  icj["required_count"] = ic.required_count;
  icj["rank"] = ic.rank;
  icj["full_rank"] = ic.full_rank;
  j["informationally_complete"] = std::move(icj);

  const auto tags = classify(g, tol);
  j["class_tags"] = tags.labels();
  if (tags.r) j["r"] = toleranced(*tags.r, tol);
  if (tags.s) j["s"] = toleranced(*tags.s, tol);
  return j;
}

GeneralizedSymmetricMeasurement load_gsm(const std::string& path, double tol) {
  const MeasurementFile file = read_measurement_file(path);
  VerifyOptions opt;
  opt.trace_tol = tol;
  opt.identity_tol = tol;
  auto result = verify_gsm(file.operators, file.d, opt);
  if (!result.ok()) {
    std::string msg = path + " fails verification:";
    for (const auto& v : result.report.violations) msg += "\n  " + v.describe();
    throw Error(msg);
  }
  return *std::move(result.gsm);
}

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
  std::size_t d = 0;
  std::vector<std::size_t> blocks;
  std::string basis_file;
  std::vector<std::string> variants;
  std::vector<double> t_values;
  std::vector<double> x_values;
  double r_value = 0.0;
  bool use_r = false;
  bool t_max = false, t_min = false, t_abs_min = false, projective = false;
  std::uint64_t rotate_seed = 0;
  bool use_rotation = false;
  std::string output;
};

int run_construct(const ConstructArgs& args) {
  const std::size_t n = args.blocks.size();
  if (n == 0) throw UsageError("--blocks must name at least one POVM size");

  std::vector<HermitianOperator> ops;
  std::string basis_name;
  if (args.basis_file.empty()) {
    ops = gell_mann_basis(args.d);
    basis_name = "gell-mann";
  } else {
    ops = read_basis_file(args.basis_file);
    basis_name = "file:" + args.basis_file;
  }
  BasisPartition partition(std::move(ops), args.blocks);
  if (partition.dim() != args.d)
    throw UsageError("basis operators have dimension " + std::to_string(partition.dim()) +
                     ", expected " + std::to_string(args.d));
  if (args.use_rotation) {
    Rng rng(args.rotate_seed);
    for (std::size_t a = 0; a < n; ++a)
      if (partition.block_size(a) > 2)
        partition = rotate_block(partition, a, random_orthogonal(partition.block_size(a) - 1, rng));
  }

  // Broadcast a single variant; otherwise one per block.
  std::vector<VariantSpec> variants(n);
  if (args.variants.size() == 1) {
    for (auto& v : variants) v = parse_variant(args.variants.front());
  } else if (args.variants.size() == n) {
    for (std::size_t a = 0; a < n; ++a) variants[a] = parse_variant(args.variants[a]);
  } else if (!args.variants.empty()) {
    throw UsageError("--variant needs one entry or one per block");
  }

  const int modes = int(!args.t_values.empty()) + int(!args.x_values.empty()) + int(args.use_r) +
                    int(args.t_max) + int(args.t_min) + int(args.t_abs_min) + int(args.projective);
  if (modes != 1)
    throw UsageError(
        "choose exactly one of --t, --x, --r, --t-max, --t-min, --t-abs-min, --projective");

  auto per_block = [&](const std::vector<double>& vals, const char* flag) {
    if (vals.size() == 1) return std::vector<double>(n, vals.front());
    if (vals.size() != n) throw UsageError(std::string(flag) + " needs one value or one per block");
    return vals;
  };

  std::vector<BlockSpec> specs(n);
  if (!args.t_values.empty()) {
    const auto ts = per_block(args.t_values, "--t");
    for (std::size_t a = 0; a < n; ++a) {
      if (ts[a] == 0.0) throw UsageError("t = 0 is not a valid construction strength");
      const VariantSpec v = variants[a];
      if (v.sign != 0 && v.sign != (ts[a] > 0 ? +1 : -1))
        throw UsageError("--variant sign disagrees with the sign of --t for block " +
                         std::to_string(a + 1));
      specs[a] = {{v.primed, ts[a] > 0 ? +1 : -1}, ts[a]};
    }
  } else if (!args.x_values.empty()) {
    const auto xs = per_block(args.x_values, "--x");
    for (std::size_t a = 0; a < n; ++a) {
      const VariantSpec v = variants[a];
      if (v.sign == 0)
        throw UsageError(
            "--x needs signed variants (e.g. --variant unprimed:+), the sign is not determined "
            "by x");
      const double mag = t_magnitude_from_x(xs[a], args.blocks[a], args.d, v.primed);
      specs[a] = {{v.primed, v.sign}, v.sign * mag};
    }
  } else {
    for (std::size_t a = 0; a < n; ++a) {
      const VariantSpec v = variants[a];
      const int sign = v.sign;
      if (args.use_r || args.projective) {
        const double m = static_cast<double>(args.blocks[a]);
        const double x = args.use_r
                             ? (static_cast<double>(args.d) + args.r_value * m * (m - 1.0)) / (m * m)
                             : static_cast<double>(args.d * args.d) / (m * m);
        const double mag = t_magnitude_from_x(x, args.blocks[a], args.d, v.primed);
        const int s = sign == 0 ? +1 : sign;
        specs[a] = {{v.primed, s}, s * mag};
      } else {
        const Interval range = t_range(build_h_operators(partition, a, v.primed), args.blocks[a]);
        double t = 0.0;
        if (args.t_max) {
          if (sign == -1) throw UsageError("--t-max picks the positive endpoint");
          t = range.hi;
        } else if (args.t_min) {
          if (sign == +1) throw UsageError("--t-min picks the negative endpoint");
          t = range.lo;
        } else {  // t-abs-min: the positive strength admissible for both signs
          t = std::min(range.hi, std::abs(range.lo));
        }
        specs[a] = {{v.primed, t > 0 ? +1 : -1}, t};
      }
    }
  }

  auto blocks = build_measurement_blocks(partition, specs);

  MeasurementFile file;
  file.d = args.d;
  file.block_sizes = args.blocks;
  file.operators = std::move(blocks);
  Provenance prov;
  prov.basis = basis_name;
  for (const auto& s : specs) {
    prov.variants.push_back(variant_label(s.variant));
    prov.t.push_back(s.t);
  }
  file.provenance = std::move(prov);
  emit(measurement_to_json(file), args.output);
  return 0;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const std::string& input, const std::string& output, double tol) {
  const MeasurementFile file = read_measurement_file(input);
  VerifyOptions opt;
  opt.trace_tol = tol;
  opt.identity_tol = tol;
  const auto result = verify_gsm(file.operators, file.d, opt);

  json j;
  j["format_version"] = kFormatVersion;
  j["command"] = "verify";
  j["input"] = input;
  j.update(verification_json(result, tol));
  emit(j, output);
  return result.ok() ? 0 : 3;
}

// ---------------------------------------------------------------------------
// certify

int run_certify(const std::string& input, const std::string& output, double tol) {
  const GeneralizedSymmetricMeasurement g = load_gsm(input, tol);
  const auto cert = certify_design(g);

  json j;
  j["format_version"] = kFormatVersion;
  j["command"] = "certify";
  j["input"] = input;
  json c;
  switch (cert.kind) {
    case DesignKind::conical_2_design: c["kind"] = "CONICAL_2_DESIGN"; break;
    case DesignKind::weighted_identity_only: c["kind"] = "WEIGHTED_IDENTITY_ONLY"; break;
    case DesignKind::none: c["kind"] = "NONE"; break;
  }
  c["kappa_plus"] = cert.kappa_plus;
  c["kappa_minus"] = cert.kappa_minus;
  if (cert.r) c["r"] = *cert.r;
  if (cert.s) c["s"] = *cert.s;
  c["mu"] = cert.mu;
  c["residual_operator"] = toleranced(cert.residual_operator, 1e-8);
  c["residual_map"] = toleranced(cert.residual_map, 1e-8);
  c["consistency_residual"] = toleranced(cert.consistency_residual, 1e-8);
  c["paths_consistent"] = cert.paths_consistent;
  json fits;
  fits["unweighted"] = {{"kappa_plus", cert.unweighted_kappa_plus},
                        {"kappa_minus", cert.unweighted_kappa_minus},
                        {"residual", cert.unweighted_residual}};
  fits["weighted"] = {{"kappa_plus", cert.weighted_kappa_plus},
                      {"kappa_minus", cert.weighted_kappa_minus},
                      {"residual", cert.weighted_residual}};
  c["fits"] = std::move(fits);
  j["certificate"] = std::move(c);
  emit(j, output);
  return 0;
}

// ---------------------------------------------------------------------------
// detect

struct DetectArgs {
  std::string gsm_a, gsm_b;
  std::string states_file;
  std::size_t sample_count = 0;
  std::string kind = "separable";
  std::uint64_t seed = 0;
  std::string output;
  double tol = 1e-9;
};

int run_detect(const DetectArgs& args) {
  const auto ga = load_gsm(args.gsm_a, args.tol);
  const auto gb = load_gsm(args.gsm_b, args.tol);

  std::vector<DensityMatrix> states;
  if (!args.states_file.empty()) {
    if (args.states_file == "-") {
      json j;
      std::cin >> j;
      states = read_states_json(j);
    } else {
      states = read_states_file(args.states_file);
    }
  } else if (args.sample_count > 0) {
    Rng rng(args.seed);
    for (std::size_t i = 0; i < args.sample_count; ++i) {
      if (args.kind == "bell")
        states.push_back(max_entangled_projector(ga.dim));
      else if (args.kind == "separable")
        states.push_back(sample_separable_state(ga.dim, gb.dim, 10, rng));
      else if (args.kind == "random")
        states.push_back(random_density_matrix(ga.dim * gb.dim, ga.dim * gb.dim, rng));
      else
        throw UsageError("--kind must be bell, separable or random");
    }
  } else {
    throw UsageError("provide --states FILE or --sample N");
  }

  json j;
  j["format_version"] = kFormatVersion;
  j["command"] = "detect";
  j["gsm_a"] = args.gsm_a;
  j["gsm_b"] = args.gsm_b;
  j["c_max_a"] = c_max(ga);
  j["c_max_b"] = c_max(gb);

  std::size_t entangled = 0;
  json rows = json::array();
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto rep = separability_test(ga, gb, states[i], args.tol);
    json row;
    row["index"] = i;
    row["verdict"] = rep.verdict == Verdict::entangled ? "ENTANGLED" : "INCONCLUSIVE";
    row["norm_value"] = rep.norm_value;
    row["norm_bound"] = rep.norm_bound;
    row["norm_margin"] = toleranced(rep.norm_margin, args.tol);
    if (rep.trace_applicable) {
      row["trace_value"] = rep.trace_value;
      row["trace_bound"] = rep.trace_bound;
      row["trace_margin"] = toleranced(rep.trace_margin, args.tol);
    }
    if (rep.verdict == Verdict::entangled) ++entangled;
    rows.push_back(std::move(row));
  }
  j["states"] = std::move(rows);
  json summary;
  summary["total"] = states.size();
  summary["entangled"] = entangled;
  summary["inconclusive"] = states.size() - entangled;
  j["summary"] = std::move(summary);
  emit(j, args.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized symmetric measurement toolkit"};
  app.require_subcommand(1);
  double tolerance = 1e-9;
  app.add_option("--tolerance", tolerance, "uniform verification tolerance")->capture_default_str();

  ConstructArgs cargs;
  auto* construct = app.add_subcommand("construct", "build a measurement from an operator basis");
  construct->add_option("-d,--dim", cargs.d, "Hilbert-space dimension")->required();
  construct->add_option("--blocks", cargs.blocks, "POVM sizes M_alpha")->required()->delimiter(',');
  construct->add_option("--basis", cargs.basis_file, "operator basis JSON (default: Gell-Mann)");
  construct
      ->add_option("--variant", cargs.variants,
                   "construction variant per block: unprimed|primed[:+|-]")
      ->delimiter(',');
  construct->add_option("--t", cargs.t_values, "strength t per block")->delimiter(',');
  construct->add_option("--x", cargs.x_values, "purity x per block (needs signed --variant)")
      ->delimiter(',');
  auto* ropt = construct->add_option("--r", cargs.r_value, "constant difference x - y across blocks");
  construct->add_flag("--t-max", cargs.t_max, "largest admissible positive strength");
  construct->add_flag("--t-min", cargs.t_min, "most negative admissible strength");
  construct->add_flag("--t-abs-min", cargs.t_abs_min,
                      "positive strength min(t_max, |t_min|), admissible for both signs");
  construct->add_flag("--projective", cargs.projective, "x = d^2/M^2 per block");
  auto* rot = construct->add_option("--rotate-seed", cargs.rotate_seed,
                                    "randomly rotate every block basis with this seed");
  construct->add_option("-o,--output", cargs.output, "output file (default stdout)");

  std::string v_input, v_output;
  auto* verify = app.add_subcommand("verify", "check the defining symmetry conditions of a file");
  verify->add_option("file", v_input, "measurement JSON")->required();
  verify->add_option("-o,--output", v_output, "report file (default stdout)");

  std::string c_input, c_output;
  auto* certify = app.add_subcommand("certify", "fit the tensor-square sum against I + flip");
  certify->add_option("file", c_input, "measurement JSON")->required();
  certify->add_option("-o,--output", c_output, "report file (default stdout)");

  DetectArgs dargs;
  auto* detect = app.add_subcommand("detect", "screen bipartite states with separability bounds");
  detect->add_option("--gsm-a", dargs.gsm_a, "measurement for subsystem A")->required();
  detect->add_option("--gsm-b", dargs.gsm_b, "measurement for subsystem B")->required();
  detect->add_option("--states", dargs.states_file, "states JSON ('-' for stdin)");
  detect->add_option("--sample", dargs.sample_count, "number of states to sample");
  detect->add_option("--kind", dargs.kind, "bell | separable | random")->capture_default_str();
  detect->add_option("--seed", dargs.seed, "sampler seed")->capture_default_str();
  detect->add_option("-o,--output", dargs.output, "report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (construct->parsed()) {
      cargs.use_r = ropt->count() > 0;
      cargs.use_rotation = rot->count() > 0;
      return run_construct(cargs);
    }
    if (verify->parsed()) return run_verify(v_input, v_output, tolerance);
    if (certify->parsed()) return run_certify(c_input, c_output, tolerance);
    if (detect->parsed()) {
      dargs.tol = tolerance;
      return run_detect(dargs);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const FileFormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const InfeasibleConstruction& e) {
    std::cerr << "infeasible construction: " << e.what() << '\n';
    return 2;
  } catch (const BoundUnavailable& e) {
    std::cerr << "class mismatch: " << e.what() << '\n';
    return 2;
  } catch (const DimensionMismatch& e) {
    std::cerr << "dimension mismatch: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
