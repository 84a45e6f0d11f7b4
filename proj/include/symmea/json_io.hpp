#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symmea/hermitian.hpp"

namespace symmea {

using json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "1";

/// Construction metadata carried alongside a measurement file.
struct Provenance {
  std::string basis;
  std::vector<std::string> variants;
  std::vector<double> t;
};

struct MeasurementFile {
  std::size_t d = 0;
  std::vector<std::size_t> block_sizes;
  std::vector<std::vector<HermitianOperator>> operators;
  std::optional<Provenance> provenance;
};

// Matrices are nested arrays of [re, im] pairs, row-major. Doubles round-trip
// losslessly (shortest round-trip decimal encoding).
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json measurement_to_json(const MeasurementFile& f);
MeasurementFile measurement_from_json(const json& j);

MeasurementFile read_measurement_file(const std::string& path);
void write_measurement_file(const std::string& path, const MeasurementFile& f);

/// Basis file: flat list of Hermitian operators sharing one dimension.
std::vector<HermitianOperator> read_basis_file(const std::string& path);
void write_basis_file(const std::string& path, std::size_t d,
                      const std::vector<HermitianOperator>& ops);

/// States file: list of density matrices of one dimension.
std::vector<DensityMatrix> read_states_json(const json& j);
std::vector<DensityMatrix> read_states_file(const std::string& path);
json states_to_json(const std::vector<DensityMatrix>& states);

json parse_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

/// Report entry pairing a numeric with the tolerance it was tested against.
json toleranced(double value, double tolerance);

}  // namespace symmea
