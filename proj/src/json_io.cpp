#include "symmea/json_io.hpp"

#include <fstream>

#include "symmea/errors.hpp"

namespace symmea {

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw FileFormatError("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  if (cols == 0) throw FileFormatError("matrix rows must be non-empty arrays");
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j.at(i);
    if (!row.is_array() || row.size() != cols) throw FileFormatError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const json& e = row.at(c);
      if (!e.is_array() || e.size() != 2 || !e.at(0).is_number() || !e.at(1).is_number())
        throw FileFormatError("matrix entries must be [re, im] pairs");
      m(i, c) = cplx{e.at(0).get<double>(), e.at(1).get<double>()};
    }
  }
  return m;
}

json measurement_to_json(const MeasurementFile& f) {
  json j;
  j["format_version"] = kFormatVersion;
  j["d"] = f.d;
  j["block_sizes"] = f.block_sizes;
  json blocks = json::array();
  for (const auto& block : f.operators) {
    json ops = json::array();
    for (const auto& e : block) ops.push_back(matrix_to_json(e.matrix()));
    blocks.push_back(std::move(ops));
  }
  j["operators"] = std::move(blocks);
  if (f.provenance) {
    json p;
    p["basis"] = f.provenance->basis;
    p["variants"] = f.provenance->variants;
    p["t"] = f.provenance->t;
    j["provenance"] = std::move(p);
  }
  return j;
}

MeasurementFile measurement_from_json(const json& j) {
  MeasurementFile f;
  if (!j.is_object()) throw FileFormatError("measurement file must be a JSON object");
  if (j.value("format_version", std::string{}) != kFormatVersion)
    throw FileFormatError("unsupported or missing format_version (expected \"1\")");
  if (!j.contains("d") || !j.at("d").is_number_unsigned())
    throw FileFormatError("measurement file needs a positive integer \"d\"");
  f.d = j.at("d").get<std::size_t>();
  if (!j.contains("operators") || !j.at("operators").is_array() || j.at("operators").empty())
    throw FileFormatError("measurement file needs non-empty \"operators\" blocks");
  for (const json& block : j.at("operators")) {
    if (!block.is_array() || block.empty()) throw FileFormatError("empty measurement block");
    std::vector<HermitianOperator> ops;
    ops.reserve(block.size());
    for (const json& op : block) {
      ComplexMatrix m = matrix_from_json(op);
      if (m.rows() != f.d || m.cols() != f.d)
        throw FileFormatError("operator shape does not match the declared dimension");
      try {
        ops.emplace_back(std::move(m));
      } catch (const NonHermitianError& e) {
        throw FileFormatError(std::string("operator is not Hermitian: ") + e.what());
      }
    }
    f.block_sizes.push_back(ops.size());
    f.operators.push_back(std::move(ops));
  }
  if (j.contains("block_sizes")) {
    const auto declared = j.at("block_sizes").get<std::vector<std::size_t>>();
    if (declared != f.block_sizes)
      throw FileFormatError("declared block_sizes disagree with the operator blocks");
  }
  if (j.contains("provenance") && j.at("provenance").is_object()) {
    const json& p = j.at("provenance");
    Provenance prov;
    prov.basis = p.value("basis", std::string{});
    if (p.contains("variants")) prov.variants = p.at("variants").get<std::vector<std::string>>();
    if (p.contains("t")) prov.t = p.at("t").get<std::vector<double>>();
    f.provenance = std::move(prov);
  }
  return f;
}

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileFormatError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FileFormatError("JSON parse error in " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FileFormatError("cannot write " + path);
  out << j.dump(2) << '\n';
}

MeasurementFile read_measurement_file(const std::string& path) {
  return measurement_from_json(parse_json_file(path));
}

void write_measurement_file(const std::string& path, const MeasurementFile& f) {
  write_json_file(path, measurement_to_json(f));
}

std::vector<HermitianOperator> read_basis_file(const std::string& path) {
  const json j = parse_json_file(path);
  if (!j.is_object() || j.value("format_version", std::string{}) != kFormatVersion)
    throw FileFormatError("basis file needs format_version \"1\"");
  if (!j.contains("d") || !j.contains("operators") || !j.at("operators").is_array())
    throw FileFormatError("basis file needs \"d\" and \"operators\"");
  const auto d = j.at("d").get<std::size_t>();
  std::vector<HermitianOperator> ops;
  for (const json& op : j.at("operators")) {
    ComplexMatrix m = matrix_from_json(op);
    if (m.rows() != d || m.cols() != d)
      throw FileFormatError("basis operator shape does not match the declared dimension");
    ops.emplace_back(std::move(m));
  }
  if (ops.empty()) throw FileFormatError("basis file holds no operators");
  return ops;
}

void write_basis_file(const std::string& path, std::size_t d,
                      const std::vector<HermitianOperator>& ops) {
  json j;
  j["format_version"] = kFormatVersion;
  j["d"] = d;
  json arr = json::array();
  for (const auto& op : ops) arr.push_back(matrix_to_json(op.matrix()));
  j["operators"] = std::move(arr);
  write_json_file(path, j);
}

std::vector<DensityMatrix> read_states_json(const json& j) {
  if (!j.is_object() || j.value("format_version", std::string{}) != kFormatVersion)
    throw FileFormatError("states file needs format_version \"1\"");
  if (!j.contains("d") || !j.contains("states") || !j.at("states").is_array())
    throw FileFormatError("states file needs \"d\" and \"states\"");
  const auto d = j.at("d").get<std::size_t>();
  std::vector<DensityMatrix> states;
  for (const json& s : j.at("states")) {
    ComplexMatrix m = matrix_from_json(s);
    if (m.rows() != d || m.cols() != d)
      throw FileFormatError("state shape does not match the declared dimension");
    try {
      states.emplace_back(HermitianOperator(std::move(m)));
    } catch (const Error& e) {
      throw FileFormatError(std::string("invalid density matrix: ") + e.what());
    }
  }
  if (states.empty()) throw FileFormatError("states file holds no states");
  return states;
}

std::vector<DensityMatrix> read_states_file(const std::string& path) {
  return read_states_json(parse_json_file(path));
}

json states_to_json(const std::vector<DensityMatrix>& states) {
  json j;
  j["format_version"] = kFormatVersion;
  j["d"] = states.empty() ? 0 : states.front().dim();
  json arr = json::array();
  for (const auto& s : states) arr.push_back(matrix_to_json(s.matrix()));
  j["states"] = std::move(arr);
  return j;
}

json toleranced(double value, double tolerance) {
  json j;
  j["value"] = value;
  j["tolerance"] = tolerance;
  return j;
}

}  // namespace symmea
