// SPDX-License-Identifier: Apache-2.0
//
// Wire formats. Channels travel as JSON objects
//   { "dim": d, "kraus": [ matrix... ], "name": "..." }
// where a matrix is an array of rows and every complex entry is a two-element
// array [re, im]. Analysis results serialize to a report object that mirrors
// AnalysisReport field for field. All floating point numbers are written in
// decimal with 17 significant digits, which reproduces IEEE-754 doubles
// exactly, so serialize -> parse -> serialize is byte-identical.
#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncomm/channel.hpp"
#include "ncomm/noiseless.hpp"
#include "ncomm/structure.hpp"
#include "ncomm/types.hpp"

namespace ncomm {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON writer with fixed float formatting.

namespace detail {

inline void format_double(std::string& out, double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  out += buf;
}

inline void dump_value(std::string& out, const Json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  const std::string closing_pad(static_cast<std::size_t>(indent) * depth, ' ');
  switch (j.type()) {
    case Json::value_t::null:
      out += "null";
      break;
    case Json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case Json::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      break;
    case Json::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      break;
    case Json::value_t::number_float:
      format_double(out, j.get<double>());
      break;
    case Json::value_t::string:
      out += nlohmann::json(j.get<std::string>()).dump();  // quoting and escaping
      break;
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        break;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += pad;
        dump_value(out, j[i], indent, depth + 1);
        if (i + 1 < j.size()) out += ",";
        out += "\n";
      }
      out += closing_pad + "]";
      break;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      std::size_t i = 0;
      for (const auto& [key, value] : j.items()) {
        out += pad + nlohmann::json(key).dump() + ": ";
        dump_value(out, value, indent, depth + 1);
        if (++i < j.size()) out += ",";
        out += "\n";
      }
      out += closing_pad + "}";
      break;
    }
    default:
      throw std::runtime_error("dump_json: unsupported JSON value type");
  }
}

}  // namespace detail

/// Deterministic pretty printer; floats carry 17 significant digits.
inline std::string dump_json(const Json& j, int indent = 2) {
  std::string out;
  detail::dump_value(out, j, indent, 0);
  out += "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Channel spec files.

inline Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix parse_matrix(const Json& rows, const char* what) {
  if (!rows.is_array() || rows.empty()) {
    throw std::invalid_argument(std::string(what) + ": matrix must be a nonempty array of rows");
  }
  const Eigen::Index nrows = static_cast<Eigen::Index>(rows.size());
  Eigen::Index ncols = -1;
  Matrix m;
  for (Eigen::Index i = 0; i < nrows; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array()) throw std::invalid_argument(std::string(what) + ": row is not an array");
    if (ncols < 0) {
      ncols = static_cast<Eigen::Index>(row.size());
      m.resize(nrows, ncols);
    }
    if (static_cast<Eigen::Index>(row.size()) != ncols) {
      throw std::invalid_argument(std::string(what) + ": ragged matrix rows");
    }
    for (Eigen::Index j = 0; j < ncols; ++j) {
      const Json& entry = row[static_cast<std::size_t>(j)];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
        throw std::invalid_argument(std::string(what) +
                                    ": complex entries must be two-element [re, im] arrays");
      }
      m(i, j) = Complex(entry[0].get<double>(), entry[1].get<double>());
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
        throw std::invalid_argument(std::string(what) + ": entries must be finite");
      }
    }
  }
  return m;
}

struct NamedChannel {
  KrausChannel channel;
  std::string name;
};

inline Json channel_spec_json(const KrausChannel& ch, const std::string& name = {}) {
  Json spec;
  spec["dim"] = ch.dim;
  Json kraus = Json::array();
  for (const Matrix& a : ch.kraus) kraus.push_back(matrix_json(a));
  spec["kraus"] = std::move(kraus);
  if (!name.empty()) spec["name"] = name;
  return spec;
}

inline NamedChannel parse_channel_spec(const Json& spec, const ToleranceConfig& tol = {}) {
  if (!spec.is_object()) throw std::invalid_argument("channel spec: top level must be an object");
  if (!spec.contains("dim") || !spec["dim"].is_number_integer()) {
    throw std::invalid_argument("channel spec: missing integer field 'dim'");
  }
  if (!spec.contains("kraus") || !spec["kraus"].is_array() || spec["kraus"].empty()) {
    throw std::invalid_argument("channel spec: missing nonempty array field 'kraus'");
  }
  const int dim = spec["dim"].get<int>();
  if (dim < 1) throw std::invalid_argument("channel spec: 'dim' must be positive");

  std::vector<Matrix> kraus;
  kraus.reserve(spec["kraus"].size());
  for (const Json& mj : spec["kraus"]) {
    Matrix m = parse_matrix(mj, "channel spec");
    if (m.rows() != dim || m.cols() != dim) {
      throw std::invalid_argument("channel spec: Kraus matrix shape does not match 'dim'");
    }
    kraus.push_back(std::move(m));
  }
  NamedChannel out;
  out.channel = make_channel(std::move(kraus), tol);
  if (spec.contains("name")) {
    if (!spec["name"].is_string()) throw std::invalid_argument("channel spec: 'name' must be a string");
    out.name = spec["name"].get<std::string>();
  }
  return out;
}

inline NamedChannel load_channel_spec(const std::string& path, const ToleranceConfig& tol = {}) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open channel spec file: " + path);
  Json spec;
  try {
    in >> spec;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("channel spec '" + path + "' is not valid JSON: " + e.what());
  }
  NamedChannel named = parse_channel_spec(spec, tol);
  if (named.name.empty()) named.name = path;
  return named;
}

// ---------------------------------------------------------------------------
// Analysis reports.

struct AnalysisReport {
  struct Component {
    int n = 0;
    int m = 0;
    int rank_of_central = 0;
  };
  struct Noiseless {
    int logical_dim = 0;
    int cofactor_dim = 0;
    std::string kind;  // "subspace" or "subsystem"
  };
  struct Full {
    Matrix structuring_unitary;
    std::vector<Matrix> minimal_projections;
    std::vector<Matrix> central_projections;
  };

  std::string channel_name;
  int dim = 0;
  bool unital = false;
  int commutant_dim = 0;
  std::vector<Component> components;
  std::string structure_algebra;
  std::string structure_commutant;
  std::vector<Noiseless> noiseless;
  std::vector<Diagnostic> diagnostics;
  ToleranceConfig tolerances;
  std::optional<Full> full;
};

inline AnalysisReport build_report(const std::string& name, const KrausChannel& ch,
                                   const WedderburnStructure& st,
                                   std::vector<Diagnostic> diagnostics, const ToleranceConfig& tol,
                                   bool include_full = false) {
  AnalysisReport r;
  r.channel_name = name;
  r.dim = ch.dim;
  r.unital = ch.unital;
  r.commutant_dim = st.commutant_dim();
  for (const auto& c : st.components) {
    r.components.push_back({c.cls.block_rank, c.cls.multiplicity, c.cls.central_projection.rank});
  }
  r.structure_algebra = structure_string(st, StructureView::algebra);
  r.structure_commutant = structure_string(st, StructureView::commutant);
  for (const auto& nc : noiseless_components(st)) {
    r.noiseless.push_back({nc.logical_dim, nc.cofactor_dim, nc.decoherence_free ? "subspace" : "subsystem"});
  }
  r.diagnostics = std::move(diagnostics);
  r.tolerances = tol;
  if (include_full) {
    AnalysisReport::Full full;
    full.structuring_unitary = st.structuring_unitary;
    for (const auto& p : st.family.projections) full.minimal_projections.push_back(p.matrix);
    for (const auto& c : st.components) full.central_projections.push_back(c.cls.central_projection.matrix);
    r.full = std::move(full);
  }
  return r;
}

inline Json report_json(const AnalysisReport& r) {
  Json j;
  j["channel_name"] = r.channel_name;
  j["dim"] = r.dim;
  j["unital"] = r.unital;
  j["commutant_dim"] = r.commutant_dim;
  Json comps = Json::array();
  for (const auto& c : r.components) {
    comps.push_back(Json{{"n", c.n}, {"m", c.m}, {"rank_of_central", c.rank_of_central}});
  }
  j["components"] = std::move(comps);
  j["structure_algebra"] = r.structure_algebra;
  j["structure_commutant"] = r.structure_commutant;
  Json noiseless = Json::array();
  for (const auto& nc : r.noiseless) {
    noiseless.push_back(Json{{"logical_dim", nc.logical_dim},
                             {"cofactor_dim", nc.cofactor_dim},
                             {"kind", nc.kind}});
  }
  j["noiseless"] = std::move(noiseless);
  Json diags = Json::array();
  for (const auto& d : r.diagnostics) {
    diags.push_back(Json{{"name", d.name}, {"pass", d.pass}, {"residual", d.residual}});
  }
  j["diagnostics"] = std::move(diags);
  j["tolerances"] = Json{{"eps_rank", r.tolerances.eps_rank},
                         {"eps_cluster", r.tolerances.eps_cluster},
                         {"eps_zero", r.tolerances.eps_zero}};
  j["seed"] = r.tolerances.seed;
  if (r.full) {
    Json full;
    full["structuring_unitary"] = matrix_json(r.full->structuring_unitary);
    Json minimal = Json::array();
    for (const Matrix& p : r.full->minimal_projections) minimal.push_back(matrix_json(p));
    full["minimal_projections"] = std::move(minimal);
    Json central = Json::array();
    for (const Matrix& p : r.full->central_projections) central.push_back(matrix_json(p));
    full["central_projections"] = std::move(central);
    j["full"] = std::move(full);
  }
  return j;
}

inline AnalysisReport parse_report(const Json& j) {
  AnalysisReport r;
  r.channel_name = j.at("channel_name").get<std::string>();
  r.dim = j.at("dim").get<int>();
  r.unital = j.at("unital").get<bool>();
  r.commutant_dim = j.at("commutant_dim").get<int>();
  for (const Json& c : j.at("components")) {
    r.components.push_back(
        {c.at("n").get<int>(), c.at("m").get<int>(), c.at("rank_of_central").get<int>()});
  }
  r.structure_algebra = j.at("structure_algebra").get<std::string>();
  r.structure_commutant = j.at("structure_commutant").get<std::string>();
  for (const Json& nc : j.at("noiseless")) {
    r.noiseless.push_back({nc.at("logical_dim").get<int>(), nc.at("cofactor_dim").get<int>(),
                           nc.at("kind").get<std::string>()});
  }
  for (const Json& d : j.at("diagnostics")) {
    r.diagnostics.push_back(
        {d.at("name").get<std::string>(), d.at("pass").get<bool>(), d.at("residual").get<double>()});
  }
  r.tolerances.eps_rank = j.at("tolerances").at("eps_rank").get<double>();
  r.tolerances.eps_cluster = j.at("tolerances").at("eps_cluster").get<double>();
  r.tolerances.eps_zero = j.at("tolerances").at("eps_zero").get<double>();
  r.tolerances.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("full")) {
    AnalysisReport::Full full;
    full.structuring_unitary = parse_matrix(j.at("full").at("structuring_unitary"), "report");
    for (const Json& p : j.at("full").at("minimal_projections")) {
      full.minimal_projections.push_back(parse_matrix(p, "report"));
    }
    for (const Json& p : j.at("full").at("central_projections")) {
      full.central_projections.push_back(parse_matrix(p, "report"));
    }
    r.full = std::move(full);
  }
  return r;
}

}  // namespace ncomm
