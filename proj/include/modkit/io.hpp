#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "modkit/catalog.hpp"
#include "modkit/invariant.hpp"
#include "modkit/modular.hpp"

namespace modkit {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kFormatMajor = 1;
inline constexpr int kFormatMinor = 0;

using Json = nlohmann::json;

/// Adds "format" and "version" fields.
Json versioned(const std::string& format);
/// Throws FormatError when the format tag differs or the major version is unknown.
void check_version(const Json& j, const std::string& format);

Json to_json(const CatalogSystem& s);
CatalogSystem system_from_json(const Json& j);

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// Fusion-system fields plus S_re, S_im, T_re, T_im and the central charge.
Json to_json(const ModularData& md);

struct CatalogHeader {
  std::string system;
  int level = -1;
  double tolerance = 1e-6;
};

Json to_json(const CatalogHeader& header, const std::vector<CouplingMatrix>& records);
std::vector<IMatrix> invariants_from_json(const Json& j);

Json matrix_json(const IMatrix& m);
IMatrix matrix_from_json(const Json& j);

Json read_json(const std::string& path);
/// Two-space indentation and a trailing newline; key order is sorted so output is deterministic.
void write_json(const std::string& path, const Json& j);

}  // namespace modkit
