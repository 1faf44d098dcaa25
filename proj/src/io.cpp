#include "modkit/io.hpp"

#include <fstream>
#include <sstream>

#include "modkit/errors.hpp"

namespace modkit {

Json versioned(const std::string& format) {
  Json j;
  j["format"] = format;
  j["version"] = std::to_string(kFormatMajor) + "." + std::to_string(kFormatMinor);
  return j;
}

void check_version(const Json& j, const std::string& format) {
  if (!j.is_object() || !j.contains("format") || j["format"] != format)
    throw FormatError("expected a " + format + " file");
  if (!j.contains("version") || !j["version"].is_string())
    throw FormatError("missing version field");
  const std::string v = j["version"];
  int major = -1;
  try {
    major = std::stoi(v.substr(0, v.find('.')));
  } catch (const std::exception&) {
    throw FormatError("malformed version '" + v + "'");
  }
  if (major != kFormatMajor) throw FormatError("unsupported major version " + v);
}

Json matrix_json(const IMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

IMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("matrix must be an array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  const auto cols = n == 0 ? 0 : static_cast<Eigen::Index>(j[0].size());
  IMatrix m(n, cols);
  for (Eigen::Index r = 0; r < n; ++r) {
    if (!j[r].is_array() || static_cast<Eigen::Index>(j[r].size()) != cols)
      throw FormatError("ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = j[r][c].get<std::int64_t>();
  }
  return m;
}

namespace {

Json real_matrix(const CMatrix& m, bool imag) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(imag ? m(r, c).imag() : m(r, c).real());
    rows.push_back(row);
  }
  return rows;
}

void put_fusion(Json& j, const FusionRules& rules, const Twists& twists) {
  j["labels"] = rules.labels;
  Json fusion = Json::array();
  const int n = rules.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (rules.fusion(a, b, c) != 0) fusion.push_back({a, b, c, rules.fusion(a, b, c)});
  j["fusion"] = fusion;
  j["conjugation"] = rules.conjugation;
  if (!twists.empty()) {
    Json t = Json::array();
    for (const auto& tw : twists) t.push_back({tw.value().numerator(), tw.value().denominator()});
    j["twists"] = t;
  }
}

}  // namespace

Json to_json(const CatalogSystem& s) {
  Json j = versioned("modkit.fusion");
  j["id"] = s.id;
  put_fusion(j, s.fusion.rules(), s.twists);
  return j;
}

CatalogSystem system_from_json(const Json& j) {
  check_version(j, "modkit.fusion");
  try {
    FusionRules rules;
    rules.labels = j.at("labels").get<std::vector<std::string>>();
    const int n = rules.size();
    if (n == 0) throw FormatError("empty label set");
    rules.fusion = FusionTensor(n);
    for (const auto& q : j.at("fusion")) {
      if (!q.is_array() || q.size() != 4) throw FormatError("fusion entries are [a, b, c, N]");
      const int a = q[0], b = q[1], c = q[2], v = q[3];
      if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n) throw FormatError("fusion index out of range");
      if (v < 0) throw FormatError("negative fusion coefficient");
      rules.fusion(a, b, c) = v;
    }
    rules.conjugation = j.at("conjugation").get<std::vector<int>>();
    if (static_cast<int>(rules.conjugation.size()) != n) throw FormatError("conjugation has the wrong length");
    for (int c : rules.conjugation)
      if (c < 0 || c >= n) throw FormatError("conjugation index out of range");
    Twists twists;
    if (j.contains("twists")) {
      for (const auto& t : j["twists"]) {
        if (!t.is_array() || t.size() != 2) throw FormatError("twists are [numerator, denominator]");
        const std::int64_t den = t[1];
        if (den <= 0) throw FormatError("twist denominator must be positive");
        twists.emplace_back(t[0].get<std::int64_t>(), den);
      }
      if (static_cast<int>(twists.size()) != n) throw FormatError("twists have the wrong length");
    }
    const auto violations = verify_fusion_axioms(rules);
    if (!violations.empty()) throw FormatError("fusion axioms fail: " + violations.front().axiom);
    return {j.value("id", std::string("file")), FusionSystem(std::move(rules)), std::move(twists)};
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed fusion file: ") + e.what());
  }
}

Json to_json(const Graph& g) {
  Json j = versioned("modkit.graph");
  j["name"] = g.name;
  j["adjacency"] = matrix_json(g.adjacency);
  Json meta;
  meta["family"] = std::string(1, g.family);
  meta["rank"] = g.rank;
  meta["affine"] = g.affine;
  meta["iota"] = g.iota;
  if (g.affine) meta["star"] = g.star;
  const auto m = graph_meta(g.affine ? g.name.substr(0, g.name.size() - 1) : g.name);
  meta["coxeter"] = m.coxeter;
  meta["exponents"] = m.exponents;
  meta["group_order"] = m.group_order;
  meta["level"] = m.level;
  j["meta"] = meta;
  return j;
}

Graph graph_from_json(const Json& j) {
  check_version(j, "modkit.graph");
  try {
    Graph g;
    g.name = j.at("name");
    g.adjacency = matrix_from_json(j.at("adjacency"));
    if (g.adjacency.rows() != g.adjacency.cols()) throw FormatError("adjacency must be square");
    const auto& meta = j.at("meta");
    g.family = meta.at("family").get<std::string>().at(0);
    g.rank = meta.at("rank");
    g.affine = meta.at("affine");
    g.iota = meta.at("iota");
    g.star = meta.value("star", -1);
    return g;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed graph file: ") + e.what());
  }
}

Json to_json(const ModularData& md) {
  Json j = versioned("modkit.modular");
  put_fusion(j, md.fusion.rules(), md.twists);
  j["dimensions"] = md.dims();
  j["normalizable"] = md.normalizable;
  if (md.normalizable) {
    j["central_charge"] = md.c.value;
    if (md.c.exact) j["central_charge_exact"] = {md.c.exact->numerator(), md.c.exact->denominator()};
    j["S_re"] = real_matrix(md.S, false);
    j["S_im"] = real_matrix(md.S, true);
    j["T_re"] = real_matrix(md.T, false);
    j["T_im"] = real_matrix(md.T, true);
  }
  return j;
}

Json to_json(const CatalogHeader& header, const std::vector<CouplingMatrix>& records) {
  Json j = versioned("modkit.invariants");
  j["header"] = {{"system", header.system},
                 {"level", header.level},
                 {"tolerance", header.tolerance},
                 {"tool_version", kToolVersion}};
  Json recs = Json::array();
  for (const auto& r : records) {
    Json rec;
    rec["Z"] = matrix_json(r.Z);
    rec["trace"] = r.counts.trace;
    rec["sum_squares"] = r.counts.sum_squares;
    rec["type"] = r.type_label();
    rec["flags"] = {{"symmetric", r.flags.symmetric},
                    {"permutation", r.flags.permutation},
                    {"vacuum_symmetric", r.flags.vacuum_symmetric},
                    {"self_conjugate", r.flags.self_conjugate}};
    Json w = Json::object();
    if (r.type_I) w["type_I_factor"] = matrix_json(*r.type_I);
    if (r.parent) w["parent"] = *r.parent;
    if (r.theta) w["theta"] = *r.theta;
    rec["witnesses"] = w;
    recs.push_back(rec);
  }
  j["records"] = recs;
  return j;
}

std::vector<IMatrix> invariants_from_json(const Json& j) {
  check_version(j, "modkit.invariants");
  std::vector<IMatrix> out;
  try {
    for (const auto& r : j.at("records")) out.push_back(matrix_from_json(r.at("Z")));
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed invariant file: ") + e.what());
  }
  return out;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace modkit
