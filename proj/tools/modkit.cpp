// modkit command-line front end.
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "modkit/acceptance.hpp"
#include "modkit/catalog.hpp"
#include "modkit/chiral.hpp"
#include "modkit/errors.hpp"
#include "modkit/invariant.hpp"
#include "modkit/io.hpp"
#include "modkit/ising.hpp"
#include "modkit/kostant.hpp"
#include "modkit/modular.hpp"
#include "modkit/nimrep.hpp"

using namespace modkit;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

struct Common {
  std::string system = "su2";
  int level = -1;
  std::string graph;
  double tolerance = -1;
  std::string out;
  std::string format = "text";
};

void add_output(CLI::App* app, Common& c) {
  app->add_option("--out", c.out, "write the result to this path instead of stdout");
  app->add_option("--format", c.format, "text or machine (JSON)")
      ->check(CLI::IsMember({"text", "machine"}));
}

void add_system(CLI::App* app, Common& c) {
  app->add_option("--system", c.system, "su2, cyclic, or a fusion-system file")->capture_default_str();
  app->add_option("--level", c.level, "SU(2) level, or n for the cyclic system");
}

bool machine(const Common& c) { return c.format == "machine"; }

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw UsageError("cannot write " + c.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

CatalogSystem load_system(const Common& c) {
  if (c.system == "su2") {
    if (c.level < 0) throw UsageError("--level is required for --system su2");
    return gen_su2(c.level);
  }
  if (c.system == "cyclic") {
    if (c.level < 1) throw UsageError("--level n >= 1 is required for --system cyclic");
    return gen_cyclic(c.level, quadratic_twists(c.level));
  }
  return system_from_json(read_json(c.system));
}

ModularData load_modular(const Common& c, bool need_st) {
  auto s = load_system(c);
  if (s.twists.empty()) throw UsageError("the system has no twists");
  ModularOptions opts;
  if (c.tolerance > 0) opts.tolerance = c.tolerance;
  return need_st ? build_S_T(s.fusion, s.twists, opts) : braided_data(s.fusion, s.twists, opts);
}

std::string system_id(const Common& c) {
  if (c.system == "su2") return "su2_" + std::to_string(c.level);
  if (c.system == "cyclic") return "cyclic_" + std::to_string(c.level);
  return load_system(c).id;
}

Json report_json(const Report& r) {
  Json j = Json::array();
  for (const auto& ch : r.checks)
    j.push_back({{"name", ch.name}, {"pass", ch.pass}, {"residual", ch.residual}, {"detail", ch.detail}});
  return j;
}

std::vector<int> parse_labels(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad label '" + item + "'");
    }
  }
  return out;
}

void print_complex_matrix(std::ostream& os, const std::string& name, const CMatrix& m, int precision) {
  os << name << ":\n" << std::fixed << std::setprecision(precision);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      const auto z = m(r, c);
      os << (c ? "  " : "  ") << std::setw(precision + 3) << z.real() << (z.imag() < 0 ? "-" : "+")
         << std::setw(precision + 2) << std::abs(z.imag()) << 'i';
    }
    os << '\n';
  }
  os.unsetf(std::ios::floatfield);
  os << std::setprecision(6);
}

int cmd_catalog(const std::string& action, const Common& c, bool affine) {
  if (action == "list") {
    std::ostringstream os;
    if (machine(c)) {
      Json j = versioned("modkit.catalog");
      j["systems"] = {"su2 (--level k)", "cyclic (--level n, quadratic twists)"};
      j["graphs"] = catalog_graph_names();
      emit(c, dump(j));
      return kOk;
    }
    os << "systems:\n  su2     SU(2) at level k (--level k)\n  cyclic  Z_n with twists a^2/n or a^2/2n (--level n)\n";
    os << "graphs:\n ";
    for (const auto& g : catalog_graph_names()) {
      const auto m = graph_meta(g);
      os << ' ' << g << "(h=" << m.coxeter << ")";
    }
    os << "\n  (append --affine for the extended graphs)\n";
    emit(c, os.str());
    return kOk;
  }
  if (action == "graph") {
    if (c.graph.empty()) throw UsageError("--graph is required");
    const auto g = affine ? affine_ade(c.graph) : ade_graph(c.graph);
    if (machine(c)) {
      emit(c, dump(to_json(g)));
    } else {
      std::ostringstream os;
      os << g.name << " (" << g.size() << " vertices, " << g.edges() << " edges)\n" << g.adjacency << '\n';
      emit(c, os.str());
    }
    return kOk;
  }
  if (action == "system") {
    emit(c, dump(to_json(load_system(c))));
    return kOk;
  }
  throw UsageError("unknown catalog action '" + action + "' (list, graph, system)");
}

int cmd_modular(const Common& c, int precision) {
  const auto md = load_modular(c, false);
  const double tol = c.tolerance > 0 ? c.tolerance : 1e-9;
  Report rep;
  Report verlinde;
  if (md.normalizable) {
    rep = verify_modular(md, tol);
    verlinde = verlinde_check(md);
  }
  const auto axioms = verify_fusion_axioms(md.fusion.rules());
  std::vector<int> deg;
  std::string deg_error;
  try {
    deg = degenerate_sectors(md.Y, md.dims(), md.w());
  } catch (const DichotomyViolation& e) {
    deg_error = e.what();
  }
  const bool ok = md.normalizable && rep.ok() && verlinde.ok() && axioms.empty() && deg_error.empty();

  if (machine(c)) {
    Json j = to_json(md);
    j["checks"] = report_json(rep);
    j["verlinde"] = report_json(verlinde);
    j["degenerate_sectors"] = deg;
    j["axiom_violations"] = axioms.size();
    emit(c, dump(j));
    return ok ? kOk : kCheckFailed;
  }
  std::ostringstream os;
  os << "labels " << md.size() << ", w = " << std::setprecision(12) << md.w() << '\n';
  os << "dimensions:";
  for (double d : md.dims()) os << ' ' << d;
  os << "\nz = " << md.z << '\n';
  for (const auto& v : axioms) os << "axiom violation: " << v.axiom << '\n';
  if (!deg_error.empty()) os << "dichotomy violation: " << deg_error << '\n';
  os << "degenerate sectors:";
  for (int a : deg) os << ' ' << a;
  os << '\n';
  if (!md.normalizable) {
    os << "z = 0: S and T are undefined\n";
    emit(c, os.str());
    return kCheckFailed;
  }
  os << "c = " << md.c.value;
  if (md.c.exact) os << " = " << md.c.exact->numerator() << '/' << md.c.exact->denominator();
  os << '\n';
  print_complex_matrix(os, "S", md.S, precision);
  print_complex_matrix(os, "T", md.T, precision);
  os << rep << verlinde;
  emit(c, os.str());
  return ok ? kOk : kCheckFailed;
}

int cmd_enum(const Common& c, std::int64_t budget, int threads) {
  const auto md = load_modular(c, true);
  EnumOptions opts;
  opts.budget = budget;
  opts.threads = threads;
  if (c.tolerance > 0) opts.tolerance = c.tolerance;
  EnumStats stats;
  const auto list = enumerate(md, opts, &stats);
  CatalogHeader header{system_id(c), c.system == "su2" ? c.level : -1, opts.tolerance};
  if (machine(c) || !c.out.empty()) {
    emit(c, dump(to_json(header, list)));
    return kOk;
  }
  std::ostringstream os;
  os << header.system << ": " << list.size() << " invariants (" << stats.cells << " cells, "
     << stats.free_parameters << " free, " << stats.nodes << " nodes)\n";
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& z = list[i];
    os << "#" << i << " type " << z.type_label() << ", tr " << z.counts.trace << ", sum Z^2 "
       << z.counts.sum_squares << (z.flags.permutation ? ", permutation" : "")
       << (z.flags.symmetric ? ", symmetric" : "");
    if (z.parent) os << ", twist of #" << *z.parent;
    os << '\n' << z.Z << '\n';
  }
  emit(c, os.str());
  return kOk;
}

int cmd_nimrep(Common c, const std::string& against) {
  if (c.graph.empty()) throw UsageError("--graph is required");
  const auto g = ade_graph(c.graph);
  if (c.level < 0) c.level = graph_meta(c.graph).level;
  const auto b = build_nimrep_su2(g, c.level);
  Json j = versioned("modkit.nimrep");
  j["graph"] = g.name;
  j["level"] = c.level;
  j["ok"] = b.ok;
  std::ostringstream os;
  os << g.name << " at level " << c.level << ": " << (b.ok ? "nimrep exists" : b.reason) << '\n';
  if (!b.ok) {
    j["reason"] = b.reason;
    emit(c, machine(c) ? dump(j) : os.str());
    return kCheckFailed;
  }
  const auto md = c.system == "su2" ? build_S_T(gen_su2(c.level).fusion, gen_su2(c.level).twists)
                                    : load_modular(c, true);
  const auto vr = verify_nimrep(b.nimrep.G, md.fusion);
  bool ok = vr.ok();
  j["verify"] = report_json(vr);
  Json mats = Json::array();
  for (std::size_t a = 0; a < b.nimrep.G.size(); ++a) {
    mats.push_back(matrix_json(b.nimrep.G[a]));
    os << "G_" << a << ":\n" << b.nimrep.G[a] << '\n';
  }
  j["G"] = mats;
  os << vr;
  if (!against.empty()) {
    const auto zs = invariants_from_json(read_json(against));
    Json spectra = Json::array();
    bool any = false;
    for (std::size_t i = 0; i < zs.size(); ++i) {
      const auto sr = spectrum_check(b.nimrep.G, zs[i], md);
      any = any || sr.ok();
      spectra.push_back({{"invariant", i}, {"pass", sr.ok()}, {"checks", report_json(sr)}});
      os << "spectrum against invariant #" << i << ": " << (sr.ok() ? "match" : "no match") << '\n' << sr;
    }
    j["spectrum"] = spectra;
    ok = ok && any;
  }
  emit(c, machine(c) ? dump(j) : os.str());
  return ok ? kOk : kCheckFailed;
}

int cmd_kostant(const Common& c, int truncation) {
  if (c.graph.empty()) throw UsageError("--graph is required");
  const auto meta = graph_meta(c.graph);
  const int h = meta.coxeter;
  const auto series = mckay_series(affine_ade(c.graph), truncation > 0 ? truncation : default_truncation(h));
  const auto rs = find_rs(series, h, meta.group_order);
  const bool is_a = series.graph.family == 'A';
  const auto match = nimrep_match(ade_graph(c.graph), series, rs);
  const bool ok = rs.extraction.ok && (is_a || match.ok());

  if (machine(c)) {
    Json j = versioned("modkit.kostant");
    j["graph"] = series.graph.name;
    j["truncation"] = series.truncation;
    j["n"] = series.n;
    j["r"] = rs.r;
    j["s"] = rs.s;
    j["rs_equals_group_order"] = rs.product_is_group_order;
    j["rs_equals_twice_group_order"] = rs.product_is_twice_group_order;
    Json polys = Json::object();
    for (const auto& p : rs.extraction.polys) polys[std::to_string(p.vertex)] = p.p;
    j["polynomials"] = polys;
    j["nimrep_match"] = report_json(match);
    j["nimrep_match_asserted"] = !is_a;
    emit(c, dump(j));
    return ok ? kOk : kCheckFailed;
  }
  std::ostringstream os;
  os << series.graph.name << ", h = " << h << ", #G = " << meta.group_order << ", J = " << series.truncation << '\n';
  os << "  j |";
  for (int g = 0; g < series.graph.size(); ++g) os << std::setw(3) << (g == series.graph.star ? std::string("*") : std::to_string(g));
  os << '\n';
  for (int jj = 0; jj <= series.truncation; ++jj) {
    os << std::setw(3) << jj << " |";
    for (auto v : series.n[jj]) os << std::setw(3) << v;
    os << '\n';
  }
  os << "(r, s) = (" << rs.r << ", " << rs.s << "), r + s = " << rs.r + rs.s << ", rs = " << rs.r * rs.s
     << (rs.product_is_group_order ? " = #G" : " != #G") << (rs.product_is_twice_group_order ? ", = 2#G" : ", != 2#G")
     << '\n';
  for (const auto& p : rs.extraction.polys)
    os << "p_" << (p.vertex == series.graph.star ? std::string("*") : std::to_string(p.vertex)) << " = "
       << poly_str(p.p) << '\n';
  os << "nimrep match" << (is_a ? " (A series: reported only)" : "") << ":\n" << match;
  emit(c, os.str());
  return ok ? kOk : kCheckFailed;
}

int cmd_chiral(const Common& c, const std::string& invariant_file) {
  if (invariant_file.empty()) throw UsageError("--invariant is required");
  const auto md = load_modular(c, false);
  const auto zs = invariants_from_json(read_json(invariant_file));
  bool ok = true;
  Json out = versioned("modkit.chiral");
  Json recs = Json::array();
  std::ostringstream os;
  os << std::setprecision(12);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const auto& Z = zs[i];
    if (Z.rows() != md.size() || Z.cols() != md.size()) throw UsageError("invariant size does not match the system");
    const auto g = global_indices(Z, md.dims());
    const auto cc = commutant_check(md, Z);
    const auto lr = lr_counting(Z, md.dims());
    Json rec;
    rec["global_indices"] = {{"w", g.w},           {"w_plus", g.w_plus}, {"w_minus", g.w_minus},
                             {"w_alpha", g.w_alpha}, {"w_zero", g.w_zero}, {"sum_dZd", g.dzd}};
    rec["commutant"] = {{"Y_residual", cc.y_residual},
                        {"Omega_residual", cc.omega_residual},
                        {"degenerate_vacuum_sum", cc.degenerate_vacuum_sum},
                        {"w_over_w_alpha", cc.index_ratio},
                        {"condition_holds", cc.condition_holds}};
    rec["lr_counting"] = {{"v0", lr.v0}, {"w_delta", lr.w_delta}, {"w_delta_is_w_squared", lr.w_delta_is_w_squared},
                          {"sum_squares", lr.sum_squares}, {"xi_total", lr.xi_sum_squares}};
    os << "invariant #" << i << '\n'
       << "  w = " << g.w << ", w+ = " << g.w_plus << ", w- = " << g.w_minus << ", w_alpha = " << g.w_alpha
       << ", w0 = " << g.w_zero << '\n'
       << "  |YZ - ZY| = " << cc.y_residual << ", |Omega Z - Z Omega| = " << cc.omega_residual << '\n'
       << "  sum_deg d Z_{a,0} = " << cc.degenerate_vacuum_sum << " vs w/w_alpha = " << cc.index_ratio
       << (cc.condition_holds ? " (holds)" : " (fails)") << '\n'
       << "  w_Delta = " << lr.w_delta << (lr.w_delta_is_w_squared ? " = w^2" : " != w^2") << ", #M-M = " << lr.sum_squares << '\n';
    ok = ok && cc.condition_holds && lr.w_delta_is_w_squared;
    try {
      const auto cn = chiral_norm_check(md, Z);
      rec["norms"] = report_json(cn.report);
      os << cn.report;
      ok = ok && cn.report.ok();
    } catch (const PreconditionError& e) {
      rec["norms"] = e.what();
      os << "  norms skipped: " << e.what() << '\n';
      ok = false;
    }
    recs.push_back(rec);
  }
  out["records"] = recs;
  emit(c, machine(c) ? dump(out) : os.str());
  return ok ? kOk : kCheckFailed;
}

int cmd_degenerate(const Common& c, const std::string& gamma, const std::string& theta) {
  const auto md = load_modular(c, false);
  const auto di = degenerate_invariant(md, parse_labels(gamma), parse_labels(theta));
  CouplingMatrix cm;
  cm.Z = di.Z;
  cm.counts = trace_counts(di.Z);
  cm.flags.symmetric = di.Z == di.Z.transpose();
  cm.flags.vacuum_symmetric = di.Z.row(0) == di.Z.col(0).transpose();
  if (md.normalizable) cm.flags = classify(di.Z, md);
  cm.type_I = type_I_factor(di.Z);
  if (machine(c) || !c.out.empty()) {
    emit(c, dump(to_json(CatalogHeader{system_id(c), c.system == "su2" ? c.level : -1, 1e-6}, {cm})));
  } else {
    std::ostringstream os;
    os << di.Z << '\n' << di.report;
    emit(c, os.str());
  }
  return di.report.ok() ? kOk : kCheckFailed;
}

int cmd_ising(const Common& c, int m, int n, double beta, double coupling) {
  const auto r = ising_partition(m, n, beta, coupling);
  const bool ok = r.relative_difference() < 1e-12;
  if (machine(c)) {
    Json j = versioned("modkit.ising");
    j["M"] = m;
    j["N"] = n;
    j["beta"] = beta;
    j["J"] = coupling;
    j["Z_brute"] = r.brute;
    j["Z_trace"] = r.trace;
    j["relative_difference"] = r.relative_difference();
    emit(c, dump(j));
  } else {
    std::ostringstream os;
    os << std::setprecision(17) << "Z_brute = " << r.brute << "\nZ_trace = " << r.trace
       << "\nrelative difference = " << std::setprecision(3) << r.relative_difference() << '\n';
    emit(c, os.str());
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_verify_all(const Common& c) {
  const auto results = verify_all();
  emit(c, machine(c) ? render_machine(results) : render_text(results));
  for (const auto& r : results)
    if (!r.pass) return kCheckFailed;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modkit: modular data, modular invariants, nimreps and Kostant polynomials"};
  app.require_subcommand(1);
  Common common;

  std::string catalog_action = "list";
  bool affine = false;
  auto* catalog = app.add_subcommand("catalog", "list catalog systems and graphs, or export one");
  catalog->add_option("action", catalog_action, "list, graph or system")->capture_default_str();
  catalog->add_option("--graph", common.graph, "graph name, e.g. E7");
  catalog->add_flag("--affine", affine, "export the extended graph");
  add_system(catalog, common);
  add_output(catalog, common);

  int precision = 6;
  auto* modular = app.add_subcommand("modular", "S, T, central charge and modular checks");
  add_system(modular, common);
  modular->add_option("--tolerance", common.tolerance, "matrix identity tolerance (default 1e-9)");
  modular->add_option("--precision", precision, "digits in printed matrices")->capture_default_str();
  add_output(modular, common);

  std::int64_t budget = 1'000'000;
  int threads = 1;
  auto* enumc = app.add_subcommand("enum", "enumerate modular invariants");
  add_system(enumc, common);
  enumc->add_option("--budget", budget, "search node budget")->capture_default_str();
  enumc->add_option("--tolerance", common.tolerance, "S-commutation acceptance (default 1e-6)");
  enumc->add_option("--threads", threads, "search threads, 0 for all cores")->capture_default_str();
  add_output(enumc, common);

  std::string against;
  auto* nimrep = app.add_subcommand("nimrep", "SU(2) nimrep on an ADE graph");
  nimrep->add_option("--graph", common.graph, "graph name")->required();
  nimrep->add_option("--level", common.level, "level (default h - 2)");
  nimrep->add_option("--against", against, "invariant catalog file for the spectrum check");
  add_output(nimrep, common);

  int truncation = -1;
  auto* kostant = app.add_subcommand("kostant", "McKay series and Kostant polynomials");
  kostant->add_option("--graph", common.graph, "graph name")->required();
  kostant->add_option("--truncation", truncation, "series length J (default 3h + 4)");
  add_output(kostant, common);

  std::string invariant_file;
  auto* chiral = app.add_subcommand("chiral", "global indices and chiral checks for invariants");
  add_system(chiral, common);
  chiral->add_option("--invariant", invariant_file, "invariant catalog file")->required();
  add_output(chiral, common);

  std::string gamma, theta;
  auto* degenerate = app.add_subcommand("degenerate", "invariant from a degenerate subsystem");
  add_system(degenerate, common);
  degenerate->add_option("--gamma", gamma, "comma-separated labels of the subsystem")->required();
  degenerate->add_option("--theta", theta, "comma-separated degenerate labels")->required();
  add_output(degenerate, common);

  int m = 2, n = 2;
  double beta = 0.5, coupling = 1.0;
  auto* ising = app.add_subcommand(
      "ising", "Ising torus partition function, brute force against trace T^N "
               "(row-to-row transfer matrix, in-row bonds split half to each neighbouring row)");
  ising->add_option("--m", m, "width M (periodic)")->capture_default_str();
  ising->add_option("--n", n, "length N (periodic)")->capture_default_str();
  ising->add_option("--beta", beta, "inverse temperature")->capture_default_str();
  ising->add_option("--J", coupling, "coupling")->capture_default_str();
  add_output(ising, common);

  auto* verify = app.add_subcommand("verify-all", "run every acceptance criterion");
  add_output(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(catalog_action, common, affine);
    if (modular->parsed()) return cmd_modular(common, precision);
    if (enumc->parsed()) return cmd_enum(common, budget, threads);
    if (nimrep->parsed()) return cmd_nimrep(common, against);
    if (kostant->parsed()) return cmd_kostant(common, truncation);
    if (chiral->parsed()) return cmd_chiral(common, invariant_file);
    if (degenerate->parsed()) return cmd_degenerate(common, gamma, theta);
    if (ising->parsed()) return cmd_ising(common, m, n, beta, coupling);
    if (verify->parsed()) return cmd_verify_all(common);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n' << app.help();
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}
