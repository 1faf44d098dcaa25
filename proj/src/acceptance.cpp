#include "modkit/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

#include "modkit/catalog.hpp"
#include "modkit/chiral.hpp"
#include "modkit/invariant.hpp"
#include "modkit/io.hpp"
#include "modkit/ising.hpp"
#include "modkit/kostant.hpp"
#include "modkit/modular.hpp"
#include "modkit/nimrep.hpp"
#include "modkit/oracle.hpp"

namespace modkit {

namespace {

CriterionResult criterion(int id, std::string name) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  return r;
}

ModularData su2_data(int k) {
  auto s = gen_su2(k);
  return build_S_T(s.fusion, s.twists);
}

void add_block(IMatrix& Z, const std::vector<int>& left, const std::vector<int>& right, int mult = 1) {
  for (int a : left)
    for (int b : right) Z(a, b) += mult;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << x;
  return os.str();
}

bool contains(const std::vector<IMatrix>& list, const IMatrix& z) {
  return std::find(list.begin(), list.end(), z) != list.end();
}

CriterionResult modular_relations() {
  CriterionResult r = criterion(1, "modular relations");
  bool ok = true;
  std::ostringstream os;
  for (int k : {2, 4, 10, 16, 28}) {
    const auto md = su2_data(k);
    const auto rep = verify_modular(md, 1e-9);
    for (const char* name : {"TSTST = S", "S unitary", "S^2 permutation"}) {
      const Check* c = rep.find(name);
      ok = ok && c && c->pass;
    }
    os << "k=" << k << (rep.ok() ? " ok" : " FAIL") << "; ";
  }
  r.pass = ok;
  r.detail = os.str();
  return r;
}

CriterionResult level16_invariants() {
  CriterionResult r = criterion(2, "SU(2)_16 invariants A17, D10, E7");
  const auto md = su2_data(16);
  const auto list = enumerate(md);
  std::vector<IMatrix> zs;
  for (const auto& c : list) zs.push_back(c.Z);
  const bool exact = zs.size() == 3 && contains(zs, su2_16_a17()) && contains(zs, su2_16_d10()) &&
                     contains(zs, su2_16_e7());
  r.pass = exact && su2_16_a17().trace() == 17 && su2_16_d10().trace() == 10 && su2_16_e7().trace() == 7;
  std::ostringstream os;
  os << zs.size() << " invariants, traces";
  for (const auto& z : zs) os << ' ' << z.trace();
  r.detail = os.str();
  return r;
}

CriterionResult oracle_equivalence() {
  CriterionResult r = criterion(3, "enumeration equals brute force for k <= 6");
  bool ok = true;
  std::ostringstream os;
  for (int k = 1; k <= 6; ++k) {
    const auto md = su2_data(k);
    const auto fast = enumerate_invariants(md);
    const auto slow = brute_force_invariants(md, true);
    bool same = fast == slow;
    if (k <= 2) same = same && brute_force_invariants(md, false) == slow;
    ok = ok && same;
    os << "k=" << k << ":" << fast.size() << (same ? "" : "(mismatch)") << " ";
  }
  r.pass = ok;
  r.detail = os.str();
  return r;
}

CriterionResult type_structure() {
  CriterionResult r = criterion(4, "type I factor of D10, twist factor of E7");
  const IMatrix d10 = su2_16_d10();
  const IMatrix e7 = su2_16_e7();
  std::vector<IVector> expected;
  for (auto pair : std::vector<std::vector<int>>{{0, 16}, {2, 14}, {4, 12}, {6, 10}, {8}, {8}}) {
    IVector v = IVector::Zero(17);
    for (int a : pair) v(a) = 1;
    expected.push_back(v);
  }
  const auto b = type_I_factor(d10);
  bool rows_ok = false;
  if (b && b->rows() == 6 && b->transpose() * *b == d10) {
    std::vector<IVector> got;
    for (int t = 0; t < 6; ++t) got.push_back(b->row(t).transpose());
    auto less = [](const IVector& x, const IVector& y) {
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    };
    std::sort(got.begin(), got.end(), less);
    std::sort(expected.begin(), expected.end(), less);
    rows_ok = got == expected;
  }
  const bool e7_none = !type_I_factor(e7).has_value();
  bool twist_ok = false;
  std::ostringstream os;
  if (b) {
    const auto theta = twist_factor(e7, *b);
    if (theta) {
      IMatrix sum = IMatrix::Zero(17, 17);
      for (int t = 0; t < 6; ++t) sum += b->row(t).transpose() * b->row((*theta)[t]);
      twist_ok = sum == e7;
      os << "theta =";
      for (int t : *theta) os << ' ' << t;
    }
  }
  r.pass = rows_ok && e7_none && twist_ok;
  os << "; b rows " << (rows_ok ? "match" : "differ") << "; E7 type I " << (e7_none ? "none" : "found");
  r.detail = os.str();
  return r;
}

CriterionResult nimrep_spectra() {
  CriterionResult r = criterion(5, "nimrep existence and spectra");
  bool ok = true;
  std::ostringstream os;
  for (const auto& name : catalog_graph_names()) {
    const auto g = ade_graph(name);
    const int h = graph_meta(name).coxeter;
    for (int k = 0; k <= 32; ++k) {
      if (build_nimrep_su2(g, k).ok != (k == h - 2)) {
        ok = false;
        os << name << " at level " << k << " wrong; ";
      }
    }
  }
  struct Case {
    int k;
    std::string graph;
    int trace;
  };
  for (const Case& c : std::vector<Case>{{16, "A17", 17}, {16, "D10", 10}, {16, "E7", 7}, {10, "E6", 6}, {28, "E8", 8}}) {
    const auto md = su2_data(c.k);
    IMatrix Z;
    if (c.k == 16) {
      Z = c.graph == "A17" ? su2_16_a17() : c.graph == "D10" ? su2_16_d10() : su2_16_e7();
    } else {
      for (const auto& z : enumerate_invariants(md))
        if (z.trace() == c.trace) Z = z;
    }
    const auto b = build_nimrep_su2(ade_graph(c.graph), c.k);
    const bool pass = Z.size() > 0 && b.ok && spectrum_check(b.nimrep.G, Z, md, 1e-7).ok();
    ok = ok && pass;
    os << c.graph << "@" << c.k << (pass ? " ok" : " FAIL") << "; ";
  }
  const auto wrong = build_nimrep_su2(ade_graph("E7"), 10);
  ok = ok && !wrong.ok;
  os << "E7@10: " << (wrong.ok ? "closes" : wrong.reason);
  r.pass = ok;
  r.detail = os.str();
  return r;
}

CriterionResult kostant_check() {
  CriterionResult r = criterion(6, "Kostant polynomials");
  bool ok = true;
  std::ostringstream os;
  std::vector<std::string> names;
  for (int l = 1; l <= 8; ++l) names.push_back("A" + std::to_string(l));
  for (int l = 4; l <= 8; ++l) names.push_back("D" + std::to_string(l));
  for (int l = 6; l <= 8; ++l) names.push_back("E" + std::to_string(l));
  for (const auto& name : names) {
    try {
      const auto meta = graph_meta(name);
      const int h = meta.coxeter;
      const auto series = mckay_series(affine_ade(name), default_truncation(h));
      bool bounded = true;
      for (int j = 0; j <= series.truncation; ++j)
        for (auto v : series.n[j]) bounded = bounded && v >= 0 && v <= j + 1;
      const auto rs = find_rs(series, h, meta.group_order);
      bool polys = rs.extraction.ok;
      for (const auto& p : rs.extraction.polys) {
        for (auto c : p.p) polys = polys && c >= 0;
        if (p.vertex == series.graph.star) {
          Poly expect(h + 1, 0);
          expect[0] = 1;
          expect[h] = 1;
          polys = polys && poly_trim(p.p) == expect;
        }
      }
      const bool unique = rs.certified.size() == 1 && rs.r + rs.s == h + 2;
      bool match = true;
      if (name[0] != 'A') match = nimrep_match(ade_graph(name), series, rs).ok();
      const bool pass = bounded && unique && polys && match;
      ok = ok && pass;
      os << name << "(" << rs.r << "," << rs.s << ")" << (rs.product_is_group_order ? " rs=#G" : "")
         << (rs.product_is_twice_group_order ? " rs=2#G" : "") << (pass ? "" : " FAIL") << "; ";
    } catch (const std::exception& e) {
      ok = false;
      os << name << " error " << e.what() << "; ";
    }
  }
  r.pass = ok;
  r.detail = os.str();
  return r;
}

CriterionResult global_index_identities() {
  CriterionResult r = criterion(7, "global index identities at level 16");
  const auto md = su2_data(16);
  bool ok = true;
  double worst_comm = 0;
  double worst_rel = 0;
  for (const auto& z : enumerate_invariants(md)) {
    const auto cc = commutant_check(md, z);
    worst_comm = std::max({worst_comm, cc.y_residual, cc.omega_residual});
    ok = ok && cc.y_residual < 1e-8 && cc.omega_residual < 1e-8;
    ok = ok && chiral_norm_check(md, z).report.ok();
    const auto g = global_indices(z, md.dims());
    const double rel = std::abs(g.w_zero * g.w_alpha - g.w_plus * g.w_minus) / (g.w_plus * g.w_minus);
    worst_rel = std::max(worst_rel, rel);
    ok = ok && rel < 1e-10;
    if (z.row(0) == z.col(0).transpose()) ok = ok && g.w_plus == g.w_minus;
  }
  r.pass = ok;
  r.detail = "max commutant residual " + fmt(worst_comm) + ", max index relative error " + fmt(worst_rel);
  return r;
}

CriterionResult degenerate_constructions() {
  CriterionResult r = criterion(8, "degenerate subsystem invariants");
  bool ok = true;
  std::ostringstream os;
  auto run = [&](const std::string& label, const ModularData& md, const std::vector<int>& gamma,
                 const std::vector<int>& theta, const IMatrix& expected) {
    try {
      const auto di = degenerate_invariant(md, gamma, theta);
      const bool pass = di.Z == expected && di.report.ok();
      ok = ok && pass;
      os << label << (pass ? " ok" : " FAIL") << "; ";
    } catch (const std::exception& e) {
      ok = false;
      os << label << " error " << e.what() << "; ";
    }
  };
  {
    const auto s = gen_su2(4);
    const auto md = braided_data(s.fusion, s.twists);
    run("SU(2)_4 trivial Theta", md, {0, 1, 2, 3, 4}, {0}, IMatrix::Identity(5, 5));
  }
  {
    const auto s = gen_cyclic(2, {Twist(0, 1), Twist(0, 1)});
    const auto md = braided_data(s.fusion, s.twists);
    run("degenerate Z2", md, {0, 1}, {0, 1}, IMatrix::Ones(2, 2));
  }
  {
    const auto p = product_system(gen_cyclic(2, {Twist(0, 1), Twist(0, 1)}), gen_cyclic(3, quadratic_twists(3)));
    const auto md = braided_data(p.fusion, p.twists);
    IMatrix expected = IMatrix::Zero(6, 6);
    for (int a = 0; a < 3; ++a) add_block(expected, {a, 3 + a}, {a, 3 + a});
    run("Z2 x Z3 with Theta = Z2", md, {0, 1, 2, 3, 4, 5}, {0, 3}, expected);
  }
  r.pass = ok;
  r.detail = os.str();
  return r;
}

CriterionResult ising_check() {
  CriterionResult r = criterion(9, "Ising transfer matrix");
  double worst = 0;
  int cases = 0;
  for (double beta : {0.0, 0.3, 1.0})
    for (int m = 1; m <= 16; ++m)
      for (int n = 1; m * n <= 16; ++n) {
        worst = std::max(worst, ising_partition(m, n, beta).relative_difference());
        ++cases;
      }
  r.pass = worst < 1e-12;
  r.detail = std::to_string(cases) + " cases, max relative difference " + fmt(worst);
  return r;
}

CriterionResult timed(const std::function<CriterionResult()>& f, double limit) {
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = f();
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit > 0 && r.seconds >= limit) {
    r.pass = false;
    r.detail += " [over time limit]";
  }
  return r;
}

}  // namespace

IMatrix su2_16_a17() { return IMatrix::Identity(17, 17); }

IMatrix su2_16_d10() {
  IMatrix Z = IMatrix::Zero(17, 17);
  for (int a : {0, 2, 4, 6}) add_block(Z, {a, 16 - a}, {a, 16 - a});
  Z(8, 8) = 2;
  return Z;
}

IMatrix su2_16_e7() {
  IMatrix Z = IMatrix::Zero(17, 17);
  for (int a : {0, 4, 6}) add_block(Z, {a, 16 - a}, {a, 16 - a});
  Z(8, 8) = 1;
  add_block(Z, {2, 14}, {8});
  add_block(Z, {8}, {2, 14});
  return Z;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  out.push_back(timed(modular_relations, 1.0));
  out.push_back(timed(level16_invariants, 60.0));
  out.push_back(timed(oracle_equivalence, 0));
  out.push_back(timed(type_structure, 0));
  out.push_back(timed(nimrep_spectra, 0));
  out.push_back(timed(kostant_check, 5.0));
  out.push_back(timed(global_index_identities, 0));
  out.push_back(timed(degenerate_constructions, 0));
  out.push_back(timed(ising_check, 0));
  return out;
}

std::vector<CriterionResult> verify_all() {
  auto first = run_acceptance();
  const auto t0 = std::chrono::steady_clock::now();
  const auto second = run_acceptance();
  CriterionResult r = criterion(10, "verify-all is deterministic");
  r.pass = render_machine(first) == render_machine(second);
  r.detail = r.pass ? "two runs byte-identical" : "machine outputs differ between runs";
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  first.push_back(r);
  return first;
}

std::string render_machine(const std::vector<CriterionResult>& results) {
  Json j = versioned("modkit.acceptance");
  Json list = Json::array();
  bool all = true;
  for (const auto& r : results) {
    list.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    all = all && r.pass;
  }
  j["criteria"] = list;
  j["pass"] = all;
  return j.dump(2) + "\n";
}

std::string render_text(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  for (const auto& r : results)
    os << (r.pass ? "PASS " : "FAIL ") << r.id << ' ' << r.name << ": " << r.detail << " ("
       << std::fixed << std::setprecision(3) << r.seconds << "s)\n";
  return os.str();
}

}  // namespace modkit
