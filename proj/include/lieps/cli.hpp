#pragma once

// The `lieps` command line. run_cli() is kept in a header so tests can drive
// it with in-memory streams.
//
// Exit codes: 0 success, 1 domain error, 2 parse or usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lieps/bivector_syntax.hpp"
#include "lieps/catalog.hpp"
#include "lieps/connections.hpp"

namespace lieps {

namespace cli_detail {

struct Context {
  std::istream &in;
  std::ostream &out;
  bool as_json = false;
};

inline std::string read_input(const std::string &file, std::istream &in) {
  std::ostringstream buf;
  if (file == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(file);
    if (!f) throw Error(ErrorKind::Parse, "cannot open '" + file + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

struct Loaded {
  AlgebraDocument doc;
  HomogeneousSpace space;
};

inline Loaded load(const std::string &file, std::istream &in) {
  AlgebraDocument doc = parse_document(read_input(file, in));
  const LieAlgebra L = doc.algebra();
  const auto report = validate(L);
  if (!report.ok()) throw Error(ErrorKind::InvalidParams, "structure constants violate the Lie algebra axioms");
  HomogeneousSpace space = doc.space();
  return {std::move(doc), std::move(space)};
}

inline const std::vector<std::string> &qlabels(const HomogeneousSpace &M) { return M.iso.complement_labels; }

inline std::vector<std::string> dual_labels(const HomogeneousSpace &M) {
  std::vector<std::string> out;
  for (const auto &l : qlabels(M)) out.push_back(l + "*");
  return out;
}

inline json rationals(const Vec &v) { return detail::vec_to_json(v); }
inline json rationals(const Mat &m) { return detail::mat_to_json(m); }

inline void print_matrix(std::ostream &os, const Mat &m, const std::string &indent = "  ") {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]\n";
  }
}

inline const char *yes_no(bool b) { return b ? "yes" : "no"; }

// --- subcommands -----------------------------------------------------------

inline int cmd_validate(Context &cx, const std::string &file) {
  AlgebraDocument doc = parse_document(read_input(file, cx.in));
  const LieAlgebra L = doc.algebra();
  const auto report = validate(L);
  if (cx.as_json) {
    json j;
    j["valid"] = report.ok();
    json v = json::array();
    for (const auto &x : report.violations) {
      json e;
      e["kind"] = x.kind == Violation::Kind::Antisymmetry ? "antisymmetry" : "jacobi";
      e["indices"] = {x.i, x.j, x.k};
      e["component"] = x.component;
      v.push_back(e);
    }
    j["violations"] = v;
    if (report.ok()) {
      const HomogeneousSpace M = doc.space();
      j["dim"] = M.dim();
      j["h_dim"] = M.iso.h_dim();
      j["quotient_dim"] = M.quotient_dim();
      j["generators"] = M.iso.generators.size();
    }
    cx.out << j.dump(2) << "\n";
  } else {
    for (const auto &x : report.violations) {
      if (x.kind == Violation::Kind::Antisymmetry)
        cx.out << "antisymmetry violated at (" << x.i << ", " << x.j << ", " << x.k << ")\n";
      else
        cx.out << "jacobi violated for (" << L.labels()[x.i] << ", " << L.labels()[x.j] << ", " << L.labels()[x.k]
               << ") in component " << L.labels()[x.component] << "\n";
    }
    if (report.ok()) {
      const HomogeneousSpace M = doc.space();
      cx.out << "valid: dim " << M.dim() << ", h dim " << M.iso.h_dim() << ", quotient dim " << M.quotient_dim()
             << ", generators " << M.iso.generators.size() << "\n";
    }
  }
  return report.ok() ? 0 : 1;
}

inline int cmd_invariants(Context &cx, const std::string &file) {
  const Loaded ld = load(file, cx.in);
  const auto space = invariant_bivectors(ld.space);
  const auto &labels = qlabels(ld.space);
  if (cx.as_json) {
    json j;
    j["dim"] = space.dim();
    j["labels"] = labels;
    json b = json::array(), c = json::array();
    for (std::size_t i = 0; i < space.dim(); ++i) {
      b.push_back(format_bivector(space.basis.vector(i), labels));
      c.push_back(rationals(space.basis.vector(i)));
    }
    j["basis"] = b;
    j["coords"] = c;
    cx.out << j.dump(2) << "\n";
  } else {
    cx.out << "dim " << space.dim() << "\n";
    for (std::size_t i = 0; i < space.dim(); ++i) cx.out << "  " << format_bivector(space.basis.vector(i), labels) << "\n";
  }
  return 0;
}

inline int cmd_ybe(Context &cx, const std::string &file, const std::string &rtext) {
  const Loaded ld = load(file, cx.in);
  const auto &L = ld.space.g;
  const auto &iso = ld.space.iso;
  const Bivector r = parse_bivector(rtext, qlabels(ld.space));
  const YBTensor t = yang_baxter_tensor(L, iso, r);
  const bool invariant = is_invariant(L, iso, r);
  const bool fixed_zero = is_r_matrix_on_fixed(L, iso, r);
  const auto dl = dual_labels(ld.space);
  const auto nz = t.nonzero();
  if (cx.as_json) {
    json j;
    j["r"] = format_bivector(r, qlabels(ld.space));
    j["invariant"] = invariant;
    j["r_matrix"] = nz.empty();
    j["zero_on_fixed_covectors"] = fixed_zero;
    json e = json::array();
    for (const auto &x : nz) {
      json k;
      k["args"] = {dl[x.a], dl[x.b], dl[x.c]};
      k["value"] = to_string(x.value);
      e.push_back(k);
    }
    j["nonzero"] = e;
    cx.out << j.dump(2) << "\n";
  } else {
    cx.out << "invariant: " << yes_no(invariant) << "\n";
    if (nz.empty()) {
      cx.out << "r-matrix\n";
    } else {
      cx.out << "not an r-matrix; nonzero entries:\n";
      for (const auto &x : nz)
        cx.out << "  [[r,r]](" << dl[x.a] << ", " << dl[x.b] << ", " << dl[x.c] << ") = " << x.value << "\n";
    }
    cx.out << "zero on fixed covectors: " << yes_no(fixed_zero) << "\n";
  }
  return 0;
}

inline int cmd_scan(Context &cx, const std::string &file, const std::vector<std::string> &points) {
  const Loaded ld = load(file, cx.in);
  const auto &L = ld.space.g;
  const auto &iso = ld.space.iso;
  const auto &labels = qlabels(ld.space);
  const auto space = invariant_bivectors(ld.space);
  auto rows = scan_invariant_space(L, iso, space);
  for (std::size_t i = 0; i < points.size(); ++i) {
    Bivector r = parse_bivector(points[i], labels);
    rows.push_back({"p" + std::to_string(i + 1), r, is_r_matrix(L, iso, r)});
  }
  if (cx.as_json) {
    json j;
    j["invariant_dim"] = space.dim();
    json arr = json::array();
    for (const auto &row : rows) {
      json e;
      e["candidate"] = row.candidate;
      e["bivector"] = format_bivector(row.r, labels);
      e["invariant"] = is_invariant(L, iso, row.r);
      e["r_matrix"] = row.r_matrix;
      arr.push_back(e);
    }
    j["rows"] = arr;
    cx.out << j.dump(2) << "\n";
  } else {
    cx.out << "invariant dim " << space.dim() << "\n";
    for (const auto &row : rows)
      cx.out << "  " << row.candidate << "\t" << format_bivector(row.r, labels) << "\tinvariant "
             << yes_no(is_invariant(L, iso, row.r)) << "\tr-matrix " << yes_no(row.r_matrix) << "\n";
  }
  return 0;
}

inline int cmd_leaf(Context &cx, const std::string &file, const std::string &rtext) {
  const Loaded ld = load(file, cx.in);
  const auto &L = ld.space.g;
  const auto &iso = ld.space.iso;
  const Bivector r = parse_bivector(rtext, qlabels(ld.space));
  const LeafData leaf = leaf_cocycle(L, iso, r);
  const LeafDecomposition dec = leaf_decomposition(L, iso, r);
  const bool h_inv = leaf_form_is_invariant(L, iso, r, leaf);
  const auto &gl = L.labels();
  if (cx.as_json) {
    json j;
    json basis = json::array();
    for (const auto &v : leaf.basis) basis.push_back(format_vector(v, gl));
    j["a_basis"] = basis;
    j["a_dim"] = leaf.basis.size();
    j["h_dim"] = leaf.h_dim;
    j["omega"] = rationals(leaf.omega);
    j["radical_equals_h"] = true;
    j["omega_h_invariant"] = h_inv;
    j["reductive"] = dec.reductive;
    j["symmetric"] = dec.symmetric;
    cx.out << j.dump(2) << "\n";
  } else {
    cx.out << "a_r dim " << leaf.basis.size() << " (h dim " << leaf.h_dim << ")\n";
    for (const auto &v : leaf.basis) cx.out << "  " << format_vector(v, gl) << "\n";
    cx.out << "omega_r:\n";
    print_matrix(cx.out, leaf.omega);
    cx.out << "Rad(omega_r) = h: yes\n";
    cx.out << "omega_r h-invariant: " << yes_no(h_inv) << "\n";
    cx.out << "decomposition h + Im(r#): reductive " << yes_no(dec.reductive) << ", symmetric "
           << yes_no(dec.symmetric) << "\n";
  }
  return 0;
}

inline int cmd_connection(Context &cx, const std::string &file, const std::string &rtext, const std::string &kind_text) {
  const Loaded ld = load(file, cx.in);
  const auto &L = ld.space.g;
  const auto &iso = ld.space.iso;
  const ConnectionKind kind = parse_connection_kind(kind_text);
  const Bivector r = parse_bivector(rtext, qlabels(ld.space));
  const ConnectionMap b = build_connection(kind, L, iso, r);
  const std::size_t m = iso.quotient_dim();
  const auto dl = dual_labels(ld.space);
  const CompatResult compat = poisson_compat(L, iso, r, b);
  const bool invariant = ad_invariance_check(L, iso, b);

  struct Pair {
    std::size_t a, c;
    Vec torsion;
    bool curvature_zero;
  };
  std::vector<Pair> pairs;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = a + 1; c < m; ++c)
      pairs.push_back({a, c, torsion(L, iso, r, b, unit_vec(m, a), unit_vec(m, c)),
                       curvature(L, iso, r, b, unit_vec(m, a), unit_vec(m, c)).is_zero()});
  bool torsion_zero = true, curvature_zero = true;
  for (const auto &p : pairs) {
    torsion_zero = torsion_zero && is_zero(p.torsion);
    curvature_zero = curvature_zero && p.curvature_zero;
  }

  if (cx.as_json) {
    json j;
    j["kind"] = std::string(to_string(kind));
    json bj = json::array();
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t c = 0; c < m; ++c)
        if (!is_zero(b.at(a, c))) {
          json e;
          e["args"] = {dl[a], dl[c]};
          e["value"] = format_vector(b.at(a, c), dl);
          bj.push_back(e);
        }
    j["b"] = bj;
    json tj = json::array();
    for (const auto &p : pairs) {
      json e;
      e["args"] = {dl[p.a], dl[p.c]};
      e["torsion"] = format_vector(p.torsion, dl);
      e["curvature_zero"] = p.curvature_zero;
      tj.push_back(e);
    }
    j["pairs"] = tj;
    j["torsion_free"] = torsion_zero;
    j["curvature_free"] = curvature_zero;
    j["poisson_compatible"] = compat.ok;
    j["invariant"] = invariant;
    cx.out << j.dump(2) << "\n";
  } else {
    cx.out << "connection " << to_string(kind) << "\n";
    bool any = false;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t c = 0; c < m; ++c)
        if (!is_zero(b.at(a, c))) {
          cx.out << "  b(" << dl[a] << ", " << dl[c] << ") = " << format_vector(b.at(a, c), dl) << "\n";
          any = true;
        }
    if (!any) cx.out << "  b = 0\n";
    cx.out << "torsion:\n";
    for (const auto &p : pairs)
      cx.out << "  T(" << dl[p.a] << ", " << dl[p.c] << ") = " << format_vector(p.torsion, dl) << "\n";
    cx.out << "curvature zero:\n";
    for (const auto &p : pairs)
      cx.out << "  R(" << dl[p.a] << ", " << dl[p.c] << "): " << yes_no(p.curvature_zero) << "\n";
    cx.out << "torsion-free: " << yes_no(torsion_zero) << "\n";
    cx.out << "curvature-free: " << yes_no(curvature_zero) << "\n";
    cx.out << "poisson-compatible: " << yes_no(compat.ok);
    if (compat.witness)
      cx.out << " (fails at " << dl[(*compat.witness)[0]] << ", " << dl[(*compat.witness)[1]] << ", "
             << dl[(*compat.witness)[2]] << ")";
    cx.out << "\n";
    cx.out << "invariant: " << yes_no(invariant) << "\n";
  }
  return 0;
}

inline int cmd_example(Context &cx, const std::string &name, const BuiltinParams &p) {
  cx.out << emit_document(builtin(name, p));
  return 0;
}

} // namespace cli_detail

inline int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
  CLI::App app{"Invariant Poisson structures on homogeneous spaces, in exact arithmetic", "lieps"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string file, rtext, kind = "fedosov", name;
  std::vector<std::string> points;
  BuiltinParams params;

  auto *validate_cmd = app.add_subcommand("validate", "Check the Lie algebra axioms and the isotropy data");
  validate_cmd->add_option("file", file, "Algebra document, or - for stdin")->required();

  auto *inv_cmd = app.add_subcommand("invariants", "Basis of the invariant bivectors");
  inv_cmd->add_option("file", file)->required();

  auto *ybe_cmd = app.add_subcommand("ybe", "Evaluate [[r,r]] for a bivector");
  ybe_cmd->add_option("file", file)->required();
  ybe_cmd->add_option("--r", rtext, "Bivector, e.g. \"(e1-e2)^e3\"")->required();

  auto *scan_cmd = app.add_subcommand("scan", "Test invariant basis bivectors, pairwise sums and given points");
  scan_cmd->add_option("file", file)->required();
  scan_cmd->add_option("--point", points, "Extra candidate bivector (repeatable)");

  auto *leaf_cmd = app.add_subcommand("leaf", "Leaf algebra and 2-cocycle of an r-matrix");
  leaf_cmd->add_option("file", file)->required();
  leaf_cmd->add_option("--r", rtext)->required();

  auto *conn_cmd = app.add_subcommand("connection", "Invariant contravariant connection of an r-matrix");
  conn_cmd->add_option("file", file)->required();
  conn_cmd->add_option("--r", rtext)->required();
  conn_cmd->add_option("--kind", kind, "canonical, natural, left_symmetric or fedosov")
      ->check(CLI::IsMember({"canonical", "natural", "left_symmetric", "fedosov"}));

  auto *ex_cmd = app.add_subcommand("example", "Emit a builtin algebra document");
  ex_cmd->add_option("name", name, "abelian, heisenberg, iso11, gl_sym, so4_grassmann or double")->required();
  ex_cmd->add_option("--n", params.n, "Size parameter");
  ex_cmd->add_option("--of", params.of, "Base builtin for double");

  for (auto *sub : {validate_cmd, inv_cmd, ybe_cmd, scan_cmd, leaf_cmd, conn_cmd, ex_cmd})
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> argv_store{"lieps"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char *> argv;
  for (auto &s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return 2;
  }

  cli_detail::Context cx{in, out, format == "json"};
  try {
    if (validate_cmd->parsed()) return cli_detail::cmd_validate(cx, file);
    if (inv_cmd->parsed()) return cli_detail::cmd_invariants(cx, file);
    if (ybe_cmd->parsed()) return cli_detail::cmd_ybe(cx, file, rtext);
    if (scan_cmd->parsed()) return cli_detail::cmd_scan(cx, file, points);
    if (leaf_cmd->parsed()) return cli_detail::cmd_leaf(cx, file, rtext);
    if (conn_cmd->parsed()) return cli_detail::cmd_connection(cx, file, rtext, kind);
    if (ex_cmd->parsed()) return cli_detail::cmd_example(cx, name, params);
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Parse ? 2 : 1;
  }
  return 2;
}

} // namespace lieps
