#include "chevalley/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chevalley/chain_lemma.hpp"
#include "chevalley/classical_orbits.hpp"
#include "chevalley/orbit_geometry.hpp"
#include "chevalley/parabolic.hpp"
#include "chevalley/tables.hpp"

namespace chevalley {

namespace {

using nlohmann::json;

std::string wdd_string(const std::vector<int>& w) {
  std::string s;
  for (int x : w) s += char('0' + x);
  return s;
}

std::string join_labels(const std::vector<std::string>& labels) {
  if (labels.empty()) return "0";
  std::string s = labels[0];
  for (size_t i = 1; i < labels.size(); ++i) s += "+" + labels[i];
  return s;
}

std::vector<std::string> split_plus(const std::string& s) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream is(s);
  while (std::getline(is, part, '+')) out.push_back(part);
  return out;
}

json mat_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back((long)m.at(i, j).get_num().get_si());
    rows.push_back(row);
  }
  return rows;
}

std::string mat_text(const Mat& m) {
  std::string s = "[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) s += " / ";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += " ";
      s += m.at(i, j).get_str();
    }
  }
  return s + "]";
}

struct Ctx {
  std::string format = "text";
  std::string dataset;
  std::ostream& out;
  std::ostream& err;
  int rc = 0;

  bool json_mode() const { return format == "json"; }
  void emit(const json& doc) { out << doc.dump(2) << "\n"; }
};

void cmd_roots(Ctx& ctx, const std::string& type_tok) {
  CartanType kind = parse_cartan_type(type_tok);
  RootSystem sys = build_root_system(kind);
  if (ctx.json_mode()) {
    json doc{{"schema", 1},
             {"command", "roots"},
             {"type", kind.name()},
             {"rank", sys.rank()},
             {"positive_count", sys.num_positive()},
             {"root_count", 2 * sys.num_positive()},
             {"highest_root", root_label(sys.highest_root())}};
    json cm = json::array();
    for (const auto& row : sys.cartan) cm.push_back(row);
    doc["cartan_matrix"] = cm;
    json roots = json::array();
    for (const auto& r : sys.positive_roots)
      roots.push_back({{"label", root_label(r)}, {"height", r.height()}});
    doc["positive_roots"] = roots;
    ctx.emit(doc);
  } else {
    ctx.out << kind.name() << ": " << sys.num_positive() << " positive roots, "
            << 2 * sys.num_positive() << " in all, highest root "
            << root_label(sys.highest_root()) << "\n";
    for (const auto& r : sys.positive_roots)
      ctx.out << "  " << root_label(r) << "  height " << r.height() << "\n";
  }
}

void cmd_grade(Ctx& ctx, const std::string& type_tok, int node) {
  CartanType kind = parse_cartan_type(type_tok);
  RootSystem sys = build_root_system(kind);
  auto g = grade_nilradical(sys, {node});
  auto levi = levi_type(g);
  long total = 0;
  for (const auto& p : g.pieces) total += (long)p.size();

  struct Row {
    ModuleDescriptor d;
    std::optional<Realization> real;
  };
  std::vector<Row> rows;
  for (int i = 1; i <= g.num_pieces(); ++i) {
    Row r{module_descriptor(g, i), std::nullopt};
    if (i >= 2) r.real = first_piece_realization(kind, node, i);
    rows.push_back(std::move(r));
  }

  if (ctx.json_mode()) {
    json lv = json::array();
    for (const auto& t : levi) lv.push_back(t.name());
    json pieces = json::array();
    for (const auto& r : rows) {
      json p{{"piece", r.d.piece}, {"dim", r.d.dim}, {"action", r.d.action}};
      if (r.real)
        p["realization"] = {{"type", r.real->kind.name()}, {"node", r.real->node}};
      pieces.push_back(p);
    }
    ctx.emit(json{{"schema", 1},
                  {"command", "grade"},
                  {"type", kind.name()},
                  {"node", node},
                  {"levi", lv},
                  {"pieces", pieces},
                  {"nilradical_dim", total}});
  } else {
    ctx.out << kind.name() << " node " << node << ": Levi";
    if (levi.empty()) ctx.out << " (torus)";
    for (size_t i = 0; i < levi.size(); ++i)
      ctx.out << (i ? " x " : " ") << levi[i].name();
    ctx.out << ", " << g.num_pieces() << (g.num_pieces() == 1 ? " piece" : " pieces")
            << ", dim u = " << total << "\n";
    for (const auto& r : rows) {
      ctx.out << "  u" << r.d.piece << ": dim " << std::setw(3) << r.d.dim << "  action "
              << r.d.action;
      if (r.real)
        ctx.out << "  = first piece of " << r.real->kind.name() << " node " << r.real->node;
      ctx.out << "\n";
    }
  }
}

void cmd_orbits(Ctx& ctx, const std::string& type_tok, int node, int piece) {
  CartanType kind = parse_cartan_type(type_tok);
  OrbitCatalog cat = load_orbit_catalog(ctx.dataset);
  std::vector<const ModuleTable*> tables;
  for (const ModuleTable* t : cat.for_node(kind, node))
    if (piece == 0 || t->piece == piece) tables.push_back(t);
  if (tables.empty())
    throw std::runtime_error("no stored table for " + kind.name() + " node " +
                             std::to_string(node) +
                             (piece ? " piece " + std::to_string(piece) : ""));
  ChevalleyBasis basis(build_root_system(kind));
  auto g = grade_nilradical(basis.system(), {node});

  json jtables = json::array();
  bool mismatch = false;
  std::ostringstream text;
  for (const ModuleTable* t : tables) {
    text << kind.name() << " node " << node << " piece " << t->piece << ": dim " << t->dim
         << ", " << t->records.size() << " records\n";
    size_t w = 9;
    for (const auto& r : t->records) w = std::max(w, join_labels(r.labels).size());
    json jrecords = json::array();
    for (const auto& r : t->records) {
      int cdim = 0;
      std::vector<int> cw(basis.system().rank(), 0);
      if (!r.is_zero()) {
        AlgebraElement x = zero_element(basis);
        for (const auto& l : r.labels)
          x.add_root(basis.system().index_of(parse_root_label(basis.system(), l).coeffs),
                     Rat(1));
        cdim = orbit_dimension(basis, g, t->piece, x);
        cw = weighted_dynkin(basis, x);
      }
      std::string status = "ok";
      bool dim_ok = cdim == r.dim, wdd_ok = cw == r.wdd;
      if (!dim_ok || !wdd_ok) {
        bool annotated =
            r.erratum &&
            ((r.erratum->first == "dim" && !dim_ok && wdd_ok &&
              r.erratum->second == std::to_string(cdim)) ||
             (r.erratum->first == "wdd" && !wdd_ok && dim_ok &&
              r.erratum->second == wdd_string(cw)));
        status = annotated ? "erratum" : "MISMATCH";
        if (!annotated) mismatch = true;
      }
      text << "  " << std::left << std::setw((int)w) << join_labels(r.labels) << "  stored "
           << std::right << std::setw(3) << r.dim << " " << wdd_string(r.wdd)
           << "  computed " << std::setw(3) << cdim << " " << wdd_string(cw) << "  "
           << status << "\n";
      jrecords.push_back(json{{"basepoint", r.labels},
                              {"dim", r.dim},
                              {"wdd", wdd_string(r.wdd)},
                              {"computed_dim", cdim},
                              {"computed_wdd", wdd_string(cw)},
                              {"status", status}});
    }
    jtables.push_back(json{
        {"piece", t->piece}, {"dim", t->dim}, {"records", jrecords}});
  }
  if (ctx.json_mode())
    ctx.emit(json{{"schema", 1},
                  {"command", "orbits"},
                  {"type", kind.name()},
                  {"node", node},
                  {"tables", jtables},
                  {"ok", !mismatch}});
  else
    ctx.out << text.str();
  if (mismatch) ctx.rc = 1;
}

void cmd_classical(Ctx& ctx, const std::string& which, int a, int b, bool skew) {
  std::vector<ClassicalOrbit> orbits;
  json params;
  std::string head;
  if (which == "tensor") {
    orbits = enumerate_tensor_gl(a, b);
    params = {{"n1", a}, {"n2", b}};
    head = "tensor " + std::to_string(a) + " x " + std::to_string(b);
  } else if (which == "bilinear") {
    BilinearSpace space = skew ? split_skew_space(b) : split_symmetric_space(b);
    orbits = enumerate_bilinear_tensor(a, space);
    params = {{"k", a}, {"dim", b}, {"symmetry", skew ? "skew" : "symmetric"}};
    head = "bilinear k=" + std::to_string(a) + " into split " +
           (skew ? std::string("skew") : std::string("symmetric")) + " dim " +
           std::to_string(b);
  } else if (which == "sym2") {
    orbits = enumerate_symmetric_square(a);
    params = {{"n", a}};
    head = "symmetric square, n=" + std::to_string(a);
  } else {
    orbits = enumerate_exterior_square(a);
    params = {{"n", a}};
    head = "exterior square, n=" + std::to_string(a);
  }
  if (ctx.json_mode()) {
    json jo = json::array();
    for (const auto& o : orbits)
      jo.push_back(json{{"rank", o.rank_a},
                        {"witt", o.witt_rank},
                        {"split", o.split_tag},
                        {"representative", mat_json(o.representative)}});
    ctx.emit(json{{"schema", 1},
                  {"command", "classical"},
                  {"case", which},
                  {"params", params},
                  {"count", (long)orbits.size()},
                  {"orbits", jo}});
  } else {
    ctx.out << head << ": " << orbits.size() << " orbits\n";
    for (const auto& o : orbits) {
      ctx.out << "  rank " << o.rank_a;
      if (which == "bilinear") ctx.out << "  witt " << o.witt_rank;
      if (o.split_tag) ctx.out << "  (split twin)";
      if (o.representative.rows() > 0) ctx.out << "  rep " << mat_text(o.representative);
      ctx.out << "\n";
    }
  }
}

void cmd_dynkin(Ctx& ctx, const std::string& type_tok, const std::string& element) {
  CartanType kind = parse_cartan_type(type_tok);
  ChevalleyBasis basis(build_root_system(kind));
  const RootSystem& sys = basis.system();
  AlgebraElement x = zero_element(basis);
  auto labels = split_plus(element);
  if (labels.empty()) throw std::runtime_error("empty element");
  for (const auto& l : labels) {
    int idx = sys.index_of(parse_root_label(sys, l).coeffs);
    if (idx < 0) throw std::runtime_error(l + " is not a positive root of " + kind.name());
    x.add_root(idx, Rat(1));
  }
  auto w = weighted_dynkin(basis, x);
  long dim = nilpotent_orbit_dim(sys, w);
  if (ctx.json_mode())
    ctx.emit(json{{"schema", 1},
                  {"command", "dynkin"},
                  {"type", kind.name()},
                  {"element", labels},
                  {"wdd", wdd_string(w)},
                  {"orbit_dim", dim}});
  else
    ctx.out << wdd_string(w) << " (orbit dim " << dim << ")\n";
}

void cmd_lemma_chain(Ctx& ctx, int n) {
  ChainReport r = verify_chain_lemma(n);
  if (ctx.json_mode()) {
    ctx.emit(json{{"schema", 1},
                  {"command", "lemma-chain"},
                  {"n", r.n},
                  {"ambient", r.ambient.name()},
                  {"rep_dim", r.rep_dim},
                  {"coefficient_count", r.coefficient_count},
                  {"radical_abelian", r.radical_abelian},
                  {"square_vanishes", r.square_vanishes},
                  {"generator_rank", r.generator_rank},
                  {"eliminated", (long)r.eliminated.size()},
                  {"residual", r.residual},
                  {"rank_certificate", r.rank_certificate},
                  {"randomized_fallback", r.randomized_fallback},
                  {"passed", r.passed}});
  } else {
    ctx.out << chain_report_text(r);
  }
  if (!r.passed) ctx.rc = 1;
}

void cmd_verify(Ctx& ctx, const std::string& group_tok, int node) {
  OrbitCatalog cat = load_orbit_catalog(ctx.dataset);
  if (!group_tok.empty() || node > 0) {
    std::optional<CartanType> kind;
    if (!group_tok.empty()) kind = parse_cartan_type(group_tok);
    OrbitCatalog sub;
    for (const auto& t : cat.tables) {
      if (kind && !(t.kind == *kind)) continue;
      if (node > 0 && t.node != node) continue;
      sub.tables.push_back(t);
    }
    if (sub.tables.empty()) throw std::runtime_error("no stored tables match the filter");
    cat = std::move(sub);
  }
  VerifyReport rep = verify_all(cat);
  if (ctx.json_mode()) {
    ctx.emit(json{{"schema", 1},
                  {"command", "verify"},
                  {"modules", rep.modules},
                  {"records", rep.records},
                  {"failures", rep.failures},
                  {"errata", rep.errata},
                  {"notes", rep.notes},
                  {"ok", rep.ok()}});
  } else {
    ctx.out << "verified " << rep.modules << " stored module tables, " << rep.records
            << " orbit records\n";
    for (const auto& n : rep.notes) ctx.out << "  note: " << n << "\n";
    for (const auto& e : rep.errata) ctx.out << "  erratum: " << e << "\n";
    for (const auto& f : rep.failures) ctx.out << "  FAIL: " << f << "\n";
    ctx.out << (rep.ok() ? "PASS" : "FAIL") << "\n";
  }
  if (!rep.ok()) ctx.rc = 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Ctx ctx{.out = out, .err = err};
  CLI::App app{"exact Chevalley-basis engine for internal modules of maximal parabolics"};
  app.require_subcommand(1);
  app.add_option("--format", ctx.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--dataset", ctx.dataset, "directory of orbit-table files overriding the embedded ones");

  auto* roots = app.add_subcommand("roots", "positive roots of a simple type");
  std::string roots_type;
  roots->add_option("type", roots_type, "family letter + rank, e.g. E7")->required();
  roots->fallthrough();
  roots->callback([&] { cmd_roots(ctx, roots_type); });

  auto* grade = app.add_subcommand("grade", "grading of the nilradical at one node");
  std::string grade_type;
  int grade_node = 0;
  grade->add_option("type", grade_type)->required();
  grade->add_option("--node", grade_node, "marked simple root (1-based)")->required();
  grade->fallthrough();
  grade->callback([&] { cmd_grade(ctx, grade_type, grade_node); });

  auto* orbits = app.add_subcommand("orbits", "stored orbit tables with recomputed columns");
  std::string orbits_type;
  int orbits_node = 0, orbits_piece = 0;
  orbits->add_option("type", orbits_type)->required();
  orbits->add_option("--node", orbits_node)->required();
  orbits->add_option("--piece", orbits_piece, "restrict to one graded piece");
  orbits->fallthrough();
  orbits->callback([&] { cmd_orbits(ctx, orbits_type, orbits_node, orbits_piece); });

  auto* classical = app.add_subcommand("classical", "matrix orbit enumerators");
  classical->require_subcommand(1);
  classical->fallthrough();
  int ta = 0, tb = 0;
  auto* tensor = classical->add_subcommand("tensor", "GL(n1) x GL(n2) on matrices");
  tensor->add_option("n1", ta)->required();
  tensor->add_option("n2", tb)->required();
  tensor->fallthrough();
  tensor->callback([&] { cmd_classical(ctx, "tensor", ta, tb, false); });
  int bk = 0, bd = 0;
  bool bskew = false;
  auto* bilinear = classical->add_subcommand("bilinear", "GL(k) x isometry group of a split form");
  bilinear->add_option("k", bk)->required();
  bilinear->add_option("dim", bd)->required();
  bilinear->add_flag("--skew", bskew, "use the split skew form");
  bilinear->fallthrough();
  bilinear->callback([&] { cmd_classical(ctx, "bilinear", bk, bd, bskew); });
  int sn = 0;
  auto* sym2 = classical->add_subcommand("sym2", "GL(n) on symmetric matrices");
  sym2->add_option("n", sn)->required();
  sym2->fallthrough();
  sym2->callback([&] { cmd_classical(ctx, "sym2", sn, 0, false); });
  int en = 0;
  auto* ext2 = classical->add_subcommand("ext2", "GL(n) on antisymmetric matrices");
  ext2->add_option("n", en)->required();
  ext2->fallthrough();
  ext2->callback([&] { cmd_classical(ctx, "ext2", en, 0, false); });

  auto* dynkin = app.add_subcommand("dynkin", "weighted Dynkin diagram of a root-vector sum");
  std::string dynkin_type, dynkin_element;
  dynkin->add_option("type", dynkin_type)->required();
  dynkin->add_option("--element", dynkin_element, "root labels joined by +")->required();
  dynkin->fallthrough();
  dynkin->callback([&] { cmd_dynkin(ctx, dynkin_type, dynkin_element); });

  auto* lemma = app.add_subcommand("lemma-chain", "embedded-chain obstruction report");
  int lemma_n = 0;
  lemma->add_option("--n", lemma_n, "stage (5, 6 or 7)")
      ->required()
      ->check(CLI::IsMember({5, 6, 7}));
  lemma->fallthrough();
  lemma->callback([&] { cmd_lemma_chain(ctx, lemma_n); });

  auto* verify = app.add_subcommand("verify", "recompute every stored table and cross-check");
  std::string verify_group;
  int verify_node = 0;
  verify->add_option("--group", verify_group, "restrict to one simple type");
  verify->add_option("--node", verify_node, "restrict to one node");
  verify->fallthrough();
  verify->callback([&] { cmd_verify(ctx, verify_group, verify_node); });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return ctx.rc;
}

}  // namespace chevalley
