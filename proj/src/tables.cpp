#include "chevalley/tables.hpp"

#include <algorithm>
#include <climits>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "chevalley/classical_orbits.hpp"

namespace chevalley {

namespace {

std::string join(const std::vector<std::string>& labels) {
  if (labels.empty()) return "0";
  std::string s = labels[0];
  for (size_t i = 1; i < labels.size(); ++i) s += "+" + labels[i];
  return s;
}

std::string wdd_string(const std::vector<int>& w) {
  std::string s;
  for (int x : w) s += char('0' + x);
  return s;
}

std::string type_list(const std::vector<CartanType>& v) {
  if (v.empty()) return "(torus)";
  std::string s = v[0].name();
  for (size_t i = 1; i < v.size(); ++i) s += " x " + v[i].name();
  return s;
}

}  // namespace

const ModuleTable* OrbitCatalog::find(CartanType kind, int node, int piece) const {
  for (const auto& t : tables)
    if (t.kind == kind && t.node == node && t.piece == piece) return &t;
  return nullptr;
}

std::vector<const ModuleTable*> OrbitCatalog::for_node(CartanType kind, int node) const {
  std::vector<const ModuleTable*> out;
  for (const auto& t : tables)
    if (t.kind == kind && t.node == node) out.push_back(&t);
  return out;
}

long OrbitCatalog::record_count() const {
  long n = 0;
  for (const auto& t : tables) n += (long)t.records.size();
  return n;
}

std::vector<ModuleTable> parse_catalog(std::istream& in, const std::string& origin) {
  std::vector<ModuleTable> out;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "module") {
      ModuleTable t;
      std::string type_tok, kw_node, kw_piece, kw_dim;
      if (!(ls >> type_tok >> kw_node >> t.node >> kw_piece >> t.piece >> kw_dim >>
            t.dim) ||
          kw_node != "node" || kw_piece != "piece" || kw_dim != "dim")
        fail("malformed module header");
      if (std::string extra; ls >> extra) fail("trailing token '" + extra + "'");
      try {
        t.kind = parse_cartan_type(type_tok);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
      if (t.node < 1 || t.node > t.kind.rank) fail("node out of range");
      if (t.piece < 1 || t.dim < 1) fail("piece and dim must be positive");
      t.origin = origin + ":" + std::to_string(lineno);
      out.push_back(std::move(t));
    } else if (word == "orbit") {
      if (out.empty()) fail("orbit record before any module header");
      const int rank = out.back().kind.rank;
      OrbitRecord r;
      std::string base, kw_dim, kw_wdd, wdd;
      if (!(ls >> base >> kw_dim >> r.dim >> kw_wdd >> wdd) || kw_dim != "dim" ||
          kw_wdd != "wdd")
        fail("malformed orbit record");
      if (base != "0") {
        std::string lab;
        std::istringstream bs(base);
        while (std::getline(bs, lab, '+')) {
          if (lab.empty() || (int)lab.size() != rank ||
              lab.find_first_not_of("0123456789") != std::string::npos)
            fail("bad root label '" + lab + "'");
          r.labels.push_back(lab);
        }
      }
      if ((int)wdd.size() != rank || wdd.find_first_not_of("0123456789") != std::string::npos)
        fail("bad weighted diagram '" + wdd + "'");
      for (char c : wdd) r.wdd.push_back(c - '0');
      if (std::string tail; ls >> tail) {
        if (tail != "erratum") fail("trailing token '" + tail + "'");
        std::string ev;
        if (!(ls >> ev)) fail("erratum needs <field>=<value>");
        auto eq = ev.find('=');
        if (eq == std::string::npos) fail("erratum needs <field>=<value>");
        std::string field = ev.substr(0, eq), value = ev.substr(eq + 1);
        if ((field != "dim" && field != "wdd") || value.empty())
          fail("erratum field must be dim or wdd");
        r.erratum = {field, value};
        if (ls >> tail) fail("trailing token '" + tail + "'");
      }
      out.back().records.push_back(std::move(r));
    } else {
      fail("unknown directive '" + word + "'");
    }
  }
  return out;
}

namespace {

// E6 diagram symmetry 1<->6, 3<->5: position permutation for labels and
// weighted diagrams (0-based: new[j] = old[perm[j]]).
constexpr int kE6Perm[6] = {5, 1, 4, 3, 2, 0};

ModuleTable e6_mirror(const ModuleTable& t, int new_node) {
  ModuleTable s = t;
  s.node = new_node;
  s.origin = t.origin + " (diagram symmetry)";
  auto permute_label = [](const std::string& l) {
    std::string out(6, '0');
    for (int j = 0; j < 6; ++j) out[j] = l[kE6Perm[j]];
    return out;
  };
  for (auto& r : s.records) {
    for (auto& l : r.labels) l = permute_label(l);
    std::vector<int> w(6);
    for (int j = 0; j < 6; ++j) w[j] = r.wdd[kE6Perm[j]];
    r.wdd = std::move(w);
    if (r.erratum && r.erratum->first == "wdd" && r.erratum->second.size() == 6)
      r.erratum->second = permute_label(r.erratum->second);
  }
  return s;
}

}  // namespace

OrbitCatalog load_orbit_catalog(const std::string& dataset_dir) {
  OrbitCatalog cat;
  if (dataset_dir.empty()) {
    for (const auto& [name, text] : embedded_catalog()) {
      std::istringstream in(text);
      auto part = parse_catalog(in, name);
      cat.tables.insert(cat.tables.end(), part.begin(), part.end());
    }
  } else {
    std::vector<std::filesystem::path> files;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dataset_dir, ec))
      if (entry.is_regular_file() && entry.path().extension() == ".txt")
        files.push_back(entry.path());
    if (ec) throw std::runtime_error("cannot read dataset directory " + dataset_dir);
    std::sort(files.begin(), files.end());
    if (files.empty())
      throw std::runtime_error("no .txt dataset files in " + dataset_dir);
    for (const auto& path : files) {
      std::ifstream in(path);
      if (!in) throw std::runtime_error("cannot open " + path.string());
      auto part = parse_catalog(in, path.filename().string());
      cat.tables.insert(cat.tables.end(), part.begin(), part.end());
    }
  }
  const CartanType e6 = {Family::E, 6};
  if (!cat.find(e6, 5, 1)) {
    std::vector<ModuleTable> mirrored;
    for (const auto& t : cat.tables) {
      if (!(t.kind == e6)) continue;
      if (t.node == 3) mirrored.push_back(e6_mirror(t, 5));
      if (t.node == 1) mirrored.push_back(e6_mirror(t, 6));
    }
    cat.tables.insert(cat.tables.end(), mirrored.begin(), mirrored.end());
  }
  std::stable_sort(cat.tables.begin(), cat.tables.end(),
                   [](const ModuleTable& a, const ModuleTable& b) {
                     if (!(a.kind == b.kind)) return a.kind < b.kind;
                     if (a.node != b.node) return a.node < b.node;
                     return a.piece < b.piece;
                   });
  return cat;
}

void VerifyReport::merge(const VerifyReport& o) {
  modules += o.modules;
  records += o.records;
  failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  errata.insert(errata.end(), o.errata.begin(), o.errata.end());
  notes.insert(notes.end(), o.notes.begin(), o.notes.end());
}

VerifyReport verify_module(const ChevalleyBasis& basis, const ParabolicGrading& g,
                           const ModuleTable& t, bool parallel) {
  VerifyReport rep;
  rep.modules = 1;
  const RootSystem& sys = basis.system();
  const int rank = sys.rank();
  const std::string mod =
      t.kind.name() + " node " + std::to_string(t.node) + " piece " + std::to_string(t.piece);
  auto fail = [&](const std::string& s) { rep.failures.push_back(mod + ": " + s); };

  if (!(t.kind == sys.kind)) {
    fail("table type does not match the acting algebra");
    return rep;
  }
  if (t.piece < 1 || t.piece > g.num_pieces()) {
    fail("piece out of range (module has " + std::to_string(g.num_pieces()) + " pieces)");
    return rep;
  }
  if ((int)g.pieces[t.piece - 1].size() != t.dim)
    fail("header dim " + std::to_string(t.dim) + " but the piece has dim " +
         std::to_string(g.pieces[t.piece - 1].size()));
  rep.records = (long)t.records.size();

  struct Out {
    std::vector<std::string> failures, errata;
  };
  const int nrec = (int)t.records.size();
  std::vector<Out> outs(nrec);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int i = 0; i < nrec; ++i) {
    const OrbitRecord& r = t.records[i];
    Out& o = outs[i];
    const std::string where = mod + " orbit " + join(r.labels);
    try {
      if ((int)r.wdd.size() != rank) {
        o.failures.push_back(where + ": weighted diagram has wrong length");
        continue;
      }
      if (r.is_zero()) {
        bool zero_wdd = std::all_of(r.wdd.begin(), r.wdd.end(), [](int x) { return x == 0; });
        if (r.dim != 0 || !zero_wdd)
          o.failures.push_back(where + ": zero orbit must have dim 0 and zero diagram");
        continue;
      }
      AlgebraElement x = zero_element(basis);
      bool ok = true;
      for (const auto& l : r.labels) {
        int idx = -1;
        try {
          idx = sys.index_of(parse_root_label(sys, l).coeffs);
        } catch (const std::exception&) {
        }
        if (idx < 0 || g.grade[idx] != t.piece) {
          o.failures.push_back(where + ": label " + l + " is not a root of piece " +
                               std::to_string(t.piece));
          ok = false;
          break;
        }
        if (x.root_part.count(idx)) {
          o.failures.push_back(where + ": repeated label " + l);
          ok = false;
          break;
        }
        x.add_root(idx, Rat(1));
      }
      if (!ok) continue;

      const int cdim = orbit_dimension(basis, g, t.piece, x);
      const auto cw = weighted_dynkin(basis, x);
      {
        bool has = r.erratum && r.erratum->first == "dim";
        const std::string cds = std::to_string(cdim);
        if (cdim != r.dim) {
          if (has && r.erratum->second == cds)
            o.errata.push_back(where + ": source prints dim " + std::to_string(r.dim) +
                               ", recomputed " + cds);
          else
            o.failures.push_back(where + ": stored dim " + std::to_string(r.dim) +
                                 " != recomputed " + cds);
        } else if (has) {
          o.failures.push_back(where + ": dim erratum annotation, but the stored value recomputes");
        }
      }
      {
        bool has = r.erratum && r.erratum->first == "wdd";
        const std::string cws = wdd_string(cw);
        if (cw != r.wdd) {
          if (has && r.erratum->second == cws)
            o.errata.push_back(where + ": source prints wdd " + wdd_string(r.wdd) +
                               ", recomputed " + cws);
          else
            o.failures.push_back(where + ": stored wdd " + wdd_string(r.wdd) +
                                 " != recomputed " + cws);
        } else if (has) {
          o.failures.push_back(where + ": wdd erratum annotation, but the stored value recomputes");
        }
      }
      if (cdim > t.dim)
        o.failures.push_back(where + ": orbit dim exceeds the module dim");
      if (nilpotent_orbit_dim(sys, cw) < cdim)
        o.failures.push_back(where + ": Levi orbit larger than its adjoint orbit");
    } catch (const std::exception& e) {
      o.failures.push_back(where + ": " + e.what());
    }
  }
  for (auto& o : outs) {
    rep.failures.insert(rep.failures.end(), o.failures.begin(), o.failures.end());
    rep.errata.insert(rep.errata.end(), o.errata.begin(), o.errata.end());
  }

  int zero_count = 0, dense_count = 0, prev = INT_MAX;
  bool sorted = true;
  std::set<std::vector<std::string>> seen;
  for (const auto& r : t.records) {
    zero_count += r.is_zero();
    dense_count += (!r.is_zero() && r.dim == t.dim);
    if (r.dim > t.dim) fail("stored dim " + std::to_string(r.dim) + " exceeds the module dim");
    auto key = r.labels;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) fail("duplicate basepoint " + join(r.labels));
    if (r.dim > prev) sorted = false;
    prev = r.dim;
  }
  if (zero_count != 1)
    fail("zero orbit appears " + std::to_string(zero_count) + " times");
  if (dense_count != 1)
    fail("dense orbit of dim " + std::to_string(t.dim) + " appears " +
         std::to_string(dense_count) + " times");
  if (!sorted) fail("records are not sorted by non-increasing dim");
  return rep;
}

VerifyReport verify_catalog(const OrbitCatalog& catalog, std::optional<CartanType> only_kind,
                            std::optional<int> only_node, bool parallel) {
  VerifyReport rep;
  std::vector<std::pair<CartanType, int>> nodes;
  for (const auto& t : catalog.tables) {
    if (only_kind && !(t.kind == *only_kind)) continue;
    if (only_node && t.node != *only_node) continue;
    std::pair<CartanType, int> key{t.kind, t.node};
    if (std::find(nodes.begin(), nodes.end(), key) == nodes.end()) nodes.push_back(key);
  }
  for (const auto& [kind, node] : nodes) {
    ChevalleyBasis basis(build_root_system(kind));
    auto g = grade_nilradical(basis.system(), {node});
    const std::string where = kind.name() + " node " + std::to_string(node);
    const NodeSummary* s = find_node_summary(kind, node);
    if (!s) {
      rep.failures.push_back(where + ": no summary row");
    } else {
      auto lt = levi_type(g);
      if (lt != s->levi)
        rep.failures.push_back(where + ": Levi type " + type_list(lt) + " != expected " +
                               type_list(s->levi));
      if (g.num_pieces() != (int)s->pieces.size())
        rep.failures.push_back(where + ": " + std::to_string(g.num_pieces()) +
                               " pieces, expected " + std::to_string(s->pieces.size()));
      for (const auto& ps : s->pieces) {
        if (ps.piece > g.num_pieces()) break;
        auto d = module_descriptor(g, ps.piece);
        const std::string pw = where + " piece " + std::to_string(ps.piece);
        if (d.dim != ps.dim)
          rep.failures.push_back(pw + ": dim " + std::to_string(d.dim) + " != expected " +
                                 std::to_string(ps.dim));
        if (d.weyl_dim != mpz_class(d.dim))
          rep.failures.push_back(pw + ": Weyl dimension " + d.weyl_dim.get_str() +
                                 " != root count " + std::to_string(d.dim));
        if (d.action != ps.action)
          rep.failures.push_back(pw + ": action " + d.action + " != expected " + ps.action);
        if (ps.crossref) {
          auto found = first_piece_realization(kind, node, ps.piece);
          const std::string want =
              ps.crossref->kind.name() + " node " + std::to_string(ps.crossref->node);
          if (!found)
            rep.failures.push_back(pw + ": no first-piece realization, expected " + want);
          else if (!realization_equivalent(*found, *ps.crossref))
            rep.failures.push_back(pw + ": realization " + found->kind.name() + " node " +
                                   std::to_string(found->node) + " != stated " + want);
        }
      }
      if (!lower_central_series_check(basis, g))
        rep.failures.push_back(where + ": lower central series does not match the grading");
    }
    for (const auto& t : catalog.tables)
      if (t.kind == kind && t.node == node) rep.merge(verify_module(basis, g, t, parallel));
  }
  return rep;
}

namespace {

// Orbit count of the matrix enumerator matching a classical first-piece
// realization, or nullopt when the realization is not classical.
std::optional<long> classical_orbit_count(const Realization& r) {
  const int n = r.kind.rank, k = r.node;
  switch (r.kind.family) {
    case Family::A:
      return (long)enumerate_tensor_gl(k, n + 1 - k).size();
    case Family::B:
      return (long)enumerate_bilinear_tensor(k, split_symmetric_space(2 * (n - k) + 1)).size();
    case Family::C:
      if (k == n) return (long)enumerate_symmetric_square(n).size();
      return (long)enumerate_bilinear_tensor(k, split_skew_space(2 * (n - k))).size();
    case Family::D:
      if (k >= n - 1) return (long)enumerate_exterior_square(n).size();
      return (long)enumerate_bilinear_tensor(k, split_symmetric_space(2 * (n - k))).size();
    default:
      return std::nullopt;
  }
}

}  // namespace

VerifyReport verify_classical_counts(const OrbitCatalog& catalog) {
  VerifyReport rep;
  for (const auto& t : catalog.tables) {
    const NodeSummary* s = find_node_summary(t.kind, t.node);
    if (!s || t.piece > (int)s->pieces.size()) continue;
    const auto& ps = s->pieces[t.piece - 1];
    if (!ps.crossref) continue;
    auto count = classical_orbit_count(*ps.crossref);
    if (!count) continue;
    const std::string where = t.kind.name() + " node " + std::to_string(t.node) + " piece " +
                              std::to_string(t.piece);
    const std::string what = ps.crossref->kind.name() + " node " +
                             std::to_string(ps.crossref->node) + " enumerator";
    if (*count != (long)t.records.size())
      rep.failures.push_back(where + ": " + std::to_string(t.records.size()) +
                             " records but the " + what + " has " + std::to_string(*count) +
                             " orbits");
    else
      rep.notes.push_back(where + ": " + std::to_string(*count) + " orbits match the " + what);
  }
  return rep;
}

VerifyReport verify_all(const OrbitCatalog& catalog, bool parallel) {
  VerifyReport rep = verify_catalog(catalog, std::nullopt, std::nullopt, parallel);
  rep.merge(verify_classical_counts(catalog));
  return rep;
}

namespace {

// Rank normal forms in the k x (n+1-k) grid of an A-type abelian radical:
// nested root intervals around node k, one list per rank, densest first.
std::vector<std::vector<std::string>> a_type_basepoints(CartanType kind, int k) {
  const int n = kind.rank;
  const int rmax = std::min(k, n + 1 - k);
  std::vector<std::vector<std::string>> out;
  for (int r = rmax; r >= 1; --r) {
    std::vector<std::string> labels;
    for (int s = 0; s < r; ++s) {
      std::string lab(n, '0');
      for (int j = k - s; j <= k + s; ++j) lab[j - 1] = '1';
      labels.push_back(lab);
    }
    out.push_back(std::move(labels));
  }
  return out;
}

}  // namespace

SupportReport minimal_support_check(CartanType kind, const OrbitCatalog& catalog) {
  if (kind.family != Family::E || (kind.rank != 6 && kind.rank != 7))
    throw std::invalid_argument("minimal_support_check requires E6 or E7");
  SupportReport rep;
  rep.kind = kind;
  CartanType cur = kind;
  std::vector<int> ambient(kind.rank);  // original label of each current node
  std::iota(ambient.begin(), ambient.end(), 1);
  while (true) {
    const int pos =
        (int)(std::max_element(ambient.begin(), ambient.end()) - ambient.begin());
    const int own = pos + 1;
    RootSystem sys = build_root_system(cur);
    ChevalleyBasis basis(sys);
    auto g = grade_nilradical(sys, {own});

    SupportStage st;
    st.kind = cur;
    st.node = own;
    st.abelian = g.num_pieces() == 1;
    st.piece_dim = (int)g.pieces[0].size();
    if (!st.abelian)
      st.failures.push_back("parabolic is not abelian (m = " +
                            std::to_string(g.num_pieces()) + ")");

    std::vector<std::vector<std::string>> points;
    if (const ModuleTable* t = catalog.find(cur, own, 1)) {
      st.from_catalog = true;
      for (const auto& r : t->records)
        if (!r.is_zero()) points.push_back(r.labels);
    } else if (cur.family == Family::A) {
      points = a_type_basepoints(cur, own);
    } else {
      st.failures.push_back("no stored table and no normal forms for this stage");
    }

    st.minimal_dim = nilpotent_orbit_dim(sys, minimal_orbit_wdd(sys));
    for (const auto& labels : points) {
      AlgebraElement x = zero_element(basis);
      for (const auto& l : labels)
        x.add_root(sys.index_of(parse_root_label(sys, l).coeffs), Rat(1));
      ++st.nonzero_orbits;
      auto w = weighted_dynkin(basis, x);
      if (is_minimal_orbit(sys, w)) {
        ++st.minimal_orbits;
      } else {
        long nd = nilpotent_orbit_dim(sys, w);
        if (nd <= st.minimal_dim)
          st.failures.push_back("orbit " + join(labels) + " has adjoint dim " +
                                std::to_string(nd) + " <= minimal " +
                                std::to_string(st.minimal_dim));
        if (st.next_dim < 0 || nd < st.next_dim) st.next_dim = nd;
      }
    }
    if (st.minimal_orbits != 1)
      st.failures.push_back("expected exactly one minimal-orbit basepoint, found " +
                            std::to_string(st.minimal_orbits));
    rep.stages.push_back(std::move(st));

    if (cur.rank == 1) break;
    const int next_orig = *std::max_element(ambient.begin(), ambient.end(),
                                            [&](int a, int b) {
                                              return (a == ambient[pos] ? -1 : a) <
                                                     (b == ambient[pos] ? -1 : b);
                                            });
    bool found = false;
    for (const auto& comp : g.levi) {
      std::vector<int> composed;
      for (int cnode : comp.ambient_nodes) composed.push_back(ambient[cnode - 1]);
      if (std::find(composed.begin(), composed.end(), next_orig) != composed.end()) {
        cur = comp.type;
        ambient = composed;
        found = true;
        break;
      }
    }
    if (!found) break;  // nothing left to descend into
  }
  for (int n = kind.rank; n >= 5; --n) rep.chains.push_back(verify_chain_lemma(n));
  rep.passed = std::all_of(rep.stages.begin(), rep.stages.end(),
                           [](const SupportStage& s) { return s.passed(); }) &&
               std::all_of(rep.chains.begin(), rep.chains.end(),
                           [](const ChainReport& c) { return c.passed; });
  return rep;
}

std::string support_report_text(const SupportReport& r) {
  std::ostringstream os;
  os << "minimal-orbit support chain for " << r.kind.name() << "\n";
  for (const auto& st : r.stages) {
    os << "  " << st.kind.name() << " node " << st.node << ": dim u1 = " << st.piece_dim
       << ", " << st.nonzero_orbits << " nonzero orbits, " << st.minimal_orbits
       << " minimal (adjoint dim " << st.minimal_dim << ")";
    if (st.next_dim >= 0) os << ", next smallest " << st.next_dim;
    os << (st.from_catalog ? " [stored]" : " [normal forms]");
    os << (st.passed() ? " ok" : " FAIL") << "\n";
    for (const auto& f : st.failures) os << "    " << f << "\n";
  }
  for (const auto& c : r.chains)
    os << "  embedded chain n=" << c.n << ": " << (c.passed ? "passed" : "FAILED") << "\n";
  os << (r.passed ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace chevalley
