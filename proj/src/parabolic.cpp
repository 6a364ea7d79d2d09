#include "chevalley/parabolic.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

namespace chevalley {

bool ParabolicGrading::is_marked(int node) const {
  return std::find(marked.begin(), marked.end(), node) != marked.end();
}

namespace {

// Classifies the connected subdiagram on `nodes` (ambient 0-based) and fixes
// its own Bourbaki numbering. Chains are A (or B/C/F with a double edge),
// branched diagrams are D or E; rank-2 double edges canonicalize to C2.
LeviComponent classify_component(const RootSystem& sys, std::vector<int> nodes) {
  int n = (int)nodes.size();
  auto cart = [&](int i, int j) { return sys.cartan[nodes[i]][nodes[j]]; };
  auto dlen = [&](int i) { return sys.symmetrizer[nodes[i]]; };
  LeviComponent comp;
  auto finish = [&](Family fam, const std::vector<int>& order) {
    comp.type = CartanType{fam, n};
    for (int i : order) comp.ambient_nodes.push_back(nodes[i] + 1);
    return comp;
  };

  if (n == 1) return finish(Family::A, {0});

  std::vector<std::vector<int>> adj(n);
  int max_mult = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (cart(i, j) != 0) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        max_mult = std::max(max_mult, cart(i, j) * cart(j, i));
      }

  if (max_mult == 3) {  // G2: short root first
    assert(n == 2);
    return dlen(0) < dlen(1) ? finish(Family::G, {0, 1}) : finish(Family::G, {1, 0});
  }

  int branch = -1;
  for (int i = 0; i < n; ++i)
    if (adj[i].size() == 3) branch = i;

  if (branch < 0) {
    // A chain. Walk it from one endpoint.
    std::vector<int> ends;
    for (int i = 0; i < n; ++i)
      if (adj[i].size() == 1) ends.push_back(i);
    assert(ends.size() == 2);
    auto walk = [&](int start) {
      std::vector<int> order = {start};
      int prev = -1, cur = start;
      while ((int)order.size() < n) {
        for (int nx : adj[cur])
          if (nx != prev) {
            order.push_back(nx);
            prev = cur;
            cur = nx;
            break;
          }
      }
      return order;
    };
    if (max_mult == 1) {
      int start = nodes[ends[0]] < nodes[ends[1]] ? ends[0] : ends[1];
      return finish(Family::A, walk(start));
    }
    if (n == 2)  // C2 convention: alpha_1 short, alpha_2 long
      return dlen(0) < dlen(1) ? finish(Family::C, {0, 1}) : finish(Family::C, {1, 0});
    // F4 has the double edge in the middle, B/C have it at an end.
    std::vector<int> o = walk(ends[0]);
    int dpos = -1;
    for (int i = 0; i + 1 < n; ++i)
      if (cart(o[i], o[i + 1]) * cart(o[i + 1], o[i]) == 2) dpos = i;
    if (dpos > 0 && dpos < n - 2) {
      assert(n == 4 && dpos == 1);
      if (dlen(o[0]) < dlen(o[3])) std::reverse(o.begin(), o.end());
      return finish(Family::F, o);
    }
    if (dpos == 0) std::reverse(o.begin(), o.end());
    return dlen(o[n - 1]) < dlen(o[n - 2]) ? finish(Family::B, o)
                                           : finish(Family::C, o);
  }

  // Branched: D or E. Gather the three arms walking away from the branch.
  std::vector<std::vector<int>> arms;
  for (int first : adj[branch]) {
    std::vector<int> arm = {first};
    int prev = branch, cur = first;
    while (adj[cur].size() == 2) {
      for (int nx : adj[cur])
        if (nx != prev) {
          arm.push_back(nx);
          prev = cur;
          cur = nx;
          break;
        }
    }
    arms.push_back(arm);
  }
  std::sort(arms.begin(), arms.end(), [&](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return nodes[x.back()] < nodes[y.back()];
  });

  if (arms[0].size() == 1 && arms[1].size() == 1) {
    // D_n. For D4 the centre is node 2 and the leaves 1, 3, 4; otherwise the
    // long arm runs 1..n-3 into the branch at n-2 with leaves n-1, n.
    std::vector<int> order;
    if (n == 4) {
      order = {arms[0][0], branch, arms[1][0], arms[2][0]};
      std::sort(order.begin(), order.end(), [&](int x, int y) {
        return nodes[x] < nodes[y];
      });
      // keep the centre at position 2
      order.erase(std::remove(order.begin(), order.end(), branch), order.end());
      order.insert(order.begin() + 1, branch);
    } else {
      order = arms[2];
      std::reverse(order.begin(), order.end());
      order.push_back(branch);
      order.push_back(arms[0][0]);
      order.push_back(arms[1][0]);
    }
    return finish(Family::D, order);
  }
  if (arms[0].size() == 1 && arms[1].size() == 2) {
    // E_n: leaf arm = node 2, two-node arm = 3, 1, long arm = 5..n.
    std::vector<int> order(n);
    order[1] = arms[0][0];
    order[2] = arms[1][0];
    order[0] = arms[1][1];
    order[3] = branch;
    for (size_t i = 0; i < arms[2].size(); ++i) order[4 + i] = arms[2][i];
    return finish(Family::E, order);
  }
  throw std::logic_error("unrecognized subdiagram shape");
}

}  // namespace

ParabolicGrading grade_nilradical(const RootSystem& sys, std::vector<int> marked) {
  int n = sys.rank();
  std::sort(marked.begin(), marked.end());
  if (marked.empty()) throw std::invalid_argument("no marked node");
  for (size_t i = 0; i < marked.size(); ++i) {
    if (marked[i] < 1 || marked[i] > n)
      throw std::invalid_argument("marked node " + std::to_string(marked[i]) +
                                  " out of range for " + sys.kind.name());
    if (i > 0 && marked[i] == marked[i - 1])
      throw std::invalid_argument("marked node repeated");
  }

  ParabolicGrading g;
  g.kind = sys.kind;
  g.marked = marked;
  g.grade.resize(sys.num_positive());
  int m = 0;
  for (int r = 0; r < sys.num_positive(); ++r) {
    int gr = 0;
    for (int node : marked) gr += sys.positive_roots[r].coeffs[node - 1];
    g.grade[r] = gr;
    m = std::max(m, gr);
  }
  g.pieces.assign(m, {});
  for (int r = 0; r < sys.num_positive(); ++r) {
    if (g.grade[r] == 0)
      g.levi_roots.push_back(r);
    else
      g.pieces[g.grade[r] - 1].push_back(r);
  }

  // Levi components over the unmarked nodes.
  std::vector<bool> unmarked(n, true);
  for (int node : marked) unmarked[node - 1] = false;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (!unmarked[i] || seen[i]) continue;
    std::vector<int> nodes, stack = {i};
    seen[i] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      nodes.push_back(v);
      for (int j = 0; j < n; ++j)
        if (unmarked[j] && !seen[j] && sys.cartan[v][j] != 0) {
          seen[j] = true;
          stack.push_back(j);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    g.levi.push_back(classify_component(sys, nodes));
  }
  return g;
}

std::vector<CartanType> levi_type(const ParabolicGrading& g) {
  std::vector<CartanType> out;
  for (const auto& c : g.levi) out.push_back(c.type);
  return out;
}

ModuleDescriptor module_descriptor(const ParabolicGrading& g, int i) {
  if (i < 1 || i > g.num_pieces())
    throw std::invalid_argument("piece index out of range");
  RootSystem sys = build_root_system(g.kind);
  ModuleDescriptor d;
  d.piece = i;
  d.dim = (int)g.pieces[i - 1].size();

  // Highest root of the piece: no unmarked simple root can be added.
  std::set<std::vector<int>> piece_set;
  for (int r : g.pieces[i - 1]) piece_set.insert(sys.positive_roots[r].coeffs);
  int found = 0;
  for (int r : g.pieces[i - 1]) {
    bool top = true;
    for (int j = 0; j < sys.rank() && top; ++j) {
      if (g.is_marked(j + 1)) continue;
      std::vector<int> up = sys.positive_roots[r].coeffs;
      up[j] += 1;
      if (piece_set.count(up)) top = false;
    }
    if (top) {
      d.highest = sys.positive_roots[r];
      ++found;
    }
  }
  if (found != 1) throw std::logic_error("piece has no unique highest root");

  for (int j = 0; j < sys.rank(); ++j) {
    if (g.is_marked(j + 1)) continue;
    int v = sys.pair_simple_coroot(d.highest.coeffs, j);
    if (v != 0) d.weight[j + 1] = v;
  }

  // Weyl dimension over the Levi: product of <lambda + rho, beta^vee> /
  // <rho, beta^vee> with <rho, alpha_j^vee> = 1 at unmarked nodes.
  mpq_class dim(1);
  for (int r : g.levi_roots) {
    const Root& beta = sys.positive_roots[r];
    long num = 0, den = 0;
    for (int j = 0; j < sys.rank(); ++j) {
      if (beta.coeffs[j] == 0) continue;
      long lam = d.weight.count(j + 1) ? d.weight.at(j + 1) : 0;
      num += (long)beta.coeffs[j] * sys.symmetrizer[j] * (lam + 1);
      den += (long)beta.coeffs[j] * sys.symmetrizer[j];
    }
    dim *= mpq_class(num, den);
  }
  dim.canonicalize();
  if (dim.get_den() != 1) throw std::logic_error("non-integral Weyl dimension");
  d.weyl_dim = dim.get_num();

  if (d.weight.empty()) {
    d.action = "trivial";
  } else {
    for (const auto& [node, coeff] : d.weight) {
      if (!d.action.empty()) d.action += "+";
      if (coeff != 1) d.action += std::to_string(coeff);
      d.action += "w" + std::to_string(node);
    }
  }
  return d;
}

std::vector<std::vector<int>> diagram_automorphisms(CartanType t) {
  auto c = cartan_matrix(t);
  int n = t.rank;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (c[p[i]][p[j]] != c[i][j]) ok = false;
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

struct CompWeight {
  CartanType type;
  std::vector<int> weight;
  bool operator<(const CompWeight& o) const {
    if (!(type == o.type)) return type < o.type;
    return weight < o.weight;
  }
  bool operator==(const CompWeight& o) const {
    return type == o.type && weight == o.weight;
  }
};

using Signature = std::vector<CompWeight>;

// Acting factors with weights canonicalized under diagram automorphisms.
Signature signature_of(const ParabolicGrading& g, const ModuleDescriptor& d) {
  Signature s;
  for (const auto& comp : g.levi) {
    std::vector<int> w(comp.type.rank, 0);
    bool nontrivial = false;
    for (int c = 0; c < comp.type.rank; ++c) {
      auto it = d.weight.find(comp.ambient_nodes[c]);
      if (it != d.weight.end()) {
        w[c] = it->second;
        nontrivial = true;
      }
    }
    if (!nontrivial) continue;
    std::vector<int> best = w;
    for (const auto& p : diagram_automorphisms(comp.type)) {
      std::vector<int> img(w.size());
      for (size_t i = 0; i < w.size(); ++i) img[p[i]] = w[i];
      best = std::min(best, img);
    }
    s.push_back({comp.type, best});
  }
  std::sort(s.begin(), s.end());
  return s;
}

struct Candidate {
  CartanType kind;
  int node;
  int dim;
  Signature sig;
};

const std::vector<Candidate>& candidate_table() {
  static const std::vector<Candidate> table = [] {
    std::vector<Candidate> t;
    std::vector<CartanType> kinds;
    for (int r = 1; r <= 8; ++r) kinds.push_back({Family::A, r});
    for (int r = 2; r <= 8; ++r) kinds.push_back({Family::B, r});
    for (int r = 2; r <= 8; ++r) kinds.push_back({Family::C, r});
    for (int r = 4; r <= 8; ++r) kinds.push_back({Family::D, r});
    for (int r = 6; r <= 8; ++r) kinds.push_back({Family::E, r});
    kinds.push_back({Family::F, 4});
    kinds.push_back({Family::G, 2});
    for (CartanType k : kinds) {
      RootSystem sys = build_root_system(k);
      for (int node = 1; node <= k.rank; ++node) {
        ParabolicGrading g = grade_nilradical(sys, {node});
        ModuleDescriptor d = module_descriptor(g, 1);
        t.push_back({k, node, d.dim, signature_of(g, d)});
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

std::optional<Realization> first_piece_realization(CartanType kind, int node, int i) {
  RootSystem sys = build_root_system(kind);
  ParabolicGrading g = grade_nilradical(sys, {node});
  if (i > g.num_pieces()) return std::nullopt;
  ModuleDescriptor d = module_descriptor(g, i);
  Signature sig = signature_of(g, d);
  for (const Candidate& c : candidate_table())
    if (c.dim == d.dim && c.sig == sig) return Realization{c.kind, c.node};
  throw std::logic_error("piece has no rank <= 8 first-piece realization");
}

bool realization_equivalent(const Realization& a, const Realization& b) {
  if (!(a.kind == b.kind)) return false;
  if (a.node == b.node) return true;
  for (const auto& p : diagram_automorphisms(a.kind))
    if (p[a.node - 1] == b.node - 1) return true;
  return false;
}

bool lower_central_series_check(const ChevalleyBasis& basis, const ParabolicGrading& g) {
  int R = basis.num_positive();
  std::vector<int> all;
  for (int r = 0; r < R; ++r)
    if (g.grade[r] >= 1) all.push_back(r);

  std::set<int> current(all.begin(), all.end());
  int steps = 1;
  while (true) {
    // [u, current] as a set of root lines
    std::set<int> next;
    for (int a : all)
      for (int b : current) {
        int s = basis.sum_index(a, b);
        if (s >= 0 && basis.n_constant(a, b) != 0) next.insert(s);
      }
    if (next.empty()) break;
    ++steps;
    std::set<int> expect;
    for (int r = 0; r < R; ++r)
      if (g.grade[r] >= steps) expect.insert(r);
    if (next != expect) return false;
    current = std::move(next);
  }
  return steps == g.num_pieces();
}

std::string levi_factor_name(CartanType t) {
  int n = t.rank;
  switch (t.family) {
    case Family::A: return "SL(" + std::to_string(n + 1) + ")";
    case Family::B:
      return "SO(" + std::to_string(n + 1) + "," + std::to_string(n) + ")";
    case Family::C: return "Sp(" + std::to_string(2 * n) + ")";
    case Family::D:
      return "SO(" + std::to_string(n) + "," + std::to_string(n) + ")";
    case Family::E: return "E" + std::to_string(n);
    case Family::F: return "F4";
    case Family::G: return "G2";
  }
  return t.name();
}

}  // namespace chevalley
