#include "chevalley/representation.hpp"

#include <map>
#include <stdexcept>

namespace chevalley {

SparseMat Representation::cartan_matrix(int i) const {
  SparseMat m(dim, dim);
  for (int w = 0; w < dim; ++w)
    if (weights[w][i] != 0) m.add(w, w, weights[w][i]);
  return m;
}

SparseMat Representation::act(const AlgebraElement& x) const {
  SparseMat m(dim, dim);
  for (size_t i = 0; i < x.cartan.size(); ++i)
    if (x.cartan[i] != 0)
      for (int w = 0; w < dim; ++w)
        if (weights[w][i] != 0) m.add(w, w, x.cartan[i] * weights[w][i]);
  for (const auto& [a, c] : x.root_part) {
    for (int i = 0; i < dim; ++i)
      for (const auto& [j, v] : action[a].row(i)) m.add(i, j, c * v);
  }
  return m;
}

namespace {

bool is_minuscule_choice(CartanType kind, int fundamental) {
  switch (kind.family) {
    case Family::A: return fundamental >= 1 && fundamental <= kind.rank;
    case Family::D:
      return fundamental == 1 || fundamental == kind.rank - 1 ||
             fundamental == kind.rank;
    case Family::E:
      if (kind.rank == 6) return fundamental == 1 || fundamental == 6;
      if (kind.rank == 7) return fundamental == 7;
      return false;
    default: return false;
  }
}

// Weyl orbit of the fundamental weight, as pairing vectors. In a minuscule
// module every weight is in one orbit and every weight space is a line.
std::vector<std::vector<int>> weight_orbit(const RootSystem& sys, int fundamental) {
  int n = sys.rank();
  std::vector<int> lambda(n, 0);
  lambda[fundamental - 1] = 1;
  std::map<std::vector<int>, int> seen;
  std::vector<std::vector<int>> out = {lambda};
  seen[lambda] = 0;
  for (size_t head = 0; head < out.size(); ++head) {
    std::vector<int> mu = out[head];
    for (int i = 0; i < n; ++i) {
      if (mu[i] == 0) continue;
      std::vector<int> nu(n);
      for (int j = 0; j < n; ++j) nu[j] = mu[j] - mu[i] * sys.cartan[j][i];
      if (seen.emplace(nu, (int)out.size()).second) out.push_back(nu);
    }
  }
  return out;
}

// For minuscule weights the simple root vectors act by mu -> mu + alpha_i
// with coefficient one exactly when <mu, alpha_i^vee> = -1 (and f_i dually).
Representation build_minuscule(const ChevalleyBasis& basis, int fundamental) {
  const RootSystem& sys = basis.system();
  int n = sys.rank();
  Representation rep;
  rep.kind = sys.kind;
  rep.fundamental = fundamental;
  rep.weights = weight_orbit(sys, fundamental);
  rep.dim = (int)rep.weights.size();

  std::map<std::vector<int>, int> index;
  for (int w = 0; w < rep.dim; ++w) index[rep.weights[w]] = w;
  auto shift = [&](const std::vector<int>& mu, int i, int sign) {
    std::vector<int> nu(n);
    for (int j = 0; j < n; ++j) nu[j] = mu[j] + sign * sys.cartan[j][i];
    auto it = index.find(nu);
    return it == index.end() ? -1 : it->second;
  };

  rep.action.assign(basis.num_roots(), SparseMat(rep.dim, rep.dim));
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    int pos = sys.index_of(e);
    int neg = basis.negate(pos);
    for (int w = 0; w < rep.dim; ++w) {
      if (rep.weights[w][i] == -1) rep.action[pos].add(shift(rep.weights[w], i, +1), w, 1);
      if (rep.weights[w][i] == +1) rep.action[neg].add(shift(rep.weights[w], i, -1), w, 1);
    }
  }
  return rep;
}

// Split odd orthogonal algebra acting on its vector module, basis
// v_1..v_n, v_0, v_{-n}..v_{-1}.
Representation build_odd_vector(const ChevalleyBasis& basis) {
  const RootSystem& sys = basis.system();
  int n = sys.rank();
  Representation rep;
  rep.kind = sys.kind;
  rep.fundamental = 1;
  rep.dim = 2 * n + 1;

  auto vp = [&](int j) { return j - 1; };      // v_j, 1 <= j <= n
  int v0 = n;                                  // v_0
  auto vm = [&](int j) { return 2 * n + 1 - j; };  // v_{-j}

  rep.weights.assign(rep.dim, std::vector<int>(n, 0));
  std::vector<int> mu(n, 0);
  mu[0] = 1;
  for (int j = 1; j <= n; ++j) {
    rep.weights[vp(j)] = mu;
    for (int i = 0; i < n; ++i) rep.weights[vm(j)][i] = -mu[i];
    if (j < n)
      for (int i = 0; i < n; ++i) mu[i] -= sys.cartan[i][j - 1];
  }

  rep.action.assign(basis.num_roots(), SparseMat(rep.dim, rep.dim));
  for (int i = 1; i <= n; ++i) {
    std::vector<int> e(n, 0);
    e[i - 1] = 1;
    int pos = sys.index_of(e);
    int neg = basis.negate(pos);
    if (i < n) {
      rep.action[pos].add(vp(i), vp(i + 1), 1);
      rep.action[pos].add(vm(i + 1), vm(i), -1);
      rep.action[neg].add(vp(i + 1), vp(i), 1);
      rep.action[neg].add(vm(i), vm(i + 1), -1);
    } else {
      rep.action[pos].add(vp(n), v0, 1);
      rep.action[pos].add(v0, vm(n), -1);
      rep.action[neg].add(v0, vp(n), 2);
      rep.action[neg].add(vm(n), v0, -2);
    }
  }
  return rep;
}

// Fills in the non-simple root actions through the same defining pairs that
// fix the structure constants, making rho a genuine homomorphism.
void extend_to_all_roots(const ChevalleyBasis& basis, Representation& rep) {
  int R = basis.num_positive();
  for (int g = 0; g < R; ++g) {
    if (basis.height(g) < 2) continue;
    auto [xi, eta] = basis.defining_pair(g);
    Rat n(basis.n_constant(xi, eta));
    rep.action[g] = commutator(rep.action[xi], rep.action[eta]).scaled(1 / n);
    int nxi = basis.negate(xi), neta = basis.negate(eta);
    Rat nn(basis.n_constant(nxi, neta));
    rep.action[basis.negate(g)] =
        commutator(rep.action[nxi], rep.action[neta]).scaled(1 / nn);
  }
}

}  // namespace

long representation_violations(const ChevalleyBasis& basis, const Representation& rep) {
  int m = basis.num_roots();
  long bad = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : bad)
#endif
  for (int a = 0; a < m; ++a) {
    // [H_i, X_a] = <root_a, alpha_i^vee> X_a
    for (int i = 0; i < basis.system().rank(); ++i) {
      SparseMat lhs = commutator(rep.cartan_matrix(i), rep.matrix(a));
      SparseMat rhs = rep.matrix(a).scaled(
          Rat(basis.system().pair_simple_coroot(basis.signed_coeffs(a), i)));
      if (!(lhs == rhs)) ++bad;
    }
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      SparseMat lhs = commutator(rep.matrix(a), rep.matrix(b));
      if (basis.sum_is_zero(a, b)) {
        std::vector<int> cr = basis.coroot(a);
        SparseMat rhs(rep.dim, rep.dim);
        for (int w = 0; w < rep.dim; ++w) {
          long v = 0;
          for (size_t i = 0; i < cr.size(); ++i) v += (long)cr[i] * rep.weights[w][i];
          if (v != 0) rhs.add(w, w, Rat(v));
        }
        if (!(lhs == rhs)) ++bad;
      } else {
        int s = basis.sum_index(a, b);
        SparseMat rhs = s >= 0
                            ? rep.matrix(s).scaled(Rat(basis.n_constant(a, b)))
                            : SparseMat(rep.dim, rep.dim);
        if (!(lhs == rhs)) ++bad;
      }
    }
  }
  return bad;
}

Representation build_small_rep(const ChevalleyBasis& basis, int fundamental) {
  CartanType kind = basis.system().kind;
  Representation rep;
  if (is_minuscule_choice(kind, fundamental))
    rep = build_minuscule(basis, fundamental);
  else if (kind.family == Family::B && fundamental == 1)
    rep = build_odd_vector(basis);
  else
    throw std::invalid_argument("module " + kind.name() + " omega_" +
                                std::to_string(fundamental) + " is not supported");
  extend_to_all_roots(basis, rep);
  if (representation_violations(basis, rep) != 0)
    throw std::logic_error("representation relations failed");
  return rep;
}

Representation build_small_rep(CartanType kind, int fundamental) {
  ChevalleyBasis basis(build_root_system(kind));
  return build_small_rep(basis, fundamental);
}

}  // namespace chevalley
