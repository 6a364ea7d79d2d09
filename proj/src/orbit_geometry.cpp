#include "chevalley/orbit_geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chevalley {

namespace {

void require_nilpositive(const ChevalleyBasis& basis, const AlgebraElement& e) {
  if (!(e.kind == basis.system().kind))
    throw std::invalid_argument("element belongs to a different root system");
  for (const Rat& c : e.cartan)
    if (c != 0) throw std::invalid_argument("element has a Cartan part");
  if (e.root_part.empty()) throw std::invalid_argument("element is zero");
  for (const auto& [a, c] : e.root_part)
    if (!basis.is_positive(a))
      throw std::invalid_argument("element is supported on a negative root");
}

// <root_a, h> for h given by Cartan coordinates.
Rat h_value(const ChevalleyBasis& basis, const std::vector<Rat>& h, int a) {
  Rat v(0);
  for (int i = 0; i < basis.system().rank(); ++i)
    if (h[i] != 0) v += h[i] * basis.system().pair_simple_coroot(basis.signed_coeffs(a), i);
  return v;
}

// Cartan ansatz: find h in the Cartan with beta_j(h) = 2 on the support of e
// AND h = [e, z] for some z (Morozov's condition). The candidates restrict
// the support of z. On success f is the (-2)-eigencomponent of z, which
// satisfies [e, f] = h and [h, f] = -2f exactly.
std::optional<std::pair<std::vector<Rat>, AlgebraElement>> cartan_ansatz(
    const ChevalleyBasis& basis, const AlgebraElement& e,
    const std::vector<int>& candidates) {
  const RootSystem& sys = basis.system();
  int n = sys.rank();
  int m = (int)candidates.size();

  // Unknowns: c_0..c_{n-1} (the h coordinates) then z over the candidates.
  // Rows: components of [e, z] - h = 0, then the support equations.
  std::map<int, int> row_of;  // i -> Cartan row i, n + root index -> root row
  for (int i = 0; i < n; ++i) row_of[i] = i;
  std::vector<AlgebraElement> images;
  for (int a_idx : candidates) {
    AlgebraElement img = bracket(basis, e, root_vector(basis, a_idx));
    for (const auto& [ridx, c] : img.root_part)
      row_of.emplace(n + ridx, (int)row_of.size());
    images.push_back(std::move(img));
  }
  std::vector<int> support;
  for (const auto& [a, c] : e.root_part) support.push_back(a);
  int rows = (int)row_of.size() + (int)support.size();
  Mat sysm(rows, n + m);
  std::vector<Rat> rhs(rows, Rat(0));
  for (int i = 0; i < n; ++i) sysm.at(i, i) = -1;  // the -h term
  for (int col = 0; col < m; ++col) {
    for (int i = 0; i < n; ++i) sysm.at(i, n + col) = images[col].cartan[i];
    for (const auto& [ridx, c] : images[col].root_part)
      sysm.at(row_of.at(n + ridx), n + col) = c;
  }
  for (int j = 0; j < (int)support.size(); ++j) {
    int row = (int)row_of.size() + j;
    for (int i = 0; i < n; ++i)
      sysm.at(row, i) = sys.pair_simple_coroot(basis.signed_coeffs(support[j]), i);
    rhs[row] = 2;
  }
  auto sol = solve_linear(std::move(sysm), std::move(rhs));
  if (!sol) return std::nullopt;

  std::vector<Rat> h(sol->begin(), sol->begin() + n);
  AlgebraElement f = zero_element(basis);
  for (int col = 0; col < m; ++col)
    if ((*sol)[n + col] != 0 && h_value(basis, h, candidates[col]) == -2)
      f.add_root(candidates[col], (*sol)[n + col]);

  // The eigencomponent argument guarantees these; check them anyway.
  AlgebraElement hc = cartan_element(basis, h);
  if (!(bracket(basis, e, f) == hc)) return std::nullopt;
  if (!(bracket(basis, hc, f) == f.scaled(-2))) return std::nullopt;
  return std::make_pair(h, f);
}

// Two candidate ladders: negatives of the support (covers sums of mutually
// non-interacting roots cheaply), then every root index interacting with e.
std::optional<std::pair<std::vector<Rat>, AlgebraElement>> direct_triple(
    const ChevalleyBasis& basis, const AlgebraElement& e, bool full) {
  std::vector<int> cand;
  if (!full) {
    for (const auto& [a, c] : e.root_part) cand.push_back(basis.negate(a));
  } else {
    for (int a = 0; a < basis.num_roots(); ++a) {
      for (const auto& [b, c] : e.root_part)
        if (basis.sum_is_zero(b, a) || basis.sum_index(b, a) >= 0) {
          cand.push_back(a);
          break;
        }
    }
  }
  return cartan_ansatz(basis, e, cand);
}

struct CoreResult {
  std::vector<Rat> h_coords;           // Cartan h of the conjugated triple
  AlgebraElement f;                    // f of the conjugated triple
  std::vector<std::pair<int, Rat>> conj;  // applied exp(ad t X_gamma), in order
  AlgebraElement e_conj;
};

// Deterministic schedule: direct attempt, then one conjugation by
// exp(ad t X_gamma) over positive roots in root order with t in {1,2,3},
// then pairs of such conjugations with t = 1.
CoreResult jm_core(const ChevalleyBasis& basis, const AlgebraElement& e) {
  require_nilpositive(basis, e);
  for (bool full : {false, true})
    if (auto r = direct_triple(basis, e, full)) return {r->first, r->second, {}, e};

  int R = basis.num_positive();
  // Cheap ansatz first across all single conjugations, then the full one.
  static const int steps[] = {1, -1, 2, -2, 3, -3};
  for (bool full : {false, true})
    for (int g = 0; g < R; ++g)
      for (int t : steps) {
        AlgebraElement e2 = exp_ad_root(basis, g, t, e);
        if (e2 == e) break;
        if (auto r = direct_triple(basis, e2, full))
          return {r->first, r->second, {{g, Rat(t)}}, e2};
      }
  for (int g1 = 0; g1 < R; ++g1)
    for (int t1 : {1, -1}) {
      AlgebraElement e2 = exp_ad_root(basis, g1, t1, e);
      if (e2 == e) break;
      for (int g2 = g1 + 1; g2 < R; ++g2)
        for (int t2 : {1, -1}) {
          AlgebraElement e3 = exp_ad_root(basis, g2, t2, e2);
          if (e3 == e2) break;
          if (auto r = direct_triple(basis, e3, false))
            return {r->first, r->second, {{g1, Rat(t1)}, {g2, Rat(t2)}}, e3};
        }
    }
  throw std::runtime_error("sl2 completion schedule exhausted");
}

}  // namespace

AlgebraElement exp_ad_root(const ChevalleyBasis& basis, int gamma, const Rat& t,
                           const AlgebraElement& x) {
  AlgebraElement acc = x;
  AlgebraElement term = x;
  AlgebraElement xg = root_vector(basis, gamma);
  long k = 1;
  while (true) {
    term = bracket(basis, xg, term);
    if (term.is_zero()) break;
    term = term.scaled(t / k);
    acc = add(acc, term);
    ++k;
  }
  return acc;
}

int orbit_dimension(const ChevalleyBasis& basis, const ParabolicGrading& g, int i,
                    const AlgebraElement& x) {
  if (i < 1 || i > g.num_pieces()) throw std::invalid_argument("piece index out of range");
  std::map<int, int> col_of;
  for (int r : g.pieces[i - 1]) col_of[r] = (int)col_of.size();
  for (const auto& [a, c] : x.root_part)
    if (!col_of.count(a))
      throw std::invalid_argument("element is not supported on the piece");

  int n = basis.system().rank();
  std::vector<AlgebraElement> gens;
  for (int k = 0; k < n; ++k) {
    std::vector<Rat> h(n, Rat(0));
    h[k] = 1;
    gens.push_back(cartan_element(basis, h));
  }
  for (int r : g.levi_roots) {
    gens.push_back(root_vector(basis, r));
    gens.push_back(root_vector(basis, basis.negate(r)));
  }

  Mat m((int)gens.size(), (int)col_of.size());
  for (int row = 0; row < (int)gens.size(); ++row) {
    AlgebraElement img = bracket(basis, gens[row], x);
    for (const auto& [a, c] : img.root_part) m.at(row, col_of.at(a)) = c;
  }
  return rank(m);
}

SL2Triple jm_triple(const ChevalleyBasis& basis, const AlgebraElement& e) {
  CoreResult core = jm_core(basis, e);
  AlgebraElement h = cartan_element(basis, core.h_coords);
  AlgebraElement f = core.f;
  // Pull the triple back through the inverse conjugations so it contains the
  // original e.
  for (auto it = core.conj.rbegin(); it != core.conj.rend(); ++it) {
    h = exp_ad_root(basis, it->first, -it->second, h);
    f = exp_ad_root(basis, it->first, -it->second, f);
  }
  AlgebraElement he = bracket(basis, h, e);
  if (!(he == e.scaled(2))) throw std::logic_error("triple check [h,e] failed");
  AlgebraElement hf = bracket(basis, h, f);
  if (!(hf == f.scaled(-2))) throw std::logic_error("triple check [h,f] failed");
  AlgebraElement ef = bracket(basis, e, f);
  if (!(ef == h)) throw std::logic_error("triple check [e,f] failed");
  return {e, h, f};
}

std::vector<int> weighted_dynkin(const ChevalleyBasis& basis, const AlgebraElement& e) {
  CoreResult core = jm_core(basis, e);
  const RootSystem& sys = basis.system();
  int n = sys.rank();
  std::vector<Rat> v(n);
  for (int j = 0; j < n; ++j) {
    v[j] = 0;
    for (int i = 0; i < n; ++i)
      if (core.h_coords[i] != 0) v[j] += core.h_coords[i] * sys.cartan[i][j];
  }
  // Reflect into the dominant chamber, always at the lowest negative index.
  while (true) {
    int j = -1;
    for (int k = 0; k < n; ++k)
      if (v[k] < 0) {
        j = k;
        break;
      }
    if (j < 0) break;
    Rat vj = v[j];
    for (int k = 0; k < n; ++k) v[k] -= Rat(sys.cartan[j][k]) * vj;
  }
  std::vector<int> out(n);
  for (int j = 0; j < n; ++j) {
    if (v[j].get_den() != 1 || v[j] > 2)
      throw std::logic_error("weighted Dynkin value out of range");
    out[j] = (int)v[j].get_num().get_si();
  }
  return out;
}

long nilpotent_orbit_dim(const RootSystem& sys, const std::vector<int>& wdd) {
  if ((int)wdd.size() != sys.rank()) throw std::invalid_argument("bad diagram size");
  long zero = 0, one = 0;
  for (const Root& beta : sys.positive_roots) {
    long v = 0;
    for (int j = 0; j < sys.rank(); ++j) v += (long)beta.coeffs[j] * wdd[j];
    if (v == 0) ++zero;
    if (v == 1) ++one;
  }
  return 2L * sys.num_positive() - 2 * zero - one;
}

std::vector<int> minimal_orbit_wdd(const RootSystem& sys) {
  std::vector<int> c = sys.coroot_coeffs(sys.highest_root());
  std::vector<int> v(sys.rank(), 0);
  for (int j = 0; j < sys.rank(); ++j)
    for (int i = 0; i < sys.rank(); ++i) v[j] += c[i] * sys.cartan[i][j];
  return v;
}

bool is_minimal_orbit(const RootSystem& sys, const std::vector<int>& wdd) {
  return wdd == minimal_orbit_wdd(sys);
}

bool is_minimal_orbit(const ChevalleyBasis& basis, const AlgebraElement& e) {
  return is_minimal_orbit(basis.system(), weighted_dynkin(basis, e));
}

Mat ad_matrix(const ChevalleyBasis& basis, const AlgebraElement& x) {
  int n = basis.system().rank();
  int m = basis.num_roots();
  Mat out(n + m, n + m);
  auto fill_col = [&](int col, const AlgebraElement& img) {
    for (int i = 0; i < n; ++i) out.at(i, col) = img.cartan[i];
    for (const auto& [a, c] : img.root_part) out.at(n + a, col) = c;
  };
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> h(n, Rat(0));
    h[i] = 1;
    fill_col(i, bracket(basis, x, cartan_element(basis, h)));
  }
  for (int a = 0; a < m; ++a)
    fill_col(n + a, bracket(basis, x, root_vector(basis, a)));
  return out;
}

}  // namespace chevalley
