#include "chevalley/chevalley_basis.hpp"

#include <cassert>
#include <climits>
#include <stdexcept>

namespace chevalley {

namespace {

// Index of an arbitrary signed coefficient vector, -1 when not a root.
int root_index_of(const RootSystem& sys, const std::vector<int>& v) {
  bool pos = true, neg = true, zero = true;
  for (int c : v) {
    if (c > 0) neg = false;
    if (c < 0) pos = false;
    if (c != 0) zero = false;
  }
  if (zero) return -1;
  if (pos) return sys.index_of(v);
  if (neg) {
    std::vector<int> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
    int idx = sys.index_of(w);
    return idx < 0 ? -1 : idx + sys.num_positive();
  }
  return -1;
}

}  // namespace

ChevalleyBasis::ChevalleyBasis(RootSystem sys) : sys_(std::move(sys)) {
  R_ = sys_.num_positive();
  int m = 2 * R_;
  signed_.resize(m);
  for (int i = 0; i < R_; ++i) {
    signed_[i] = sys_.positive_roots[i].coeffs;
    std::vector<int> neg(signed_[i].size());
    for (size_t j = 0; j < neg.size(); ++j) neg[j] = -signed_[i][j];
    signed_[i + R_] = std::move(neg);
  }

  sum_.assign((size_t)m * m, -1);
  std::vector<int> v(sys_.rank());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      for (int j = 0; j < sys_.rank(); ++j) v[j] = signed_[a][j] + signed_[b][j];
      sum_[(size_t)a * m + b] = root_index_of(sys_, v);
    }

  pair_.assign(R_, {-1, -1});
  for (int g = 0; g < R_; ++g) {
    if (sys_.positive_roots[g].height() < 2) continue;
    for (int xi = 0; xi < g; ++xi) {
      int eta = sum_[(size_t)g * m + negate(xi)];
      if (eta >= 0 && eta < R_) {
        pair_[g] = {xi, eta};
        break;
      }
    }
    if (pair_[g].first < 0) throw std::logic_error("no special pair found");
  }

  coroot_.resize(R_);
  for (int i = 0; i < R_; ++i) coroot_[i] = sys_.coroot_coeffs(sys_.positive_roots[i]);

  // Resolve every structure constant once; afterwards lookups are pure reads,
  // which keeps the parallel kernels free of shared mutable state.
  ntab_.assign((size_t)m * m, INT_MIN);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (sum_[(size_t)a * m + b] >= 0 && negate(a) != b) n_recurse(a, b);
}

int ChevalleyBasis::height(int a) const {
  int h = 0;
  for (int c : signed_[a]) h += c;
  return h;
}

int ChevalleyBasis::sum_index(int a, int b) const { return sum_[(size_t)a * num_roots() + b]; }

int ChevalleyBasis::p_value(int a, int b) const {
  std::vector<int> v = signed_[b];
  int p = 0;
  while (true) {
    for (size_t j = 0; j < v.size(); ++j) v[j] -= signed_[a][j];
    if (root_index_of(sys_, v) < 0) break;
    ++p;
  }
  return p;
}

std::pair<int, int> ChevalleyBasis::defining_pair(int gamma) const {
  assert(gamma < R_ && pair_[gamma].first >= 0);
  return pair_[gamma];
}

std::vector<int> ChevalleyBasis::coroot(int a) const {
  std::vector<int> c = coroot_[positive_part(a)];
  if (!is_positive(a))
    for (int& x : c) x = -x;
  return c;
}

int ChevalleyBasis::n_constant(int a, int b) const {
  int n = ntab_[(size_t)a * num_roots() + b];
  if (n == INT_MIN) throw std::invalid_argument("sum is not a root");
  return n;
}

int ChevalleyBasis::n_recurse(int a, int b) {
  int m = num_roots();
  int& slot = ntab_[(size_t)a * m + b];
  if (slot != INT_MIN) return slot;

  int result;
  bool apos = is_positive(a), bpos = is_positive(b);
  if (!apos && !bpos) {
    result = -n_recurse(negate(a), negate(b));
  } else if (apos && bpos) {
    if (a > b) {
      result = -n_recurse(b, a);
    } else {
      int g = sum_index(a, b);
      auto [xi, eta] = pair_[g];
      if (xi == a) {
        result = p_value(a, b) + 1;  // the defining choice: N_{xi,eta} > 0
      } else {
        // Jacobi against X_{-xi} resolves N_{a,b} through shorter roots.
        long t = 0;
        int am = sum_index(negate(xi), a);
        if (am >= 0) t += (long)n_recurse(negate(xi), a) * n_recurse(am, b);
        int bm = sum_index(negate(xi), b);
        if (bm >= 0) t += (long)n_recurse(negate(xi), b) * n_recurse(a, bm);
        int denom = n_recurse(negate(xi), g);
        if (denom == 0 || t % denom != 0) throw std::logic_error("bad Jacobi division");
        result = (int)(t / denom);
      }
    }
  } else if (!apos) {
    result = -n_recurse(b, a);
  } else {
    // a = alpha positive, b = -delta.
    int d = negate(b);
    int g = sum_index(a, b);
    assert(g >= 0);
    if (!is_positive(g)) {
      result = n_recurse(d, negate(a));
    } else {
      // Jacobi on (gamma, delta, -delta) with gamma = alpha - delta:
      // N_{alpha,-delta} N_{gamma,delta} + <gamma,delta^vee>
      //   + [gamma-delta root] N_{-delta,gamma} N_{gamma-delta,delta} = 0.
      const std::vector<int>& cr = coroot_[d];
      long pairing = 0;
      for (int i = 0; i < sys_.rank(); ++i)
        pairing += (long)cr[i] * sys_.pair_simple_coroot(signed_[g], i);
      long extra = 0;
      int gm = sum_index(g, b);
      if (gm >= 0) extra = (long)n_recurse(b, g) * n_recurse(gm, d);
      int denom = n_recurse(g, d);
      long t = -(pairing + extra);
      if (denom == 0 || t % denom != 0) throw std::logic_error("bad Jacobi division");
      result = (int)(t / denom);
    }
  }
  slot = result;
  return result;
}

bool AlgebraElement::is_zero() const {
  for (const Rat& c : cartan)
    if (c != 0) return false;
  for (const auto& [idx, c] : root_part)
    if (c != 0) return false;
  return true;
}

void AlgebraElement::add_root(int index, const Rat& c) {
  Rat& slot = root_part[index];
  slot += c;
  if (slot == 0) root_part.erase(index);
}

void AlgebraElement::add_cartan(int i, const Rat& c) { cartan[i] += c; }

AlgebraElement AlgebraElement::scaled(const Rat& c) const {
  AlgebraElement r{kind, cartan, {}};
  for (Rat& x : r.cartan) x *= c;
  if (c != 0)
    for (const auto& [idx, v] : root_part) r.root_part[idx] = v * c;
  return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  if (!(kind == o.kind) || cartan != o.cartan) return false;
  return root_part == o.root_part;
}

AlgebraElement zero_element(const ChevalleyBasis& basis) {
  return AlgebraElement{basis.system().kind,
                        std::vector<Rat>(basis.system().rank(), Rat(0)),
                        {}};
}

AlgebraElement root_vector(const ChevalleyBasis& basis, int index) {
  AlgebraElement x = zero_element(basis);
  x.root_part[index] = 1;
  return x;
}

AlgebraElement cartan_element(const ChevalleyBasis& basis, const std::vector<Rat>& coeffs) {
  AlgebraElement x = zero_element(basis);
  x.cartan = coeffs;
  return x;
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement r = x;
  for (size_t i = 0; i < r.cartan.size(); ++i) r.cartan[i] += y.cartan[i];
  for (const auto& [idx, c] : y.root_part) r.add_root(idx, c);
  return r;
}

AlgebraElement bracket(const ChevalleyBasis& basis, const AlgebraElement& x,
                       const AlgebraElement& y) {
  if (!(x.kind == basis.system().kind) || !(y.kind == basis.system().kind))
    throw std::invalid_argument("elements belong to a different root system");
  const RootSystem& sys = basis.system();
  AlgebraElement r = zero_element(basis);

  // [H, X_b] and [X_a, H]
  for (const auto& [b, cb] : y.root_part) {
    Rat v(0);
    for (int i = 0; i < sys.rank(); ++i)
      if (x.cartan[i] != 0)
        v += x.cartan[i] * sys.pair_simple_coroot(basis.signed_coeffs(b), i);
    if (v != 0) r.add_root(b, v * cb);
  }
  for (const auto& [a, ca] : x.root_part) {
    Rat v(0);
    for (int i = 0; i < sys.rank(); ++i)
      if (y.cartan[i] != 0)
        v += y.cartan[i] * sys.pair_simple_coroot(basis.signed_coeffs(a), i);
    if (v != 0) r.add_root(a, -v * ca);
  }

  // [X_a, X_b]
  for (const auto& [a, ca] : x.root_part) {
    for (const auto& [b, cb] : y.root_part) {
      if (basis.sum_is_zero(a, b)) {
        std::vector<int> cr = basis.coroot(a);
        Rat f = ca * cb;
        for (int i = 0; i < sys.rank(); ++i)
          if (cr[i] != 0) r.add_cartan(i, f * cr[i]);
      } else {
        int s = basis.sum_index(a, b);
        if (s >= 0) r.add_root(s, ca * cb * basis.n_constant(a, b));
      }
    }
  }
  return r;
}

namespace {

long jacobi_violations_impl(const ChevalleyBasis& basis, bool parallel) {
  int m = basis.num_roots();
  long bad = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : bad) if (parallel)
#endif
  for (int a = 0; a < m; ++a) {
    AlgebraElement xa = root_vector(basis, a);
    for (int b = a + 1; b < m; ++b) {
      AlgebraElement xb = root_vector(basis, b);
      for (int c = b + 1; c < m; ++c) {
        AlgebraElement xc = root_vector(basis, c);
        AlgebraElement s = bracket(basis, xa, bracket(basis, xb, xc));
        s = add(s, bracket(basis, xb, bracket(basis, xc, xa)));
        s = add(s, bracket(basis, xc, bracket(basis, xa, xb)));
        if (!s.is_zero()) ++bad;
      }
    }
  }
  return bad;
}

}  // namespace

long jacobi_violations_parallel(const ChevalleyBasis& basis) {
  return jacobi_violations_impl(basis, true);
}
long jacobi_violations_serial(const ChevalleyBasis& basis) {
  return jacobi_violations_impl(basis, false);
}

}  // namespace chevalley
