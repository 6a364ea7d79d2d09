#include "chevalley/classical_orbits.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace chevalley {

namespace {

void require_split(const BilinearSpace& space, Symmetry want) {
  if (space.symmetry != want) throw std::invalid_argument("wrong form symmetry");
  const BilinearSpace ref = want == Symmetry::symmetric
                                ? split_symmetric_space(space.dim)
                                : split_skew_space(space.dim);
  if (!(space.gram == ref.gram))
    throw std::invalid_argument("enumerators require the standard split Gram matrix");
}

// Hyperbolic-pair coordinates for the split forms: e_i is unit vector i,
// f_i is unit vector dim-1-i (0-based), plus a middle vector when dim is odd.
int f_index(int dim, int i) { return dim - 1 - i; }

// The admissible (s = isotropic rows, p = anisotropic rows) set for the
// orthogonal cases: rank s+p bounded by row and column count, and the
// 2s+p basis vectors consumed by the rows must fit in the form.
std::vector<std::pair<int, int>> orthogonal_parameters(int k, int d) {
  std::vector<std::pair<int, int>> out;
  for (int s = 0; s <= std::min(k, d); ++s)
    for (int p = 0; s + p <= std::min(k, d) && 2 * s + p <= d; ++p)
      out.emplace_back(s, p);
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) {
    if (a.first + a.second != b.first + b.second)
      return a.first + a.second > b.first + b.second;  // rank descending
    return a.second > b.second;                        // then Witt rank
  });
  return out;
}

// Rows: s isotropic vectors e_1..e_s, then p pairwise orthogonal anisotropic
// vectors drawn from 2e_j + f_j (j > s), the middle vector, and 2e_j - f_j.
Mat orthogonal_representative(int k, int d, int s, int p, bool mirror) {
  int q = d / 2;
  std::vector<std::vector<std::pair<int, Rat>>> rows;
  for (int i = 0; i < s; ++i) rows.push_back({{i, Rat(1)}});
  std::vector<std::vector<std::pair<int, Rat>>> aniso;
  for (int j = s; j < q; ++j) aniso.push_back({{j, Rat(2)}, {f_index(d, j), Rat(1)}});
  if (d % 2 == 1) aniso.push_back({{q, Rat(1)}});
  for (int j = s; j < q; ++j) aniso.push_back({{j, Rat(2)}, {f_index(d, j), Rat(-1)}});
  for (int i = 0; i < p; ++i) rows.push_back(aniso.at(i));
  if (mirror) rows.at(0) = {{f_index(d, 0), Rat(1)}};

  Mat a(k, d);
  for (int i = 0; i < (int)rows.size(); ++i)
    for (const auto& [j, c] : rows[i]) a.at(i, j) = c;
  return a;
}

// ---- F_q arithmetic on small fixed-size matrices ------------------------

constexpr int kMaxCells = 40;

struct SmallMat {
  int r = 0, c = 0;
  std::array<int, kMaxCells> a{};
  int& at(int i, int j) { return a[size_t(i) * c + j]; }
  int at(int i, int j) const { return a[size_t(i) * c + j]; }
  void clear() { a.fill(0); }
};

SmallMat small(int r, int c) {
  SmallMat m;
  m.r = r;
  m.c = c;
  return m;
}

int fq_inv(int a, int q) {
  int r = 1, b = a % q, e = q - 2;
  while (e > 0) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return r;
}

// out = x * y mod q; out must not alias the inputs.
void sm_mul(const SmallMat& x, const SmallMat& y, int q, SmallMat& out) {
  out.r = x.r;
  out.c = y.c;
  out.clear();
  for (int i = 0; i < x.r; ++i)
    for (int t = 0; t < x.c; ++t) {
      int v = x.at(i, t);
      if (v == 0) continue;
      for (int j = 0; j < y.c; ++j)
        out.at(i, j) = (out.at(i, j) + v * y.at(t, j)) % q;
    }
}

// gram = m J m^t mod q; buffers must not alias m.
void sm_gram(const SmallMat& m, const SmallMat& jm, int q, SmallMat& tmp, SmallMat& out) {
  sm_mul(m, jm, q, tmp);
  out.r = out.c = m.r;
  out.clear();
  for (int i = 0; i < m.r; ++i)
    for (int j = 0; j < m.r; ++j) {
      int acc = 0;
      for (int t = 0; t < m.c; ++t) acc = (acc + tmp.at(i, t) * m.at(j, t)) % q;
      out.at(i, j) = acc;
    }
}

int sm_rank(SmallMat m, int q) {
  int r = 0;
  for (int c = 0; c < m.c && r < m.r; ++c) {
    int piv = -1;
    for (int i = r; i < m.r; ++i)
      if (m.at(i, c) % q != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.c; ++j) std::swap(m.at(piv, j), m.at(r, j));
    int inv = fq_inv((m.at(r, c) % q + q) % q, q);
    for (int j = c; j < m.c; ++j) m.at(r, j) = (m.at(r, j) % q + q) % q * inv % q;
    for (int i = r + 1; i < m.r; ++i) {
      int t = (m.at(i, c) % q + q) % q;
      if (t == 0) continue;
      for (int j = c; j < m.c; ++j)
        m.at(i, j) = ((m.at(i, j) - t * m.at(r, j)) % q + q) % q;
    }
    ++r;
  }
  return r;
}

SmallMat split_gram_fq(Symmetry sym, int d, int q) {
  SmallMat j = small(d, d);
  for (int i = 0; i < d; ++i)
    j.at(i, d - 1 - i) = (sym == Symmetry::skew && 2 * i >= d) ? q - 1 : 1;
  return j;
}

int fq_pair(const SmallMat& jm, const std::vector<int>& x, const std::vector<int>& y, int q) {
  int acc = 0;
  for (int a = 0; a < (int)x.size(); ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < (int)y.size(); ++b)
      acc = (acc + x[a] * jm.at(a, b) % q * y[b]) % q;
  }
  return acc;
}

int primitive_root(int q) { return 2; }  // 2 generates F_3* and F_5*

std::vector<SmallMat> gl_generators(int n, int q) {
  std::vector<SmallMat> gens;
  if (n == 0) return gens;
  SmallMat d = small(n, n);
  for (int i = 0; i < n; ++i) d.at(i, i) = 1;
  d.at(0, 0) = primitive_root(q);
  gens.push_back(d);
  if (n >= 2) {
    SmallMat t = small(n, n);
    for (int i = 0; i < n; ++i) t.at(i, i) = 1;
    t.at(0, 1) = 1;
    gens.push_back(t);
    SmallMat s = small(n, n);
    for (int i = 2; i < n; ++i) s.at(i, i) = 1;
    s.at(0, 1) = s.at(1, 0) = 1;
    gens.push_back(s);
    SmallMat c = small(n, n);  // cycle
    for (int i = 0; i < n; ++i) c.at(i, (i + 1) % n) = 1;
    gens.push_back(c);
  }
  return gens;
}

// Canonical representatives of the projective lines of F_q^d.
std::vector<std::vector<int>> line_representatives(int d, int q) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(d, 0);
  while (true) {
    int i = d - 1;
    while (i >= 0 && v[i] == q - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
    int lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] == 1) out.push_back(v);
  }
  return out;
}

// Right-action matrix of the reflection through the hyperplane of v:
// x -> x - (2 <x,v> / <v,v>) v, i.e. I - c (J v^t) v.
SmallMat reflection_matrix(const SmallMat& jm, const std::vector<int>& v, int q) {
  int d = (int)v.size();
  int c = 2 * fq_inv(fq_pair(jm, v, v, q), q) % q;
  SmallMat out = small(d, d);
  for (int a = 0; a < d; ++a) {
    out.at(a, a) = 1;
    int jv = 0;
    for (int b = 0; b < d; ++b) jv = (jv + jm.at(a, b) * v[b]) % q;
    int coef = (q - c * jv % q) % q;
    for (int b = 0; b < d; ++b) out.at(a, b) = (out.at(a, b) + coef * v[b]) % q;
  }
  return out;
}

// Symplectic transvection x -> x + c <x,v> v.
SmallMat transvection_matrix(const SmallMat& jm, const std::vector<int>& v, int c, int q) {
  int d = (int)v.size();
  SmallMat out = small(d, d);
  for (int a = 0; a < d; ++a) {
    out.at(a, a) = 1;
    int jv = 0;
    for (int b = 0; b < d; ++b) jv = (jv + jm.at(a, b) * v[b]) % q;
    int coef = c * jv % q;
    for (int b = 0; b < d; ++b) out.at(a, b) = (out.at(a, b) + coef * v[b]) % q;
  }
  return out;
}

std::vector<SmallMat> isometry_generators(OrbitCase kind, const SmallMat& jm, int d, int q) {
  std::vector<SmallMat> gens;
  auto lines = line_representatives(d, q);
  if (kind == OrbitCase::c_type) {
    for (const auto& v : lines) {
      gens.push_back(transvection_matrix(jm, v, 1, q));
      gens.push_back(transvection_matrix(jm, v, primitive_root(q), q));
    }
    return gens;
  }
  std::vector<SmallMat> refl;
  for (const auto& v : lines)
    if (fq_pair(jm, v, v, q) != 0) refl.push_back(reflection_matrix(jm, v, q));
  if (kind == OrbitCase::d_type) {
    // Rotation subgroup: pair every reflection with a fixed one.
    SmallMat prod = small(d, d);
    for (size_t i = 1; i < refl.size(); ++i) {
      sm_mul(refl[0], refl[i], q, prod);
      gens.push_back(prod);
    }
  } else {
    gens = refl;
  }
  return gens;
}

struct UnionFind {
  std::vector<int32_t> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int32_t find(int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int32_t a, int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

constexpr int64_t kOracleStateCap = 20'000'000;

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Cell layout of the matrix state: all k*d entries for rectangular cases,
// the upper triangle (with or without the diagonal) for the square cases.
struct CellLayout {
  int rows = 0, cols = 0;
  std::vector<std::pair<int, int>> cells;
  bool symmetrize = false;
  bool antisymmetrize = false;
};

CellLayout make_layout(OrbitCase kind, int k, int dim) {
  CellLayout l;
  if (kind == OrbitCase::sym_square || kind == OrbitCase::ext_square) {
    l.rows = l.cols = k;
    bool diag = kind == OrbitCase::sym_square;
    l.symmetrize = diag;
    l.antisymmetrize = !diag;
    for (int i = 0; i < k; ++i)
      for (int j = diag ? i : i + 1; j < k; ++j) l.cells.emplace_back(i, j);
  } else {
    l.rows = k;
    l.cols = dim;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < dim; ++j) l.cells.emplace_back(i, j);
  }
  int side = std::max(l.rows, l.cols);
  if (l.rows * l.cols > kMaxCells || side * side > kMaxCells)
    throw std::invalid_argument("oracle instance too large");
  return l;
}

void decode_state(int64_t s, const CellLayout& l, int q, SmallMat& m) {
  m.r = l.rows;
  m.c = l.cols;
  m.clear();
  for (const auto& [i, j] : l.cells) {
    int digit = int(s % q);
    s /= q;
    m.at(i, j) = digit;
    if (l.symmetrize) m.at(j, i) = digit;
    if (l.antisymmetrize) m.at(j, i) = (q - digit) % q;
  }
}

int64_t encode_state(const SmallMat& m, const CellLayout& l, int q) {
  int64_t s = 0;
  for (auto it = l.cells.rbegin(); it != l.cells.rend(); ++it)
    s = s * q + m.at(it->first, it->second);
  return s;
}

// One generator acting on the matrix state: optional left multiplier,
// optional right multiplier (already transposed where needed).
struct StateGen {
  const SmallMat* left = nullptr;
  const SmallMat* right = nullptr;
};

void apply_gen(const StateGen& g, const SmallMat& in, int q, SmallMat& tmp, SmallMat& out) {
  const SmallMat* cur = &in;
  if (g.left) {
    sm_mul(*g.left, in, q, tmp);
    cur = &tmp;
  }
  if (g.right) {
    sm_mul(*cur, *g.right, q, out);
  } else {
    out = *cur;
  }
}

SmallMat signature_gram(OrbitCase kind, int dim, int q) {
  if (kind == OrbitCase::b_type || kind == OrbitCase::d_type)
    return split_gram_fq(Symmetry::symmetric, dim, q);
  if (kind == OrbitCase::c_type) return split_gram_fq(Symmetry::skew, dim, q);
  return {};
}

std::pair<int, int> state_signature(OrbitCase kind, const SmallMat& m, const SmallMat& jm,
                                    int q, SmallMat& t1, SmallMat& t2) {
  int rank_a = sm_rank(m, q);
  if (kind == OrbitCase::sym_square || kind == OrbitCase::ext_square)
    return {rank_a, rank_a};
  if (jm.r == 0) return {rank_a, 0};
  sm_gram(m, jm, q, t1, t2);
  return {rank_a, sm_rank(t2, q)};
}

}  // namespace

BilinearSpace split_symmetric_space(int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  BilinearSpace s{dim, Symmetry::symmetric, Mat(dim, dim)};
  for (int i = 0; i < dim; ++i) s.gram.at(i, dim - 1 - i) = 1;
  return s;
}

BilinearSpace split_skew_space(int dim) {
  if (dim < 2 || dim % 2 != 0) throw std::invalid_argument("skew form needs even dimension");
  BilinearSpace s{dim, Symmetry::skew, Mat(dim, dim)};
  for (int i = 0; i < dim / 2; ++i) {
    s.gram.at(i, dim - 1 - i) = 1;
    s.gram.at(dim - 1 - i, i) = -1;
  }
  return s;
}

std::pair<int, int> witt_invariants(const Mat& a, const BilinearSpace& space) {
  if (a.cols() != space.dim) throw std::invalid_argument("row length does not match the space");
  int rank_a = rank(a);
  Mat gram = a * space.gram * a.transposed();
  return {rank_a, rank(gram)};
}

std::vector<ClassicalOrbit> enumerate_tensor_gl(int n1, int n2) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("sides must be positive");
  std::vector<ClassicalOrbit> out;
  for (int r = std::min(n1, n2); r >= 0; --r) {
    ClassicalOrbit o;
    o.rank_a = r;
    o.witt_rank = 0;
    o.representative = Mat(n1, n2);
    for (int i = 0; i < r; ++i) o.representative.at(i, n2 - r + i) = 1;
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<ClassicalOrbit> enumerate_bilinear_tensor(int k, const BilinearSpace& space) {
  if (k < 1) throw std::invalid_argument("need at least one row");
  int d = space.dim;
  std::vector<ClassicalOrbit> out;
  if (space.symmetry == Symmetry::skew) {
    require_split(space, Symmetry::skew);
    std::vector<std::pair<int, int>> params;  // (p hyperbolic pairs, s extra)
    for (int p = 0; 2 * p <= std::min(k, d); ++p)
      for (int s = 0; 2 * p + s <= std::min(k, d) && p + s <= d / 2; ++s)
        params.emplace_back(p, s);
    std::sort(params.begin(), params.end(), [](auto& a, auto& b) {
      if (2 * a.first + a.second != 2 * b.first + b.second)
        return 2 * a.first + a.second > 2 * b.first + b.second;
      return a.first > b.first;
    });
    for (auto [p, s] : params) {
      ClassicalOrbit o;
      o.rank_a = 2 * p + s;
      o.witt_rank = 2 * p;
      o.representative = Mat(k, d);
      int row = 0;
      for (int i = 0; i < p; ++i) o.representative.at(row++, i) = 1;
      for (int i = 0; i < p + s; ++i) o.representative.at(row++, f_index(d, i)) = 1;
      out.push_back(std::move(o));
    }
    return out;
  }

  require_split(space, Symmetry::symmetric);
  bool even = d % 2 == 0;
  for (auto [s, p] : orthogonal_parameters(k, d)) {
    ClassicalOrbit o;
    o.rank_a = s + p;
    o.witt_rank = p;
    o.representative = orthogonal_representative(k, d, s, p, false);
    out.push_back(std::move(o));
    if (even && p == 0 && s == d / 2) {
      ClassicalOrbit m;
      m.rank_a = s;
      m.witt_rank = 0;
      m.split_tag = true;
      m.representative = orthogonal_representative(k, d, s, p, true);
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<std::pair<int, int>> narrow_constraint_violations(int k, const BilinearSpace& space) {
  if (space.symmetry != Symmetry::symmetric) return {};
  std::vector<std::pair<int, int>> out;
  for (auto [s, p] : orthogonal_parameters(k, space.dim))
    if (2 * s + p > k) out.emplace_back(s, p);
  return out;
}

std::vector<ClassicalOrbit> enumerate_symmetric_square(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  std::vector<ClassicalOrbit> out;
  for (int r = n; r >= 0; --r) {
    ClassicalOrbit o;
    o.rank_a = r;
    o.witt_rank = r;
    o.representative = Mat(n, n);
    for (int i = 0; i < r; ++i) o.representative.at(i, i) = 1;
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<ClassicalOrbit> enumerate_exterior_square(int n) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  std::vector<ClassicalOrbit> out;
  for (int p = n / 2; p >= 0; --p) {
    ClassicalOrbit o;
    o.rank_a = 2 * p;
    o.witt_rank = 2 * p;
    o.representative = Mat(n, n);
    for (int i = 0; i < p; ++i) {
      o.representative.at(i, n - 1 - i) = 1;
      o.representative.at(n - 1 - i, i) = -1;
    }
    out.push_back(std::move(o));
  }
  return out;
}

FqClassSummary fq_orbit_classes(OrbitCase kind, int k, int dim, int q) {
  if (q != 3 && q != 5) throw std::invalid_argument("oracle supports q = 3 or 5");
  CellLayout layout = make_layout(kind, k, dim);
  int64_t states = ipow(q, (int)layout.cells.size());
  if (states > kOracleStateCap)
    throw std::invalid_argument("state space exceeds the oracle cap");

  std::vector<SmallMat> lefts = gl_generators(layout.rows, q);
  std::vector<SmallMat> rights;  // pre-transposed for the row-vector action
  if (kind == OrbitCase::sym_square || kind == OrbitCase::ext_square) {
    for (const SmallMat& g : lefts) {
      SmallMat t = small(g.c, g.r);
      for (int i = 0; i < g.r; ++i)
        for (int j = 0; j < g.c; ++j) t.at(j, i) = g.at(i, j);
      rights.push_back(t);
    }
  } else if (kind == OrbitCase::tensor) {
    rights = gl_generators(dim, q);
  } else {
    SmallMat jm = signature_gram(kind, dim, q);
    rights = isometry_generators(kind, jm, dim, q);
  }
  std::vector<StateGen> gens;
  if (kind == OrbitCase::sym_square || kind == OrbitCase::ext_square) {
    for (size_t i = 0; i < lefts.size(); ++i) gens.push_back({&lefts[i], &rights[i]});
  } else {
    for (const SmallMat& l : lefts) gens.push_back({&l, nullptr});
    for (const SmallMat& r : rights) gens.push_back({nullptr, &r});
  }

  UnionFind uf((size_t)states);
  std::vector<int32_t> image((size_t)states);
  for (const StateGen& g : gens) {
#pragma omp parallel
    {
      SmallMat work, tmp, moved;
#pragma omp for schedule(static)
      for (int64_t s = 0; s < states; ++s) {
        decode_state(s, layout, q, work);
        apply_gen(g, work, q, tmp, moved);
        image[(size_t)s] = (int32_t)encode_state(moved, layout, q);
      }
    }
    for (int64_t s = 0; s < states; ++s) uf.unite((int32_t)s, image[(size_t)s]);
  }

  FqClassSummary summary;
  SmallMat jm = signature_gram(kind, dim, q);
  SmallMat work, t1, t2;
  std::map<int32_t, std::pair<int, int>> signature_of_root;
  for (int64_t s = 0; s < states; ++s) {
    int32_t root = uf.find((int32_t)s);
    if (signature_of_root.count(root)) continue;
    decode_state(s, layout, q, work);
    signature_of_root[root] = state_signature(kind, work, jm, q, t1, t2);
  }
  for (const auto& [root, sig] : signature_of_root) ++summary.orbits_by_signature[sig];
  summary.class_count = (long)summary.orbits_by_signature.size();
  if (kind == OrbitCase::d_type) {
    auto it = summary.orbits_by_signature.find({dim / 2, 0});
    if (it != summary.orbits_by_signature.end()) summary.class_count += it->second - 1;
  }
  return summary;
}

std::set<std::pair<int, int>> fq_signature_scan(OrbitCase kind, int k, int dim, int q) {
  if (q != 3 && q != 5) throw std::invalid_argument("oracle supports q = 3 or 5");
  CellLayout layout = make_layout(kind, k, dim);
  int64_t states = ipow(q, (int)layout.cells.size());
  SmallMat jm = signature_gram(kind, dim, q);
  std::set<std::pair<int, int>> out;
#pragma omp parallel
  {
    SmallMat work, t1, t2;
    std::set<std::pair<int, int>> local;
#pragma omp for schedule(static)
    for (int64_t s = 0; s < states; ++s) {
      decode_state(s, layout, q, work);
      local.insert(state_signature(kind, work, jm, q, t1, t2));
    }
#pragma omp critical
    out.insert(local.begin(), local.end());
  }
  return out;
}

Mat random_isometry(const BilinearSpace& space, std::mt19937_64& rng, int steps) {
  int d = space.dim, q = d / 2;
  bool skew = space.symmetry == Symmetry::skew;
  Mat s = Mat::identity(d);
  auto apply = [&](const Mat& g) { s = s * g; };
  std::uniform_int_distribution<int> kind_dist(0, 3);
  std::uniform_int_distribution<int> pair_dist(0, std::max(0, q - 1));
  std::uniform_int_distribution<int> shift_dist(-3, 3);
  for (int step = 0; step < steps && q >= 1; ++step) {
    int i = pair_dist(rng), j = pair_dist(rng);
    int fi = f_index(d, i), fj = f_index(d, j);
    Mat g = Mat::identity(d);
    switch (kind_dist(rng)) {
      case 0: {  // swap hyperbolic pairs i and j
        if (i == j) continue;
        g.at(i, i) = g.at(j, j) = g.at(fi, fi) = g.at(fj, fj) = 0;
        g.at(i, j) = g.at(j, i) = g.at(fi, fj) = g.at(fj, fi) = 1;
        break;
      }
      case 1: {  // torus scaling on pair i
        int t = shift_dist(rng);
        if (t == 0) continue;
        Rat c = t > 0 ? Rat(t + 1) : Rat(1, 1 - t);
        g.at(i, i) = c;
        g.at(fi, fi) = 1 / c;
        break;
      }
      case 2: {  // flip pair i
        g.at(i, i) = g.at(fi, fi) = 0;
        g.at(i, fi) = 1;
        g.at(fi, i) = skew ? Rat(-1) : Rat(1);
        break;
      }
      default: {  // shear between pairs i and j: e_i += t e_j, f_j -= t f_i
        if (i == j) continue;
        int t = shift_dist(rng);
        g.at(i, j) = t;
        g.at(fj, fi) = -t;
        break;
      }
    }
    apply(g);
  }
  if (!skew && d % 2 == 1) {
    // Mix the middle vector in through a random rational reflection.
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int tries = 0; tries < 64; ++tries) {
      Mat v(1, d);
      for (int a = 0; a < d; ++a) v.at(0, a) = entry(rng);
      Mat norm = v * space.gram * v.transposed();
      if (norm.at(0, 0) == 0) continue;
      Mat jv = space.gram * v.transposed();  // column
      Mat g = Mat::identity(d);
      Rat c = Rat(2) / norm.at(0, 0);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) g.at(a, b) -= c * jv.at(a, 0) * v.at(0, b);
      apply(g);
      break;
    }
  }
  Mat check = s * space.gram * s.transposed();
  if (!(check == space.gram)) throw std::logic_error("isometry construction failed");
  return s;
}

Mat random_invertible(int k, std::mt19937_64& rng, int steps) {
  Mat m = Mat::identity(k);
  std::uniform_int_distribution<int> row_dist(0, k - 1);
  std::uniform_int_distribution<int> t_dist(-3, 3);
  std::uniform_int_distribution<int> op_dist(0, 2);
  for (int step = 0; step < steps; ++step) {
    int i = row_dist(rng), j = row_dist(rng);
    switch (op_dist(rng)) {
      case 0: {
        if (i == j) continue;
        for (int c = 0; c < k; ++c) {
          Rat t = m.at(i, c);
          m.at(i, c) = m.at(j, c);
          m.at(j, c) = t;
        }
        break;
      }
      case 1: {
        int t = t_dist(rng);
        if (t == 0 || i == j) continue;
        for (int c = 0; c < k; ++c) m.at(i, c) += Rat(t) * m.at(j, c);
        break;
      }
      default: {
        int t = t_dist(rng);
        Rat c = t >= 0 ? Rat(t + 1) : Rat(1, -t);
        for (int col = 0; col < k; ++col) m.at(i, col) *= c;
        break;
      }
    }
  }
  return m;
}

}  // namespace chevalley
