#include "chevalley/chain_lemma.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace chevalley {

namespace {

// Sparse exact polynomial; monomials are sorted (variable, exponent) lists.
using Mono = std::vector<std::pair<int, int>>;

struct Poly {
  std::map<Mono, Rat> terms;

  void add(const Mono& m, const Rat& c) {
    auto it = terms.find(m);
    if (it == terms.end()) {
      if (!(c == Rat(0))) terms.emplace(m, c);
      return;
    }
    it->second += c;
    if (it->second == Rat(0)) terms.erase(it);
  }
  bool zero() const { return terms.empty(); }
};

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) out.push_back(a[i++]);
    else if (i == a.size() || b[j].first < a[i].first) out.push_back(b[j++]);
    else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    }
  }
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) out.add(mono_mul(ma, mb), ca * cb);
  return out;
}

void substitute_zero(Poly& p, int var) {
  for (auto it = p.terms.begin(); it != p.terms.end();) {
    bool hit = false;
    for (const auto& [v, e] : it->first)
      if (v == var) {
        hit = true;
        break;
      }
    it = hit ? p.terms.erase(it) : std::next(it);
  }
}

// var index and power when p is exactly (nonzero const) * c_v^e, else -1.
std::pair<int, int> single_variable_form(const Poly& p) {
  if (p.terms.size() != 1) return {-1, 0};
  const Mono& m = p.terms.begin()->first;
  if (m.size() != 1) return {-1, 0};
  return {m[0].first, m[0].second};
}

// Sparse matrix of polynomials, row-major cells.
struct PolyMat {
  int dim = 0;
  std::vector<std::map<int, Poly>> rows;  // col -> entry

  explicit PolyMat(int d) : dim(d), rows(d) {}
  void add(int i, int j, const Poly& p) {
    Poly& cell = rows[i][j];
    for (const auto& [m, c] : p.terms) cell.add(m, c);
    if (cell.zero()) rows[i].erase(j);
  }
};

PolyMat poly_square(const PolyMat& m) {
  PolyMat out(m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (const auto& [t, p] : m.rows[i])
      for (const auto& [j, q] : m.rows[t]) out.add(i, j, poly_mul(p, q));
  return out;
}

void substitute_zero(PolyMat& m, int var) {
  for (auto& row : m.rows)
    for (auto it = row.begin(); it != row.end();) {
      substitute_zero(it->second, var);
      it = it->second.zero() ? row.erase(it) : std::next(it);
    }
}

struct ChainStage {
  ChevalleyBasis basis;
  Representation rep;
  int node;  // 0-based index of the deleted node
};

ChainStage build_stage(int n) {
  CartanType kind = n == 5 ? CartanType{Family::D, 5} : CartanType{Family::E, n};
  ChevalleyBasis basis(build_root_system(kind));
  int fundamental = n == 7 ? 7 : 1;
  Representation rep = build_small_rep(basis, fundamental);
  return {std::move(basis), std::move(rep), n - 1};
}

std::array<int, 4> to_array4(const std::vector<int>& v) {
  std::array<int, 4> a{};
  std::copy_n(v.begin(), 4, a.begin());
  return a;
}

// Determinant of the 4x4 polynomial submatrix on (rows, cols); the entries
// here are affine, so the result has degree <= 4.
Poly minor_det(const PolyMat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::array<const Poly*, 16> cell{};
  static const Poly kZero;
  for (int i = 0; i < 4; ++i) {
    auto& row = m.rows[rows[i]];
    for (int j = 0; j < 4; ++j) {
      auto it = row.find(cols[j]);
      cell[i * 4 + j] = it == row.end() ? &kZero : &it->second;
    }
  }
  Poly det;
  int perm[4] = {0, 1, 2, 3};
  do {
    int sign = 1;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Poly prod;
    prod.add({}, Rat(sign));
    bool dead = false;
    for (int i = 0; i < 4 && !dead; ++i) {
      const Poly& e = *cell[i * 4 + perm[i]];
      if (e.zero()) dead = true;
      else prod = poly_mul(prod, e);
    }
    if (!dead)
      for (const auto& [mono, c] : prod.terms) det.add(mono, c);
  } while (std::next_permutation(perm, perm + 4));
  return det;
}

}  // namespace

ChainReport verify_chain_lemma(int n) {
  if (n < 5 || n > 7) throw std::invalid_argument("supported stages are n = 5, 6, 7");
  ChainStage st = build_stage(n);
  const RootSystem& sys = st.basis.system();
  ChainReport report;
  report.n = n;
  report.ambient = sys.kind;
  report.rep_dim = st.rep.dim;

  report.radical_abelian = true;
  std::vector<int> primed;  // root indices with zero last-node coefficient
  for (int a = 0; a < st.basis.num_positive(); ++a) {
    int c = sys.positive_roots[a].coeffs[st.node];
    if (c == 0) primed.push_back(a);
    if (c > 1) report.radical_abelian = false;
  }
  report.coefficient_count = (int)primed.size();

  int gen_index = sys.index_of([&] {
    std::vector<int> e(sys.rank(), 0);
    e[st.node] = 1;
    return e;
  }());
  SparseMat gen = st.rep.matrix(gen_index);
  report.square_vanishes = (gen * gen).is_zero();
  report.generator_rank = rank(gen.dense());

  // M(c) = sum_a c_a rho(X_a) + rho(X_last); variables indexed by position
  // in `primed`.
  PolyMat m(st.rep.dim);
  for (int v = 0; v < (int)primed.size(); ++v) {
    const SparseMat& x = st.rep.matrix(primed[v]);
    for (int i = 0; i < x.rows(); ++i)
      for (const auto& [j, c] : x.row(i)) {
        Poly p;
        p.add({{v, 1}}, c);
        m.add(i, j, p);
      }
  }
  for (int i = 0; i < gen.rows(); ++i)
    for (const auto& [j, c] : gen.row(i)) {
      Poly p;
      p.add({}, c);
      m.add(i, j, p);
    }

  PolyMat sq = poly_square(m);
  std::vector<bool> alive(primed.size(), true);
  for (bool progress = true; progress;) {
    progress = false;
    for (int i = 0; i < sq.dim && !progress; ++i)
      for (const auto& [j, p] : sq.rows[i]) {
        auto [var, power] = single_variable_form(p);
        if (var < 0) continue;
        report.eliminated.push_back(
            {root_label(sys.positive_roots[primed[var]]), i, j, power});
        alive[var] = false;
        substitute_zero(sq, var);
        progress = true;
        break;
      }
  }
  for (size_t v = 0; v < primed.size(); ++v)
    if (alive[v]) report.residual.push_back(root_label(sys.positive_roots[primed[v]]));

  if (report.residual.empty()) {
    // With every coefficient eliminated the leftover entries are the constant
    // terms, i.e. the square of the bare generator; they must all be gone.
    bool square_now_zero = true;
    for (const auto& row : sq.rows) square_now_zero = square_now_zero && row.empty();
    report.passed = report.radical_abelian && report.square_vanishes && square_now_zero;
    return report;
  }

  // Rank phase for the residual coefficients: every 4x4 minor of
  // M(residual) must vanish on a rank <= 3 element, and minors that reduce
  // to a single residual coefficient power force it to zero. Since the bare
  // generator has rank 2, rank >= 4 excludes the smallest orbit.
  PolyMat nres(st.rep.dim);
  std::vector<int> res_vars;
  for (int v = 0; v < (int)primed.size(); ++v)
    if (alive[v]) res_vars.push_back(v);
  for (int v : res_vars) {
    const SparseMat& x = st.rep.matrix(primed[v]);
    for (int i = 0; i < x.rows(); ++i)
      for (const auto& [j, c] : x.row(i)) {
        Poly p;
        p.add({{v, 1}}, c);
        nres.add(i, j, p);
      }
  }
  for (int i = 0; i < gen.rows(); ++i)
    for (const auto& [j, c] : gen.row(i)) {
      Poly p;
      p.add({}, c);
      nres.add(i, j, p);
    }

  std::vector<bool> res_alive(primed.size(), false);
  for (int v : res_vars) res_alive[v] = true;
  long remaining = (long)res_vars.size();
  for (bool progress = true; progress && remaining > 0;) {
    progress = false;
    // Rows and columns that still touch a nonzero entry.
    std::vector<int> live_rows;
    std::map<int, std::vector<int>> col_rows;
    for (int i = 0; i < nres.dim; ++i)
      if (!nres.rows[i].empty()) live_rows.push_back(i);
    std::vector<int> live_cols;
    {
      std::vector<bool> seen(nres.dim, false);
      for (int i : live_rows)
        for (const auto& [j, p] : nres.rows[i]) seen[j] = true;
      for (int j = 0; j < nres.dim; ++j)
        if (seen[j]) live_cols.push_back(j);
    }
    int nr = (int)live_rows.size(), nc = (int)live_cols.size();
    std::vector<int> ri(4), ci(4);
    for (ri[0] = 0; ri[0] < nr - 3 && !progress; ++ri[0])
      for (ri[1] = ri[0] + 1; ri[1] < nr - 2 && !progress; ++ri[1])
        for (ri[2] = ri[1] + 1; ri[2] < nr - 1 && !progress; ++ri[2])
          for (ri[3] = ri[2] + 1; ri[3] < nr && !progress; ++ri[3])
            for (ci[0] = 0; ci[0] < nc - 3 && !progress; ++ci[0])
              for (ci[1] = ci[0] + 1; ci[1] < nc - 2 && !progress; ++ci[1])
                for (ci[2] = ci[1] + 1; ci[2] < nc - 1 && !progress; ++ci[2])
                  for (ci[3] = ci[2] + 1; ci[3] < nc && !progress; ++ci[3]) {
                    std::vector<int> rows{live_rows[ri[0]], live_rows[ri[1]],
                                          live_rows[ri[2]], live_rows[ri[3]]};
                    std::vector<int> cols{live_cols[ci[0]], live_cols[ci[1]],
                                          live_cols[ci[2]], live_cols[ci[3]]};
                    Poly det = minor_det(nres, rows, cols);
                    auto [var, power] = single_variable_form(det);
                    if (var < 0 || !res_alive[var]) continue;
                    report.minor_steps.push_back({to_array4(rows), to_array4(cols),
                                                  root_label(sys.positive_roots[primed[var]]),
                                                  power});
                    res_alive[var] = false;
                    --remaining;
                    substitute_zero(nres, var);
                    progress = true;
                  }
  }
  report.rank_certificate = remaining == 0;

  if (!report.rank_certificate) {
    // Deterministically seeded random sampling: check that every sampled
    // nonzero residual assignment escapes the smallest orbit (square nonzero
    // or rank >= 4). This cannot certify the universal claim, so a pass here
    // is flagged as randomized.
    report.randomized_fallback = true;
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> num(-7, 7);
    bool all_escape = true;
    for (int trial = 0; trial < 200 && all_escape; ++trial) {
      std::vector<Rat> point(primed.size(), Rat(0));
      bool nonzero = false;
      for (int v : res_vars) {
        int t = num(rng);
        point[v] = Rat(t, 1 + (trial % 3));
        nonzero = nonzero || t != 0;
      }
      if (!nonzero) continue;
      Mat val(st.rep.dim, st.rep.dim);
      for (int v : res_vars) {
        const SparseMat& x = st.rep.matrix(primed[v]);
        for (int i = 0; i < x.rows(); ++i)
          for (const auto& [j, c] : x.row(i)) val.at(i, j) += point[v] * c;
      }
      for (int i = 0; i < gen.rows(); ++i)
        for (const auto& [j, c] : gen.row(i)) val.at(i, j) += c;
      bool escapes = !(val * val).is_zero() || rank(val) >= 4;
      all_escape = all_escape && escapes;
    }
    report.passed = report.radical_abelian && report.square_vanishes &&
                    report.generator_rank == 2 && all_escape;
    return report;
  }

  report.passed = report.radical_abelian && report.square_vanishes &&
                  report.generator_rank == 2 && report.rank_certificate;
  return report;
}

std::string chain_report_text(const ChainReport& r) {
  std::ostringstream os;
  os << "stage n=" << r.n << " ambient " << r.ambient.name() << " module dim " << r.rep_dim
     << "\n";
  os << "coefficients " << r.coefficient_count << ", radical abelian "
     << (r.radical_abelian ? "yes" : "no") << ", generator squares to zero "
     << (r.square_vanishes ? "yes" : "no") << ", generator rank " << r.generator_rank << "\n";
  os << "entry scan eliminated " << r.eliminated.size() << ":";
  for (const auto& e : r.eliminated)
    os << " " << e.root_label << "@(" << e.row << "," << e.col << ")^" << e.power;
  os << "\n";
  if (!r.residual.empty()) {
    os << "residual:";
    for (const auto& s : r.residual) os << " " << s;
    os << "\n";
    os << "minor eliminations " << r.minor_steps.size() << ":";
    for (const auto& s : r.minor_steps) os << " " << s.root_label << "^" << s.power;
    os << "\n";
    os << "rank certificate " << (r.rank_certificate ? "yes" : "no") << "\n";
  }
  if (r.randomized_fallback) os << "randomized fallback engaged\n";
  os << (r.passed ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace chevalley
