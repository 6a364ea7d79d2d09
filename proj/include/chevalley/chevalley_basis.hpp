#pragma once

#include <map>
#include <vector>

#include "chevalley/linalg.hpp"
#include "chevalley/root_system.hpp"

namespace chevalley {

// Basis of the simple Lie algebra: H_1..H_n (simple coroots) plus one X_a per
// root. Roots are indexed 0..R-1 for the positive roots (in root order) and
// R..2R-1 for their negatives. The structure constants N_{a,b} in
// [X_a, X_b] = N_{a,b} X_{a+b} are fixed by choosing, for every non-simple
// positive gamma, the minimal special pair (xi, eta) and declaring
// N_{xi,eta} = p + 1 > 0, where p is the length of the down-string
// eta - k*xi. Everything else follows from antisymmetry, the sign flip under
// negating both roots, and the Jacobi identity.
class ChevalleyBasis {
 public:
  explicit ChevalleyBasis(RootSystem sys);

  const RootSystem& system() const { return sys_; }
  int num_positive() const { return R_; }
  int num_roots() const { return 2 * R_; }

  bool is_positive(int a) const { return a < R_; }
  int negate(int a) const { return a < R_ ? a + R_ : a - R_; }
  int positive_part(int a) const { return a < R_ ? a : a - R_; }
  const std::vector<int>& signed_coeffs(int a) const { return signed_[a]; }
  int height(int a) const;

  // Index of root(a) + root(b): a root index, or -1 when the sum is zero or
  // not a root.
  int sum_index(int a, int b) const;
  bool sum_is_zero(int a, int b) const { return negate(a) == b; }

  // Length p of the string root(b) - k*root(a), k = 1..p.
  int p_value(int a, int b) const;

  // N_{a,b}; requires root(a) + root(b) to be a root.
  int n_constant(int a, int b) const;

  // The minimal special pair (xi, eta) summing to the non-simple positive
  // root with index gamma; xi < eta as positive indices.
  std::pair<int, int> defining_pair(int gamma) const;

  // Coefficients of H_{root(a)} over H_1..H_n (negated for negative roots).
  std::vector<int> coroot(int a) const;

 private:
  int n_recurse(int a, int b);

  RootSystem sys_;
  int R_;
  std::vector<std::vector<int>> signed_;
  std::vector<std::pair<int, int>> pair_;  // per positive index; (-1,-1) for simples
  std::vector<std::vector<int>> coroot_;   // per positive index
  std::vector<int> sum_;                   // flattened (2R)^2 sum-index table
  std::vector<int> ntab_;                  // flattened constants, INT_MIN = undefined
};

// Convenience spelling: the basis construction is the structure-constant table.
inline ChevalleyBasis structure_constants(const RootSystem& sys) {
  return ChevalleyBasis(sys);
}

// Element x = sum cartan[i] H_i + sum root_part[a] X_a of the algebra.
struct AlgebraElement {
  CartanType kind;
  std::vector<Rat> cartan;
  std::map<int, Rat> root_part;

  bool is_zero() const;
  void add_root(int index, const Rat& c);
  void add_cartan(int i, const Rat& c);
  AlgebraElement scaled(const Rat& c) const;
  bool operator==(const AlgebraElement& o) const;
};

AlgebraElement zero_element(const ChevalleyBasis& basis);
AlgebraElement root_vector(const ChevalleyBasis& basis, int index);
AlgebraElement cartan_element(const ChevalleyBasis& basis, const std::vector<Rat>& coeffs);
AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);

// [x, y]; throws std::invalid_argument when the elements belong to different
// root systems.
AlgebraElement bracket(const ChevalleyBasis& basis, const AlgebraElement& x,
                       const AlgebraElement& y);

// Number of Jacobi-identity violations over all triples of root vectors;
// OpenMP-parallel with a serial fallback used as the reference in tests.
long jacobi_violations_parallel(const ChevalleyBasis& basis);
long jacobi_violations_serial(const ChevalleyBasis& basis);

}  // namespace chevalley
