#pragma once

#include "chevalley/chevalley_basis.hpp"

namespace chevalley {

// Faithful matrix model of a small highest-weight module, with one basis
// vector per weight line. Root vectors act by shifting weights, so the
// matrices stay sparse.
struct Representation {
  CartanType kind;
  int fundamental = 0;  // 1-based index of the highest weight
  int dim = 0;
  // weights[w][i] = <mu_w, alpha_i^vee>
  std::vector<std::vector<int>> weights;
  // One matrix per root index of the acting algebra (positive then negative).
  std::vector<SparseMat> action;

  const SparseMat& matrix(int root_index) const { return action[root_index]; }

  // diag(<mu_w, alpha_i^vee>), the image of H_i (0-based i).
  SparseMat cartan_matrix(int i) const;

  // Image of a general element.
  SparseMat act(const AlgebraElement& x) const;
};

// Builds the module with highest weight the `fundamental`-th fundamental
// weight (1-based). Supported: all A_n fundamentals, the vector module of
// B_n, the vector and the two half-spin modules of D_n, the 27-dimensional
// modules of E6 (indices 1, 6) and the 56-dimensional module of E7 (index 7).
// Throws std::invalid_argument otherwise. Every bracket relation of the
// returned module is checked against the structure constants; a failure
// throws std::logic_error (it would mean the construction is inconsistent).
Representation build_small_rep(const ChevalleyBasis& basis, int fundamental);
Representation build_small_rep(CartanType kind, int fundamental);

// The relation scan used at construction time, exposed for the test suite:
// returns the number of failing generator pairs.
long representation_violations(const ChevalleyBasis& basis, const Representation& rep);

}  // namespace chevalley
