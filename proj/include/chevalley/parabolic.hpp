#pragma once

#include <optional>
#include <string>

#include "chevalley/chevalley_basis.hpp"

namespace chevalley {

// One simple factor of the Levi subalgebra. `ambient_nodes[c]` is the
// ambient 1-based node playing the role of node c+1 in the factor's own
// Bourbaki numbering. Types are canonicalized (a chain is always A, a
// rank-2 double edge is C2).
struct LeviComponent {
  CartanType type;
  std::vector<int> ambient_nodes;
};

struct ParabolicGrading {
  CartanType kind;
  std::vector<int> marked;  // 1-based node indices, sorted
  // grade[r] of a positive root = sum of its coefficients at marked nodes.
  std::vector<int> grade;
  // pieces[i-1] lists the positive-root indices of u_i; levi_roots the
  // grade-zero ones.
  std::vector<std::vector<int>> pieces;
  std::vector<int> levi_roots;
  std::vector<LeviComponent> levi;

  int num_pieces() const { return (int)pieces.size(); }
  bool is_marked(int node) const;
};

// Grades the positive roots by their marked coefficients. Throws
// std::invalid_argument on out-of-range or duplicate nodes.
ParabolicGrading grade_nilradical(const RootSystem& sys, std::vector<int> marked);

std::vector<CartanType> levi_type(const ParabolicGrading& g);

struct ModuleDescriptor {
  int piece = 0;  // 1-based
  int dim = 0;
  Root highest;             // the unique Levi-highest root of the piece
  std::map<int, int> weight;  // unmarked ambient node -> nonzero pairing
  mpz_class weyl_dim;       // dimension via the Weyl formula over the Levi
  std::string action;       // e.g. "w1+w8", "2w3", "trivial"
};

// Descriptor of u_i; requires 1 <= i <= num_pieces.
ModuleDescriptor module_descriptor(const ParabolicGrading& g, int i);

struct Realization {
  CartanType kind;
  int node = 0;
};

// Finds the smallest maximal parabolic whose first piece realizes u_i of
// (kind, node) as a module with the same acting Levi factors, weights (up to
// diagram automorphism) and dimension. Search order: family A..G, then rank,
// then node. Returns none when i exceeds the number of pieces.
std::optional<Realization> first_piece_realization(CartanType kind, int node, int i);

// True when the two marked diagrams differ by a diagram automorphism (equal
// parabolics up to relabeling), e.g. (A5,2) ~ (A5,4) or (E6,3) ~ (E6,5).
bool realization_equivalent(const Realization& a, const Realization& b);

// Recomputes the lower central series of the nilradical from brackets and
// checks it descends exactly through the graded tails u_i + u_{i+1} + ...
bool lower_central_series_check(const ChevalleyBasis& basis, const ParabolicGrading& g);

// Display name of a Levi factor in split-form notation, e.g. "SL(3)",
// "SO(5,4)", "Sp(6)", "E7".
std::string levi_factor_name(CartanType t);

// Diagram automorphisms of a type, as permutations of 0-based node indices.
std::vector<std::vector<int>> diagram_automorphisms(CartanType t);

}  // namespace chevalley
