#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevalley {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Family family;
  int rank;

  bool operator==(const CartanType& o) const {
    return family == o.family && rank == o.rank;
  }
  bool operator<(const CartanType& o) const {
    if (family != o.family) return family < o.family;
    return rank < o.rank;
  }
  std::string name() const { return std::string(1, char(family)) + std::to_string(rank); }
};

// Parses a token like "A3" or "E7"; throws std::invalid_argument with a
// message on malformed tokens or ranks outside the family's legal range
// (A>=1, B>=2, C>=2, D>=3, E in 6..8, F=4, G=2).
CartanType parse_cartan_type(const std::string& token);

// A root stored as integer coordinates over the simple roots (Bourbaki
// numbering). Positive roots have all coordinates >= 0.
struct Root {
  std::vector<int> coeffs;

  int height() const {
    int h = 0;
    for (int c : coeffs) h += c;
    return h;
  }
  bool operator==(const Root& o) const { return coeffs == o.coeffs; }
  bool operator<(const Root& o) const {
    int ha = height(), hb = o.height();
    if (ha != hb) return ha < hb;
    return coeffs < o.coeffs;
  }
};

struct RootSystem {
  CartanType kind;
  // cartan[i][j] = <alpha_j, alpha_i^vee>, 0-based node indices.
  std::vector<std::vector<int>> cartan;
  // Minimal positive integers d with d[i]*cartan[i][j] symmetric; the squared
  // length of alpha_i in the induced form is 2*d[i].
  std::vector<int> symmetrizer;
  // All positive roots sorted by height, ties broken by coordinate order.
  std::vector<Root> positive_roots;

  int rank() const { return kind.rank; }
  int num_positive() const { return (int)positive_roots.size(); }
  const Root& highest_root() const { return positive_roots.back(); }

  // Index into positive_roots, or -1 when the vector is not a positive root.
  int index_of(const std::vector<int>& coeffs) const;

  // <beta, alpha_i^vee> for an arbitrary integer combination beta (0-based i).
  int pair_simple_coroot(const std::vector<int>& beta, int i) const;

  // Coefficients c with H_beta = sum c_j H_j for a root beta; always integral.
  std::vector<int> coroot_coeffs(const Root& beta) const;

 private:
  std::map<std::vector<int>, int> index_;
  friend RootSystem build_root_system(CartanType);
};

RootSystem build_root_system(CartanType kind);

// Root labels are coefficient strings in simple-root order, e.g. "2234321"
// for the highest root of E7 or "122321" for the one of E6. Coefficients are
// single digits for every supported type.
std::string root_label(const Root& r);
Root parse_root_label(const RootSystem& sys, const std::string& label);

// Cartan matrix of a standard Bourbaki type (used both by build_root_system
// and by the Levi classifier's expected-shape tables).
std::vector<std::vector<int>> cartan_matrix(CartanType kind);

}  // namespace chevalley
