#pragma once

#include <array>
#include <string>
#include <vector>

#include "chevalley/representation.hpp"

namespace chevalley {

// One coefficient forced to vanish by a matrix entry of the squared element:
// after the earlier substitutions, entry (row, col) reduced to a nonzero
// constant times c^power for the named root's coefficient.
struct EliminationStep {
  std::string root_label;
  int row = 0;
  int col = 0;
  int power = 1;
};

// One coefficient forced to vanish by a 4x4 minor in the rank phase: the
// minor on the given rows/columns reduced to a nonzero constant times
// c^power.
struct MinorStep {
  std::array<int, 4> rows{};
  std::array<int, 4> cols{};
  std::string root_label;
  int power = 1;
};

// Result of the embedded-chain obstruction check at one stage. The check
// works in a faithful small module: squaring X + X_{last} must kill every
// coefficient of X over the roots not involving the last node, except for a
// residual set that is instead excluded by a rank jump (rank >= 4 against
// rank 2 for the bare generator).
struct ChainReport {
  int n = 0;  // stage: 7 (E7, dim-56 module), 6 (E6, dim-27), 5 (D5, dim-10)
  CartanType ambient{Family::A, 1};
  int rep_dim = 0;
  int coefficient_count = 0;       // roots with last-node coefficient zero
  bool radical_abelian = false;    // last-node coefficient <= 1 on every root
  bool square_vanishes = false;    // the bare generator squares to zero
  int generator_rank = 0;          // matrix rank of the bare generator
  std::vector<EliminationStep> eliminated;
  std::vector<std::string> residual;  // labels the entry scan cannot kill
  std::vector<MinorStep> minor_steps;
  bool rank_certificate = false;   // minors eliminated every residual label
  bool randomized_fallback = false;
  bool passed = false;
};

// Runs the check for n in {5, 6, 7}. Throws std::invalid_argument otherwise.
ChainReport verify_chain_lemma(int n);

std::string chain_report_text(const ChainReport& r);

}  // namespace chevalley
