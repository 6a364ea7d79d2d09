#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chevalley/parabolic.hpp"

namespace chevalley {

// Expected shape of one graded piece of a maximal parabolic's nilradical,
// in ambient node numbering (see ModuleDescriptor::action).
struct PieceSummary {
  int piece = 0;  // 1-based
  int dim = 0;
  std::string action;
  // stated smallest group whose first piece realizes the same module
  std::optional<Realization> crossref;
};

// Expected Levi type and piece list for one marked node of the D4/D5 and
// exceptional groups covered by the orbit catalog.
struct NodeSummary {
  CartanType kind{Family::A, 1};
  int node = 0;
  std::vector<CartanType> levi;  // nonabelian factors, by smallest node
  std::vector<PieceSummary> pieces;
};

// All 34 covered (group, node) rows: D4 nodes 1-2, D5 nodes 1-5, E6 nodes
// 1-6, E7 nodes 1-7, E8 nodes 1-8, F4 nodes 1-4, G2 nodes 1-2.
const std::vector<NodeSummary>& node_summaries();

const NodeSummary* find_node_summary(CartanType kind, int node);

}  // namespace chevalley
