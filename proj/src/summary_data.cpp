#include "chevalley/summary_data.hpp"

#include <sstream>

namespace chevalley {

namespace {

PieceSummary p(int piece, int dim, const char* action) {
  return {piece, dim, action, std::nullopt};
}

PieceSummary p(int piece, int dim, const char* action, const char* ref, int node) {
  return {piece, dim, action, Realization{parse_cartan_type(ref), node}};
}

NodeSummary row(const char* kind, int node, const char* levi,
                std::vector<PieceSummary> pieces) {
  NodeSummary s;
  s.kind = parse_cartan_type(kind);
  s.node = node;
  std::istringstream in(levi);
  std::string tok;
  while (in >> tok) s.levi.push_back(parse_cartan_type(tok));
  s.pieces = std::move(pieces);
  return s;
}

}  // namespace

const std::vector<NodeSummary>& node_summaries() {
  static const std::vector<NodeSummary> table = {
      row("D4", 1, "A3", {p(1, 6, "w2")}),
      row("D4", 2, "A1 A1 A1", {p(1, 8, "w1+w3+w4"), p(2, 1, "trivial")}),

      row("D5", 1, "D4", {p(1, 8, "w2")}),
      row("D5", 2, "A1 A3", {p(1, 12, "w1+w3"), p(2, 1, "trivial")}),
      row("D5", 3, "A2 A1 A1", {p(1, 12, "w1+w4+w5"), p(2, 3, "w2", "A3", 3)}),
      row("D5", 4, "A4", {p(1, 10, "w2")}),
      row("D5", 5, "A4", {p(1, 10, "w2")}),

      row("E6", 1, "D5", {p(1, 16, "w2")}),
      row("E6", 2, "A5", {p(1, 20, "w4"), p(2, 1, "trivial")}),
      row("E6", 3, "A1 A4", {p(1, 20, "w1+w5"), p(2, 5, "w2")}),
      row("E6", 4, "A2 A1 A2",
          {p(1, 18, "w1+w2+w6"), p(2, 9, "w3+w5", "A5", 3), p(3, 2, "w2")}),
      row("E6", 5, "A4 A1", {p(1, 20, "w3+w6"), p(2, 5, "w2")}),
      row("E6", 6, "D5", {p(1, 16, "w2")}),

      row("E7", 1, "D6", {p(1, 32, "w3"), p(2, 1, "trivial")}),
      row("E7", 2, "A6", {p(1, 35, "w5"), p(2, 7, "w1")}),
      row("E7", 3, "A1 A5",
          {p(1, 30, "w1+w6"), p(2, 15, "w4", "D6", 6), p(3, 2, "w1")}),
      row("E7", 4, "A2 A1 A3",
          {p(1, 24, "w1+w2+w7"), p(2, 18, "w3+w6", "D6", 3),
           p(3, 8, "w2+w5", "A5", 2), p(4, 3, "w1")}),
      row("E7", 5, "A4 A2",
          {p(1, 30, "w3+w7"), p(2, 15, "w2+w6", "A7", 3), p(3, 5, "w1")}),
      row("E7", 6, "D5 A1", {p(1, 32, "w2+w7"), p(2, 10, "w1", "D6", 1)}),
      row("E7", 7, "E6", {p(1, 27, "w1")}),

      row("E8", 1, "D7", {p(1, 64, "w2"), p(2, 14, "w8", "D8", 1)}),
      row("E8", 2, "A7",
          {p(1, 56, "w6"), p(2, 28, "w3", "D8", 8), p(3, 8, "w8")}),
      row("E8", 3, "A1 A6",
          {p(1, 42, "w1+w7"), p(2, 35, "w5", "E7", 2),
           p(3, 14, "w1+w2", "A8", 7), p(4, 7, "w8")}),
      row("E8", 4, "A2 A1 A4",
          {p(1, 30, "w1+w2+w8"), p(2, 30, "w3+w7", "E7", 5),
           p(3, 20, "w2+w6", "E6", 3), p(4, 15, "w1+w5", "A7", 3),
           p(5, 6, "w2+w3", "A4", 2), p(6, 5, "w8")}),
      row("E8", 5, "A4 A3",
          {p(1, 40, "w3+w8"), p(2, 30, "w2+w7", "D8", 5),
           p(3, 20, "w1+w6", "A8", 4), p(4, 10, "w4", "D5", 5),
           p(5, 4, "w8")}),
      row("E8", 6, "D5 A2",
          {p(1, 48, "w2+w8"), p(2, 30, "w1+w7", "D8", 3),
           p(3, 16, "w5", "E6", 1), p(4, 3, "w8")}),
      row("E8", 7, "E6 A1",
          {p(1, 54, "w1+w8"), p(2, 27, "w6", "E7", 7), p(3, 2, "w8")}),
      row("E8", 8, "E7", {p(1, 56, "w7"), p(2, 1, "trivial")}),

      row("F4", 1, "C3", {p(1, 14, "w2"), p(2, 1, "trivial")}),
      row("F4", 2, "A1 A2",
          {p(1, 12, "w1+2w4"), p(2, 6, "2w3", "C3", 3), p(3, 2, "w1")}),
      row("F4", 3, "A2 A1",
          {p(1, 6, "w1+w4"), p(2, 9, "w2+2w4", "B4", 3), p(3, 2, "w4"),
           p(4, 3, "w1")}),
      row("F4", 4, "B3", {p(1, 8, "w3"), p(2, 7, "w1", "B4", 1)}),

      row("G2", 1, "A1", {p(1, 2, "w2"), p(2, 1, "trivial"), p(3, 2, "w2", "A2", 1)}),
      row("G2", 2, "A1", {p(1, 4, "3w1"), p(2, 1, "trivial")}),
  };
  return table;
}

const NodeSummary* find_node_summary(CartanType kind, int node) {
  for (const auto& s : node_summaries())
    if (s.kind == kind && s.node == node) return &s;
  return nullptr;
}

}  // namespace chevalley
