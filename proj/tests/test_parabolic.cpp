#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chevalley/parabolic.hpp"
#include "chevalley/summary_data.hpp"

using namespace chevalley;

namespace {

std::vector<int> piece_dims(const ParabolicGrading& g) {
  std::vector<int> out;
  for (const auto& p : g.pieces) out.push_back((int)p.size());
  return out;
}

ParabolicGrading at(const char* type, int node) {
  return grade_nilradical(build_root_system(parse_cartan_type(type)), {node});
}

}  // namespace

TEST_CASE("grading dimensions at the benchmark nodes") {
  CHECK(piece_dims(at("E8", 4)) == std::vector<int>{30, 30, 20, 15, 6, 5});
  CHECK(piece_dims(at("E7", 3)) == std::vector<int>{30, 15, 2});
  CHECK(piece_dims(at("F4", 3)) == std::vector<int>{6, 9, 2, 3});
  CHECK(piece_dims(at("E7", 7)) == std::vector<int>{27});
  CHECK(piece_dims(at("G2", 1)) == std::vector<int>{2, 1, 2});
  CHECK(piece_dims(at("D4", 2)) == std::vector<int>{8, 1});
}

TEST_CASE("the number of pieces is the marked coefficient of the highest root") {
  for (const char* type : {"D5", "E6", "E7", "E8", "F4", "G2"}) {
    RootSystem sys = build_root_system(parse_cartan_type(type));
    for (int node = 1; node <= sys.rank(); ++node) {
      auto g = grade_nilradical(sys, {node});
      CHECK(g.num_pieces() == sys.highest_root().coeffs[node - 1]);
      int total = 0;
      for (const auto& p : g.pieces) total += (int)p.size();
      CHECK(total + (int)g.levi_roots.size() == sys.num_positive());
      for (int idx : g.levi_roots) CHECK(g.grade[idx] == 0);
    }
  }
}

TEST_CASE("Levi types and components") {
  auto g = at("E8", 4);
  CHECK(levi_type(g) ==
        std::vector<CartanType>{{Family::A, 2}, {Family::A, 1}, {Family::A, 4}});
  REQUIRE(g.levi.size() == 3);
  CHECK(g.levi[0].ambient_nodes == std::vector<int>{1, 3});
  CHECK(g.levi[1].ambient_nodes == std::vector<int>{2});
  CHECK(g.levi[2].ambient_nodes == std::vector<int>{5, 6, 7, 8});

  auto e7 = at("E7", 7);
  CHECK(levi_type(e7) == std::vector<CartanType>{{Family::E, 6}});

  // rank-2 subdiagram with a double edge is reported as C2
  auto f4 = at("F4", 1);
  CHECK(levi_type(f4) == std::vector<CartanType>{{Family::C, 3}});
}

TEST_CASE("module descriptors reproduce the expected actions") {
  auto g = at("E8", 5);
  auto d1 = module_descriptor(g, 1);
  CHECK(d1.dim == 40);
  CHECK(d1.action == "w3+w8");
  CHECK(d1.weyl_dim == 40);

  auto d2 = module_descriptor(g, 2);
  CHECK(d2.dim == 30);
  CHECK(d2.action == "w2+w7");

  CHECK(module_descriptor(at("E7", 7), 1).action == "w1");
  CHECK(module_descriptor(at("D4", 2), 1).action == "w1+w3+w4");
  CHECK(module_descriptor(at("G2", 2), 1).action == "3w1");
  CHECK(module_descriptor(at("F4", 2), 1).action == "w1+2w4");
  CHECK(module_descriptor(at("E7", 1), 2).action == "trivial");
  CHECK_THROWS_AS(module_descriptor(g, 0), std::invalid_argument);
  CHECK_THROWS_AS(module_descriptor(g, 7), std::invalid_argument);
}

TEST_CASE("Weyl dimension agrees with the root count for every summary piece") {
  for (const auto& row : node_summaries()) {
    RootSystem sys = build_root_system(row.kind);
    auto g = grade_nilradical(sys, {row.node});
    for (int i = 1; i <= g.num_pieces(); ++i) {
      auto d = module_descriptor(g, i);
      CHECK(d.weyl_dim == d.dim);
    }
  }
}

TEST_CASE("first-piece realizations land on the stated smaller groups") {
  auto want = [](const char* type, int node) {
    return Realization{parse_cartan_type(type), node};
  };
  auto got = first_piece_realization({Family::E, 8}, 5, 2);
  REQUIRE(got.has_value());
  CHECK(realization_equivalent(*got, want("D8", 5)));

  got = first_piece_realization({Family::E, 8}, 2, 2);
  REQUIRE(got.has_value());
  CHECK(realization_equivalent(*got, want("D8", 8)));

  got = first_piece_realization({Family::E, 7}, 3, 2);
  REQUIRE(got.has_value());
  CHECK(realization_equivalent(*got, want("D6", 6)));

  got = first_piece_realization({Family::E, 8}, 4, 3);
  REQUIRE(got.has_value());
  CHECK(realization_equivalent(*got, want("E6", 3)));

  got = first_piece_realization({Family::G, 2}, 1, 3);
  REQUIRE(got.has_value());
  CHECK(realization_equivalent(*got, want("A2", 1)));
}

TEST_CASE("realization equivalence respects diagram symmetry only") {
  auto eq = [](const char* ta, int na, const char* tb, int nb) {
    return realization_equivalent({parse_cartan_type(ta), na},
                                  {parse_cartan_type(tb), nb});
  };
  CHECK(eq("A3", 1, "A3", 3));
  CHECK(eq("D5", 4, "D5", 5));
  CHECK(eq("A8", 2, "A8", 7));
  CHECK(eq("E6", 3, "E6", 5));
  CHECK(eq("D8", 7, "D8", 8));
  CHECK(!eq("D6", 3, "D6", 1));
  CHECK(!eq("A3", 1, "A3", 2));
  CHECK(!eq("A3", 1, "A4", 1));
}

TEST_CASE("lower central series matches the grading filtration") {
  for (auto [type, node] : std::vector<std::pair<const char*, int>>{
           {"E6", 4}, {"F4", 2}, {"G2", 1}, {"E7", 4}, {"D5", 3}}) {
    ChevalleyBasis b(build_root_system(parse_cartan_type(type)));
    auto g = grade_nilradical(b.system(), {node});
    CAPTURE(type);
    CHECK(lower_central_series_check(b, g));
  }
}
