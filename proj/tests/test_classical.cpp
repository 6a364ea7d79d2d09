#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "chevalley/classical_orbits.hpp"

using namespace chevalley;

TEST_CASE("every enumerated representative realizes its claimed invariants") {
  for (int k = 1; k <= 3; ++k)
    for (int d = 2; d <= 8; ++d) {
      CAPTURE(k);
      CAPTURE(d);
      auto ssp = split_symmetric_space(d);
      for (const auto& o : enumerate_bilinear_tensor(k, ssp)) {
        auto [ra, wr] = witt_invariants(o.representative, ssp);
        CHECK(ra == o.rank_a);
        CHECK(wr == o.witt_rank);
      }
      if (d % 2 == 0) {
        auto ssk = split_skew_space(d);
        for (const auto& o : enumerate_bilinear_tensor(k, ssk)) {
          auto [ra, wr] = witt_invariants(o.representative, ssk);
          CHECK(ra == o.rank_a);
          CHECK(wr == o.witt_rank);
          CHECK(wr % 2 == 0);
        }
      }
    }
}

TEST_CASE("orbit counts of the four classical actions") {
  // rank classification of matrices
  for (int n1 = 1; n1 <= 8; ++n1)
    for (int n2 = 1; n2 <= 8; ++n2)
      CHECK((int)enumerate_tensor_gl(n1, n2).size() == std::min(n1, n2) + 1);
  // symmetric and antisymmetric squares
  for (int n = 1; n <= 8; ++n) {
    CHECK((int)enumerate_symmetric_square(n).size() == n + 1);
    CHECK((int)enumerate_exterior_square(n).size() == n / 2 + 1);
  }
  // one row into a split quadratic space: rank 0, anisotropic, isotropic
  CHECK(enumerate_bilinear_tensor(1, split_symmetric_space(7)).size() == 3);
  CHECK(enumerate_bilinear_tensor(1, split_symmetric_space(14)).size() == 3);
  // the skew k=2 case and the even-orthogonal split pair
  auto c = enumerate_bilinear_tensor(2, split_skew_space(2));
  CHECK(c.size() == 3);
  auto d = enumerate_bilinear_tensor(2, split_symmetric_space(4));
  int split = 0;
  for (const auto& o : d) split += o.split_tag;
  CHECK(d.size() == 7);
  CHECK(split == 1);
}

TEST_CASE("split pair appears exactly for maximal isotropic images") {
  for (int k = 1; k <= 4; ++k)
    for (int d = 2; d <= 8; d += 2) {
      auto space = split_symmetric_space(d);
      std::set<std::pair<int, int>> tagged;
      int tags = 0, twins = 0;
      for (const auto& o : enumerate_bilinear_tensor(k, space)) {
        if (o.split_tag) {
          ++tags;
          tagged.insert({o.rank_a, o.witt_rank});
          CHECK(o.rank_a == d / 2);
          CHECK(o.witt_rank == 0);
        }
        if (o.rank_a == d / 2 && o.witt_rank == 0) ++twins;
      }
      CAPTURE(k);
      CAPTURE(d);
      if (k >= d / 2) {
        CHECK(tags == 1);
        CHECK(twins == 2);  // the orbit and its mirror
      } else {
        CHECK(tags == 0);
      }
    }
}

TEST_CASE("the wider constraint reading is required and surfaced") {
  CHECK(!narrow_constraint_violations(1, split_symmetric_space(7)).empty());
  // the k=1 isotropic orbit is exactly what the narrow reading loses
  auto v = narrow_constraint_violations(1, split_symmetric_space(7));
  CHECK(std::find(v.begin(), v.end(), std::make_pair(1, 0)) != v.end());
}

TEST_CASE("finite-field class counts agree with the enumerators") {
  CHECK(fq_orbit_classes(OrbitCase::b_type, 1, 3, 3).class_count == 3);
  CHECK(fq_orbit_classes(OrbitCase::b_type, 2, 5, 3).class_count ==
        (long)enumerate_bilinear_tensor(2, split_symmetric_space(5)).size());
  auto s = fq_orbit_classes(OrbitCase::d_type, 2, 4, 3);
  CHECK(s.class_count == 7);
  CHECK(s.orbits_by_signature.at({2, 0}) == 2);  // the split pair stays separate
  CHECK(fq_orbit_classes(OrbitCase::c_type, 2, 2, 3).class_count == 3);
  CHECK(fq_orbit_classes(OrbitCase::c_type, 2, 4, 5).class_count ==
        (long)enumerate_bilinear_tensor(2, split_skew_space(4)).size());
  CHECK(fq_orbit_classes(OrbitCase::tensor, 3, 5, 3).class_count == 4);
  CHECK(fq_orbit_classes(OrbitCase::sym_square, 3, 0, 3).class_count == 4);
  CHECK(fq_orbit_classes(OrbitCase::ext_square, 4, 0, 3).class_count == 3);
}

TEST_CASE("exhaustive signature scans match the enumerated signature sets") {
  for (int q : {3, 5})
    for (int k = 1; k <= 2; ++k)
      for (int d = 2; d <= 6; ++d) {
        if (q == 5 && k * d > 10) continue;
        CAPTURE(q);
        CAPTURE(k);
        CAPTURE(d);
        OrbitCase kind = d % 2 ? OrbitCase::b_type : OrbitCase::d_type;
        std::set<std::pair<int, int>> want;
        for (const auto& o : enumerate_bilinear_tensor(k, split_symmetric_space(d)))
          want.insert({o.rank_a, o.witt_rank});
        CHECK(fq_signature_scan(kind, k, d, q) == want);
        if (d % 2 == 0) {
          std::set<std::pair<int, int>> wantc;
          for (const auto& o : enumerate_bilinear_tensor(k, split_skew_space(d)))
            wantc.insert({o.rank_a, o.witt_rank});
          CHECK(fq_signature_scan(OrbitCase::c_type, k, d, q) == wantc);
        }
      }
}

TEST_CASE("witt invariants are unchanged by random exact isometries") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 25; ++trial) {
    for (int d : {5, 6}) {
      auto space = d % 2 ? split_symmetric_space(d) : split_skew_space(d);
      auto orbits = enumerate_bilinear_tensor(2, space);
      Mat s = random_isometry(space, rng);
      Mat c = random_invertible(2, rng);
      for (const auto& o : orbits) {
        Mat moved = c * o.representative * s;
        auto [ra, wr] = witt_invariants(moved, space);
        CHECK(ra == o.rank_a);
        CHECK(wr == o.witt_rank);
      }
    }
  }
}
