#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chevalley/chevalley_basis.hpp"
#include "chevalley/linalg.hpp"
#include "chevalley/representation.hpp"
#include "chevalley/root_system.hpp"

using namespace chevalley;

namespace {

int expected_positive(CartanType t) {
  int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return -1;
}

std::vector<CartanType> all_types() {
  std::vector<CartanType> out;
  for (int n = 1; n <= 8; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= 8; ++n) out.push_back({Family::B, n});
  for (int n = 2; n <= 8; ++n) out.push_back({Family::C, n});
  for (int n = 3; n <= 8; ++n) out.push_back({Family::D, n});
  for (int n = 6; n <= 8; ++n) out.push_back({Family::E, n});
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  return out;
}

}  // namespace

TEST_CASE("positive root counts match the closed forms") {
  for (CartanType t : all_types()) {
    RootSystem sys = build_root_system(t);
    std::string nm = t.name();
    CAPTURE(nm);
    CHECK(sys.num_positive() == expected_positive(t));
    // heights are sorted and the last root is the highest one
    for (size_t i = 1; i < sys.positive_roots.size(); ++i)
      CHECK(sys.positive_roots[i - 1].height() <= sys.positive_roots[i].height());
  }
  RootSystem c2 = build_root_system({Family::C, 2});
  CHECK(2 * c2.num_positive() == 8);
}

TEST_CASE("type tokens parse and invalid ones are rejected") {
  CHECK(parse_cartan_type("A1").rank == 1);
  CHECK(parse_cartan_type("E7").name() == "E7");
  CHECK(parse_cartan_type("G2").family == Family::G);
  for (const char* bad : {"A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "H4", "42", "A"})
    CHECK_THROWS_AS(parse_cartan_type(bad), std::invalid_argument);
}

TEST_CASE("root labels round-trip and index_of finds every positive root") {
  for (const char* name : {"A3", "B3", "C4", "D5", "E6", "F4", "G2"}) {
    RootSystem sys = build_root_system(parse_cartan_type(name));
    for (int i = 0; i < sys.num_positive(); ++i) {
      const Root& r = sys.positive_roots[i];
      CHECK(parse_root_label(sys, root_label(r)).coeffs == r.coeffs);
      CHECK(sys.index_of(r.coeffs) == i);
    }
    std::vector<int> off(sys.rank(), 0);
    off[0] = 3;
    CHECK(sys.index_of(off) == -1);
  }
}

TEST_CASE("highest roots of the exceptional types") {
  CHECK(root_label(build_root_system({Family::E, 7}).highest_root()) == "2234321");
  CHECK(root_label(build_root_system({Family::E, 8}).highest_root()) == "23465432");
  CHECK(root_label(build_root_system({Family::F, 4}).highest_root()) == "2342");
  CHECK(root_label(build_root_system({Family::G, 2}).highest_root()) == "32");
}

TEST_CASE("structure constants satisfy the basis identities") {
  for (const char* name : {"A3", "B3", "C3", "D4", "F4", "G2"}) {
    ChevalleyBasis b(build_root_system(parse_cartan_type(name)));
    const int m = b.num_roots();
    CAPTURE(name);
    for (int a = 0; a < m; ++a)
      for (int c = 0; c < m; ++c) {
        if (b.sum_is_zero(a, c)) continue;
        int nac = b.n_constant(a, c);
        int nca = b.n_constant(c, a);
        int s = b.sum_index(a, c);
        if (s < 0) {
          CHECK(nac == 0);
          continue;
        }
        CHECK(nac == -nca);
        CHECK(std::abs(nac) == b.p_value(a, c) + 1);
      }
    // [X_a, X_{-a}] is the coroot element
    for (int a = 0; a < b.num_positive(); ++a) {
      AlgebraElement h = bracket(b, root_vector(b, a), root_vector(b, b.negate(a)));
      CHECK(h.root_part.empty());
      std::vector<Rat> want;
      for (int c : b.coroot(a)) want.push_back(Rat(c));
      CHECK(h.cartan == want);
    }
  }
}

TEST_CASE("cartan action on root vectors") {
  ChevalleyBasis b(build_root_system({Family::F, 4}));
  const RootSystem& sys = b.system();
  for (int i = 0; i < sys.rank(); ++i) {
    std::vector<Rat> unit(sys.rank(), Rat(0));
    unit[i] = 1;
    AlgebraElement h = cartan_element(b, unit);
    for (int a = 0; a < b.num_positive(); ++a) {
      AlgebraElement lhs = bracket(b, h, root_vector(b, a));
      int pairing = sys.pair_simple_coroot(sys.positive_roots[a], i);
      AlgebraElement rhs = root_vector(b, a).scaled(Rat(pairing));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("Jacobi identity holds exhaustively for a midsize sample") {
  for (const char* name : {"A2", "B3", "C3", "D4", "G2"}) {
    ChevalleyBasis b(build_root_system(parse_cartan_type(name)));
    CAPTURE(name);
    CHECK(jacobi_violations_serial(b) == 0);
    CHECK(jacobi_violations_parallel(b) == 0);
  }
}

TEST_CASE("serial and concurrent rank agree on random rational matrices") {
  std::mt19937_64 rng(987);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    int r = 1 + (int)(rng() % 10), c = 1 + (int)(rng() % 10);
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = Rat(num(rng), den(rng));
    CHECK(rank_serial(m) == rank_parallel(m));
  }
  Mat z(3, 3);
  CHECK(rank(z) == 0);
}

TEST_CASE("linear solves certify their solutions") {
  Mat a(3, 3);
  int v[3][3] = {{2, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a.at(i, j) = v[i][j];
  std::vector<Rat> rhs{Rat(1), Rat(2), Rat(3)};
  auto x = solve_linear(a, rhs);
  REQUIRE(x.has_value());
  for (int i = 0; i < 3; ++i) {
    Rat acc(0);
    for (int j = 0; j < 3; ++j) acc += a.at(i, j) * (*x)[j];
    CHECK(acc == rhs[i]);
  }
  // inconsistent system
  Mat s(2, 1);
  s.at(0, 0) = 1;
  s.at(1, 0) = 1;
  CHECK(!solve_linear(s, {Rat(0), Rat(1)}).has_value());
}

TEST_CASE("small faithful modules have the advertised dimensions") {
  CHECK(build_small_rep({Family::A, 3}, 2).dim == 6);
  CHECK(build_small_rep({Family::B, 3}, 1).dim == 7);
  CHECK(build_small_rep({Family::D, 4}, 1).dim == 8);
  CHECK(build_small_rep({Family::D, 5}, 5).dim == 16);
  CHECK(build_small_rep({Family::E, 6}, 1).dim == 27);
  CHECK(build_small_rep({Family::E, 7}, 7).dim == 56);
  CHECK_THROWS_AS(build_small_rep({Family::E, 8}, 1), std::invalid_argument);
  ChevalleyBasis b(build_root_system({Family::E, 6}));
  Representation rep = build_small_rep(b, 6);
  CHECK(rep.dim == 27);
  CHECK(representation_violations(b, rep) == 0);
}
