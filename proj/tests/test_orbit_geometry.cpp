#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chevalley/linalg.hpp"
#include "chevalley/orbit_geometry.hpp"
#include "chevalley/parabolic.hpp"

using namespace chevalley;

namespace {

std::string wdd_str(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += char('0' + x);
  return s;
}

AlgebraElement sum_of(const ChevalleyBasis& b, std::initializer_list<const char*> labels) {
  AlgebraElement e = zero_element(b);
  for (const char* l : labels) {
    Root r = parse_root_label(b.system(), l);
    e.add_root(b.system().index_of(r.coeffs), Rat(1));
  }
  return e;
}

void check_sl2(const ChevalleyBasis& b, const AlgebraElement& e) {
  SL2Triple t = jm_triple(b, e);
  CHECK(t.e == e);
  CHECK(bracket(b, t.h, t.e) == t.e.scaled(Rat(2)));
  CHECK(bracket(b, t.h, t.f) == t.f.scaled(Rat(-2)));
  CHECK(bracket(b, t.e, t.f) == t.h);
}

}  // namespace

TEST_CASE("weighted diagrams of small nilpotents") {
  {
    ChevalleyBasis b(build_root_system(parse_cartan_type("A2")));
    CHECK(wdd_str(weighted_dynkin(b, sum_of(b, {"10", "11"}))) == "11");
    CHECK(wdd_str(weighted_dynkin(b, sum_of(b, {"10"}))) == "11");
  }
  {
    // orthogonal pair in A3: two Jordan blocks of size 2
    ChevalleyBasis b(build_root_system(parse_cartan_type("A3")));
    auto e = sum_of(b, {"100", "001"});
    auto w = weighted_dynkin(b, e);
    CHECK(wdd_str(w) == "020");
    CHECK(nilpotent_orbit_dim(b.system(), w) == 8);
    CHECK(nilpotent_orbit_dim(b.system(), w) == rank(ad_matrix(b, e)));
    // regular element
    auto reg = sum_of(b, {"100", "010", "001"});
    CHECK(wdd_str(weighted_dynkin(b, reg)) == "222");
    CHECK(nilpotent_orbit_dim(b.system(), weighted_dynkin(b, reg)) == 12);
  }
  {
    ChevalleyBasis b(build_root_system(parse_cartan_type("D4")));
    auto e = sum_of(b, {"1000", "0010", "0001"});
    auto w = weighted_dynkin(b, e);
    CHECK(nilpotent_orbit_dim(b.system(), w) == rank(ad_matrix(b, e)));
  }
  {
    // G2: a short root vector is subregular-small, a long one is minimal
    ChevalleyBasis b(build_root_system(parse_cartan_type("G2")));
    auto ws = weighted_dynkin(b, sum_of(b, {"11"}));
    CHECK(wdd_str(ws) == "10");
    CHECK(nilpotent_orbit_dim(b.system(), ws) == 8);
    auto wl = weighted_dynkin(b, sum_of(b, {"01"}));
    CHECK(wdd_str(wl) == "01");
    CHECK(nilpotent_orbit_dim(b.system(), wl) == 6);
    CHECK(is_minimal_orbit(b.system(), wl));
    CHECK(!is_minimal_orbit(b.system(), ws));
  }
  {
    // B3: long-root orbit is minimal (dim 8), short-root orbit is not
    ChevalleyBasis b(build_root_system(parse_cartan_type("B3")));
    auto wl = weighted_dynkin(b, sum_of(b, {"010"}));
    CHECK(nilpotent_orbit_dim(b.system(), wl) == 8);
    CHECK(is_minimal_orbit(b.system(), wl));
    auto ws = weighted_dynkin(b, sum_of(b, {"111"}));
    CHECK(!is_minimal_orbit(b.system(), ws));
  }
}

TEST_CASE("minimal orbit diagrams and dimensions") {
  struct Want {
    const char* type;
    const char* wdd;
    long dim;
  };
  for (auto [type, wdd, dim] : {Want{"A2", "11", 4}, Want{"G2", "01", 6},
                                Want{"F4", "1000", 16}, Want{"E7", "1000000", 34},
                                Want{"E6", "010000", 22}, Want{"E8", "00000001", 58}}) {
    RootSystem sys = build_root_system(parse_cartan_type(type));
    CAPTURE(type);
    CHECK(wdd_str(minimal_orbit_wdd(sys)) == wdd);
    CHECK(nilpotent_orbit_dim(sys, minimal_orbit_wdd(sys)) == dim);
  }
}

TEST_CASE("highest-root vectors generate the minimal orbit") {
  for (const char* type : {"A3", "B3", "C3", "D4", "F4", "G2", "E6"}) {
    ChevalleyBasis b(build_root_system(parse_cartan_type(type)));
    AlgebraElement e = root_vector(b, b.num_positive() - 1);
    CAPTURE(type);
    CHECK(is_minimal_orbit(b, e));
  }
}

TEST_CASE("jm triples satisfy the sl2 relations") {
  {
    ChevalleyBasis b(build_root_system(parse_cartan_type("A3")));
    check_sl2(b, sum_of(b, {"100", "001"}));
    check_sl2(b, sum_of(b, {"100", "010", "001"}));
  }
  {
    ChevalleyBasis b(build_root_system(parse_cartan_type("E7")));
    check_sl2(b, sum_of(b, {"2234321", "0000001"}));
    check_sl2(b, sum_of(b, {"0112221", "1112111", "1122210"}));
    check_sl2(b, sum_of(b, {"0112221", "1112211", "1122111"}));
  }
  {
    ChevalleyBasis b(build_root_system(parse_cartan_type("F4")));
    check_sl2(b, sum_of(b, {"0120", "0122", "1110"}));
  }
}

TEST_CASE("orbit dimension inside a graded piece") {
  // E7 node 7: the 27-dimensional abelian radical has orbits 27, 26, 17, 0
  ChevalleyBasis b(build_root_system(parse_cartan_type("E7")));
  auto g = grade_nilradical(b.system(), {7});
  REQUIRE(g.num_pieces() == 1);
  CHECK(orbit_dimension(b, g, 1, sum_of(b, {"0112221", "1112211", "1122111"})) == 27);
  CHECK(orbit_dimension(b, g, 1, sum_of(b, {"1123321", "1223221"})) == 26);
  auto single = sum_of(b, {"2234321"});
  int d_single = orbit_dimension(b, g, 1, single);
  CHECK(d_single == 17);
  CHECK(d_single <= nilpotent_orbit_dim(b.system(), weighted_dynkin(b, single)));
}

TEST_CASE("ad-rank is constant along exponential conjugation") {
  ChevalleyBasis b(build_root_system(parse_cartan_type("D4")));
  auto e = sum_of(b, {"1000", "0010", "0001"});
  int r0 = rank(ad_matrix(b, e));
  for (int gamma : {0, 2, 5}) {
    AlgebraElement moved = exp_ad_root(b, gamma, Rat(3, 2), e);
    CHECK(rank(ad_matrix(b, moved)) == r0);
    CHECK(wdd_str(weighted_dynkin(b, moved)) == wdd_str(weighted_dynkin(b, e)));
  }
}
