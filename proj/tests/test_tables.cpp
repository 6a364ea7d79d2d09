#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "chevalley/tables.hpp"

using namespace chevalley;

namespace {

std::vector<ModuleTable> parse_str(const std::string& text) {
  std::istringstream in(text);
  return parse_catalog(in, "mem");
}

std::string parse_error(const std::string& text) {
  try {
    parse_str(text);
  } catch (const std::runtime_error& e) {
    return e.what();
  }
  return "";
}

std::string wdd_str(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += char('0' + x);
  return s;
}

}  // namespace

TEST_CASE("the record grammar parses headers, comments and basepoints") {
  auto tables = parse_str(
      "# leading comment\n"
      "\n"
      "module A3 node 2 piece 1 dim 4   # trailing comment\n"
      "orbit 110+011 dim 4 wdd 020\n"
      "orbit 111 dim 3 wdd 101\n"
      "orbit 0 dim 0 wdd 000\n");
  REQUIRE(tables.size() == 1);
  const ModuleTable& t = tables[0];
  CHECK(t.kind.name() == "A3");
  CHECK(t.node == 2);
  CHECK(t.piece == 1);
  CHECK(t.dim == 4);
  CHECK(t.origin == "mem:3");
  REQUIRE(t.records.size() == 3);
  CHECK(t.records[0].labels == std::vector<std::string>{"110", "011"});
  CHECK(t.records[0].dim == 4);
  CHECK(wdd_str(t.records[0].wdd) == "020");
  CHECK(!t.records[0].erratum);
  CHECK(t.records[2].is_zero());
}

TEST_CASE("erratum annotations parse into the record") {
  auto tables = parse_str(
      "module A2 node 1 piece 1 dim 2\n"
      "orbit 10+11 dim 2 wdd 11 erratum dim=1\n"
      "orbit 0 dim 0 wdd 00\n");
  REQUIRE(tables.size() == 1);
  REQUIRE(tables[0].records[0].erratum.has_value());
  CHECK(tables[0].records[0].erratum->first == "dim");
  CHECK(tables[0].records[0].erratum->second == "1");
}

TEST_CASE("malformed catalog lines are rejected with file and line") {
  CHECK(parse_error("orbit 10 dim 1 wdd 11\n").find("mem:1") != std::string::npos);
  CHECK(parse_error("module A2 node 3 piece 1 dim 2\n").find("node out of range") !=
        std::string::npos);
  CHECK(parse_error("module H2 node 1 piece 1 dim 2\n") != "");
  CHECK(parse_error("module A2 nod 1 piece 1 dim 2\n").find("malformed module") !=
        std::string::npos);
  CHECK(parse_error("module A2 node 1 piece 1 dim 2 junk\n").find("trailing") !=
        std::string::npos);
  std::string head = "module A2 node 1 piece 1 dim 2\n";
  CHECK(parse_error(head + "orbit 1 dim 1 wdd 11\n").find("bad root label") !=
        std::string::npos);
  CHECK(parse_error(head + "orbit 10 dim 1 wdd 1\n").find("bad weighted diagram") !=
        std::string::npos);
  CHECK(parse_error(head + "orbit 10 dim 1 wdd 11 extra\n").find("trailing") !=
        std::string::npos);
  CHECK(parse_error(head + "orbit 10 dim 1 wdd 11 erratum x\n").find("erratum") !=
        std::string::npos);
  CHECK(parse_error(head + "orbit 10 dim 1 wdd 11 erratum foo=2\n").find("erratum") !=
        std::string::npos);
  CHECK(parse_error(head + "directive\n").find("unknown directive") != std::string::npos);
  CHECK(parse_error(head + "orbit 10 dmi 1 wdd 11\n").find("malformed orbit") !=
        std::string::npos);
}

TEST_CASE("embedded catalog loads with the expected shape") {
  OrbitCatalog cat = load_orbit_catalog();
  CHECK(cat.tables.size() == 69);
  CHECK(cat.record_count() == 562);
  CHECK(cat.record_count() > 300);

  // mirrored E6 tables exist and carry the symmetry marker
  const ModuleTable* m5 = cat.find({Family::E, 6}, 5, 1);
  REQUIRE(m5);
  CHECK(m5->origin.find("diagram symmetry") != std::string::npos);
  const ModuleTable* m3 = cat.find({Family::E, 6}, 3, 1);
  REQUIRE(m3);
  CHECK(m5->records.size() == m3->records.size());
  CHECK(m5->dim == m3->dim);
  // same multiset of dims, mirrored diagrams
  for (size_t i = 0; i < m3->records.size(); ++i) {
    CHECK(m5->records[i].dim == m3->records[i].dim);
    std::string a = wdd_str(m3->records[i].wdd), bs = wdd_str(m5->records[i].wdd);
    std::string mirrored{bs[5], bs[1], bs[4], bs[3], bs[2], bs[0]};
    CHECK(a == mirrored);
  }
}

TEST_CASE("spot values of the stored tables") {
  OrbitCatalog cat = load_orbit_catalog();
  auto dims_of = [&](CartanType k, int node, int piece) {
    const ModuleTable* t = cat.find(k, node, piece);
    REQUIRE(t);
    std::vector<int> dims;
    for (const auto& r : t->records) dims.push_back(r.dim);
    return dims;
  };
  CHECK(dims_of({Family::E, 7}, 7, 1) == std::vector<int>{27, 26, 17, 0});
  CHECK(dims_of({Family::G, 2}, 2, 1) == std::vector<int>{4, 3, 2, 0});
  CHECK(dims_of({Family::E, 8}, 1, 1) ==
        std::vector<int>{64, 63, 59, 54, 50, 44, 43, 35, 22, 0});
  CHECK(cat.find({Family::D, 4}, 2, 1)->records.size() == 7);
  CHECK(cat.find({Family::E, 6}, 4, 1)->records.size() == 18);
  CHECK(cat.for_node({Family::E, 8}, 5).size() == 4);
}

TEST_CASE("every stored table keeps dims sorted with one zero row") {
  OrbitCatalog cat = load_orbit_catalog();
  for (const auto& t : cat.tables) {
    int zeros = 0, dense = 0, prev = 1 << 20;
    for (const auto& r : t.records) {
      zeros += r.is_zero();
      dense += (!r.is_zero() && r.dim == t.dim);
      CHECK(r.dim <= prev);
      prev = r.dim;
    }
    CHECK(zeros == 1);
    CHECK(dense == 1);
  }
}

TEST_CASE("verify_module recomputes a table and flags injected faults") {
  OrbitCatalog cat = load_orbit_catalog();
  const ModuleTable* stored = cat.find({Family::G, 2}, 2, 1);
  REQUIRE(stored);
  ChevalleyBasis basis(build_root_system({Family::G, 2}));
  auto g = grade_nilradical(basis.system(), {2});

  VerifyReport clean = verify_module(basis, g, *stored);
  CHECK(clean.ok());
  CHECK(clean.records == 4);

  ModuleTable bad = *stored;
  bad.records[2].dim += 1;
  VerifyReport rep = verify_module(basis, g, bad);
  CHECK(rep.failures.size() == 1);
  CHECK(rep.failures[0].find("stored dim 3 != recomputed 2") != std::string::npos);

  // the same fault with a matching erratum annotation becomes a note
  ModuleTable annotated = bad;
  annotated.records[2].erratum = {{"dim", "2"}};
  VerifyReport rep2 = verify_module(basis, g, annotated);
  CHECK(rep2.ok());
  CHECK(rep2.errata.size() == 1);

  // a stale annotation on a clean row is itself a failure
  ModuleTable stale = *stored;
  stale.records[1].erratum = {{"wdd", "22"}};
  VerifyReport rep3 = verify_module(basis, g, stale);
  CHECK(rep3.failures.size() == 1);

  // wrong basepoint label: a Levi root, not a root of the piece
  ModuleTable offpiece = *stored;
  offpiece.records[1].labels = {"10"};
  CHECK(!verify_module(basis, g, offpiece).ok());

  // duplicated zero row
  ModuleTable dupzero = *stored;
  dupzero.records.push_back(dupzero.records.back());
  VerifyReport rep4 = verify_module(basis, g, dupzero);
  CHECK(!rep4.ok());

  // serial and concurrent verification agree
  VerifyReport serial = verify_module(basis, g, bad, false);
  CHECK(serial.failures == rep.failures);
}

TEST_CASE("verify_catalog restricted to one group") {
  OrbitCatalog cat = load_orbit_catalog();
  VerifyReport rep = verify_catalog(cat, CartanType{Family::G, 2});
  CHECK(rep.ok());
  CHECK(rep.records == 6);
  CHECK(rep.modules == 2);

  VerifyReport one = verify_catalog(cat, CartanType{Family::D, 4}, 2);
  CHECK(one.ok());
  CHECK(one.modules == 2);  // both stored pieces of that node
}

TEST_CASE("classical cross-counts match every stated realization") {
  OrbitCatalog cat = load_orbit_catalog();
  VerifyReport rep = verify_classical_counts(cat);
  CHECK(rep.ok());
  CHECK(rep.notes.size() == 19);
}

TEST_CASE("minimal support chains for E6 and E7") {
  OrbitCatalog cat = load_orbit_catalog();
  for (int rank : {6, 7}) {
    SupportReport rep = minimal_support_check({Family::E, rank}, cat);
    CAPTURE(rank);
    CHECK(rep.passed);
    REQUIRE(!rep.stages.empty());
    CHECK(rep.stages[0].minimal_dim == (rank == 6 ? 22 : 34));
    CHECK(rep.stages[0].next_dim == (rank == 6 ? 32 : 52));
    CHECK(rep.stages.back().kind.name() == "A1");
    for (const auto& st : rep.stages) {
      CHECK(st.abelian);
      CHECK(st.minimal_orbits == 1);
    }
    CHECK(rep.chains.size() == (rank == 6 ? 2 : 3));
  }
  CHECK_THROWS_AS(minimal_support_check({Family::E, 8}, cat), std::invalid_argument);
  CHECK_THROWS_AS(minimal_support_check({Family::F, 4}, cat), std::invalid_argument);
}
