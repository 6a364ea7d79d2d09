#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "chevalley/cli.hpp"
#include "chevalley/tables.hpp"

using namespace chevalley;
using nlohmann::json;

namespace {

struct Run {
  int rc;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int rc = run_cli(args, out, err);
  return {rc, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  Run r = run(args);
  REQUIRE(r.rc == 0);
  return json::parse(r.out);
}

// serialize one stored table back into the record grammar
std::string table_text(const ModuleTable& t) {
  std::ostringstream ss;
  ss << "module " << t.kind.name() << " node " << t.node << " piece " << t.piece
     << " dim " << t.dim << "\n";
  for (const auto& r : t.records) {
    ss << "orbit ";
    if (r.is_zero()) {
      ss << "0";
    } else {
      for (size_t i = 0; i < r.labels.size(); ++i) ss << (i ? "+" : "") << r.labels[i];
    }
    ss << " dim " << r.dim << " wdd ";
    for (int x : r.wdd) ss << x;
    ss << "\n";
  }
  return ss.str();
}

std::string g2_node2_text() {
  OrbitCatalog cat = load_orbit_catalog();
  const ModuleTable* t = cat.find({Family::G, 2}, 2, 1);
  REQUIRE(t);
  return table_text(*t);
}

// a scratch dataset directory holding one catalog file's text
struct TempDataset {
  std::filesystem::path dir;

  explicit TempDataset(const std::string& text) {
    static std::atomic<int> seq{0};
    dir = std::filesystem::temp_directory_path() /
          ("chevalley-cli-test-" + std::to_string(++seq));
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "table.txt") << text;
  }
  ~TempDataset() { std::filesystem::remove_all(dir); }
};

}  // namespace

TEST_CASE("dynkin prints the diagram and ambient orbit dimension") {
  Run r = run({"dynkin", "E7", "--element", "2234321"});
  CHECK(r.rc == 0);
  CHECK(r.out == "1000000 (orbit dim 34)\n");

  json j = run_json({"dynkin", "E7", "--element", "2234321"});
  CHECK(j["schema"] == 1);
  CHECK(j["wdd"] == "1000000");
  CHECK(j["orbit_dim"] == 34);
}

TEST_CASE("grade lists the pieces of the nilradical") {
  json j = run_json({"grade", "E8", "--node", "4"});
  std::vector<int> dims;
  for (const auto& p : j["pieces"]) dims.push_back(p["dim"]);
  CHECK(dims == std::vector<int>{30, 30, 20, 15, 6, 5});
  CHECK(j["nilradical_dim"] == 106);
  CHECK(j["pieces"][1]["realization"]["type"] == "E7");
  CHECK(j["pieces"][1]["realization"]["node"] == 5);

  Run t = run({"grade", "E8", "--node", "4"});
  CHECK(t.rc == 0);
  CHECK(t.out.find("dim u = 106") != std::string::npos);
  CHECK(t.out.find("first piece of E7 node 5") != std::string::npos);
}

TEST_CASE("roots reports the root system") {
  json j = run_json({"roots", "C2"});
  CHECK(j["positive_count"] == 4);
  CHECK(j["root_count"] == 8);
  CHECK(j["highest_root"] == "21");
  CHECK(j["positive_roots"].size() == 4);
  CHECK(j["cartan_matrix"].size() == 2);
}

TEST_CASE("classical enumerators from the command line") {
  json b = run_json({"classical", "bilinear", "2", "4"});
  CHECK(b["count"] == 7);
  CHECK(b["orbits"].size() == 7);
  CHECK(b["orbits"][0].contains("representative"));
  json t = run_json({"classical", "tensor", "3", "5"});
  CHECK(t["count"] == 4);
  json s = run_json({"classical", "sym2", "3"});
  CHECK(s["count"] == 4);
  json e = run_json({"classical", "ext2", "5"});
  CHECK(e["count"] == 3);
  json sk = run_json({"classical", "bilinear", "2", "2", "--skew"});
  CHECK(sk["count"] == 3);
}

TEST_CASE("orbits prints stored and recomputed columns") {
  Run r = run({"orbits", "E7", "--node", "7"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("2234321") != std::string::npos);
  CHECK(r.out.find("ok") != std::string::npos);
  CHECK(r.out.find("MISMATCH") == std::string::npos);

  json j = run_json({"orbits", "E7", "--node", "7", "--piece", "1"});
  CHECK(j["ok"] == true);
  REQUIRE(j["tables"].size() == 1);
  const json& recs = j["tables"][0]["records"];
  CHECK(recs.size() == 4);
  for (const auto& rec : recs) {
    CHECK(rec["status"] == "ok");
    CHECK(rec["dim"] == rec["computed_dim"]);
    CHECK(rec["wdd"] == rec["computed_wdd"]);
  }
}

TEST_CASE("lemma-chain validates the embedded chain") {
  Run r = run({"lemma-chain", "--n", "5"});
  CHECK(r.rc == 0);
  json j = run_json({"lemma-chain", "--n", "6"});
  CHECK(j["passed"] == true);
  CHECK(j["coefficient_count"] == 20);
}

TEST_CASE("verify recomputes the stored tables") {
  Run r = run({"verify", "--group", "G2"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("6 orbit records") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);

  json j = run_json({"verify", "--group", "G2"});
  CHECK(j["ok"] == true);
  CHECK(j["records"] == 6);
  CHECK(j["modules"] == 2);
}

TEST_CASE("verify honors an external dataset directory") {
  std::string text = g2_node2_text();
  {
    TempDataset ds(text);
    Run ok = run({"verify", "--dataset", ds.dir.string()});
    CHECK(ok.rc == 0);
    CHECK(ok.out.find("4 orbit records") != std::string::npos);
    CHECK(ok.out.find("PASS") != std::string::npos);
  }
  {
    // perturb one stored dimension: verification must fail with exit 1
    std::string broken = text;
    auto pos = broken.find("dim 3");
    REQUIRE(pos != std::string::npos);
    broken.replace(pos, 5, "dim 5");
    TempDataset ds(broken);
    Run bad = run({"verify", "--dataset", ds.dir.string()});
    CHECK(bad.rc == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
  }
}

TEST_CASE("orbits table against an external dataset") {
  TempDataset ds(g2_node2_text());
  json j = run_json({"orbits", "G2", "--node", "2", "--dataset", ds.dir.string()});
  CHECK(j["tables"][0]["records"].size() == 4);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({"no-such-command"}).rc == 2);
  CHECK(run({"dynkin", "Z9", "--element", "11"}).rc == 2);
  CHECK(run({"grade", "E8"}).rc == 2);                        // missing --node
  CHECK(run({"grade", "E8", "--node", "99"}).rc == 2);        // node out of range
  CHECK(run({"lemma-chain", "--n", "9"}).rc == 2);            // restricted choice
  CHECK(run({"orbits", "A3", "--node", "1"}).rc == 2);        // no stored table
  CHECK(run({"dynkin", "E7", "--element", "9999999"}).rc == 2);
  CHECK(run({}).rc == 2);                                     // subcommand required
  CHECK(run({"--format", "yaml", "roots", "C2"}).rc == 2);
}

TEST_CASE("--help succeeds") {
  Run r = run({"--help"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("text and json outputs agree") {
  json j = run_json({"dynkin", "F4", "--element", "2342"});
  Run t = run({"dynkin", "F4", "--element", "2342"});
  std::string expect = j["wdd"].get<std::string>() + " (orbit dim " +
                       std::to_string(j["orbit_dim"].get<long>()) + ")\n";
  CHECK(t.out == expect);
  CHECK(json::parse(j.dump()) == j);
}
