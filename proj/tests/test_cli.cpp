#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "sccpres/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "scc-preserve");
  std::ostringstream out, err;
  int code = sccp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "sccpres_cli_test";
  fs::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST_CASE("cli st-lower pipeline") {
  const std::string g = scratch("st.txt");
  const std::string p = scratch("st.json");
  REQUIRE(run({"gen", "st-lower", "--layers", "2", "-k", "2", "-o", g}).code == 0);
  CHECK(fs::exists(g + ".meta.json"));

  auto b = run({"build", g, "--variant", "st", "--algo", "greedy", "-k", "2", "--json", "-o", p});
  REQUIRE(b.code == 0);
  auto j = nlohmann::json::parse(b.out);
  auto meta = nlohmann::json::parse(std::ifstream(g + ".meta.json"));
  auto kept = j["kept_edges"].get<std::vector<int>>();
  CHECK(std::is_sorted(kept.begin(), kept.end()));
  for (int e : meta["cross_edges"]) CHECK(std::find(kept.begin(), kept.end(), e) != kept.end());
  CHECK(j["params"]["s"] == meta["s"]);
  CHECK(j["params"]["t"] == meta["t"]);
  CHECK(j["input"]["hash"].get<std::string>().size() == 16);

  CHECK(run({"verify", "--graph", g, "--preserver", p}).code == 0);
  CHECK(run({"verify", g, "--preserver", p, "--shards", "3", "--json"}).code == 0);
}

TEST_CASE("cli verify identity and failure") {
  const std::string g = scratch("tri.txt");
  std::ofstream(g) << "3 6\n0 1\n1 0\n1 2\n2 1\n0 2\n2 0\n";
  const std::string all = scratch("all.json");
  std::ofstream(all) << R"({"kept_edges":[0,1,2,3,4,5]})";
  CHECK(run({"verify", g, "--preserver", all, "-k", "1"}).code == 0);
  CHECK(run({"verify", g, "--preserver", all, "-k", "1", "--by-cuts"}).code == 0);

  const std::string five = scratch("five.json");
  std::ofstream(five) << R"({"kept_edges":[1,2,3,4,5]})";
  auto r = run({"verify", g, "--preserver", five, "-k", "1", "--json"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out).contains("counterexample"));
  CHECK(run({"verify", g, "--preserver", five, "-k", "1", "--by-cuts"}).code == 1);
  CHECK(run({"verify", g, "--preserver", five, "--variant", "kconn", "-k", "2"}).code == 1);
}

TEST_CASE("cli fpt build is byte-deterministic") {
  const std::string g = scratch("rand.txt");
  REQUIRE(run({"gen", "random", "-n", "7", "-m", "8", "--seed", "3", "--strongly-connected", "-o", g}).code == 0);
  auto a = run({"build", g, "--algo", "fpt", "-k", "1", "--seed", "7", "--json"});
  auto b = run({"build", g, "--algo", "fpt", "-k", "1", "--seed", "7", "--json"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["seed"] == 7);
  auto t = run({"build", g, "--algo", "fpt", "-k", "1", "--seed", "7", "--json", "--timing"});
  CHECK(nlohmann::json::parse(t.out).contains("wall_time_ms"));
}

TEST_CASE("cli build outputs verify") {
  const std::string g = scratch("corpus.txt");
  REQUIRE(run({"gen", "random", "-n", "6", "-m", "6", "--seed", "11", "--strongly-connected", "-o", g}).code == 0);
  const std::string p = scratch("corpus.json");
  for (auto args : std::vector<std::vector<std::string>>{
           {"--variant", "all-pairs", "--algo", "hierarchy", "-k", "1"},
           {"--variant", "global", "--algo", "reduction", "-k", "1"},
           {"--variant", "st", "-s", "0", "-t", "3", "--algo", "reduction", "-k", "1"},
           {"--variant", "sourcewise", "--sources", "0,2", "-k", "2"},
           {"--variant", "single-source", "-s", "1", "-k", "1"},
           {"--variant", "kconn", "-k", "2", "--demand-pairs"}}) {
    std::vector<std::string> cmd{"build", g, "-o", p};
    cmd.insert(cmd.end(), args.begin(), args.end());
    REQUIRE(run(cmd).code == 0);
    CHECK(run({"verify", g, "--preserver", p}).code == 0);
  }
}

TEST_CASE("cli analysis commands") {
  const std::string g = scratch("path.txt");
  std::ofstream(g) << "4 3\n0 1\n1 2\n2 3\n";
  auto h = run({"hierarchy", g, "--json"});
  CHECK(h.code == 0);
  CHECK(nlohmann::json::parse(h.out)["levels"].size() <= 3);

  auto d = run({"decompose", g, "-q", "2", "-k", "1", "--json"});
  CHECK(d.code == 0);
  CHECK(nlohmann::json::parse(d.out)["parts"].size() == 2);

  auto i = run({"impcut", g, "--from", "0", "--to", "3", "-k", "1", "--enumerate", "--json"});
  CHECK(i.code == 0);
  CHECK(nlohmann::json::parse(i.out)["important_cuts"].size() == 1);

  auto c = run({"critical", g, "-k", "1", "--json"});
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["critical_edges"].empty());
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"build", scratch("missing.txt"), "-k", "1"}).code == 2);
  const std::string g = scratch("big.txt");
  std::ostringstream text;
  text << "12 132\n";
  for (int a = 0; a < 12; ++a)
    for (int b = 0; b < 12; ++b)
      if (a != b) text << a << " " << b << "\n";
  std::ofstream(g) << text.str();
  CHECK(run({"critical", g, "-k", "4"}).code == 3);
}
