// Exercises the installed CLI binary end to end: exit codes, report schema,
// determinism, caching and the BLAB_PRIMES override. The binary path arrives
// as the first command-line argument.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string g_binary;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string outfile = "/tmp/blab_cli_test_out.txt";
  std::string cmd = env + " " + g_binary + " " + args + " > " + outfile + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream in(outfile);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

// timing fields differ between runs; drop them before comparing
json strip_volatile(json j) {
  if (j.contains("results"))
    for (auto& r : j["results"]) {
      r.erase("millis");
      r.erase("cached");
    }
  return j;
}

}  // namespace

TEST_CASE("list-suites") {
  auto r = run("list-suites");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("duality") != std::string::npos);
  CHECK(r.out.find("bmw") != std::string::npos);
}

TEST_CASE("verify produces a passing report with the expected schema") {
  auto r = run("verify --suite duality --m 1 --n 2 --f 0");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j.contains("version"));
  CHECK(j["config"]["suite"] == "duality");
  CHECK(j["config"]["fields"].size() == 4);  // q, fp2, fp3, fp5 by default
  CHECK(j["summary"]["failed"] == 0);
  REQUIRE(!j["results"].empty());
  const auto& row = j["results"][0];
  CHECK(row.contains("check"));
  CHECK(row.contains("params"));
  CHECK(row.contains("expected"));
  CHECK(row.contains("expected_provenance"));
  CHECK(row.contains("computed"));
  CHECK(row.contains("pass"));
  CHECK(row.contains("millis"));
  // the anchor value itself
  bool found3 = false;
  for (const auto& res : j["results"])
    if (res["params"]["field"] == "q" && res["params"]["part"] == "dimension")
      found3 = res["expected"] == "3" && res["computed"] == "3";
  CHECK(found3);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("verify --suite duality --m 99 --n 2").exit_code == 2);   // budget exceeded
  CHECK(run("verify --suite nonsense --m 1 --n 2").exit_code == 2);   // unknown suite
  CHECK(run("verify --m 1 --n 2").exit_code == 2);                    // missing required flag
  CHECK(run("verify --suite duality --m 1 --n 2 --bogus-flag 1").exit_code == 2);
  CHECK(run("verify --suite duality --m 1 --n 2 --fields fp6").exit_code == 2);
  CHECK(run("show --check malformed").exit_code == 2);
}

TEST_CASE("reports are deterministic up to timing") {
  auto a = run("verify --suite maximal --m 1 --n 3 --fields q,fp2");
  auto b = run("verify --suite maximal --m 1 --n 3 --fields q,fp2");
  CHECK(a.exit_code == 0);
  CHECK(strip_volatile(json::parse(a.out)) == strip_volatile(json::parse(b.out)));
}

TEST_CASE("cache warm rerun agrees and is flagged") {
  std::string cache = "/tmp/blab_cli_test_cache.jsonl";
  std::remove(cache.c_str());
  auto cold = run("verify --suite dimension --m 1 --n 2 --fields q --cache " + cache);
  CHECK(cold.exit_code == 0);
  auto warm = run("verify --suite dimension --m 1 --n 2 --fields q --cache " + cache);
  CHECK(warm.exit_code == 0);
  json jc = json::parse(cold.out), jw = json::parse(warm.out);
  CHECK(strip_volatile(jc) == strip_volatile(jw));
  for (const auto& r : jw["results"]) CHECK(r.value("cached", false));
  for (const auto& r : jc["results"]) CHECK(!r.value("cached", false));

  // corrupt line is tolerated
  {
    std::ofstream app(cache, std::ios::app);
    app << "not json at all\n";
  }
  auto warm2 = run("verify --suite dimension --m 1 --n 2 --fields q --cache " + cache);
  CHECK(warm2.exit_code == 0);
}

TEST_CASE("injected fault is reported with a witness") {
  // poison every cached computed value; the warm rerun must flag the
  // mismatch, fail the checks, and exit 1
  std::string cache = "/tmp/blab_cli_test_poison.jsonl";
  std::remove(cache.c_str());
  auto cold = run("verify --suite basis-count --m 1 --n 2 --fields q --cache " + cache);
  CHECK(cold.exit_code == 0);
  std::vector<json> lines;
  {
    std::ifstream in(cache);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) lines.push_back(json::parse(line));
  }
  REQUIRE(!lines.empty());
  {
    std::ofstream out(cache, std::ios::trunc);
    for (auto& l : lines) {
      l["computed"] = "999999";
      out << l.dump() << "\n";
    }
  }
  auto warm = run("verify --suite basis-count --m 1 --n 2 --fields q --cache " + cache);
  CHECK(warm.exit_code == 1);
  json j = json::parse(warm.out);
  CHECK(j["summary"]["failed"].get<int>() > 0);
  bool witness = false;
  for (const auto& r : j["results"])
    if (!r["pass"].get<bool>() &&
        r["computed"].get<std::string>().find("cache mismatch") != std::string::npos)
      witness = true;
  CHECK(witness);
}

TEST_CASE("BLAB_PRIMES overrides the default prime list") {
  auto r = run("verify --suite basis-count --m 1 --n 2", "BLAB_PRIMES=7");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["config"]["fields"].size() == 2);
  CHECK(j["config"]["fields"][0] == "q");
  CHECK(j["config"]["fields"][1] == "fp7");
}

TEST_CASE("show reruns a single check") {
  auto r = run("show --check \"duality/m=1,n=2,f=0,field=q,part=dimension\"");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["expected"] == "3");
  CHECK(j["pass"] == true);
  CHECK(run("show --check \"duality/m=1,n=2,f=0,field=q,part=bogus\"").exit_code == 2);
}

TEST_CASE("report can be written to a file") {
  std::string path = "/tmp/blab_cli_test_report.json";
  std::remove(path.c_str());
  auto r = run("verify --suite basis-count --m 1 --n 3 --fields q --out " + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  json j = json::parse(in);
  CHECK(j["summary"]["passed"].get<int>() > 0);
}

int main(int argc, char** argv) {
  if (argc > 1) g_binary = argv[1];
  doctest::Context ctx;
  ctx.applyCommandLine(1, argv);
  return ctx.run();
}
