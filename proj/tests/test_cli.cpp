#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "caforge/report.hpp"

using namespace caforge;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the installed binary through the shell, capturing both streams. The
// prefix lands in front of the binary, e.g. for environment variables.
RunResult run_cli(const std::string& args, const std::string& prefix = "") {
  static int counter = 0;
  std::string err_path = "/tmp/caforge_cli_" + std::to_string(getpid()) + "_" +
                         std::to_string(counter++) + ".err";
  std::string cmd = prefix + std::string(CAFORGE_CLI_PATH) + " " + args +
                    " 2>" + err_path;
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_path);
  std::remove(err_path.c_str());
  return r;
}

std::string temp_cache_path() {
  static int counter = 0;
  return "/tmp/caforge_cache_" + std::to_string(getpid()) + "_" +
         std::to_string(counter++) + ".jsonl";
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("report records round-trip through the line format") {
  ReportRecord r;
  r.q = 27;
  r.p = 3;
  r.m = 3;
  r.predicate_answer = true;
  r.predicate_reason = "3^p-clause";
  r.computed_answer = true;
  r.method = "maximal-class";
  r.agree = true;
  r.per_class = {{1, 351, true, "Case1"}, {2, 26, true, "Case1"}};
  r.wall_time_ms = 42;
  r.engine_version = "0.1.0";
  std::string line = to_json_line(r);
  auto back = parse_json_line(line);
  REQUIRE(back.has_value());
  CHECK(back->q == 27);
  CHECK(back->predicate_reason == "3^p-clause");
  CHECK(back->per_class.size() == 2);
  CHECK(back->per_class[1].order == 26);
  CHECK(to_json_line(*back) == line);  // stable second serialization

  CHECK(!parse_json_line("not json").has_value());
  CHECK(!parse_json_line("{\"q\": 3").has_value());
}

TEST_CASE("serialized keys keep a fixed order") {
  ReportRecord r;
  r.q = 7;
  r.engine_version = "0.1.0";
  std::string line = to_json_line(r);
  std::size_t pos = 0;
  for (const char* k :
       {"\"q\":", "\"p\":", "\"m\":", "\"predicate_answer\":",
        "\"predicate_reason\":", "\"computed_answer\":", "\"method\":",
        "\"agree\":", "\"per_class\":", "\"wall_time_ms\":",
        "\"engine_version\":"}) {
    std::size_t at = line.find(k);
    REQUIRE(at != std::string::npos);
    CHECK(at > pos);
    pos = at;
  }
}

TEST_CASE("cache stores first writes and replays them verbatim") {
  std::string path = temp_cache_path();
  {
    ReportCache cache(path);
    CHECK(!cache.lookup(7, "oracle", "0.1.0").has_value());
    ReportRecord r;
    r.q = 7;
    r.method = "oracle";
    r.engine_version = "0.1.0";
    r.wall_time_ms = 123;
    cache.append(r, to_json_line(r));
    auto hit = cache.lookup(7, "oracle", "0.1.0");
    REQUIRE(hit.has_value());
    CHECK(*hit == to_json_line(r));
    CHECK(!cache.lookup(7, "maximal-class", "0.1.0").has_value());
    CHECK(!cache.lookup(7, "oracle", "0.0.9").has_value());
  }
  {
    // reload from disk; stored line survives byte for byte
    ReportCache cache(path);
    auto hit = cache.lookup(7, "oracle", "0.1.0");
    REQUIRE(hit.has_value());
    CHECK(hit->find("\"wall_time_ms\":123") != std::string::npos);
  }
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("verify 6").code == 2);          // not a prime power
  CHECK(run_cli("verify 3").code == 2);          // below the smallest field
  CHECK(run_cli("verify").code == 2);            // missing argument
  CHECK(run_cli("frobnicate").code == 2);        // unknown subcommand
  CHECK(run_cli("verify 7 --method bogus").code == 2);
  CHECK(run_cli("sweep 9 4").code == 2);         // empty range
  CHECK(run_cli("").code == 2);                  // no subcommand
}

TEST_CASE("bound overruns exit with code 3") {
  // forcing the exhaustive method far past its bound
  CHECK(run_cli("verify 16 --method oracle").code == 3);
  // a group too large to construct at all
  CHECK(run_cli("verify 1021").code == 3);
}

TEST_CASE("agreement exits 0 and emits one record") {
  RunResult r = run_cli("verify 7 --json");
  CHECK(r.code == 0);
  auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 1);
  auto rec = parse_json_line(ls[0]);
  REQUIRE(rec.has_value());
  CHECK(rec->q == 7);
  CHECK(rec->method == "oracle");
  CHECK(rec->agree);
  CHECK(!rec->computed_answer);
}

TEST_CASE("human output names the verdict") {
  RunResult r = run_cli("verify 9");
  CHECK(r.code == 0);
  CHECK(r.out.find("q=9") != std::string::npos);
  CHECK(r.out.find("agreement: yes") != std::string::npos);
  CHECK(r.out.find("exponent-not-odd-prime") != std::string::npos);
}

TEST_CASE("cache replay is byte stable and announced on stderr") {
  std::string path = temp_cache_path();
  RunResult first = run_cli("verify 5 --json --cache " + path);
  CHECK(first.code == 0);
  CHECK(first.err.find("cache hit") == std::string::npos);
  RunResult second = run_cli("verify 5 --json --cache " + path);
  CHECK(second.code == 0);
  CHECK(second.out == first.out);
  CHECK(second.err.find("cache hit") != std::string::npos);
  // human rendering from the cached record also succeeds
  RunResult human = run_cli("verify 5 --cache " + path);
  CHECK(human.code == 0);
  CHECK(human.out.find("agreement: yes") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("the cache honours the environment variable") {
  std::string path = temp_cache_path();
  RunResult first = run_cli("verify 4 --json --cache " + path);
  CHECK(first.code == 0);
  // same store picked up through the environment
  RunResult second = run_cli("verify 4 --json", "CA_FORGE_CACHE=" + path + " ");
  CHECK(second.code == 0);
  CHECK(second.out == first.out);
  CHECK(second.err.find("cache hit") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("corrupt cache lines are skipped with a warning") {
  std::string path = temp_cache_path();
  {
    std::ofstream out(path);
    out << "this is not a record\n";
  }
  RunResult r = run_cli("verify 5 --json --cache " + path);
  CHECK(r.code == 0);
  CHECK(r.err.find("skipping unreadable line") != std::string::npos);
  auto rec = parse_json_line(lines_of(r.out)[0]);
  REQUIRE(rec.has_value());
  CHECK(rec->q == 5);
  std::remove(path.c_str());
}

TEST_CASE("sweep emits ascending prime powers only") {
  RunResult r = run_cli("sweep 4 13 --json --oracle-bound 400");
  CHECK(r.code == 0);
  auto ls = lines_of(r.out);
  std::vector<std::uint64_t> qs;
  for (const auto& l : ls) {
    auto rec = parse_json_line(l);
    REQUIRE(rec.has_value());
    qs.push_back(rec->q);
  }
  CHECK(qs == std::vector<std::uint64_t>{4, 5, 7, 8, 9, 11, 13});
}

TEST_CASE("version flag") {
  RunResult r = run_cli("--version");
  CHECK(r.code == 0);
  CHECK(r.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("selftest and stabilizer inspection succeed") {
  CHECK(run_cli("selftest").code == 0);
  RunResult r = run_cli("inspect --suzuki 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("448") != std::string::npos);
  RunResult d = run_cli("inspect 7");
  CHECK(d.code == 0);
  CHECK(d.out.find("sym4") != std::string::npos);
}
