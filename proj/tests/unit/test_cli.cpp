#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "published_table.hpp"
#include "sumfree/result_log.hpp"

using sumfree::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

std::string temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "sumfree-cli-tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::filesystem::remove(path);
  return path.string();
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"search", "--n", "41"}).code == 2);
  CHECK(run({"search", "--ell", "3", "--n", "41"}).code == 2);
  CHECK(run({"verify", "--ell", "5", "--n", "41", "--set", "1,40"}).code == 2);
  CHECK(run({"table", "--ell", "4", "--from", "80", "--to", "41", "--no-log"}).code == 2);
  CHECK(run({"verify", "--ell", "4", "--n", "41", "--set", "1,5,61"}).code == 2);
  CHECK(run({"verify", "--ell", "4", "--n", "41", "--set", "1,a"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("construct") {
  const auto ok = run({"construct", "--ell", "4", "--n", "401", "--format", "structured"});
  CHECK(ok.code == 0);
  const auto recs = lines(ok.out);
  REQUIRE(recs.size() == 5);
  const auto params = sumfree::params_from_record(recs[0]);
  CHECK(params.M == 332);
  CHECK(sumfree::set_from_record(recs[1]).size() == 76);
  for (std::size_t i = 2; i < recs.size(); ++i)
    CHECK(nlohmann::json::parse(recs[i])["overall"] == true);

  const auto low = run({"construct", "--ell", "4", "--n", "101"});
  CHECK(low.code == 2);
  CHECK(low.err.find("360") != std::string::npos);

  const auto even = run({"construct", "--ell", "4", "--n", "400"});
  CHECK(even.code == 0);
  CHECK(even.err.find("K_{n/2,n/2}") != std::string::npos);
  CHECK(even.out.find("K_{200,200}") != std::string::npos);

  CHECK(run({"construct", "--ell", "5", "--n", "401"}).code == 2);
  CHECK(run({"construct", "--ell", "4", "--n", "301", "--force"}).code == 0);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "--ell", "4", "--n", "41", "--set", "1,5,11,30,36,40"}).code == 0);
  const auto asym = run({"verify", "--ell", "4", "--n", "41", "--set", "1,5,11", "--format",
                         "structured"});
  CHECK(asym.code == 1);
  const auto first = nlohmann::json::parse(lines(asym.out).at(0));
  CHECK(first["checks"][0]["name"] == "symmetric");
  CHECK(first["checks"][0]["passed"] == false);
  const auto graph =
      run({"verify", "--ell", "4", "--n", "41", "--set", "1,5,11,30,36,40", "--graph"});
  CHECK(graph.code == 0);
  CHECK(graph.out.find("cycle-free") != std::string::npos);
  CHECK(run({"verify", "--ell", "4", "--n", "41", "--set", "1,5,11", "--graph"}).code == 1);
}

TEST_CASE("search exit codes") {
  const auto found = run({"search", "--ell", "4", "--n", "41", "--format", "structured"});
  CHECK(found.code == 0);
  const auto r = sumfree::search_result_from_record(lines(found.out).at(0));
  CHECK(r.psi == 6);
  CHECK(run({"search", "--ell", "4", "--n", "9"}).code == 1);
  CHECK(run({"search", "--ell", "4", "--n", "53", "--budget", "50"}).code == 3);
  CHECK(run({"search", "--ell", "4", "--n", "53", "--max-size", "8"}).code == 1);
  CHECK(run({"search", "--ell", "4", "--n", "53", "--threads", "3"}).code == 0);
}

TEST_CASE("structured output is byte-stable") {
  const std::vector<std::string> args = {"search", "--ell", "4", "--n", "50", "--format",
                                         "structured", "--no-timing"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> table = {"table", "--ell", "4", "--from", "41", "--to", "44",
                                          "--format", "structured", "--no-log", "--no-timing"};
  CHECK(run(table).out == run(table).out);
}

TEST_CASE("table") {
  const auto single =
      run({"table", "--ell", "4", "--from", "41", "--to", "41", "--format", "structured",
           "--no-log"});
  CHECK(single.code == 0);
  CHECK(lines(single.out).size() == 1);

  const auto path = temp_path("table.jsonl");
  const auto csv = run({"table", "--ell", "4", "--from", "41", "--to", "50", "--format", "csv",
                        "--log", path});
  CHECK(csv.code == 0);
  const auto rows = lines(csv.out);
  REQUIRE(rows.size() == 11);
  CHECK(rows[0] == "n,psi,witness,psi_without_half");
  CHECK(rows[1].rfind("41,6,\"", 0) == 0);
  CHECK(sumfree::ResultLog(path).load().size() == 10);

  const auto resumed = run({"table", "--ell", "4", "--from", "41", "--to", "50", "--format",
                            "csv", "--log", path, "--resume"});
  CHECK(resumed.out == csv.out);
  CHECK(sumfree::ResultLog(path).load().size() == 10);

  CHECK(run({"table", "--ell", "4", "--from", "53", "--to", "53", "--budget", "10",
             "--no-log"})
            .code == 3);
}

TEST_CASE("graph-check") {
  const auto ok = run({"graph-check", "--ell", "4", "--n", "41", "--set", "1,5,11,30,36,40"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("degree=6") != std::string::npos);
  CHECK(ok.out.find("agreement: yes") != std::string::npos);
  CHECK(run({"graph-check", "--ell", "4", "--n", "41", "--set", "1,40"}).code == 1);
  CHECK(run({"graph-check", "--ell", "4", "--n", "41", "--set", "1,5"}).code == 2);
}

TEST_CASE("rsat") {
  const auto built = run({"rsat", "--ell", "4", "--n", "401", "--format", "structured"});
  CHECK(built.code == 0);
  const auto r = sumfree::rsat_from_record(lines(built.out).at(0));
  CHECK(r.edges == 15238);
  const auto searched = run({"rsat", "--ell", "4", "--n", "41", "--format", "structured"});
  CHECK(searched.code == 0);
  CHECK(sumfree::rsat_from_record(lines(searched.out).at(0)).product_bound == 246);
  CHECK(run({"rsat", "--ell", "4", "--n", "41", "--set", "1,5,11,30,36,40"}).code == 0);
  CHECK(run({"rsat", "--ell", "4", "--n", "41", "--set", "1,40"}).code == 1);
}
