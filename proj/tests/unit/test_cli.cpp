#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

const std::string cli = RANKRING_CLI_PATH;
const std::string fixtures = RANKRING_FIXTURES_DIR;

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = cli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int raw = pclose(pipe);
  return {WEXITSTATUS(raw), out};
}

std::filesystem::path temp_dir() {
  auto d = std::filesystem::temp_directory_path() / "rankring_cli_test";
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("verify-examples") {
  const Run all = run("verify-examples");
  CHECK(all.status == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);
  const Run only = run("verify-examples --only distance");
  CHECK(only.status == 0);
  CHECK(only.out.find("crt") == std::string::npos);
  CHECK(only.out.find("d(C) by brute force") != std::string::npos);

  // Negative control: corrupt one coefficient of h in a copy of the fixtures.
  const auto dir = temp_dir() / "corrupt";
  std::filesystem::create_directories(dir);
  for (const auto& f : std::filesystem::directory_iterator(fixtures))
    std::filesystem::copy_file(f.path(), dir / f.path().filename(), std::filesystem::copy_options::overwrite_existing);
  auto j = nlohmann::json::parse(std::ifstream(dir / "example31.json"));
  j["h"][0] = 2;
  std::ofstream(dir / "example31.json") << j.dump();
  const Run bad = run("verify-examples --only irreducible --fixtures " + dir.string());
  CHECK(bad.status == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
  CHECK(run("verify-examples --only nonsense").status == 2);
}

TEST_CASE("min-distance and count") {
  const Run d = run("min-distance --code " + fixtures + "/example31.json");
  CHECK(d.status == 0);
  CHECK(d.out == "3\n");
  CHECK(run("min-distance --code " + fixtures + "/example31.json --method both").out == "3\n");
  CHECK(run("count --p 2 --nu 2 --n 2 --k 1").out == "9\n");
  CHECK(run("count --p 2 --nu 2 --n 2 --k 1 --enumerate").out == "9\n");
  CHECK(run("count --q 2 --lambda 2,2 --mu 2").out == "6\n");
  CHECK(run("min-distance --code /nonexistent.json").status == 2);
}

TEST_CASE("decode") {
  const Run h = run("decode --instance " + fixtures + "/final_example.json --format human");
  CHECK(h.status == 0);
  CHECK(h.out.find("e = (6a^2+2, 0, 4a^2+4, 2a^2+6)") != std::string::npos);
  const Run js = run("decode --instance " + fixtures + "/final_example.json --algorithm 1 --seed 3");
  CHECK(js.status == 0);
  const auto report = nlohmann::json::parse(js.out);
  CHECK(report["rank"] == 1);
  CHECK(report["error_text"] == "(6a^2+2, 0, 4a^2+4, 2a^2+6)");
  CHECK(run("decode --instance " + fixtures + "/final_example.json --algorithm 7").status == 2);

  const auto empty = temp_dir() / "empty.json";
  std::ofstream(empty).close();
  const Run e = run("decode --instance " + empty.string());
  CHECK(e.status == 2);
  CHECK(e.out.find("empty") != std::string::npos);
  const auto missing = temp_dir() / "missing_h.json";
  std::ofstream(missing) << R"({"ring": {"p": 2, "nu": 2}, "h": [1, 1, 1], "r": 1, "s": []})";
  const Run m = run("decode --instance " + missing.string());
  CHECK(m.status == 2);
  CHECK(m.out.find("'H'") != std::string::npos);
}

TEST_CASE("gen then decode") {
  const auto file = temp_dir() / "planted.json";
  CHECK(run("gen --p 2 --nu 2 --m 4 --n 4 --k 2 --r 1 --seed 11 -o " + file.string()).status == 0);
  CHECK(std::filesystem::exists(file.string() + ".planted.json"));
  const Run d = run("decode --instance " + file.string());
  CHECK(d.status == 0);
  const auto report = nlohmann::json::parse(d.out);
  CHECK(report["rank"] == 1);

  const auto pir = temp_dir() / "pir.json";
  CHECK(run("gen --eta 12 --m 2 --n 3 --k 1 --r 1 --seed 2 -o " + pir.string()).status == 0);
  const Run dp = run("decode --instance " + pir.string());
  CHECK(dp.status == 0);
  CHECK(nlohmann::json::parse(dp.out)["components"].size() == 2);
  CHECK(run("gen --p 2 --nu 2 -o /nonexistent/dir/x.json").status == 2);
}

TEST_CASE("estimate and bench") {
  const Run e = run("estimate --p 2 --nu 2 --m 5 --n 5 --k 1 --r 1 --algorithm 2 --format json");
  CHECK(e.status == 0);
  const auto rows = nlohmann::json::parse(e.out);
  CHECK(rows[0]["approx_trials"] == "4");
  CHECK(rows[0]["expected_trials"] == "527/135");
  const Run empty = run("bench");
  CHECK(empty.status == 0);
  CHECK(empty.out == "p,nu,m,n,k,r,algorithm,u,seeds,mean_trials,median_trials,expected_trials,approx_trials,ratio\n");
  const Run b = run("bench --point 2:2:5:5:1:1 --seeds 20 --algorithm 2");
  CHECK(b.status == 0);
  CHECK(std::count(b.out.begin(), b.out.end(), '\n') == 2);
  const Run field = run("bench --point 2:1:6:4:1:1 --seeds 5 --algorithm 1");
  CHECK(field.out.find(",2,") != std::string::npos);
  CHECK(run("bench --point 2:2:5").status == 2);
  CHECK(run("bench --point 2:2:5:5:1:1 --seeds 200 --time-budget 0").status == 1);
}
