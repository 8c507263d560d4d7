#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "binestim/instance_io.hpp"
#include "binestim/oracle.hpp"
#include "binestim/referee.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result cli(const std::string& args) {
  const std::string cmd = std::string(BINESTIM_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

double ratio_of(const std::string& csv_line) {
  std::vector<std::string> fields;
  std::istringstream in(csv_line);
  for (std::string f; std::getline(in, f, ',');) fields.push_back(f);
  REQUIRE(fields.size() == 9);
  return std::stod(fields[7]);
}

const std::filesystem::path kDir = std::filesystem::temp_directory_path() / "binestim_cli_test";

std::string tmp(const std::string& name) {
  std::filesystem::create_directories(kDir);
  return (kDir / name).string();
}

}  // namespace

TEST_CASE("gen") {
  const auto a = tmp("a.txt");
  CHECK(cli("gen --profile halves --n 10 --delta 1/35 --seed 7 --out " + a).code == 0);
  const auto inst = binestim::read_instance_file(a);
  CHECK(inst.announcement.size() == 10);
  CHECK(inst.has_actual());

  const auto twobin = cli("gen --profile twobin --n 8 --delta 1/10 --seed 3");
  REQUIRE(twobin.code == 0);
  for (const auto& s : binestim::parse_instance(twobin.out).actual) CHECK(s > binestim::Rational(1, 3));

  CHECK(cli("gen --profile halves --n 10 --delta 0 --seed 7").code == 2);
  CHECK(cli("gen --profile halves --n 10 --delta 0.5 --seed 7").code == 2);
  CHECK(cli("gen --profile halves --n 10 --delta 1/35 --seed 7 --colour red").code == 2);
  CHECK(cli("gen --profile zipf --n 10 --delta 1/35").code == 2);
}

TEST_CASE("run") {
  const auto a = tmp("run.txt");
  REQUIRE(cli("gen --profile halves --n 10 --delta 1/35 --seed 7 --out " + a).code == 0);
  const auto ph = cli("run --alg ph --in " + a + " --opt-mode exact --c 3/2 --K 4");
  CHECK(ph.code == 0);
  const auto ph_lines = lines(ph.out);
  REQUIRE(ph_lines.size() == 2);
  CHECK(ph_lines[0] == "instance_id,algorithm,n,delta,alg_bins,opt_bins,opt_mode,ratio,guarantee_ok");
  CHECK(ph_lines[1].ends_with(",true"));

  const auto two = cli("run --alg bestfit,firstfit --gen uniform:20:1/10:42");
  CHECK(two.code == 0);
  CHECK(lines(two.out).size() == 3);

  const auto json = cli("run --alg bestfit --gen mixed:12:1/10:1 --trials 3 --format json");
  CHECK(json.code == 0);
  CHECK(nlohmann::json::parse(json.out).size() == 3);

  CHECK(cli("run --alg bestfit --in " + tmp("missing.txt")).code == 2);
  CHECK(cli("run --alg bestfit").code == 2);
  CHECK(cli("run --alg nosuchfit --gen uniform:20:1/10:42").code == 2);
  CHECK(cli("run --alg bestfit --gen uniform:20:1/10:42 --c 1.5").code == 2);
  // A guarantee that cannot hold: bins <= 1/2 OPT.
  CHECK(cli("run --alg nextfit --gen uniform:20:1/10:42 --c 1/2").code == 1);
}

TEST_CASE("run output is deterministic") {
  const std::string args = "run --alg ph,dbf,bestfit --gen mixed:14:1/35:5 --trials 8 --c 3/2 --K 4";
  const auto first = cli(args);
  const auto second = cli(args + " --jobs 3");
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("duel") {
  const auto t = tmp("duel.json");
  const auto h4 = cli("duel --alg harmonic4 --adversary fourthirds --n 150 --delta 1/100 --transcript " + t);
  CHECK(h4.code == 0);
  REQUIRE(lines(h4.out).size() == 2);
  CHECK(ratio_of(lines(h4.out)[1]) >= 1.2833);
  std::ifstream in(t);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto transcript = binestim::transcript_from_json(text);
  CHECK(transcript.bins_used() == 200);

  const auto yao = cli("duel --alg nextfit --adversary yao4143 --n 120 --delta 42/43");
  CHECK(yao.code == 0);
  CHECK(ratio_of(lines(yao.out)[1]) >= 1.41);

  CHECK(cli("duel --alg nextfit --adversary fourthirds --n 5 --delta 1/100").code == 2);
  CHECK(cli("duel --alg nextfit --adversary yao4143 --n 12 --delta 1/2").code == 2);
}

TEST_CASE("opt") {
  const auto small = tmp("small.txt");
  {
    std::ofstream out(small);
    out << "binestim-v1\ndelta 1/10\nn 4\nannounce 3/5 2/5 1/2 3/10\nactual 3/5 2/5 1/2 3/10\n";
  }
  const auto r = cli("opt --in " + small);
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("bins") == 2);
  CHECK(j.at("exact") == true);

  const auto big = tmp("big.txt");
  REQUIRE(cli("gen --profile uniform --n 30 --delta 1/10 --seed 1 --out " + big).code == 0);
  CHECK(cli("opt --in " + big + " --mode exact").code == 2);

  const auto two = tmp("two.txt");
  REQUIRE(cli("gen --profile twobin --n 30 --delta 1/10 --seed 1 --out " + two).code == 0);
  const auto p = cli("opt --in " + two + " --mode pairing");
  REQUIRE(p.code == 0);
  const auto pj = nlohmann::json::parse(p.out);
  CHECK(pj.at("exact") == true);
  const auto inst = binestim::read_instance_file(two);
  CHECK(pj.at("bins") == binestim::opt_pairing(inst.actual).bins);
}

TEST_CASE("verify") {
  const auto w = cli("verify --suite weights --trials 20");
  CHECK(w.code == 0);
  CHECK(w.out.find("PASS") != std::string::npos);
  CHECK(w.out.find("FAIL") == std::string::npos);
  CHECK(cli("verify --suite dbf-lemmas --trials 20").code == 0);
  CHECK(cli("verify --suite oracle-equiv --trials 50").code == 0);
  CHECK(cli("verify --suite astrology").code == 2);
}
