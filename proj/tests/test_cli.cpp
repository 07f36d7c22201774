#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lefschetz/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "lefschetz");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = lefschetz::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("lefschetz-cli-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("hilbert") {
  auto r = run({"hilbert", "--family", "irkd", "--r", "3", "--k", "3", "--d", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 3 6 6 3\n");
  r = run({"hilbert", "--gens", "a^2, b^2", "--vars", "a,b", "--char", "0", "--char", "2"});
  CHECK(r.out == "char 0: 1 2 1\nchar 2: 1 2 1\n");
  r = run({"hilbert", "--family", "jr", "--r", "4", "--json"});
  const auto h = json_of(r)["results"][0]["hilbert"];
  CHECK(std::vector<int>(h.begin(), h.begin() + 7) == std::vector<int>{1, 4, 10, 20, 30, 36, 34});
  CHECK(json_of(r)["schema_version"] == "1");
  r = run({"hilbert", "--family", "irr", "--r", "3", "--csv"});
  CHECK(r.out.rfind("char,degree,h\n0,0,1\n0,1,3\n", 0) == 0);
}

TEST_CASE("wlp") {
  auto r = run({"wlp", "--family", "aci3", "--a", "10", "--b", "10", "--c", "10", "--alpha", "3", "--beta", "3", "--gamma",
                "3", "--char", "0", "--char", "2", "--char", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("char 0: WLP: holds (conclusive)") != std::string::npos);
  CHECK(r.out.find("char 2: WLP: fails (conclusive) at") != std::string::npos);
  CHECK(r.out.find("char 5: WLP: holds") != std::string::npos);

  r = run({"wlp", "--family", "jr", "--r", "3", "--char", "3", "--json"});
  const auto j = json_of(r);
  CHECK(j["verdicts"][0]["has_wlp"] == false);
  CHECK(j["verdicts"][0]["conclusive"] == true);
  CHECK(j["strategy"] == "paper");
  CHECK(j["seed"] == 0xC0C0A);

  r = run({"wlp", "--gens", "x^2, y^2, z^2", "--form", "x + y"});
  CHECK(r.out == "WLP: fails (not conclusive) at 1->2\n");
  r = run({"wlp", "--family", "irr", "--r", "3", "--details"});
  CHECK(r.out.find("2->3  6 -> 6  rank 5  NOT MAXIMAL") != std::string::npos);
  r = run({"wlp", "--family", "irr", "--r", "3", "--csv"});
  CHECK(r.out.find("0,2,6,6,5,0,0,0") != std::string::npos);
}

TEST_CASE("seed precedence") {
  ::unsetenv("LEFSCHETZ_SEED");
  auto seed_of = [](std::vector<std::string> extra) {
    std::vector<std::string> args{"wlp", "--family", "jr", "--r", "4", "--strategy", "random", "--json"};
    args.insert(args.end(), extra.begin(), extra.end());
    return json_of(run(args))["seed"].get<std::uint64_t>();
  };
  CHECK(seed_of({}) == 0xC0C0A);
  ::setenv("LEFSCHETZ_SEED", "42", 1);
  CHECK(seed_of({}) == 42);
  CHECK(seed_of({"--seed", "7"}) == 7);
  ::setenv("LEFSCHETZ_SEED", "0x10", 1);
  CHECK(seed_of({}) == 16);
  ::setenv("LEFSCHETZ_SEED", "banana", 1);
  CHECK(run({"wlp", "--family", "jr", "--r", "4"}).code == 2);
  ::unsetenv("LEFSCHETZ_SEED");
}

TEST_CASE("detm") {
  auto r = run({"detm", "--alpha", "3", "--beta", "3", "--gamma", "3", "--t", "7", "--json"});
  CHECK(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["det"] == "78408");
  CHECK(j["signed_det"] == "-78408");
  CHECK(j["factors"] == nlohmann::json::parse(R"({"2":3,"3":4,"11":2})"));
  CHECK(j["failing_characteristics"] == nlohmann::json::parse("[2,3,11]"));
  CHECK(j["size"] == 7);
  CHECK(j["matrix"].size() == 7);
  r = run({"detm", "--alpha", "3", "--beta", "3", "--gamma", "3", "--t", "7"});
  CHECK(r.out.find("det = -78408 = -2^3 * 3^4 * 11^2") != std::string::npos);
  r = run({"detm", "--alpha", "1", "--beta", "1", "--gamma", "1", "--t", "2"});
  CHECK(r.out.find("WLP fails in every characteristic") != std::string::npos);
  r = run({"detm", "--alpha", "1", "--beta", "1", "--gamma", "2", "--t", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("alpha + beta + gamma = 0 mod 3") != std::string::npos);
}

TEST_CASE("witness") {
  auto r = run({"witness", "--family", "irr", "--r", "3", "--degree", "2"});
  CHECK(r.out == "x^2 - x*y - x*z + y^2 - y*z + z^2\n");
  r = run({"witness", "--gens", "x^3, y^3, z^3", "--degree", "2", "--char", "3"});
  CHECK(r.out == "x^2 + 2*x*y + 2*x*z + y^2 + 2*y*z + z^2\n");
  r = run({"witness", "--family", "irr", "--r", "3", "--degree", "1", "--json"});
  CHECK(json_of(r)["results"][0]["witness"].is_null());
}

TEST_CASE("chain and betti") {
  auto r = run({"chain", "--r", "5"});
  CHECK(r.out.find("h: 1 5 15 35 70 120 180 240 285 300 280 230 165 100 50 20 5\n") != std::string::npos);
  CHECK(r.out.find("J3 = (x1^5, x2^5, x3^5, x4^4, x5^4, x1*x2*x3)") != std::string::npos);
  r = run({"chain", "--r", "4", "--variant", "jr", "--json"});
  CHECK(json_of(r)["chain"].size() == 4);
  r = run({"betti", "--family", "irk", "--r", "3", "--k", "3"});
  CHECK(r.out.find("F1: R(-3)^4") != std::string::npos);
  r = run({"betti", "--family", "jr", "--r", "3"});
  CHECK(r.code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"wlp"}).code == 2);
  CHECK(run({"wlp", "--family", "irkd", "--r", "3"}).code == 2);
  CHECK(run({"wlp", "--family", "irkd", "--r", "3", "--k", "3", "--d", "9"}).code == 2);
  CHECK(run({"wlp", "--gens", "x^2, w", "--vars", "x,y"}).code == 2);
  CHECK(run({"wlp", "--gens", "x^2, y^2"}).code == 2);  // not Artinian in x, y, z
  CHECK(run({"wlp", "--family", "irr", "--r", "3", "--char", "4"}).code == 2);
  CHECK(run({"wlp", "--family", "irr", "--r", "3", "--strategy", "magic"}).code == 2);
  CHECK(run({"hilbert", "--family", "irr", "--r", "3", "--json", "--csv"}).code == 2);
  CHECK(run({"sweep", "--kind", "half-conj", "--max-sum", "30"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify-paper") != std::string::npos);
}

TEST_CASE("--out and sweep files") {
  TempDir dir;
  const auto out = dir.path / "h.txt";
  CHECK(run({"hilbert", "--family", "irr", "--r", "3", "--out", out.string()}).code == 0);
  CHECK(slurp(out) == "1 3 6 6 3\n");

  const auto sweep_path = dir.path / "aci.jsonl";
  auto r = run({"sweep", "--kind", "aci3-mod3", "--max-param", "3", "--jobs", "2", "--out", sweep_path.string()});
  CHECK(r.code == 0);
  const auto a = slurp(sweep_path);
  const auto csv = slurp(dir.path / "aci.csv");
  CHECK(csv.rfind("index,kind,params,wlp_char0,ok\n", 0) == 0);
  std::istringstream in(a);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line); ++n) CHECK(nlohmann::json::parse(line)["ok"] == true);
  CHECK(r.out.find("wrote " + std::to_string(n) + " records") != std::string::npos);

  // stdout mode writes the same records
  r = run({"sweep", "--kind", "aci3-mod3", "--max-param", "3", "--jobs", "1"});
  std::istringstream in2(r.out);
  std::size_t m = 0;
  for (std::string line; std::getline(in2, line);) m += !line.empty();
  CHECK(m == n);
}

TEST_CASE("verify-paper subset") {
  auto r = run({"verify-paper", "--only", "2", "--only", "9"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS [2]") != std::string::npos);
  CHECK(r.out.find("PASS [9]") != std::string::npos);
  CHECK(r.out.find("2/2 criteria passed") != std::string::npos);
  r = run({"verify-paper", "--only", "13"});
  CHECK(r.code != 0);
}
