#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "trichow/cli.hpp"
#include "trichow/errors.hpp"

using namespace trichow;
using nlohmann::json;

namespace {

const std::string kCorpus = CORPUS_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return kCorpus + "/" + name; }

std::vector<std::string> corpus_files() {
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(kCorpus))
    if (e.path().extension() == ".sys") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  return files;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A throwaway file in the temp directory for malformed inputs.
std::string scratch(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("trichow_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("system files") {
  auto sys = parse_system("# comment\nparams m=2 n=2\npoly X1 + 1 + Y1*X2\npoly X2 + Y2*X1\n");
  CHECK(sys.m == 2);
  CHECK(sys.n == 2);
  CHECK(sys.gens.size() == 2);

  auto kind = [](const std::string& text) {
    try {
      (void)parse_system(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Structural;
  };
  CHECK(kind("params m=0 n=1\npoly 0\n") == ErrorKind::ZeroPolynomial);
  CHECK(kind("params m=0 n=2\npoly X3 - 1\n") == ErrorKind::UnknownVariable);
  CHECK_THROWS_AS(parse_system("poly X1\n"), ParseError);
  CHECK_THROWS_AS(parse_system("params m=0 n=1\npoly X1 +\n"), ParseError);

  for (const auto& f : corpus_files()) {
    auto s = parse_system(slurp(f));
    auto again = parse_system(print_system(s));
    CHECK_MESSAGE(print_system(again) == print_system(s), f);
    REQUIRE(again.gens.size() == s.gens.size());
    for (std::size_t i = 0; i < s.gens.size(); ++i) CHECK(again.gens[i] == s.gens[i]);
  }
}

TEST_CASE("worked example through the command line") {
  auto tri = run({"triangularize", corpus("worked.sys")});
  REQUIRE(tri.code == kOk);
  auto j = json::parse(tri.out);
  CHECK(j["levels"][0]["poly"] == "X1 - (1/(Y1*Y2 - 1))");
  CHECK(j["levels"][1]["poly"] == "X2 + Y2*X1");

  auto d = run({"delta", corpus("worked.sys")});
  CHECK(d.code == kOk);
  CHECK(d.out == "{\"delta\":[2,1]}\n");

  auto v = run({"verify", corpus("worked.sys")});
  CHECK(v.code == kOk);
  CHECK(v.out == "{\"propDH\":\"pass\",\"theorem1\":\"pass\"}\n");

  auto text = run({"--format", "text", "verify", corpus("worked.sys")});
  CHECK(text.code == kOk);
  CHECK(text.out.find("propDH: pass") != std::string::npos);
  CHECK(text.out.find("details.theorem1.levels[1].pass: true") != std::string::npos);

  auto chain = run({"chain", corpus("worked.sys")});
  CHECK(chain.code == kOk);
  CHECK(json::parse(chain.out)["levels"].size() == 2);

  auto chow = run({"chow", corpus("worked.sys")});
  CHECK(chow.code == kOk);
  CHECK(json::parse(chow.out)["degree"] == 1);

  auto mod = run({"modular-delta", corpus("worked.sys"), "--prime", "7"});
  CHECK(mod.code == kOk);
  CHECK(json::parse(mod.out)["runs"][0]["delta"] == json::array({2, 1}));
  auto bad = run({"modular-delta", corpus("rational.sys"), "--prime", "2"});
  CHECK(bad.code == kOk);
  CHECK(json::parse(bad.out)["runs"][0]["failure"] == "DenominatorVanishesModP");
}

TEST_CASE("every corpus system goes through every file command") {
  for (const auto& f : corpus_files()) {
    for (std::string cmd : {"triangularize", "chain", "delta", "chow", "verify"}) {
      auto r = run({cmd, f});
      CHECK_MESSAGE(r.code == kOk, cmd << " " << f << ": " << r.err);
      CHECK(json::accept(r.out));
    }
  }
}

TEST_CASE("bounds and prime range") {
  auto b = run({"bounds", "--m", "1", "--n", "12", "--d", "3", "--h", "20"});
  REQUIRE(b.code == kOk);
  auto j = json::parse(b.out);
  CHECK(j["bezout_degree"]["exact"] == "531441");
  double bits = j["prime_range_hi"]["value_bits"];
  CHECK(bits == doctest::Approx(124.44).epsilon(1e-3));
  for (const auto& [k, v] : j.items()) {
    CHECK_MESSAGE(v.contains("value_ln"), k);
    CHECK_MESSAGE(v.contains("formula_ref"), k);
  }

  auto p = run({"prime-range", "--m", "1", "--n", "12", "--d", "3", "--h", "20"});
  REQUIRE(p.code == kOk);
  auto pr = json::parse(p.out);
  CHECK(pr["hi"] == "28910081300551228466960574014399673791");
  CHECK(pr["hi_bits"] == 125);

  CHECK(run({"bounds", "--m", "1", "--n", "2", "--d", "2", "--h", "1/2"}).code == kOk);
  CHECK(run({"bounds", "--m", "1", "--n", "2", "--d", "2", "--h", "x"}).code == kParse);
  CHECK(run({"bounds", "--m", "1", "--n", "2", "--d", "2"}).code == kParse);
  CHECK(run({"bounds", "--m", "1", "--n", "0", "--d", "2", "--h", "1"}).code == kParse);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kParse);
  CHECK(run({"frobnicate"}).code == kParse);
  CHECK(run({"delta", corpus("no_such_file.sys")}).code == kOther);
  CHECK(run({"delta", scratch("unknown.sys", "params m=0 n=2\npoly X3\n")}).code == kParse);
  CHECK(run({"delta", scratch("syntax.sys", "params m=0 n=1\npoly X1 *\n")}).code == kParse);
  CHECK(run({"delta", scratch("positive_dim.sys", "params m=0 n=2\npoly X1 - 1\n")}).code == kAssumption);
  CHECK(run({"delta", scratch("not_lazard.sys", "params m=0 n=2\npoly X1^2 - X1\npoly X1*X2\npoly X2^2 - X2\n")}).code ==
        kAssumption);
  CHECK(run({"modular-delta", corpus("worked.sys")}).code == kParse);
  CHECK(run({"modular-delta", corpus("worked.sys"), "--prime", "9"}).code == kOk);
  auto help = run({"--help"});
  CHECK(help.code == kOk);
  CHECK(help.out.find("prime-range") != std::string::npos);
}

TEST_CASE("output is byte-identical for a fixed seed") {
  std::vector<std::string> args = {"modular-delta", corpus("two_params.sys"), "--auto", "--seed", "11", "--trials",
                                   "3"};
  auto a = run(args), b = run(args);
  REQUIRE(a.code == kOk);
  CHECK(a.out == b.out);
  auto j = json::parse(a.out);
  CHECK(j["runs"].size() == 3);
  auto c = run({"modular-delta", corpus("two_params.sys"), "--auto", "--seed", "12", "--trials", "3"});
  CHECK(c.out != a.out);

  for (const auto& f : corpus_files()) CHECK(run({"chow", f}).out == run({"chow", f}).out);
}
