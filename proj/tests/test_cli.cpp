#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using uniso::cli::run;

namespace {

const char* kKronecker = R"(field GF(5)
quiver { vertex 1 2; arrow a 1 2; arrow b 1 2 }
module U1 = P(1)/gen(b - 1*a)
module U2 { dims 1:1 2:1; map a [1]; map b [2] }
module V { dims 1:1 2:1; map a [1]; map b [1] }
assert iso(U1, V)
assert not-iso(U1, U2) via nfold
)";

const char* kCyclic = R"(field GF(3)
quiver { vertex 1; arrow x 1 1 }
relations { bound 3 }
module U = P(1)
assert iso(U, U) via direct
)";

struct Run {
  int code;
  std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "uniso_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("check passes and fails with the right exit codes") {
  const std::string good = write_temp("good.ws", kKronecker);
  const Run ok = cli({"check", good});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("2/2 assertions passed") != std::string::npos);

  const std::string bad = write_temp("bad.ws", std::string(kKronecker) + "assert iso(U1, U2)\n");
  const Run fail = cli({"check", bad});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("FAIL line 8: iso(U1, U2)") != std::string::npos);
  CHECK(fail.out.find("2/3 assertions passed") != std::string::npos);
}

TEST_CASE("usage, syntax, semantic and cap exit codes") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"check"}).code == 2);
  CHECK(cli({"check", "/nonexistent/file.ws"}).code == 2);

  const Run syn = cli({"check", write_temp("empty.ws", "")});
  CHECK(syn.code == 2);
  CHECK(syn.err.find("missing field declaration") != std::string::npos);

  const Run sem = cli({"check", write_temp("rel.ws",
                                           "field GF(3)\nquiver { vertex 1; arrow a 1 1 }\nrelations { zero a a }\n"
                                           "module S { dims 1:1; map a [1] }\n")});
  CHECK(sem.code == 4);
  CHECK(sem.err.find("relation violated: a·a ≠ 0") != std::string::npos);

  const std::string cyc = write_temp("cyclic.ws", kCyclic);
  CHECK(cli({"check", cyc}).code == 0);
  const Run cap = cli({"--cap", "1", "check", cyc});
  CHECK(cap.code == 3);
  CHECK(cli({"--cap", "1", "iso", cyc, "U", "U", "--method", "direct"}).code == 3);
  CHECK(cli({"--cap", "0", "check", cyc}).code == 2);
}

TEST_CASE("iso subcommand") {
  const std::string ws = write_temp("iso.ws", kKronecker);
  const Run diff = cli({"iso", ws, "U1", "U2", "--method", "nfold"});
  CHECK(diff.code == 1);
  CHECK(diff.out.find("not_isomorphic, hom dimension 0") != std::string::npos);
  CHECK(cli({"iso", ws, "U1", "V", "--method", "all"}).code == 0);
  CHECK(cli({"iso", ws, "U1", "V", "--method", "guess"}).code == 2);
  CHECK(cli({"iso", ws, "U1", "W"}).code == 2);
}

TEST_CASE("analyze and hom") {
  const std::string ws = write_temp("an.ws", kKronecker);
  const Run a = cli({"analyze", ws, "U2"});
  CHECK(a.code == 0);
  CHECK(a.out.find("uniserial yes") != std::string::npos);
  const Run aj = cli({"analyze", ws, "U2", "--json"});
  const auto j = nlohmann::json::parse(aj.out);
  CHECK(j["length"] == 2);
  CHECK(j["uniform"] == true);
  CHECK(j["socle"] == nlohmann::json::array({0, 1}));

  const Run h = cli({"--json", "hom", ws, "U1", "V"});
  CHECK(h.code == 0);
  CHECK(nlohmann::json::parse(h.out)["dimension"] == 1);
}

TEST_CASE("json output is byte-identical across runs") {
  const std::string ws = write_temp("json.ws", kKronecker);
  for (const auto& args : std::vector<std::vector<std::string>>{{"--json", "check", ws},
                                                                {"iso", ws, "U1", "V", "--method", "all", "--json"},
                                                                {"gallery", "triangular", "--json"},
                                                                {"lattice", "all", "--json"}}) {
    const Run first = cli(args), second = cli(args);
    CHECK(first.out == second.out);
    CHECK_NOTHROW(nlohmann::json::parse(first.out));
  }
}

TEST_CASE("gallery and lattice subcommands") {
  const Run list = cli({"gallery"});
  CHECK(list.code == 0);
  CHECK(list.out.find("euclidean_An\n") != std::string::npos);

  const std::string out = (fs::temp_directory_path() / "uniso_cli_test" / "eu.ws").string();
  CHECK(cli({"gallery", "euclidean_An", "5", "--field", "GF(7)", "-o", out}).code == 0);
  CHECK(cli({"check", out}).code == 0);
  CHECK(cli({"gallery", "nope"}).code == 2);
  CHECK(cli({"gallery", "ex1_PQ", "--field", "GF(6)"}).code == 2);

  const Run tri = cli({"gallery", "triangular"});
  CHECK(tri.code == 0);
  CHECK(tri.out.find("proper_nonzero_count 7") != std::string::npos);

  const Run lat = cli({"lattice", "prop-chain"});
  CHECK(lat.code == 0);
  CHECK(lat.out.find("fixed point forces offset 0") != std::string::npos);
  CHECK(cli({"lattice", "all"}).code == 0);
  CHECK(cli({"lattice", "nope"}).code == 2);
}

TEST_CASE("the installed binary behaves like the library entry point") {
  const std::string ws = write_temp("bin.ws", kKronecker);
  const std::string bin = UNISO_BINARY;
  CHECK(std::system((bin + " check " + ws + " > /dev/null").c_str()) == 0);
  const int status = std::system((bin + " frobnicate 2> /dev/null").c_str());
  CHECK(WEXITSTATUS(status) == 2);
}
