#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ptk/cli.hh"
#include "ptk/extremal.hh"
#include "ptk/io.hh"

using namespace ptk;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("ptk_test_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

const std::string kOneState = "alphabet: a b\nstates: 0\ninitial: 0\naccepting: 0\n0 a 0\n0 b 0\n";
const std::string kParity = "alphabet: a\nstates: e o\ninitial: e\naccepting: e\ne a o\no a e\n";

}  // namespace

TEST_CASE("pkn prints the bare value") {
  const Result r = cli({"pkn", "6", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "923\n");
  CHECK(cli({"pkn", "6", "6", "--stirling"}).out == "923\n");
  CHECK(cli({"pkn", "0", "6"}).code == 2);
  CHECK(cli({"pkn", "40", "40"}).code == 2);
}

TEST_CASE("min-k on A_2") {
  const std::string file = write_temp("a2.txt", serialize_automaton(gen_ak(2)));
  const Result r = cli({"min-k", file});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
  const auto j = nlohmann::json::parse(cli({"--json", "min-k", file}).out);
  CHECK(j["min-k"] == 3);
  CHECK(j["kind"] == "exact");
  const Result tight = cli({"min-k", "--budget", "20", write_temp("a3.txt", serialize_automaton(gen_ak(3)))});
  CHECK(tight.code == 3);
  CHECK(tight.out == "3..15\n");
  CHECK(cli({"min-k", "-"}, kParity).code == 1);
}

TEST_CASE("is-kpt") {
  CHECK(cli({"is-kpt", "--k", "0", "-"}, kOneState).code == 0);
  const std::string a2 = serialize_automaton(gen_ak(2));
  CHECK(cli({"is-kpt", "--k", "2", "-"}, a2).code == 1);
  const Result yes = cli({"is-kpt", "--k", "3", "-"}, a2);
  CHECK(yes.code == 0);
  CHECK(yes.out.find("k-pt: yes\n") != std::string::npos);
  CHECK(yes.out.find("method: identities-3\n") != std::string::npos);
  const Result oracle = cli({"is-kpt", "--k", "4", "-"}, a2);
  CHECK(oracle.code == 0);
  CHECK(oracle.out.find("method: oracle\n") != std::string::npos);
  CHECK(cli({"is-kpt", "--k", "4", "--budget", "5", "-"}, a2).code == 3);
}

TEST_CASE("witness and verify round-trip through the text report") {
  const std::string file = write_temp("a2w.txt", serialize_automaton(gen_ak(2)));
  const Result w = cli({"witness", "--k", "2", file});
  REQUIRE(w.code == 0);
  std::map<std::string, std::string> fields;
  std::istringstream lines(w.out);
  for (std::string line; std::getline(lines, line);) {
    const auto colon = line.find(": ");
    fields[line.substr(0, colon)] = line.substr(colon + 2);
  }
  const Result v = cli({"verify", "--k", "2", "--w1", fields["w1"], "--w2", fields["w2"], file});
  CHECK(v.code == 0);
  CHECK(v.out.find("valid: yes") != std::string::npos);
  CHECK(cli({"verify", "--k", "2", "--w1", fields["w1"], "--w2", fields["w1"], file}).code == 1);
  CHECK(cli({"verify", "--k", "2", "--w1", "a7", "--w2", "-", file}).code == 2);
  CHECK(cli({"witness", "--k", "3", file}).code == 1);
}

TEST_CASE("info, depth, determinize, minimize") {
  const std::string a2 = serialize_automaton(gen_ak(2));
  const Result info = cli({"info", "-"}, a2);
  CHECK(info.code == 0);
  CHECK(info.out.find("deterministic: no\n") != std::string::npos);
  CHECK(info.out.find("depth: 2\n") != std::string::npos);
  CHECK(cli({"info", "-"}, kParity).out.find("depth: cyclic\n") != std::string::npos);
  CHECK(cli({"depth", "-"}, a2).out == "2\n");
  CHECK(cli({"depth", "-"}, kParity).code == 2);
  const Result det = cli({"determinize", "-"}, a2);
  CHECK(det.code == 0);
  CHECK(parse_automaton(det.out).is_deterministic());
  const Result min = cli({"minimize", "-"}, a2);
  CHECK(cli({"depth", "-"}, min.out).out == "7\n");
  const auto j = nlohmann::json::parse(cli({"--json", "minimize", "-"}, a2).out);
  CHECK(j["states"] == 8);
}

TEST_CASE("is-pt, decompose, monoid, canonical") {
  CHECK(cli({"is-pt", "-"}, kParity).code == 1);
  CHECK(cli({"is-pt", "-"}, serialize_automaton(gen_ak(3))).code == 0);
  const std::string eps = "alphabet: a b\nstates: 0 1\ninitial: 0\naccepting: 0\n0 a 1\n0 b 1\n1 a 1\n1 b 1\n";
  const Result d = cli({"decompose", "--k", "1", "-"}, eps);
  CHECK(d.code == 0);
  CHECK(d.out.find("expression: (!a & !b)\n") != std::string::npos);
  CHECK(cli({"decompose", "--k", "0", "-"}, eps).code == 2);
  const Result m = cli({"monoid", "--check-identities", "2", "-"}, serialize_automaton(gen_ak(2)));
  CHECK(m.code == 1);
  CHECK(m.out.find("aperiodic: yes\n") != std::string::npos);
  CHECK(m.out.find("fails:") != std::string::npos);
  CHECK(cli({"monoid", "--check-identities", "3", "-"}, serialize_automaton(gen_ak(2))).code == 0);
  CHECK(cli({"monoid", "--check-identities", "4", "-"}, eps).code == 2);
  const Result c = cli({"canonical", "--k", "2", "--letters", "2"});
  CHECK(c.code == 0);
  CHECK(cli({"depth", "-"}, c.out).out == "5\n");
  CHECK(cli({"canonical", "--k", "3", "--letters", "3", "--budget", "10"}).code == 3);
}

TEST_CASE("generators") {
  CHECK(cli({"gen", "wk", "2"}).out == "a0 a1 a0 a2 a0 a1 a0\n");
  CHECK(cli({"gen", "wkn", "2", "2"}).out == "a1 a1 a2 a1 a2\n");
  CHECK(cli({"gen", "ak", "2"}).out == serialize_automaton(gen_ak(2)));
  const Result cap = cli({"gen", "cap", "3"});
  CHECK(parse_automaton(cap.out).num_states() == 8);
  const Result tight = cli({"gen", "tight", "2", "2"});
  CHECK(tight.code == 0);
  const Result min = cli({"minimize", "-"}, tight.out);
  CHECK(cli({"depth", "-"}, min.out).out == "5\n");
  CHECK(cli({"gen", "wkn", "0", "2"}).code == 2);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"is-kpt", "-"}, kOneState).code == 2);
  CHECK(cli({"info", "/nonexistent/file"}).code == 2);
  const Result bad = cli({"info", "-"}, "alphabet: a\nstates: 0\n0 b 0\n");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 3") != std::string::npos);
  CHECK(cli({"--help"}).code == 0);
}
