#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "crystals/cli.hpp"

using namespace crystals;
using namespace crystals::cli;
using nlohmann::json;

namespace {

JobSpec parse(std::initializer_list<const char*> args, const char* log = nullptr) {
  std::vector<const char*> argv{"crystals"};
  argv.insert(argv.end(), args);
  return parse_args(static_cast<int>(argv.size()), argv.data(), log);
}

struct Result {
  int code;
  std::string out, err;
};

Result run_args(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"crystals"};
  argv.insert(argv.end(), args);
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string shell(const std::string& cmd) {
  std::string s;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) s.append(buf.data(), n);
  pclose(p);
  return s;
}

}  // namespace

TEST_CASE("parse_args accepts well-formed jobs") {
  const JobSpec s = parse({"demazure", "--type", "A2", "--weight", "1,1", "--word", "2,1", "--format", "json"});
  CHECK(s.command == Command::demazure);
  CHECK(s.datum->name() == "A2");
  CHECK(s.weight == Weight{1, 1});
  CHECK(*s.word == WeylWord{2, 1});
  CHECK(s.format == Format::json);
  CHECK(parse({"rank-one", "--weight", "3"}).datum->name() == "A1");
  CHECK(parse({"crystal", "--type", "G2", "--weight", "1,0"}).format == Format::text);
  CHECK(parse({"crystal", "--type", "A1", "--weight", "1"}, "debug").log == LogLevel::debug);
  CHECK(parse({"crystal", "--type", "A1", "--weight", "2", "--max-elements", "5"}).max_elements == 5);
}

TEST_CASE("parse_args rejects malformed jobs") {
  using L = std::initializer_list<const char*>;
  for (const L& args : {
           L{},
           L{"crystal", "--weight", "1"},
           L{"crystal", "--type", "E8", "--weight", "1"},
           L{"crystal", "--type", "A2", "--weight", "1"},
           L{"crystal", "--type", "A2", "--weight", "1,-1"},
           L{"crystal", "--type", "A2", "--weight", "1,x"},
           L{"demazure", "--type", "A2", "--weight", "1,1"},
           L{"demazure", "--type", "A2", "--weight", "1,1", "--word", "1,1"},
           L{"demazure", "--type", "A2", "--weight", "1,1", "--word", "3"},
           L{"character", "--type", "A2", "--weight", "1,1", "--format", "dot"},
           L{"crystal", "--type", "A2", "--weight", "1,1", "--format", "yaml"},
           L{"rank-one", "--type", "A2", "--weight", "1,1"},
           L{"rank-one", "--weight", "-1"},
           L{"verify", "--type", "A2", "--weight", "1,1", "--inject-fault", "nonsense"},
           L{"crystal", "--type", "A1", "--weight", "1", "--max-elements", "0"},
       }) {
    std::vector<const char*> argv{"crystals"};
    argv.insert(argv.end(), args);
    CHECK_THROWS_AS(parse_args(static_cast<int>(argv.size()), argv.data(), nullptr), UsageError);
  }
  CHECK_THROWS_AS(parse({"crystal", "--type", "A1", "--weight", "1"}, "verbose"), UsageError);
}

TEST_CASE("JSON shape") {
  const CartanDatum a1 = CartanDatum::make('A', 1);
  const json zero = json::parse(emit_json(generate_crystal(a1, Weight{0})));
  CHECK(zero["elements"].size() == 1);
  CHECK(zero["edges"].empty());

  const std::string one = emit_json(generate_crystal(a1, Weight{1}));
  CHECK(one ==
        "{\"family\":\"A\",\"rank\":1,\"highest_weight\":[1],\"elements\":[{\"id\":0,\"weight\":[1],\"eps\":[0],"
        "\"phi\":[1]},{\"id\":1,\"weight\":[-1],\"eps\":[1],\"phi\":[0]}],\"edges\":[{\"from\":0,\"to\":1,\"i\":1}]}\n");

  const CrystalGraph g = generate_crystal(CartanDatum::make('A', 2), Weight{1, 1});
  const json adj = json::parse(emit_json(g));
  CHECK(adj["elements"].size() == 8);
  CHECK(adj["edges"].size() == g.edge_count());
  CHECK(adj["family"] == "A");
  CHECK_FALSE(adj.contains("members"));
  const DemazureCrystal dc = demazure_crystal(g, WeylWord{2, 1});
  const json dj = json::parse(emit_json(g, &dc));
  CHECK(dj["members"].size() == 5);
}

TEST_CASE("DOT output") {
  const CrystalGraph g = generate_crystal(CartanDatum::make('A', 2), Weight{1, 0});
  const DemazureCrystal dc = demazure_crystal(g, WeylWord{1});
  const std::string dot = emit_dot(g, &dc);
  CHECK(dot.rfind("digraph crystal {", 0) == 0);
  CHECK(dot.find("n0 -> n1 [label=\"1\"];") != std::string::npos);
  CHECK(dot.find("n1 -> n2 [label=\"2\"];") != std::string::npos);
  std::size_t filled = 0;
  for (std::size_t p = dot.find("fillcolor"); p != std::string::npos; p = dot.find("fillcolor", p + 1)) ++filled;
  CHECK(filled == 2);
}

TEST_CASE("verify passes on small crystals and fails under an injected fault") {
  for (const auto& [t, w] : {std::pair{"A1", "4"}, std::pair{"A2", "1,1"}, std::pair{"B2", "1,0"}}) {
    const VerifyReport r = run_verify(parse({"verify", "--type", t, "--weight", w}));
    CHECK_MESSAGE(r.passed(), r.text());
    CHECK(r.text().find("ALL PASS") != std::string::npos);
    CHECK(json::parse(r.json())["passed"] == true);
  }
  const VerifyReport bad =
      run_verify(parse({"verify", "--type", "A2", "--weight", "1,1", "--inject-fault", "string-property"}));
  REQUIRE_FALSE(bad.passed());
  CHECK(bad.first_failure()->name == "string property");
  for (const CheckRow& row : bad.rows)
    if (row.name != "string property") CHECK(row.result.ok);
}

TEST_CASE("exit codes") {
  CHECK(run_args({"crystal", "--type", "A2", "--weight", "1,1"}).code == kOk);
  CHECK(run_args({"--help"}).code == kOk);
  CHECK(run_args({"crystal", "--type", "A2"}).code == kUsage);
  CHECK(run_args({"verify", "--type", "A1", "--weight", "3"}).code == kOk);
  CHECK(run_args({"verify", "--type", "A1", "--weight", "3", "--inject-fault", "string-property"}).code ==
        kVerifyFailed);
  const Result big = run_args({"crystal", "--type", "A2", "--weight", "9,9", "--max-elements", "10"});
  CHECK(big.code == kResource);
  CHECK(big.err.find("cap") != std::string::npos);
  CHECK(run_args({"crystal", "--type", "A1", "--weight", "1", "--out", "/nonexistent-dir/x.json"}).code ==
        kWriteFailed);
}

TEST_CASE("--out writes the same bytes as stdout") {
  const auto path = std::filesystem::temp_directory_path() / "crystals_test_cli_out.json";
  const std::string p = path.string();
  const Result to_file = run_args({"crystal", "--type", "B2", "--weight", "1,1", "--format", "json", "--out", p.c_str()});
  REQUIRE(to_file.code == kOk);
  CHECK(to_file.out.empty());
  std::ifstream f(path, std::ios::binary);
  const std::string written((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(written == run_args({"crystal", "--type", "B2", "--weight", "1,1", "--format", "json"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("rank-one and character subcommands") {
  const Result r = run_args({"rank-one", "--weight", "2", "--format", "json"});
  REQUIRE(r.code == kOk);
  const json j = json::parse(r.out);
  CHECK(j["dimension"] == 3);
  CHECK(j["basis"][1]["f"]["coeff"] == "q + q^-1");
  CHECK(j["basis"][2]["f"].is_null());
  CHECK(j["sl2_relation"] == true);

  const Result c = run_args({"character", "--type", "A2", "--weight", "1,1"});
  CHECK(c.out.find("(0,0) : 2\n") != std::string::npos);
}

TEST_CASE("binary output is deterministic across processes") {
  const std::string bin = CRYSTALS_CLI_PATH;
  const std::string cmd = bin + " crystal --type G2 --weight 1,1 --format json";
  const std::string a = shell(cmd), b = shell(cmd);
  CHECK_FALSE(a.empty());
  CHECK(a == b);
  CHECK(json::parse(a)["elements"].size() == 64);
}
