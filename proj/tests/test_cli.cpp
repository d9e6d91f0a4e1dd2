#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "pcg/cli.hpp"
#include "pcg/serialization.hpp"

using namespace pcg;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "pcgtool_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream(path) << text;
}

std::string read_file(const std::filesystem::path& path) {
  std::ostringstream buffer;
  buffer << std::ifstream(path).rdbuf();
  return buffer.str();
}

bool single_error_line(const std::string& err) {
  return err.rfind("error: ", 0) == 0 && err.find('\n') == err.size() - 1;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("gen feeds classify") {
  const auto h = run({"gen", "H"});
  REQUIRE(h.code == kExitOk);
  const auto report = run({"classify", "--graph", "-"}, h.out);
  REQUIRE(report.code == kExitOk);
  const auto doc = parse_json(report.out);
  CHECK(doc["verdict"] == "Unknown");
  CHECK(doc["degrees"]["a3"] == 6);
  CHECK(doc["degrees"]["b9"] == 3);

  CHECK(parse_json(run({"classify"}, run({"gen", "complete", "6"}).out).out)["verdict"] == "IsPCG");

  const auto h4 = parse_json(run({"classify"}, run({"gen", "H4"}).out).out);
  CHECK(h4["class_flags"]["G4"] == true);
  CHECK(h4["complement_holes"]["count"] == 1);

  const auto grid = parse_json(run({"gen", "grid", "3", "4"}).out);
  CHECK(grid["labels"].size() == 12);
  CHECK(grid["edges"].size() == 17);
}

TEST_CASE("grid-pct") {
  const auto ok = run({"grid-pct", "--k", "3", "--l", "3", "--verify"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.err == "PASS\n");
  const auto doc = parse_json(ok.out);
  CHECK(doc["d_min"] == "41");
  CHECK(doc["d_max"] == "43");
  CHECK(doc["nodes"].size() == 14);

  const auto plain = run({"grid-pct", "--k", "2", "--l", "5"});
  CHECK(plain.code == kExitOk);
  CHECK(plain.err.empty());

  const auto bad = run({"grid-pct", "--k", "0", "--l", "3"});
  CHECK(bad.code == kExitBadInput);
  CHECK(single_error_line(bad.err));
}

TEST_CASE("realize and verify") {
  const auto tree_path = scratch("worked_example_tree.json");
  const auto graph_path = scratch("worked_example_graph.json");
  write_file(tree_path, dump_json(tree_to_json(fixtures::worked_example_tree())));
  write_file(graph_path, dump_json(graph_to_json(fixtures::worked_example_graph())));

  const auto realized = run({"realize", "--tree", tree_path.string(), "--dmin", "9", "--dmax", "13"});
  REQUIRE(realized.code == kExitOk);
  CHECK(sorted_label_edges(graph_from_json(parse_json(realized.out))) == fixtures::worked_example_edges());

  const auto from_stdin = run({"realize", "--dmin", "9", "--dmax", "13"}, read_file(tree_path));
  CHECK(from_stdin.out == realized.out);

  const auto pass = run({"verify", "--tree", tree_path.string(), "--graph", graph_path.string(),
                         "--dmin", "9", "--dmax", "13"});
  CHECK(pass.code == kExitOk);
  CHECK(pass.out == "PASS\n");

  const auto fail = run({"verify", "--tree", tree_path.string(), "--graph", graph_path.string(),
                         "--dmin", "9", "--dmax", "12"});
  CHECK(fail.code == kExitVerificationFailed);
  CHECK(fail.out.rfind("FAIL ", 0) == 0);

  // Bounds stored in an instance file are used when the flags are absent.
  const auto inst_path = scratch("worked_example_instance.json");
  write_file(inst_path, dump_json(instance_to_json(fixtures::worked_example_instance())));
  CHECK(run({"verify", "--tree", inst_path.string(), "--graph", graph_path.string()}).code ==
        kExitOk);

  const auto decimal = run({"realize", "--tree", tree_path.string(), "--dmin", "9.5", "--dmax", "13"});
  CHECK(decimal.code == kExitBadInput);
  CHECK(single_error_line(decimal.err));
  CHECK(decimal.err.find("ParseError") != std::string::npos);

  const auto missing = run({"realize", "--tree", tree_path.string(), "--dmin", "9"});
  CHECK(missing.code == kExitBadInput);
}

TEST_CASE("complement twice is byte-identical") {
  const auto original = run({"gen", "H2"}).out;
  const auto once = run({"complement"}, original);
  const auto twice = run({"complement"}, once.out);
  CHECK(once.code == kExitOk);
  CHECK(once.out != original);
  CHECK(twice.out == original);
}

TEST_CASE("export-dot") {
  const auto dot = run({"export-dot", "--graph", "-"}, run({"gen", "cycle", "4"}).out);
  CHECK(dot.code == kExitOk);
  CHECK(dot.out.rfind("graph G {", 0) == 0);
  CHECK(dot.out.find("\"v1\" -- \"v2\";") != std::string::npos);

  const auto tree_dot =
      run({"export-dot", "--tree", "-"}, run({"grid-pct", "--k", "1", "--l", "2"}).out);
  CHECK(tree_dot.code == kExitOk);
  CHECK(tree_dot.out.find("[shape=point]") != std::string::npos);

  CHECK(run({"export-dot", "--graph", "a.json", "--tree", "b.json"}).code == kExitBadInput);
}

TEST_CASE("bad input exits 1 with one line") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"gen", "nope"},
           {"gen", "cycle"},
           {"gen", "cycle", "2"},
           {"classify", "--graph", "/nonexistent/graph.json"},
       }) {
    const auto r = run(args);
    CHECK(r.code == kExitBadInput);
    CHECK(single_error_line(r.err));
  }
  const auto malformed = run({"classify"}, "{\"labels\": [");
  CHECK(malformed.code == kExitBadInput);
  CHECK(single_error_line(malformed.err));
  const auto loop = run({"complement"}, R"({"labels":["a"],"edges":[["a","a"]]})");
  CHECK(loop.err.find("SelfLoop") != std::string::npos);
}

TEST_CASE("--output writes to a file") {
  const auto path = scratch("c5.json");
  std::filesystem::remove(path);
  const auto r = run({"gen", "cycle", "5", "--output", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  CHECK(read_file(path) == run({"gen", "cycle", "5"}).out);
}

TEST_CASE("output is deterministic") {
  const auto g = run({"gen", "H2"}).out;
  CHECK(run({"classify"}, g).out == run({"classify"}, g).out);
  CHECK(run({"grid-pct", "--k", "4", "--l", "6"}).out == run({"grid-pct", "--k", "4", "--l", "6"}).out);
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("grid-pct") != std::string::npos);
}

TEST_SUITE_END();
