#include "pcg/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pcg/error.hpp"
#include "pcg/grid_pct.hpp"
#include "pcg/serialization.hpp"

namespace pcg {

namespace {

struct Options {
  std::string output;
  std::string graph = "-";
  std::string tree = "-";
  std::string dmin;
  std::string dmax;
  std::string family;
  std::vector<std::size_t> family_args;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool verify = false;
  std::size_t max_holes = kDefaultHoleLimit;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

Graph generate(const Options& opt) {
  const auto& family = opt.family;
  const auto& params = opt.family_args;
  const auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw Error(ErrorKind::ParseError, "family '" + family + "' takes " +
                                             std::to_string(count) + " integer argument(s)");
    }
  };
  if (family == "grid") {
    expect(2);
    return gen_grid({params[0], params[1]});
  }
  if (family == "cycle") {
    expect(1);
    return gen_cycle(params[0]);
  }
  if (family == "cycle-complement") {
    expect(1);
    return gen_cycle_complement(params[0]);
  }
  if (family == "complete") {
    expect(1);
    return gen_complete(params[0]);
  }
  if (family == "empty") {
    expect(1);
    return gen_empty(params[0]);
  }
  expect(0);
  if (family == "H") return gen_H();
  if (family == "H1") return gen_H1();
  if (family == "H2") return gen_H2();
  if (family == "H4") return gen_H4();
  throw Error(ErrorKind::ParseError, "unknown family '" + family + "'");
}

PcgInstance load_instance(const Options& opt, std::istream& in) {
  const Json doc = parse_json(read_source(opt.tree, in));
  auto tree = tree_from_json(doc);
  const auto bound = [&](const std::string& flag, const std::string& key, const std::string& name) {
    if (!flag.empty()) return Rational::parse(flag);
    if (doc.contains(key) && doc[key].is_string()) return Rational::parse(doc[key].get<std::string>());
    throw Error(ErrorKind::ParseError, "missing --" + name + " (and no '" + key + "' in the tree file)");
  };
  return PcgInstance(std::move(tree), bound(opt.dmin, "d_min", "dmin"), bound(opt.dmax, "d_max", "dmax"));
}

std::string describe(const WitnessMismatch& m) {
  return m.u + " " + m.v + " distance " + m.distance.to_string() + " expected " +
         (m.edge_in_target ? "edge" : "non-edge");
}

std::vector<char*> argv_of(std::vector<std::string>& storage) {
  std::vector<char*> argv;
  argv.reserve(storage.size());
  for (auto& s : storage) argv.push_back(s.data());
  return argv;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Options opt;
  CLI::App app{"Pairwise compatibility graph toolkit", "pcgtool"};
  app.require_subcommand(1);

  const auto with_output = [&](CLI::App* sub) {
    sub->add_option("--output", opt.output, "Write the result to FILE instead of stdout");
  };

  auto* gen = app.add_subcommand("gen", "Emit a named graph family as JSON");
  gen->add_option("family", opt.family,
                  "grid K L | cycle N | cycle-complement N | complete N | empty N | H | H1 | H2 | H4")
      ->required();
  gen->add_option("params", opt.family_args, "Family size arguments");
  with_output(gen);

  auto* grid = app.add_subcommand("grid-pct", "Emit the caterpillar witness instance of a grid");
  grid->add_option("--k", opt.rows, "Grid rows")->required()->check(CLI::PositiveNumber);
  grid->add_option("--l", opt.cols, "Grid columns")->required()->check(CLI::PositiveNumber);
  grid->add_flag("--verify", opt.verify, "Realize the instance and compare with the grid");
  with_output(grid);

  auto* realize = app.add_subcommand("realize", "Realize the PCG of a tree and interval");
  realize->add_option("--tree", opt.tree, "Tree or instance JSON ('-' for stdin)");
  realize->add_option("--dmin", opt.dmin, "Lower bound, N or N/D");
  realize->add_option("--dmax", opt.dmax, "Upper bound, N or N/D");
  with_output(realize);

  auto* verify = app.add_subcommand("verify", "Check that a tree and interval realize a graph");
  verify->add_option("--tree", opt.tree, "Tree or instance JSON")->required();
  verify->add_option("--dmin", opt.dmin, "Lower bound, N or N/D");
  verify->add_option("--dmax", opt.dmax, "Upper bound, N or N/D");
  verify->add_option("--graph", opt.graph, "Graph JSON")->required();
  with_output(verify);

  auto* classify_cmd = app.add_subcommand("classify", "Run the PCG condition checks on a graph");
  classify_cmd->add_option("--graph", opt.graph, "Graph JSON ('-' for stdin)");
  classify_cmd->add_option("--max-holes", opt.max_holes, "Hole enumeration cap")
      ->check(CLI::PositiveNumber);
  with_output(classify_cmd);

  auto* complement_cmd = app.add_subcommand("complement", "Emit the complement graph");
  complement_cmd->add_option("--graph", opt.graph, "Graph JSON ('-' for stdin)");
  with_output(complement_cmd);

  auto* dot = app.add_subcommand("export-dot", "Emit Graphviz DOT for a graph or tree");
  auto* dot_graph = dot->add_option("--graph", opt.graph, "Graph JSON");
  auto* dot_tree = dot->add_option("--tree", opt.tree, "Tree or instance JSON");
  dot_graph->excludes(dot_tree);
  with_output(dot);

  std::vector<std::string> storage{"pcgtool"};
  storage.insert(storage.end(), args.begin(), args.end());
  auto argv = argv_of(storage);

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: Usage: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (gen->parsed()) {
      Sink sink(opt.output, out);
      sink.stream() << dump_json(graph_to_json(generate(opt)));
      return kExitOk;
    }
    if (grid->parsed()) {
      const GridSpec spec{opt.rows, opt.cols};
      const auto instance = construct_grid_pct(spec);
      Sink sink(opt.output, out);
      sink.stream() << dump_json(instance_to_json(instance));
      if (!opt.verify) return kExitOk;
      const auto mismatch = find_witness_mismatch(instance, gen_grid(spec));
      if (mismatch) {
        err << "FAIL " << describe(*mismatch) << "\n";
        return kExitVerificationFailed;
      }
      err << "PASS\n";
      return kExitOk;
    }
    if (realize->parsed()) {
      const auto instance = load_instance(opt, in);
      Sink sink(opt.output, out);
      sink.stream() << dump_json(graph_to_json(pcg_realize(instance)));
      return kExitOk;
    }
    if (verify->parsed()) {
      if (opt.tree == "-" && opt.graph == "-") {
        throw Error(ErrorKind::ParseError, "--tree and --graph cannot both read stdin");
      }
      const auto instance = load_instance(opt, in);
      const auto target = graph_from_json(parse_json(read_source(opt.graph, in)));
      const auto mismatch = find_witness_mismatch(instance, target);
      Sink sink(opt.output, out);
      if (mismatch) {
        sink.stream() << "FAIL " << describe(*mismatch) << "\n";
        return kExitVerificationFailed;
      }
      sink.stream() << "PASS\n";
      return kExitOk;
    }
    if (classify_cmd->parsed()) {
      const auto g = graph_from_json(parse_json(read_source(opt.graph, in)));
      SearchLimits limits;
      limits.max_holes = opt.max_holes;
      const auto report = classify(g, limits);
      Sink sink(opt.output, out);
      sink.stream() << dump_json(report_to_json(g, report));
      return kExitOk;
    }
    if (complement_cmd->parsed()) {
      const auto g = graph_from_json(parse_json(read_source(opt.graph, in)));
      Sink sink(opt.output, out);
      sink.stream() << dump_json(graph_to_json(complement(g)));
      return kExitOk;
    }
    if (dot->parsed()) {
      std::string text;
      if (dot_tree->count() > 0) {
        text = tree_to_dot(tree_from_json(parse_json(read_source(opt.tree, in))));
      } else {
        text = graph_to_dot(graph_from_json(parse_json(read_source(opt.graph, in))));
      }
      Sink sink(opt.output, out);
      sink.stream() << text;
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace pcg
