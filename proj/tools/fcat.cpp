#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fcat/commands.hpp"

using namespace fcat;

namespace {

struct Options {
  std::string format = "text";
  cli::RunOptions run;
  std::string corpus;
};

int emit(const Options& o, const std::vector<cli::Report>& reports) {
  std::cout << (o.format == "json" ? cli::render_json(reports) : cli::render_text(reports));
  return cli::exit_code(reports);
}

int input_error(const Options& o, const dsl::Diagnostic& d) {
  if (o.format == "json") std::cout << cli::render_error_json(d);
  std::cerr << d.str() << "\n";
  return 2;
}

dsl::Environment base_environment(const Options& o) {
  return o.corpus.empty() ? dsl::Environment{} : cli::load_directory(o.corpus);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite category theory workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--probe-size", o.run.probe_size, "Largest probe set for skew and lifting checks")
      ->check(CLI::Range(0, 4));
  app.add_option("--seed", o.run.seed, "Seed for randomized instances");
  app.add_option("--corpus", o.corpus, "Directory of .fcat files used as suite inputs");

  std::string file;
  std::vector<std::string> words;
  auto* run = app.add_subcommand("run", "Run a command against a file, or every run/suite line in it");
  run->add_option("file", file, "DSL file")->required();
  run->add_option("command", words, "Command and arguments");

  std::string suite;
  std::vector<std::string> suite_args;
  auto* suite_cmd = app.add_subcommand("suite", "Run an axiom suite on the corpus");
  suite_cmd->add_option("name", suite, "Suite name")->required();
  suite_cmd->add_option("args", suite_args, "Categories, functors and adjunctions");

  auto* fmt = app.add_subcommand("fmt", "Print a file in canonical form");
  fmt->add_option("file", file, "DSL file")->required();

  auto* commands = app.add_subcommand("commands", "List the available commands");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*commands) {
      for (const auto& c : cli::command_names()) std::cout << c << "\n";
      return 0;
    }
    if (*fmt) {
      std::ifstream in(file);
      if (!in) return input_error(o, {"FileNotFound", "cannot read " + file, {}, "check the path", file});
      std::stringstream buf;
      buf << in.rdbuf();
      try {
        std::cout << dsl::print(dsl::parse(buf.str()));
      } catch (dsl::DslError& e) {
        dsl::Diagnostic d = e.diagnostic();
        d.file = file;
        return input_error(o, d);
      }
      return 0;
    }
    if (*suite_cmd) {
      const dsl::Environment env = base_environment(o);
      std::vector<std::string> w{"suite", suite};
      w.insert(w.end(), suite_args.begin(), suite_args.end());
      return emit(o, {cli::run_command(w, env, o.run)});
    }
    dsl::Environment env = base_environment(o);
    {
      dsl::Environment local = cli::load_file(file);
      if (o.corpus.empty()) {
        env = std::move(local);
      } else {
        std::ifstream in(file);
        std::stringstream buf;
        buf << in.rdbuf();
        dsl::elaborate_into(env, dsl::parse_syntax(buf.str()));
      }
    }
    if (words.empty()) return emit(o, cli::run_all(env, o.run));
    return emit(o, {cli::run_command(words, env, o.run)});
  } catch (const dsl::DslError& e) {
    return input_error(o, e.diagnostic());
  } catch (const Error& e) {
    return input_error(o, {e.kind(), e.witness(), {}, "", file});
  }
}
