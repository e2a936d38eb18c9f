// ukb — run knowledge-base files or check their syntax.
//
//   ukb run FILE [--format table|json] [--implication luka|kd]
//                [--conflict keep|dempster|to_universe]
//   ukb parse FILE
//
// Exit codes: 0 ok, 1 usage, 2 parse/semantic error, 3 bound violation.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ukb/error.hpp"
#include "ukb/parser.hpp"
#include "ukb/runner.hpp"

namespace {

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int run_file(const std::string& path, const ukb::RunOptions& opts) {
  std::string text;
  if (!read_file(path, text)) {
    std::fprintf(stderr, "ukb: cannot read '%s'\n", path.c_str());
    return 1;
  }
  try {
    ukb::KbDocument doc = ukb::parse(text);
    ukb::RunResult res = ukb::run_document(doc, opts);
    std::fputs(res.output.c_str(), stdout);
    return res.bound_violation ? 3 : 0;
  } catch (const ukb::Error& e) {
    std::fprintf(stderr, "%s:%s\n", path.c_str(), e.what());
    return 2;
  }
}

int parse_file(const std::string& path) {
  std::string text;
  if (!read_file(path, text)) {
    std::fprintf(stderr, "ukb: cannot read '%s'\n", path.c_str());
    return 1;
  }
  try {
    ukb::KbDocument doc = ukb::parse(text);
    std::string printed = ukb::pretty_print(doc);
    if (!ukb::same_document(ukb::parse(printed), doc)) {
      std::fprintf(stderr, "%s: internal error: pretty-print did not round-trip\n", path.c_str());
      return 2;
    }
    std::fputs(printed.c_str(), stdout);
    return 0;
  } catch (const ukb::Error& e) {
    std::fprintf(stderr, "%s:%s\n", path.c_str(), e.what());
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"granular knowledge bases over fuzzy evidence"};
  app.require_subcommand(1);

  std::string run_path, parse_path;
  std::string format = "table", implication = "luka", conflict = "keep";

  CLI::App* run = app.add_subcommand("run", "execute a knowledge-base file");
  run->add_option("file", run_path, "input .ukb file")->required();
  run->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  run->add_option("--implication", implication, "conditional form used for rules")
      ->check(CLI::IsMember({"luka", "kd"}));
  run->add_option("--conflict", conflict, "what to do with conflict mass")
      ->check(CLI::IsMember({"keep", "dempster", "to_universe"}));

  CLI::App* parse = app.add_subcommand("parse", "syntax-check and pretty-print a file");
  parse->add_option("file", parse_path, "input .ukb file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (run->parsed()) {
    ukb::RunOptions opts;
    opts.format = format == "json" ? ukb::OutputFormat::Json : ukb::OutputFormat::Table;
    opts.implication =
        implication == "kd" ? ukb::RelationKind::ImpKd : ukb::RelationKind::ImpLuka;
    opts.conflict = conflict == "dempster"      ? ukb::ConflictPolicy::Dempster
                    : conflict == "to_universe" ? ukb::ConflictPolicy::ToUniverse
                                                : ukb::ConflictPolicy::Keep;
    return run_file(run_path, opts);
  }
  return parse_file(parse_path);
}
