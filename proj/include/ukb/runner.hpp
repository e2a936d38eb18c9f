// runner.hpp — execute a parsed document: declare names, assert statements,
// answer queries, and render the results as a table or as JSON.

#ifndef UKB_RUNNER_HPP
#define UKB_RUNNER_HPP

#include <string>

#include "ukb/combine.hpp"
#include "ukb/parser.hpp"

namespace ukb {

enum class OutputFormat { Table, Json };

struct RunOptions {
  OutputFormat format = OutputFormat::Table;
  RelationKind implication = RelationKind::ImpLuka;  // for rule translation
  ConflictPolicy conflict = ConflictPolicy::Keep;
};

struct RunResult {
  std::string output;            // rendered report, newline-terminated
  bool bound_violation = false;  // some mc estimate left its [bel, pl] band
};

/// Throws SemanticError (with the declaration's position) on name clashes,
/// unknown names, universe mismatches and statement forms the translation
/// does not define.
RunResult run_document(const KbDocument& doc, const RunOptions& opts);

}  // namespace ukb

#endif
