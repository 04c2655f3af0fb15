#pragma once

// A line-oriented language for declaring carriers, morphisms, paths and
// ideals and running checks on them, with a driver producing text or JSON
// reports.
//
//   carrier S = extnat^2
//   carrier F = finite { 0, a, inf | a+a=a, a+inf=inf, inf+inf=inf | a<=inf }
//   morphism f : S -> S = matrix [[1,inf],[0,2]]
//   path p in pbar = [1/2, 3/4, 7/8] law: geometric
//   ideal J in F = generated a
//   compose f f
//   solid pbar

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "cucalc/ideals.hpp"
#include "cucalc/path_tau.hpp"

namespace cucalc {

struct SourceSpan {
  int line = 1;
  int column = 1;
};

enum class StatementKind : std::uint8_t { Carrier, Morphism, Path, Ideal, Command };

// Resolved arguments; strings hold semiring names and option values.
using Operand = std::variant<Carrier, GenMorphism, Element, PathClass, Ideal, std::string>;

struct Statement {
  StatementKind kind;
  SourceSpan span;
  // Declared name, or the command verb.
  std::string name;
  // Canonical source text of the statement.
  std::string text;
  std::vector<Operand> operands;
  std::map<std::string, std::string> options;
};

struct SpecAst {
  std::vector<Statement> statements;
};

// Throws ParseError carrying line and column for syntax errors, unresolved
// names and type mismatches.
SpecAst parse(const std::string& text);
// One canonical line per statement; parse(print(ast)) prints identically.
std::string print(const SpecAst& ast);

struct RunOptions {
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t budget = 64;
};

struct CommandResult {
  std::string command;
  SourceSpan span;
  // "pass" or "fail" for checks, "ok" for reports, "error" for runtime
  // errors.
  std::string status;
  std::string provenance;
  std::vector<std::string> lines;
  // Serialized JSON object with the structured result.
  std::string data;
};

struct RunResult {
  std::vector<CommandResult> results;
  // 0 when every check passes, 1 on a failed check or runtime error, 2 on a
  // parse error.
  int exit_code = 0;
  std::string diagnostic;
};

RunResult run(const SpecAst& ast, const RunOptions& opts);
// Parses and runs; a parse error yields exit code 2 and the diagnostic.
RunResult run_source(const std::string& text, const RunOptions& opts);

std::string render_text(const RunResult& r);
// Schema "cucalc.report.v1".
std::string render_json(const RunResult& r, const RunOptions& opts);

}  // namespace cucalc
