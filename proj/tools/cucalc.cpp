#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cucalc/dsl.hpp"

namespace {

struct Flags {
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t budget = 64;
};

void add_flags(CLI::App* cmd, Flags& f) {
  cmd->add_flag("--json", f.json, "emit a cucalc.report.v1 JSON report");
  cmd->add_option("--seed", f.seed, "seed for sampled checks");
  cmd->add_option("--budget", f.budget, "sample budget for sampled checks")->check(CLI::PositiveNumber);
}

int execute(const std::string& program, const Flags& f) {
  const cucalc::RunOptions opts{f.json, f.seed, f.budget};
  const cucalc::RunResult r = cucalc::run_source(program, opts);
  if (f.json) {
    std::cout << cucalc::render_json(r, opts);
  } else if (r.exit_code == 2) {
    std::cerr << cucalc::render_text(r);
  } else {
    std::cout << cucalc::render_text(r);
  }
  return r.exit_code;
}

std::string join(const std::string& verb, const std::vector<std::string>& args) {
  std::string s = verb;
  for (const auto& a : args) s += " " + a;
  return s + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cucalc: computations with Cu-semigroups, their internal homs and solid Cu-semirings"};
  app.require_subcommand(1);
  Flags flags;

  std::string file;
  auto* run = app.add_subcommand("run", "run a program file");
  run->add_option("FILE", file, "program file, or - for standard input")->required();
  add_flags(run, flags);

  struct Verb {
    const char* name;
    const char* help;
    std::size_t arity;
  };
  const Verb verbs[] = {
      {"axioms", "check the axioms of a carrier", 1},
      {"ihom", "describe the internal hom [[S,T]]", 2},
      {"tensor", "describe the tensor product of two carriers", 2},
      {"solid", "solidity report of a Cu-semiring", 1},
      {"ideals", "list the ideal lattice of a carrier", 1},
      {"simple", "decide whether a carrier is simple", 1},
      {"adjoint", "check Cu(S,[[T,P]]) = BiCu(S x T,P) on finite carriers", 3},
  };
  std::map<std::string, std::vector<std::string>> verb_args;
  std::vector<std::pair<CLI::App*, std::string>> verb_cmds;
  for (const auto& v : verbs) {
    auto* cmd = app.add_subcommand(v.name, v.help);
    cmd->add_option("ARGS", verb_args[v.name], "carrier or semiring expressions")
        ->required()
        ->expected(static_cast<int>(v.arity), -1);
    add_flags(cmd, flags);
    verb_cmds.emplace_back(cmd, v.name);
  }

  std::size_t max_size = 3;
  std::string check = "bijection";
  auto* oracle = app.add_subcommand("oracle", "brute-force checks over all small finite Cu-semigroups");
  oracle->add_option("--max-size", max_size, "largest carrier size (at most 5)");
  oracle->add_option("--check", check, "axioms, bijection or tau")
      ->check(CLI::IsMember({"axioms", "bijection", "tau"}));
  add_flags(oracle, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*run) {
    std::stringstream buf;
    if (file == "-") {
      buf << std::cin.rdbuf();
    } else {
      std::ifstream in(file);
      if (!in) {
        std::cerr << "error: cannot read " << file << "\n";
        return 2;
      }
      buf << in.rdbuf();
    }
    return execute(buf.str(), flags);
  }
  if (*oracle) {
    return execute("oracle --max-size " + std::to_string(max_size) + " --check " + check + "\n", flags);
  }
  for (const auto& [cmd, name] : verb_cmds) {
    if (*cmd) return execute(join(name, verb_args[name]), flags);
  }
  return 2;
}
