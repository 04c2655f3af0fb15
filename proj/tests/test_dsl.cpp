#include "cucalc/dsl.hpp"
#include "cucalc/error.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace cucalc;

namespace {

ParseError parse_error(const std::string& src) {
  try {
    parse(src);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << src);
  return ParseError("", 0, 0);
}

const char* kProgram = R"(# all declaration kinds
carrier S = extnat^2
carrier F = finite { 0, a, inf | a+a=a, a+inf=inf, inf+inf=inf | a<=inf }
morphism f : S -> S = matrix [[1,inf],[0,2]]
morphism h : F -> F = table { a -> a, inf -> inf }
morphism s : pbar -> pbar = scale 3/2
path p in pbar = [1/2, 3/4, 7/8] law: geometric
ideal J in F = generated a
compose f f
eval f (1,2)
eval p
tensor S S
ideals F
quotient F J
)";

}  // namespace

TEST_CASE("parse declarations") {
  const SpecAst ast = parse(kProgram);
  REQUIRE(ast.statements.size() == 13);
  const auto& c = ast.statements[0];
  CHECK(c.kind == StatementKind::Carrier);
  CHECK(c.name == "S");
  CHECK(c.span.line == 2);
  CHECK(c.span.column == 1);
  CHECK(std::get<Carrier>(c.operands[0]) == Carrier::extnat(2));
  const auto& fin = std::get<Carrier>(ast.statements[1].operands[0]);
  CHECK(fin.kind() == CarrierKind::Finite);
  CHECK(fin.dim() == 3);
  CHECK(fin.table().le(1, 2));
  const auto& f = std::get<GenMorphism>(ast.statements[2].operands[0]);
  REQUIRE(std::holds_alternative<MatrixMor>(f.rep()));
  CHECK(format(f) == "matrix [[1,inf],[0,2]]");
  CHECK(ast.statements[5].kind == StatementKind::Path);
  CHECK(ast.statements[6].kind == StatementKind::Ideal);
  CHECK(contains(std::get<Ideal>(ast.statements[6].operands[0]), FiniteIdx{1}));
  CHECK(ast.statements[12].kind == StatementKind::Command);
  CHECK(ast.statements[12].name == "quotient");
}

TEST_CASE("print is canonical and parse-print-parse is idempotent") {
  const SpecAst a = parse(kProgram);
  const std::string p1 = print(a);
  const std::string p2 = print(parse(p1));
  CHECK(p1 == p2);
  CHECK(p1.find("morphism f: S -> S = matrix [[1, inf], [0, 2]]\n") != std::string::npos);
  CHECK(p1.find("carrier S = extnat^2\n") != std::string::npos);
  CHECK(print(parse("carrier   T=extnat ^ 3   # note\n\n\nihom T   T")) == "carrier T = extnat^3\nihom T T\n");
}

TEST_CASE("diagnostics carry line and column") {
  SUBCASE("compose with mismatched carriers") {
    const auto e = parse_error(
        "morphism f : extnat^2 -> extnat^3 = zero\n"
        "morphism g : extnat^2 -> extnat^2 = identity\n"
        "compose g f\n");
    CHECK(e.line() == 3);
    CHECK(e.column() == 9);
    CHECK(std::string(e.what()).find("type mismatch") != std::string::npos);
  }
  SUBCASE("syntax error") {
    const auto e = parse_error("carrier S = extnat^2\ncarrier T extnat\n");
    CHECK(e.line() == 2);
    CHECK(e.column() == 11);
    CHECK(std::string(e.what()).find("syntax error") != std::string::npos);
  }
  SUBCASE("unresolved name") {
    const auto e = parse_error("axioms Q\n");
    CHECK(e.line() == 1);
    CHECK(e.column() == 8);
    CHECK(std::string(e.what()).find("unresolved name 'Q'") != std::string::npos);
  }
  SUBCASE("literal type mismatch") {
    const auto e = parse_error("morphism f : extnat^2 -> extnat^2 = matrix [[1,2,3],[0,1,1]]\n");
    CHECK(e.line() == 1);
    CHECK(std::string(e.what()).find("type mismatch") != std::string::npos);
    CHECK(parse_error("path p in pbar = [compact 1]\n").line() == 1);
    CHECK(parse_error("path p in m1 = [1/2]\n").column() == 17);
  }
  SUBCASE("invalid finite tables") {
    CHECK(std::string(parse_error("carrier F = finite { 0, a }\n").what()).find("missing sum a+a") != std::string::npos);
    CHECK(std::string(parse_error("carrier F = finite { 0, a | a+a=b }\n").what()).find("unresolved") !=
          std::string::npos);
  }
  SUBCASE("non-monotone table") {
    const auto e = parse_error(
        "carrier C = finite { 0, a, b | a+a=a, a+b=b, b+b=b }\n"
        "morphism t : C -> C = table { a -> b, b -> a }\n");
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("type mismatch") != std::string::npos);
  }
  SUBCASE("redeclaration and bad options") {
    CHECK(parse_error("carrier S = pbar\ncarrier S = m1\n").line() == 2);
    CHECK(parse_error("oracle --max-size 2 --check nothing\n").column() == 29);
    CHECK(parse_error("axioms pbar --fast 1\n").column() == 13);
    CHECK(parse_error("carrier S = pbar)\n").column() == 17);
  }
}

TEST_CASE("finite carrier literal closes the order") {
  const auto ast = parse("carrier C = finite { 0, a, b | a+a=a, a+b=b, b+b=b }\n");
  const auto& c = std::get<Carrier>(ast.statements[0].operands[0]);
  CHECK(c.table().le(1, 2));
  CHECK_FALSE(c.table().le(2, 1));
  CHECK(check_axioms(c).passed());
}

TEST_CASE("solid pbar reports the expected row") {
  const RunResult r = run_source("solid pbar\n", {});
  REQUIRE(r.results.size() == 1);
  CHECK(r.exit_code == 0);
  CHECK(r.results[0].status == "pass");
  const auto d = nlohmann::json::parse(r.results[0].data);
  const std::vector<std::string> want = {"holds", "holds", "holds", "fails", "fails"};
  REQUIRE(d["conditions"].size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(d["conditions"][i]["status"] == want[i]);
  CHECK(d["implications"] == "consistent");
}

TEST_CASE("ihom extnat^2 extnat^3") {
  const RunResult r = run_source("ihom extnat^2 extnat^3\n", {});
  REQUIRE(r.results.size() == 1);
  CHECK(r.exit_code == 0);
  const auto d = nlohmann::json::parse(r.results[0].data);
  CHECK(d["name"] == "M_{3,2}(extnat)");
  CHECK(render_text(r).find("M_{3,2}(extnat)") != std::string::npos);
}

TEST_CASE("oracle command") {
  const RunResult r = run_source("oracle --max-size 2 --check bijection\n", {});
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].status == "pass");
  CHECK(r.exit_code == 0);
  const auto d = nlohmann::json::parse(r.results[0].data);
  CHECK(d["corpus"].size() == 8);
  CHECK(d["check"] == "bijection");
}

TEST_CASE("running a program") {
  RunOptions o;
  o.seed = 7;
  o.budget = 16;
  const RunResult r = run_source(kProgram, o);
  CHECK(r.exit_code == 0);
  REQUIRE(r.results.size() == 6);
  CHECK(nlohmann::json::parse(r.results[0].data)["composite"] == "matrix [[1,inf],[0,4]]");
  CHECK(nlohmann::json::parse(r.results[1].data)["value"] == "(inf,4)");
  CHECK(nlohmann::json::parse(r.results[2].data)["endpoint"] == "1");
  CHECK(nlohmann::json::parse(r.results[4].data)["ideals"].size() == 3);
  CHECK(r.results[5].status == "pass");
  const RunResult again = run_source(kProgram, o);
  CHECK(render_json(r, o) == render_json(again, o));
}

TEST_CASE("exit codes") {
  CHECK(run_source("axioms pbar\n", {}).exit_code == 0);
  const RunResult bad = run_source("axioms\n", {});
  CHECK(bad.exit_code == 2);
  CHECK(bad.diagnostic.rfind("1:7:", 0) == 0);
  CHECK(render_text(bad).find("error: 1:7:") == 0);
  CHECK(run_source("simple m1\n", {}).exit_code == 0);
  // Runtime errors become diagnostics on the command, not exceptions.
  const RunResult err = run_source("ihom pbar trunc\naxioms m1\n", {});
  CHECK(err.exit_code == 1);
  REQUIRE(err.results.size() == 2);
  CHECK(err.results[0].status == "error");
  CHECK(err.results[0].lines[0].rfind("1:1:", 0) == 0);
  CHECK(err.results[1].status == "pass");
  CHECK(run_source("adjoint pbar pbar pbar\n", {}).exit_code == 2);
}

TEST_CASE("json report schema") {
  const RunOptions o{true, 3, 8};
  const RunResult r = run_source("carrier C = finite { 0, u | u+u=u }\naxioms C\nsimple C\n", o);
  const auto j = nlohmann::json::parse(render_json(r, o));
  CHECK(j["schema"] == "cucalc.report.v1");
  CHECK(j["seed"] == 3);
  CHECK(j["exit_code"] == 0);
  REQUIRE(j["results"].size() == 2);
  for (const auto& e : j["results"]) {
    CHECK(e.contains("command"));
    CHECK(e.contains("line"));
    CHECK(e.contains("column"));
    CHECK(e.contains("status"));
    CHECK(e.contains("provenance"));
    CHECK(e["data"].is_object());
  }
  CHECK(j["results"][0]["line"] == 2);
  CHECK(j["results"][0]["provenance"] == "exhaustive");
  CHECK(j["results"][1]["status"] == "ok");
  const auto perr = nlohmann::json::parse(render_json(run_source("ihom\n", o), o));
  CHECK(perr["exit_code"] == 2);
  CHECK(perr.contains("diagnostic"));
}
