#include <set>

#include "cucalc/error.hpp"
#include "cucalc/oracle.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cucalc;

namespace {

std::size_t count_size(const std::vector<Carrier>& cs, std::size_t n) {
  std::size_t k = 0;
  for (const auto& c : cs) k += c.dim() == n ? 1 : 0;
  return k;
}

}  // namespace

TEST_CASE("generated finite Cu-semigroups") {
  const auto one = generate_finite_cu(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].dim() == 1);
  const auto two = generate_finite_cu(2);
  REQUIRE(count_size(two, 2) == 1);
  CHECK(two[1].table().sum(1, 1) == 1);
  const auto five = generate_finite_cu(5);
  std::set<std::vector<std::uint8_t>> codes;
  for (const auto& c : five) {
    INFO(c.name());
    CHECK_FALSE(finite_table_violation(c.table()).has_value());
    CHECK(check_axioms(c, AxiomBudget{64, 8, 8}).passed());
    // Emitted tables are already in canonical labeling.
    std::vector<std::uint8_t> own(c.table().add.begin(), c.table().add.end());
    own.insert(own.end(), c.table().leq.begin(), c.table().leq.end());
    CHECK(canonical_form(c.table()) == own);
    codes.insert(canonical_form(c.table()));
  }
  CHECK(codes.size() == five.size());
  CHECK_THROWS_AS(generate_finite_cu(6), BudgetError);
  // The fixtures appear up to isomorphism.
  for (const auto& f : {fixtures::two_point(), fixtures::chain3(), fixtures::three_point_antichain()}) {
    const auto code = canonical_form(f.table());
    CHECK(codes.count(code) == 1);
  }
}

TEST_CASE("canonical form is invariant under relabeling") {
  const auto c = fixtures::three_point_antichain().table();
  FiniteTable swapped = c;
  // Swap x and y.
  const std::size_t p[] = {0, 2, 1, 3};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      swapped.add[p[i] * 4 + p[j]] = p[c.sum(i, j)];
      swapped.leq[p[i] * 4 + p[j]] = c.leq[i * 4 + j];
    }
  }
  CHECK(canonical_form(swapped) == canonical_form(c));
  CHECK_FALSE(canonical_form(fixtures::chain3().table()) == canonical_form(c));
}

TEST_CASE("generalized Cu-morphism enumeration") {
  const auto u = fixtures::two_point();
  const auto ms = enumerate_gen_morphisms(u, u);
  REQUIRE(ms.size() == 2);
  CHECK(ms[0].image == std::vector<std::size_t>{0, 0});
  CHECK(ms[1].image == std::vector<std::size_t>{0, 1});
  const auto zero = generate_finite_cu(1)[0];
  for (const auto& s : generate_finite_cu(4)) {
    CHECK(enumerate_gen_morphisms(s, zero).size() == 1);
    for (const auto& t : generate_finite_cu(3)) {
      const auto naive = enumerate_gen_morphisms(s, t);
      const auto lib = enumerate_table_morphisms(s, t);
      REQUIRE(naive.size() == lib.size());
      for (std::size_t i = 0; i < lib.size(); ++i) CHECK(naive[i].image == lib[i]);
    }
  }
  // |Cu[S,T]| grows along the embedding of {0,u} into the chain {0,a,inf}.
  for (const auto& s : generate_finite_cu(3)) {
    CHECK(enumerate_gen_morphisms(s, fixtures::two_point()).size() <=
          enumerate_gen_morphisms(s, fixtures::chain3()).size());
  }
  CHECK_THROWS_AS(enumerate_gen_morphisms(Carrier::extnat(), u), UnsupportedError);
}

TEST_CASE("bimorphism enumeration") {
  const auto u = fixtures::two_point();
  CHECK(enumerate_bimorphisms(u, u, u).size() == 2);
  const auto zero = generate_finite_cu(1)[0];
  CHECK(enumerate_bimorphisms(u, fixtures::chain3(), zero).size() == 1);
  for (const auto& phi : enumerate_bimorphisms(fixtures::chain3(), u, fixtures::chain3())) {
    for (std::size_t b = 0; b < 2; ++b) CHECK(phi[b] == 0);
  }
}

TEST_CASE("closed-category bijection on all triples of at most three elements") {
  const auto cs = generate_finite_cu(3);
  std::size_t triples = 0;
  for (const auto& s : cs) {
    for (const auto& t : cs) {
      for (const auto& p : cs) {
        const auto r = check_closed_bijection(s, t, p);
        INFO(s.name() << " " << t.name() << " " << p.name());
        CHECK(r.passed);
        CHECK(r.homs == r.bimorphisms);
        CHECK(r.library_agrees);
        CHECK(r.cu_equals_gen);
        for (const auto& f : r.failures) MESSAGE(f);
        ++triples;
      }
    }
  }
  CHECK(triples == cs.size() * cs.size() * cs.size());
  const auto zero = cs[0];
  const auto r = check_closed_bijection(fixtures::two_point(), fixtures::chain3(), zero);
  CHECK(r.homs == 1);
  CHECK(r.bimorphisms == 1);
  CHECK(check_closed_bijection(fixtures::three_point_antichain(), fixtures::two_point(), fixtures::chain3()).passed);
}

TEST_CASE("brute-force tau") {
  for (const auto& s : generate_finite_cu(4)) {
    const QTable q{s.table(), s.table().leq};
    const auto tau = brute_tau(q);
    REQUIRE(tau.chains.size() == s.dim());
    CHECK(tau.chains[0] == std::vector<std::size_t>{0});
    CHECK_FALSE(finite_table_violation(tau.table).has_value());
    for (std::size_t i = 0; i < s.dim(); ++i) {
      for (std::size_t j = 0; j < s.dim(); ++j) {
        CHECK(tau.table.le(i, j) == s.table().le(tau.endpoint[i], tau.endpoint[j]));
        CHECK(tau.endpoint[tau.table.sum(i, j)] == s.table().sum(tau.endpoint[i], tau.endpoint[j]));
      }
    }
  }
  // Only 0 < x: every chain ends at 0.
  const auto c3 = fixtures::chain3();
  QTable bare{c3.table(), std::vector<char>(9, 0)};
  for (std::size_t x = 0; x < 3; ++x) bare.prec[x] = 1;
  const auto tau = brute_tau(bare);
  CHECK(tau.chains.size() == 1);
  CHECK(tau.endpoint[0] == 0);
  QTable single{generate_finite_cu(1)[0].table(), {1}};
  CHECK(brute_tau(single).chains.size() == 1);
  QTable bad{c3.table(), c3.table().leq};
  bad.prec[0] = 0;
  CHECK(aux_relation_violation(bad).has_value());
  CHECK_THROWS_AS(brute_tau(bad), PreconditionError);
  QTable loose = bad;
  loose.prec = std::vector<char>(9, 1);
  CHECK_THROWS_AS(brute_tau(loose), PreconditionError);
}

TEST_CASE("tau of Cu[S,T] is [[S,T]]") {
  const auto cs = generate_finite_cu(3);
  std::vector<Carrier> all = cs;
  all.push_back(fixtures::three_point_antichain());
  for (const auto& s : all) {
    for (const auto& t : all) {
      INFO(s.name() << " " << t.name());
      const auto r = check_ihom_collapse(s, t);
      CHECK(r.passed);
      CHECK(r.prec_is_pointwise);
      CHECK(r.classes == r.morphisms);
      for (const auto& f : r.failures) MESSAGE(f);
    }
  }
}

TEST_CASE("tensor order-embedding probe") {
  const auto r = tensor_order_embedding_probe(Carrier::extnat(1), Carrier::extnat(2), Carrier::extnat(2),
                                              Carrier::extnat(1), 48);
  CHECK(r.decided);
  CHECK(r.holds);
  CHECK(r.checked > 100);
  const auto u = tensor_order_embedding_probe(Carrier::pbar(), Carrier::pbar(), Carrier::pbar(), Carrier::pbar());
  CHECK_FALSE(u.decided);
}

TEST_CASE("oracle runs") {
  for (const auto c : {OracleCheck::Axioms, OracleCheck::Bijection, OracleCheck::Tau}) {
    const auto run = run_oracle(2, c);
    CHECK(run.passed);
    CHECK(run.carriers == 2);
    CHECK_FALSE(run.entries.empty());
  }
  CHECK(run_oracle(2, OracleCheck::Bijection).entries.size() == 8);
  CHECK(oracle_check_from_name("tau") == OracleCheck::Tau);
  CHECK_FALSE(oracle_check_from_name("nope").has_value());
}
