#include "cucalc/error.hpp"
#include "cucalc/morphisms.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cucalc;

namespace {

MatrixMor mat(std::size_t r, std::size_t c, std::vector<ExtNat> e) { return MatrixMor{r, c, std::move(e)}; }

const ExtNat INF = ExtNat::infinity();

// Every matrix of the given shape with entries drawn from vals.
std::vector<GenMorphism> all_matrices(std::size_t r, std::size_t c, const std::vector<ExtNat>& vals) {
  std::vector<GenMorphism> out;
  const std::size_t n = r * c;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<ExtNat> e;
    for (std::size_t i : idx) e.push_back(vals[i]);
    out.push_back(GenMorphism::matrix(mat(r, c, e)));
    std::size_t k = 0;
    while (k < n && ++idx[k] == vals.size()) idx[k++] = 0;
    if (k == n) break;
  }
  return out;
}

// Independent evaluation of the auxiliary relation: f(a') << g(a) for all
// a' << a in extnat^k, with a' and a running over {0,1,2,3,inf}^k.
bool matrix_prec_oracle(const GenMorphism& f, const GenMorphism& g) {
  const Carrier& d = f.domain();
  const Carrier& c = f.codomain();
  const auto xs = d.grid(1000);
  for (const auto& a1 : xs) {
    for (const auto& a : xs) {
      if (!d.way_below(a1, a)) continue;
      if (!c.way_below(cucalc::apply(f, a1), cucalc::apply(g, a))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("matrix application and composition") {
  const GenMorphism f = GenMorphism::matrix(mat(2, 2, {1, 0, 2, INF}));
  CHECK(cucalc::apply(f, natvec({1, 0})) == natvec({1, 2}));
  CHECK(cucalc::apply(f, natvec({0, 1})) == natvec({0, ExtNat::infinity()}));
  CHECK(cucalc::apply(f, natvec({0, 0})) == natvec({0, 0}));
  const GenMorphism g = GenMorphism::matrix(mat(1, 2, {1, 1}));
  const GenMorphism gf = compose(g, f);
  CHECK(gf.domain() == Carrier::extnat(2));
  CHECK(gf.codomain() == Carrier::extnat(1));
  for (const auto& a : Carrier::extnat(2).grid()) CHECK(cucalc::apply(gf, a) == cucalc::apply(g, cucalc::apply(f, a)));
  CHECK_THROWS_AS(compose(f, g), DomainError);
}

TEST_CASE("matrix prec examples") {
  const GenMorphism id = GenMorphism::identity(Carrier::extnat(1));
  CHECK(prec(id, id));
  const GenMorphism inf = GenMorphism::matrix(mat(1, 1, {INF}));
  CHECK_FALSE(prec(inf, inf));
  CHECK(prec(id, inf));
  CHECK(prec(GenMorphism::matrix(mat(1, 1, {2})), GenMorphism::matrix(mat(1, 1, {3}))));
  CHECK_FALSE(prec(GenMorphism::matrix(mat(1, 1, {3})), GenMorphism::matrix(mat(1, 1, {2}))));
}

TEST_CASE("matrix prec agrees with the defining quantifier") {
  const std::vector<ExtNat> vals{0, 1, 2, INF};
  for (auto [r, c] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 2}, {2, 1}}) {
    const auto ms = all_matrices(r, c, vals);
    for (const auto& f : ms) {
      for (const auto& g : ms) {
        INFO(format(f) << " vs " << format(g));
        CHECK(prec(f, g) == matrix_prec_oracle(f, g));
      }
    }
  }
}

TEST_CASE("pbar and trunc scalings") {
  const GenMorphism half = GenMorphism::scale_pbar(QInf(1, 2));
  CHECK(cucalc::apply(half, q(1)) == q(1, 2));
  CHECK(cucalc::apply(GenMorphism::scale_pbar(QInf::infinity()), q(0)) == q(0));
  CHECK(cucalc::apply(GenMorphism::scale_pbar(QInf::infinity()), q(1, 3)) == q_inf());
  CHECK(prec(half, half));
  CHECK_FALSE(prec(GenMorphism::scale_pbar(QInf::infinity()), GenMorphism::scale_pbar(QInf::infinity())));
  CHECK_FALSE(prec(GenMorphism::scale_pbar(QInf(1)), half));

  CHECK_THROWS_AS(GenMorphism::scale_trunc(QInf(1, 2)), DomainError);
  const GenMorphism two = GenMorphism::scale_trunc(QInf(2));
  CHECK(cucalc::apply(two, q(1, 4)) == q(1, 2));
  CHECK(cucalc::apply(two, q(3, 4)) == q_inf());
  const GenMorphism tinf = GenMorphism::scale_trunc(QInf::infinity());
  CHECK(prec(tinf, tinf));
  CHECK(prec(GenMorphism::scale_trunc(QInf(1)), two));
  CHECK_FALSE(prec(two, GenMorphism::scale_trunc(QInf(1))));

  const auto pg = Carrier::pbar().grid(60);
  const auto tg = Carrier::trunc().grid(60);
  for (QInf t : {QInf(0), QInf(1, 2), QInf(1), QInf(3, 2), QInf::infinity()}) {
    for (QInf s : {QInf(0), QInf(1, 2), QInf(1), QInf(3, 2), QInf::infinity()}) {
      const auto f = GenMorphism::scale_pbar(t);
      const auto g = GenMorphism::scale_pbar(s);
      INFO("pbar " << t.str() << " " << s.str());
      CHECK(prec(f, g) == prec_by_definition(f, g, pg));
    }
  }
  for (QInf t : {QInf(0), QInf(1), QInf(3, 2), QInf(2), QInf::infinity()}) {
    for (QInf s : {QInf(0), QInf(1), QInf(3, 2), QInf(2), QInf::infinity()}) {
      const auto f = GenMorphism::scale_trunc(t);
      const auto g = GenMorphism::scale_trunc(s);
      INFO("trunc " << t.str() << " " << s.str());
      CHECK(prec(f, g) == prec_by_definition(f, g, tg));
    }
  }
}

TEST_CASE("trunc scaling by 1/2 fails additivity directly") {
  // 1/2 (1 + 1) = 1/2 inf = inf, while 1/2 + 1/2 = 1.
  const Carrier t = Carrier::trunc();
  const QInf lhs = QInf(1, 2) * std::get<QInf>(t.add(q(1), q(1)));
  const Element rhs = t.add(q(1, 2), q(1, 2));
  CHECK(lhs == QInf::infinity());
  CHECK(rhs == q(1));
}

TEST_CASE("validation of closed-form families") {
  for (const auto& f : {GenMorphism::matrix(mat(2, 2, {1, 0, 2, INF})), GenMorphism::scale_pbar(QInf(3, 2)),
                        GenMorphism::scale_pbar(QInf::infinity()), GenMorphism::scale_trunc(QInf(2)),
                        GenMorphism::scale_trunc(QInf::infinity()), GenMorphism::nat_multiple(Carrier::m1(), soft(QInf(1))),
                        GenMorphism::nat_multiple(Carrier::m1(), compact(QInf(2))),
                        GenMorphism::nat_multiple(Carrier::pbar(), q(1, 2)),
                        GenMorphism::identity(fixtures::chain3())}) {
    const MorphismReport r = validate_gen_cu_morphism(f);
    INFO(format(f) << ": " << (r.failures.empty() ? "" : r.failures.front()));
    CHECK(r.passed);
    CHECK(r.checked > 0);
  }
}

TEST_CASE("table morphisms") {
  const Carrier c = fixtures::chain3();
  const Carrier u = fixtures::two_point();
  // chain3 -> two_point collapsing a and inf to u.
  const GenMorphism f = GenMorphism::table(c, u, {0, 1, 1});
  CHECK(validate_gen_cu_morphism(f).passed);
  // two_point -> chain3 sending u to a.
  const GenMorphism g = GenMorphism::table(u, c, {0, 1});
  CHECK(compose(f, g) == GenMorphism::identity(u));
  CHECK(prec(g, g));
  // Not monotone-additive: a -> inf, inf -> a breaks monotonicity.
  CHECK_THROWS_AS(GenMorphism::table(c, c, {0, 2, 1}), DomainError);
  const GenMorphism bad = GenMorphism::table(c, c, {0, 2, 1}, false);
  const MorphismReport r = validate_gen_cu_morphism(bad);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.failures.empty());
  CHECK_THROWS_AS(GenMorphism::table(c, u, {1, 1, 1}), DomainError);
}

TEST_CASE("multiples from extnat") {
  const Carrier m = Carrier::m1();
  const GenMorphism f = GenMorphism::nat_multiple(m, compact(QInf(1)));
  CHECK(cucalc::apply(f, nat(3)) == compact(QInf(3)));
  CHECK(cucalc::apply(f, nat(0)) == compact(QInf(0)));
  CHECK(cucalc::apply(f, nat_inf()) == soft(QInf::infinity()));
  const GenMorphism g = GenMorphism::nat_multiple(m, compact(QInf(2)));
  CHECK(prec(f, g));
  CHECK(prec(f, f));
  CHECK_FALSE(prec(GenMorphism::nat_multiple(m, soft(QInf(1))), GenMorphism::nat_multiple(m, soft(QInf(1)))));
  // Into extnat^2 the multiple becomes a column matrix.
  const GenMorphism col = GenMorphism::nat_multiple(Carrier::extnat(2), natvec({1, 2}));
  CHECK(std::holds_alternative<MatrixMor>(col.rep()));
  // Composition rules with multiples.
  const GenMorphism three = GenMorphism::matrix(mat(1, 1, {3}));
  CHECK(compose(f, three) == GenMorphism::nat_multiple(m, compact(QInf(3))));
  const GenMorphism sc = GenMorphism::scale_pbar(QInf(2));
  CHECK(compose(sc, GenMorphism::nat_multiple(Carrier::pbar(), q(1, 2))) ==
        GenMorphism::nat_multiple(Carrier::pbar(), q(1)));
}

TEST_CASE("pointwise sum and order") {
  const auto f = GenMorphism::matrix(mat(1, 2, {1, 0}));
  const auto g = GenMorphism::matrix(mat(1, 2, {0, INF}));
  const auto h = pointwise_add(f, g);
  for (const auto& a : Carrier::extnat(2).grid()) {
    CHECK(cucalc::apply(h, a) == Carrier::extnat().add(cucalc::apply(f, a), cucalc::apply(g, a)));
  }
  CHECK(pointwise_leq(f, h));
  CHECK_FALSE(pointwise_leq(h, f));
  CHECK(pointwise_add(GenMorphism::scale_trunc(QInf(1)), GenMorphism::scale_trunc(QInf(1))) == GenMorphism::scale_trunc(QInf(2)));
}

TEST_CASE("zero and identity morphisms") {
  for (const Carrier& s : {Carrier::extnat(3), Carrier::pbar(), Carrier::trunc(), fixtures::three_point_antichain()}) {
    const auto id = GenMorphism::identity(s);
    const auto z = GenMorphism::zero(s, s);
    for (const auto& a : s.grid(30)) {
      CHECK(cucalc::apply(id, a) == a);
      CHECK(cucalc::apply(z, a) == s.zero());
    }
    CHECK(prec(z, id));
  }
  CHECK_THROWS_AS(GenMorphism::identity(Carrier::m1()), UnsupportedError);
}

TEST_CASE("classification descriptions") {
  CHECK(classify_endomorphisms(Carrier::extnat(2), Carrier::extnat(3)).family == "M_{3,2}(extnat)");
  CHECK(classify_endomorphisms(Carrier::trunc()).parameters == "t in {0} u [1,inf]");
  CHECK(classify_endomorphisms(Carrier::pbar()).prec.find("finite") != std::string::npos);
  CHECK_THROWS_AS(classify_endomorphisms(Carrier::m1()), UnsupportedError);
}
