#include <random>

#include "cucalc/bivariant.hpp"
#include "cucalc/error.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cucalc;

namespace {

const ExtNat INF = ExtNat::infinity();

MatrixMor mat(std::size_t r, std::size_t c, std::vector<ExtNat> e) { return MatrixMor{r, c, std::move(e)}; }

IHomElem random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(0, 5);
  std::vector<ExtNat> e;
  for (std::size_t i = 0; i < r * c; ++i) {
    const int v = d(rng);
    e.push_back(v == 5 ? INF : ExtNat(static_cast<std::uint64_t>(v)));
  }
  return ihom_matrix(mat(r, c, e));
}

std::vector<IHomElem> all_points(const Carrier& dom) {
  auto sp = ihom_space(dom, dom);
  std::vector<IHomElem> out;
  for (const auto& e : sp->carrier.grid(200)) out.emplace_back(sp, e);
  return out;
}

}  // namespace

TEST_CASE("ihom_describe closed forms") {
  CHECK(ihom_describe(Carrier::extnat(2), Carrier::extnat(3)).name == "M_{3,2}(extnat)");
  CHECK(ihom_describe(Carrier::extnat(2), Carrier::extnat(3)).carrier == Carrier::extnat(6));
  CHECK(ihom_describe(Carrier::pbar(), Carrier::pbar()).name == "M1");
  CHECK(ihom_describe(Carrier::pbar(), Carrier::pbar()).carrier == Carrier::m1());
  CHECK(ihom_describe(Carrier::trunc(), Carrier::trunc()).name == "{0} u [1,inf] u (1,inf]'");
  CHECK(ihom_describe(Carrier::extnat(), Carrier::m1()).carrier == Carrier::m1());
  CHECK_THROWS_AS(ihom_describe(Carrier::trunc_hom(), Carrier::trunc_hom()), UnsupportedError);
  CHECK_THROWS_AS(ihom_describe(Carrier::pbar(), Carrier::trunc()), UnsupportedError);
  const auto fin = ihom_describe(fixtures::chain3(), fixtures::chain3());
  CHECK(fin.carrier.table().size() == enumerate_table_morphisms(fixtures::chain3(), fixtures::chain3()).size());
  CHECK_FALSE(regular_space(Carrier::trunc_hom())->complete);
}

TEST_CASE("finite ihom has pointwise order and is Cu[S,T]") {
  const Carrier s = fixtures::two_point();
  const Carrier t = fixtures::chain3();
  auto sp = ihom_space(s, t);
  // u -> 0, a, inf: all three are additive and monotone.
  REQUIRE(sp->tables.size() == 3);
  CHECK(sp->tables[0] == std::vector<std::size_t>{0, 0});
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const bool pw = t.table().le(sp->tables[i][1], sp->tables[j][1]);
      CHECK(sp->carrier.leq(FiniteIdx{i}, FiniteIdx{j}) == pw);
    }
  }
}

TEST_CASE("compose examples") {
  const auto y = ihom_matrix(mat(1, 2, {ExtNat(1), ExtNat(2)}));
  const auto x = ihom_matrix(mat(2, 1, {ExtNat(0), INF}));
  CHECK(compose(y, x).matrix() == mat(1, 1, {INF}));
  const auto s2 = ihom_trunc(TwoKind{Kind::Soft, QInf(2)});
  const auto c3 = ihom_trunc(TwoKind{Kind::Compact, QInf(3)});
  CHECK(compose(s2, c3).point() == TwoKind{Kind::Soft, QInf(6)});
  CHECK(compose(c3, s2).point() == TwoKind{Kind::Soft, QInf(6)});
  CHECK_THROWS_AS(compose(x, x), DomainError);
}

TEST_CASE("two-kind composition agrees with composing representative chains") {
  for (const auto& dom : {Carrier::pbar(), Carrier::trunc()}) {
    const auto pts = all_points(dom);
    for (const auto& y : pts) {
      for (const auto& x : pts) {
        INFO(format(y), " after ", format(x));
        CHECK(compose(y, x) == compose_via_paths(y, x));
      }
    }
  }
}

TEST_CASE("non-faithful evaluation on trunc") {
  const auto ci = ihom_trunc(TwoKind{Kind::Compact, QInf::infinity()});
  const auto si = ihom_trunc(TwoKind{Kind::Soft, QInf::infinity()});
  CHECK_FALSE(ci == si);
  for (const auto& a : Carrier::trunc().grid(200)) CHECK(evaluate(ci, a) == evaluate(si, a));
}

TEST_CASE("evaluate examples") {
  const auto x = ihom_matrix(mat(1, 2, {ExtNat(1), ExtNat(1)}));
  CHECK(evaluate(x, natvec({ExtNat(2), ExtNat(3)})) == nat(5));
  const auto s2 = ihom_m1(TwoKind{Kind::Soft, QInf(2)});
  CHECK(evaluate(s2, q(3)) == q(6));
  for (const auto& c : fixtures::all_carriers()) {
    IHomSpacePtr sp;
    try {
      sp = ihom_space(c, c);
    } catch (const UnsupportedError&) {
      continue;
    }
    for (const auto& e : sp->carrier.grid(40)) CHECK(evaluate(IHomElem(sp, e), c.zero()) == c.zero());
  }
  CHECK_THROWS_AS(evaluate(x, q(1)), DomainError);
}

TEST_CASE("evaluate is the supremum along a representative chain") {
  const Carrier p = Carrier::pbar();
  for (const auto& x : all_points(p)) {
    const PathClass path = ihom_to_path(x);
    const Chain& c = path.chain();
    auto term = [&](std::size_t i, const Element& a) {
      const Point pt = i < c.values.size() ? c.values[i] : chain_term(c, i - c.values.size() + 1);
      return cucalc::apply(std::get<GenMorphism>(pt), a);
    };
    for (const auto& a : p.grid(30)) {
      const Element v = evaluate(x, a);
      INFO(format(x), " at ", p.format(a));
      for (std::size_t i = 0; i < 60; ++i) CHECK(p.leq(term(i, a), v));
      // Every value strictly below v is exceeded by some term.
      const QInf& vq = std::get<QInf>(v);
      if (vq.is_zero()) continue;
      const QInf w = vq.is_inf() ? QInf(100) : vq * QInf(99, 100);
      bool hit = false;
      for (std::size_t i = 0; i < 2000 && !hit; ++i) hit = !p.leq(term(i, a), Element(w));
      CHECK(hit);
    }
  }
}

TEST_CASE("ext_tensor examples") {
  const auto id = ihom_identity(Carrier::extnat());
  CHECK(ext_tensor(id, id) == id);
  const auto two = ihom_matrix(mat(1, 1, {ExtNat(2)}));
  const auto three = ihom_matrix(mat(1, 1, {ExtNat(3)}));
  CHECK(ext_tensor(two, three).matrix() == mat(1, 1, {ExtNat(6)}));
  CHECK(ext_tensor(two, ihom_zero(Carrier::extnat(), Carrier::extnat())) ==
        ihom_zero(Carrier::extnat(), Carrier::extnat()));
  // Simple tensors: (x1 (x) x2)(a (x) b) = x1(a) (x) x2(b).
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    const auto x1 = random_matrix(rng, 2, 1);
    const auto x2 = random_matrix(rng, 1, 2);
    const auto t = ext_tensor(x1, x2);
    const auto hs = tensor_handle(x1.domain(), x2.domain());
    const auto ht = tensor_handle(x1.codomain(), x2.codomain());
    for (const auto& a : x1.domain().grid(10)) {
      for (const auto& b : x2.domain().grid(10)) {
        CHECK(evaluate(t, tensor_elem(hs, a, b)) == tensor_elem(ht, evaluate(x1, a), evaluate(x2, b)));
      }
    }
    CHECK(t == ext_tensor_via_paths(x1, x2));
  }
}

TEST_CASE("ext_tensor on m1 agrees with chains") {
  const auto pts = all_points(Carrier::pbar());
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      INFO(format(x), " (x) ", format(y));
      CHECK(ext_tensor(x, y) == ext_tensor_via_paths(x, y));
    }
  }
}

TEST_CASE("composition laws on matrices") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const auto x = random_matrix(rng, 2, 1);
    const auto y = random_matrix(rng, 3, 2);
    const auto z = random_matrix(rng, 2, 3);
    CHECK(compose(compose(z, y), x) == compose(z, compose(y, x)));
    CHECK(compose(ihom_identity(x.codomain()), x) == x);
    CHECK(compose(x, ihom_identity(x.domain())) == x);
    CHECK(endpoint(compose(y, x)) == compose(endpoint(y), endpoint(x)));
    for (const auto& a : x.domain().grid(8)) CHECK(evaluate(compose(y, x), a) == evaluate(y, evaluate(x, a)));
    CHECK(compose(y, x) == compose_via_paths(y, x));
  }
}

TEST_CASE("composition laws on finite carriers") {
  const Carrier a = fixtures::chain3();
  const Carrier b = fixtures::three_point_antichain();
  auto ab = ihom_space(a, b);
  auto ba = ihom_space(b, a);
  for (std::size_t i = 0; i < ab->tables.size(); ++i) {
    for (std::size_t j = 0; j < ba->tables.size(); ++j) {
      const IHomElem x(ab, FiniteIdx{i});
      const IHomElem y(ba, FiniteIdx{j});
      const auto yx = compose(y, x);
      for (std::size_t e = 0; e < a.table().size(); ++e) {
        CHECK(evaluate(yx, FiniteIdx{e}) == evaluate(y, evaluate(x, FiniteIdx{e})));
      }
      CHECK(compose(ihom_identity(b), x) == x);
      CHECK(compose(yx, ihom_identity(a)) == yx);
      CHECK(yx == compose_via_paths(y, x));
    }
  }
}

TEST_CASE("interchange and tensor associativity") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 100; ++it) {
    const auto x1 = random_matrix(rng, 2, 1);
    const auto y1 = random_matrix(rng, 1, 2);
    const auto x2 = random_matrix(rng, 2, 2);
    const auto y2 = random_matrix(rng, 1, 2);
    CHECK(compose(ext_tensor(y2, y1), ext_tensor(x2, x1)) == ext_tensor(compose(y2, x2), compose(y1, x1)));
    const auto z = random_matrix(rng, 1, 2);
    CHECK(ext_tensor(ext_tensor(x1, y1), z) == ext_tensor(x1, ext_tensor(y1, z)));
  }
  const auto pts = all_points(Carrier::pbar());
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      CHECK(compose(ext_tensor(x, y), ext_tensor(y, x)) == ext_tensor(compose(x, y), compose(y, x)));
    }
  }
}

TEST_CASE("unit maps") {
  const Carrier n = Carrier::extnat();
  const auto u3 = unit_map(n, nat(3), n);
  CHECK(u3.matrix() == mat(1, 1, {ExtNat(3)}));
  CHECK(way_below(u3, u3));
  CHECK(unit_map(n, nat(0), n) == ihom_zero(n, n));
  const Carrier p = Carrier::pbar();
  const auto u1 = unit_map(p, q(1), p);
  CHECK(u1.point() == TwoKind{Kind::Soft, QInf(1)});
  for (const auto& b : p.grid(40)) CHECK(evaluate(u1, b) == b);
  CHECK(unit_map(p, q(0), p) == ihom_zero(p, p));
  // sigma(unit_map(a))(b) = a (x) b.
  const std::vector<std::pair<Carrier, Carrier>> pairs = {
      {p, p}, {Carrier::m1(), p}, {Carrier::extnat(2), Carrier::extnat(2)}, {n, Carrier::m1()},
      {Carrier::extnat(2), n}, {n, fixtures::chain3()}};
  for (const auto& [s, t] : pairs) {
    const auto h = tensor_handle(s, t);
    const auto hr = tensor_handle(t, s);
    for (const auto& a : s.grid(20)) {
      const auto u = unit_map(s, a, t);
      const auto ur = unit_map_right(s, a, t);
      for (const auto& b : t.grid(20)) {
        CHECK(evaluate(u, b) == tensor_elem(h, a, b));
        CHECK(evaluate(ur, b) == tensor_elem(hr, b, a));
      }
    }
  }
}

TEST_CASE("i_iso round trip") {
  std::mt19937_64 rng(17);
  for (const auto& c : fixtures::all_carriers()) {
    for (int i = 0; i < 500; ++i) {
      const Element a = c.random(rng);
      CHECK(i_iso_inv(i_iso(c, a)) == a);
    }
    CHECK(i_iso(c, c.zero()) == ihom_zero(Carrier::extnat(), c));
  }
  const Carrier n2 = Carrier::extnat(2);
  const Element v = natvec({ExtNat(2), INF});
  CHECK(evaluate(i_iso(n2, v), nat(1)) == v);
  // Order isomorphism.
  for (const auto& a : Carrier::m1().grid(30)) {
    for (const auto& b : Carrier::m1().grid(30)) {
      CHECK(leq(i_iso(Carrier::m1(), a), i_iso(Carrier::m1(), b)) == Carrier::m1().leq(a, b));
    }
  }
}

TEST_CASE("general unit maps") {
  const Carrier n = Carrier::extnat();
  const auto three = ihom_matrix(mat(1, 1, {ExtNat(3)}));
  const auto g = general_unit_left(n, nat(2), three);
  CHECK(g.matrix() == mat(1, 1, {ExtNat(6)}));
  // Three-fold identity: (i(a) (x) x) = unit(a) after x = (id (x) x) after unit(a).
  std::mt19937_64 rng(19);
  for (int it = 0; it < 50; ++it) {
    const auto x = random_matrix(rng, 2, 2);
    for (std::uint64_t k : {0u, 1u, 2u, 5u}) {
      const auto via_unit = general_unit_left(n, nat(k), x);
      CHECK(via_unit == ext_tensor(i_iso(n, nat(k)), x));
      CHECK(via_unit == compose(ext_tensor(ihom_identity(n), x), unit_map(n, nat(k), x.domain())));
    }
    CHECK(general_unit_left(n, nat(1), x) == x);
    CHECK(general_unit_right(n, nat(1), x) == x);
  }
  const Carrier p = Carrier::pbar();
  for (const auto& x : all_points(p)) {
    CHECK(general_unit_left(p, q(1), ihom_identity(p)) == unit_map(p, q(1), p));
    for (const auto& a : p.grid(12)) {
      for (const auto& b : p.grid(12)) {
        CHECK(evaluate(general_unit_left(p, a, x), b) == tensor_elem(tensor_handle(p, p), a, evaluate(x, b)));
      }
    }
  }
}

TEST_CASE("boxtimes over P specializes") {
  const Carrier n = Carrier::extnat();
  std::mt19937_64 rng(23);
  for (int it = 0; it < 60; ++it) {
    // P = extnat: x (x)_P y = x (x) y.
    const auto x = random_matrix(rng, 2, 2);
    const auto y = random_matrix(rng, 2, 1);
    CHECK(boxtimes_over(n, Carrier::extnat(2), Carrier::extnat(2), x, y) == ext_tensor(x, y));
    // S1 = T2 = extnat: x (x)_P y = x after y.
    const auto x2 = random_matrix(rng, 1, 3);
    const auto y2 = random_matrix(rng, 3, 2);
    CHECK(boxtimes_over(Carrier::extnat(3), n, n, x2, y2) == compose(x2, y2));
  }
  const Carrier p = Carrier::pbar();
  CHECK(boxtimes_over(p, p, p, ihom_identity(p), ihom_identity(p)) == ihom_identity(p));
  const Carrier n2 = Carrier::extnat(2);
  CHECK(boxtimes_over(n2, n2, n2, ihom_identity(Carrier::extnat(4)), ihom_identity(Carrier::extnat(4))) ==
        ihom_identity(Carrier::extnat(8)));
}

TEST_CASE("adjunction transforms") {
  const Carrier n = Carrier::extnat();
  // f = i_iso corresponds to multiplication extnat (x) extnat -> extnat.
  const HomValued f = [&](const Element& a) { return i_iso(n, a); };
  const Bimap g = adjunction_to_tensor(f);
  for (const auto& a : n.grid(10)) {
    for (const auto& b : n.grid(10)) CHECK(g(a, b) == tensor_elem(tensor_handle(n, n), a, b));
  }
  const HomValued back = adjunction_to_hom(n, n, n, g);
  for (const auto& a : n.grid(10)) CHECK(back(a) == f(a));

  // Exhaustive finite round trip: every morphism S -> [[T,P]] given as a table.
  const Carrier s = fixtures::two_point();
  const Carrier t = fixtures::chain3();
  const Carrier pc = fixtures::chain3();
  auto tp = ihom_space(t, pc);
  const auto homs = enumerate_table_morphisms(s, tp->carrier);
  REQUIRE(!homs.empty());
  for (const auto& img : homs) {
    const HomValued fh = [&](const Element& a) { return IHomElem(tp, FiniteIdx{img[std::get<FiniteIdx>(a).index]}); };
    const Bimap gh = adjunction_to_tensor(fh);
    const HomValued fr = adjunction_to_hom(s, t, pc, gh);
    for (std::size_t a = 0; a < s.table().size(); ++a) CHECK(fr(FiniteIdx{a}) == fh(FiniteIdx{a}));
  }

  // Identity on [[S,T]] through evaluation and the unit.
  const Carrier p = Carrier::pbar();
  const auto sp = ihom_space(p, p);
  const Bimap ev = [&](const Element& x, const Element& b) { return evaluate(IHomElem(sp, x), b); };
  const HomValued id_back = adjunction_to_hom(sp->carrier, p, p, ev);
  for (const auto& x : sp->carrier.grid(60)) CHECK(id_back(x) == IHomElem(sp, x));
}

TEST_CASE("fit_morphism rejects maps outside the family") {
  const Carrier p = Carrier::pbar();
  CHECK_THROWS_AS(fit_morphism(p, p, [](const Element& a) { return Element(std::get<QInf>(a) * std::get<QInf>(a)); }),
                  DomainError);
  const auto f = fit_morphism(Carrier::trunc(), Carrier::trunc(), [](const Element& a) {
    const QInf v = std::get<QInf>(a) * QInf(3);
    return Element(v > QInf(1) ? QInf::infinity() : v);
  });
  CHECK(f == GenMorphism::scale_trunc(QInf(3)));
}

TEST_CASE("point product") {
  const Carrier h = Carrier::trunc_hom();
  CHECK(point_product(h, compact(QInf::infinity()), soft(QInf(2))) == compact(QInf::infinity()));
  CHECK(point_product(h, compact(QInf(0)), soft(QInf::infinity())) == h.zero());
  const Carrier m = Carrier::m1();
  CHECK(point_product(m, compact(QInf(2)), soft(QInf(3))) == soft(QInf(6)));
  CHECK(point_product(m, compact(QInf(2)), compact(QInf(3))) == compact(QInf(6)));
}
