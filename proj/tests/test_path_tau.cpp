#include "cucalc/error.hpp"
#include "cucalc/path_tau.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cucalc;

namespace {

const ExtNat INF = ExtNat::infinity();

Point mx(std::size_t r, std::size_t c, std::vector<ExtNat> e) {
  return GenMorphism::matrix(MatrixMor{r, c, std::move(e)});
}

std::vector<Point> pts(std::initializer_list<Element> xs) { return {xs.begin(), xs.end()}; }

// Sampled reading of the definition: each of the first terms of f is below
// some one of many more terms of g.
bool below_by_sampling(const Chain& f, const Chain& g) {
  auto terms = [](const Chain& c, std::size_t n) {
    std::vector<Point> out = c.values;
    if (c.law) {
      for (std::size_t k = 1; k <= n; ++k) out.push_back(chain_term(c, k));
    }
    return out;
  };
  const auto ft = terms(f, 30);
  const auto gt = terms(g, 300);
  for (const auto& v : ft) {
    bool hit = false;
    for (const auto& w : gt) hit = hit || f.ambient.prec(v, w);
    if (!hit) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("chain_below examples") {
  const Ambient n = Ambient::carrier(Carrier::extnat());
  CHECK(path_below(make_path(n, pts({nat(1), nat(2), nat(3)})), make_path(n, pts({nat(5)}))));
  CHECK_FALSE(path_below(make_path(n, pts({nat(1), nat(2), nat(3)})), make_path(n, pts({nat(2)}))));
  const Ambient m = Ambient::morphisms(Carrier::extnat(), Carrier::extnat());
  CHECK(path_below(make_path(m, {mx(1, 1, {0}), mx(1, 1, {1})}), make_path(m, {mx(1, 1, {1}), mx(1, 1, {2})})));
  CHECK_THROWS_AS(path_below(make_path(n, pts({nat(1)})), make_path(m, {mx(1, 1, {1})})), DomainError);
}

TEST_CASE("chain construction rejects non-increasing data") {
  const Ambient p = Ambient::carrier(Carrier::pbar());
  CHECK_THROWS_AS(make_path(p, pts({q(1), q(1)})), PreconditionError);
  CHECK_THROWS_AS(make_path(p, pts({q(1)}), LawKind::Stabilize), PreconditionError);
  CHECK_THROWS_AS(compact_class(p, q(1)), PreconditionError);
  // A path stabilizing at 3/4 would need 3/4 << 3/4.
  CHECK_THROWS_AS(make_path(p, pts({q(1, 2), q(3, 4)})), PreconditionError);
  const Chain literal{p, pts({q(1, 2), q(3, 4)}), std::nullopt, {}};
  CHECK_NOTHROW(validate_chain(literal));
  CHECK_THROWS_AS(chain_limit(literal), UnsupportedError);
  CHECK_THROWS_AS(make_path(p, pts({q(1, 2)}), LawKind::Stabilize, Point(q(1))), PreconditionError);
  const Ambient n = Ambient::carrier(Carrier::extnat());
  CHECK_THROWS_AS(make_path(n, pts({nat_inf()}), LawKind::Stabilize), PreconditionError);
}

TEST_CASE("endpoint examples") {
  const Ambient p = Ambient::carrier(Carrier::pbar());
  CHECK(endpoint(make_path(p, pts({q(1, 2), q(3, 4), q(7, 8)}), LawKind::Geometric)) == Point(q(1)));
  const GenMorphism phi = GenMorphism::scale_trunc(QInf(2));
  const Ambient t = Ambient::morphisms(Carrier::trunc(), Carrier::trunc());
  CHECK(endpoint(compact_class(t, phi)) == Point(phi));
  const Ambient m = Ambient::morphisms(Carrier::extnat(), Carrier::extnat());
  const auto c = make_path(m, {mx(1, 1, {1}), mx(1, 1, {2}), mx(1, 1, {3})}, LawKind::Arithmetic);
  CHECK(endpoint(c) == mx(1, 1, {INF}));
  CHECK_FALSE(normal_form(c).compact);
}

TEST_CASE("compact classes") {
  const Ambient v2 = Ambient::morphisms(Carrier::extnat(2), Carrier::extnat(2));
  const auto id = compact_class(v2, GenMorphism::identity(Carrier::extnat(2)));
  CHECK(normal_form(id).compact);
  CHECK(normal_form(id).endpoint == Point(mx(2, 2, {1, 0, 0, 1})));
  const Ambient n = Ambient::carrier(Carrier::extnat());
  CHECK(tau_equal(compact_class(n, nat(3)), compact_class(n, nat(3))));
  const Ambient t = Ambient::morphisms(Carrier::trunc(), Carrier::trunc());
  CHECK(normal_form(compact_class(t, GenMorphism::scale_trunc(QInf(1)))).compact);
  CHECK_THROWS_AS(compact_class(Ambient::morphisms(Carrier::pbar(), Carrier::pbar()),
                                GenMorphism::scale_pbar(QInf::infinity())),
                  PreconditionError);
}

TEST_CASE("tau_equal examples") {
  const Ambient p = Ambient::carrier(Carrier::pbar());
  const auto x = make_path(p, pts({q(1, 2), q(3, 4)}), LawKind::Geometric);
  CHECK(tau_equal(x, refine_path(x)));
  CHECK(tau_equal(x, make_path(p, pts({q(1, 4), q(1, 2), q(3, 4), q(7, 8)}), LawKind::Geometric)));
  const auto y = make_path(p, pts({q(1), q(3, 2)}), LawKind::Geometric);
  CHECK(endpoint(y) == Point(q(2)));
  CHECK_FALSE(tau_equal(x, y));
  CHECK(path_below(x, y));
  CHECK_FALSE(path_below(y, x));
}

TEST_CASE("scale chains separate attained and unattained endpoints") {
  // In Cu[trunc,trunc] the chain 1, 3/2, 7/4, ... and the constant 2 share
  // an endpoint but lie in different classes.
  const Ambient t = Ambient::morphisms(Carrier::trunc(), Carrier::trunc());
  const auto rising = make_path(t, {GenMorphism::scale_trunc(QInf(1)), GenMorphism::scale_trunc(QInf(3, 2))},
                                LawKind::Geometric);
  const auto flat = compact_class(t, GenMorphism::scale_trunc(QInf(2)));
  CHECK(endpoint(rising) == endpoint(flat));
  CHECK(path_below(rising, flat));
  CHECK_FALSE(path_below(flat, rising));
  CHECK_FALSE(normal_form(rising).compact);
  CHECK(normal_form(flat).compact);
  CHECK(below_by_sampling(rising.chain(), flat.chain()));
  CHECK_FALSE(below_by_sampling(flat.chain(), rising.chain()));
  // In Cu[pbar,pbar] scale inf is not compact, and finite scalings rising to
  // 1 differ from the constant 1.
  const Ambient pp = Ambient::morphisms(Carrier::pbar(), Carrier::pbar());
  const auto to1 = make_path(pp, {GenMorphism::scale_pbar(QInf(1, 2)), GenMorphism::scale_pbar(QInf(3, 4))},
                             LawKind::Geometric);
  const auto one = compact_class(pp, GenMorphism::scale_pbar(QInf(1)));
  CHECK(path_below(to1, one));
  CHECK_FALSE(path_below(one, to1));
  const auto toinf = make_path(pp, {GenMorphism::scale_pbar(QInf(1)), GenMorphism::scale_pbar(QInf(2))},
                               LawKind::Arithmetic);
  CHECK(endpoint(toinf) == Point(GenMorphism::scale_pbar(QInf::infinity())));
  CHECK(path_below(one, toinf));
}

TEST_CASE("chain_below agrees with sampling on families of chains") {
  struct Case {
    Ambient amb;
    std::vector<Chain> chains;
  };
  std::vector<Case> cases;
  {
    const Ambient p = Ambient::carrier(Carrier::pbar());
    cases.push_back({p,
                     {{p, pts({q(1, 2), q(3, 4)}), LawKind::Geometric, {}},
                      {p, pts({q(1, 2)}), std::nullopt, {}},
                      {p, pts({q(1, 4), q(1, 2)}), std::nullopt, {}},
                      {p, pts({q(1), q(3, 2)}), LawKind::Geometric, {}},
                      {p, pts({q(1), q(2)}), LawKind::Arithmetic, {}},
                      {p, pts({q(0)}), LawKind::Stabilize, {}},
                      {p, pts({q(1, 2), q(1)}), LawKind::Explicit, Point(q(2))}}});
  }
  {
    const Ambient n = Ambient::carrier(Carrier::extnat());
    cases.push_back({n,
                     {{n, pts({nat(1), nat(2), nat(3)}), std::nullopt, {}},
                      {n, pts({nat(5)}), std::nullopt, {}},
                      {n, pts({nat(2)}), LawKind::Stabilize, {}},
                      {n, pts({nat(1), nat(2)}), LawKind::Arithmetic, {}},
                      {n, pts({nat(0), nat(4)}), std::nullopt, {}}}});
  }
  {
    const Ambient m = Ambient::carrier(Carrier::m1());
    cases.push_back({m,
                     {{m, pts({compact(QInf(1)), compact(QInf(3, 2))}), LawKind::Geometric, {}},
                      {m, pts({compact(QInf(2))}), LawKind::Stabilize, {}},
                      {m, pts({compact(QInf(1)), soft(QInf(3, 2))}), std::nullopt, {}},
                      {m, pts({compact(QInf(1)), compact(QInf(2))}), LawKind::Arithmetic, {}}}});
  }
  {
    const Ambient t = Ambient::morphisms(Carrier::trunc(), Carrier::trunc());
    auto s = [](std::int64_t p, std::int64_t d) { return Point(GenMorphism::scale_trunc(QInf(p, d))); };
    cases.push_back({t,
                     {{t, {s(1, 1), s(3, 2)}, LawKind::Geometric, {}},
                      {t, {s(2, 1)}, LawKind::Stabilize, {}},
                      {t, {s(2, 1)}, std::nullopt, {}},
                      {t, {s(1, 1), s(2, 1)}, LawKind::Arithmetic, {}},
                      {t, {s(0, 1), s(1, 1)}, std::nullopt, {}}}});
  }
  {
    const Ambient v = Ambient::morphisms(Carrier::extnat(), Carrier::extnat(2));
    cases.push_back({v,
                     {{v, {mx(2, 1, {0, 1}), mx(2, 1, {1, 2})}, LawKind::Arithmetic, {}},
                      {v, {mx(2, 1, {1, 1})}, LawKind::Stabilize, {}},
                      {v, {mx(2, 1, {0, 5})}, std::nullopt, {}}}});
  }
  for (const auto& cs : cases) {
    for (const auto& f : cs.chains) {
      CHECK_NOTHROW(validate_chain(f));
      for (const auto& g : cs.chains) {
        INFO(cs.amb.name() << ": " << format(PathClass(f)) << " vs " << format(PathClass(g)));
        CHECK(chain_below(f, g) == below_by_sampling(f, g));
      }
    }
  }
}

TEST_CASE("carrier chains: order of classes is the order of endpoints") {
  for (const Carrier& s : {Carrier::pbar(), Carrier::m1(), Carrier::trunc(), Carrier::trunc_hom(), Carrier::z()}) {
    const Ambient a = Ambient::carrier(s);
    std::vector<PathClass> cls;
    for (const auto& x : s.grid(20)) {
      const ElementChain r = s.refine(x);
      cls.push_back(make_path(a, {r.values.begin(), r.values.end()}, r.law, r.limit ? std::optional<Point>(*r.limit)
                                                                                       : std::nullopt));
    }
    for (const auto& x : cls) {
      CHECK(tau_equal(x, refine_path(x)));
      for (const auto& y : cls) {
        const Element ex = std::get<Element>(endpoint(x));
        const Element ey = std::get<Element>(endpoint(y));
        INFO(s.name() << ": " << format(x) << " vs " << format(y));
        CHECK(path_below(x, y) == s.leq(ex, ey));
      }
    }
  }
}

TEST_CASE("chain_below is reflexive and transitive on samples") {
  const Ambient p = Ambient::carrier(Carrier::pbar());
  std::vector<PathClass> cls{make_path(p, pts({q(1, 2), q(3, 4)}), LawKind::Geometric),
                             make_path(p, pts({q(0), q(1, 2), q(3, 4)}), LawKind::Geometric),
                             make_path(p, pts({q(0)}), LawKind::Stabilize),
                             make_path(p, pts({q(1), q(2)}), LawKind::Arithmetic),
                             make_path(p, pts({q(1, 3), q(2, 3)}), LawKind::Explicit, Point(q(1)))};
  for (const auto& x : cls) {
    CHECK(path_below(x, x));
    for (const auto& y : cls) {
      for (const auto& z : cls) {
        if (path_below(x, y) && path_below(y, z)) CHECK(path_below(x, z));
      }
    }
  }
}
