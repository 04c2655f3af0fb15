#include <functional>

#include "cucalc/carriers.hpp"
#include "cucalc/error.hpp"

namespace cucalc {

namespace {

class Check {
 public:
  explicit Check(std::string name) { r_.name = std::move(name); }

  // Records one instance; keeps the first failing witness.
  void expect(bool ok, const std::function<std::string()>& witness) {
    ++r_.checked;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.witness = witness();
    }
  }
  bool failed() const { return !r_.passed; }
  AxiomResult take() { return std::move(r_); }

 private:
  AxiomResult r_;
};

// Terms v_1..v_n of the chain followed by `extra` continuation terms.
std::vector<Element> terms(const Carrier& s, const ElementChain& c, std::size_t extra) {
  std::vector<Element> out = c.values;
  for (std::size_t k = 1; k <= extra; ++k) out.push_back(s.extend(c, k));
  return out;
}

// sup characterization in a Cu-semigroup: every term is below x, and every
// sampled w way below x sits below some term.
std::optional<std::string> sup_violation(const Carrier& s, const std::vector<Element>& ts, const Element& x,
                                         const std::vector<Element>& probes) {
  for (const auto& t : ts) {
    if (!s.leq(t, x)) return "term " + s.format(t) + " exceeds claimed supremum " + s.format(x);
  }
  for (const auto& w : probes) {
    if (!s.way_below(w, x)) continue;
    bool hit = false;
    for (const auto& t : ts) {
      if (s.leq(w, t)) {
        hit = true;
        break;
      }
    }
    if (!hit) return s.format(w) + " << " + s.format(x) + " but no term reaches it";
  }
  return std::nullopt;
}

}  // namespace

AxiomReport check_axioms(const Carrier& s, const AxiomBudget& budget) {
  AxiomReport rep;
  rep.carrier = s.name();
  const std::vector<Element> xs = s.grid(budget.samples);
  const std::size_t n = xs.size();
  auto f = [&](const Element& a) { return s.format(a); };

  {
    Check c("partial order");
    for (std::size_t i = 0; i < n && !c.failed(); ++i) {
      c.expect(s.leq(xs[i], xs[i]), [&] { return "not reflexive at " + f(xs[i]); });
      for (std::size_t j = 0; j < n; ++j) {
        const bool ij = s.leq(xs[i], xs[j]);
        if (i != j) {
          c.expect(!(ij && s.leq(xs[j], xs[i])), [&] { return "not antisymmetric at " + f(xs[i]) + ", " + f(xs[j]); });
        }
        if (!ij) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (s.leq(xs[j], xs[k])) {
            c.expect(s.leq(xs[i], xs[k]), [&] { return "not transitive at " + f(xs[i]) + ", " + f(xs[j]) + ", " + f(xs[k]); });
          }
        }
      }
    }
    rep.results.push_back(c.take());
  }

  {
    Check c("positively ordered monoid");
    const Element z = s.zero();
    for (std::size_t i = 0; i < n && !c.failed(); ++i) {
      const Element& a = xs[i];
      c.expect(s.add(a, z) == a, [&] { return "0 not neutral at " + f(a); });
      c.expect(s.leq(z, a), [&] { return "0 not below " + f(a); });
      for (std::size_t j = 0; j < n; ++j) {
        const Element& b = xs[j];
        const Element ab = s.add(a, b);
        c.expect(ab == s.add(b, a), [&] { return "not commutative at " + f(a) + ", " + f(b); });
        for (std::size_t k = 0; k < n; ++k) {
          const Element& cc = xs[k];
          c.expect(s.add(ab, cc) == s.add(a, s.add(b, cc)),
                   [&] { return "not associative at " + f(a) + ", " + f(b) + ", " + f(cc); });
        }
      }
    }
    rep.results.push_back(c.take());
  }

  // Way-below related pairs drive O2-O4 and the auxiliary-relation checks.
  std::vector<std::pair<std::size_t, std::size_t>> wb;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (s.way_below(xs[i], xs[j])) wb.emplace_back(i, j);
    }
  }

  {
    Check c("O1 suprema");
    for (const auto& a : xs) {
      if (c.failed()) break;
      std::vector<ElementChain> chains;
      chains.push_back(s.refine(a));
      if (s.kind() != CarrierKind::Finite) {
        const Element a2 = s.add(a, a);
        if (!(a2 == a)) chains.push_back({{a, a2}, LawKind::Arithmetic, std::nullopt});
      }
      for (const auto& ch : chains) {
        const Element sup = sup_chain(s, ch);
        const auto why = sup_violation(s, terms(s, ch, budget.chain_terms), sup, xs);
        c.expect(!why, [&] { return *why; });
      }
    }
    rep.results.push_back(c.take());
  }

  {
    Check c("O2 approximation");
    for (const auto& a : xs) {
      if (c.failed()) break;
      const ElementChain ch = s.refine(a);
      const auto ts = terms(s, ch, budget.chain_terms);
      for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        c.expect(s.way_below(ts[i], ts[i + 1]), [&] { return "refinement of " + f(a) + " not way-below increasing at " + f(ts[i]); });
      }
      if (ch.law == LawKind::Stabilize) {
        c.expect(s.way_below(ch.values.back(), ch.values.back()), [&] { return "refinement of " + f(a) + " ends at a non-compact element"; });
      }
      c.expect(sup_chain(s, ch) == a, [&] { return "refinement of " + f(a) + " has the wrong supremum"; });
    }
    rep.results.push_back(c.take());
  }

  {
    Check c("O3 additivity of way-below");
    const std::size_t m = std::min<std::size_t>(wb.size(), 60);
    for (std::size_t p = 0; p < m && !c.failed(); ++p) {
      for (std::size_t r = 0; r < m; ++r) {
        const Element& a1 = xs[wb[p * wb.size() / m].first];
        const Element& a = xs[wb[p * wb.size() / m].second];
        const Element& b1 = xs[wb[r * wb.size() / m].first];
        const Element& b = xs[wb[r * wb.size() / m].second];
        c.expect(s.way_below(s.add(a1, b1), s.add(a, b)),
                 [&] { return f(a1) + "<<" + f(a) + ", " + f(b1) + "<<" + f(b) + " but sums are not way-below"; });
      }
    }
    for (std::size_t i = 0; i < n && !c.failed(); ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!s.leq(xs[i], xs[j])) continue;
        for (std::size_t k = 0; k < n; k += 3) {
          c.expect(s.leq(s.add(xs[i], xs[k]), s.add(xs[j], xs[k])),
                   [&] { return "addition not monotone: " + f(xs[i]) + "<=" + f(xs[j]) + " plus " + f(xs[k]); });
        }
      }
    }
    rep.results.push_back(c.take());
  }

  {
    Check c("O4 suprema of sums");
    const std::size_t m = std::min<std::size_t>(n, 16);
    for (std::size_t i = 0; i < m && !c.failed(); ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const Element& a = xs[i * n / m];
        const Element& b = xs[j * n / m];
        const ElementChain ca = s.refine(a);
        const ElementChain cb = s.refine(b);
        const auto ta = terms(s, ca, budget.chain_terms + ca.values.size());
        const auto tb = terms(s, cb, budget.chain_terms + cb.values.size());
        // Align by position; a shorter listed part is padded by its own law.
        std::vector<Element> sums;
        const std::size_t len = std::min(ta.size(), tb.size());
        for (std::size_t t = 0; t < len; ++t) sums.push_back(s.add(ta[t], tb[t]));
        const auto why = sup_violation(s, sums, s.add(a, b), xs);
        c.expect(!why, [&] { return "sum of refinements of " + f(a) + " and " + f(b) + ": " + *why; });
      }
    }
    rep.results.push_back(c.take());
  }

  {
    Check c("auxiliary relation");
    const Element z = s.zero();
    for (const auto& b : xs) c.expect(s.way_below(z, b), [&] { return "0 not way-below " + f(b); });
    for (const auto& [i, j] : wb) {
      if (c.failed()) break;
      c.expect(s.leq(xs[i], xs[j]), [&] { return f(xs[i]) + "<<" + f(xs[j]) + " without <="; });
      for (const auto& x : xs) {
        if (s.leq(x, xs[i])) {
          c.expect(s.way_below(x, xs[j]), [&] { return "transport fails: " + f(x) + "<=" + f(xs[i]) + "<<" + f(xs[j]); });
        }
        if (s.leq(xs[j], x)) {
          c.expect(s.way_below(xs[i], x), [&] { return "transport fails: " + f(xs[i]) + "<<" + f(xs[j]) + "<=" + f(x); });
        }
      }
    }
    rep.results.push_back(c.take());
  }

  {
    Check c("softness");
    for (const auto& a : xs) {
      if (c.failed()) break;
      std::optional<Element> bad;
      for (const auto& a1 : xs) {
        if (!s.way_below(a1, a)) continue;
        bool found = false;
        for (std::size_t k = 1; k <= budget.soft_k && !found; ++k) {
          found = s.leq(s.multiple(ExtNat(k + 1), a1), s.multiple(ExtNat(k), a));
        }
        if (!found) {
          bad = a1;
          break;
        }
      }
      const bool claimed = s.is_soft(a);
      if (claimed) {
        c.expect(!bad, [&] { return f(a) + " reported soft but " + f(*bad) + " has no k"; });
      } else {
        c.expect(bad.has_value(), [&] { return f(a) + " reported not soft but no sampled witness"; });
      }
    }
    rep.results.push_back(c.take());
  }

  return rep;
}

}  // namespace cucalc
