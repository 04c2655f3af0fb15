#include "cucalc/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "cucalc/error.hpp"

namespace cucalc {

namespace {

const char* const NAMES[] = {"0", "a", "b", "c", "d"};

std::size_t idx(const Element& e) { return std::get<FiniteIdx>(e).index; }

void need_finite(const Carrier& s) {
  if (s.kind() != CarrierKind::Finite) throw UnsupportedError("the oracle needs finite carriers, got " + s.name());
}

// m^k with a budget.
std::size_t power_checked(std::size_t m, std::size_t k, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > cap / std::max<std::size_t>(m, 1)) throw BudgetError("enumeration exceeds the budget");
    r *= m;
  }
  return r;
}

// Advances an odometer over digits [from, size) in base m; false on wrap.
bool advance(std::vector<std::size_t>& d, std::size_t from, std::size_t m) {
  for (std::size_t i = d.size(); i-- > from;) {
    if (++d[i] < m) return true;
    d[i] = 0;
  }
  return false;
}

std::vector<std::uint8_t> encode(const FiniteTable& t, const std::vector<std::size_t>& p) {
  const std::size_t m = t.size();
  std::vector<std::uint8_t> add(m * m);
  std::vector<std::uint8_t> le(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      add[p[i] * m + p[j]] = static_cast<std::uint8_t>(p[t.sum(i, j)]);
      le[p[i] * m + p[j]] = static_cast<std::uint8_t>(t.le(i, j) ? 1 : 0);
    }
  }
  add.insert(add.end(), le.begin(), le.end());
  return add;
}

FiniteTable decode(const std::vector<std::uint8_t>& code, std::size_t m) {
  FiniteTable t;
  for (std::size_t i = 0; i < m; ++i) t.names.emplace_back(NAMES[i]);
  t.add.assign(code.begin(), code.begin() + static_cast<std::ptrdiff_t>(m * m));
  t.leq.assign(code.begin() + static_cast<std::ptrdiff_t>(m * m), code.end());
  return t;
}

// Commutative monoid tables on {0..m-1} with identity 0 and no nonzero sum
// equal to 0 (positivity forbids inverses), one per isomorphism class.
std::vector<FiniteTable> monoids(std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) cells.emplace_back(i, j);
  }
  std::vector<int> add(m * m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    add[i] = static_cast<int>(i);
    add[i * m] = static_cast<int>(i);
  }
  auto get = [&](int a, int b) { return add[static_cast<std::size_t>(a) * m + static_cast<std::size_t>(b)]; };
  auto consistent = [&]() {
    for (int a = 1; a < static_cast<int>(m); ++a) {
      for (int b = 1; b < static_cast<int>(m); ++b) {
        const int ab = get(a, b);
        if (ab < 0) continue;
        for (int c = 1; c < static_cast<int>(m); ++c) {
          const int bc = get(b, c);
          if (bc < 0) continue;
          const int l = get(ab, c);
          const int r = get(a, bc);
          if (l >= 0 && r >= 0 && l != r) return false;
        }
      }
    }
    return true;
  };
  std::set<std::vector<std::uint8_t>> seen;
  std::vector<FiniteTable> out;
  std::vector<std::size_t> ident(m);
  std::iota(ident.begin(), ident.end(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      FiniteTable t;
      for (std::size_t i = 0; i < m; ++i) t.names.emplace_back(NAMES[i]);
      for (int v : add) t.add.push_back(static_cast<std::size_t>(v));
      t.leq.assign(m * m, 0);
      for (std::size_t i = 0; i < m; ++i) t.leq[i * m + i] = 1;
      const auto code = canonical_form(t);
      if (seen.insert(code).second) out.push_back(decode(code, m));
      return;
    }
    const auto [i, j] = cells[k];
    for (std::size_t v = 1; v < m; ++v) {
      add[i * m + j] = add[j * m + i] = static_cast<int>(v);
      if (consistent()) rec(k + 1);
    }
    add[i * m + j] = add[j * m + i] = -1;
  };
  rec(0);
  return out;
}

// Partial orders with 0 at the bottom compatible with the addition of t.
std::vector<FiniteTable> positive_orders(const FiniteTable& mono) {
  const std::size_t m = mono.size();
  std::vector<char> forced(m * m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    forced[a * m + a] = 1;
    forced[a] = 1;
    for (std::size_t b = 0; b < m; ++b) forced[a * m + mono.sum(a, b)] = 1;
  }
  auto close = [m](std::vector<char>& r) {
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          if (r[i * m + k] && r[k * m + j]) r[i * m + j] = 1;
        }
      }
    }
  };
  close(forced);
  std::vector<std::size_t> free;
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = 1; j < m; ++j) {
      if (i != j && !forced[i * m + j]) free.push_back(i * m + j);
    }
  }
  std::vector<FiniteTable> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
    std::vector<char> r = forced;
    for (std::size_t b = 0; b < free.size(); ++b) {
      if (mask >> b & 1U) r[free[b]] = 1;
    }
    std::vector<char> c = r;
    close(c);
    if (c != r) continue;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      for (std::size_t j = 0; j < m && ok; ++j) {
        if (i != j && r[i * m + j] && r[j * m + i]) ok = false;
        if (!r[i * m + j]) continue;
        for (std::size_t k = 0; k < m && ok; ++k) {
          if (!r[mono.sum(i, k) * m + mono.sum(j, k)]) ok = false;
        }
      }
    }
    if (!ok) continue;
    FiniteTable t = mono;
    t.leq = r;
    out.push_back(std::move(t));
  }
  return out;
}

bool is_morphism(const FiniteTable& s, const FiniteTable& t, const std::vector<std::size_t>& img) {
  const std::size_t n = s.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (img[s.sum(a, b)] != t.sum(img[a], img[b])) return false;
      if (s.le(a, b) && !t.le(img[a], img[b])) return false;
    }
  }
  return true;
}

// The endpoint of tau(Q) is an isomorphism onto the base table.
bool endpoint_iso(const TauResult& tau, const FiniteTable& base) {
  const std::size_t n = base.size();
  std::set<std::size_t> hit(tau.endpoint.begin(), tau.endpoint.end());
  if (tau.chains.size() != n || hit.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (tau.endpoint[tau.table.sum(i, j)] != base.sum(tau.endpoint[i], tau.endpoint[j])) return false;
      if (tau.table.le(i, j) != base.le(tau.endpoint[i], tau.endpoint[j])) return false;
    }
  }
  return true;
}

}  // namespace

std::string describe_finite(const FiniteTable& t) {
  std::string s = "{";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + t.names[i];
  s += " |";
  bool first = true;
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = i; j < t.size(); ++j) {
      s += std::string(first ? " " : ", ") + t.names[i] + "+" + t.names[j] + "=" + t.names[t.sum(i, j)];
      first = false;
    }
  }
  s += " |";
  first = true;
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = 1; j < t.size(); ++j) {
      if (i != j && t.le(i, j)) {
        s += std::string(first ? " " : ", ") + t.names[i] + "<=" + t.names[j];
        first = false;
      }
    }
  }
  return s + "}";
}

std::vector<std::uint8_t> canonical_form(const FiniteTable& t) {
  const std::size_t m = t.size();
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::uint8_t> best = encode(t, p);
  while (m > 1 && std::next_permutation(p.begin() + 1, p.end())) {
    auto c = encode(t, p);
    if (c < best) best = std::move(c);
  }
  return best;
}

std::vector<Carrier> generate_finite_cu(std::size_t n) {
  if (n > 5) throw BudgetError("generate_finite_cu supports at most 5 elements");
  std::vector<Carrier> out;
  for (std::size_t m = 1; m <= n; ++m) {
    std::set<std::vector<std::uint8_t>> codes;
    for (const auto& mono : monoids(m)) {
      for (const auto& t : positive_orders(mono)) {
        if (!finite_table_violation(t).has_value()) codes.insert(canonical_form(t));
      }
    }
    for (const auto& c : codes) out.push_back(Carrier::finite(decode(c, m)));
  }
  return out;
}

std::vector<TableMor> enumerate_gen_morphisms(const Carrier& s, const Carrier& t) {
  need_finite(s);
  need_finite(t);
  const auto& ss = s.table();
  const auto& tt = t.table();
  power_checked(tt.size(), ss.size() - 1, 50'000'000);
  std::vector<TableMor> out;
  std::vector<std::size_t> img(ss.size(), 0);
  do {
    if (is_morphism(ss, tt, img)) out.push_back(TableMor{img});
  } while (advance(img, 1, tt.size()));
  return out;
}

std::vector<BiTable> enumerate_bimorphisms(const Carrier& s, const Carrier& t, const Carrier& p) {
  need_finite(s);
  need_finite(t);
  need_finite(p);
  const auto& ss = s.table();
  const auto& tt = t.table();
  const auto& pp = p.table();
  const std::size_t ns = ss.size();
  const std::size_t nt = tt.size();
  power_checked(pp.size(), (ns - 1) * (nt - 1), 50'000'000);
  // Free cells (a, b) with a, b nonzero, as odometer digits.
  std::vector<std::size_t> d((ns - 1) * (nt - 1), 0);
  std::vector<BiTable> out;
  BiTable phi(ns * nt, 0);
  std::vector<std::size_t> row(nt);
  std::vector<std::size_t> col(ns);
  while (true) {
    for (std::size_t a = 1; a < ns; ++a) {
      for (std::size_t b = 1; b < nt; ++b) phi[a * nt + b] = d[(a - 1) * (nt - 1) + (b - 1)];
    }
    bool ok = true;
    for (std::size_t a = 0; a < ns && ok; ++a) {
      for (std::size_t b = 0; b < nt; ++b) row[b] = phi[a * nt + b];
      ok = is_morphism(tt, pp, row);
    }
    for (std::size_t b = 0; b < nt && ok; ++b) {
      for (std::size_t a = 0; a < ns; ++a) col[a] = phi[a * nt + b];
      ok = is_morphism(ss, pp, col);
    }
    if (ok) out.push_back(phi);
    if (d.empty() || !advance(d, 0, pp.size())) break;
  }
  return out;
}

BijectionReport check_closed_bijection(const Carrier& s, const Carrier& t, const Carrier& p) {
  BijectionReport r;
  auto failure = [&](bool& flag, const std::string& m) {
    flag = false;
    r.passed = false;
    if (r.failures.size() < 8) r.failures.push_back(m);
  };
  const auto sp = ihom_space(t, p);
  const Carrier& h = sp->carrier;
  const auto& ht = h.table();
  const auto& pt = p.table();
  const std::size_t ns = s.dim();
  const std::size_t nt = t.dim();
  const auto homs = enumerate_gen_morphisms(s, h);
  const auto bis = enumerate_bimorphisms(s, t, p);
  r.homs = homs.size();
  r.bimorphisms = bis.size();
  if (homs.size() != bis.size()) {
    failure(r.counts_equal, "|Cu(S,[[T,P]])| = " + std::to_string(homs.size()) +
                                " but |BiCu(S x T,P)| = " + std::to_string(bis.size()));
  }
  std::map<BiTable, std::size_t> bi_index;
  for (std::size_t k = 0; k < bis.size(); ++k) bi_index[bis[k]] = k;
  std::map<std::vector<std::size_t>, std::size_t> hom_index;
  for (std::size_t k = 0; k < homs.size(); ++k) hom_index[homs[k].image] = k;
  std::map<std::vector<std::size_t>, std::size_t> table_index;
  for (std::size_t k = 0; k < sp->tables.size(); ++k) table_index[sp->tables[k]] = k;

  auto forward = [&](const TableMor& alpha) {
    BiTable phi(ns * nt);
    for (std::size_t a = 0; a < ns; ++a) {
      for (std::size_t b = 0; b < nt; ++b) phi[a * nt + b] = sp->tables[alpha.image[a]][b];
    }
    return phi;
  };
  auto backward = [&](const BiTable& phi) -> std::optional<std::vector<std::size_t>> {
    std::vector<std::size_t> alpha(ns);
    for (std::size_t a = 0; a < ns; ++a) {
      const std::vector<std::size_t> rowv(phi.begin() + static_cast<std::ptrdiff_t>(a * nt),
                                          phi.begin() + static_cast<std::ptrdiff_t>((a + 1) * nt));
      const auto it = table_index.find(rowv);
      if (it == table_index.end()) return std::nullopt;
      alpha[a] = it->second;
    }
    return alpha;
  };

  std::vector<std::size_t> fwd(homs.size(), bis.size());
  for (std::size_t k = 0; k < homs.size(); ++k) {
    const BiTable phi = forward(homs[k]);
    const auto it = bi_index.find(phi);
    if (it == bi_index.end()) {
      failure(r.forward_lands, "transform of a Cu-morphism is not a bimorphism");
      continue;
    }
    fwd[k] = it->second;
    const auto back = backward(phi);
    if (!back || *back != homs[k].image) failure(r.mutually_inverse, "backward after forward is not the identity");
  }
  for (const auto& phi : bis) {
    const auto alpha = backward(phi);
    if (!alpha || hom_index.count(*alpha) == 0) {
      failure(r.backward_lands, "inverse transform of a bimorphism is not a Cu-morphism");
      continue;
    }
    if (forward(TableMor{*alpha}) != phi) failure(r.mutually_inverse, "forward after backward is not the identity");
  }
  if (!r.passed) return r;

  for (std::size_t i = 0; i < homs.size(); ++i) {
    for (std::size_t j = 0; j < homs.size(); ++j) {
      bool le_h = true;
      std::vector<std::size_t> sum(ns);
      for (std::size_t a = 0; a < ns; ++a) {
        le_h = le_h && ht.le(homs[i].image[a], homs[j].image[a]);
        sum[a] = ht.sum(homs[i].image[a], homs[j].image[a]);
      }
      bool le_b = true;
      BiTable bsum(ns * nt);
      for (std::size_t c = 0; c < ns * nt; ++c) {
        le_b = le_b && pt.le(bis[fwd[i]][c], bis[fwd[j]][c]);
        bsum[c] = pt.sum(bis[fwd[i]][c], bis[fwd[j]][c]);
      }
      if (le_h != le_b) failure(r.order_iso, "order not preserved in both directions");
      if (forward(TableMor{sum}) != bsum) failure(r.additive, "transform is not additive");
    }
  }
  for (const auto& alpha : homs) {
    for (std::size_t a = 0; a < ns; ++a) {
      for (std::size_t a2 = 0; a2 < ns; ++a2) {
        if (s.way_below(FiniteIdx{a2}, FiniteIdx{a}) &&
            !h.way_below(FiniteIdx{alpha.image[a2]}, FiniteIdx{alpha.image[a]})) {
          failure(r.cu_equals_gen, "a generalized Cu-morphism fails to preserve way-below");
        }
      }
    }
  }
  // The explicit transforms of the bivariant module.
  for (std::size_t k = 0; k < homs.size(); ++k) {
    const auto& alpha = homs[k];
    const HomValued f = [&](const Element& a) { return IHomElem(sp, FiniteIdx{alpha.image[idx(a)]}); };
    const Bimap g = adjunction_to_tensor(f);
    const BiTable& phi = bis[fwd[k]];
    for (std::size_t a = 0; a < ns; ++a) {
      for (std::size_t b = 0; b < nt; ++b) {
        if (!(g(FiniteIdx{a}, FiniteIdx{b}) == Element(FiniteIdx{phi[a * nt + b]}))) {
          failure(r.library_agrees, "adjunction_to_tensor disagrees with the brute-force transform");
        }
      }
    }
    const Bimap beta = [&phi, nt](const Element& a, const Element& b) -> Element {
      return FiniteIdx{phi[idx(a) * nt + idx(b)]};
    };
    const HomValued back = adjunction_to_hom(s, t, p, beta);
    for (std::size_t a = 0; a < ns; ++a) {
      if (!(back(FiniteIdx{a}) == IHomElem(sp, FiniteIdx{alpha.image[a]}))) {
        failure(r.library_agrees, "adjunction_to_hom disagrees with the brute-force transform");
      }
    }
  }
  return r;
}

std::optional<std::string> aux_relation_violation(const QTable& q) {
  const auto& t = q.base;
  const std::size_t n = t.size();
  if (q.prec.size() != n * n) return "relation table has the wrong size";
  auto pr = [&](std::size_t a, std::size_t b) { return q.prec[a * n + b] != 0; };
  for (std::size_t a = 0; a < n; ++a) {
    if (!pr(0, a)) return "0 < " + t.names[a] + " fails";
    for (std::size_t b = 0; b < n; ++b) {
      if (pr(a, b) && !t.le(a, b)) return t.names[a] + " < " + t.names[b] + " but not " + t.names[a] + " <= " + t.names[b];
      if (!pr(a, b)) continue;
      for (std::size_t a2 = 0; a2 < n; ++a2) {
        for (std::size_t b2 = 0; b2 < n; ++b2) {
          if (t.le(a2, a) && t.le(b, b2) && !pr(a2, b2)) {
            return "transport fails at " + t.names[a2] + " <= " + t.names[a] + " < " + t.names[b] + " <= " + t.names[b2];
          }
          if (pr(a2, b2) && !pr(t.sum(a, a2), t.sum(b, b2))) {
            return "additivity fails at " + t.names[a] + " < " + t.names[b] + ", " + t.names[a2] + " < " + t.names[b2];
          }
        }
      }
    }
  }
  return std::nullopt;
}

TauResult brute_tau(const QTable& q) {
  if (const auto v = finite_table_violation(q.base)) throw PreconditionError("invalid base table: " + *v);
  if (const auto v = aux_relation_violation(q)) throw PreconditionError("invalid auxiliary relation: " + *v);
  const auto& t = q.base;
  const std::size_t n = t.size();
  auto pr = [&](std::size_t a, std::size_t b) { return q.prec[a * n + b] != 0; };

  std::vector<std::vector<std::size_t>> chains;
  std::vector<std::size_t> cur;
  std::function<void()> dfs = [&]() {
    const std::size_t last = cur.back();
    if (pr(last, last)) chains.push_back(cur);
    for (std::size_t w = 0; w < n; ++w) {
      if (w == last || !pr(last, w)) continue;
      cur.push_back(w);
      dfs();
      cur.pop_back();
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    cur = {v};
    dfs();
  }
  auto below = [&](const std::vector<std::size_t>& f, const std::vector<std::size_t>& g) {
    return std::all_of(f.begin(), f.end(), [&](std::size_t x) {
      return std::any_of(g.begin(), g.end(), [&](std::size_t y) { return pr(x, y); });
    });
  };

  TauResult res;
  res.chains_enumerated = chains.size();
  std::map<std::vector<std::size_t>, std::size_t> cls;
  for (const auto& c : chains) {
    std::size_t k = 0;
    for (; k < res.chains.size(); ++k) {
      if (below(c, res.chains[k]) && below(res.chains[k], c)) break;
    }
    if (k == res.chains.size()) {
      res.chains.push_back(c);
      res.endpoint.push_back(c.back());
    }
    cls[c] = k;
  }
  const std::size_t m = res.chains.size();
  auto sum_chain = [&](const std::vector<std::size_t>& f, const std::vector<std::size_t>& g) {
    const std::size_t len = std::max(f.size(), g.size());
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t v = t.sum(f[std::min(i, f.size() - 1)], g[std::min(i, g.size() - 1)]);
      if (s.empty() || s.back() != v) s.push_back(v);
    }
    return s;
  };
  res.table.add.resize(m * m);
  res.table.leq.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    std::string nm = "[";
    for (std::size_t k = 0; k < res.chains[i].size(); ++k) nm += (k ? "," : "") + t.names[res.chains[i][k]];
    res.table.names.push_back(nm + "]");
    for (std::size_t j = 0; j < m; ++j) {
      res.table.add[i * m + j] = cls.at(sum_chain(res.chains[i], res.chains[j]));
      res.table.leq[i * m + j] = below(res.chains[i], res.chains[j]) ? 1 : 0;
    }
  }
  return res;
}

QTable morphism_qtable(const Carrier& s, const Carrier& t) {
  const auto morphs = enumerate_gen_morphisms(s, t);
  const auto& tt = t.table();
  const std::size_t n = morphs.size();
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t k = 0; k < n; ++k) index[morphs[k].image] = k;
  std::vector<GenMorphism> gm;
  for (const auto& f : morphs) gm.push_back(GenMorphism::table(s, t, f.image));
  QTable q;
  q.base.add.resize(n * n);
  q.base.leq.resize(n * n);
  q.prec.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string nm = "(";
    for (std::size_t a = 0; a < morphs[i].image.size(); ++a) nm += (a ? "," : "") + tt.names[morphs[i].image[a]];
    q.base.names.push_back(nm + ")");
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> sum(morphs[i].image.size());
      bool le = true;
      for (std::size_t a = 0; a < sum.size(); ++a) {
        sum[a] = tt.sum(morphs[i].image[a], morphs[j].image[a]);
        le = le && tt.le(morphs[i].image[a], morphs[j].image[a]);
      }
      q.base.add[i * n + j] = index.at(sum);
      q.base.leq[i * n + j] = le ? 1 : 0;
      q.prec[i * n + j] = prec(gm[i], gm[j]) ? 1 : 0;
    }
  }
  return q;
}

TauCheck check_ihom_collapse(const Carrier& s, const Carrier& t) {
  TauCheck r;
  auto failure = [&](bool& flag, const std::string& m) {
    flag = false;
    r.passed = false;
    if (r.failures.size() < 8) r.failures.push_back(m);
  };
  const QTable q = morphism_qtable(s, t);
  const std::size_t n = q.base.size();
  r.morphisms = n;
  if (q.prec != q.base.leq) failure(r.prec_is_pointwise, "auxiliary relation differs from the pointwise order");
  const auto sp = ihom_space(s, t);
  const auto morphs = enumerate_gen_morphisms(s, t);
  const bool same_list = sp->tables.size() == n && std::equal(morphs.begin(), morphs.end(), sp->tables.begin(),
                                                                 [](const TableMor& f, const auto& g) {
                                                                   return f.image == g;
                                                                 });
  if (!same_list) failure(r.library_agrees, "naive enumeration disagrees with enumerate_table_morphisms");
  const TauResult tau = brute_tau(q);
  r.classes = tau.chains.size();
  const auto& ht = sp->carrier.table();
  std::set<std::size_t> hit(tau.endpoint.begin(), tau.endpoint.end());
  if (tau.chains.size() != n || hit.size() != n) failure(r.endpoint_iso, "endpoint is not a bijection");
  if (r.endpoint_iso && same_list) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ++r.checked;
        const std::size_t ei = tau.endpoint[i];
        const std::size_t ej = tau.endpoint[j];
        if (tau.endpoint[tau.table.sum(i, j)] != ht.sum(ei, ej)) failure(r.endpoint_iso, "endpoint is not additive");
        if (tau.table.le(i, j) != ht.le(ei, ej)) failure(r.endpoint_iso, "endpoint is not an order-isomorphism");
      }
    }
  }
  // Chain comparisons of the path_tau module against the brute force.
  const Ambient amb = Ambient::morphisms(s, t);
  auto to_path = [&](const std::vector<std::size_t>& c) {
    std::vector<Point> pts;
    for (auto k : c) pts.emplace_back(GenMorphism::table(s, t, morphs[k].image));
    return make_path(amb, std::move(pts), LawKind::Stabilize);
  };
  const std::size_t lim = std::min<std::size_t>(tau.chains.size(), 24);
  std::vector<PathClass> paths;
  for (std::size_t i = 0; i < lim; ++i) paths.push_back(to_path(tau.chains[i]));
  for (std::size_t i = 0; i < lim; ++i) {
    for (std::size_t j = 0; j < lim; ++j) {
      ++r.checked;
      if (path_below(paths[i], paths[j]) != tau.table.le(i, j)) failure(r.library_agrees, "path_below disagrees");
      if (tau_equal(paths[i], paths[j]) != (i == j)) failure(r.library_agrees, "tau_equal disagrees");
    }
  }
  return r;
}

ProbeReport tensor_order_embedding_probe(const Carrier& s1, const Carrier& t1, const Carrier& s2,
                                         const Carrier& t2, std::size_t budget) {
  ProbeReport r;
  const auto pow = [](const Carrier& c) { return c.kind() == CarrierKind::ExtNatPow; };
  if (!pow(s1) || !pow(t1) || !pow(s2) || !pow(t2)) {
    r.note = "no closed-form tensor product of the bivariant semigroups; undecided";
    return r;
  }
  const auto sp1 = ihom_space(s1, t1);
  const auto sp2 = ihom_space(s2, t2);
  const TensorHandle h = tensor_handle(sp1->carrier, sp2->carrier);
  const auto target = ihom_space(tensor_handle(s1, s2).product, tensor_handle(t1, t2).product);
  const Bimap beta = [&](const Element& a, const Element& b) {
    return ext_tensor(IHomElem(sp1, a), IHomElem(sp2, b)).element();
  };
  const GenMorphism f = induced_morphism(h, target->carrier, beta);
  const auto g1 = sp1->carrier.grid(16);
  const auto g2 = sp2->carrier.grid(16);
  for (const auto& a : g1) {
    for (const auto& b : g2) {
      ++r.checked;
      if (!(cucalc::apply(f, tensor_elem(h, a, b)) == beta(a, b))) {
        r.decided = true;
        r.witness = "induced map disagrees with the external tensor product at " + sp1->carrier.format(a) + " (x) " +
                    sp2->carrier.format(b);
        return r;
      }
    }
  }
  const auto g = h.product.grid(budget);
  r.decided = true;
  r.holds = true;
  for (const auto& a : g) {
    const Element fa = cucalc::apply(f, a);
    for (const auto& b : g) {
      ++r.checked;
      if (h.product.leq(a, b) != target->carrier.leq(fa, cucalc::apply(f, b))) {
        r.holds = false;
        r.witness = h.product.format(a) + " vs " + h.product.format(b);
        r.note = "order not reflected on the sample";
        return r;
      }
    }
  }
  r.note = "order reflected on " + std::to_string(g.size()) + " sampled elements of " + h.name + " (sampled only)";
  return r;
}

std::optional<OracleCheck> oracle_check_from_name(const std::string& s) {
  if (s == "axioms") return OracleCheck::Axioms;
  if (s == "bijection") return OracleCheck::Bijection;
  if (s == "tau") return OracleCheck::Tau;
  return std::nullopt;
}

OracleRun run_oracle(std::size_t max_size, OracleCheck check) {
  OracleRun run;
  run.max_size = max_size;
  const auto cs = generate_finite_cu(max_size);
  run.carriers = cs.size();
  auto push = [&](OracleEntry e) {
    run.passed = run.passed && e.passed;
    run.entries.push_back(std::move(e));
  };
  switch (check) {
    case OracleCheck::Axioms:
      run.check = "axioms";
      for (const auto& c : cs) {
        const auto rep = check_axioms(c, AxiomBudget{64, 8, 8});
        std::string detail = "all axioms hold";
        for (const auto& a : rep.results) {
          if (!a.passed) detail = a.name + ": " + a.witness;
        }
        push({describe_finite(c.table()), rep.passed(), detail});
      }
      break;
    case OracleCheck::Bijection:
      run.check = "bijection";
      for (const auto& s : cs) {
        for (const auto& t : cs) {
          for (const auto& p : cs) {
            const auto rep = check_closed_bijection(s, t, p);
            std::string detail = std::to_string(rep.homs) + " Cu-morphisms, " + std::to_string(rep.bimorphisms) +
                                 " bimorphisms";
            if (!rep.failures.empty()) detail += "; " + rep.failures.front();
            push({describe_finite(s.table()) + " ; " + describe_finite(t.table()) + " ; " + describe_finite(p.table()), rep.passed,
                  detail});
          }
        }
      }
      break;
    case OracleCheck::Tau:
      run.check = "tau";
      for (const auto& s : cs) {
        QTable q{s.table(), s.table().leq};
        const auto tau = brute_tau(q);
        const bool iso = endpoint_iso(tau, s.table());
        push({describe_finite(s.table()) + " with < = <=", iso,
              std::to_string(tau.chains.size()) + " classes from " + std::to_string(tau.chains_enumerated) +
                  " chains"});
        for (const auto& t : cs) {
          const auto rep = check_ihom_collapse(s, t);
          std::string detail = std::to_string(rep.classes) + " classes, " + std::to_string(rep.morphisms) +
                               " morphisms";
          if (!rep.failures.empty()) detail += "; " + rep.failures.front();
          push({describe_finite(s.table()) + " ; " + describe_finite(t.table()), rep.passed, detail});
        }
      }
      break;
  }
  return run;
}

}  // namespace cucalc
