#include "cucalc/ideals.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cucalc/error.hpp"

namespace cucalc {

namespace {

const ExtNat INF = ExtNat::infinity();

bool is_pow(const Carrier& s) { return s.kind() == CarrierKind::ExtNatPow; }
bool is_finite(const Carrier& s) { return s.kind() == CarrierKind::Finite; }
std::size_t idx(const Element& e) { return std::get<FiniteIdx>(e).index; }

Element top_element(const Carrier& s) {
  switch (s.kind()) {
    case CarrierKind::ExtNatPow:
      return natvec(std::vector<ExtNat>(s.dim(), INF));
    case CarrierKind::PBar:
    case CarrierKind::Trunc:
      return q_inf();
    case CarrierKind::MOne:
    case CarrierKind::Z:
      return soft(QInf::infinity());
    case CarrierKind::TruncHom:
      return compact(QInf::infinity());
    case CarrierKind::Finite: {
      std::size_t acc = 0;
      for (std::size_t i = 0; i < s.dim(); ++i) acc = s.table().sum(acc, i);
      return FiniteIdx{acc};
    }
  }
  throw UnsupportedError("no top element for " + s.name());
}

// Coordinates carrying inf in an idempotent of extnat^k.
std::vector<std::size_t> coords(const Element& e) {
  std::vector<std::size_t> c;
  const auto& v = std::get<NatVec>(e).v;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) c.push_back(i);
  }
  return c;
}

Element basis(std::size_t k, std::size_t j) {
  std::vector<ExtNat> v(k, ExtNat(0));
  v[j] = ExtNat(1);
  return natvec(std::move(v));
}

Carrier zero_carrier() {
  FiniteTable t;
  t.names = {"0"};
  t.add = {0};
  t.leq = {1};
  return Carrier::finite(std::move(t));
}

// Elements whose images determine a generalized Cu-morphism out of s up to
// passing to sums, multiples and suprema.
std::vector<Element> generators(const Carrier& s, std::size_t budget) {
  std::vector<Element> g;
  if (is_pow(s)) {
    for (std::size_t j = 0; j < s.dim(); ++j) g.push_back(basis(s.dim(), j));
  } else if (is_finite(s)) {
    for (std::size_t i = 0; i < s.dim(); ++i) g.push_back(FiniteIdx{i});
  } else {
    g = s.grid(budget);
  }
  return g;
}

// Generators of the ideal j.
std::vector<Element> ideal_generators(const Ideal& j, std::size_t budget) {
  const Carrier& s = j.carrier;
  std::vector<Element> g;
  if (is_pow(s)) {
    for (auto c : coords(j.generator)) g.push_back(basis(s.dim(), c));
  } else if (is_finite(s)) {
    for (auto m : j.members) g.push_back(FiniteIdx{m});
  } else {
    for (const auto& a : s.grid(budget)) {
      if (contains(j, a)) g.push_back(a);
    }
  }
  return g;
}

Carrier subcarrier(const Carrier& t, const std::vector<std::size_t>& members) {
  const auto& ct = t.table();
  const std::size_t m = members.size();
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t i = 0; i < m; ++i) pos[members[i]] = i;
  FiniteTable ft;
  ft.add.resize(m * m);
  ft.leq.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    ft.names.push_back(ct.names[members[i]]);
    for (std::size_t k = 0; k < m; ++k) {
      const auto it = pos.find(ct.sum(members[i], members[k]));
      if (it == pos.end()) throw DomainError("member set is not additively closed");
      ft.add[i * m + k] = it->second;
      ft.leq[i * m + k] = ct.le(members[i], members[k]) ? 1 : 0;
    }
  }
  return Carrier::finite(std::move(ft));
}

// Quotient of a finite carrier by the down-set of e.
std::pair<Carrier, std::vector<std::size_t>> finite_quotient(const Carrier& s, std::size_t e) {
  const auto& t = s.table();
  const std::size_t n = t.size();
  auto le_j = [&](std::size_t a, std::size_t b) { return t.le(a, t.sum(b, e)); };
  std::vector<std::size_t> cls(n, n);
  std::vector<std::size_t> reps;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < reps.size() && cls[a] == n; ++c) {
      if (le_j(a, reps[c]) && le_j(reps[c], a)) cls[a] = c;
    }
    if (cls[a] == n) {
      cls[a] = reps.size();
      reps.push_back(a);
    }
  }
  const std::size_t m = reps.size();
  FiniteTable ft;
  ft.add.resize(m * m);
  ft.leq.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    ft.names.push_back("[" + t.names[reps[i]] + "]");
    for (std::size_t k = 0; k < m; ++k) {
      ft.add[i * m + k] = cls[t.sum(reps[i], reps[k])];
      ft.leq[i * m + k] = le_j(reps[i], reps[k]) ? 1 : 0;
    }
  }
  return {Carrier::finite(std::move(ft)), cls};
}

std::vector<std::size_t> compose_tables(const std::vector<std::size_t>& g, const std::vector<std::size_t>& f) {
  std::vector<std::size_t> r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = g[f[i]];
  return r;
}

std::map<std::vector<std::size_t>, std::size_t> table_index(const IHomSpace& sp) {
  std::map<std::vector<std::size_t>, std::size_t> m;
  for (std::size_t i = 0; i < sp.tables.size(); ++i) m[sp.tables[i]] = i;
  return m;
}

// Rows (second) or columns (first) of an l x k matrix restricted to a set.
MatrixMor selection(std::size_t n, const std::vector<std::size_t>& keep) {
  MatrixMor p = MatrixMor::zero(keep.size(), n);
  for (std::size_t i = 0; i < keep.size(); ++i) p.at(i, keep[i]) = ExtNat(1);
  return p;
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& c) {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::binary_search(c.begin(), c.end(), i)) r.push_back(i);
  }
  return r;
}

void fail(EmbeddingReport& r, bool& flag, const std::string& msg) {
  flag = false;
  r.passed = false;
  if (r.failures.size() < 8) r.failures.push_back(msg);
}

// Ideal properties of a member predicate on a sample of a carrier.
template <class Pred>
void check_member_set(EmbeddingReport& r, const Carrier& c, const std::vector<Element>& g, Pred member) {
  if (!member(c.zero())) fail(r, r.member_set_is_ideal, "zero is not a member");
  for (const auto& x : g) {
    if (!member(x)) continue;
    ++r.members;
    const Element top = c.multiple(INF, x);
    if (!member(top)) fail(r, r.member_set_is_ideal, "not closed under suprema: inf * " + c.format(x));
    for (const auto& y : g) {
      ++r.checked;
      if (member(y) && !member(c.add(x, y))) {
        fail(r, r.member_set_is_ideal, "not additively closed: " + c.format(x) + " + " + c.format(y));
      }
      if (c.leq(y, x) && !member(y)) {
        fail(r, r.member_set_is_ideal, "not hereditary: " + c.format(y) + " <= " + c.format(x));
      }
    }
  }
}

std::string coord_list(const std::vector<std::size_t>& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::string("e") + std::to_string(c[i] + 1);
  return s + "}";
}

}  // namespace

bool contains(const Ideal& j, const Element& a) { return j.carrier.leq(a, j.generator); }

bool is_zero_ideal(const Ideal& j) { return j.generator == j.carrier.zero(); }

bool is_full_ideal(const Ideal& j) { return j.generator == top_element(j.carrier); }

std::string format(const Ideal& j) { return j.name; }

Ideal ideal_of(const Carrier& s, const Element& e) {
  s.require(e);
  if (!(s.add(e, e) == e)) throw DomainError(s.format(e) + " is not idempotent");
  Ideal j{s, e, "", {}};
  if (is_finite(s)) {
    for (std::size_t i = 0; i < s.dim(); ++i) {
      if (s.leq(FiniteIdx{i}, e)) j.members.push_back(i);
    }
  }
  if (is_zero_ideal(j)) {
    j.name = "{0}";
  } else if (is_full_ideal(j)) {
    j.name = s.name();
  } else if (is_pow(s)) {
    j.name = "span" + coord_list(coords(e));
  } else if (is_finite(s)) {
    j.name = "{";
    for (std::size_t i = 0; i < j.members.size(); ++i) j.name += (i ? "," : "") + s.table().names[j.members[i]];
    j.name += "}";
  } else {
    j.name = "{x : x <= " + s.format(e) + "}";
  }
  return j;
}

std::vector<Ideal> ideal_lattice(const Carrier& s) {
  std::vector<Element> gens;
  switch (s.kind()) {
    case CarrierKind::ExtNatPow: {
      const std::size_t k = s.dim();
      if (k > 12) throw UnsupportedError("ideal lattice of extnat^k needs k <= 12");
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<ExtNat> v;
        for (std::size_t i = 0; i < k; ++i) v.push_back((mask >> i & 1U) != 0 ? INF : ExtNat(0));
        gens.push_back(natvec(std::move(v)));
      }
      std::stable_sort(gens.begin(), gens.end(),
                       [](const Element& a, const Element& b) { return coords(a).size() < coords(b).size(); });
      break;
    }
    case CarrierKind::PBar:
    case CarrierKind::Trunc:
    case CarrierKind::MOne:
    case CarrierKind::Z:
      // inf * a is the top for every a != 0.
      gens = {s.zero(), top_element(s)};
      break;
    case CarrierKind::TruncHom:
      // inf * a is soft inf unless a is compact inf.
      gens = {s.zero(), soft(QInf::infinity()), top_element(s)};
      break;
    case CarrierKind::Finite: {
      std::vector<std::pair<std::size_t, std::size_t>> order;
      for (std::size_t e = 0; e < s.dim(); ++e) {
        if (s.table().sum(e, e) != e) continue;
        std::size_t below = 0;
        for (std::size_t i = 0; i < s.dim(); ++i) below += s.table().le(i, e) ? 1 : 0;
        order.emplace_back(below, e);
      }
      std::sort(order.begin(), order.end());
      for (const auto& [_, e] : order) gens.push_back(FiniteIdx{e});
      break;
    }
  }
  std::vector<Ideal> out;
  for (const auto& g : gens) out.push_back(ideal_of(s, g));
  return out;
}

Ideal generated_ideal(const Carrier& s, const Element& a) { return ideal_of(s, s.multiple(INF, a)); }

IdealCheck check_ideal(const Ideal& j, std::size_t budget) {
  IdealCheck r;
  const Carrier& s = j.carrier;
  auto failure = [&](const std::string& m) {
    r.passed = false;
    if (r.failures.size() < 8) r.failures.push_back(j.name + ": " + m);
  };
  if (!(s.add(j.generator, j.generator) == j.generator)) failure("generator is not idempotent");
  if (!contains(j, s.zero())) failure("zero is not a member");
  std::vector<Element> g = s.grid(budget);
  g.push_back(j.generator);
  for (const auto& a : g) {
    if (!contains(j, a)) continue;
    const ElementChain c = s.refine(a);
    for (std::size_t k = 1; k <= 4; ++k) {
      if (!contains(j, s.extend(c, k))) failure("chain term of " + s.format(a) + " leaves the ideal");
    }
    if (!contains(j, s.limit(c))) failure("not sup-closed at " + s.format(a));
    if (!contains(j, s.multiple(INF, a))) failure("not sup-closed at inf * " + s.format(a));
    for (const auto& b : g) {
      ++r.checked;
      if (contains(j, b) && !contains(j, s.add(a, b))) {
        failure("not additively closed: " + s.format(a) + " + " + s.format(b));
      }
      if (s.leq(b, a) && !contains(j, b)) failure("not hereditary: " + s.format(b) + " <= " + s.format(a));
    }
  }
  if (is_finite(s)) {
    std::vector<std::size_t> mem;
    for (std::size_t i = 0; i < s.dim(); ++i) {
      if (contains(j, FiniteIdx{i})) mem.push_back(i);
    }
    if (mem != j.members) failure("member list disagrees with the generator");
  }
  return r;
}

IdealCheck check_lattice_complete(const Carrier& s, std::size_t budget) {
  IdealCheck r;
  const auto lat = ideal_lattice(s);
  for (const auto& j : lat) {
    const auto c = check_ideal(j, budget);
    r.checked += c.checked;
    if (!c.passed) {
      r.passed = false;
      r.failures.insert(r.failures.end(), c.failures.begin(), c.failures.end());
    }
  }
  for (std::size_t a = 0; a < lat.size(); ++a) {
    for (std::size_t b = a + 1; b < lat.size(); ++b) {
      if (lat[a].generator == lat[b].generator) {
        r.passed = false;
        r.failures.push_back("duplicate ideal " + lat[a].name);
      }
    }
  }
  std::vector<Element> g = s.grid(budget);
  if (is_finite(s)) g = generators(s, budget);
  for (const auto& a : g) {
    ++r.checked;
    const Element e = s.multiple(INF, a);
    const bool listed =
        std::any_of(lat.begin(), lat.end(), [&](const Ideal& j) { return j.generator == e; });
    if (!listed) {
      r.passed = false;
      if (r.failures.size() < 8) r.failures.push_back("ideal generated by " + s.format(a) + " is not listed");
    }
  }
  return r;
}

Quotient quotient(const Carrier& s, const Ideal& j) {
  if (!(j.carrier == s)) throw DomainError("ideal " + j.name + " is not an ideal of " + s.name());
  if (is_finite(s)) {
    auto [c, cls] = finite_quotient(s, idx(j.generator));
    auto proj = [cls](const Element& a) -> Element { return FiniteIdx{cls[idx(a)]}; };
    return {c, proj, GenMorphism::table(s, c, cls)};
  }
  if (is_zero_ideal(j)) {
    return {s, [](const Element& a) { return a; }, GenMorphism::identity(s)};
  }
  if (is_full_ideal(j)) {
    return {zero_carrier(), [](const Element&) -> Element { return FiniteIdx{0}; }, std::nullopt};
  }
  if (is_pow(s)) {
    const auto keep = complement(s.dim(), coords(j.generator));
    const Carrier c = Carrier::extnat(keep.size());
    const MatrixMor p = selection(s.dim(), keep);
    auto proj = [p](const Element& a) -> Element { return matvec(p, std::get<NatVec>(a)); };
    return {c, proj, GenMorphism::matrix(p)};
  }
  throw UnsupportedError("quotient of " + s.name() + " by " + j.name);
}

bool ihom_ideal_member_second(const IHomElem& x, const Ideal& j) {
  if (!(j.carrier == x.codomain())) throw DomainError("ideal " + j.name + " is not an ideal of the codomain");
  if (is_full_ideal(j)) return true;
  for (const auto& a : generators(x.domain(), 64)) {
    if (!contains(j, evaluate(x, a))) return false;
  }
  return true;
}

bool ihom_ideal_member_first(const IHomElem& x, const Ideal& j) {
  if (!(j.carrier == x.domain())) throw DomainError("ideal " + j.name + " is not an ideal of the domain");
  const Element z = x.codomain().zero();
  for (const auto& a : ideal_generators(j, 64)) {
    if (!(evaluate(x, a) == z)) return false;
  }
  return true;
}

EmbeddingReport check_ideal_embedding_second(const Carrier& s, const Carrier& t, const Ideal& j,
                                             std::size_t budget) {
  EmbeddingReport r;
  const auto sp = ihom_space(s, t);
  const Carrier& c = sp->carrier;
  auto member = [&](const Element& e) { return ihom_ideal_member_second(IHomElem(sp, e), j); };
  std::vector<Element> g = c.grid(budget);
  if (is_finite(c)) g = generators(c, budget);
  check_member_set(r, c, g, member);

  if (is_finite(s) && is_finite(t)) {
    const Carrier sub = subcarrier(t, j.members);
    const auto ssp = ihom_space(s, sub);
    const auto index = table_index(*sp);
    std::set<std::size_t> image;
    std::vector<std::size_t> img_of(ssp->tables.size());
    for (std::size_t f = 0; f < ssp->tables.size(); ++f) {
      img_of[f] = index.at(compose_tables(j.members, ssp->tables[f]));
      image.insert(img_of[f]);
    }
    r.sub_elements = ssp->tables.size();
    for (std::size_t x = 0; x < sp->tables.size(); ++x) {
      if (member(FiniteIdx{x}) != (image.count(x) > 0)) {
        fail(r, r.image_is_member_set, "membership of " + c.format(FiniteIdx{x}) + " disagrees with the image");
      }
    }
    for (std::size_t f = 0; f < img_of.size(); ++f) {
      for (std::size_t h = 0; h < img_of.size(); ++h) {
        ++r.checked;
        if (ssp->carrier.leq(FiniteIdx{f}, FiniteIdx{h}) != c.leq(FiniteIdx{img_of[f]}, FiniteIdx{img_of[h]})) {
          fail(r, r.order_embedding, "order not reflected at " + ssp->carrier.format(FiniteIdx{f}));
        }
      }
    }
    return r;
  }
  if (is_pow(s) && is_pow(t)) {
    const auto cs = coords(j.generator);
    const MatrixMor inc = [&] {
      MatrixMor m = MatrixMor::zero(t.dim(), cs.size());
      for (std::size_t i = 0; i < cs.size(); ++i) m.at(cs[i], i) = ExtNat(1);
      return m;
    }();
    const MatrixMor restrict = selection(t.dim(), cs);
    if (cs.empty()) {
      r.sub_elements = 1;
      for (const auto& e : g) {
        if (member(e) != (e == c.zero())) fail(r, r.image_is_member_set, "nonzero member " + c.format(e));
      }
      return r;
    }
    const Carrier subc = Carrier::extnat(s.dim() * cs.size());
    const auto sub = subc.grid(budget);
    r.sub_elements = sub.size();
    auto as_mat = [](std::size_t rows, std::size_t cols, const Element& e) {
      return MatrixMor{rows, cols, std::get<NatVec>(e).v};
    };
    for (const auto& e : sub) {
      const MatrixMor y = matmul(inc, as_mat(cs.size(), s.dim(), e));
      if (!member(natvec(y.entries))) fail(r, r.image_is_member_set, "image " + format_matrix(y) + " not a member");
    }
    for (const auto& e : g) {
      if (!member(e)) continue;
      const MatrixMor x = as_mat(t.dim(), s.dim(), e);
      if (!(matmul(inc, matmul(restrict, x)) == x)) {
        fail(r, r.image_is_member_set, "member " + format_matrix(x) + " is not in the image");
      }
    }
    for (const auto& a : sub) {
      for (const auto& b : sub) {
        ++r.checked;
        const MatrixMor ia = matmul(inc, as_mat(cs.size(), s.dim(), a));
        const MatrixMor ib = matmul(inc, as_mat(cs.size(), s.dim(), b));
        if (subc.leq(a, b) != c.leq(natvec(ia.entries), natvec(ib.entries))) {
          fail(r, r.order_embedding, "order not reflected at " + subc.format(a) + ", " + subc.format(b));
        }
      }
    }
    return r;
  }
  // {0} and the whole carrier are the only ideals elsewhere.
  r.sub_elements = is_zero_ideal(j) ? 1 : g.size();
  for (const auto& e : g) {
    const bool expect = is_full_ideal(j) || e == c.zero();
    if (member(e) != expect) fail(r, r.image_is_member_set, "membership of " + c.format(e));
  }
  return r;
}

EmbeddingReport check_ideal_embedding_first(const Carrier& s, const Carrier& t, const Ideal& j,
                                            std::size_t budget) {
  EmbeddingReport r;
  const auto sp = ihom_space(s, t);
  const Carrier& c = sp->carrier;
  auto member = [&](const Element& e) { return ihom_ideal_member_first(IHomElem(sp, e), j); };
  std::vector<Element> g = c.grid(budget);
  if (is_finite(c)) g = generators(c, budget);
  check_member_set(r, c, g, member);

  if (is_finite(s) && is_finite(t)) {
    const auto [qc, cls] = finite_quotient(s, idx(j.generator));
    const auto qsp = ihom_space(qc, t);
    const auto index = table_index(*sp);
    std::set<std::size_t> image;
    std::vector<std::size_t> img_of(qsp->tables.size());
    for (std::size_t f = 0; f < qsp->tables.size(); ++f) {
      img_of[f] = index.at(compose_tables(qsp->tables[f], cls));
      image.insert(img_of[f]);
    }
    r.sub_elements = qsp->tables.size();
    for (std::size_t x = 0; x < sp->tables.size(); ++x) {
      if (member(FiniteIdx{x}) != (image.count(x) > 0)) {
        fail(r, r.image_is_member_set, "membership of " + c.format(FiniteIdx{x}) + " disagrees with the image");
      }
    }
    for (std::size_t f = 0; f < img_of.size(); ++f) {
      for (std::size_t h = 0; h < img_of.size(); ++h) {
        ++r.checked;
        if (qsp->carrier.leq(FiniteIdx{f}, FiniteIdx{h}) != c.leq(FiniteIdx{img_of[f]}, FiniteIdx{img_of[h]})) {
          fail(r, r.order_embedding, "order not reflected at " + qsp->carrier.format(FiniteIdx{f}));
        }
      }
    }
    return r;
  }
  if (is_pow(s) && is_pow(t)) {
    const auto keep = complement(s.dim(), coords(j.generator));
    const MatrixMor p = selection(s.dim(), keep);
    MatrixMor lift = MatrixMor::zero(s.dim(), keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) lift.at(keep[i], i) = ExtNat(1);
    if (keep.empty()) {
      r.sub_elements = 1;
      for (const auto& e : g) {
        if (member(e) != (e == c.zero())) fail(r, r.image_is_member_set, "nonzero member " + c.format(e));
      }
      return r;
    }
    const Carrier subc = Carrier::extnat(t.dim() * keep.size());
    const auto sub = subc.grid(budget);
    r.sub_elements = sub.size();
    auto as_mat = [](std::size_t rows, std::size_t cols, const Element& e) {
      return MatrixMor{rows, cols, std::get<NatVec>(e).v};
    };
    for (const auto& e : sub) {
      const MatrixMor y = matmul(as_mat(t.dim(), keep.size(), e), p);
      if (!member(natvec(y.entries))) fail(r, r.image_is_member_set, "image " + format_matrix(y) + " not a member");
    }
    for (const auto& e : g) {
      if (!member(e)) continue;
      const MatrixMor x = as_mat(t.dim(), s.dim(), e);
      if (!(matmul(matmul(x, lift), p) == x)) {
        fail(r, r.image_is_member_set, "member " + format_matrix(x) + " is not in the image");
      }
    }
    for (const auto& a : sub) {
      for (const auto& b : sub) {
        ++r.checked;
        const MatrixMor ia = matmul(as_mat(t.dim(), keep.size(), a), p);
        const MatrixMor ib = matmul(as_mat(t.dim(), keep.size(), b), p);
        if (subc.leq(a, b) != c.leq(natvec(ia.entries), natvec(ib.entries))) {
          fail(r, r.order_embedding, "order not reflected at " + subc.format(a) + ", " + subc.format(b));
        }
      }
    }
    return r;
  }
  r.sub_elements = is_full_ideal(j) ? 1 : g.size();
  for (const auto& e : g) {
    const bool expect = is_zero_ideal(j) || e == c.zero();
    if (member(e) != expect) fail(r, r.image_is_member_set, "membership of " + c.format(e));
  }
  return r;
}

SimpleReport is_simple(const Carrier& s) {
  SimpleReport r;
  const auto lat = ideal_lattice(s);
  r.ideals = lat.size();
  r.simple = lat.size() == 2;
  if (lat.size() > 2) {
    r.witness = lat[1];
    r.note = "proper nonzero ideal " + lat[1].name + "; " + s.format(top_element(s)) + " is not in it";
  } else if (lat.size() == 1) {
    r.note = "the zero semigroup has a single ideal";
  } else {
    r.note = "the only ideals are {0} and " + s.name();
  }
  return r;
}

SimpleReport is_simple(const IHomSpace& sp) {
  if (!sp.complete) throw UnsupportedError("closed form of " + sp.name + " is partial");
  SimpleReport r = is_simple(sp.carrier);
  r.note = "[[" + sp.dom.name() + "," + sp.cod.name() + "]] = " + sp.name + ": " + r.note;
  return r;
}

FactorMapReport quotient_factor_map(const Carrier& s, const Carrier& t, const Ideal& j) {
  if (!is_finite(s) || !is_finite(t)) throw UnsupportedError("factor maps are computed on finite instances");
  if (!(j.carrier == t)) throw DomainError("ideal " + j.name + " is not an ideal of " + t.name());
  FactorMapReport r;
  auto failure = [&](bool& flag, const std::string& m) {
    flag = false;
    if (r.failures.size() < 8) r.failures.push_back(m);
  };
  const Carrier sub = subcarrier(t, j.members);
  const auto [qt, pi] = finite_quotient(t, idx(j.generator));
  const auto st = ihom_space(s, t);
  const auto sj = ihom_space(s, sub);
  const auto sq = ihom_space(s, qt);
  const auto st_index = table_index(*st);
  const auto sq_index = table_index(*sq);
  const Carrier& cst = st->carrier;
  const Carrier& csq = sq->carrier;

  std::vector<std::size_t> pi_star(st->tables.size());
  for (std::size_t g = 0; g < st->tables.size(); ++g) pi_star[g] = sq_index.at(compose_tables(pi, st->tables[g]));
  std::set<std::size_t> image;
  for (const auto& f : sj->tables) {
    const std::size_t x = st_index.at(compose_tables(j.members, f));
    image.insert(x);
    if (pi_star[x] != 0) failure(r.composite_zero, "pi_* iota_* does not vanish at " + cst.format(FiniteIdx{x}));
  }
  // The image is an ideal of the finite carrier [[S,T]]: check it and take
  // its largest element as the generator.
  std::size_t top = 0;
  for (auto x : image) top = cst.table().sum(top, x);
  const Ideal big = [&] {
    try {
      return ideal_of(cst, FiniteIdx{top});
    } catch (const DomainError&) {
      return Ideal{cst, FiniteIdx{top}, "", {}};
    }
  }();
  if (std::vector<std::size_t>(image.begin(), image.end()) != big.members) {
    failure(r.image_is_ideal, "iota_*[[S,J]] is not the down-set of its largest element");
  }
  const auto [dq, cls] = finite_quotient(cst, top);
  r.domain_size = dq.dim();
  r.codomain_size = csq.dim();
  std::vector<std::size_t> hat(dq.dim(), csq.dim());
  for (std::size_t g = 0; g < cls.size(); ++g) {
    if (hat[cls[g]] == csq.dim()) {
      hat[cls[g]] = pi_star[g];
    } else if (hat[cls[g]] != pi_star[g]) {
      failure(r.well_defined, "pi_* differs on the class of " + cst.format(FiniteIdx{g}));
    }
  }
  bool embedding = true;
  for (std::size_t a = 0; a < dq.dim(); ++a) {
    for (std::size_t b = 0; b < dq.dim(); ++b) {
      if (hat[dq.table().sum(a, b)] != csq.table().sum(hat[a], hat[b])) {
        failure(r.morphism, "induced map is not additive");
      }
      const bool le_d = dq.table().le(a, b);
      const bool le_c = csq.table().le(hat[a], hat[b]);
      if (le_d && !le_c) failure(r.morphism, "induced map is not monotone");
      if (le_d != le_c) embedding = false;
    }
  }
  std::set<std::size_t> hit(hat.begin(), hat.end());
  r.injective = hit.size() == hat.size();
  r.surjective = hit.size() == csq.dim();
  r.order_embedding = embedding && r.morphism;
  r.isomorphism = r.order_embedding && r.surjective;
  return r;
}

}  // namespace cucalc
