#include "cucalc/morphisms.hpp"

#include <algorithm>
#include <functional>

#include "cucalc/error.hpp"

namespace cucalc {

// ------------------------------------------------------------ matrices

bool MatrixMor::finite() const {
  return std::none_of(entries.begin(), entries.end(), [](const ExtNat& e) { return e.is_inf(); });
}

MatrixMor MatrixMor::identity(std::size_t n) {
  MatrixMor m = zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ExtNat(1);
  return m;
}

MatrixMor MatrixMor::zero(std::size_t rows, std::size_t cols) {
  return MatrixMor{rows, cols, std::vector<ExtNat>(rows * cols, ExtNat(0))};
}

MatrixMor matmul(const MatrixMor& a, const MatrixMor& b) {
  if (a.cols != b.rows) throw DomainError("matrix shapes do not compose");
  MatrixMor r = MatrixMor::zero(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < b.cols; ++j) {
      ExtNat s(0);
      for (std::size_t m = 0; m < a.cols; ++m) s += a.at(i, m) * b.at(m, j);
      r.at(i, j) = s;
    }
  }
  return r;
}

MatrixMor kron(const MatrixMor& a, const MatrixMor& b) {
  MatrixMor r = MatrixMor::zero(a.rows * b.rows, a.cols * b.cols);
  for (std::size_t i1 = 0; i1 < a.rows; ++i1) {
    for (std::size_t j1 = 0; j1 < a.cols; ++j1) {
      for (std::size_t i2 = 0; i2 < b.rows; ++i2) {
        for (std::size_t j2 = 0; j2 < b.cols; ++j2) {
          r.at(i1 * b.rows + i2, j1 * b.cols + j2) = a.at(i1, j1) * b.at(i2, j2);
        }
      }
    }
  }
  return r;
}

MatrixMor matadd(const MatrixMor& a, const MatrixMor& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw DomainError("matrix shapes differ");
  MatrixMor r = a;
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] += b.entries[i];
  return r;
}

MatrixMor matscale(const ExtNat& n, const MatrixMor& a) {
  MatrixMor r = a;
  for (auto& e : r.entries) e = n * e;
  return r;
}

NatVec matvec(const MatrixMor& m, const NatVec& v) {
  if (v.v.size() != m.cols) throw DomainError("vector length does not match matrix");
  NatVec r{std::vector<ExtNat>(m.rows, ExtNat(0))};
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) r.v[i] += m.at(i, j) * v.v[j];
  }
  return r;
}

// ------------------------------------------------------------ factories

namespace {

QInf cut(const QInf& v) { return v > QInf(1) ? QInf::infinity() : v; }

bool is_pow(const Carrier& s) { return s.kind() == CarrierKind::ExtNatPow; }

void same_ends(const GenMorphism& f, const GenMorphism& g) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain())) {
    throw DomainError("morphisms " + format(f) + " and " + format(g) + " have different carriers");
  }
}

std::optional<std::string> table_violation(const Carrier& dom, const Carrier& cod,
                                           const std::vector<std::size_t>& img) {
  const auto& td = dom.table();
  const auto& tc = cod.table();
  const std::size_t n = td.size();
  if (img.size() != n) return "table has " + std::to_string(img.size()) + " entries, expected " + std::to_string(n);
  for (std::size_t v : img) {
    if (v >= tc.size()) return std::string("value outside the codomain");
  }
  if (img[0] != 0) return "zero maps to " + tc.names[img[0]];
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (img[td.sum(a, b)] != tc.sum(img[a], img[b])) {
        return "additivity fails at " + td.names[a] + ", " + td.names[b];
      }
      if (td.le(a, b) && !tc.le(img[a], img[b])) {
        return "monotonicity fails at " + td.names[a] + " <= " + td.names[b];
      }
    }
  }
  return std::nullopt;
}

}  // namespace

GenMorphism GenMorphism::matrix(MatrixMor m) {
  if (m.rows == 0 || m.cols == 0 || m.entries.size() != m.rows * m.cols) {
    throw DomainError("malformed matrix");
  }
  Carrier dom = Carrier::extnat(m.cols);
  Carrier cod = Carrier::extnat(m.rows);
  return GenMorphism(std::move(dom), std::move(cod), std::move(m));
}

GenMorphism GenMorphism::scale_pbar(QInf t) {
  return GenMorphism(Carrier::pbar(), Carrier::pbar(), ScalePBar{std::move(t)});
}

GenMorphism GenMorphism::scale_trunc(QInf t) {
  if (!t.is_zero() && t < QInf(1)) {
    // 1/2 (1 + 1) = 1/2 (inf) = inf, but 1/2 + 1/2 = 1.
    throw DomainError("scale " + t.str() + " is not additive on trunc; need 0 or t >= 1");
  }
  return GenMorphism(Carrier::trunc(), Carrier::trunc(), ScaleTrunc{std::move(t)});
}

GenMorphism GenMorphism::table(const Carrier& dom, const Carrier& cod, std::vector<std::size_t> image,
                               bool validate) {
  if (dom.kind() != CarrierKind::Finite || cod.kind() != CarrierKind::Finite) {
    throw DomainError("table morphisms need finite carriers");
  }
  if (image.size() != dom.dim()) throw DomainError("table size does not match the domain");
  for (std::size_t v : image) {
    if (v >= cod.dim()) throw DomainError("table value outside the codomain");
  }
  if (!validate) return GenMorphism(dom, cod, TableMor{std::move(image)});
  if (auto why = table_violation(dom, cod, image)) throw DomainError("not a generalized Cu-morphism: " + *why);
  return GenMorphism(dom, cod, TableMor{std::move(image)});
}

GenMorphism GenMorphism::nat_multiple(const Carrier& cod, Element a) {
  cod.require(a);
  if (is_pow(cod)) {
    MatrixMor m = MatrixMor::zero(cod.dim(), 1);
    const auto& v = std::get<NatVec>(a).v;
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return matrix(std::move(m));
  }
  return GenMorphism(Carrier::extnat(), cod, NatMultiple{std::move(a)});
}

GenMorphism GenMorphism::identity(const Carrier& s) {
  switch (s.kind()) {
    case CarrierKind::ExtNatPow:
      return matrix(MatrixMor::identity(s.dim()));
    case CarrierKind::PBar:
      return scale_pbar(QInf(1));
    case CarrierKind::Trunc:
      return scale_trunc(QInf(1));
    case CarrierKind::Finite: {
      std::vector<std::size_t> img(s.dim());
      for (std::size_t i = 0; i < img.size(); ++i) img[i] = i;
      return table(s, s, std::move(img));
    }
    default:
      throw UnsupportedError("no morphism family with domain " + s.name());
  }
}

GenMorphism GenMorphism::zero(const Carrier& dom, const Carrier& cod) {
  if (is_pow(dom) && is_pow(cod)) return matrix(MatrixMor::zero(cod.dim(), dom.dim()));
  if (dom.kind() == CarrierKind::PBar && cod.kind() == CarrierKind::PBar) return scale_pbar(QInf(0));
  if (dom.kind() == CarrierKind::Trunc && cod.kind() == CarrierKind::Trunc) return scale_trunc(QInf(0));
  if (dom.kind() == CarrierKind::Finite && cod.kind() == CarrierKind::Finite) {
    return table(dom, cod, std::vector<std::size_t>(dom.dim(), 0));
  }
  if (is_pow(dom) && dom.dim() == 1) return nat_multiple(cod, cod.zero());
  throw UnsupportedError("no morphism family " + dom.name() + " -> " + cod.name());
}

bool operator==(const GenMorphism& a, const GenMorphism& b) {
  return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.rep_ == b.rep_;
}

// ------------------------------------------------------------ operations

Element apply(const GenMorphism& f, const Element& a) {
  f.domain().require(a);
  return std::visit(
      [&](const auto& r) -> Element {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, MatrixMor>) {
          return matvec(r, std::get<NatVec>(a));
        } else if constexpr (std::is_same_v<T, ScalePBar>) {
          return r.t * std::get<QInf>(a);
        } else if constexpr (std::is_same_v<T, ScaleTrunc>) {
          return cut(r.t * std::get<QInf>(a));
        } else if constexpr (std::is_same_v<T, TableMor>) {
          return FiniteIdx{r.image[std::get<FiniteIdx>(a).index]};
        } else {
          return f.codomain().multiple(std::get<NatVec>(a).v[0], r.a);
        }
      },
      f.rep());
}

bool prec(const GenMorphism& f, const GenMorphism& g) {
  same_ends(f, g);
  return std::visit(
      [&](const auto& r) -> bool {
        using T = std::decay_t<decltype(r)>;
        const auto& s = std::get<T>(g.rep());
        if constexpr (std::is_same_v<T, MatrixMor>) {
          for (std::size_t i = 0; i < r.entries.size(); ++i) {
            if (r.entries[i].is_inf() || r.entries[i] > s.entries[i]) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, ScalePBar>) {
          return !r.t.is_inf() && r.t <= s.t;
        } else if constexpr (std::is_same_v<T, ScaleTrunc>) {
          return r.t <= s.t;
        } else if constexpr (std::is_same_v<T, TableMor>) {
          return pointwise_leq(f, g);
        } else {
          return f.codomain().way_below(r.a, s.a);
        }
      },
      f.rep());
}

bool pointwise_leq(const GenMorphism& f, const GenMorphism& g) {
  same_ends(f, g);
  return std::visit(
      [&](const auto& r) -> bool {
        using T = std::decay_t<decltype(r)>;
        const auto& s = std::get<T>(g.rep());
        if constexpr (std::is_same_v<T, MatrixMor>) {
          for (std::size_t i = 0; i < r.entries.size(); ++i) {
            if (r.entries[i] > s.entries[i]) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, ScalePBar> || std::is_same_v<T, ScaleTrunc>) {
          return r.t <= s.t;
        } else if constexpr (std::is_same_v<T, TableMor>) {
          const auto& tc = f.codomain().table();
          for (std::size_t i = 0; i < r.image.size(); ++i) {
            if (!tc.le(r.image[i], s.image[i])) return false;
          }
          return true;
        } else {
          return f.codomain().leq(r.a, s.a);
        }
      },
      f.rep());
}

GenMorphism pointwise_add(const GenMorphism& f, const GenMorphism& g) {
  same_ends(f, g);
  return std::visit(
      [&](const auto& r) -> GenMorphism {
        using T = std::decay_t<decltype(r)>;
        const auto& s = std::get<T>(g.rep());
        if constexpr (std::is_same_v<T, MatrixMor>) {
          return GenMorphism::matrix(matadd(r, s));
        } else if constexpr (std::is_same_v<T, ScalePBar>) {
          return GenMorphism::scale_pbar(r.t + s.t);
        } else if constexpr (std::is_same_v<T, ScaleTrunc>) {
          return GenMorphism::scale_trunc(r.t + s.t);
        } else if constexpr (std::is_same_v<T, TableMor>) {
          const auto& tc = f.codomain().table();
          std::vector<std::size_t> img(r.image.size());
          for (std::size_t i = 0; i < img.size(); ++i) img[i] = tc.sum(r.image[i], s.image[i]);
          return GenMorphism::table(f.domain(), f.codomain(), std::move(img));
        } else {
          return GenMorphism::nat_multiple(f.codomain(), f.codomain().add(r.a, s.a));
        }
      },
      f.rep());
}

GenMorphism compose(const GenMorphism& g, const GenMorphism& f) {
  if (!(f.codomain() == g.domain())) {
    throw DomainError("cannot compose " + format(g) + " after " + format(f) + ": " + f.codomain().name() +
                      " is not " + g.domain().name());
  }
  if (const auto* nm = std::get_if<NatMultiple>(&f.rep())) {
    return GenMorphism::nat_multiple(g.codomain(), cucalc::apply(g, nm->a));
  }
  if (const auto* nm = std::get_if<NatMultiple>(&g.rep())) {
    // f : extnat -> extnat is a 1 x 1 matrix [n].
    const auto& m = std::get<MatrixMor>(f.rep());
    return GenMorphism::nat_multiple(g.codomain(), g.codomain().multiple(m.entries[0], nm->a));
  }
  if (f.rep().index() != g.rep().index()) {
    throw UnsupportedError("no closed form for " + format(g) + " after " + format(f));
  }
  return std::visit(
      [&](const auto& r) -> GenMorphism {
        using T = std::decay_t<decltype(r)>;
        const auto& s = std::get<T>(g.rep());
        if constexpr (std::is_same_v<T, MatrixMor>) {
          return GenMorphism::matrix(matmul(s, r));
        } else if constexpr (std::is_same_v<T, ScalePBar>) {
          return GenMorphism::scale_pbar(s.t * r.t);
        } else if constexpr (std::is_same_v<T, ScaleTrunc>) {
          return GenMorphism::scale_trunc(s.t * r.t);
        } else if constexpr (std::is_same_v<T, TableMor>) {
          std::vector<std::size_t> img(r.image.size());
          for (std::size_t i = 0; i < img.size(); ++i) img[i] = s.image[r.image[i]];
          return GenMorphism::table(f.domain(), g.codomain(), std::move(img));
        } else {
          throw UnsupportedError("unreachable family pair");
        }
      },
      f.rep());
}

std::vector<std::vector<std::size_t>> enumerate_table_morphisms(const Carrier& dom, const Carrier& cod) {
  const auto& td = dom.table();
  const auto& tc = cod.table();
  const std::size_t n = td.size();
  const std::size_t m = tc.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> img(n, 0);
  // Checks every constraint among indices <= i.
  auto consistent = [&](std::size_t i) {
    for (std::size_t a = 0; a <= i; ++a) {
      for (std::size_t b = 0; b <= i; ++b) {
        if (a != i && b != i && td.sum(a, b) != i) continue;
        const std::size_t s = td.sum(a, b);
        if (s <= i && img[s] != tc.sum(img[a], img[b])) return false;
        if (td.le(a, b) && !tc.le(img[a], img[b])) return false;
      }
    }
    return true;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      out.push_back(img);
      return;
    }
    for (std::size_t v = 0; v < m; ++v) {
      img[i] = v;
      if (consistent(i)) rec(i + 1);
    }
  };
  if (n > 0) rec(1);
  return out;
}

std::string format_matrix(const MatrixMor& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows; ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols; ++j) s += (j ? "," : "") + m.at(i, j).str();
    s += "]";
  }
  return s + "]";
}

std::string format(const GenMorphism& f) {
  return std::visit(
      [&](const auto& r) -> std::string {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, MatrixMor>) {
          return "matrix " + format_matrix(r);
        } else if constexpr (std::is_same_v<T, ScalePBar> || std::is_same_v<T, ScaleTrunc>) {
          return "scale " + r.t.str();
        } else if constexpr (std::is_same_v<T, TableMor>) {
          const auto& td = f.domain().table();
          const auto& tc = f.codomain().table();
          std::string s = "table {";
          for (std::size_t i = 0; i < r.image.size(); ++i) {
            s += (i ? ", " : " ") + td.names[i] + " -> " + tc.names[r.image[i]];
          }
          return s + " }";
        } else {
          return "multiple " + f.codomain().format(r.a);
        }
      },
      f.rep());
}

bool prec_by_definition(const GenMorphism& f, const GenMorphism& g, const std::vector<Element>& samples) {
  same_ends(f, g);
  const Carrier& d = f.domain();
  const Carrier& c = f.codomain();
  for (const auto& a1 : samples) {
    const Element fa1 = cucalc::apply(f, a1);
    for (const auto& a : samples) {
      if (d.way_below(a1, a) && !c.way_below(fa1, cucalc::apply(g, a))) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------ validation

MorphismReport validate_gen_cu_morphism(const GenMorphism& f, std::size_t samples, std::size_t chain_terms) {
  MorphismReport rep;
  const Carrier& d = f.domain();
  const Carrier& c = f.codomain();
  const std::vector<Element> xs = d.grid(samples);
  auto fail = [&](const std::string& what) {
    rep.passed = false;
    if (rep.failures.size() < 8) rep.failures.push_back(what);
  };

  ++rep.checked;
  if (!(cucalc::apply(f, d.zero()) == c.zero())) fail("zero: f(0) = " + c.format(cucalc::apply(f, d.zero())));

  for (const auto& a : xs) {
    const Element fa = cucalc::apply(f, a);
    for (const auto& b : xs) {
      ++rep.checked;
      if (!(cucalc::apply(f, d.add(a, b)) == c.add(fa, cucalc::apply(f, b)))) {
        fail("additivity: " + d.format(a) + ", " + d.format(b));
      }
      if (d.leq(a, b) && !c.leq(fa, cucalc::apply(f, b))) fail("monotonicity: " + d.format(a) + " <= " + d.format(b));
    }
  }

  std::vector<Element> probes = c.grid(samples);
  for (const auto& a : xs) {
    std::vector<ElementChain> chains{d.refine(a)};
    if (d.kind() != CarrierKind::Finite) {
      const Element a2 = d.add(a, a);
      if (!(a2 == a)) chains.push_back({{a, a2}, LawKind::Arithmetic, std::nullopt});
    }
    for (const auto& ch : chains) {
      ++rep.checked;
      const Element sup = cucalc::apply(f, d.limit(ch));
      std::vector<Element> img;
      for (const auto& v : ch.values) img.push_back(cucalc::apply(f, v));
      for (std::size_t k = 1; k <= chain_terms; ++k) img.push_back(cucalc::apply(f, d.extend(ch, k)));
      bool ok = true;
      for (const auto& t : img) ok = ok && c.leq(t, sup);
      for (const auto& w : probes) {
        if (!ok) break;
        if (!c.way_below(w, sup)) continue;
        ok = std::any_of(img.begin(), img.end(), [&](const Element& t) { return c.leq(w, t); });
      }
      if (!ok) fail("sup preservation along a chain with supremum " + d.format(d.limit(ch)));
    }
  }
  return rep;
}

FamilyDescription classify_endomorphisms(const Carrier& dom) { return classify_endomorphisms(dom, dom); }

FamilyDescription classify_endomorphisms(const Carrier& dom, const Carrier& cod) {
  if (is_pow(dom) && is_pow(cod)) {
    const std::string l = std::to_string(cod.dim());
    const std::string k = std::to_string(dom.dim());
    return {"M_{" + l + "," + k + "}(extnat)", l + " x " + k + " matrices over extnat",
            "x < y iff every entry of x is finite and x <= y entrywise"};
  }
  if (dom.kind() == CarrierKind::Trunc && cod.kind() == CarrierKind::Trunc) {
    return {"scalings of trunc", "t in {0} u [1,inf]", "t < s iff t <= s"};
  }
  if (dom.kind() == CarrierKind::PBar && cod.kind() == CarrierKind::PBar) {
    return {"scalings of pbar", "t in [0,inf]", "t < s iff t is finite and t <= s"};
  }
  throw UnsupportedError("no classification of generalized Cu-morphisms " + dom.name() + " -> " + cod.name());
}

}  // namespace cucalc
