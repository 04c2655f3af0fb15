#include "cucalc/bivariant.hpp"

#include <map>
#include <mutex>

#include "cucalc/error.hpp"

namespace cucalc {

namespace {

bool is_pow(const Carrier& s) { return s.kind() == CarrierKind::ExtNatPow; }
bool is_nat(const Carrier& s) { return is_pow(s) && s.dim() == 1; }
bool two_kind(const Carrier& s) {
  const auto k = s.kind();
  return k == CarrierKind::MOne || k == CarrierKind::TruncHom || k == CarrierKind::Z;
}

const TwoKind& tk(const Element& e) { return std::get<TwoKind>(e); }
const QInf& qv(const Element& e) { return std::get<QInf>(e); }
const ExtNat& n1(const Element& e) {
  const auto& v = std::get<NatVec>(e).v;
  if (v.size() != 1) throw DomainError("expected an element of extnat");
  return v[0];
}

// Value of an element where a scalar is needed: pbar/trunc values and the
// value of a two-kind point.
QInf scalar_of(const Carrier& c, const Element& e) {
  if (two_kind(c)) return tk(e).value;
  return qv(e);
}

std::string mat_name(std::size_t l, std::size_t k) {
  return "M_{" + std::to_string(l) + "," + std::to_string(k) + "}(extnat)";
}

IHomSpacePtr build_space(const Carrier& s, const Carrier& t) {
  auto sp = std::make_shared<IHomSpace>(IHomSpace{s, t, IHomKind::Matrix, Carrier::extnat(1), "", {}, true});
  if (is_pow(s) && is_pow(t)) {
    sp->kind = IHomKind::Matrix;
    sp->carrier = Carrier::extnat(s.dim() * t.dim());
    sp->name = mat_name(t.dim(), s.dim());
  } else if (s.kind() == CarrierKind::PBar && t.kind() == CarrierKind::PBar) {
    sp->kind = IHomKind::MOne;
    sp->carrier = Carrier::m1();
    sp->name = "M1";
  } else if (s.kind() == CarrierKind::Trunc && t.kind() == CarrierKind::Trunc) {
    sp->kind = IHomKind::TruncHom;
    sp->carrier = Carrier::trunc_hom();
    sp->name = "{0} u [1,inf] u (1,inf]'";
  } else if (s.kind() == CarrierKind::Finite && t.kind() == CarrierKind::Finite) {
    sp->kind = IHomKind::Table;
    sp->tables = enumerate_table_morphisms(s, t);
    const std::size_t n = sp->tables.size();
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[sp->tables[i]] = i;
    const auto& ct = t.table();
    FiniteTable ft;
    ft.add.resize(n * n);
    ft.leq.resize(n * n);
    for (const auto& img : sp->tables) {
      std::string nm = "(";
      for (std::size_t j = 0; j < img.size(); ++j) nm += (j ? "," : "") + ct.names[img[j]];
      ft.names.push_back(nm + ")");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> sum(s.table().size());
        bool le = true;
        for (std::size_t a = 0; a < sum.size(); ++a) {
          sum[a] = ct.sum(sp->tables[i][a], sp->tables[j][a]);
          le = le && ct.le(sp->tables[i][a], sp->tables[j][a]);
        }
        ft.add[i * n + j] = index.at(sum);
        ft.leq[i * n + j] = le ? 1 : 0;
      }
    }
    sp->carrier = Carrier::finite(std::move(ft));
    sp->name = "Cu[" + s.name() + "," + t.name() + "] (" + std::to_string(n) + " morphisms)";
  } else if (is_nat(s)) {
    sp->kind = IHomKind::NatClass;
    sp->carrier = t;
    sp->name = t.name();
  } else if (s.kind() == CarrierKind::MOne && t.kind() == CarrierKind::MOne) {
    sp->kind = IHomKind::Regular;
    sp->carrier = Carrier::m1();
    sp->name = "M1";
  } else {
    throw UnsupportedError("no closed form for [[" + s.name() + "," + t.name() + "]]");
  }
  return sp;
}

IHomSpacePtr cached(const Carrier& s, const Carrier& t, bool regular) {
  static std::mutex mu;
  static std::vector<std::pair<bool, IHomSpacePtr>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& [r, sp] : cache) {
      if (r == regular && sp->dom == s && sp->cod == t) return sp;
    }
  }
  IHomSpacePtr sp;
  if (regular) {
    auto p = std::make_shared<IHomSpace>(IHomSpace{s, t, IHomKind::Regular, s, s.name(), {}, true});
    if (s.kind() == CarrierKind::TruncHom) {
      p->name = "image of trunchom in [[trunchom,trunchom]]";
      p->complete = false;
    }
    sp = p;
  } else {
    sp = build_space(s, t);
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace_back(regular, sp);
  return sp;
}

void same_space(const IHomElem& x, const IHomElem& y) {
  if (x.space_ptr() != y.space_ptr() &&
      !(x.domain() == y.domain() && x.codomain() == y.codomain() && x.kind() == y.kind())) {
    throw DomainError("elements of different bivariant semigroups: " + x.space().name + " and " + y.space().name);
  }
}

std::size_t table_index(const IHomSpace& sp, const std::vector<std::size_t>& img) {
  for (std::size_t i = 0; i < sp.tables.size(); ++i) {
    if (sp.tables[i] == img) return i;
  }
  throw DomainError("table is not a generalized Cu-morphism");
}

Element basis(std::size_t k, std::size_t j) {
  std::vector<ExtNat> v(k, ExtNat(0));
  v[j] = ExtNat(1);
  return natvec(std::move(v));
}

// A simple tensor a (x) b equal to c, where the closed form allows it: any
// c when a factor carrier is extnat or a scalar carrier, basis vectors for
// powers of extnat.
std::pair<Element, Element> split(const TensorHandle& h, const Element& c) {
  const Carrier& s = h.left;
  const Carrier& t = h.right;
  if (is_pow(s) && is_pow(t)) {
    const auto& v = std::get<NatVec>(c).v;
    std::size_t hits = 0;
    std::size_t at = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      if (!(v[i] == ExtNat(1))) throw UnsupportedError("not a simple tensor: " + h.product.format(c));
      ++hits;
      at = i;
    }
    if (hits == 0) return {s.zero(), t.zero()};
    if (hits > 1) throw UnsupportedError("not a simple tensor: " + h.product.format(c));
    return {basis(s.dim(), at / t.dim()), basis(t.dim(), at % t.dim())};
  }
  if (is_nat(s)) return {nat(1), c};
  if (is_nat(t)) return {c, nat(1)};
  if (s.kind() == CarrierKind::PBar && t.kind() == CarrierKind::PBar) return {q(1), c};
  if (s.kind() == CarrierKind::MOne) return {compact(QInf(1)), c};
  if (t.kind() == CarrierKind::MOne) return {c, compact(QInf(1))};
  throw UnsupportedError("no simple tensor decomposition in " + h.name);
}

using Fn = std::function<Element(const Element&)>;

GenMorphism fit_impl(const Carrier& t, const Carrier& p, const Fn& fn, bool verify) {
  const Ambient amb = Ambient::morphisms(t, p);
  std::optional<GenMorphism> f;
  switch (amb.family()) {
    case Ambient::Family::Matrix: {
      MatrixMor m = MatrixMor::zero(p.dim(), t.dim());
      for (std::size_t j = 0; j < t.dim(); ++j) {
        const Element col = fn(basis(t.dim(), j));
        p.require(col);
        for (std::size_t i = 0; i < p.dim(); ++i) m.at(i, j) = std::get<NatVec>(col).v[i];
      }
      f = GenMorphism::matrix(std::move(m));
      break;
    }
    case Ambient::Family::ScalePBar: {
      const Element v = fn(q(1));
      p.require(v);
      f = GenMorphism::scale_pbar(qv(v));
      break;
    }
    case Ambient::Family::ScaleTrunc: {
      QInf scale = QInf::infinity();
      QInf b(1);
      for (int k = 0; k <= 64; ++k) {
        const Element v = fn(Element(b));
        p.require(v);
        if (!qv(v).is_inf()) {
          scale = qv(v) / b;
          break;
        }
        b = b / QInf(2);
      }
      f = GenMorphism::scale_trunc(scale);
      break;
    }
    case Ambient::Family::Table: {
      std::vector<std::size_t> img;
      for (std::size_t i = 0; i < t.table().size(); ++i) {
        const Element v = fn(FiniteIdx{i});
        p.require(v);
        img.push_back(std::get<FiniteIdx>(v).index);
      }
      f = GenMorphism::table(t, p, std::move(img));
      break;
    }
    case Ambient::Family::NatMultiple: {
      const Element v = fn(nat(1));
      p.require(v);
      f = GenMorphism::nat_multiple(p, v);
      break;
    }
    case Ambient::Family::Carrier:
      break;
  }
  if (verify) {
    for (const auto& b : t.grid(64)) {
      const Element want = fn(b);
      if (!(cucalc::apply(*f, b) == want)) {
        throw DomainError("map is not the generalized Cu-morphism " + format(*f) + ": it differs at " + t.format(b));
      }
    }
  }
  return *f;
}

Point pick_point(const Chain& c, std::size_t i) {
  if (i < c.values.size()) return c.values[i];
  return chain_term(c, i - c.values.size() + 1);
}

// Termwise combination of two aligned chains of morphisms.
PathClass combine(const PathClass& x, const PathClass& y, const Ambient& amb,
                  const std::function<GenMorphism(const GenMorphism&, const GenMorphism&)>& op) {
  const Chain& cx = x.chain();
  const Chain& cy = y.chain();
  const std::size_t n = std::max(cx.values.size(), cy.values.size()) + 2;
  std::vector<Point> vals;
  for (std::size_t i = 0; i < n; ++i) {
    vals.emplace_back(op(std::get<GenMorphism>(pick_point(cx, i)), std::get<GenMorphism>(pick_point(cy, i))));
  }
  if (attained(cx) && attained(cy)) return make_path(amb, std::move(vals));
  const GenMorphism lim = op(std::get<GenMorphism>(chain_limit(cx)), std::get<GenMorphism>(chain_limit(cy)));
  if (std::get<GenMorphism>(vals.back()) == lim) return make_path(amb, std::move(vals));
  return make_path(amb, std::move(vals), LawKind::Explicit, Point(lim));
}

// Class of the chain (b -> g(a_l, b))_l in [[T,P]] along a refinement a_l
// of a.
IHomElem class_along(const Carrier& s, const Element& a, const Carrier& t, const Carrier& p, const Bimap& g) {
  s.require(a);
  const ElementChain r = s.refine(a);
  const Ambient amb = Ambient::morphisms(t, p);
  auto at = [&](const Element& al) { return fit_morphism(t, p, [&](const Element& b) { return g(al, b); }); };
  std::vector<Point> vals;
  for (const auto& al : r.values) vals.emplace_back(at(al));
  const bool fixed = r.law == LawKind::Stabilize || s.extend(r, 1) == r.values.back();
  if (fixed) return ihom_from_path(make_path(amb, std::move(vals)));
  const GenMorphism lim = at(a);
  if (std::get<GenMorphism>(vals.back()) == lim) return ihom_from_path(make_path(amb, std::move(vals)));
  return ihom_from_path(make_path(amb, std::move(vals), LawKind::Explicit, Point(lim)));
}

}  // namespace

const char* ihom_kind_name(IHomKind k) {
  switch (k) {
    case IHomKind::Matrix:
      return "matrix";
    case IHomKind::MOne:
      return "m1";
    case IHomKind::TruncHom:
      return "trunchom";
    case IHomKind::Table:
      return "table";
    case IHomKind::NatClass:
      return "nat-class";
    case IHomKind::Regular:
      return "regular";
  }
  return "?";
}

IHomSpacePtr ihom_space(const Carrier& s, const Carrier& t) { return cached(s, t, false); }

IHomSpacePtr regular_space(const Carrier& r) {
  if (r.kind() == CarrierKind::MOne) return ihom_space(r, r);
  if (r.kind() == CarrierKind::TruncHom) return cached(r, r, true);
  throw UnsupportedError("no regular representation for " + r.name());
}

IHomDescription ihom_describe(const Carrier& s, const Carrier& t) {
  const IHomSpacePtr sp = ihom_space(s, t);
  IHomDescription d{sp->name, sp->carrier, "", "", "", ""};
  switch (sp->kind) {
    case IHomKind::Matrix:
      d.order = "entrywise";
      d.addition = "entrywise";
      d.way_below = "x << y iff x is finite and x <= y entrywise";
      d.provenance = "closed form: matrices over extnat acting by multiplication";
      break;
    case IHomKind::MOne:
      d.order = "values ordered; soft s <= compact s; compact s <= soft t iff s < t";
      d.addition = "values add; the sum is compact iff both summands are";
      d.way_below = "x << y iff val x < val y, or y compact and x <= y";
      d.provenance = "closed form: classes of scaling chains of pbar";
      break;
    case IHomKind::TruncHom:
      d.order = "values ordered; soft s <= compact s; compact s <= soft t iff s < t";
      d.addition = "values add; compact sums stay compact; compact inf absorbs";
      d.way_below = "x << y iff val x < val y, or y compact and x <= y";
      d.provenance = "closed form: classes of scaling chains of trunc";
      break;
    case IHomKind::Table:
      d.order = "pointwise";
      d.addition = "pointwise";
      d.way_below = "equals the order (finite carrier)";
      d.provenance = "finite collapse: [[S,T]] = Cu[S,T] with pointwise order";
      break;
    case IHomKind::NatClass:
      d.order = "as in " + t.name();
      d.addition = "as in " + t.name();
      d.way_below = "as in " + t.name();
      d.provenance = "closed form: x -> x(1) identifies [[extnat,S]] with S";
      break;
    case IHomKind::Regular:
      d.order = "as in M1";
      d.addition = "as in M1";
      d.way_below = "x << y iff val x < val y, or y compact and x <= y";
      d.provenance = "taken as given: [[M1,M1]] = M1 through the regular representation";
      break;
  }
  return d;
}

IHomElem::IHomElem(IHomSpacePtr space, Element e) : space_(std::move(space)), e_(std::move(e)) {
  space_->carrier.require(e_);
}

MatrixMor IHomElem::matrix() const {
  if (kind() != IHomKind::Matrix) throw DomainError("not a matrix class");
  MatrixMor m;
  m.rows = codomain().dim();
  m.cols = domain().dim();
  m.entries = std::get<NatVec>(e_).v;
  return m;
}

TwoKind IHomElem::point() const {
  if (kind() != IHomKind::MOne && kind() != IHomKind::TruncHom && kind() != IHomKind::Regular) {
    throw DomainError("not a two-kind class");
  }
  return tk(e_);
}

GenMorphism IHomElem::table() const {
  if (kind() != IHomKind::Table) throw DomainError("not a table class");
  return GenMorphism::table(domain(), codomain(), space_->tables.at(std::get<FiniteIdx>(e_).index), false);
}

const Element& IHomElem::represented() const {
  if (kind() != IHomKind::NatClass && kind() != IHomKind::Regular) throw DomainError("not a represented class");
  return e_;
}

bool operator==(const IHomElem& a, const IHomElem& b) {
  return a.domain() == b.domain() && a.codomain() == b.codomain() && a.kind() == b.kind() && a.e_ == b.e_;
}

IHomElem ihom_zero(const Carrier& s, const Carrier& t) {
  auto sp = ihom_space(s, t);
  return IHomElem(sp, sp->carrier.zero());
}

IHomElem ihom_identity(const Carrier& s) {
  auto sp = ihom_space(s, s);
  switch (sp->kind) {
    case IHomKind::Matrix:
      return IHomElem(sp, natvec(MatrixMor::identity(s.dim()).entries));
    case IHomKind::MOne:
    case IHomKind::TruncHom:
    case IHomKind::Regular:
      return IHomElem(sp, compact(QInf(1)));
    case IHomKind::Table: {
      std::vector<std::size_t> id(s.table().size());
      for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
      return IHomElem(sp, FiniteIdx{table_index(*sp, id)});
    }
    case IHomKind::NatClass:
      break;
  }
  throw UnsupportedError("no identity class on " + s.name());
}

IHomElem ihom_matrix(MatrixMor m) {
  const std::size_t cols = m.cols;
  const std::size_t rows = m.rows;
  if (m.entries.size() != rows * cols || rows == 0 || cols == 0) throw DomainError("malformed matrix");
  return IHomElem(ihom_space(Carrier::extnat(cols), Carrier::extnat(rows)), natvec(std::move(m.entries)));
}

IHomElem ihom_m1(TwoKind x) { return IHomElem(ihom_space(Carrier::pbar(), Carrier::pbar()), x); }

IHomElem ihom_trunc(TwoKind x) { return IHomElem(ihom_space(Carrier::trunc(), Carrier::trunc()), x); }

bool leq(const IHomElem& x, const IHomElem& y) {
  same_space(x, y);
  return x.space().carrier.leq(x.element(), y.element());
}

bool way_below(const IHomElem& x, const IHomElem& y) {
  same_space(x, y);
  return x.space().carrier.way_below(x.element(), y.element());
}

IHomElem add(const IHomElem& x, const IHomElem& y) {
  same_space(x, y);
  return IHomElem(x.space_ptr(), x.space().carrier.add(x.element(), y.element()));
}

IHomElem multiple(const ExtNat& n, const IHomElem& x) {
  return IHomElem(x.space_ptr(), x.space().carrier.multiple(n, x.element()));
}

std::string format(const IHomElem& x) {
  switch (x.kind()) {
    case IHomKind::Matrix:
      return format_matrix(x.matrix());
    case IHomKind::Table:
      return format(x.table());
    case IHomKind::NatClass:
      return "class of n -> n " + x.space().carrier.format(x.element());
    case IHomKind::Regular:
      return "regular " + x.space().carrier.format(x.element());
    default:
      return x.space().carrier.format(x.element());
  }
}

IHomElem ihom_of(const GenMorphism& f) {
  auto sp = ihom_space(f.domain(), f.codomain());
  switch (sp->kind) {
    case IHomKind::Matrix:
      return IHomElem(sp, natvec(std::get<MatrixMor>(f.rep()).entries));
    case IHomKind::MOne: {
      const QInf& t = std::get<ScalePBar>(f.rep()).t;
      return IHomElem(sp, t.is_inf() ? soft(t) : compact(t));
    }
    case IHomKind::TruncHom:
      return IHomElem(sp, compact(std::get<ScaleTrunc>(f.rep()).t));
    case IHomKind::Table:
      return IHomElem(sp, FiniteIdx{table_index(*sp, std::get<TableMor>(f.rep()).image)});
    case IHomKind::NatClass:
      return IHomElem(sp, std::get<NatMultiple>(f.rep()).a);
    case IHomKind::Regular:
      break;
  }
  throw UnsupportedError("no morphism family for " + sp->name);
}

GenMorphism morphism_of(const IHomSpace& sp, const Element& e) {
  sp.carrier.require(e);
  switch (sp.kind) {
    case IHomKind::Matrix: {
      MatrixMor m;
      m.rows = sp.cod.dim();
      m.cols = sp.dom.dim();
      m.entries = std::get<NatVec>(e).v;
      return GenMorphism::matrix(std::move(m));
    }
    case IHomKind::MOne:
      return GenMorphism::scale_pbar(tk(e).value);
    case IHomKind::TruncHom:
      return GenMorphism::scale_trunc(tk(e).value);
    case IHomKind::Table:
      return GenMorphism::table(sp.dom, sp.cod, sp.tables.at(std::get<FiniteIdx>(e).index), false);
    case IHomKind::NatClass:
      return GenMorphism::nat_multiple(sp.cod, e);
    case IHomKind::Regular:
      break;
  }
  throw UnsupportedError("no morphism family for " + sp.name);
}

IHomElem ihom_from_path(const PathClass& p) {
  const Ambient& amb = p.ambient();
  if (amb.is_carrier()) throw DomainError("a path in a carrier is not a bivariant class");
  auto sp = ihom_space(amb.domain(), amb.codomain());
  const NormalForm nf = normal_form(p);
  const auto& end = std::get<GenMorphism>(nf.endpoint);
  if (sp->kind == IHomKind::MOne || sp->kind == IHomKind::TruncHom) {
    const QInf t = sp->kind == IHomKind::MOne ? std::get<ScalePBar>(end.rep()).t : std::get<ScaleTrunc>(end.rep()).t;
    if (t.is_zero()) return IHomElem(sp, compact(t));
    return IHomElem(sp, nf.compact ? compact(t) : soft(t));
  }
  return ihom_of(end);
}

PathClass ihom_to_path(const IHomElem& x) {
  if (x.kind() == IHomKind::Regular) throw UnsupportedError("no chain representative for the regular kind");
  const IHomSpace& sp = x.space();
  const ElementChain r = sp.carrier.refine(x.element());
  std::vector<Point> vals;
  for (const auto& v : r.values) vals.emplace_back(morphism_of(sp, v));
  std::optional<Point> lim;
  if (r.limit) lim = morphism_of(sp, *r.limit);
  return make_path(Ambient::morphisms(sp.dom, sp.cod), std::move(vals), r.law, lim);
}

GenMorphism endpoint(const IHomElem& x) {
  if (x.kind() == IHomKind::Regular) throw UnsupportedError("no endpoint morphism for the regular kind");
  return morphism_of(x.space(), x.element());
}

Element evaluate(const IHomElem& x, const Element& a) {
  x.domain().require(a);
  if (x.kind() == IHomKind::Regular) return point_product(x.space().carrier, x.element(), a);
  return cucalc::apply(endpoint(x), a);
}

IHomElem compose(const IHomElem& y, const IHomElem& x) {
  if (!(x.codomain() == y.domain())) {
    throw DomainError("cannot compose: codomain " + x.codomain().name() + " differs from domain " + y.domain().name());
  }
  if (x.kind() == IHomKind::NatClass) return i_iso(y.codomain(), evaluate(y, x.element()));
  if (x.kind() == IHomKind::Matrix && y.kind() == IHomKind::Matrix) {
    return ihom_matrix(matmul(y.matrix(), x.matrix()));
  }
  if (y.kind() == IHomKind::NatClass && x.kind() == IHomKind::Matrix && is_nat(x.domain())) {
    return multiple(n1(x.element()), y);
  }
  if ((x.kind() == IHomKind::MOne || x.kind() == IHomKind::TruncHom || x.kind() == IHomKind::Regular) &&
      x.kind() == y.kind()) {
    return IHomElem(x.space_ptr(), point_product(x.space().carrier, y.element(), x.element()));
  }
  if (x.kind() == IHomKind::Table && y.kind() == IHomKind::Table) return ihom_of(compose(y.table(), x.table()));
  return compose_via_paths(y, x);
}

TensorHandle tensor_handle(const Carrier& s, const Carrier& t) {
  if (is_pow(s) && is_pow(t)) {
    return {s, t, Carrier::extnat(s.dim() * t.dim()), s.name() + " (x) " + t.name() + " = extnat^" +
                                                           std::to_string(s.dim() * t.dim()),
            "closed form: a (x) b -> (a_i b_j) indexed by i l + j"};
  }
  if (is_nat(s)) return {s, t, t, "extnat (x) " + t.name() + " = " + t.name(), "closed form: n (x) b -> n b"};
  if (is_nat(t)) return {s, t, s, s.name() + " (x) extnat = " + s.name(), "closed form: a (x) n -> n a"};
  if (s.kind() == CarrierKind::PBar && t.kind() == CarrierKind::PBar) {
    return {s, t, s, "pbar (x) pbar = pbar", "closed form: solid semiring, a (x) b -> a b"};
  }
  if (s.kind() == CarrierKind::MOne && t.kind() == CarrierKind::PBar) {
    return {s, t, t, "m1 (x) pbar = pbar", "closed form: x (x) b -> val(x) b"};
  }
  if (s.kind() == CarrierKind::PBar && t.kind() == CarrierKind::MOne) {
    return {s, t, s, "pbar (x) m1 = pbar", "closed form: a (x) x -> a val(x)"};
  }
  throw UnsupportedError("no closed-form tensor product " + s.name() + " (x) " + t.name());
}

Element tensor_elem(const TensorHandle& h, const Element& a, const Element& b) {
  h.left.require(a);
  h.right.require(b);
  if (is_pow(h.left) && is_pow(h.right)) {
    const auto& va = std::get<NatVec>(a).v;
    const auto& vb = std::get<NatVec>(b).v;
    std::vector<ExtNat> out;
    out.reserve(va.size() * vb.size());
    for (const auto& x : va) {
      for (const auto& y : vb) out.push_back(x * y);
    }
    return natvec(std::move(out));
  }
  if (is_nat(h.left)) return h.right.multiple(n1(a), b);
  if (is_nat(h.right)) return h.left.multiple(n1(b), a);
  return Element(scalar_of(h.left, a) * scalar_of(h.right, b));
}

GenMorphism induced_morphism(const TensorHandle& h, const Carrier& p, const Bimap& beta) {
  return fit_impl(
      h.product, p,
      [&](const Element& c) {
        const auto [a, b] = split(h, c);
        return beta(a, b);
      },
      false);
}

GenMorphism tensor_morphism(const GenMorphism& f1, const GenMorphism& f2) {
  const TensorHandle hs = tensor_handle(f1.domain(), f2.domain());
  const TensorHandle ht = tensor_handle(f1.codomain(), f2.codomain());
  return fit_impl(
      hs.product, ht.product,
      [&](const Element& c) {
        const auto [a, b] = split(hs, c);
        return tensor_elem(ht, cucalc::apply(f1, a), cucalc::apply(f2, b));
      },
      false);
}

IHomElem ext_tensor(const IHomElem& x1, const IHomElem& x2) {
  // Both handles must exist even where the closed form does not use them.
  tensor_handle(x1.domain(), x2.domain());
  tensor_handle(x1.codomain(), x2.codomain());
  if (x1.kind() == IHomKind::Matrix && x2.kind() == IHomKind::Matrix) {
    return ihom_matrix(kron(x1.matrix(), x2.matrix()));
  }
  if (x1.kind() == IHomKind::Matrix && is_nat(x1.domain()) && is_nat(x1.codomain())) {
    return multiple(n1(x1.element()), x2);
  }
  if (x2.kind() == IHomKind::Matrix && is_nat(x2.domain()) && is_nat(x2.codomain())) {
    return multiple(n1(x2.element()), x1);
  }
  if (x1.kind() == IHomKind::MOne && x2.kind() == IHomKind::MOne) {
    return IHomElem(x1.space_ptr(), point_product(Carrier::m1(), x1.element(), x2.element()));
  }
  return ext_tensor_via_paths(x1, x2);
}

PathClass compose_paths(const PathClass& y, const PathClass& x) {
  const Ambient& ay = y.ambient();
  const Ambient& ax = x.ambient();
  if (!(ax.codomain() == ay.domain())) throw DomainError("cannot compose chains: carriers differ");
  return combine(y, x, Ambient::morphisms(ax.domain(), ay.codomain()),
                 [](const GenMorphism& g, const GenMorphism& f) { return compose(g, f); });
}

PathClass tensor_paths(const PathClass& x1, const PathClass& x2) {
  const TensorHandle hs = tensor_handle(x1.ambient().domain(), x2.ambient().domain());
  const TensorHandle ht = tensor_handle(x1.ambient().codomain(), x2.ambient().codomain());
  return combine(x1, x2, Ambient::morphisms(hs.product, ht.product),
                 [](const GenMorphism& f, const GenMorphism& g) { return tensor_morphism(f, g); });
}

IHomElem compose_via_paths(const IHomElem& y, const IHomElem& x) {
  return ihom_from_path(compose_paths(ihom_to_path(y), ihom_to_path(x)));
}

IHomElem ext_tensor_via_paths(const IHomElem& x1, const IHomElem& x2) {
  return ihom_from_path(tensor_paths(ihom_to_path(x1), ihom_to_path(x2)));
}

GenMorphism fit_morphism(const Carrier& t, const Carrier& p, const std::function<Element(const Element&)>& fn) {
  return fit_impl(t, p, fn, true);
}

IHomElem unit_map(const Carrier& s, const Element& a, const Carrier& t) {
  const TensorHandle h = tensor_handle(s, t);
  if (is_nat(s)) return multiple(n1(a), ihom_identity(t));
  return class_along(s, a, t, h.product, [&](const Element& al, const Element& b) { return tensor_elem(h, al, b); });
}

IHomElem unit_map_right(const Carrier& s, const Element& a, const Carrier& t) {
  const TensorHandle h = tensor_handle(t, s);
  if (is_nat(s)) return multiple(n1(a), ihom_identity(t));
  return class_along(s, a, t, h.product, [&](const Element& al, const Element& b) { return tensor_elem(h, b, al); });
}

IHomElem i_iso(const Carrier& s, const Element& a) {
  s.require(a);
  auto sp = ihom_space(Carrier::extnat(1), s);
  return IHomElem(sp, a);
}

Element i_iso_inv(const IHomElem& x) {
  if (!is_nat(x.domain())) throw DomainError("i_iso_inv needs a class on extnat");
  return evaluate(x, nat(1));
}

IHomElem general_unit_left(const Carrier& s, const Element& a, const IHomElem& x) {
  return compose(unit_map(s, a, x.codomain()), x);
}

IHomElem general_unit_right(const Carrier& s, const Element& a, const IHomElem& x) {
  return compose(unit_map_right(s, a, x.codomain()), x);
}

IHomElem boxtimes_over(const Carrier& p, const Carrier& s1, const Carrier& t2, const IHomElem& x,
                       const IHomElem& y) {
  if (!(x.domain() == tensor_handle(s1, p).product)) {
    throw DomainError("x must act on " + s1.name() + " (x) " + p.name());
  }
  if (!(y.codomain() == tensor_handle(p, t2).product)) {
    throw DomainError("y must land in " + p.name() + " (x) " + t2.name());
  }
  const IHomElem inner = ext_tensor(ihom_identity(s1), y);
  const IHomElem outer = ext_tensor(x, ihom_identity(t2));
  return compose(outer, inner);
}

Bimap adjunction_to_tensor(HomValued f) {
  return [f = std::move(f)](const Element& a, const Element& b) { return evaluate(f(a), b); };
}

HomValued adjunction_to_hom(const Carrier& s, const Carrier& t, const Carrier& p, Bimap g) {
  return [s, t, p, g = std::move(g)](const Element& a) { return class_along(s, a, t, p, g); };
}

IHomElem ihom_from_element(const Carrier& s, const Carrier& t, const Element& e) {
  return IHomElem(ihom_space(s, t), e);
}

Element point_product(const Carrier& c, const Element& x, const Element& y) {
  if (!two_kind(c)) throw DomainError("point_product needs a two-kind carrier, got " + c.name());
  c.require(x);
  c.require(y);
  const TwoKind& a = tk(x);
  const TwoKind& b = tk(y);
  if (a.value.is_zero() || b.value.is_zero()) return c.zero();
  const QInf v = a.value * b.value;
  bool comp = a.kind == Kind::Compact && b.kind == Kind::Compact;
  if (c.kind() == CarrierKind::TruncHom) {
    const bool absorb_a = a.kind == Kind::Compact && a.value.is_inf();
    const bool absorb_b = b.kind == Kind::Compact && b.value.is_inf();
    comp = comp || absorb_a || absorb_b;
  }
  Element r = TwoKind{comp ? Kind::Compact : Kind::Soft, v};
  c.require(r);
  return r;
}

}  // namespace cucalc
