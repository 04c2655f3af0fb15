#include "cucalc/path_tau.hpp"

#include <algorithm>
#include <functional>

#include "cucalc/error.hpp"
#include "sequence.hpp"

namespace cucalc {

// ------------------------------------------------------------ ambient

Ambient Ambient::carrier(Carrier s) {
  Carrier c = s;
  return Ambient(Family::Carrier, std::move(s), std::move(c));
}

Ambient Ambient::morphisms(Carrier dom, Carrier cod) {
  const auto dk = dom.kind();
  const auto ck = cod.kind();
  Family f;
  if (dk == CarrierKind::ExtNatPow && ck == CarrierKind::ExtNatPow) {
    f = Family::Matrix;
  } else if (dk == CarrierKind::PBar && ck == CarrierKind::PBar) {
    f = Family::ScalePBar;
  } else if (dk == CarrierKind::Trunc && ck == CarrierKind::Trunc) {
    f = Family::ScaleTrunc;
  } else if (dk == CarrierKind::Finite && ck == CarrierKind::Finite) {
    f = Family::Table;
  } else if (dk == CarrierKind::ExtNatPow && dom.dim() == 1) {
    f = Family::NatMultiple;
  } else {
    throw UnsupportedError("no morphism family " + dom.name() + " -> " + cod.name());
  }
  return Ambient(f, std::move(dom), std::move(cod));
}

std::string Ambient::name() const {
  if (is_carrier()) return dom_.name();
  return "Cu[" + dom_.name() + "," + cod_.name() + "]";
}

bool Ambient::contains(const Point& p) const {
  if (is_carrier()) {
    const auto* e = std::get_if<Element>(&p);
    return e && dom_.contains(*e);
  }
  const auto* m = std::get_if<GenMorphism>(&p);
  return m && m->domain() == dom_ && m->codomain() == cod_;
}

void Ambient::require(const Point& p) const {
  if (!contains(p)) throw DomainError(format(p) + " does not belong to " + name());
}

bool Ambient::prec(const Point& a, const Point& b) const {
  require(a);
  require(b);
  if (is_carrier()) return dom_.way_below(std::get<Element>(a), std::get<Element>(b));
  return cucalc::prec(std::get<GenMorphism>(a), std::get<GenMorphism>(b));
}

bool Ambient::leq(const Point& a, const Point& b) const {
  require(a);
  require(b);
  if (is_carrier()) return dom_.leq(std::get<Element>(a), std::get<Element>(b));
  return pointwise_leq(std::get<GenMorphism>(a), std::get<GenMorphism>(b));
}

Point Ambient::zero() const {
  if (is_carrier()) return dom_.zero();
  return GenMorphism::zero(dom_, cod_);
}

std::string Ambient::format(const Point& p) const {
  if (const auto* e = std::get_if<Element>(&p)) {
    return dom_.contains(*e) ? dom_.format(*e) : std::string("<element>");
  }
  return cucalc::format(std::get<GenMorphism>(p));
}

bool Ambient::cu_like() const { return family_ != Family::ScalePBar && family_ != Family::ScaleTrunc; }

bool operator==(const Ambient& a, const Ambient& b) {
  return a.family_ == b.family_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
}

// ------------------------------------------------------------ chains

namespace {

const QInf& scale_of(const Point& p) {
  const auto& rep = std::get<GenMorphism>(p).rep();
  if (const auto* s = std::get_if<ScalePBar>(&rep)) return s->t;
  return std::get<ScaleTrunc>(rep).t;
}

const MatrixMor& matrix_of(const Point& p) { return std::get<MatrixMor>(std::get<GenMorphism>(p).rep()); }

const Element& multiple_of(const Point& p) { return std::get<NatMultiple>(std::get<GenMorphism>(p).rep()).a; }

ElementChain element_chain(const Chain& c, const std::function<const Element&(const Point&)>& get) {
  ElementChain out;
  for (const auto& v : c.values) out.values.push_back(get(v));
  out.law = *c.law;
  if (c.limit) out.limit = get(*c.limit);
  return out;
}

const Element& as_element(const Point& p) { return std::get<Element>(p); }

std::vector<QInf> scale_hist(const Chain& c) {
  std::vector<QInf> h;
  for (const auto& v : c.values) h.push_back(scale_of(v));
  return h;
}

std::optional<QInf> scale_limit(const Chain& c) {
  if (!c.limit) return std::nullopt;
  return scale_of(*c.limit);
}

GenMorphism make_scale(const Ambient& a, QInf t) {
  return a.family() == Ambient::Family::ScalePBar ? GenMorphism::scale_pbar(std::move(t))
                                                  : GenMorphism::scale_trunc(std::move(t));
}

// Coordinate-wise term (k >= 1) or limit (k == 0) of a matrix chain.
GenMorphism matrix_step(const Chain& c, std::size_t k) {
  const MatrixMor& last = matrix_of(c.values.back());
  MatrixMor out = last;
  for (std::size_t i = 0; i < last.entries.size(); ++i) {
    std::vector<ExtNat> hist;
    for (const auto& v : c.values) hist.push_back(matrix_of(v).entries[i]);
    std::optional<ExtNat> lim;
    if (c.limit) lim = matrix_of(*c.limit).entries[i];
    out.entries[i] = k == 0 ? detail::n_limit(hist, *c.law, lim) : detail::n_term(hist, *c.law, lim, k);
  }
  return GenMorphism::matrix(std::move(out));
}

bool table_stable(const Chain& c) {
  return *c.law == LawKind::Stabilize || (c.limit && *c.limit == c.values.back());
}

void need_law(const Chain& c) {
  if (!c.law) throw UnsupportedError("chain has no limit law, so no continuation or endpoint");
}

}  // namespace

Point chain_term(const Chain& c, std::size_t k) {
  if (c.values.empty()) throw PreconditionError("empty chain");
  need_law(c);
  if (k == 0) return c.values.back();
  const Ambient& a = c.ambient;
  switch (a.family()) {
    case Ambient::Family::Carrier:
      return a.domain().extend(element_chain(c, as_element), k);
    case Ambient::Family::Matrix:
      return matrix_step(c, k);
    case Ambient::Family::ScalePBar:
    case Ambient::Family::ScaleTrunc:
      return make_scale(a, detail::q_term(scale_hist(c), *c.law, scale_limit(c), k));
    case Ambient::Family::NatMultiple:
      return GenMorphism::nat_multiple(a.codomain(), a.codomain().extend(element_chain(c, multiple_of), k));
    case Ambient::Family::Table:
      if (!table_stable(c)) throw PreconditionError("chains of table morphisms must stabilize");
      return c.values.back();
  }
  return c.values.back();
}

Point chain_limit(const Chain& c) {
  if (c.values.empty()) throw PreconditionError("empty chain");
  need_law(c);
  const Ambient& a = c.ambient;
  switch (a.family()) {
    case Ambient::Family::Carrier:
      return a.domain().limit(element_chain(c, as_element));
    case Ambient::Family::Matrix:
      return matrix_step(c, 0);
    case Ambient::Family::ScalePBar:
    case Ambient::Family::ScaleTrunc:
      return make_scale(a, detail::q_limit(scale_hist(c), *c.law, scale_limit(c)));
    case Ambient::Family::NatMultiple:
      return GenMorphism::nat_multiple(a.codomain(), a.codomain().limit(element_chain(c, multiple_of)));
    case Ambient::Family::Table:
      if (!table_stable(c)) throw PreconditionError("chains of table morphisms must stabilize");
      return c.values.back();
  }
  return c.values.back();
}

bool attained(const Chain& c) { return c.law && chain_term(c, 1) == c.values.back(); }

void validate_chain(const Chain& c) {
  const Ambient& a = c.ambient;
  if (c.values.empty()) throw PreconditionError("empty chain");
  for (const auto& v : c.values) a.require(v);
  if (c.limit && c.law != LawKind::Explicit) throw PreconditionError("a stated limit needs the explicit law");
  for (std::size_t i = 0; i + 1 < c.values.size(); ++i) {
    if (!a.prec(c.values[i], c.values[i + 1])) {
      throw PreconditionError("chain is not increasing for the relation at position " + std::to_string(i + 1) +
                              ": " + a.format(c.values[i]) + " then " + a.format(c.values[i + 1]));
    }
  }
  if (!c.law) return;
  const Point lim = chain_limit(c);
  Point prev = c.values.back();
  for (std::size_t k = 1; k <= 4; ++k) {
    const Point t = chain_term(c, k);
    if (!a.prec(prev, t)) {
      throw PreconditionError("continuation under the " + std::string(law_name(*c.law)) + " law is not increasing: " +
                              a.format(prev) + " then " + a.format(t));
    }
    if (!a.leq(t, lim)) throw PreconditionError("continuation term exceeds the limit " + a.format(lim));
    prev = t;
  }
}

namespace {

// v lies below some continuation term of g, where g has a law that is not
// attained and supremum lim.
bool below_tail(const Ambient& a, const Point& v, const Point& lim) {
  if (a.cu_like()) return a.prec(v, lim);
  const QInf& t = scale_of(v);
  return t.is_zero() || t < scale_of(lim);
}

// open_limit: the supremum of g when g has a law that is not attained.
bool dominated(const Point& v, const Chain& g, const std::optional<Point>& open_limit) {
  const Ambient& a = g.ambient;
  for (const auto& w : g.values) {
    if (a.prec(v, w)) return true;
  }
  return open_limit && below_tail(a, v, *open_limit);
}

}  // namespace

bool chain_below(const Chain& f, const Chain& g) {
  if (!(f.ambient == g.ambient)) {
    throw DomainError("chains live in different ambients: " + f.ambient.name() + " and " + g.ambient.name());
  }
  const Ambient& a = f.ambient;
  std::optional<Point> open_limit;
  if (g.law && !attained(g)) open_limit = chain_limit(g);
  for (const auto& v : f.values) {
    if (!dominated(v, g, open_limit)) return false;
  }
  if (!f.law || attained(f)) return true;
  // The tail of f increases to lf without reaching it: every tail term is
  // dominated iff lf is below the top of g.
  const Point lf = chain_limit(f);
  if (g.law) return a.leq(lf, chain_limit(g));
  return std::any_of(g.values.begin(), g.values.end(), [&](const Point& w) { return a.leq(lf, w); });
}

// ------------------------------------------------------------ classes

PathClass::PathClass(Chain c) : c_(std::move(c)) {
  if (!c_.law) c_.law = LawKind::Stabilize;
  validate_chain(c_);
}

PathClass make_path(const Ambient& amb, std::vector<Point> values, std::optional<LawKind> law,
                    std::optional<Point> limit) {
  return PathClass(Chain{amb, std::move(values), law, std::move(limit)});
}

bool path_below(const PathClass& x, const PathClass& y) { return chain_below(x.chain(), y.chain()); }

bool tau_equal(const PathClass& x, const PathClass& y) { return path_below(x, y) && path_below(y, x); }

Point endpoint(const PathClass& x) { return chain_limit(x.chain()); }

PathClass compact_class(const Ambient& amb, const Point& v) {
  amb.require(v);
  if (!amb.prec(v, v)) throw PreconditionError(amb.format(v) + " is not compact for the relation");
  return make_path(amb, {v}, LawKind::Stabilize);
}

NormalForm normal_form(const PathClass& x) {
  const Chain& c = x.chain();
  Point l = chain_limit(c);
  const bool compact = c.ambient.prec(l, l) && (attained(c) || c.ambient.cu_like());
  return NormalForm{std::move(l), compact};
}

namespace {

std::optional<Point> interpolant(const Ambient& a, const Point& lo, const Point& hi) {
  if (!a.is_carrier()) return std::nullopt;
  const Carrier& s = a.domain();
  const Element& h = std::get<Element>(hi);
  std::vector<Element> cands;
  if (const auto* ql = std::get_if<QInf>(&std::get<Element>(lo))) {
    const auto* qh = std::get_if<QInf>(&h);
    if (qh && !qh->is_inf()) cands.push_back((*ql + *qh) / QInf(2));
  }
  const ElementChain r = s.refine(h);
  cands.insert(cands.end(), r.values.begin(), r.values.end());
  for (std::size_t k = 1; k <= 3; ++k) cands.push_back(s.extend(r, k));
  for (const auto& w : cands) {
    if (!s.contains(w) || w == std::get<Element>(lo) || w == h) continue;
    if (a.prec(lo, w) && a.prec(w, hi)) return Point(w);
  }
  return std::nullopt;
}

}  // namespace

PathClass refine_path(const PathClass& x, std::size_t extra) {
  const Chain& c = x.chain();
  const Ambient& a = c.ambient;
  Chain out{a, {}, c.law, c.limit};
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    if (i > 0) {
      if (auto w = interpolant(a, c.values[i - 1], c.values[i])) out.values.push_back(*w);
    }
    out.values.push_back(c.values[i]);
  }
  if (c.law && !attained(c)) {
    for (std::size_t k = 1; k <= extra; ++k) out.values.push_back(chain_term(c, k));
    // Interpolants shift the gaps the arithmetic and geometric laws read,
    // so the refined chain states its supremum instead.
    out.law = LawKind::Explicit;
    out.limit = chain_limit(c);
  }
  return PathClass(std::move(out));
}

std::string format(const PathClass& x) {
  const Chain& c = x.chain();
  std::string s = "path [";
  for (std::size_t i = 0; i < c.values.size(); ++i) s += (i ? ", " : "") + c.ambient.format(c.values[i]);
  s += "]";
  if (c.law) s += std::string(" law: ") + law_name(*c.law);
  if (c.limit) s += " limit: " + c.ambient.format(*c.limit);
  return s;
}

}  // namespace cucalc
