#include "cucalc/carriers.hpp"

#include <algorithm>
#include <set>

#include "carrier_model.hpp"
#include "cucalc/error.hpp"
#include "sequence.hpp"

namespace cucalc {

Element nat(std::uint64_t n) { return NatVec{{ExtNat(n)}}; }
Element nat_inf() { return NatVec{{ExtNat::infinity()}}; }
Element natvec(std::vector<ExtNat> v) { return NatVec{std::move(v)}; }
Element q(std::int64_t p, std::int64_t den) { return QInf(p, den); }
Element q_inf() { return QInf::infinity(); }
Element compact(QInf v) { return TwoKind{Kind::Compact, std::move(v)}; }
Element soft(QInf v) { return TwoKind{Kind::Soft, std::move(v)}; }

const char* law_name(LawKind k) {
  switch (k) {
    case LawKind::Stabilize:
      return "stabilize";
    case LawKind::Arithmetic:
      return "arithmetic";
    case LawKind::Geometric:
      return "geometric";
    case LawKind::Explicit:
      return "explicit";
  }
  return "?";
}

std::optional<LawKind> law_from_name(const std::string& s) {
  if (s == "stabilize") return LawKind::Stabilize;
  if (s == "arithmetic") return LawKind::Arithmetic;
  if (s == "geometric") return LawKind::Geometric;
  if (s == "explicit") return LawKind::Explicit;
  return std::nullopt;
}

std::vector<QInf> rational_grid(int max_den, int max_val) {
  std::vector<QInf> out;
  for (int den = 1; den <= max_den; ++den) {
    for (int p = 0; p <= max_val * den; ++p) out.emplace_back(p, den);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::string> finite_table_violation(const FiniteTable& t) {
  const std::size_t n = t.size();
  if (n == 0) return "empty carrier";
  if (t.add.size() != n * n || t.leq.size() != n * n) return "table sizes do not match";
  for (std::size_t v : t.add) {
    if (v >= n) return "addition leaves the carrier";
  }
  auto nm = [&](std::size_t i) { return t.names[i]; };
  for (std::size_t a = 0; a < n; ++a) {
    if (t.sum(0, a) != a || t.sum(a, 0) != a) return "0 is not neutral for " + nm(a);
    if (!t.le(a, a)) return "order not reflexive at " + nm(a);
    if (!t.le(0, a)) return "0 is not below " + nm(a);
    for (std::size_t b = 0; b < n; ++b) {
      if (t.sum(a, b) != t.sum(b, a)) return "addition not commutative at " + nm(a) + "," + nm(b);
      if (a != b && t.le(a, b) && t.le(b, a)) return "order not antisymmetric at " + nm(a) + "," + nm(b);
      for (std::size_t c = 0; c < n; ++c) {
        if (t.sum(t.sum(a, b), c) != t.sum(a, t.sum(b, c))) {
          return "addition not associative at " + nm(a) + "," + nm(b) + "," + nm(c);
        }
        if (t.le(a, b) && t.le(b, c) && !t.le(a, c)) {
          return "order not transitive at " + nm(a) + "," + nm(b) + "," + nm(c);
        }
        if (t.le(a, b) && !t.le(t.sum(a, c), t.sum(b, c))) {
          return "addition not monotone at " + nm(a) + "<=" + nm(b) + " plus " + nm(c);
        }
      }
    }
  }
  return std::nullopt;
}

namespace detail {
namespace {

template <class T>
const T& as(const Element& a) {
  const T* p = std::get_if<T>(&a);
  if (p == nullptr) throw DomainError("element of the wrong shape");
  return *p;
}

std::vector<QInf> q_coords(const ElementChain& c) {
  std::vector<QInf> out;
  out.reserve(c.values.size());
  for (const auto& v : c.values) {
    if (const auto* x = std::get_if<QInf>(&v)) {
      out.push_back(*x);
    } else {
      out.push_back(as<TwoKind>(v).value);
    }
  }
  return out;
}

std::optional<QInf> q_limit_coord(const ElementChain& c) {
  if (!c.limit) return std::nullopt;
  if (const auto* x = std::get_if<QInf>(&*c.limit)) return *x;
  return as<TwoKind>(*c.limit).value;
}

// ---------------------------------------------------------------- extnat^k

class ExtNatPowModel final : public CarrierModel {
 public:
  explicit ExtNatPowModel(std::size_t k) : k_(k) {
    if (k == 0) throw DomainError("extnat^0 is not supported");
  }

  CarrierKind kind() const override { return CarrierKind::ExtNatPow; }
  std::size_t dim() const override { return k_; }
  std::string name() const override { return k_ == 1 ? "extnat" : "extnat^" + std::to_string(k_); }

  bool contains(const Element& a) const override {
    const auto* v = std::get_if<NatVec>(&a);
    return v != nullptr && v->v.size() == k_;
  }
  Element zero() const override { return NatVec{std::vector<ExtNat>(k_, ExtNat(0))}; }

  Element add(const Element& a, const Element& b) const override {
    const auto& x = as<NatVec>(a).v;
    const auto& y = as<NatVec>(b).v;
    NatVec r{std::vector<ExtNat>(k_)};
    for (std::size_t i = 0; i < k_; ++i) r.v[i] = x[i] + y[i];
    return r;
  }
  bool leq(const Element& a, const Element& b) const override {
    const auto& x = as<NatVec>(a).v;
    const auto& y = as<NatVec>(b).v;
    for (std::size_t i = 0; i < k_; ++i) {
      if (x[i] > y[i]) return false;
    }
    return true;
  }
  bool way_below(const Element& a, const Element& b) const override {
    const auto& x = as<NatVec>(a).v;
    for (const auto& xi : x) {
      if (xi.is_inf()) return false;
    }
    return leq(a, b);
  }
  bool is_soft(const Element& a) const override {
    for (const auto& xi : as<NatVec>(a).v) {
      if (!xi.is_zero() && !xi.is_inf()) return false;
    }
    return true;
  }
  Element multiple(const ExtNat& n, const Element& a) const override {
    NatVec r = as<NatVec>(a);
    for (auto& xi : r.v) xi = n * xi;
    return r;
  }

  ElementChain refine(const Element& a) const override {
    const auto& x = as<NatVec>(a).v;
    if (std::none_of(x.begin(), x.end(), [](const ExtNat& e) { return e.is_inf(); })) {
      return {{a}, LawKind::Stabilize, std::nullopt};
    }
    NatVec one = as<NatVec>(a);
    NatVec two = one;
    for (std::size_t i = 0; i < k_; ++i) {
      if (x[i].is_inf()) {
        one.v[i] = ExtNat(1);
        two.v[i] = ExtNat(2);
      }
    }
    return {{Element(one), Element(two)}, LawKind::Arithmetic, std::nullopt};
  }

  Element extend(const ElementChain& c, std::size_t k) const override {
    NatVec r{std::vector<ExtNat>(k_)};
    for (std::size_t i = 0; i < k_; ++i) r.v[i] = detail::n_term(coord(c, i), c.law, lim(c, i), k);
    return r;
  }
  Element limit(const ElementChain& c) const override {
    NatVec r{std::vector<ExtNat>(k_)};
    for (std::size_t i = 0; i < k_; ++i) r.v[i] = detail::n_limit(coord(c, i), c.law, lim(c, i));
    return r;
  }

  std::vector<Element> grid() const override {
    static const ExtNat entries[] = {ExtNat(0), ExtNat(1), ExtNat(2), ExtNat(3), ExtNat::infinity()};
    std::size_t total = 1;
    for (std::size_t i = 0; i < k_ && total <= 100000; ++i) total *= 5;
    std::vector<Element> out;
    for (std::size_t idx = 0; idx < total && idx < 100000; ++idx) {
      NatVec v{std::vector<ExtNat>(k_)};
      std::size_t r = idx;
      for (std::size_t i = 0; i < k_; ++i) {
        v.v[i] = entries[r % 5];
        r /= 5;
      }
      out.emplace_back(std::move(v));
    }
    return out;
  }
  Element random(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> d(0, 5);
    NatVec v{std::vector<ExtNat>(k_)};
    for (auto& e : v.v) {
      const int r = d(rng);
      e = r == 5 ? ExtNat::infinity() : ExtNat(static_cast<std::uint64_t>(r));
    }
    return v;
  }
  std::string format(const Element& a) const override {
    const auto& x = as<NatVec>(a).v;
    if (k_ == 1) return x[0].str();
    std::string s = "(";
    for (std::size_t i = 0; i < k_; ++i) s += (i ? "," : "") + x[i].str();
    return s + ")";
  }

 private:
  std::vector<ExtNat> coord(const ElementChain& c, std::size_t i) const {
    std::vector<ExtNat> out;
    for (const auto& v : c.values) out.push_back(as<NatVec>(v).v.at(i));
    return out;
  }
  std::optional<ExtNat> lim(const ElementChain& c, std::size_t i) const {
    if (!c.limit) return std::nullopt;
    return as<NatVec>(*c.limit).v.at(i);
  }

  std::size_t k_;
};

// ------------------------------------------------------------------ [0,inf]

class PBarModel final : public CarrierModel {
 public:
  CarrierKind kind() const override { return CarrierKind::PBar; }
  std::string name() const override { return "pbar"; }
  bool contains(const Element& a) const override { return std::holds_alternative<QInf>(a); }
  Element zero() const override { return QInf(0); }
  Element add(const Element& a, const Element& b) const override { return as<QInf>(a) + as<QInf>(b); }
  bool leq(const Element& a, const Element& b) const override { return as<QInf>(a) <= as<QInf>(b); }
  bool way_below(const Element& a, const Element& b) const override {
    const QInf& x = as<QInf>(a);
    return x.is_zero() || x < as<QInf>(b);
  }
  bool is_soft(const Element&) const override { return true; }
  Element multiple(const ExtNat& n, const Element& a) const override { return QInf(n) * as<QInf>(a); }

  ElementChain refine(const Element& a) const override {
    const QInf& x = as<QInf>(a);
    if (x.is_zero()) return {{a}, LawKind::Stabilize, std::nullopt};
    if (x.is_inf()) return {{Element(QInf(1)), Element(QInf(2))}, LawKind::Arithmetic, std::nullopt};
    return {{Element(x / QInf(2)), Element(x * QInf(3, 4))}, LawKind::Geometric, std::nullopt};
  }
  Element extend(const ElementChain& c, std::size_t k) const override {
    return detail::q_term(q_coords(c), c.law, q_limit_coord(c), k);
  }
  Element limit(const ElementChain& c) const override {
    return detail::q_limit(q_coords(c), c.law, q_limit_coord(c));
  }
  std::vector<Element> grid() const override {
    std::vector<Element> out;
    for (auto& v : rational_grid(4, 4)) out.emplace_back(v);
    out.emplace_back(QInf::infinity());
    return out;
  }
  Element random(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> den(1, 8);
    std::uniform_int_distribution<int> coin(0, 11);
    if (coin(rng) == 0) return QInf::infinity();
    const int q = den(rng);
    std::uniform_int_distribution<int> num(0, 8 * q);
    return QInf(num(rng), q);
  }
  std::string format(const Element& a) const override { return as<QInf>(a).str(); }
};

// ------------------------------------------------------- [0,1] with inf

class TruncModel final : public CarrierModel {
 public:
  CarrierKind kind() const override { return CarrierKind::Trunc; }
  std::string name() const override { return "trunc"; }
  bool contains(const Element& a) const override {
    const auto* x = std::get_if<QInf>(&a);
    return x != nullptr && (x->is_inf() || *x <= QInf(1));
  }
  Element zero() const override { return QInf(0); }
  static QInf cut(const QInf& v) { return v > QInf(1) ? QInf::infinity() : v; }
  Element add(const Element& a, const Element& b) const override { return cut(as<QInf>(a) + as<QInf>(b)); }
  bool leq(const Element& a, const Element& b) const override { return as<QInf>(a) <= as<QInf>(b); }
  bool way_below(const Element& a, const Element& b) const override {
    const QInf& x = as<QInf>(a);
    const QInf& y = as<QInf>(b);
    return x.is_zero() || x < y || (x.is_inf() && y.is_inf());
  }
  bool is_soft(const Element&) const override { return true; }
  Element multiple(const ExtNat& n, const Element& a) const override { return cut(QInf(n) * as<QInf>(a)); }

  ElementChain refine(const Element& a) const override {
    const QInf& x = as<QInf>(a);
    if (x.is_zero() || x.is_inf()) return {{a}, LawKind::Stabilize, std::nullopt};
    return {{Element(x / QInf(2)), Element(x * QInf(3, 4))}, LawKind::Geometric, std::nullopt};
  }
  Element extend(const ElementChain& c, std::size_t k) const override {
    return cut(detail::q_term(q_coords(c), c.law, q_limit_coord(c), k));
  }
  Element limit(const ElementChain& c) const override {
    return cut(detail::q_limit(q_coords(c), c.law, q_limit_coord(c)));
  }
  std::vector<Element> grid() const override {
    std::vector<Element> out;
    for (auto& v : rational_grid(6, 1)) out.emplace_back(v);
    out.emplace_back(QInf::infinity());
    return out;
  }
  Element random(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> den(1, 12);
    std::uniform_int_distribution<int> coin(0, 7);
    if (coin(rng) == 0) return QInf::infinity();
    const int q = den(rng);
    std::uniform_int_distribution<int> num(0, q);
    return QInf(num(rng), q);
  }
  std::string format(const Element& a) const override { return as<QInf>(a).str(); }
};

// ---------------------------------------------------- compact/soft carriers

// Shared arithmetic of M1, Z and the endomorphism semigroup of the
// truncated interval: elements are (kind, value) and
//   x <= y  iff  val x < val y, or val x = val y and (x = y or x soft, y compact)
//   x << y  iff  val x < val y, or y compact and x <= y.
// A sum or product is compact when every factor is, or when a factor is a
// compact inf that absorbs the rest (only the truncated case has one).
class TwoKindModel final : public CarrierModel {
 public:
  explicit TwoKindModel(CarrierKind k) : k_(k) {}

  CarrierKind kind() const override { return k_; }
  std::string name() const override {
    switch (k_) {
      case CarrierKind::MOne:
        return "m1";
      case CarrierKind::Z:
        return "z";
      default:
        return "trunchom";
    }
  }

  bool contains(const Element& a) const override {
    const auto* x = std::get_if<TwoKind>(&a);
    if (x == nullptr) return false;
    const QInf& v = x->value;
    if (x->kind == Kind::Soft) {
      if (k_ == CarrierKind::TruncHom) return v > QInf(1);
      return !v.is_zero();
    }
    switch (k_) {
      case CarrierKind::MOne:
        return !v.is_inf();
      case CarrierKind::Z:
        return v.is_integer();
      default:
        return v.is_zero() || v >= QInf(1);
    }
  }
  Element zero() const override { return TwoKind{Kind::Compact, QInf(0)}; }

  static bool compact_inf(const TwoKind& x) { return x.kind == Kind::Compact && x.value.is_inf(); }

  Element add(const Element& a, const Element& b) const override {
    const auto& x = as<TwoKind>(a);
    const auto& y = as<TwoKind>(b);
    const QInf v = x.value + y.value;
    if (v.is_zero()) return zero();
    const bool attained =
        (x.kind == Kind::Compact && y.kind == Kind::Compact) || compact_inf(x) || compact_inf(y);
    return TwoKind{attained ? Kind::Compact : Kind::Soft, v};
  }
  bool leq(const Element& a, const Element& b) const override {
    const auto& x = as<TwoKind>(a);
    const auto& y = as<TwoKind>(b);
    if (x.value != y.value) return x.value < y.value;
    return x.kind == y.kind || (x.kind == Kind::Soft && y.kind == Kind::Compact);
  }
  bool way_below(const Element& a, const Element& b) const override {
    const auto& x = as<TwoKind>(a);
    const auto& y = as<TwoKind>(b);
    if (x.value < y.value) return true;
    return y.kind == Kind::Compact && leq(a, b);
  }
  bool is_soft(const Element& a) const override {
    const auto& x = as<TwoKind>(a);
    // A compact inf absorbs every multiple, so it passes the quantifier too.
    return x.kind == Kind::Soft || x.value.is_zero() || compact_inf(x);
  }
  Element multiple(const ExtNat& n, const Element& a) const override {
    const auto& x = as<TwoKind>(a);
    if (n.is_zero() || x.value.is_zero()) return zero();
    if (!n.is_inf()) return TwoKind{x.kind, QInf(n) * x.value};
    if (compact_inf(x)) return x;
    return TwoKind{Kind::Soft, QInf::infinity()};
  }

  ElementChain refine(const Element& a) const override {
    const auto& x = as<TwoKind>(a);
    if (x.kind == Kind::Compact) return {{a}, LawKind::Stabilize, std::nullopt};
    if (k_ == CarrierKind::TruncHom) {
      if (x.value.is_inf()) {
        return {{compact(QInf(1)), compact(QInf(2))}, LawKind::Arithmetic, std::nullopt};
      }
      return {{compact(QInf(1)), compact((QInf(1) + x.value) / QInf(2))}, LawKind::Geometric,
              std::nullopt};
    }
    if (x.value.is_inf()) return {{soft(QInf(1)), soft(QInf(2))}, LawKind::Arithmetic, std::nullopt};
    return {{soft(x.value / QInf(2)), soft(x.value * QInf(3, 4))}, LawKind::Geometric, std::nullopt};
  }

  Element extend(const ElementChain& c, std::size_t k) const override {
    const auto& last = as<TwoKind>(c.values.back());
    const QInf v = detail::q_term(q_coords(c), c.law, q_limit_coord(c), k);
    TwoKind r{last.kind, v};
    if (!contains(r)) throw PreconditionError("limit law leaves carrier " + name());
    return r;
  }
  Element limit(const ElementChain& c) const override {
    const auto& last = as<TwoKind>(c.values.back());
    const QInf v = detail::q_limit(q_coords(c), c.law, q_limit_coord(c));
    if (v == last.value) return last;
    return TwoKind{Kind::Soft, v};
  }

  std::vector<Element> grid() const override {
    std::vector<Element> out;
    std::vector<QInf> compacts;
    std::vector<QInf> softs;
    switch (k_) {
      case CarrierKind::MOne:
        compacts = rational_grid(3, 3);
        softs = compacts;
        break;
      case CarrierKind::Z:
        for (int i = 0; i <= 4; ++i) compacts.emplace_back(i);
        softs = rational_grid(3, 3);
        break;
      default:
        compacts = {QInf(0), QInf(1), QInf(5, 4), QInf(3, 2), QInf(2), QInf(3), QInf(4)};
        softs = {QInf(5, 4), QInf(3, 2), QInf(2), QInf(3), QInf(4)};
        compacts.push_back(QInf::infinity());
        break;
    }
    softs.push_back(QInf::infinity());
    for (const auto& v : compacts) {
      Element e = TwoKind{Kind::Compact, v};
      if (contains(e)) out.push_back(e);
    }
    for (const auto& v : softs) {
      Element e = TwoKind{Kind::Soft, v};
      if (contains(e)) out.push_back(e);
    }
    return out;
  }
  Element random(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> den(1, 8);
    std::uniform_int_distribution<int> coin(0, 11);
    std::uniform_int_distribution<int> kind(0, 1);
    for (;;) {
      const Kind kd = kind(rng) ? Kind::Soft : Kind::Compact;
      QInf v;
      if (coin(rng) == 0) {
        v = QInf::infinity();
      } else {
        const int qd = (k_ == CarrierKind::Z && kd == Kind::Compact) ? 1 : den(rng);
        std::uniform_int_distribution<int> num(0, 8 * qd);
        v = QInf(num(rng), qd);
      }
      Element e = TwoKind{kd, v};
      if (contains(e)) return e;
    }
  }
  std::string format(const Element& a) const override {
    const auto& x = as<TwoKind>(a);
    return std::string(x.kind == Kind::Compact ? "compact " : "soft ") + x.value.str();
  }

 private:
  CarrierKind k_;
};

// --------------------------------------------------------------- finite

class FiniteModel final : public CarrierModel {
 public:
  explicit FiniteModel(FiniteTable t) : t_(std::move(t)) {}

  CarrierKind kind() const override { return CarrierKind::Finite; }
  std::size_t dim() const override { return t_.size(); }
  std::string name() const override {
    std::string s = "finite{";
    for (std::size_t i = 0; i < t_.size(); ++i) s += (i ? "," : "") + t_.names[i];
    return s + "}";
  }
  const FiniteTable* table() const override { return &t_; }

  bool contains(const Element& a) const override {
    const auto* x = std::get_if<FiniteIdx>(&a);
    return x != nullptr && x->index < t_.size();
  }
  Element zero() const override { return FiniteIdx{0}; }
  Element add(const Element& a, const Element& b) const override {
    return FiniteIdx{t_.sum(as<FiniteIdx>(a).index, as<FiniteIdx>(b).index)};
  }
  bool leq(const Element& a, const Element& b) const override {
    return t_.le(as<FiniteIdx>(a).index, as<FiniteIdx>(b).index);
  }
  bool way_below(const Element& a, const Element& b) const override { return leq(a, b); }

  std::size_t times(std::size_t k, std::size_t a) const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < k; ++i) r = t_.sum(r, a);
    return r;
  }
  bool is_soft(const Element& a) const override {
    const std::size_t x = as<FiniteIdx>(a).index;
    const std::size_t n = t_.size();
    for (std::size_t y = 0; y < n; ++y) {
      if (!t_.le(y, x)) continue;
      bool ok = false;
      for (std::size_t k = 0; k <= n + 1 && !ok; ++k) ok = t_.le(times(k + 1, y), times(k, x));
      if (!ok) return false;
    }
    return true;
  }
  Element multiple(const ExtNat& n, const Element& a) const override {
    const std::size_t x = as<FiniteIdx>(a).index;
    if (!n.is_inf()) {
      // Multiples stabilize after at most |S| steps, which bounds the loop.
      const std::uint64_t cap = std::min<std::uint64_t>(n.value(), 2 * t_.size() + 2);
      if (n.value() <= cap) return FiniteIdx{times(static_cast<std::size_t>(n.value()), x)};
    }
    return FiniteIdx{times(2 * t_.size() + 2, x)};
  }
  ElementChain refine(const Element& a) const override { return {{a}, LawKind::Stabilize, std::nullopt}; }
  Element extend(const ElementChain& c, std::size_t) const override {
    check_law(c);
    return c.values.back();
  }
  Element limit(const ElementChain& c) const override {
    check_law(c);
    return c.values.back();
  }
  std::vector<Element> grid() const override {
    std::vector<Element> out;
    for (std::size_t i = 0; i < t_.size(); ++i) out.emplace_back(FiniteIdx{i});
    return out;
  }
  Element random(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<std::size_t> d(0, t_.size() - 1);
    return FiniteIdx{d(rng)};
  }
  std::string format(const Element& a) const override { return t_.names.at(as<FiniteIdx>(a).index); }

 private:
  void check_law(const ElementChain& c) const {
    if (c.law == LawKind::Stabilize) return;
    if (c.law == LawKind::Explicit && c.limit && *c.limit == c.values.back()) return;
    throw PreconditionError("finite carriers only admit stabilizing chains");
  }

  FiniteTable t_;
};

}  // namespace
}  // namespace detail

// ----------------------------------------------------------------- Carrier

Carrier Carrier::extnat(std::size_t k) { return Carrier(std::make_shared<detail::ExtNatPowModel>(k)); }
Carrier Carrier::pbar() {
  static const Carrier c(std::make_shared<detail::PBarModel>());
  return c;
}
Carrier Carrier::m1() {
  static const Carrier c(std::make_shared<detail::TwoKindModel>(CarrierKind::MOne));
  return c;
}
Carrier Carrier::trunc() {
  static const Carrier c(std::make_shared<detail::TruncModel>());
  return c;
}
Carrier Carrier::trunc_hom() {
  static const Carrier c(std::make_shared<detail::TwoKindModel>(CarrierKind::TruncHom));
  return c;
}
Carrier Carrier::z() {
  static const Carrier c(std::make_shared<detail::TwoKindModel>(CarrierKind::Z));
  return c;
}
Carrier Carrier::finite(FiniteTable table, bool validate) {
  if (table.names.size() != table.size() || table.size() == 0) throw DomainError("empty finite carrier");
  if (table.add.size() != table.size() * table.size() || table.leq.size() != table.size() * table.size()) {
    throw DomainError("finite carrier tables have the wrong size");
  }
  if (validate) {
    if (auto why = finite_table_violation(table)) throw DomainError("not a positively ordered monoid: " + *why);
  }
  return Carrier(std::make_shared<detail::FiniteModel>(std::move(table)));
}

CarrierKind Carrier::kind() const { return m_->kind(); }
std::size_t Carrier::dim() const { return m_->dim(); }
const FiniteTable& Carrier::table() const {
  const FiniteTable* t = m_->table();
  if (t == nullptr) throw DomainError(name() + " has no finite table");
  return *t;
}
std::string Carrier::name() const { return m_->name(); }
bool Carrier::contains(const Element& a) const { return m_->contains(a); }

void Carrier::require(const Element& a) const {
  if (!m_->contains(a)) throw DomainError("element does not belong to " + name());
}

Element Carrier::zero() const { return m_->zero(); }
Element Carrier::add(const Element& a, const Element& b) const {
  require(a);
  require(b);
  return m_->add(a, b);
}
bool Carrier::leq(const Element& a, const Element& b) const {
  require(a);
  require(b);
  return m_->leq(a, b);
}
bool Carrier::way_below(const Element& a, const Element& b) const {
  require(a);
  require(b);
  return m_->way_below(a, b);
}
bool Carrier::is_soft(const Element& a) const {
  require(a);
  return m_->is_soft(a);
}
Element Carrier::multiple(const ExtNat& n, const Element& a) const {
  require(a);
  return m_->multiple(n, a);
}
ElementChain Carrier::refine(const Element& a) const {
  require(a);
  return m_->refine(a);
}
Element Carrier::extend(const ElementChain& c, std::size_t k) const {
  if (c.values.empty()) throw PreconditionError("empty chain");
  for (const auto& v : c.values) require(v);
  if (c.law == LawKind::Explicit && !c.limit) throw PreconditionError("explicit law without a stated limit");
  if (c.limit) require(*c.limit);
  if (k == 0) return c.values.back();
  return m_->extend(c, k);
}
Element Carrier::limit(const ElementChain& c) const {
  if (c.values.empty()) throw PreconditionError("empty chain");
  for (const auto& v : c.values) require(v);
  if (c.law == LawKind::Explicit && !c.limit) throw PreconditionError("explicit law without a stated limit");
  if (c.limit) require(*c.limit);
  Element s = m_->limit(c);
  if (c.law == LawKind::Explicit && !(s == *c.limit)) {
    throw PreconditionError("stated limit " + format(*c.limit) + " is not the supremum " + format(s));
  }
  return s;
}

std::vector<Element> Carrier::grid(std::size_t budget) const {
  std::vector<Element> all = m_->grid();
  if (all.size() <= budget || budget == 0) return all;
  std::vector<Element> out;
  out.reserve(budget);
  for (std::size_t i = 0; i < budget; ++i) out.push_back(all[i * all.size() / budget]);
  // Keep inf-like extremes present: the last grid point is the top sample.
  out.back() = all.back();
  return out;
}
Element Carrier::random(std::mt19937_64& rng) const { return m_->random(rng); }
std::string Carrier::format(const Element& a) const {
  require(a);
  return m_->format(a);
}

bool operator==(const Carrier& a, const Carrier& b) {
  if (a.m_ == b.m_) return true;
  if (a.kind() != b.kind() || a.dim() != b.dim()) return false;
  if (a.kind() == CarrierKind::Finite) return a.table() == b.table();
  return true;
}

Element add(const Carrier& s, const Element& a, const Element& b) { return s.add(a, b); }
bool way_below(const Carrier& s, const Element& a, const Element& b) { return s.way_below(a, b); }
bool is_soft(const Carrier& s, const Element& a) { return s.is_soft(a); }

Element sup_chain(const Carrier& s, const ElementChain& c) {
  if (c.values.empty()) throw PreconditionError("empty chain");
  for (std::size_t i = 1; i < c.values.size(); ++i) {
    if (!s.leq(c.values[i - 1], c.values[i])) {
      throw PreconditionError("chain is not increasing at position " + std::to_string(i));
    }
  }
  return s.limit(c);
}

bool AxiomReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.passed; });
}

}  // namespace cucalc
