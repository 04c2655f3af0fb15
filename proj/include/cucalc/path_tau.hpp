#pragma once

// Paths in a Q-semigroup represented by finite chains v1 < v2 < ... < vn,
// optionally continued by a limit law. The tau-quotient identifies chains
// that dominate each other.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cucalc/carriers.hpp"
#include "cucalc/morphisms.hpp"

namespace cucalc {

using Point = std::variant<Element, GenMorphism>;

// The Q-semigroup a chain lives in: a carrier with its way-below relation,
// or a morphism space Cu[S,T] with the auxiliary relation.
class Ambient {
 public:
  enum class Family { Carrier, Matrix, ScalePBar, ScaleTrunc, Table, NatMultiple };

  static Ambient carrier(Carrier s);
  // Throws UnsupportedError when no closed-form family covers (dom, cod).
  static Ambient morphisms(Carrier dom, Carrier cod);

  Family family() const { return family_; }
  bool is_carrier() const { return family_ == Family::Carrier; }
  // The carrier itself, or the domain of the morphism space.
  const Carrier& domain() const { return dom_; }
  const Carrier& codomain() const { return cod_; }
  std::string name() const;

  bool contains(const Point& p) const;
  // Throws DomainError unless p belongs here.
  void require(const Point& p) const;
  bool prec(const Point& a, const Point& b) const;
  bool leq(const Point& a, const Point& b) const;
  Point zero() const;
  std::string format(const Point& p) const;
  // True when the relation is the way-below relation of a Cu-semigroup
  // order on the ambient, so that a chain class is fixed by its supremum.
  bool cu_like() const;

  friend bool operator==(const Ambient& a, const Ambient& b);

 private:
  Ambient(Family f, Carrier dom, Carrier cod) : family_(f), dom_(std::move(dom)), cod_(std::move(cod)) {}
  Family family_;
  Carrier dom_;
  Carrier cod_;
};

// Listed values with an optional continuation law. Without a law the chain
// is read literally and has no endpoint.
struct Chain {
  Ambient ambient;
  std::vector<Point> values;
  std::optional<LawKind> law;
  std::optional<Point> limit;  // stated supremum for the explicit law
};

// Throws PreconditionError unless values are nonempty and increasing for
// the relation, including the first few continuation terms.
void validate_chain(const Chain& c);
// k-th term after the listed values (k >= 1); needs a law.
Point chain_term(const Chain& c, std::size_t k);
// Supremum under the law; UnsupportedError without a law.
Point chain_limit(const Chain& c);
// The law's continuation never leaves the last listed value.
bool attained(const Chain& c);

// Every term of f is below some term of g for the relation.
bool chain_below(const Chain& f, const Chain& g);

// A chain read as a whole path: without a law it stabilizes at its last
// value, which must then satisfy v < v.
class PathClass {
 public:
  // Validates the chain.
  explicit PathClass(Chain c);
  const Chain& chain() const { return c_; }
  const Ambient& ambient() const { return c_.ambient; }

 private:
  Chain c_;
};

PathClass make_path(const Ambient& amb, std::vector<Point> values, std::optional<LawKind> law = LawKind::Stabilize,
                    std::optional<Point> limit = std::nullopt);

bool path_below(const PathClass& x, const PathClass& y);
bool tau_equal(const PathClass& x, const PathClass& y);
// The endpoint map.
Point endpoint(const PathClass& x);
// Class of the constant chain [v]; v must satisfy v < v.
PathClass compact_class(const Ambient& amb, const Point& v);

// (endpoint, compact): the class is compact iff it equals the constant
// class of its endpoint.
struct NormalForm {
  Point endpoint;
  bool compact = false;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};
NormalForm normal_form(const PathClass& x);

// Same class with extra points: interpolants between listed values and
// `extra` continuation terms appended.
PathClass refine_path(const PathClass& x, std::size_t extra = 2);

std::string format(const PathClass& x);

}  // namespace cucalc
