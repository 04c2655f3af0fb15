#pragma once

// Concrete Cu-semigroups: extended naturals and their powers, [0,inf],
// the two-kind semigroups (M1, Z and the endomorphism semigroup of the
// truncated interval), the truncated interval itself, and finite tables.

#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "cucalc/scalar.hpp"

namespace cucalc {

enum class Kind : std::uint8_t { Compact, Soft };

struct NatVec {
  std::vector<ExtNat> v;
  friend bool operator==(const NatVec&, const NatVec&) = default;
};

struct TwoKind {
  Kind kind = Kind::Compact;
  QInf value;
  friend bool operator==(const TwoKind&, const TwoKind&) = default;
};

struct FiniteIdx {
  std::size_t index = 0;
  friend bool operator==(const FiniteIdx&, const FiniteIdx&) = default;
};

// The carrier decides how an alternative is read: QInf serves both [0,inf]
// and the truncated interval, TwoKind serves M1, Z and the truncated
// endomorphism semigroup.
using Element = std::variant<NatVec, QInf, TwoKind, FiniteIdx>;

Element nat(std::uint64_t n);
Element nat_inf();
Element natvec(std::vector<ExtNat> v);
Element q(std::int64_t p, std::int64_t den = 1);
Element q_inf();
Element compact(QInf v);
Element soft(QInf v);

enum class CarrierKind : std::uint8_t { ExtNatPow, PBar, MOne, Trunc, TruncHom, Z, Finite };

// Addition and order given by tables over indices 0..n-1; index 0 is zero.
struct FiniteTable {
  std::vector<std::string> names;
  std::vector<std::size_t> add;  // n*n, row-major
  std::vector<char> leq;         // n*n, leq[i*n+j] iff i <= j

  std::size_t size() const { return names.size(); }
  std::size_t sum(std::size_t a, std::size_t b) const { return add[a * size() + b]; }
  bool le(std::size_t a, std::size_t b) const { return leq[a * size() + b] != 0; }
  friend bool operator==(const FiniteTable&, const FiniteTable&) = default;
};

// Returns a description of the first violated positively-ordered-monoid
// axiom, or nullopt.
std::optional<std::string> finite_table_violation(const FiniteTable& t);

enum class LawKind : std::uint8_t { Stabilize, Arithmetic, Geometric, Explicit };

const char* law_name(LawKind k);
std::optional<LawKind> law_from_name(const std::string& s);

// A finite increasing list read as the start of a sequence continued by the
// declared law. Explicit laws carry the stated supremum.
struct ElementChain {
  std::vector<Element> values;
  LawKind law = LawKind::Stabilize;
  std::optional<Element> limit;
};

namespace detail {
class CarrierModel;
}

class Carrier {
 public:
  static Carrier extnat(std::size_t k = 1);
  static Carrier pbar();
  static Carrier m1();
  static Carrier trunc();
  static Carrier trunc_hom();
  static Carrier z();
  // Validates the table unless `validate` is false; unvalidated carriers
  // exist so the axiom checker can report on broken tables.
  static Carrier finite(FiniteTable table, bool validate = true);

  CarrierKind kind() const;
  // Dimension for extnat^k, cardinality for finite carriers, 1 otherwise.
  std::size_t dim() const;
  const FiniteTable& table() const;
  std::string name() const;

  bool contains(const Element& a) const;
  Element zero() const;
  Element add(const Element& a, const Element& b) const;
  bool leq(const Element& a, const Element& b) const;
  bool way_below(const Element& a, const Element& b) const;
  bool is_soft(const Element& a) const;
  bool is_compact(const Element& a) const { return way_below(a, a); }
  // n*a, with inf*a the supremum of the finite multiples.
  Element multiple(const ExtNat& n, const Element& a) const;

  // A way-below increasing chain with supremum a.
  ElementChain refine(const Element& a) const;
  // k-th term after the listed values (k >= 1).
  Element extend(const ElementChain& c, std::size_t k) const;
  // Supremum of the whole sequence.
  Element limit(const ElementChain& c) const;

  // Deterministic sample set; at most `budget` elements when the natural
  // grid is larger.
  std::vector<Element> grid(std::size_t budget = 256) const;
  Element random(std::mt19937_64& rng) const;

  std::string format(const Element& a) const;

  // Throws DomainError unless a belongs to this carrier.
  void require(const Element& a) const;

  friend bool operator==(const Carrier& a, const Carrier& b);

 private:
  explicit Carrier(std::shared_ptr<const detail::CarrierModel> m) : m_(std::move(m)) {}
  std::shared_ptr<const detail::CarrierModel> m_;
};

Element add(const Carrier& s, const Element& a, const Element& b);
bool way_below(const Carrier& s, const Element& a, const Element& b);
bool is_soft(const Carrier& s, const Element& a);
// Throws PreconditionError if the listed values are not increasing or the
// law does not apply.
Element sup_chain(const Carrier& s, const ElementChain& c);

// Rational grid {p/q : q <= max_den, p/q <= max_val}, sorted, deduplicated.
std::vector<QInf> rational_grid(int max_den, int max_val);

struct AxiomResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string witness;
};

struct AxiomReport {
  std::string carrier;
  std::vector<AxiomResult> results;
  bool passed() const;
};

struct AxiomBudget {
  std::size_t samples = 48;      // elements drawn from the grid
  std::size_t chain_terms = 24;  // continuation terms inspected per chain
  std::size_t soft_k = 64;       // largest k tried in the softness quantifier
};

AxiomReport check_axioms(const Carrier& s, const AxiomBudget& budget = {});

}  // namespace cucalc
