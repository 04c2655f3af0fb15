#pragma once

// Ideals (submonoids closed under sups and passing to smaller elements),
// quotients, the ideal embeddings of [[S,J]] and [[S/J,T]] into [[S,T]],
// and simplicity checks.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cucalc/bivariant.hpp"

namespace cucalc {

// Every supported ideal is the down-set of an idempotent generator e = 2e:
// a coordinate subset for extnat^k, {0} or everything for the simple
// carriers, an element subset for finite carriers.
struct Ideal {
  Carrier carrier;
  Element generator;
  std::string name;
  // Finite carriers: member indices in increasing order.
  std::vector<std::size_t> members;
};

bool contains(const Ideal& j, const Element& a);
bool is_zero_ideal(const Ideal& j);
bool is_full_ideal(const Ideal& j);
std::string format(const Ideal& j);

// Smallest to the front: {0} first, S last. UnsupportedError otherwise.
std::vector<Ideal> ideal_lattice(const Carrier& s);
// The ideal generated by a: the down-set of inf * a.
Ideal generated_ideal(const Carrier& s, const Element& a);
// Down-set of an idempotent; DomainError unless 2e = e.
Ideal ideal_of(const Carrier& s, const Element& e);

struct IdealCheck {
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;
};
// Submonoid, hereditary and sup-closed on the grid; also that every
// generated ideal of a grid element is listed in ideal_lattice.
IdealCheck check_ideal(const Ideal& j, std::size_t budget = 64);
IdealCheck check_lattice_complete(const Carrier& s, std::size_t budget = 64);

struct Quotient {
  Carrier carrier;
  std::function<Element(const Element&)> project;
  // Projection as a generalized Cu-morphism when a family covers it.
  std::optional<GenMorphism> morphism;
};

// a <= b in S/J iff a <= b + j for some j in J. Finite carriers and
// extnat^k only.
Quotient quotient(const Carrier& s, const Ideal& j);

// f in [[S,T]] lies in [[S,J]] iff every value of f lands in J.
bool ihom_ideal_member_second(const IHomElem& x, const Ideal& j);
// f in [[S,T]] lies in [[S/J,T]] iff f vanishes on J.
bool ihom_ideal_member_first(const IHomElem& x, const Ideal& j);

struct EmbeddingReport {
  bool passed = true;
  bool member_set_is_ideal = true;
  bool image_is_member_set = true;
  bool order_embedding = true;
  std::size_t sub_elements = 0;
  std::size_t members = 0;
  std::size_t checked = 0;
  std::vector<std::string> failures;
};
// [[S,J]] -> [[S,T]] for J an ideal of T.
EmbeddingReport check_ideal_embedding_second(const Carrier& s, const Carrier& t, const Ideal& j,
                                             std::size_t budget = 48);
// [[S/J,T]] -> [[S,T]] for J an ideal of S.
EmbeddingReport check_ideal_embedding_first(const Carrier& s, const Carrier& t, const Ideal& j,
                                            std::size_t budget = 48);

struct SimpleReport {
  bool simple = false;
  std::size_t ideals = 0;
  std::optional<Ideal> witness;  // a proper nonzero ideal
  std::string note;
};
SimpleReport is_simple(const Carrier& s);
SimpleReport is_simple(const IHomSpace& sp);

// iota_* and pi_* for J -> T -> T/J on finite instances, and the induced
// map from [[S,T]]/[[S,J]] to [[S,T/J]].
struct FactorMapReport {
  bool composite_zero = true;      // pi_* after iota_* is zero
  bool image_is_ideal = true;      // iota_*[[S,J]] is an ideal of [[S,T]]
  bool well_defined = true;        // pi_* is constant on classes
  bool morphism = true;            // the induced map is additive and monotone
  bool injective = false;
  bool surjective = false;
  bool order_embedding = false;
  bool isomorphism = false;
  std::size_t domain_size = 0;     // |[[S,T]]/[[S,J]]|
  std::size_t codomain_size = 0;   // |[[S,T/J]]|
  std::vector<std::string> failures;
};
FactorMapReport quotient_factor_map(const Carrier& s, const Carrier& t, const Ideal& j);

}  // namespace cucalc
