#pragma once

// Bivariant Cu-semigroups [[S,T]] for the carrier pairs with a closed form,
// together with composition, external tensor products, evaluation, unit
// maps and the adjunction transforms.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cucalc/carriers.hpp"
#include "cucalc/morphisms.hpp"
#include "cucalc/path_tau.hpp"

namespace cucalc {

enum class IHomKind : std::uint8_t {
  Matrix,    // [[extnat^k, extnat^l]] = M_{l,k}(extnat)
  MOne,      // [[pbar, pbar]] = M1
  TruncHom,  // [[trunc, trunc]] = {0} u [1,inf] u (1,inf]'
  Table,     // [[S,T]] = Cu[S,T] for finite S, T
  NatClass,  // [[extnat, S]] = S for S not a power of extnat
  Regular,   // regular representation r -> (a -> r a) of m1 or trunchom
};

const char* ihom_kind_name(IHomKind k);

// A closed form of [[S,T]]: a carrier isomorphic to it (for Regular on
// trunchom: to the image of the regular representation).
struct IHomSpace {
  Carrier dom;
  Carrier cod;
  IHomKind kind;
  Carrier carrier;
  std::string name;
  // Table kind: image vectors of the enumerated morphisms, zero first.
  std::vector<std::vector<std::size_t>> tables;
  // False when the carrier covers only part of [[S,T]].
  bool complete = true;
};

using IHomSpacePtr = std::shared_ptr<const IHomSpace>;

// Throws UnsupportedError for pairs without a closed form.
IHomSpacePtr ihom_space(const Carrier& s, const Carrier& t);
// Image of the regular representation of r in {m1, trunchom}.
IHomSpacePtr regular_space(const Carrier& r);

struct IHomDescription {
  std::string name;
  Carrier carrier;
  std::string order;
  std::string addition;
  std::string way_below;
  std::string provenance;
};
IHomDescription ihom_describe(const Carrier& s, const Carrier& t);

class IHomElem {
 public:
  IHomElem(IHomSpacePtr space, Element e);

  const IHomSpace& space() const { return *space_; }
  const IHomSpacePtr& space_ptr() const { return space_; }
  const Carrier& domain() const { return space_->dom; }
  const Carrier& codomain() const { return space_->cod; }
  IHomKind kind() const { return space_->kind; }
  // Coordinates in the closed-form carrier.
  const Element& element() const { return e_; }

  // Views of the tagged forms; each throws DomainError on the wrong kind.
  MatrixMor matrix() const;
  TwoKind point() const;
  GenMorphism table() const;
  const Element& represented() const;

  friend bool operator==(const IHomElem& a, const IHomElem& b);

 private:
  IHomSpacePtr space_;
  Element e_;
};

IHomElem ihom_zero(const Carrier& s, const Carrier& t);
IHomElem ihom_identity(const Carrier& s);
IHomElem ihom_matrix(MatrixMor m);
IHomElem ihom_m1(TwoKind x);
IHomElem ihom_trunc(TwoKind x);

bool leq(const IHomElem& x, const IHomElem& y);
bool way_below(const IHomElem& x, const IHomElem& y);
IHomElem add(const IHomElem& x, const IHomElem& y);
IHomElem multiple(const ExtNat& n, const IHomElem& x);
std::string format(const IHomElem& x);

// The class determined by a generalized Cu-morphism: the compact class when
// f < f, otherwise the class of a chain increasing to f without reaching it.
IHomElem ihom_of(const GenMorphism& f);
// Morphism with the given coordinates, ignoring compactness.
GenMorphism morphism_of(const IHomSpace& sp, const Element& e);
IHomElem ihom_from_path(const PathClass& p);
// A representative chain; UnsupportedError for the Regular kind.
PathClass ihom_to_path(const IHomElem& x);

// The endpoint map; UnsupportedError for the Regular kind.
GenMorphism endpoint(const IHomElem& x);
Element evaluate(const IHomElem& x, const Element& a);

// y after x. Throws DomainError on a carrier mismatch and UnsupportedError
// for kind pairs without a formula.
IHomElem compose(const IHomElem& y, const IHomElem& x);

// Closed-form tensor products with their universal bimorphism.
struct TensorHandle {
  Carrier left;
  Carrier right;
  Carrier product;
  std::string name;
  std::string provenance;
};
TensorHandle tensor_handle(const Carrier& s, const Carrier& t);
// omega(a, b) = a (x) b.
Element tensor_elem(const TensorHandle& h, const Element& a, const Element& b);

using Bimap = std::function<Element(const Element&, const Element&)>;

// The generalized Cu-morphism S (x) T -> P induced by a bimorphism beta,
// read off from its values on generating simple tensors.
GenMorphism induced_morphism(const TensorHandle& h, const Carrier& p, const Bimap& beta);

// f1 (x) f2 on the closed-form tensor products.
GenMorphism tensor_morphism(const GenMorphism& f1, const GenMorphism& f2);

IHomElem ext_tensor(const IHomElem& x1, const IHomElem& x2);

// Pointwise composition and tensor product of representative chains.
PathClass compose_paths(const PathClass& y, const PathClass& x);
PathClass tensor_paths(const PathClass& x1, const PathClass& x2);
IHomElem compose_via_paths(const IHomElem& y, const IHomElem& x);
IHomElem ext_tensor_via_paths(const IHomElem& x1, const IHomElem& x2);

// The generalized Cu-morphism T -> P agreeing with fn; DomainError when fn
// is not in the closed-form family of Cu[T,P].
GenMorphism fit_morphism(const Carrier& t, const Carrier& p, const std::function<Element(const Element&)>& fn);

// Class in [[T, S (x) T]] of b -> a (x) b.
IHomElem unit_map(const Carrier& s, const Element& a, const Carrier& t);
// Class in [[T, T (x) S]] of b -> b (x) a.
IHomElem unit_map_right(const Carrier& s, const Element& a, const Carrier& t);

IHomElem i_iso(const Carrier& s, const Element& a);
Element i_iso_inv(const IHomElem& x);

// The general unit maps, computed as unit_map(a) after x.
IHomElem general_unit_left(const Carrier& s, const Element& a, const IHomElem& x);
IHomElem general_unit_right(const Carrier& s, const Element& a, const IHomElem& x);

// x (x)_P y = (x (x) id_T2) after (id_S1 (x) y) for x in [[S1 (x) P, T1]]
// and y in [[S2, P (x) T2]].
IHomElem boxtimes_over(const Carrier& p, const Carrier& s1, const Carrier& t2, const IHomElem& x,
                       const IHomElem& y);

using HomValued = std::function<IHomElem(const Element&)>;

// f : S -> [[T,P]] to (a, b) -> sigma(f(a))(b).
Bimap adjunction_to_tensor(HomValued f);
// g : S x T -> P to a -> [(b -> g(a_l, b))_l] along a chain a_l with
// supremum a.
HomValued adjunction_to_hom(const Carrier& s, const Carrier& t, const Carrier& p, Bimap g);

// Element of the closed-form carrier of [[S,T]] regarded as a domain.
IHomElem ihom_from_element(const Carrier& s, const Carrier& t, const Element& e);

// Product on the two-kind carriers m1 and trunchom: values multiply; the
// result is compact iff both factors are, or a factor is an absorbing
// compact inf.
Element point_product(const Carrier& c, const Element& x, const Element& y);

}  // namespace cucalc
