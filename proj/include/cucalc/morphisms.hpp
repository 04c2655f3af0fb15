#pragma once

// Closed-form families of generalized Cu-morphisms (additive, monotone,
// zero- and sup-preserving maps) and the auxiliary relation
//   f < g  iff  f(a') << g(a) whenever a' << a.

#include <string>
#include <variant>
#include <vector>

#include "cucalc/carriers.hpp"

namespace cucalc {

// l x k matrix over extnat acting extnat^k -> extnat^l; row-major entries.
struct MatrixMor {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<ExtNat> entries;

  const ExtNat& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  ExtNat& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  bool finite() const;

  static MatrixMor identity(std::size_t n);
  static MatrixMor zero(std::size_t rows, std::size_t cols);
  friend bool operator==(const MatrixMor&, const MatrixMor&) = default;
};

MatrixMor matmul(const MatrixMor& a, const MatrixMor& b);
MatrixMor kron(const MatrixMor& a, const MatrixMor& b);
MatrixMor matadd(const MatrixMor& a, const MatrixMor& b);
MatrixMor matscale(const ExtNat& n, const MatrixMor& a);
NatVec matvec(const MatrixMor& m, const NatVec& v);

// a -> t a on [0,inf].
struct ScalePBar {
  QInf t;
  friend bool operator==(const ScalePBar&, const ScalePBar&) = default;
};

// a -> t a on the truncated interval, t in {0} u [1,inf].
struct ScaleTrunc {
  QInf t;
  friend bool operator==(const ScaleTrunc&, const ScaleTrunc&) = default;
};

// Value table over finite carriers: image[i] is the index of f(i).
struct TableMor {
  std::vector<std::size_t> image;
  friend bool operator==(const TableMor&, const TableMor&) = default;
};

// n -> n a from extnat to any carrier; inf -> inf a.
struct NatMultiple {
  Element a;
  friend bool operator==(const NatMultiple&, const NatMultiple&) = default;
};

using MorphismRep = std::variant<MatrixMor, ScalePBar, ScaleTrunc, TableMor, NatMultiple>;

class GenMorphism {
 public:
  // Each factory checks that the family applies to the carrier pair.
  static GenMorphism matrix(MatrixMor m);
  static GenMorphism scale_pbar(QInf t);
  static GenMorphism scale_trunc(QInf t);
  // validate = false skips the additivity and monotonicity check.
  static GenMorphism table(const Carrier& dom, const Carrier& cod, std::vector<std::size_t> image,
                           bool validate = true);
  // Into extnat^l this is the l x 1 matrix with column a.
  static GenMorphism nat_multiple(const Carrier& cod, Element a);
  static GenMorphism identity(const Carrier& s);
  static GenMorphism zero(const Carrier& dom, const Carrier& cod);

  const Carrier& domain() const { return dom_; }
  const Carrier& codomain() const { return cod_; }
  const MorphismRep& rep() const { return rep_; }

  friend bool operator==(const GenMorphism& a, const GenMorphism& b);

 private:
  GenMorphism(Carrier dom, Carrier cod, MorphismRep rep)
      : dom_(std::move(dom)), cod_(std::move(cod)), rep_(std::move(rep)) {}

  Carrier dom_;
  Carrier cod_;
  MorphismRep rep_;
};

Element apply(const GenMorphism& f, const Element& a);
// Closed-form auxiliary relation.
bool prec(const GenMorphism& f, const GenMorphism& g);
// Pointwise order.
bool pointwise_leq(const GenMorphism& f, const GenMorphism& g);
GenMorphism pointwise_add(const GenMorphism& f, const GenMorphism& g);
// g after f. Throws UnsupportedError for family pairs without a closed form.
GenMorphism compose(const GenMorphism& g, const GenMorphism& f);
std::string format(const GenMorphism& f);
// Image vectors of all generalized Cu-morphisms between finite carriers in
// lexicographic order; the zero morphism comes first.
std::vector<std::vector<std::size_t>> enumerate_table_morphisms(const Carrier& dom, const Carrier& cod);
std::string format_matrix(const MatrixMor& m);

// Defining quantifier of the auxiliary relation evaluated over samples.
bool prec_by_definition(const GenMorphism& f, const GenMorphism& g, const std::vector<Element>& samples);

struct MorphismReport {
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;  // "property: witness"
};

MorphismReport validate_gen_cu_morphism(const GenMorphism& f, std::size_t samples = 40,
                                        std::size_t chain_terms = 24);

struct FamilyDescription {
  std::string family;      // e.g. "M_{3,2}(extnat)"
  std::string parameters;  // parameter space
  std::string prec;        // closed-form auxiliary relation on parameters
};

// Endomorphisms of pbar, trunc, extnat^k; extnat^k -> extnat^l when both
// carriers are powers of extnat.
FamilyDescription classify_endomorphisms(const Carrier& dom);
FamilyDescription classify_endomorphisms(const Carrier& dom, const Carrier& cod);

}  // namespace cucalc
