#pragma once

// Brute-force ground truth on finite carriers: all small Cu-semigroups up
// to isomorphism, exhaustive morphism and bimorphism enumeration, the
// closed-category bijection, and the tau-construction by chain enumeration.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cucalc/bivariant.hpp"

namespace cucalc {

// Every finite Cu-semigroup with at most n elements (n <= 5), one per
// isomorphism class, ordered by size and then by canonical table.
std::vector<Carrier> generate_finite_cu(std::size_t n);
// Lexicographically least (addition, order) encoding over all relabelings
// fixing 0.
std::vector<std::uint8_t> canonical_form(const FiniteTable& t);
// "{0,a,b | a+a=a, a+b=b, b+b=b | a<=b}": elements, all sums of nonzero
// elements, and the order among nonzero elements.
std::string describe_finite(const FiniteTable& t);

// All additive monotone zero-preserving maps, by naive product enumeration,
// in lexicographic order of image vectors.
std::vector<TableMor> enumerate_gen_morphisms(const Carrier& s, const Carrier& t);

// phi(a,b) stored at a * |T| + b.
using BiTable = std::vector<std::size_t>;
// Maps S x T -> P additive and monotone in each variable; on finite
// carriers joint way-below and sup preservation are automatic.
std::vector<BiTable> enumerate_bimorphisms(const Carrier& s, const Carrier& t, const Carrier& p);

struct BijectionReport {
  bool passed = true;
  std::size_t homs = 0;         // |Cu(S,[[T,P]])|
  std::size_t bimorphisms = 0;  // |BiCu(S x T,P)|
  bool counts_equal = true;
  bool forward_lands = true;    // alpha -> (a,b) -> sigma(alpha(a))(b) is a bimorphism
  bool backward_lands = true;   // the inverse transform is a Cu-morphism
  bool mutually_inverse = true;
  bool order_iso = true;
  bool additive = true;
  bool library_agrees = true;   // the adjunction transforms of the bivariant module
  bool cu_equals_gen = true;    // every generalized Cu-morphism preserves way-below
  std::vector<std::string> failures;
};
BijectionReport check_closed_bijection(const Carrier& s, const Carrier& t, const Carrier& p);

// A finite positively ordered monoid with an auxiliary relation.
struct QTable {
  FiniteTable base;
  std::vector<char> prec;  // n*n, prec[i*n+j] iff i < j
};

// First violated axiom of an auxiliary relation, or nullopt.
std::optional<std::string> aux_relation_violation(const QTable& q);

struct TauResult {
  FiniteTable table;
  // Representative chain of each class; the class of [0] comes first.
  std::vector<std::vector<std::size_t>> chains;
  // Supremum of each class.
  std::vector<std::size_t> endpoint;
  std::size_t chains_enumerated = 0;
};
// tau(Q): all increasing chains v1 < ... < vm with vm < vm modulo mutual
// domination. PreconditionError for an invalid relation.
TauResult brute_tau(const QTable& q);
// Cu[S,T] with pointwise order and the closed-form auxiliary relation.
QTable morphism_qtable(const Carrier& s, const Carrier& t);

struct TauCheck {
  bool passed = true;
  std::size_t morphisms = 0;
  std::size_t classes = 0;
  bool prec_is_pointwise = true;
  bool endpoint_iso = true;      // tau(Cu[S,T]) -> [[S,T]] via the endpoint
  bool library_agrees = true;    // path_below in path_tau matches brute force
  std::size_t checked = 0;
  std::vector<std::string> failures;
};
TauCheck check_ihom_collapse(const Carrier& s, const Carrier& t);

struct ProbeReport {
  bool decided = false;
  bool holds = false;
  std::size_t checked = 0;
  std::string witness;
  std::string note;
};
// Whether the map [[S1,T1]] (x) [[S2,T2]] -> [[S1 (x) S2, T1 (x) T2]]
// induced by the external tensor product reflects the order on samples.
// Decided only for powers of extnat.
ProbeReport tensor_order_embedding_probe(const Carrier& s1, const Carrier& t1, const Carrier& s2,
                                         const Carrier& t2, std::size_t budget = 64);

enum class OracleCheck : std::uint8_t { Axioms, Bijection, Tau };
std::optional<OracleCheck> oracle_check_from_name(const std::string& s);

struct OracleEntry {
  std::string instance;
  bool passed = true;
  std::string detail;
};
struct OracleRun {
  std::size_t max_size = 0;
  std::string check;
  std::size_t carriers = 0;
  bool passed = true;
  std::vector<OracleEntry> entries;
};
// bijection runs over all triples, tau and axioms over pairs and carriers.
OracleRun run_oracle(std::size_t max_size, OracleCheck check);

}  // namespace cucalc
