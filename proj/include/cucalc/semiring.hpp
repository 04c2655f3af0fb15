#pragma once

// Cu-semirings: multiplication, the representation pi_R : R -> [[R,R]],
// its section eps_R, scalar actions, and the five solidity conditions.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cucalc/bivariant.hpp"

namespace cucalc {

enum class SemiringKind : std::uint8_t { ExtNat, PBar, MOne, Matrix, TruncHom, Endo };

struct CuSemiring {
  SemiringKind kind;
  std::string name;
  Carrier carrier;
  Bimap mul;
  Element unit;
  bool unit_compact = false;
  // Matrix: the size k of M_k(extnat). Endo: the carrier S of [[S,S]].
  std::size_t k = 1;
  std::optional<Carrier> base;
};

CuSemiring semiring_extnat();
CuSemiring semiring_pbar();
CuSemiring semiring_m1();
// M_k(extnat) on extnat^{k*k}, row-major.
CuSemiring semiring_matrix(std::size_t k);
CuSemiring semiring_trunchom();
// [[S,S]] with the composition product.
CuSemiring semiring_endo(const Carrier& s);
// "extnat", "pbar", "m1", "trunchom", "M<k>" or "M<k>(extnat)".
std::optional<CuSemiring> semiring_by_name(const std::string& name);

Element mul(const CuSemiring& r, const Element& a, const Element& b);

struct LawReport {
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;
};
// Associativity, two-sided unit, bilinearity, joint way-below preservation
// and commutativity (reported, not required) on the grid.
LawReport check_semiring_laws(const CuSemiring& r, std::size_t budget = 24);

// The closed-form space holding pi_R(r).
IHomSpacePtr pi_space(const CuSemiring& r);
// Class of a chain of left multiplications by r_l increasing to r.
IHomElem pi(const CuSemiring& r, const Element& a);
// The same class computed as (mu_R)_* of the unit map.
IHomElem pi_via_unit(const CuSemiring& r, const Element& a);
// sigma(x)(1_R).
Element eps(const CuSemiring& r, const IHomElem& x);

// Left R-action on [[S,T]] for R = extnat (needs a compact unit).
IHomElem scalar_act(const CuSemiring& r, const Element& a, const IHomElem& x);

enum class VerdictStatus : std::uint8_t { Holds, Fails, Undecided };
const char* verdict_name(VerdictStatus s);

struct Verdict {
  VerdictStatus status = VerdictStatus::Undecided;
  // "closed form", "grid", "implication" or "taken as given".
  std::string method;
  std::string basis;
  std::string witness;
};

// Conditions: (1) mu iso, (2) evaluation [[R,R]] (x) R -> R iso,
// (3) pi (x) id iso, (4) pi iso, (5) eps iso.
struct SolidReport {
  std::string semiring;
  std::array<Verdict, 5> conditions;
  // First violated implication of (1) <= (2) => (3) <= (4) <=> (5) and
  // (1) and (3) => (2), or nullopt.
  std::optional<std::string> implication_violation() const;
};

SolidReport solid_report(const CuSemiring& r);
std::string format_table(const SolidReport& rep);

// Checks 1 (x) a = a (x) 1 and commutativity on the grid; when mu is
// injective there, commutativity must hold.
struct CommutativityReport {
  std::optional<bool> mu_injective;  // nullopt without a closed-form R (x) R
  bool commutative = true;
  std::string witness;
  bool units_commute = true;
  bool consistent = true;
};
CommutativityReport commutativity_from_injectivity_probe(const CuSemiring& r);

struct StabilityReport {
  bool decided = true;
  bool passed = true;
  bool isomorphic = true;  // [[R,T]] = T
  std::vector<std::string> checks;
  std::vector<std::string> failures;
  std::string note;
};
// R = extnat: action laws on [[S,T]], alpha^* bijection, [[R,T]] = T.
// R = pbar: the negative case [[pbar,pbar]] = M1, which is not pbar.
StabilityReport stability_check(const CuSemiring& r, const Carrier& s, const Carrier& t);

// f(1 (x) a) <= g(1 (x) a) for all a iff f <= g, for generalized
// Cu-morphisms pbar (x) pbar -> pbar on the grid.
LawReport lemma_order_test_pbar();

struct SoftReport {
  bool passed = true;
  std::size_t soft_checked = 0;
  std::vector<std::string> failures;
};
SoftReport soft_preservation_check(const GenMorphism& f, std::size_t budget = 256);
// Image of pi_R on soft elements of R lies in the soft part of the ihom.
SoftReport soft_preservation_check(const CuSemiring& r, std::size_t budget = 256);

}  // namespace cucalc
