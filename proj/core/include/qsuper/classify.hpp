#pragma once

#include "qsuper/algebra.hpp"
#include "qsuper/lusztig.hpp"
#include "qsuper/report.hpp"
#include "qsuper/roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qsuper {

// phi_a, phi' o phi_a, phi'' o phi_a, phi''' o phi_a
enum class PhiKind { Scale, Reverse, Swap, ReverseSwap };
std::string phi_kind_name(PhiKind k);

// Gram condition of the kind between tau^{d1} and tau^{d2}: (alpha_i, alpha_j) equals
// +-(alpha_{rho i}, alpha_{rho j}) with rho the identity or the reversal i -> m+n-i
bool gram_condition(const Groupoid& g, PhiKind k, int d1, int d2);
// first kind whose condition holds for graph-isomorphic diagrams
std::optional<PhiKind> iso_condition(const Groupoid& g, int d1, int d2);

struct IsoWitness {
  PhiKind kind = PhiKind::Scale;
  int d1 = 0, d2 = 0;
  std::vector<CycScalar> scale;
  AlgebraMorphism map, inverse;
  Report verification;
};

// unscaled kind map composed with phi_a; throws std::invalid_argument when the
// Gram condition fails. Runs the Hopf-morphism suite and marks the map verified.
IsoWitness build_phi(PhiKind kind, const std::vector<CycScalar>& a, int m, int n, int p, int d1, int d2);
// the kind map on generators alone, without the Gram precondition (order computations)
AlgebraMorphism phi_generator_map(PhiKind kind, int m, int n, int p, int d1, int d2);

// relations vanish, inverse composes to the identity, (phi (x) phi) Delta = Delta phi,
// eps phi = eps, phi S = S phi on every simple letter
Report verify_hopf_morphism(const AlgebraMorphism& f, const AlgebraMorphism& inverse);

std::optional<IsoWitness> hopf_iso_exists(int m, int n, int p, int d1, int d2);

struct IsoClasses {
  std::vector<std::vector<int>> classes;
  // true when no quantum witnesses exist for this rank (straightening tables ship for rank 2)
  bool diagram_level = false;
  Report report;
};
IsoClasses enumerate_iso_classes(int m, int n, int p);

struct AutomorphismDescriptor {
  int d = 0;
  std::string group;  // "Z/2Z x (Q(q)*)^r" and friends
  std::optional<PhiKind> extra;
};
AutomorphismDescriptor automorphism_group(int m, int n, int d);

// smallest n with f^n the identity on generators, 0 if none up to limit
int generator_order(const AlgebraMorphism& f, int limit);

// diagrams from tau^d under the S_m x S_n relabelling and optional reversal
std::vector<int> dynkin_orbit(const Groupoid& g, int d);

// symmetry/transitivity of the decision, orbit/class agreement, witness checks
Report verify_classification(int m, int n, int p);

}  // namespace qsuper
