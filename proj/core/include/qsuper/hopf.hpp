#pragma once

#include "qsuper/algebra.hpp"
#include "qsuper/lusztig.hpp"
#include "qsuper/report.hpp"
#include "qsuper/tensor.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace qsuper {

// Hopf superstructure given by images of the simple letters; composite letters
// follow from their q-bracket definitions, products multiplicatively, and the
// antipode as a super anti-homomorphism S(xy) = (-1)^{|x||y|} S(y) S(x).
class HopfStructure {
 public:
  HopfStructure() = default;
  // vectors indexed by letter; only simple e, f, k letters are read
  HopfStructure(AlgebraPtr a, std::vector<Tensor2> delta, std::vector<CycScalar> eps,
                std::vector<Element> antipode, std::string provenance);
  static HopfStructure standard(AlgebraPtr a);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::string& provenance() const { return provenance_; }
  const Tensor2& letter_coproduct(int l) const { return delta_[l]; }
  const CycScalar& letter_counit(int l) const { return eps_[l]; }
  const Element& letter_antipode(int l) const { return s_[l]; }

  Tensor2 coproduct(const Element& x) const;
  const Tensor2& coproduct_monomial(const Monomial& m) const;
  CycScalar counit(const Element& x) const;
  CycScalar counit_monomial(const Monomial& m) const;
  Element antipode(const Element& x) const;
  const Element& antipode_monomial(const Monomial& m) const;

  Tensor2 eval_free_coproduct(const FreePoly& f) const;
  CycScalar eval_free_counit(const FreePoly& f) const;
  Element eval_free_antipode(const FreePoly& f) const;

  // mu (S (x) id) and mu (id (x) S)
  Element left_antipode_contract(const Tensor2& t) const;
  Element right_antipode_contract(const Tensor2& t) const;
  Tensor2 opposite_coproduct(const Element& x) const { return coproduct(x).flip(); }

  // twist data carried by a type-1 twisted structure (U = mu (S (x) id)(J))
  std::optional<Element> twist_u, twist_u_inv;

 private:
  void fill_composites();

  AlgebraPtr alg_;
  std::vector<Tensor2> delta_;
  std::vector<CycScalar> eps_;
  std::vector<Element> s_;
  std::string provenance_;
  struct Cache {
    std::mutex mu;
    std::unordered_map<Monomial, std::unique_ptr<Tensor2>, MonomialHash> delta;
    std::unordered_map<Monomial, std::unique_ptr<Element>, MonomialHash> s;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// coassociativity, counit, antipode and relation checks on every letter and on
// `samples` seeded random elements; Delta(ab) = Delta(a)Delta(b) on random pairs
Report verify_hopf(const HopfStructure& h, int samples, std::uint64_t seed);

// same generator images for Delta, eps and S
Report compare_structures(const HopfStructure& a, const HopfStructure& b);

struct Twist {
  Tensor2 j, j_inv;
};

// (Delta (x) id)(J)(J (x) 1) = (id (x) Delta)(J)(1 (x) J), counit normalization,
// J J^{-1} = 1 (x) 1, evenness
Report twist1_cocycle_check(const Twist& t, const HopfStructure& h);
// Delta^J = J^{-1} Delta J, S^J = U^{-1} S U
HopfStructure twist1_apply(const Twist& t, const HopfStructure& h);
// transport along chi : V -> W with inverse chi_inv : W -> V
HopfStructure twist2_apply(const AlgebraMorphism& chi, const AlgebraMorphism& chi_inv,
                           const HopfStructure& h);

// inverse of the functor map on the edge (i, d)
AlgebraMorphism functor_edge_inverse(int m, int n, int p, int i, int d);
// J for the edge (i, d) of the functor: the reflection twist on generator arrows,
// (T^- (x) T^-)(J^{-1}) of the reverse arrow otherwise
Twist build_reflection_twist(int m, int n, int p, int i, int d);

// transports the standard structure of the source along the word (twist2 by the
// functor map, then twist1 by J) and compares with the terminal standard structure
Report groupoid_path_twist(int m, int n, int p, const GroupoidWord& w);

// Delta(g) = g (x) g, eps(g) = 1, S(g) = g^{-1} for every k-monomial
Report verify_group_likes(const HopfStructure& h);

// dim P_{1,g} = {c : Delta(c) = c (x) 1 + g (x) c} per k-monomial g, by weight-graded solves
struct SkewPrimitiveDims {
  Monomial g;
  std::string g_name;
  int dimension = 0;
  int expected = 0;
};
std::vector<SkewPrimitiveDims> skew_primitive_dimensions(const HopfStructure& h);
Report verify_skew_primitives(const HopfStructure& h);

}  // namespace qsuper
