#pragma once

#include "qsuper/cyclotomic.hpp"
#include "qsuper/report.hpp"
#include "qsuper/roots.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qsuper::classical {

// basis order (h1, h2, e1, f1, e2, f2, e3, f3); e3 = [e1,e2], f3 = [f1,f2]
inline constexpr int kDim = 8;
enum Basis : int { H1 = 0, H2, E1, F1, E2, F2, E3, F3 };
const char* basis_name(int k);

using Matrix3 = std::array<std::array<Rational, 3>, 3>;
using Vec8 = std::array<Rational, kDim>;
using Tensor8 = std::array<std::array<Rational, kDim>, kDim>;
using Tensor8x3 = std::vector<Rational>;  // kDim^3, index (a*8 + b)*8 + c

struct LieElement {
  int d = 1;  // diagram whose Chevalley basis the coordinates refer to
  Vec8 coords{};
  // 0 even, 1 odd, -1 mixed; zero counts as even
  int parity(const std::vector<int>& basis_parity) const;
  bool is_zero() const;
  friend bool operator==(const LieElement& a, const LieElement& b) {
    return a.d == b.d && a.coords == b.coords;
  }
};

struct CoTensor {
  int d = 1;
  Tensor8 t{};
  bool is_zero() const;
  friend bool operator==(const CoTensor& a, const CoTensor& b) { return a.d == b.d && a.t == b.t; }
};

enum class LVariant { L, LMinus, LInverse };

// Koszul: x.(a (x) b) = [x,a] (x) b + (-1)^{|x||a|} a (x) [x,b] and
//   delta([x,y]) = x.delta(y) - (-1)^{|x||y|} y.delta(x).
// Literal: the same expressions with every sign factor dropped.
enum class CocycleSign { Koszul, Literal };

// Generator-image table between g(A_{d1}) and g(A_{d2}); images of all 8
// basis elements in target coordinates.
struct LieMap {
  int source = 1;
  int target = 1;
  std::array<LieElement, kDim> images;
  std::string label;
};

// sl(2|1) with the Chevalley bases of all six diagrams realized inside 3x3
// supermatrices (grading even, even, odd).
class Sl21 {
 public:
  Sl21();

  const Groupoid& groupoid() const { return g_; }
  const std::vector<int>& parities(int d) const { return parity_[d - 1]; }
  const Matrix3& basis_matrix(int d, int k) const { return basis_[d - 1][k]; }

  LieElement basis(int d, int k) const;
  LieElement from_matrix(int d, const Matrix3& m) const;
  Matrix3 to_matrix(const LieElement& x) const;
  LieElement bracket(const LieElement& x, const LieElement& y) const;
  // structure constant table entry [b_a, b_b]
  const LieElement& structure(int d, int a, int b) const { return struct_[d - 1][a][b]; }

  CoTensor cobracket(const LieElement& x) const;
  const CoTensor& cobracket_basis(int d, int k) const { return cobr_[d - 1][k]; }
  // x . (a (x) b) = [x,a] (x) b + (-1)^{|x||a|} a (x) [x,b], x a basis element
  CoTensor act(int d, int k, const CoTensor& t, CocycleSign s = CocycleSign::Koszul) const;
  // generator values plus e3, f3 extended by the cocycle rule
  std::array<CoTensor, kDim> cobracket_table(int d, CocycleSign s) const;
  CoTensor flip(const CoTensor& t) const;

  Report verify_superbialgebra(int d) const;
  // same checks for an externally supplied cobracket table (negative controls)
  Report verify_superbialgebra(int d, const std::array<CoTensor, kDim>& table,
                               CocycleSign s = CocycleSign::Koszul) const;

  LieMap l_map(int i, int d, LVariant v) const;
  LieMap compose(const LieMap& second, const LieMap& first) const;
  LieMap identity(int d) const;
  LieElement apply(const LieMap& f, const LieElement& x) const;
  CoTensor apply2(const LieMap& f, const CoTensor& t) const;
  bool is_identity(const LieMap& f) const;
  Report verify_homomorphism(const LieMap& f) const;
  // bracket-preserving and (f (x) f) delta = delta f on the basis
  Report verify_bialgebra_morphism(const LieMap& f) const;
  Report verify_l_braid() const;

  // map sending generator i of d1 to generator perm[i] of d2
  std::optional<LieMap> generator_map(int d1, int d2, bool reversed) const;

  // dimension of the g_1 (x) g_1 component of delta(g_0); preserved by every
  // even superbialgebra isomorphism
  int odd_square_rank(int d) const;

  struct Obstruction {
    int source = 1;
    int target = 3;
    LieMap phi;              // Lie superalgebra isomorphism along a groupoid path
    CoTensor lhs;            // delta_target(phi(e_1))
    CoTensor rhs;            // (phi (x) phi) delta_source(e_1)
  };
  Obstruction obstruction(int source, int target) const;

  struct IsoResult {
    std::vector<std::vector<int>> classes;
    Report report;
  };
  IsoResult superbialgebra_iso_classes() const;

  std::string to_string(const LieElement& x) const;
  std::string to_string(const CoTensor& t) const;

 private:
  Groupoid g_;
  std::vector<std::vector<int>> parity_;
  std::vector<std::array<Matrix3, kDim>> basis_;
  std::vector<std::vector<std::vector<Rational>>> solve_;  // 8x9 left inverse
  std::vector<std::array<std::array<LieElement, kDim>, kDim>> struct_;
  std::vector<std::array<CoTensor, kDim>> cobr_;

  CoTensor cobracket_with(const std::array<CoTensor, kDim>& table, const LieElement& x) const;
};

}  // namespace qsuper::classical
