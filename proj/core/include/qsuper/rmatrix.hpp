#pragma once

#include "qsuper/algebra.hpp"
#include "qsuper/hopf.hpp"
#include "qsuper/report.hpp"
#include "qsuper/tensor.hpp"

#include <string>
#include <vector>

namespace qsuper {

struct RMatrix {
  Tensor2 value, inverse;
  int d = 1;
  std::string provenance;
};

// p^{-2} sum q^{i1(2 i2 - j2) - j1 i2} k1^{i2} k2^{j2} (x) k1^{i1} k2^{j1} on U^1 of sl(2|1)
Tensor2 build_k(int p);
Tensor2 build_k_inverse(int p);
// the four exp_{q^2} factors of R-tilde, in product order
std::vector<Tensor2> rtilde_factors(int p);
RMatrix build_rbar1(int p);

struct TransportedR {
  Tensor2 transported;          // (T (x) T)(R1)
  Tensor2 displayed_rtilde;     // closed-form R-tilde^{T}
  Tensor2 displayed_k;          // closed-form K^{T}
  std::vector<Tensor2> transported_factors, displayed_factors;
  Tensor2 transported_k;
  RMatrix rbar3;                // tau(J^{-1}) (T (x) T)(R1) J
  Tensor2 rbar3_displayed;      // tau(J^{-1}) R-tilde^{T} J K^{T}
};
TransportedR build_rbar3(int p);
// factor-wise and total equality of (T (x) T)(R1) with the closed forms
Report verify_transport(const TransportedR& t);
// the variant with J moved past K^T; it differs from R3 (reported, not assumed)
Report verify_commuted_display(const TransportedR& t);

// exp_t(x) with its inverse exp_{t^{-1}}(-x); order from the nilpotency certificate
struct QExp {
  Tensor2 value, inverse;
  int order = 0;
};
QExp q_exp_factor(const Tensor2& x, const CycScalar& t);

// R R^{-1} = 1, (eps (x) id) R = (id (x) eps) R = 1, evenness
Report verify_r_basic(const RMatrix& r, const HopfStructure& h);
// Delta^op(x) R = R Delta(x) on every simple letter
Report verify_quasi_cocommutativity(const RMatrix& r, const HopfStructure& h);
// (Delta (x) id) R = R13 R23, (id (x) Delta) R = R13 R12, and YBE in U^{(x)3}
Report verify_hexagons(const RMatrix& r, const HopfStructure& h);

// square matrices over Q(zeta_p)
struct Matrix {
  int n = 0;
  std::vector<CycScalar> a;
  Matrix() = default;
  Matrix(int size, const CyclotomicField& f);
  static Matrix identity(int size, const CyclotomicField& f);
  CycScalar& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const CycScalar& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator+(Matrix x, const Matrix& y);
  friend Matrix operator-(Matrix x, const Matrix& y);
  Matrix scaled(const CycScalar& c) const;
  friend bool operator==(const Matrix& x, const Matrix& y) { return x.a == y.a; }
  bool is_zero() const;
  std::string to_string() const;
};

// vector representation: e_i -> E_{a,b}, f_i -> s_i E_{b,a}, k_i -> diag q^{(alpha_i, eps_bar_c)}
// for tau_i = eps_bar_a - eps_bar_b; signs s_i found by the relation oracle
class MatrixRep {
 public:
  static MatrixRep fundamental(AlgebraPtr a);
  const AlgebraPtr& algebra() const { return alg_; }
  int dim() const { return static_cast<int>(grading_.size()); }
  const std::vector<int>& grading() const { return grading_; }
  const std::vector<int>& f_signs() const { return f_signs_; }
  const Matrix& letter(int l) const { return letters_[l]; }
  Matrix monomial(const Monomial& m) const;
  Matrix element(const Element& x) const;
  // Koszul action on V (x) V and V (x) V (x) V
  Matrix tensor2(const Tensor2& t) const;
  Matrix tensor3(const Tensor3& t) const;
  Report verify_relations() const;

 private:
  AlgebraPtr alg_;
  std::vector<int> grading_;
  std::vector<int> f_signs_;
  std::vector<Matrix> letters_;
};

Report verify_ybe_in_rep(const RMatrix& r, const MatrixRep& rep);

}  // namespace qsuper
