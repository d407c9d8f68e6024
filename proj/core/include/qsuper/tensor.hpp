#pragma once

#include "qsuper/algebra.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>

namespace qsuper {

using MonoPair = std::pair<Monomial, Monomial>;
struct MonoTriple {
  Monomial a, b, c;
  friend bool operator==(const MonoTriple&, const MonoTriple&) = default;
  friend auto operator<=>(const MonoTriple&, const MonoTriple&) = default;
};

// element of U (x) U with (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd
class Tensor2 {
 public:
  Tensor2() = default;
  explicit Tensor2(const Algebra* a) : alg_(a) {}
  static Tensor2 one(const Algebra& a);
  static Tensor2 pure(const Element& x, const Element& y);

  const Algebra* algebra() const { return alg_; }
  const std::map<MonoPair, CycScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& a, const Monomial& b, const CycScalar& c);
  void add_scaled(const Tensor2& o, const CycScalar& c);
  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator-=(const Tensor2& o);
  Tensor2& operator*=(const CycScalar& c);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend Tensor2 operator*(Tensor2 a, const CycScalar& c) { return a *= c; }
  friend Tensor2 operator*(const Tensor2& a, const Tensor2& b);
  friend bool operator==(const Tensor2& a, const Tensor2& b);

  // tau(a (x) b) = (-1)^{|a||b|} b (x) a
  Tensor2 flip() const;
  // 0 even, 1 odd, -1 mixed
  int parity() const;
  std::string to_string() const;

 private:
  const Algebra* alg_ = nullptr;
  std::map<MonoPair, CycScalar> terms_;
};

class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(const Algebra* a) : alg_(a) {}
  static Tensor3 one(const Algebra& a);
  // x (x) 1 and 1 (x) x style embeddings of a 2-tensor
  static Tensor3 from12(const Tensor2& t);
  static Tensor3 from23(const Tensor2& t);
  static Tensor3 from13(const Tensor2& t);

  const Algebra* algebra() const { return alg_; }
  const std::map<MonoTriple, CycScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& a, const Monomial& b, const Monomial& c, const CycScalar& s);
  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(const Tensor3& a, const Tensor3& b);
  friend bool operator==(const Tensor3& a, const Tensor3& b);
  std::string to_string() const;

 private:
  const Algebra* alg_ = nullptr;
  std::map<MonoTriple, CycScalar> terms_;
};

// even linear maps on monomials, extended to tensors without signs
using MonoMap = std::function<Element(const Monomial&)>;
using MonoMap2 = std::function<Tensor2(const Monomial&)>;

Tensor2 map_tensor(const Tensor2& t, const MonoMap& f, const MonoMap& g, const Algebra& target);
// (D (x) id)(t) and (id (x) D)(t) for an even map D: U -> U (x) U
Tensor3 map_left(const Tensor2& t, const MonoMap2& D);
Tensor3 map_right(const Tensor2& t, const MonoMap2& D);
// (eps (x) id), (id (x) eps)
Element contract_left(const Tensor2& t, const std::function<CycScalar(const Monomial&)>& eps);
Element contract_right(const Tensor2& t, const std::function<CycScalar(const Monomial&)>& eps);
// mu (f (x) g)
Element multiply_out(const Tensor2& t, const MonoMap& f, const MonoMap& g);

// exp_t(x) = sum_{n < order} x^n / (n)_t!, x nilpotent of the given order
Tensor2 q_exp(const Tensor2& x, const CycScalar& t, int order);
// smallest n <= limit with x^n = 0, or 0 if none
int nilpotency_order(const Tensor2& x, int limit);

}  // namespace qsuper
