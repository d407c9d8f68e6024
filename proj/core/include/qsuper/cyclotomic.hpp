#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsuper {

using Rational = mpq_class;

struct ContextError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Q(zeta_p) realized as Q[x]/Phi_p(x). Fields are interned per p, so
// scalars can compare contexts by pointer.
class CyclotomicField {
 public:
  static const CyclotomicField& get(int p);

  int p() const { return p_; }
  int degree() const { return degree_; }
  // coordinates of zeta^k, 0 <= k < p, in the basis 1, zeta, ..., zeta^{degree-1}
  const std::vector<std::vector<int>>& power_table() const { return powers_; }
  const std::vector<int>& cyclotomic_poly() const { return phi_; }

 private:
  explicit CyclotomicField(int p);
  int p_;
  int degree_;
  std::vector<int> phi_;  // coefficients of Phi_p, low degree first
  std::vector<std::vector<int>> powers_;
};

class CycScalar {
 public:
  CycScalar() = default;  // detached zero; adopts a field on first mixed op
  explicit CycScalar(const CyclotomicField& f);
  CycScalar(const CyclotomicField& f, const Rational& r);
  CycScalar(const CyclotomicField& f, long r) : CycScalar(f, Rational(r)) {}

  static CycScalar zeta_power(const CyclotomicField& f, long n);

  const CyclotomicField* field() const { return field_; }
  int p() const;
  const std::vector<Rational>& coords() const { return c_; }
  std::vector<Rational>& mutable_coords() { return c_; }

  bool is_zero() const;
  bool is_one() const;
  // true if the value is r * zeta^k for a rational r and some k
  bool is_rational() const;

  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar& operator*=(const Rational& r);

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
  friend CycScalar operator*(CycScalar a, const Rational& r) { return a *= r; }
  friend bool operator==(const CycScalar& a, const CycScalar& b);
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  CycScalar inverse() const;
  CycScalar pow(long n) const;

  // Galois action zeta -> zeta^k, gcd(k,p) = 1
  CycScalar galois(long k) const;

  // Laurent-polynomial rendering in q, e.g. "(1/3 - 2/3*q)"; parses back
  std::string to_string() const;
  std::size_t hash() const;

 private:
  void adopt(const CycScalar& o);
  const CyclotomicField* field_ = nullptr;
  std::vector<Rational> c_;
};

CycScalar cyc_add(const CycScalar& a, const CycScalar& b);
CycScalar cyc_mul(const CycScalar& a, const CycScalar& b);
CycScalar cyc_neg(const CycScalar& a);
CycScalar cyc_inv(const CycScalar& a);

// q-combinatorics at q = zeta_p
CycScalar q_power(const CyclotomicField& f, long n);
// [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}
CycScalar q_int(const CyclotomicField& f, long n);
// (k)_t = 1 + t + ... + t^{k-1}
CycScalar paren_int(const CycScalar& t, long k);
// (n)_t! = (1)_t (2)_t ... (n)_t
CycScalar paren_factorial(const CycScalar& t, long n);
CycScalar q_paren_factorial(const CyclotomicField& f, long n);
// product formula prod_{i=1}^n (t^{m+i} - t^{-m-i}) / (t^i - t^{-i})
CycScalar q_binomial(long m, long n, const CycScalar& t);

int euler_phi(int n);

}  // namespace qsuper
