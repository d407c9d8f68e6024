#include "qsuper/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qsuper {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

// integer polynomial exact division a / b, b monic
std::vector<long> int_divide(std::vector<long> a, const std::vector<long>& b) {
  std::vector<long> q(a.size() - b.size() + 1, 0);
  const long lead = static_cast<long>(b.size()) - 1;
  for (long i = static_cast<long>(a.size()) - 1; i >= lead; --i) {
    long c = a[i];
    long shift = i - lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  return q;
}

std::vector<long> cyclotomic_coeffs(int n) {
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = int_divide(num, cyclotomic_coeffs(d));
  return num;
}

// quotient and remainder of a / b over Q
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  while (r.size() >= b.size() && !r.empty()) {
    Rational c = r.back() / b.back();
    std::size_t shift = r.size() - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    trim(r);
  }
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      while (n % f == 0) n /= f;
      result -= result / f;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicField::CyclotomicField(int p) : p_(p), degree_(euler_phi(p)) {
  auto phi = cyclotomic_coeffs(p);
  phi_.assign(phi.begin(), phi.end());
  // zeta^k reduced modulo Phi_p
  powers_.assign(p, std::vector<int>(degree_, 0));
  std::vector<int> cur(degree_, 0);
  cur[0] = 1;
  for (int k = 0; k < p; ++k) {
    powers_[k] = cur;
    // multiply by x and reduce
    std::vector<int> next(degree_, 0);
    int top = cur[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) next[i] = cur[i - 1];
    for (int i = 0; i < degree_; ++i) next[i] -= top * phi_[i];
    cur = next;
  }
}

const CyclotomicField& CyclotomicField::get(int p) {
  if (p < 3 || p % 2 == 0)
    throw ContextError("order of q must be odd and at least 3, got " + std::to_string(p));
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> fields;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = fields[p];
  if (!slot) slot.reset(new CyclotomicField(p));
  return *slot;
}

CycScalar::CycScalar(const CyclotomicField& f) : field_(&f), c_(f.degree()) {}

CycScalar::CycScalar(const CyclotomicField& f, const Rational& r) : field_(&f), c_(f.degree()) {
  c_[0] = r;
}

CycScalar CycScalar::zeta_power(const CyclotomicField& f, long n) {
  long k = ((n % f.p()) + f.p()) % f.p();
  CycScalar s(f);
  const auto& row = f.power_table()[k];
  for (int i = 0; i < f.degree(); ++i) s.c_[i] = row[i];
  return s;
}

int CycScalar::p() const {
  if (!field_) throw ContextError("scalar has no field context");
  return field_->p();
}

void CycScalar::adopt(const CycScalar& o) {
  if (field_ == o.field_) return;
  if (!o.field_) return;
  if (!field_) {
    field_ = o.field_;
    c_.assign(field_->degree(), Rational(0));
    return;
  }
  throw ContextError("mixed cyclotomic contexts: p=" + std::to_string(field_->p()) +
                     " and p=" + std::to_string(o.field_->p()));
}

bool CycScalar::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool CycScalar::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

bool CycScalar::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  adopt(o);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
  adopt(o);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycScalar& CycScalar::operator*=(const Rational& r) {
  for (auto& x : c_) x *= r;
  return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
  adopt(o);
  if (!field_) return *this;
  const int deg = field_->degree();
  const int p = field_->p();
  if (o.c_.empty()) {
    c_.assign(deg, Rational(0));
    return *this;
  }
  // cyclic convolution in Z[x]/(x^p - 1), then reduce each zeta^k
  std::vector<Rational> cyc(p);
  bool any = false;
  for (int i = 0; i < deg; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (sgn(o.c_[j]) == 0) continue;
      int k = (i + j) % p;
      cyc[k] += c_[i] * o.c_[j];
      any = true;
    }
  }
  std::vector<Rational> out(deg);
  if (any) {
    const auto& table = field_->power_table();
    for (int k = 0; k < p; ++k) {
      if (sgn(cyc[k]) == 0) continue;
      if (k < deg) {
        out[k] += cyc[k];
        continue;
      }
      const auto& row = table[k];
      for (int i = 0; i < deg; ++i)
        if (row[i] != 0) out[i] += cyc[k] * row[i];
    }
  }
  c_ = std::move(out);
  return *this;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_)
    throw ContextError("comparison across cyclotomic contexts");
  std::size_t n = std::max(a.c_.size(), b.c_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int sa = i < a.c_.size() ? sgn(a.c_[i]) : 0;
    int sb = i < b.c_.size() ? sgn(b.c_[i]) : 0;
    if (sa == 0 && sb == 0) continue;
    if (sa == 0 || sb == 0 || a.c_[i] != b.c_[i]) return false;
  }
  return true;
}

CycScalar CycScalar::inverse() const {
  if (!field_ || is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_p)");
  // extended Euclid: find u with a*u + v*Phi = 1
  Poly phi(field_->cyclotomic_poly().begin(), field_->cyclotomic_poly().end());
  Poly a = c_;
  trim(a);
  Poly r0 = phi, r1 = a;
  Poly s0, s1{Rational(1)};  // coefficients of a
  while (!r1.empty()) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_p is irreducible
  if (r0.size() != 1) throw DivisionByZero("non-invertible element in Q(zeta_p)");
  Rational inv_c = 1 / r0[0];
  Poly q, u;
  poly_divmod(s0, phi, q, u);
  CycScalar out(*field_);
  for (std::size_t i = 0; i < u.size(); ++i) out.c_[i] = u[i] * inv_c;
  return out;
}

CycScalar CycScalar::pow(long n) const {
  if (!field_) throw ContextError("scalar has no field context");
  CycScalar base = n < 0 ? inverse() : *this;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  CycScalar acc(*field_, 1);
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

CycScalar CycScalar::galois(long k) const {
  if (!field_) return *this;
  int p = field_->p();
  if (std::gcd(((k % p) + p) % p, static_cast<long>(p)) != 1)
    throw ContextError("Galois exponent must be coprime to p");
  CycScalar out(*field_);
  for (int i = 0; i < field_->degree(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    out += zeta_power(*field_, k * i) * c_[i];
  }
  return out;
}

std::string CycScalar::to_string() const {
  std::vector<std::string> terms;
  std::ostringstream os;
  int nonzero = 0;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) ++nonzero;
  if (nonzero == 0) return "0";
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    Rational v = c_[i];
    bool neg = sgn(v) < 0;
    if (neg) v = -v;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << v.get_str();
    } else {
      if (v != 1) os << v.get_str() << "*";
      os << "q";
      if (i > 1) os << "^" << i;
    }
  }
  std::string s = os.str();
  if (nonzero > 1) s = "(" + s + ")";
  return s;
}

std::size_t CycScalar::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& x : c_) {
    h ^= std::hash<std::string>()(x.get_str());
    h *= 1099511628211ull;
  }
  return h;
}

CycScalar cyc_add(const CycScalar& a, const CycScalar& b) { return a + b; }
CycScalar cyc_mul(const CycScalar& a, const CycScalar& b) { return a * b; }
CycScalar cyc_neg(const CycScalar& a) { return -a; }
CycScalar cyc_inv(const CycScalar& a) { return a.inverse(); }

CycScalar q_power(const CyclotomicField& f, long n) { return CycScalar::zeta_power(f, n); }

CycScalar q_int(const CyclotomicField& f, long n) {
  CycScalar out(f);
  long a = n < 0 ? -n : n;
  for (long j = 0; j < a; ++j) out += q_power(f, a - 1 - 2 * j);
  return n < 0 ? -out : out;
}

CycScalar paren_int(const CycScalar& t, long k) {
  CycScalar out(*t.field());
  CycScalar pw(*t.field(), 1);
  for (long j = 0; j < k; ++j) {
    out += pw;
    pw *= t;
  }
  return out;
}

CycScalar paren_factorial(const CycScalar& t, long n) {
  CycScalar out(*t.field(), 1);
  for (long k = 1; k <= n; ++k) out *= paren_int(t, k);
  return out;
}

CycScalar q_paren_factorial(const CyclotomicField& f, long n) {
  return paren_factorial(q_power(f, 1), n);
}

CycScalar q_binomial(long m, long n, const CycScalar& t) {
  CycScalar out(*t.field(), 1);
  for (long i = 1; i <= n; ++i) {
    CycScalar num = t.pow(m + i) - t.pow(-m - i);
    CycScalar den = t.pow(i) - t.pow(-i);
    out *= num * den.inverse();
  }
  return out;
}

}  // namespace qsuper
