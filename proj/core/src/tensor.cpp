#include "qsuper/tensor.hpp"

#include <stdexcept>

namespace qsuper {

namespace {

const Algebra* pick(const Algebra* a, const Algebra* b) {
  if (a && b && a != b) throw ContextError("tensors over different algebras");
  return a ? a : b;
}

}  // namespace

Tensor2 Tensor2::one(const Algebra& a) {
  Tensor2 t(&a);
  t.add_term(Monomial{}, Monomial{}, a.scalar(1));
  return t;
}

Tensor2 Tensor2::pure(const Element& x, const Element& y) {
  Tensor2 t(pick(x.algebra(), y.algebra()));
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) t.add_term(a, b, ca * cb);
  return t;
}

void Tensor2::add_term(const Monomial& a, const Monomial& b, const CycScalar& c) {
  if (c.is_zero()) return;
  auto [it, ins] = terms_.try_emplace(MonoPair{a, b}, c);
  if (ins) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Tensor2::add_scaled(const Tensor2& o, const CycScalar& c) {
  alg_ = pick(alg_, o.alg_);
  if (c.is_zero()) return;
  for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, v * c);
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  alg_ = pick(alg_, o.alg_);
  for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, v);
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
  alg_ = pick(alg_, o.alg_);
  for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, -v);
  return *this;
}

Tensor2& Tensor2::operator*=(const CycScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

Tensor2 operator*(const Tensor2& x, const Tensor2& y) {
  const Algebra* alg = pick(x.alg_, y.alg_);
  Tensor2 out(alg);
  if (!alg) return out;
  for (const auto& [ka, ca] : x.terms_) {
    int pb = alg->monomial_parity(ka.second);
    for (const auto& [kc, cc] : y.terms_) {
      CycScalar c = ca * cc;
      if (pb && alg->monomial_parity(kc.first)) c = -c;
      Element left = alg->mul_monomials(ka.first, kc.first);
      if (left.is_zero()) continue;
      Element right = alg->mul_monomials(ka.second, kc.second);
      for (const auto& [l, cl] : left.terms()) {
        CycScalar cl2 = cl * c;
        for (const auto& [r, cr] : right.terms()) out.add_term(l, r, cl2 * cr);
      }
    }
  }
  return out;
}

bool operator==(const Tensor2& a, const Tensor2& b) { return a.terms_ == b.terms_; }

Tensor2 Tensor2::flip() const {
  Tensor2 out(alg_);
  for (const auto& [k, v] : terms_) {
    bool neg = alg_->monomial_parity(k.first) && alg_->monomial_parity(k.second);
    out.add_term(k.second, k.first, neg ? -v : v);
  }
  return out;
}

int Tensor2::parity() const {
  int p = -2;
  for (const auto& [k, v] : terms_) {
    int t = (alg_->monomial_parity(k.first) + alg_->monomial_parity(k.second)) & 1;
    if (p == -2)
      p = t;
    else if (p != t)
      return -1;
  }
  return p == -2 ? 0 : p;
}

std::string Tensor2::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    std::string term = v.to_string() + "*" + alg_->render_monomial(k.first) + " (x) " +
                       alg_->render_monomial(k.second);
    if (v.is_one()) term = alg_->render_monomial(k.first) + " (x) " + alg_->render_monomial(k.second);
    if (first)
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------- Tensor3

Tensor3 Tensor3::one(const Algebra& a) {
  Tensor3 t(&a);
  t.add_term(Monomial{}, Monomial{}, Monomial{}, a.scalar(1));
  return t;
}

Tensor3 Tensor3::from12(const Tensor2& t) {
  Tensor3 out(t.algebra());
  for (const auto& [k, v] : t.terms()) out.add_term(k.first, k.second, Monomial{}, v);
  return out;
}

Tensor3 Tensor3::from23(const Tensor2& t) {
  Tensor3 out(t.algebra());
  for (const auto& [k, v] : t.terms()) out.add_term(Monomial{}, k.first, k.second, v);
  return out;
}

Tensor3 Tensor3::from13(const Tensor2& t) {
  Tensor3 out(t.algebra());
  for (const auto& [k, v] : t.terms()) out.add_term(k.first, Monomial{}, k.second, v);
  return out;
}

void Tensor3::add_term(const Monomial& a, const Monomial& b, const Monomial& c, const CycScalar& s) {
  if (s.is_zero()) return;
  auto [it, ins] = terms_.try_emplace(MonoTriple{a, b, c}, s);
  if (ins) return;
  it->second += s;
  if (it->second.is_zero()) terms_.erase(it);
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  alg_ = pick(alg_, o.alg_);
  for (const auto& [k, v] : o.terms_) add_term(k.a, k.b, k.c, v);
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  alg_ = pick(alg_, o.alg_);
  for (const auto& [k, v] : o.terms_) add_term(k.a, k.b, k.c, -v);
  return *this;
}

Tensor3 operator*(const Tensor3& x, const Tensor3& y) {
  const Algebra* alg = pick(x.alg_, y.alg_);
  Tensor3 out(alg);
  if (!alg) return out;
  for (const auto& [k1, c1] : x.terms_) {
    int pb = alg->monomial_parity(k1.b), pc = alg->monomial_parity(k1.c);
    for (const auto& [k2, c2] : y.terms_) {
      int qa = alg->monomial_parity(k2.a), qb = alg->monomial_parity(k2.b);
      int sg = (qa * (pb + pc) + qb * pc) & 1;
      CycScalar c = c1 * c2;
      if (sg) c = -c;
      Element ea = alg->mul_monomials(k1.a, k2.a);
      if (ea.is_zero()) continue;
      Element eb = alg->mul_monomials(k1.b, k2.b);
      if (eb.is_zero()) continue;
      Element ec = alg->mul_monomials(k1.c, k2.c);
      for (const auto& [ma, va] : ea.terms())
        for (const auto& [mb, vb] : eb.terms()) {
          CycScalar vab = c * va * vb;
          for (const auto& [mc, vc] : ec.terms()) out.add_term(ma, mb, mc, vab * vc);
        }
    }
  }
  return out;
}

bool operator==(const Tensor3& a, const Tensor3& b) { return a.terms_ == b.terms_; }

std::string Tensor3::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, v] : terms_) {
    if (!out.empty()) out += " + ";
    out += v.to_string() + "*" + alg_->render_monomial(k.a) + " (x) " + alg_->render_monomial(k.b) +
           " (x) " + alg_->render_monomial(k.c);
  }
  return out;
}

// ---------------------------------------------------------------- maps

Tensor2 map_tensor(const Tensor2& t, const MonoMap& f, const MonoMap& g, const Algebra& target) {
  Tensor2 out(&target);
  for (const auto& [k, v] : t.terms()) out.add_scaled(Tensor2::pure(f(k.first), g(k.second)), v);
  return out;
}

Tensor3 map_left(const Tensor2& t, const MonoMap2& D) {
  Tensor3 out(t.algebra());
  for (const auto& [k, v] : t.terms()) {
    Tensor2 d = D(k.first);
    for (const auto& [kd, vd] : d.terms()) out.add_term(kd.first, kd.second, k.second, v * vd);
  }
  return out;
}

Tensor3 map_right(const Tensor2& t, const MonoMap2& D) {
  Tensor3 out(t.algebra());
  for (const auto& [k, v] : t.terms()) {
    Tensor2 d = D(k.second);
    for (const auto& [kd, vd] : d.terms()) out.add_term(k.first, kd.first, kd.second, v * vd);
  }
  return out;
}

Element contract_left(const Tensor2& t, const std::function<CycScalar(const Monomial&)>& eps) {
  Element out(t.algebra());
  for (const auto& [k, v] : t.terms()) {
    CycScalar e = eps(k.first);
    if (!e.is_zero()) out.add_term(k.second, v * e);
  }
  return out;
}

Element contract_right(const Tensor2& t, const std::function<CycScalar(const Monomial&)>& eps) {
  Element out(t.algebra());
  for (const auto& [k, v] : t.terms()) {
    CycScalar e = eps(k.second);
    if (!e.is_zero()) out.add_term(k.first, v * e);
  }
  return out;
}

Element multiply_out(const Tensor2& t, const MonoMap& f, const MonoMap& g) {
  const Algebra* alg = t.algebra();
  Element out(alg);
  for (const auto& [k, v] : t.terms()) out.add_scaled(alg->multiply(f(k.first), g(k.second)), v);
  return out;
}

Tensor2 q_exp(const Tensor2& x, const CycScalar& t, int order) {
  const Algebra& a = *x.algebra();
  Tensor2 out = Tensor2::one(a);
  Tensor2 power = Tensor2::one(a);
  CycScalar fact = a.scalar(1);
  for (int n = 1; n < order; ++n) {
    power = power * x;
    fact *= paren_int(t, n);
    if (fact.is_zero()) throw DivisionByZero("(n)_t! vanishes in q-exponential");
    out.add_scaled(power, fact.inverse());
  }
  return out;
}

int nilpotency_order(const Tensor2& x, int limit) {
  Tensor2 power = Tensor2::one(*x.algebra());
  for (int n = 1; n <= limit; ++n) {
    power = power * x;
    if (power.is_zero()) return n;
  }
  return 0;
}

}  // namespace qsuper
