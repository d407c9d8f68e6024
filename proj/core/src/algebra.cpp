#include "qsuper/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qsuper {

bool Monomial::is_one() const {
  for (auto x : e)
    if (x) return false;
  return true;
}

int Monomial::degree() const {
  int s = 0;
  for (auto x : e) s += x;
  return s;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : m.e) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------- Element

void Element::add_term(const Monomial& m, const CycScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Element::add_scaled(const Element& o, const CycScalar& c) {
  if (!alg_) alg_ = o.alg_;
  if (o.alg_ && alg_ != o.alg_) throw ContextError("elements of different algebras");
  if (c.is_zero()) return;
  for (const auto& [m, v] : o.terms_) add_term(m, v * c);
}

CycScalar Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  if (it != terms_.end()) return it->second;
  return alg_ ? alg_->scalar(0) : CycScalar();
}

Element& Element::operator+=(const Element& o) {
  if (!alg_) alg_ = o.alg_;
  if (o.alg_ && alg_ != o.alg_) throw ContextError("elements of different algebras");
  for (const auto& [m, v] : o.terms_) add_term(m, v);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (!alg_) alg_ = o.alg_;
  if (o.alg_ && alg_ != o.alg_) throw ContextError("elements of different algebras");
  for (const auto& [m, v] : o.terms_) add_term(m, -v);
  return *this;
}

Element& Element::operator*=(const CycScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

Element operator*(const Element& a, const Element& b) {
  const Algebra* alg = a.alg_ ? a.alg_ : b.alg_;
  if (!alg) return Element();
  return alg->multiply(a, b);
}

bool operator==(const Element& a, const Element& b) {
  if (a.alg_ && b.alg_ && a.alg_ != b.alg_) return false;
  return a.terms_ == b.terms_;
}

int Element::parity() const {
  if (terms_.empty()) return 0;
  int p = -2;
  for (const auto& [m, v] : terms_) {
    int q = alg_->monomial_parity(m);
    if (p == -2)
      p = q;
    else if (p != q)
      return -1;
  }
  return p;
}

std::string Element::to_string() const { return alg_ ? alg_->render(*this) : "0"; }

// ---------------------------------------------------------------- Algebra

namespace {

std::vector<int> unit(int rank, int i) {
  std::vector<int> v(rank, 0);
  v[i] = 1;
  return v;
}

FreePoly free_mul(const FreePoly& a, const FreePoly& b) {
  FreePoly r;
  for (const auto& x : a.terms)
    for (const auto& y : b.terms) {
      FreeTerm t;
      t.coeff = x.coeff * y.coeff;
      t.letters = x.letters;
      t.letters.insert(t.letters.end(), y.letters.begin(), y.letters.end());
      r.terms.push_back(std::move(t));
    }
  return r;
}

FreePoly free_lin(const FreePoly& a, const CycScalar& ca, const FreePoly& b, const CycScalar& cb) {
  FreePoly r;
  for (const auto& x : a.terms) r.terms.push_back({x.coeff * ca, x.letters});
  for (const auto& y : b.terms) r.terms.push_back({y.coeff * cb, y.letters});
  return r;
}

}  // namespace

std::shared_ptr<const Algebra> Algebra::get(int m, int n, int p, int d) {
  static std::mutex mu;
  static std::map<std::array<int, 4>, std::shared_ptr<const Algebra>> registry;
  std::array<int, 4> key{m, n, p, d};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second;
  }
  auto a = std::make_shared<const Algebra>(m, n, p, d, nullptr);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = registry.emplace(key, a);
  return it->second;
}

std::shared_ptr<const Algebra> Algebra::build_edited(int m, int n, int p, int d,
                                                     const RuleEditor& edit) {
  return std::make_shared<const Algebra>(m, n, p, d, &edit);
}

namespace {

std::shared_ptr<const Groupoid> shared_groupoid(int m, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const Groupoid>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{m, n}];
  if (!slot) slot = std::make_shared<const Groupoid>(enumerate_groupoid(m, n));
  return slot;
}

}  // namespace

Algebra::Algebra(int m, int n, int p, int d, const RuleEditor* edit)
    : dims_{m, n}, p_(p), d_(d), field_(&CyclotomicField::get(p)) {
  require_supported(dims_);
  groupoid_ = shared_groupoid(m, n);
  if (d < 1 || d > groupoid_->count())
    throw std::invalid_argument("diagram id " + std::to_string(d) + " out of range 1.." +
                                std::to_string(groupoid_->count()));
  CycScalar qq = q(1) - q(-1);
  inv_qq_ = qq.inverse();
  build_letters();
  build_definitions();
  build_rules(edit);
}

void Algebra::build_letters() {
  const int r = rank();
  if (2 * (r * (r + 1) / 2) + r > kMaxLetters)
    throw UnsupportedConfiguration("rank too large for the monomial layout");
  const auto& dg = diagram();
  // positive roots alpha_j + ... + alpha_i ordered by (j, i)
  for (int j = 0; j < r; ++j)
    for (int i = j; i < r; ++i) {
      RootInfo ri;
      ri.coords.assign(r, 0);
      ri.weight = Weight::zero(dims_.size());
      for (int t = j; t <= i; ++t) {
        ri.coords[t] = 1;
        ri.weight += dg.tau[t];
        ri.simple_path.push_back(t);
      }
      ri.parity = root_parity(dims_, ri.weight);
      ri.norm = bilinear_form(dims_, ri.weight, ri.weight);
      roots_.push_back(std::move(ri));
    }
  const int nr = static_cast<int>(roots_.size());
  e_of_root_.assign(nr, -1);
  f_of_root_.assign(nr, -1);
  simple_root_.assign(r, -1);
  for (int b = 0; b < nr; ++b)
    if (roots_[b].simple_path.size() == 1) simple_root_[roots_[b].simple_path[0]] = b;

  auto root_name = [&](int b) {
    std::string s;
    for (int t : roots_[b].simple_path) s += std::to_string(t + 1);
    return s;
  };
  auto root_letter = [&](int b, LetterKind kind) {
    LetterInfo li;
    li.kind = kind;
    li.root = b;
    li.simple = roots_[b].simple_path.size() == 1 ? roots_[b].simple_path[0] : -1;
    li.parity = roots_[b].parity;
    li.weight = roots_[b].coords;
    if (kind == LetterKind::F)
      for (auto& w : li.weight) w = -w;
    li.name = std::string(kind == LetterKind::E ? "e" : "f") + root_name(b);
    li.bound = li.parity ? 2 : p_;
    li.imposed_power = li.parity == 0 && li.simple < 0;
    return li;
  };
  for (int b = nr - 1; b >= 0; --b) {
    f_of_root_[b] = static_cast<int>(letters_.size());
    letters_.push_back(root_letter(b, LetterKind::F));
  }
  for (int i = 0; i < r; ++i) {
    LetterInfo li;
    li.kind = LetterKind::K;
    li.simple = i;
    li.parity = 0;
    li.weight.assign(r, 0);
    li.name = "k" + std::to_string(i + 1);
    li.bound = p_;
    li.power_is_one = true;
    k_of_simple_.push_back(static_cast<int>(letters_.size()));
    letters_.push_back(std::move(li));
  }
  for (int b = 0; b < nr; ++b) {
    e_of_root_[b] = static_cast<int>(letters_.size());
    letters_.push_back(root_letter(b, LetterKind::E));
  }
}

void Algebra::build_definitions() {
  definitions_.assign(letters_.size(), FreePoly{});
  for (int l = 0; l < letter_count(); ++l) {
    definitions_[l].name = letters_[l].name;
    if (letters_[l].kind == LetterKind::K || letters_[l].simple >= 0)
      definitions_[l].terms.push_back({scalar(1), {l}});
  }
  // e_{[j..i]} = [e_j, e_{[j+1..i]}]_{q^{(alpha_j, rest)}},
  // f_{[j..i]} = [f_{[j+1..i]}, f_j]_{q^{-(rest, alpha_j)}}; shorter roots first
  std::vector<int> order(roots_.size());
  for (std::size_t b = 0; b < roots_.size(); ++b) order[b] = static_cast<int>(b);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return roots_[a].simple_path.size() < roots_[b].simple_path.size();
  });
  for (int b : order) {
    const auto& path = roots_[b].simple_path;
    if (path.size() == 1) continue;
    int j = path[0];
    std::vector<int> rest(roots_[b].coords);
    rest[j] = 0;
    int rb = root_index(rest);
    int n = form(unit(rank(), j), rest);
    int sign = ((simple_parity(j) * roots_[rb].parity) % 2 != 0) ? -1 : 1;
    const auto& ej = definitions_[e_letter(simple_root(j))];
    const auto& er = definitions_[e_letter(rb)];
    definitions_[e_letter(b)] = free_lin(free_mul(ej, er), scalar(1), free_mul(er, ej), q(n) * scalar(-sign));
    definitions_[e_letter(b)].name = letters_[e_letter(b)].name;
    const auto& fj = definitions_[f_letter(simple_root(j))];
    const auto& fr = definitions_[f_letter(rb)];
    definitions_[f_letter(b)] = free_lin(free_mul(fr, fj), scalar(1), free_mul(fj, fr), q(-n) * scalar(-sign));
    definitions_[f_letter(b)].name = letters_[f_letter(b)].name;
  }
}

int Algebra::root_index(const std::vector<int>& coords) const {
  for (std::size_t b = 0; b < roots_.size(); ++b)
    if (roots_[b].coords == coords) return static_cast<int>(b);
  return -1;
}

int Algebra::form(const std::vector<int>& a, const std::vector<int>& b) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += a[i] * b[j] * gram(i, j);
  return s;
}

int Algebra::generator_letter(char kind, int i) const {
  if (i < 0 || i >= rank()) throw std::invalid_argument("generator index out of range");
  switch (kind) {
    case 'e': return e_letter(simple_root(i));
    case 'f': return f_letter(simple_root(i));
    case 'k': return k_letter(i);
    default: throw std::invalid_argument(std::string("unknown generator kind ") + kind);
  }
}

Element Algebra::one() const { return monomial(Monomial{}, scalar(1)); }

Element Algebra::monomial(const Monomial& m, const CycScalar& c) const {
  Element e(this);
  e.add_term(m, c);
  return e;
}

Element Algebra::raw_letter(int l) const {
  Monomial m;
  m.e[l] = 1;
  return monomial(m, scalar(1));
}

Element Algebra::letter(int l, long exp) const {
  if (l < 0 || l >= letter_count()) throw std::invalid_argument("unknown letter");
  return normal_form({{l, exp}}, scalar(1));
}

Element Algebra::element_from_generator(char kind, int i, long exp) const {
  return letter(generator_letter(kind, i - 1), exp);
}

void Algebra::build_rules(const RuleEditor* edit) {
  if (rank() != 2)
    throw UnsupportedConfiguration("straightening tables ship for rank 2 only (sl(2|1), sl(1|2))");
  const int E1 = e_letter(0), E3 = e_letter(1), E2 = e_letter(2);
  const int F1 = f_letter(0), F3 = f_letter(1), F2 = f_letter(2);
  const int a11 = gram(0, 0), a12 = gram(0, 1), a22 = gram(1, 1);
  const int p1 = roots_[0].parity, p3 = roots_[1].parity, p2 = roots_[2].parity;
  const long s = ((p1 * p2) % 2 != 0) ? -1 : 1;
  auto sgn = [&](int a, int b) { return ((a * b) % 2 != 0) ? -1L : 1L; };
  auto mono = [&](std::initializer_list<int> ls) {
    Monomial m;
    for (int l : ls) m.e[l]++;
    return m;
  };
  auto put = [&](int x, int y, Element rhs, const char* src) {
    rules_[{x, y}] = std::move(rhs);
    rule_source_[{x, y}] = src;
  };

  const int K1 = k_letter(0), K2 = k_letter(1);
  put(K2, K1, monomial(mono({K1, K2}), scalar(1)), "relation");
  for (int j = 0; j < 2; ++j) {
    int kj = k_letter(j);
    for (int b = 0; b < 3; ++b) {
      int c = form(unit(2, j), roots_[b].coords);
      put(kj, f_letter(b), monomial(mono({f_letter(b), kj}), q(-c)), "relation");
      put(e_letter(b), kj, monomial(mono({kj, e_letter(b)}), q(-c)), "relation");
    }
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      int ei = e_letter(simple_root(i)), fj = f_letter(simple_root(j));
      Element rhs = monomial(mono({fj, ei}), scalar(sgn(simple_parity(i), simple_parity(j))));
      if (i == j) {
        Monomial k1;
        k1.e[k_letter(i)] = 1;
        Monomial km;
        km.e[k_letter(i)] = static_cast<std::uint8_t>(p_ - 1);
        rhs.add_term(k1, inv_qq_);
        rhs.add_term(km, -inv_qq_);
      }
      put(ei, fj, std::move(rhs), "relation");
    }

  // e-e: e2 e1 from the definition of e12, the others from Serre or nilpotency
  {
    Element rhs = monomial(mono({E1, E2}), q(-a12) * scalar(s));
    rhs.add_term(mono({E3}), -(q(-a12) * scalar(s)));
    put(E2, E1, std::move(rhs), "definition");
    put(E3, E1, monomial(mono({E1, E3}), q(-(a11 + a12)) * scalar(sgn(p1, p3))), "serre");
    put(E2, E3, monomial(mono({E3, E2}), q(-(a12 + a22)) * scalar(sgn(p2, p3))), "serre");
  }
  {
    Element rhs = monomial(mono({F2, F1}), q(a12) * scalar(s));
    rhs.add_term(mono({F3}), -(q(a12) * scalar(s)));
    put(F1, F2, std::move(rhs), "definition");
    put(F1, F3, monomial(mono({F3, F1}), q(a11 + a12) * scalar(sgn(p1, p3))), "serre");
    put(F3, F2, monomial(mono({F2, F3}), q(a12 + a22) * scalar(sgn(p2, p3))), "serre");
  }

  // composite e times f: expand the composite by its definition and reduce
  auto L = [&](int l) { return raw_letter(l); };
  auto cs = [&](long n) { return q(n) * scalar(s); };
  put(E1, F3,
      multiply(multiply(L(E1), L(F2)), L(F1)) - multiply(multiply(L(E1), L(F1)), L(F2)) * cs(-a12),
      "derived");
  put(E2, F3,
      multiply(multiply(L(E2), L(F2)), L(F1)) - multiply(multiply(L(E2), L(F1)), L(F2)) * cs(-a12),
      "derived");
  put(E3, F1,
      multiply(L(E1), multiply(L(E2), L(F1))) - multiply(L(E2), multiply(L(E1), L(F1))) * cs(a12),
      "derived");
  put(E3, F2,
      multiply(L(E1), multiply(L(E2), L(F2))) - multiply(L(E2), multiply(L(E1), L(F2))) * cs(a12),
      "derived");
  put(E3, F3,
      multiply(L(E1), multiply(L(E2), L(F3))) - multiply(L(E2), multiply(L(E1), L(F3))) * cs(a12),
      "derived");

  if (edit) {
    (*edit)(*this, rules_);
    std::unique_lock lock(cache_mu_);
    cache_.clear();
  }
}

std::vector<int> Algebra::imposed_letters() const {
  std::vector<int> r;
  for (int l = 0; l < letter_count(); ++l)
    if (letters_[l].imposed_power) r.push_back(l);
  return r;
}

// ---------------------------------------------------------------- engine

Element Algebra::compute_mul_right(const Monomial& m, int x) const {
  int top = -1;
  for (int l = letter_count() - 1; l >= 0; --l)
    if (m.e[l]) {
      top = l;
      break;
    }
  Element out(this);
  if (top < x) {
    Monomial r = m;
    r.e[x] = 1;
    out.add_term(r, scalar(1));
    return out;
  }
  if (top == x) {
    Monomial r = m;
    int ex = m.e[x] + 1;
    if (ex == letters_[x].bound) {
      if (!letters_[x].power_is_one) return out;
      r.e[x] = 0;
    } else {
      r.e[x] = static_cast<std::uint8_t>(ex);
    }
    out.add_term(r, scalar(1));
    return out;
  }
  Monomial n = m;
  n.e[top]--;
  auto it = rules_.find({top, x});
  if (it == rules_.end())
    throw std::logic_error("missing straightening rule " + letters_[top].name + "*" + letters_[x].name);
  for (const auto& [r, c] : it->second.terms()) out.add_scaled(mul_monomials(n, r), c);
  return out;
}

const Element& Algebra::mul_right(const Monomial& m, int letter) const {
  Key key{m, letter};
  {
    std::shared_lock lock(cache_mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
  }
  auto value = std::make_unique<Element>(compute_mul_right(m, letter));
  std::unique_lock lock(cache_mu_);
  auto [it, inserted] = cache_.emplace(key, std::move(value));
  return *it->second;
}

Element Algebra::mul_monomials(const Monomial& a, const Monomial& b) const {
  Element cur = monomial(a, scalar(1));
  for (int l = 0; l < letter_count(); ++l)
    for (int k = 0; k < b.e[l]; ++k) {
      Element next(this);
      for (const auto& [t, c] : cur.terms()) next.add_scaled(mul_right(t, l), c);
      cur = std::move(next);
      if (cur.is_zero()) return cur;
    }
  return cur;
}

Element Algebra::multiply(const Element& a, const Element& b) const {
  if ((a.algebra() && a.algebra() != this) || (b.algebra() && b.algebra() != this))
    throw ContextError("multiply: element from a different algebra");
  Element out(this);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_scaled(mul_monomials(ma, mb), ca * cb);
  return out;
}

Element Algebra::normal_form(const LetterWord& word, const CycScalar& coeff) const {
  Element cur = monomial(Monomial{}, coeff);
  for (const auto& [l, exp] : word) {
    if (l < 0 || l >= letter_count()) throw std::invalid_argument("unknown letter");
    long n = exp;
    if (n < 0) {
      if (letters_[l].kind != LetterKind::K)
        throw std::invalid_argument("negative exponent on " + letters_[l].name);
      n = ((n % p_) + p_) % p_;
    }
    for (long k = 0; k < n; ++k) {
      Element next(this);
      for (const auto& [t, c] : cur.terms()) next.add_scaled(mul_right(t, l), c);
      cur = std::move(next);
    }
  }
  return cur;
}

Element Algebra::power(const Element& a, long n) const {
  Element r = one();
  for (long i = 0; i < n; ++i) r = multiply(r, a);
  return r;
}

Element Algebra::qbracket(const Element& x, const Element& y, long n) const {
  int px = x.parity(), py = y.parity();
  if (px < 0 || py < 0) throw std::invalid_argument("q-bracket of inhomogeneous elements");
  CycScalar c = q(n) * scalar((px * py) % 2 != 0 ? -1 : 1);
  return multiply(x, y) - multiply(y, x) * c;
}

Element Algebra::supercommutator(const Element& x, const Element& y) const {
  Element out(this);
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      long sg = ((monomial_parity(mx) * monomial_parity(my)) % 2 != 0) ? -1 : 1;
      out.add_scaled(mul_monomials(mx, my), cx * cy);
      out.add_scaled(mul_monomials(my, mx), cx * cy * scalar(-sg));
    }
  return out;
}

int Algebra::monomial_parity(const Monomial& m) const {
  int s = 0;
  for (int l = 0; l < letter_count(); ++l) s += m.e[l] * letters_[l].parity;
  return s & 1;
}

std::vector<int> Algebra::monomial_weight(const Monomial& m) const {
  std::vector<int> w(rank(), 0);
  for (int l = 0; l < letter_count(); ++l)
    for (int i = 0; i < rank(); ++i) w[i] += m.e[l] * letters_[l].weight[i];
  return w;
}

std::vector<int> Algebra::monomial_letters(const Monomial& m) const {
  std::vector<int> r;
  for (int l = 0; l < letter_count(); ++l)
    for (int k = 0; k < m.e[l]; ++k) r.push_back(l);
  return r;
}

bool Algebra::monomial_in_range(const Monomial& m) const {
  for (int l = 0; l < kMaxLetters; ++l) {
    if (l >= letter_count()) {
      if (m.e[l]) return false;
      continue;
    }
    if (m.e[l] >= letters_[l].bound) return false;
  }
  return true;
}

Element Algebra::eval_free(const FreePoly& f) const {
  Element out(this);
  for (const auto& t : f.terms) {
    LetterWord w;
    for (int l : t.letters) w.push_back({l, 1});
    out += normal_form(w, t.coeff);
  }
  return out;
}

std::vector<FreePoly> Algebra::positive_relations(bool e_side) const {
  std::vector<FreePoly> rels;
  const int r = rank();
  auto gen = [&](int i) { return e_side ? e_letter(simple_root(i)) : f_letter(simple_root(i)); };
  const char* g = e_side ? "e" : "f";
  for (int i = 0; i < r; ++i) {
    int x = gen(i);
    if (simple_parity(i)) {
      rels.push_back({std::string(g) + std::to_string(i + 1) + "^2", {{scalar(1), {x, x}}}});
    } else {
      rels.push_back({std::string(g) + std::to_string(i + 1) + "^p",
                      {{scalar(1), std::vector<int>(p_, x)}}});
    }
  }
  // [x_i, [x_i, x_j]_{q^{(i,j)}}]_{q^{(i, i+j)}} for even i, |i-j| = 1
  for (int i = 0; i < r; ++i) {
    if (simple_parity(i)) continue;
    for (int j : {i - 1, i + 1}) {
      if (j < 0 || j >= r) continue;
      int xi = gen(i), xj = gen(j);
      int aij = gram(i, j), aii = gram(i, i);
      long s1 = ((simple_parity(i) * simple_parity(j)) % 2 != 0) ? -1 : 1;
      int pin = (simple_parity(i) + simple_parity(j)) & 1;
      long s2 = ((simple_parity(i) * pin) % 2 != 0) ? -1 : 1;
      FreePoly xi_p{"", {{scalar(1), {xi}}}};
      FreePoly xj_p{"", {{scalar(1), {xj}}}};
      FreePoly inner = free_lin(free_mul(xi_p, xj_p), scalar(1), free_mul(xj_p, xi_p), q(aij) * scalar(-s1));
      FreePoly outer =
          free_lin(free_mul(xi_p, inner), scalar(1), free_mul(inner, xi_p), q(aii + aij) * scalar(-s2));
      outer.name = std::string("serre ") + g + std::to_string(i + 1) + "," + std::to_string(j + 1);
      rels.push_back(std::move(outer));
    }
  }
  return rels;
}

std::vector<FreePoly> Algebra::defining_relations() const {
  std::vector<FreePoly> rels;
  const int r = rank();
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      rels.push_back({"k" + std::to_string(i + 1) + "k" + std::to_string(j + 1) + " commute",
                      {{scalar(1), {k_letter(i), k_letter(j)}}, {scalar(-1), {k_letter(j), k_letter(i)}}}});
  for (int i = 0; i < r; ++i)
    rels.push_back({"k" + std::to_string(i + 1) + "^p = 1",
                    {{scalar(1), std::vector<int>(p_, k_letter(i))}, {scalar(-1), {}}}});
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      int ei = e_letter(simple_root(i)), fi = f_letter(simple_root(i)), kj = k_letter(j);
      int c = gram(j, i);
      std::string tag = std::to_string(i + 1) + "," + std::to_string(j + 1);
      rels.push_back({"e k " + tag, {{scalar(1), {ei, kj}}, {-q(-c), {kj, ei}}}});
      rels.push_back({"k f " + tag, {{scalar(1), {kj, fi}}, {-q(-c), {fi, kj}}}});
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      int ei = e_letter(simple_root(i)), fj = f_letter(simple_root(j));
      long sg = ((simple_parity(i) * simple_parity(j)) % 2 != 0) ? -1 : 1;
      FreePoly rel{"[e" + std::to_string(i + 1) + ",f" + std::to_string(j + 1) + "]",
                   {{scalar(1), {ei, fj}}, {scalar(-sg), {fj, ei}}}};
      if (i == j) {
        rel.terms.push_back({-inv_qq_, {k_letter(i)}});
        rel.terms.push_back({inv_qq_, std::vector<int>(p_ - 1, k_letter(i))});
      }
      rels.push_back(std::move(rel));
    }
  for (bool side : {true, false})
    for (auto& f : positive_relations(side)) rels.push_back(std::move(f));
  return rels;
}

std::vector<FreePoly> Algebra::imposed_relations() const {
  std::vector<FreePoly> rels;
  for (int l : imposed_letters())
    rels.push_back({"imposed " + letters_[l].name + "^" + std::to_string(letters_[l].bound),
                    {{scalar(1), std::vector<int>(letters_[l].bound, l)}}});
  return rels;
}

std::vector<Monomial> Algebra::pbw_basis() const {
  std::vector<Monomial> out;
  Monomial m;
  const int L = letter_count();
  std::function<void(int)> rec = [&](int l) {
    if (l == L) {
      out.push_back(m);
      return;
    }
    for (int k = 0; k < letters_[l].bound; ++k) {
      m.e[l] = static_cast<std::uint8_t>(k);
      rec(l + 1);
    }
    m.e[l] = 0;
  };
  rec(0);
  return out;
}

std::size_t Algebra::pbw_dimension_formula() const {
  std::size_t h = 1;
  for (const auto& r : roots_) h *= r.parity ? 2 : static_cast<std::size_t>(p_);
  std::size_t k = 1;
  for (int i = 0; i < rank(); ++i) k *= static_cast<std::size_t>(p_);
  return h * h * k;
}

std::string Algebra::render_letter(int l) const {
  const auto& li = letters_[l];
  if (li.kind == LetterKind::K || li.simple >= 0) return li.name;
  // composite: qbr(first, rest, n) so the text parses back to the same element
  const auto& path = roots_[li.root].simple_path;
  int j = path[0];
  std::vector<int> rest(roots_[li.root].coords);
  rest[j] = 0;
  int rb = root_index(rest);
  int n = form(unit(rank(), j), rest);
  if (li.kind == LetterKind::E)
    return "qbr(" + render_letter(e_letter(simple_root(j))) + "," + render_letter(e_letter(rb)) + "," +
           std::to_string(n) + ")";
  return "qbr(" + render_letter(f_letter(rb)) + "," + render_letter(f_letter(simple_root(j))) + "," +
         std::to_string(-n) + ")";
}

std::string Algebra::render_monomial(const Monomial& m) const {
  std::string s;
  for (int l = 0; l < letter_count(); ++l) {
    if (!m.e[l]) continue;
    if (!s.empty()) s += "*";
    s += render_letter(l);
    if (m.e[l] > 1) s += "^" + std::to_string(m.e[l]);
  }
  return s.empty() ? "1" : s;
}

std::string Algebra::render(const Element& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    std::string cs = c.to_string();
    std::string ms = render_monomial(m);
    std::string term;
    if (ms == "1")
      term = cs;
    else if (c.is_one())
      term = ms;
    else
      term = cs + "*" + ms;
    if (first) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
    first = false;
  }
  return out;
}

std::size_t Algebra::cache_size() const {
  std::shared_lock lock(cache_mu_);
  return cache_.size();
}

// ---------------------------------------------------------------- word reducer

Element reduce_word(const Algebra& a, const std::vector<int>& word, const CycScalar& coeff,
                    DescentStrategy strat) {
  Element out(&a);
  std::map<std::vector<int>, CycScalar> work;
  work[word] = coeff;
  const auto& L = a.letters();
  // eager power truncation; returns false if the word vanishes
  auto truncate = [&](std::vector<int>& w) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        int run = static_cast<int>(j - i);
        const auto& li = L[w[i]];
        if (run >= li.bound) {
          if (!li.power_is_one) return false;
          w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + li.bound);
          changed = true;
          break;
        }
        i = j;
      }
    }
    return true;
  };
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    std::vector<int> w = std::move(node.key());
    CycScalar c = std::move(node.mapped());
    if (c.is_zero()) continue;
    if (!truncate(w)) continue;
    long pos = -1;
    if (strat == DescentStrategy::Leftmost) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) {
          pos = static_cast<long>(i);
          break;
        }
    } else {
      for (std::size_t i = w.size(); i-- > 1;)
        if (w[i - 1] > w[i]) {
          pos = static_cast<long>(i - 1);
          break;
        }
    }
    if (pos < 0) {
      Monomial m;
      for (int l : w) m.e[l]++;
      out.add_term(m, c);
      continue;
    }
    auto it = a.rules().find({w[pos], w[pos + 1]});
    if (it == a.rules().end()) throw std::logic_error("missing rule in word reducer");
    for (const auto& [m, rc] : it->second.terms()) {
      std::vector<int> nw(w.begin(), w.begin() + pos);
      for (int l : a.monomial_letters(m)) nw.push_back(l);
      nw.insert(nw.end(), w.begin() + pos + 2, w.end());
      auto [slot, ins] = work.try_emplace(std::move(nw), rc * c);
      if (!ins) slot->second += rc * c;
    }
  }
  return out;
}

}  // namespace qsuper
