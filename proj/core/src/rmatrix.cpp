#include "qsuper/rmatrix.hpp"

#include "qsuper/lusztig.hpp"

#include <sstream>
#include <stdexcept>

namespace qsuper {

namespace {

AlgebraPtr sl21(int p, int d) { return Algebra::get(2, 1, p, d); }

Element gen(const Algebra& a, char kind, int i, long exp = 1) {
  return a.element_from_generator(kind, i, exp);
}

// p^{-2} sum over exponents of q^{expo(i1, j1, i2, j2)} k1^{i2} k2^{j2} (x) k1^{i1} k2^{j1}
template <class Expo>
Tensor2 k_sum(const Algebra& a, Expo expo) {
  const int p = a.p();
  Tensor2 out(&a);
  CycScalar norm = a.scalar(Rational(1, p * p));
  for (int i1 = 0; i1 < p; ++i1)
    for (int j1 = 0; j1 < p; ++j1)
      for (int i2 = 0; i2 < p; ++i2)
        for (int j2 = 0; j2 < p; ++j2) {
          Monomial l, r;
          l.e[a.k_letter(0)] = static_cast<std::uint8_t>(i2);
          l.e[a.k_letter(1)] = static_cast<std::uint8_t>(j2);
          r.e[a.k_letter(0)] = static_cast<std::uint8_t>(i1);
          r.e[a.k_letter(1)] = static_cast<std::uint8_t>(j1);
          out.add_term(l, r, norm * a.q(expo(i1, j1, i2, j2)));
        }
  return out;
}

Tensor2 product(const std::vector<Tensor2>& fs, const Algebra& a) {
  Tensor2 out = Tensor2::one(a);
  for (const Tensor2& f : fs) out = out * f;
  return out;
}

Tensor2 product_reversed(const std::vector<Tensor2>& fs, const Algebra& a) {
  Tensor2 out = Tensor2::one(a);
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) out = out * *it;
  return out;
}

std::string clip(const std::string& s, std::size_t n = 400) {
  return s.size() <= n ? s : s.substr(0, n) + " ...";
}

Tensor2 apply_both(const AlgebraMorphism& t, const Tensor2& x) {
  auto img = [&t](const Monomial& m) { return t.apply_monomial(m); };
  return map_tensor(x, img, img, *t.target());
}

// R13 R23 = sum (-1)^{|b||c|} a (x) c (x) bd
Tensor3 r13_r23(const Tensor2& r) {
  const Algebra& A = *r.algebra();
  Tensor3 out(&A);
  for (const auto& [ab, x] : r.terms())
    for (const auto& [cd, y] : r.terms()) {
      CycScalar s = x * y;
      if (A.monomial_parity(ab.second) * A.monomial_parity(cd.first) % 2) s = -s;
      Element prod = A.mul_monomials(ab.second, cd.second);
      for (const auto& [m, c] : prod.terms())
        out.add_term(ab.first, cd.first, m, s * c);
    }
  return out;
}

// R13 R12 = sum (-1)^{|b|(|c|+|d|)} ac (x) d (x) b
Tensor3 r13_r12(const Tensor2& r) {
  const Algebra& A = *r.algebra();
  Tensor3 out(&A);
  for (const auto& [ab, x] : r.terms())
    for (const auto& [cd, y] : r.terms()) {
      CycScalar s = x * y;
      int pb = A.monomial_parity(ab.second);
      if (pb * (A.monomial_parity(cd.first) + A.monomial_parity(cd.second)) % 2) s = -s;
      Element prod = A.mul_monomials(ab.first, cd.first);
      for (const auto& [m, c] : prod.terms())
        out.add_term(m, cd.second, ab.second, s * c);
    }
  return out;
}

}  // namespace

QExp q_exp_factor(const Tensor2& x, const CycScalar& t) {
  const Algebra& a = *x.algebra();
  int order = nilpotency_order(x, 2 * a.p() + 2);
  if (order == 0) throw std::logic_error("q-exponential argument is not nilpotent");
  Tensor2 neg = x * a.scalar(-1);
  return QExp{q_exp(x, t, order), q_exp(neg, t.inverse(), order), order};
}

Tensor2 build_k(int p) {
  AlgebraPtr a = sl21(p, 1);
  return k_sum(*a, [](int i1, int j1, int i2, int j2) { return i1 * (2 * i2 - j2) - j1 * i2; });
}

Tensor2 build_k_inverse(int p) {
  AlgebraPtr a = sl21(p, 1);
  return k_sum(*a, [](int i1, int j1, int i2, int j2) { return -(i1 * (2 * i2 - j2) - j1 * i2); });
}

namespace {

std::vector<Tensor2> rtilde_arguments(const Algebra& a) {
  CycScalar qq = a.q(1) - a.q(-1);
  Element e1 = gen(a, 'e', 1), e2 = gen(a, 'e', 2), f1 = gen(a, 'f', 1), f2 = gen(a, 'f', 2);
  Element e12 = a.qbracket(e1, e2, -1);
  Element f21 = a.qbracket(f2, f1, 1);
  return {
      Tensor2::pure(e12, f21) * qq,
      Tensor2::pure(e2, f2) * qq,
      Tensor2::pure(e1, f1) * (-qq),
      Tensor2::pure(e12 * e2, f21 * f2) * (-(a.q(1) * qq.pow(3))),
  };
}

std::vector<QExp> rtilde_exps(const Algebra& a) {
  std::vector<QExp> out;
  for (const Tensor2& x : rtilde_arguments(a)) out.push_back(q_exp_factor(x, a.q(2)));
  return out;
}

}  // namespace

std::vector<Tensor2> rtilde_factors(int p) {
  AlgebraPtr a = sl21(p, 1);
  std::vector<Tensor2> out;
  for (QExp& e : rtilde_exps(*a)) out.push_back(std::move(e.value));
  return out;
}

RMatrix build_rbar1(int p) {
  AlgebraPtr a = sl21(p, 1);
  std::vector<Tensor2> fs, invs;
  for (QExp& e : rtilde_exps(*a)) {
    fs.push_back(std::move(e.value));
    invs.push_back(std::move(e.inverse));
  }
  RMatrix r;
  r.d = 1;
  r.provenance = "constructed R1";
  r.value = product(fs, *a) * build_k(p);
  // (R~ K)^{-1} = K^{-1} F4^{-1} F3^{-1} F2^{-1} F1^{-1}
  r.inverse = build_k_inverse(p) * product_reversed(invs, *a);
  return r;
}

TransportedR build_rbar3(int p) {
  AlgebraPtr a1 = sl21(p, 1);
  AlgebraMorphism t = functor_edge(2, 1, p, 2, 1);
  const Algebra& b = *t.target();
  if (b.d() != 3) throw std::logic_error("edge (2, 1) does not reach diagram 3");
  RMatrix r1 = build_rbar1(p);
  TransportedR out;
  out.transported = apply_both(t, r1.value);
  for (const Tensor2& f : rtilde_factors(p)) out.transported_factors.push_back(apply_both(t, f));
  out.transported_k = apply_both(t, build_k(p));

  // closed forms on U^3
  CycScalar qq = b.q(1) - b.q(-1);
  Element e1 = gen(b, 'e', 1), e2 = gen(b, 'e', 2), f1 = gen(b, 'f', 1), f2 = gen(b, 'f', 2);
  Element k2 = gen(b, 'k', 2), k2i = gen(b, 'k', 2, -1);
  Element f2k = f2 * k2i, ke2 = k2 * e2;
  Element left = b.qbracket(b.qbracket(e2, e1, -1), f2k, -1);
  Element right = b.qbracket(ke2, b.qbracket(f1, f2, 1), 1);
  std::vector<Tensor2> args = {
      Tensor2::pure(left, right) * qq,
      Tensor2::pure(f2k, ke2) * (-qq),
      Tensor2::pure(b.qbracket(e2, e1, -1), b.qbracket(f1, f2, 1)) * qq,
      Tensor2::pure(left * f2k, right * ke2) * (b.q(1) * qq.pow(3)),
  };
  for (const Tensor2& x : args) out.displayed_factors.push_back(q_exp_factor(x, b.q(2)).value);
  out.displayed_rtilde = product(out.displayed_factors, b);
  out.displayed_k = k_sum(b, [](int i1, int r1, int i2, int r2) { return i1 * r2 + i2 * r1; });

  Twist j = build_reflection_twist(2, 1, p, 2, 1);
  out.rbar3.d = 3;
  out.rbar3.provenance = "twist-transported";
  out.rbar3.value = j.j_inv.flip() * out.transported * j.j;
  out.rbar3.inverse = j.j_inv * apply_both(t, r1.inverse) * j.j.flip();
  out.rbar3_displayed = j.j_inv.flip() * out.displayed_rtilde * j.j * out.displayed_k;
  return out;
}

Report verify_transport(const TransportedR& t) {
  Report r{"rmatrix transport", {}};
  const Algebra& b = *t.transported.algebra();
  for (std::size_t i = 0; i < t.displayed_factors.size(); ++i) {
    bool ok = t.transported_factors[i] == t.displayed_factors[i];
    r.add("transported factor equals displayed factor", ok,
          ok ? std::nullopt
             : std::optional<std::string>("transported: " + clip(t.transported_factors[i].to_string()) +
                                          " | displayed: " + clip(t.displayed_factors[i].to_string())),
          {{"factor", std::to_string(i + 1)}});
  }
  bool kok = t.transported_k == t.displayed_k;
  r.add("transported K equals displayed K", kok,
        kok ? std::nullopt
            : std::optional<std::string>("transported: " + clip(t.transported_k.to_string()) +
                                         " | displayed: " + clip(t.displayed_k.to_string())));
  Tensor2 disp = t.displayed_rtilde * t.displayed_k;
  bool all = t.transported == disp;
  r.add("(T x T)(R1) equals displayed R~^T K^T", all,
        all ? std::nullopt
            : std::optional<std::string>("transported: " + clip(t.transported.to_string()) +
                                         " | displayed: " + clip(disp.to_string())));
  r.add("R3 lives on diagram 3", b.d() == 3);
  return r;
}

Report verify_commuted_display(const TransportedR& t) {
  Report r{"rmatrix commuted display", {}};
  bool tw = t.rbar3.value == t.rbar3_displayed;
  r.add("tau(J^-1) R^T J equals tau(J^-1) R~^T J K^T", tw,
        tw ? std::nullopt
           : std::optional<std::string>("twisted: " + clip(t.rbar3.value.to_string()) +
                                        " | displayed: " + clip(t.rbar3_displayed.to_string())));
  return r;
}

Report verify_r_basic(const RMatrix& rm, const HopfStructure& h) {
  Report r{"rmatrix basic", {}};
  const Algebra& a = *h.algebra();
  Tensor2 one = Tensor2::one(a);
  Tensor2 x = rm.value * rm.inverse, y = rm.inverse * rm.value;
  r.add("R R^-1 = 1 (x) 1", x == one, x == one ? std::nullopt : std::optional<std::string>(clip(x.to_string())));
  r.add("R^-1 R = 1 (x) 1", y == one, y == one ? std::nullopt : std::optional<std::string>(clip(y.to_string())));
  auto eps = [&h](const Monomial& m) { return h.counit_monomial(m); };
  Element l = contract_left(rm.value, eps), rr = contract_right(rm.value, eps);
  r.add("(eps x id) R = 1", l == a.one(), l == a.one() ? std::nullopt : std::optional<std::string>(a.render(l)));
  r.add("(id x eps) R = 1", rr == a.one(), rr == a.one() ? std::nullopt : std::optional<std::string>(a.render(rr)));
  r.add("R is even", rm.value.parity() == 0);
  return r;
}

Report verify_quasi_cocommutativity(const RMatrix& rm, const HopfStructure& h) {
  Report r{"rmatrix quasi-cocommutativity", {}};
  const Algebra& a = *h.algebra();
  for (int l = 0; l < a.letter_count(); ++l) {
    const LetterInfo& info = a.letters()[l];
    if (info.simple < 0) continue;
    Element x = a.letter(l);
    Tensor2 lhs = h.opposite_coproduct(x) * rm.value;
    Tensor2 rhs = rm.value * h.coproduct(x);
    bool ok = lhs == rhs;
    r.add("Delta^op(x) R = R Delta(x)", ok,
          ok ? std::nullopt : std::optional<std::string>("difference: " + clip((lhs - rhs).to_string())),
          {{"x", info.name}});
  }
  return r;
}

Report verify_hexagons(const RMatrix& rm, const HopfStructure& h) {
  Report r{"rmatrix hexagons", {}};
  auto delta = [&h](const Monomial& m) { return h.coproduct_monomial(m); };
  Tensor3 l1 = map_left(rm.value, delta);
  Tensor3 r1 = r13_r23(rm.value);
  bool ok1 = l1 == r1;
  r.add("(Delta x id) R = R13 R23", ok1,
        ok1 ? std::nullopt : std::optional<std::string>(clip((l1 - r1).to_string())));
  Tensor3 l2 = map_right(rm.value, delta);
  Tensor3 r2 = r13_r12(rm.value);
  bool ok2 = l2 == r2;
  r.add("(id x Delta) R = R13 R12", ok2,
        ok2 ? std::nullopt : std::optional<std::string>(clip((l2 - r2).to_string())));
  // YBE R12 (R13 R23) = R23 (R13 R12)
  Tensor3 y1 = Tensor3::from12(rm.value) * r1;
  Tensor3 y2 = Tensor3::from23(rm.value) * r2;
  bool ok3 = y1 == y2;
  r.add("R12 R13 R23 = R23 R13 R12", ok3,
        ok3 ? std::nullopt : std::optional<std::string>(clip((y1 - y2).to_string())));
  return r;
}

Matrix::Matrix(int size, const CyclotomicField& f)
    : n(size), a(static_cast<std::size_t>(size) * size, CycScalar(f)) {}

Matrix Matrix::identity(int size, const CyclotomicField& f) {
  Matrix m(size, f);
  for (int i = 0; i < size; ++i) m.at(i, i) = CycScalar(f, 1);
  return m;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  Matrix out(x.n, *x.a[0].field());
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const CycScalar& c = x.at(i, k);
      if (c.is_zero()) continue;
      for (int j = 0; j < x.n; ++j)
        if (!y.at(k, j).is_zero()) out.at(i, j) += c * y.at(k, j);
    }
  return out;
}

Matrix operator+(Matrix x, const Matrix& y) {
  for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
  return x;
}

Matrix operator-(Matrix x, const Matrix& y) {
  for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] -= y.a[i];
  return x;
}

Matrix Matrix::scaled(const CycScalar& c) const {
  Matrix out = *this;
  for (CycScalar& v : out.a) v *= c;
  return out;
}

bool Matrix::is_zero() const {
  for (const CycScalar& v : a)
    if (!v.is_zero()) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < n; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

Matrix eval_free_matrix(const FreePoly& f, const std::vector<Matrix>& letters, const CyclotomicField& field,
                        int dim) {
  Matrix out(dim, field);
  for (const FreeTerm& t : f.terms) {
    Matrix m = Matrix::identity(dim, field);
    for (int l : t.letters) m = m * letters[l];
    out = out + m.scaled(t.coeff);
  }
  return out;
}

}  // namespace

MatrixRep MatrixRep::fundamental(AlgebraPtr a) {
  const SuperDims& dims = a->dims();
  const CyclotomicField& field = a->field();
  const DynkinDiagram& dd = a->diagram();
  const int dim = dims.size();
  const int rank = a->rank();
  std::vector<int> odd_simple;
  for (int i = 0; i < rank; ++i)
    if (a->simple_parity(i)) odd_simple.push_back(i);

  MatrixRep best;
  Report last;
  for (int mask = 0; mask < (1 << odd_simple.size()); ++mask) {
    MatrixRep rep;
    rep.alg_ = a;
    for (int c = 1; c <= dim; ++c) rep.grading_.push_back(dims.slot_sign(c) > 0 ? 0 : 1);
    rep.f_signs_.assign(rank, 1);
    for (std::size_t b = 0; b < odd_simple.size(); ++b)
      if (mask >> b & 1) rep.f_signs_[odd_simple[b]] = -1;
    rep.letters_.assign(a->letter_count(), Matrix(dim, field));
    for (int i = 0; i < rank; ++i) {
      const Weight& tau = dd.tau[i];
      int src = -1, dst = -1;
      for (int c = 0; c < dim; ++c) {
        if (tau.coords[c] == 1) src = c;
        if (tau.coords[c] == -1) dst = c;
      }
      Matrix e(dim, field), f(dim, field), k(dim, field);
      e.at(src, dst) = CycScalar(field, 1);
      f.at(dst, src) = CycScalar(field, rep.f_signs_[i]);
      for (int c = 0; c < dim; ++c) {
        Weight unit = Weight::zero(dim);
        unit.coords[c] = 1;
        k.at(c, c) = a->q(bilinear_form(dims, tau, unit));
      }
      rep.letters_[a->generator_letter('e', i)] = e;
      rep.letters_[a->generator_letter('f', i)] = f;
      rep.letters_[a->k_letter(i)] = k;
    }
    for (int l = 0; l < a->letter_count(); ++l) {
      const LetterInfo& info = a->letters()[l];
      if (info.simple >= 0) continue;
      rep.letters_[l] = eval_free_matrix(a->letter_definition(l), rep.letters_, field, dim);
    }
    last = rep.verify_relations();
    if (last.ok()) return rep;
  }
  const CheckResult* bad = last.first_failure();
  throw std::runtime_error("fundamental representation violates " + (bad ? bad->check : std::string("?")) +
                           (bad && bad->witness ? ": " + *bad->witness : std::string()));
}

Report MatrixRep::verify_relations() const {
  Report r{"fundamental representation", {}};
  const CyclotomicField& field = alg_->field();
  auto check = [&](const FreePoly& rel, const std::string& kind) {
    Matrix m = eval_free_matrix(rel, letters_, field, dim());
    r.add("relation holds in representation", m.is_zero(),
          m.is_zero() ? std::nullopt : std::optional<std::string>(m.to_string()),
          {{"relation", rel.name}, {"kind", kind}});
  };
  for (const FreePoly& rel : alg_->defining_relations()) check(rel, "defining");
  for (const FreePoly& rel : alg_->imposed_relations()) check(rel, "imposed");
  // parity: even letters preserve the grading, odd letters flip it
  for (int l = 0; l < alg_->letter_count(); ++l) {
    bool ok = true;
    const Matrix& m = letters_[l];
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j)
        if (!m.at(i, j).is_zero() && (grading_[i] + grading_[j]) % 2 != alg_->letters()[l].parity) ok = false;
    r.add("letter image has letter parity", ok, std::nullopt, {{"letter", alg_->letters()[l].name}});
  }
  return r;
}

Matrix MatrixRep::monomial(const Monomial& m) const {
  Matrix out = Matrix::identity(dim(), alg_->field());
  for (int l : alg_->monomial_letters(m)) out = out * letters_[l];
  return out;
}

Matrix MatrixRep::element(const Element& x) const {
  Matrix out(dim(), alg_->field());
  for (const auto& [m, c] : x.terms()) out = out + monomial(m).scaled(c);
  return out;
}

Matrix MatrixRep::tensor2(const Tensor2& t) const {
  const int n = dim();
  Matrix out(n * n, alg_->field());
  std::map<Monomial, Matrix> cache;
  auto img = [&](const Monomial& m) -> const Matrix& {
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, monomial(m)).first;
    return it->second;
  };
  for (const auto& [ab, c] : t.terms()) {
    const Matrix& A = img(ab.first);
    const Matrix& B = img(ab.second);
    int pb = alg_->monomial_parity(ab.second);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (A.at(i, k).is_zero()) continue;
        CycScalar ca = c * A.at(i, k);
        if (pb * grading_[k] % 2) ca = -ca;
        for (int j = 0; j < n; ++j)
          for (int l = 0; l < n; ++l)
            if (!B.at(j, l).is_zero()) out.at(i * n + j, k * n + l) += ca * B.at(j, l);
      }
  }
  return out;
}

Matrix MatrixRep::tensor3(const Tensor3& t) const {
  const int n = dim();
  Matrix out(n * n * n, alg_->field());
  std::map<Monomial, Matrix> cache;
  auto img = [&](const Monomial& m) -> const Matrix& {
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, monomial(m)).first;
    return it->second;
  };
  for (const auto& [abc, s] : t.terms()) {
    const Matrix& A = img(abc.a);
    const Matrix& B = img(abc.b);
    const Matrix& C = img(abc.c);
    int pb = alg_->monomial_parity(abc.b), pc = alg_->monomial_parity(abc.c);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (A.at(i, k).is_zero()) continue;
        for (int j = 0; j < n; ++j)
          for (int l = 0; l < n; ++l) {
            if (B.at(j, l).is_zero()) continue;
            CycScalar cab = s * A.at(i, k) * B.at(j, l);
            if ((pb * grading_[k] + pc * (grading_[k] + grading_[l])) % 2) cab = -cab;
            for (int u = 0; u < n; ++u)
              for (int v = 0; v < n; ++v)
                if (!C.at(u, v).is_zero())
                  out.at((i * n + j) * n + u, (k * n + l) * n + v) += cab * C.at(u, v);
          }
      }
  }
  return out;
}

Report verify_ybe_in_rep(const RMatrix& rm, const MatrixRep& rep) {
  Report r{"rmatrix YBE in representation", {}};
  Matrix r12 = rep.tensor3(Tensor3::from12(rm.value));
  Matrix r13 = rep.tensor3(Tensor3::from13(rm.value));
  Matrix r23 = rep.tensor3(Tensor3::from23(rm.value));
  Matrix lhs = r12 * r13 * r23, rhs = r23 * r13 * r12;
  bool ok = lhs == rhs;
  r.add("R12 R13 R23 = R23 R13 R12 on V (x) V (x) V", ok,
        ok ? std::nullopt : std::optional<std::string>(clip((lhs - rhs).to_string())),
        {{"dim", std::to_string(lhs.n)}});
  Matrix m = rep.tensor2(rm.value), mi = rep.tensor2(rm.inverse);
  bool inv = m * mi == Matrix::identity(m.n, rep.algebra()->field());
  r.add("R R^-1 = 1 on V (x) V", inv);
  return r;
}

}  // namespace qsuper
