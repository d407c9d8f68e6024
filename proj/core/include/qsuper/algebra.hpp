#pragma once

#include "qsuper/cyclotomic.hpp"
#include "qsuper/report.hpp"
#include "qsuper/roots.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qsuper {

inline constexpr int kMaxLetters = 16;

// exponent vector indexed by PBW letter; letters are totally ordered by index
struct Monomial {
  std::array<std::uint8_t, kMaxLetters> e{};
  bool is_one() const;
  int degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

enum class LetterKind { F, K, E };

struct LetterInfo {
  LetterKind kind = LetterKind::E;
  int root = -1;     // index into pos_roots for E/F letters
  int simple = -1;   // 0-based simple index for K letters and simple E/F letters
  int parity = 0;
  std::vector<int> weight;  // simple-root coordinates
  std::string name;         // "e1", "f12", "k2"
  int bound = 2;            // exponents live in [0, bound)
  bool power_is_one = false;  // x^bound = 1 (k letters) rather than 0
  bool imposed_power = false; // x^bound = 0 is imposed, not derived
};

struct RootInfo {
  std::vector<int> coords;       // simple-root coordinates
  Weight weight;
  int parity = 0;
  int norm = 0;                  // (beta, beta)
  std::vector<int> simple_path;  // i_1, ..., i_r with beta = alpha_{i_1} + ... (0-based)
};

class Algebra;

// finite linear combination of PBW monomials of one algebra
class Element {
 public:
  Element() = default;
  explicit Element(const Algebra* a) : alg_(a) {}

  const Algebra* algebra() const { return alg_; }
  const std::map<Monomial, CycScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const CycScalar& c);
  void add_scaled(const Element& o, const CycScalar& c);
  CycScalar coefficient(const Monomial& m) const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const CycScalar& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const CycScalar& c) { return a *= c; }
  friend Element operator*(const CycScalar& c, Element a) { return a *= c; }
  Element operator-() const;
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b);

  // 0 even, 1 odd, -1 inhomogeneous; zero counts as even
  int parity() const;
  std::string to_string() const;

 private:
  const Algebra* alg_ = nullptr;
  std::map<Monomial, CycScalar> terms_;
};

// word in PBW letters with integer exponents (k exponents may be negative)
using LetterWord = std::vector<std::pair<int, long>>;

// polynomial in the free algebra on letters (used for relations)
struct FreeTerm {
  CycScalar coeff;
  std::vector<int> letters;
};
struct FreePoly {
  std::string name;
  std::vector<FreeTerm> terms;
};

using RuleTable = std::map<std::pair<int, int>, Element>;
using RuleEditor = std::function<void(const Algebra&, RuleTable&)>;

// U_q^d for sl(m|n) at q a primitive p-th root of unity, realized as a
// rewriting quotient with PBW normal forms.
class Algebra {
 public:
  // interned per (m, n, p, d)
  static std::shared_ptr<const Algebra> get(int m, int n, int p, int d);
  // fresh instance whose rule table is post-processed by `edit` (negative controls)
  static std::shared_ptr<const Algebra> build_edited(int m, int n, int p, int d, const RuleEditor& edit);

  const SuperDims& dims() const { return dims_; }
  int p() const { return p_; }
  int d() const { return d_; }
  int rank() const { return dims_.rank(); }
  const CyclotomicField& field() const { return *field_; }
  const Groupoid& groupoid() const { return *groupoid_; }
  const DynkinDiagram& diagram() const { return groupoid_->diagram(d_); }
  int gram(int i, int j) const { return diagram().gram[i][j]; }
  int simple_parity(int i) const { return diagram().parities[i]; }

  const std::vector<RootInfo>& pos_roots() const { return roots_; }
  const std::vector<LetterInfo>& letters() const { return letters_; }
  int letter_count() const { return static_cast<int>(letters_.size()); }
  int e_letter(int root) const { return e_of_root_[root]; }
  int f_letter(int root) const { return f_of_root_[root]; }
  int k_letter(int i) const { return k_of_simple_[i]; }
  int simple_root(int i) const { return simple_root_[i]; }
  // letter id for "e", "f", "k" and 0-based simple index
  int generator_letter(char kind, int i) const;
  // root index for simple-coordinate vector, -1 if not a positive root
  int root_index(const std::vector<int>& coords) const;
  // (beta, gamma) for simple-coordinate vectors
  int form(const std::vector<int>& a, const std::vector<int>& b) const;

  CycScalar scalar(long r) const { return CycScalar(*field_, r); }
  CycScalar scalar(const Rational& r) const { return CycScalar(*field_, r); }
  CycScalar q(long n) const { return CycScalar::zeta_power(*field_, n); }
  const CycScalar& inv_q_minus_qinv() const { return inv_qq_; }

  Element zero() const { return Element(this); }
  Element one() const;
  Element monomial(const Monomial& m, const CycScalar& c) const;
  Element letter(int l, long exp = 1) const;
  // e|f|k, 1-based index, integer exponent (k reduced mod p)
  Element element_from_generator(char kind, int i, long exp) const;

  Element normal_form(const LetterWord& word, const CycScalar& coeff) const;
  Element multiply(const Element& a, const Element& b) const;
  Element mul_monomials(const Monomial& a, const Monomial& b) const;
  // memoized product of a normal monomial by a letter on the right
  const Element& mul_right(const Monomial& m, int letter) const;
  Element power(const Element& a, long n) const;
  // [x, y]_{q^n} = xy - (-1)^{|x||y|} q^n yx for homogeneous x, y
  Element qbracket(const Element& x, const Element& y, long n) const;
  // super commutator [x, y] = xy - (-1)^{|x||y|} yx
  Element supercommutator(const Element& x, const Element& y) const;

  int monomial_parity(const Monomial& m) const;
  std::vector<int> monomial_weight(const Monomial& m) const;
  // letter sequence of a monomial in PBW order, with multiplicity
  std::vector<int> monomial_letters(const Monomial& m) const;
  bool monomial_in_range(const Monomial& m) const;

  // composite letters expressed in simple letters via their q-bracket definitions
  const FreePoly& letter_definition(int l) const { return definitions_[l]; }
  Element eval_free(const FreePoly& f) const;

  const RuleTable& rules() const { return rules_; }
  // rule provenance: "relation", "definition", "derived", "serre", "imposed"
  const std::map<std::pair<int, int>, std::string>& rule_sources() const { return rule_source_; }
  std::vector<int> imposed_letters() const;

  // defining relations in simple letters (k^{-1} written as k^{p-1})
  std::vector<FreePoly> defining_relations() const;
  // relations among e-letters only (or f-letters only), used by the oracle
  std::vector<FreePoly> positive_relations(bool e_side) const;
  // x^bound = 0 for composite even letters, imposed rather than derived
  std::vector<FreePoly> imposed_relations() const;

  std::vector<Monomial> pbw_basis() const;
  // |H|^2 p^rank
  std::size_t pbw_dimension_formula() const;

  std::string render_letter(int l) const;
  std::string render_monomial(const Monomial& m) const;
  std::string render(const Element& x) const;

  std::size_t cache_size() const;

  Algebra(int m, int n, int p, int d, const RuleEditor* edit);

 private:
  void build_letters();
  void build_rules(const RuleEditor* edit);
  void build_definitions();
  Element compute_mul_right(const Monomial& m, int letter) const;
  Element raw_letter(int l) const;

  SuperDims dims_;
  int p_;
  int d_;
  const CyclotomicField* field_;
  std::shared_ptr<const Groupoid> groupoid_;
  std::vector<RootInfo> roots_;
  std::vector<LetterInfo> letters_;
  std::vector<int> e_of_root_, f_of_root_, k_of_simple_, simple_root_;
  std::vector<FreePoly> definitions_;
  CycScalar inv_qq_;
  RuleTable rules_;
  std::map<std::pair<int, int>, std::string> rule_source_;

  struct Key {
    Monomial m;
    int letter;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return MonomialHash()(k.m) * 31u + static_cast<std::size_t>(k.letter);
    }
  };
  mutable std::shared_mutex cache_mu_;
  mutable std::unordered_map<Key, std::unique_ptr<Element>, KeyHash> cache_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Independent reducer on words: repeatedly rewrite the leftmost (or
// rightmost) descent using the rule table; power truncation is eager.
enum class DescentStrategy { Leftmost, Rightmost };
Element reduce_word(const Algebra& a, const std::vector<int>& word, const CycScalar& coeff,
                    DescentStrategy s);

// Diamond-lemma validation: confluence, defining relations, dimension, and
// provenance of every e-e / f-f rule via the free-algebra oracle.
Report verify_pbw(const Algebra& a);

// free-algebra ideal membership at fixed multidegree: is `target` (a
// polynomial in simple letters) in the two-sided ideal generated by `rels`?
bool ideal_member(const FreePoly& target, const std::vector<FreePoly>& rels,
                  const CyclotomicField& field);

}  // namespace qsuper
