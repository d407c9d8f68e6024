#pragma once

#include "qsuper/algebra.hpp"
#include "qsuper/report.hpp"
#include "qsuper/roots.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace qsuper {

// algebra map stored as images of every source letter (composite letters via
// their q-bracket definitions)
class AlgebraMorphism {
 public:
  AlgebraMorphism() = default;
  // images of the simple letters e_i, f_i, k_i; missing letters throw
  AlgebraMorphism(AlgebraPtr source, AlgebraPtr target, const std::vector<Element>& letter_images,
                  std::string label);
  static AlgebraMorphism identity(AlgebraPtr a);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const std::string& label() const { return label_; }
  const Element& image(int letter) const { return images_[letter]; }
  bool verified() const { return verified_; }
  void set_verified(bool v) { verified_ = v; }

  Element apply(const Element& x) const;
  Element apply_monomial(const Monomial& m) const;
  Element apply_free(const FreePoly& f) const;

 private:
  AlgebraPtr source_, target_;
  std::vector<Element> images_;
  std::string label_;
  bool verified_ = false;
  struct Cache {
    std::mutex mu;
    std::unordered_map<Monomial, Element, MonomialHash> map;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// second after first
AlgebraMorphism compose(const AlgebraMorphism& second, const AlgebraMorphism& first);
// equal images on every simple generator
bool same_on_generators(const AlgebraMorphism& f, const AlgebraMorphism& g, std::string* witness = nullptr);
bool is_identity_on_generators(const AlgebraMorphism& f, std::string* witness = nullptr);

enum class TVariant { T, TMinus, TInverse };

// reflection data of edge (d, i): x = sigma(alpha_i), y = sigma(alpha_j), b
struct ReflectionData {
  int source = 0, target = 0, i = 0, j = 0;  // i, j 1-based
  Weight x, y;
  int parity_i = 0, parity_j = 0, parity_x = 0, parity_y = 0;
  int b = 1;
  int xy = 0;  // (x, y)
  int a_ij = 0;  // (alpha_i, alpha_j) in the source diagram
};
ReflectionData reflection_data(const Groupoid& g, int d, int i);

// T, T^- : U^d -> U^{d'} and T^{-1} : U^{d'} -> U^d with d' the reflection of d at i
AlgebraMorphism t_map(int m, int n, int p, int i, int d, TVariant v);

// generator arrows sigma_alpha have alpha positive (eps_bar_a - eps_bar_b, a < b);
// the functor sends them to T and their reverses to T^-
bool is_generator_edge(const DynkinDiagram& d, int i);
AlgebraMorphism functor_edge(int m, int n, int p, int i, int d);

// relations (defining and imposed) map to zero, inverse composes to identity
Report verify_isomorphism(const AlgebraMorphism& f, const AlgebraMorphism* inverse = nullptr);
// br1 on every edge, br5 from every diagram, br4 where parities agree
Report verify_braid(int m, int n, int p);
// composite of functor_edge along a groupoid word
AlgebraMorphism functor_apply(int m, int n, int p, const GroupoidWord& w);

}  // namespace qsuper
