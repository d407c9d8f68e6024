#include "qsuper/expr.hpp"

#include <cctype>

namespace qsuper {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool starts_word(const char* w) {
    skip();
    return s_.compare(pos_, std::char_traits<char>::length(w), w) == 0;
  }

  unsigned long uint_lit() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    if (pos_ - start > 9) fail("integer literal too long");
    return std::stoul(s_.substr(start, pos_ - start));
  }
  long sint_lit() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    long v = static_cast<long>(uint_lit());
    return neg ? -v : v;
  }

  ExprPtr expr() {
    auto node = std::make_shared<Expr>();
    node->kind = Expr::Kind::Sum;
    int sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    node->children.push_back(term());
    node->signs.push_back(sign);
    for (;;) {
      if (eat('+')) sign = 1;
      else if (eat('-')) sign = -1;
      else break;
      node->children.push_back(term());
      node->signs.push_back(sign);
    }
    return node;
  }

  bool atom_start() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'e' || c == 'f' || c == 'k' || c == 'q';
  }

  ExprPtr term() {
    auto node = std::make_shared<Expr>();
    node->kind = Expr::Kind::Product;
    node->children.push_back(factor());
    for (;;) {
      if (eat('*')) {
        node->children.push_back(factor());
      } else if (atom_start()) {
        node->children.push_back(factor());
      } else {
        break;
      }
    }
    return node;
  }

  ExprPtr factor() {
    ExprPtr a = atom();
    if (!eat('^')) return a;
    long n = sint_lit();
    if (a->kind == Expr::Kind::QPower) {
      auto q = std::make_shared<Expr>(*a);
      q->exponent *= n;
      return q;
    }
    auto node = std::make_shared<Expr>();
    node->kind = Expr::Kind::Power;
    node->exponent = n;
    node->children.push_back(a);
    return node;
  }

  ExprPtr atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (starts_word("qbr")) {
      pos_ += 3;
      expect('(');
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::QBracket;
      node->children.push_back(expr());
      expect(',');
      node->children.push_back(expr());
      expect(',');
      node->exponent = sint_lit();
      expect(')');
      return node;
    }
    if (c == 'q') {
      ++pos_;
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::QPower;
      node->exponent = 1;
      return node;
    }
    if (c == 'e' || c == 'f' || c == 'k') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(pos_ < s_.size() ? s_[pos_] : '\0')))
        fail(std::string("expected index after '") + c + "'");
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Gen;
      node->gen = c;
      node->index = static_cast<int>(uint_lit());
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto num = static_cast<long>(uint_lit());
      long den = 1;
      if (peek() == '/') {
        ++pos_;
        den = static_cast<long>(uint_lit());
        if (den == 0) fail("zero denominator");
      }
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Rational;
      node->value = Rational(num, den);
      node->value.canonicalize();
      return node;
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

Element power_of(const Element& x, long n, const Algebra& a) {
  if (n >= 0) return a.power(x, n);
  // inverses exist for scalars and single k-monomials
  if (x.size() == 1) {
    const auto& [m, c] = *x.terms().begin();
    bool group_like = true;
    for (int l = 0; l < a.letter_count(); ++l)
      if (m.e[l] && a.letters()[l].kind != LetterKind::K) group_like = false;
    if (group_like && !c.is_zero()) {
      Element inv = a.one() * c.inverse();
      for (int l = 0; l < a.letter_count(); ++l)
        if (m.e[l]) inv = inv * a.letter(l, static_cast<long>(a.p()) - m.e[l]);
      return a.power(inv, -n);
    }
  }
  throw std::invalid_argument("negative power of a non-invertible element");
}

}  // namespace

std::string Expr::to_string() const {
  switch (kind) {
    case Kind::Sum: {
      std::string s;
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i == 0) s += signs[i] < 0 ? "-" : "";
        else s += signs[i] < 0 ? " - " : " + ";
        s += children[i]->to_string();
      }
      return children.size() > 1 ? "(" + s + ")" : s;
    }
    case Kind::Product: {
      std::string s;
      for (std::size_t i = 0; i < children.size(); ++i) s += (i ? "*" : "") + children[i]->to_string();
      return s;
    }
    case Kind::Power: return children[0]->to_string() + "^" + std::to_string(exponent);
    case Kind::Gen: return std::string(1, gen) + std::to_string(index);
    case Kind::Rational: return value.get_str();
    case Kind::QPower: return exponent == 1 ? "q" : "q^" + std::to_string(exponent);
    case Kind::QBracket:
      return "qbr(" + children[0]->to_string() + "," + children[1]->to_string() + "," + std::to_string(exponent) + ")";
  }
  return "";
}

ExprPtr parse_expr(const std::string& text) { return Parser(text).run(); }

Element eval_expr(const Expr& e, const Algebra& a) {
  switch (e.kind) {
    case Expr::Kind::Sum: {
      Element out = a.zero();
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        Element c = eval_expr(*e.children[i], a);
        if (e.signs[i] < 0) out -= c;
        else out += c;
      }
      return out;
    }
    case Expr::Kind::Product: {
      Element out = a.one();
      for (const ExprPtr& c : e.children) out = out * eval_expr(*c, a);
      return out;
    }
    case Expr::Kind::Power: return power_of(eval_expr(*e.children[0], a), e.exponent, a);
    case Expr::Kind::Gen:
      if (e.index < 1 || e.index > a.rank())
        throw std::invalid_argument("generator index " + std::to_string(e.index) + " out of range 1.." +
                                    std::to_string(a.rank()));
      return a.element_from_generator(e.gen, e.index, 1);
    case Expr::Kind::Rational: return a.one() * a.scalar(e.value);
    case Expr::Kind::QPower: return a.one() * a.q(e.exponent);
    case Expr::Kind::QBracket: {
      Element x = eval_expr(*e.children[0], a), y = eval_expr(*e.children[1], a);
      if (x.parity() < 0 || y.parity() < 0) throw std::invalid_argument("qbr needs homogeneous arguments");
      return a.qbracket(x, y, e.exponent);
    }
  }
  return a.zero();
}

Element eval_text(const std::string& text, const Algebra& a) { return eval_expr(*parse_expr(text), a); }

}  // namespace qsuper
