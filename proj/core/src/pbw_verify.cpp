#include "qsuper/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace qsuper {

namespace {

using Row = std::map<int, CycScalar>;

// sparse echelon basis keyed by the largest column of each row
struct Echelon {
  std::map<int, Row> rows;

  // reduce in place; returns true if the row vanished
  bool reduce(Row& r) const {
    while (!r.empty()) {
      auto piv = std::prev(r.end());
      auto it = rows.find(piv->first);
      if (it == rows.end()) return false;
      CycScalar c = piv->second;
      for (const auto& [col, v] : it->second) {
        auto slot = r.find(col);
        CycScalar nv = (slot == r.end() ? CycScalar() : slot->second) - v * c;
        if (nv.is_zero()) {
          if (slot != r.end()) r.erase(slot);
        } else if (slot == r.end()) {
          r.emplace(col, nv);
        } else {
          slot->second = nv;
        }
      }
    }
    return true;
  }

  void insert(Row r) {
    if (reduce(r)) return;
    auto piv = std::prev(r.end());
    CycScalar inv = piv->second.inverse();
    for (auto& [col, v] : r) v *= inv;
    rows.emplace(std::prev(r.end())->first, std::move(r));
  }
};

std::vector<int> multidegree(const std::vector<int>& w, int alphabet_max) {
  std::vector<int> d(alphabet_max + 1, 0);
  for (int l : w) d[l]++;
  return d;
}

void words_of_degree(std::vector<int>& deg, std::vector<int>& cur, std::vector<std::vector<int>>& out,
                     int remaining) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t l = 0; l < deg.size(); ++l) {
    if (!deg[l]) continue;
    deg[l]--;
    cur.push_back(static_cast<int>(l));
    words_of_degree(deg, cur, out, remaining - 1);
    cur.pop_back();
    deg[l]++;
  }
}

}  // namespace

bool ideal_member(const FreePoly& target, const std::vector<FreePoly>& rels,
                  const CyclotomicField& field) {
  int amax = 0;
  auto scan = [&](const FreePoly& f) {
    for (const auto& t : f.terms)
      for (int l : t.letters) amax = std::max(amax, l);
  };
  scan(target);
  for (const auto& r : rels) scan(r);

  // split the target into multidegree components
  std::map<std::vector<int>, FreePoly> parts;
  for (const auto& t : target.terms) {
    if (t.coeff.is_zero()) continue;
    parts[multidegree(t.letters, amax)].terms.push_back(t);
  }
  for (const auto& [deg, part] : parts) {
    std::map<std::vector<int>, int> index;
    auto col = [&](const std::vector<int>& w) {
      auto [it, ins] = index.try_emplace(w, static_cast<int>(index.size()));
      return it->second;
    };
    Echelon ech;
    for (const auto& rel : rels) {
      if (rel.terms.empty()) continue;
      auto rdeg = multidegree(rel.terms.front().letters, amax);
      std::vector<int> rest(deg.size());
      bool fits = true;
      int len = 0;
      for (std::size_t l = 0; l < deg.size(); ++l) {
        rest[l] = deg[l] - rdeg[l];
        if (rest[l] < 0) fits = false;
        len += rest[l];
      }
      if (!fits) continue;
      std::vector<std::vector<int>> outer;
      std::vector<int> cur;
      words_of_degree(rest, cur, outer, len);
      for (const auto& w : outer)
        for (int split = 0; split <= len; ++split) {
          Row row;
          for (const auto& t : rel.terms) {
            std::vector<int> word(w.begin(), w.begin() + split);
            word.insert(word.end(), t.letters.begin(), t.letters.end());
            word.insert(word.end(), w.begin() + split, w.end());
            int c = col(word);
            auto [it, ins] = row.try_emplace(c, CycScalar(field));
            it->second += t.coeff;
            if (it->second.is_zero()) row.erase(it);
          }
          if (!row.empty()) ech.insert(std::move(row));
        }
    }
    Row tr;
    for (const auto& t : part.terms) {
      int c = col(t.letters);
      auto [it, ins] = tr.try_emplace(c, CycScalar(field));
      it->second += t.coeff;
      if (it->second.is_zero()) tr.erase(it);
    }
    if (!ech.reduce(tr)) return false;
  }
  return true;
}

namespace {

// expand a normal-form element into simple letters via letter definitions
FreePoly expand_element(const Algebra& a, const Element& x) {
  FreePoly out;
  for (const auto& [m, c] : x.terms()) {
    FreePoly acc{"", {{c, {}}}};
    for (int l : a.monomial_letters(m)) {
      FreePoly next;
      for (const auto& t : acc.terms)
        for (const auto& u : a.letter_definition(l).terms) {
          FreeTerm nt{t.coeff * u.coeff, t.letters};
          nt.letters.insert(nt.letters.end(), u.letters.begin(), u.letters.end());
          next.terms.push_back(std::move(nt));
        }
      acc = std::move(next);
    }
    for (auto& t : acc.terms) out.terms.push_back(std::move(t));
  }
  return out;
}

FreePoly free_power(const FreePoly& f, int n, const CyclotomicField& field) {
  FreePoly acc{"", {{CycScalar(field, 1), {}}}};
  for (int k = 0; k < n; ++k) {
    FreePoly next;
    for (const auto& t : acc.terms)
      for (const auto& u : f.terms) {
        FreeTerm nt{t.coeff * u.coeff, t.letters};
        nt.letters.insert(nt.letters.end(), u.letters.begin(), u.letters.end());
        next.terms.push_back(std::move(nt));
      }
    acc = std::move(next);
  }
  return acc;
}

std::string pair_name(const Algebra& a, int x, int y) {
  return a.letters()[x].name + "*" + a.letters()[y].name;
}

}  // namespace

Report verify_pbw(const Algebra& a) {
  Report rep;
  rep.name = "pbw";
  const int L = a.letter_count();
  std::vector<std::pair<std::string, std::string>> params = {
      {"m", std::to_string(a.dims().m)}, {"n", std::to_string(a.dims().n)},
      {"p", std::to_string(a.p())},      {"d", std::to_string(a.d())}};
  auto letter = [&](int l) { return a.letter(l); };

  // (1) confluence
  {
    std::string witness;
    int count = 0;
    auto compare = [&](const Element& lhs, const Element& rhs, const std::string& what) {
      ++count;
      if (witness.empty() && !(lhs == rhs))
        witness = what + ": " + a.render(lhs) + " vs " + a.render(rhs);
    };
    for (int x = 0; x < L; ++x)
      for (int y = 0; y < x; ++y)
        for (int z = 0; z < y; ++z) {
          Element xy = a.multiply(letter(x), letter(y));
          Element yz = a.multiply(letter(y), letter(z));
          compare(a.multiply(xy, letter(z)), a.multiply(letter(x), yz),
                  "overlap " + a.letters()[x].name + "*" + a.letters()[y].name + "*" + a.letters()[z].name);
        }
    for (int x = 0; x < L; ++x) {
      const auto& li = a.letters()[x];
      Monomial top;
      top.e[x] = static_cast<std::uint8_t>(li.bound - 1);
      Element xn1 = a.monomial(top, a.scalar(1));
      Element xn = a.multiply(xn1, letter(x));
      for (int y = 0; y < L; ++y) {
        if (y < x) {
          compare(a.multiply(xn, letter(y)), a.multiply(xn1, a.multiply(letter(x), letter(y))),
                  "power overlap " + li.name + "^" + std::to_string(li.bound) + "*" + a.letters()[y].name);
        } else if (y > x) {
          compare(a.multiply(letter(y), xn), a.multiply(a.multiply(letter(y), letter(x)), xn1),
                  "power overlap " + a.letters()[y].name + "*" + li.name + "^" + std::to_string(li.bound));
        }
      }
    }
    auto p = params;
    p.push_back({"ambiguities", std::to_string(count)});
    rep.add("confluence", witness.empty(), witness, p);
  }

  // (2) defining relations
  {
    std::string witness;
    auto rels = a.defining_relations();
    for (const auto& r : rels) {
      Element v = a.eval_free(r);
      if (!v.is_zero() && witness.empty()) witness = r.name + " -> " + a.render(v);
    }
    for (int l = 0; l < L; ++l) {
      const auto& def = a.letter_definition(l);
      if (def.terms.size() == 1 && def.terms[0].letters == std::vector<int>{l}) continue;
      Element v = a.letter(l) - a.eval_free(def);
      if (!v.is_zero() && witness.empty())
        witness = "definition of " + a.letters()[l].name + " -> " + a.render(v);
    }
    auto p = params;
    p.push_back({"relations", std::to_string(rels.size())});
    rep.add("relations", witness.empty(), witness, p);
  }

  // (3) dimension: every bounded monomial is irreducible and the count matches
  {
    auto basis = a.pbw_basis();
    std::string witness;
    for (const auto& m : basis) {
      LetterWord w;
      for (int l = 0; l < L; ++l)
        if (m.e[l]) w.push_back({l, m.e[l]});
      Element v = a.normal_form(w, a.scalar(1));
      if (!(v == a.monomial(m, a.scalar(1)))) {
        witness = "monomial " + a.render_monomial(m) + " is reducible";
        break;
      }
    }
    std::size_t expect = a.pbw_dimension_formula();
    if (witness.empty() && basis.size() != expect)
      witness = "count " + std::to_string(basis.size()) + " != " + std::to_string(expect);
    auto p = params;
    p.push_back({"dimension", std::to_string(basis.size())});
    rep.add("dimension", witness.empty(), witness, p);
  }

  // (4) provenance of e-e and f-f rules via free-algebra ideal membership
  {
    std::string witness;
    std::vector<std::string> imposed;
    int derived = 0;
    for (bool e_side : {true, false}) {
      auto rels = a.positive_relations(e_side);
      auto kind = e_side ? LetterKind::E : LetterKind::F;
      for (const auto& [key, rhs] : a.rules()) {
        auto [x, y] = key;
        if (a.letters()[x].kind != kind || a.letters()[y].kind != kind) continue;
        FreePoly lhs;
        for (const auto& u : a.letter_definition(x).terms)
          for (const auto& v : a.letter_definition(y).terms) {
            FreeTerm nt{u.coeff * v.coeff, u.letters};
            nt.letters.insert(nt.letters.end(), v.letters.begin(), v.letters.end());
            lhs.terms.push_back(std::move(nt));
          }
        for (auto& term : expand_element(a, rhs).terms) {
          term.coeff = -term.coeff;
          lhs.terms.push_back(std::move(term));
        }
        if (ideal_member(lhs, rels, a.field()))
          ++derived;
        else if (witness.empty())
          witness = "rule " + pair_name(a, x, y) + " not derivable";
      }
      for (int l = 0; l < L; ++l) {
        const auto& li = a.letters()[l];
        if (li.kind != kind || li.simple >= 0) continue;
        FreePoly pw = free_power(a.letter_definition(l), li.bound, a.field());
        bool member = ideal_member(pw, rels, a.field());
        std::string what = li.name + "^" + std::to_string(li.bound);
        if (li.imposed_power) {
          if (member) {
            ++derived;
          } else {
            imposed.push_back(what);
          }
        } else if (member) {
          ++derived;
        } else if (witness.empty()) {
          witness = "power " + what + " not derivable";
        }
      }
    }
    auto p = params;
    p.push_back({"derived_rules", std::to_string(derived)});
    std::string imp;
    for (const auto& s : imposed) imp += (imp.empty() ? "" : ",") + s;
    p.push_back({"imposed", imp.empty() ? "none" : imp});
    rep.add("rule_provenance", witness.empty(), witness, p);
  }
  return rep;
}

}  // namespace qsuper
