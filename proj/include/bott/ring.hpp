#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bott/errors.hpp"

// Exact arithmetic in Z[x_1,...,x_n] / (x_j^2 + x_j h_j) on the squarefree
// monomial basis.  The relations are triangular (h_j involves only smaller
// indices), so normal forms exist and are unique.

namespace bott {

// Squarefree monomial: a subset of generator indices {1,...,n}, n <= 64.
struct Monomial {
  std::uint64_t bits = 0;

  static constexpr int max_vars = 64;

  static Monomial one() { return {}; }

  static Monomial var(int j) {
    if (j < 1 || j > max_vars) throw Error("generator index out of range");
    return Monomial{std::uint64_t{1} << (j - 1)};
  }

  bool contains(int j) const { return (bits >> (j - 1)) & 1; }
  int degree() const { return std::popcount(bits); }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint64_t b = bits; b; b &= b - 1)
      out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  bool operator==(const Monomial&) const = default;
};

// Term order: degree first, then lexicographic on the ascending index list.
struct MonomialOrder {
  bool operator()(Monomial a, Monomial b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    std::uint64_t x = a.bits, y = b.bits;
    while (x && y) {
      int i = std::countr_zero(x), j = std::countr_zero(y);
      if (i != j) return i < j;
      x &= x - 1;
      y &= y - 1;
    }
    return false;
  }
};

// Element in normal form: no zero coefficients, all monomials squarefree.
struct RingElement {
  std::map<Monomial, Coef, MonomialOrder> terms;

  static RingElement zero() { return {}; }

  static RingElement constant(Coef c) {
    RingElement e;
    if (c != 0) e.terms[Monomial::one()] = c;
    return e;
  }

  static RingElement generator(int j) {
    RingElement e;
    e.terms[Monomial::var(j)] = 1;
    return e;
  }

  bool is_zero() const { return terms.empty(); }

  Coef coefficient(Monomial m) const {
    auto it = terms.find(m);
    return it == terms.end() ? 0 : it->second;
  }

  void add_term(Monomial m, Coef c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(m, c);
    if (!fresh) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms.erase(it);
    }
  }

  friend bool operator==(const RingElement&, const RingElement&) = default;
};

inline RingElement add(const RingElement& a, const RingElement& b) {
  RingElement out = a;
  for (const auto& [m, c] : b.terms) out.add_term(m, c);
  return out;
}

inline RingElement scale(const RingElement& a, Coef c) {
  RingElement out;
  for (const auto& [m, ac] : a.terms) out.add_term(m, checked_mul(ac, c));
  return out;
}

inline RingElement negate(const RingElement& a) {
  RingElement out;
  for (const auto& [m, c] : a.terms) out.add_term(m, checked_neg(c));
  return out;
}

// Presentation of H*(M,Z): n generators, h[j] linear in x_1..x_{j-1}.
struct RingPresentation {
  int n = 0;
  std::vector<RingElement> h;  // 1-indexed; h[0] unused, h[1] = 0
};

inline void validate(const RingPresentation& pres) {
  if (pres.n < 1 || pres.n > Monomial::max_vars)
    throw Error("presentation dimension out of range");
  if (static_cast<int>(pres.h.size()) != pres.n + 1)
    throw Error("presentation has wrong number of twist classes");
  for (int j = 1; j <= pres.n; ++j) {
    for (const auto& [m, c] : pres.h[j].terms) {
      if (m.degree() != 1) throw Error("twist class is not linear");
      if (m.indices()[0] >= j)
        throw Error("twist class involves a non-smaller generator");
    }
  }
}

// Trivial presentation (all twists zero); the ring of (P^1)^n.
inline RingPresentation trivial_presentation(int n) {
  RingPresentation pres;
  pres.n = n;
  pres.h.assign(n + 1, RingElement::zero());
  validate(pres);
  return pres;
}

// Monomial with repeated factors, as an exponent vector indexed 1..n.
using RawMonomial = std::vector<int>;
using RawTerms = std::map<RawMonomial, Coef>;

// Normal form: repeatedly replace the highest squared factor x_j^2 by
// -x_j h_j until every monomial is squarefree.  h_j only involves smaller
// indices, so this terminates; the result is substitution-order independent.
inline RingElement reduce(const RawTerms& raw, const RingPresentation& pres) {
  RingElement out;
  std::vector<std::pair<RawMonomial, Coef>> work;
  for (const auto& [e, c] : raw) {
    if (static_cast<int>(e.size()) > pres.n + 1) {
      for (std::size_t j = pres.n + 1; j < e.size(); ++j)
        if (e[j] != 0) throw Error("monomial index exceeds presentation size");
    }
    RawMonomial exps(pres.n + 1, 0);
    for (std::size_t j = 1; j < e.size() && j <= static_cast<std::size_t>(pres.n); ++j) {
      if (e[j] < 0) throw Error("negative exponent");
      exps[j] = e[j];
    }
    work.emplace_back(std::move(exps), c);
  }
  while (!work.empty()) {
    auto [e, c] = std::move(work.back());
    work.pop_back();
    if (c == 0) continue;
    int sq = 0;
    for (int j = pres.n; j >= 1; --j)
      if (e[j] >= 2) {
        sq = j;
        break;
      }
    if (sq == 0) {
      Monomial m;
      for (int j = 1; j <= pres.n; ++j)
        if (e[j]) m.bits |= std::uint64_t{1} << (j - 1);
      out.add_term(m, c);
      continue;
    }
    e[sq] -= 2;
    for (const auto& [hm, hc] : pres.h[sq].terms) {
      RawMonomial e2 = e;
      e2[sq] += 1;
      e2[hm.indices()[0]] += 1;
      work.emplace_back(std::move(e2), checked_mul(checked_neg(c), hc));
    }
  }
  return out;
}

inline RingElement multiply(const RingElement& a, const RingElement& b,
                            const RingPresentation& pres) {
  RawTerms raw;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      RawMonomial e(pres.n + 1, 0);
      for (int j : ma.indices()) {
        if (j > pres.n) throw Error("monomial index exceeds presentation size");
        e[j] += 1;
      }
      for (int j : mb.indices()) {
        if (j > pres.n) throw Error("monomial index exceeds presentation size");
        e[j] += 1;
      }
      Coef& slot = raw[e];
      slot = checked_add(slot, checked_mul(ca, cb));
    }
  return reduce(raw, pres);
}

// c(M) = prod_j (1 + 2 x_j + h_j), in normal form.
inline RingElement total_chern(const RingPresentation& pres) {
  validate(pres);
  RingElement acc = RingElement::constant(1);
  for (int j = 1; j <= pres.n; ++j) {
    RingElement factor = RingElement::constant(1);
    factor = add(factor, scale(RingElement::generator(j), 2));
    factor = add(factor, pres.h[j]);
    acc = multiply(acc, factor, pres);
  }
  return acc;
}

inline RingElement graded_component(const RingElement& e, int k) {
  RingElement out;
  for (const auto& [m, c] : e.terms)
    if (m.degree() == k) out.terms[m] = c;
  return out;
}

// Text form: terms joined by " + ", each `<coef>*x<i1>x<i2>...`; `0` if zero.
inline std::string to_string(const RingElement& e, const std::string& var = "x") {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.terms) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (m.degree() > 0) {
      os << '*';
      for (int j : m.indices()) os << var << j;
    }
  }
  return os.str();
}

}  // namespace bott
