#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "bott/errors.hpp"
#include "bott/forest.hpp"
#include "bott/ring.hpp"

// Bott towers as strictly lower-triangular integer matrices, the
// Z-triviality decision, the z-basis change, and Bott diagram extraction.

namespace bott {

struct BottMatrix {
  int n = 0;
  // 1-indexed rows; a[j] holds a_{j1},...,a_{j,j-1} (row 1 is empty)
  std::vector<std::vector<Coef>> a;
};

inline void validate(const BottMatrix& m) {
  if (m.n < 1 || m.n > Monomial::max_vars)
    throw Error("tower dimension out of range");
  if (static_cast<int>(m.a.size()) != m.n + 1)
    throw Error("tower matrix has wrong number of rows");
  for (int j = 1; j <= m.n; ++j)
    if (static_cast<int>(m.a[j].size()) != j - 1)
      throw Error("tower matrix row has wrong length");
}

inline BottMatrix zero_matrix(int n) {
  BottMatrix m;
  m.n = n;
  m.a.resize(n + 1);
  for (int j = 1; j <= n; ++j) m.a[j].assign(j - 1, 0);
  return m;
}

// h_j = a_{j1} x_1 + ... + a_{j,j-1} x_{j-1}
inline RingPresentation presentation(const BottMatrix& m) {
  validate(m);
  RingPresentation pres;
  pres.n = m.n;
  pres.h.assign(m.n + 1, RingElement::zero());
  for (int j = 2; j <= m.n; ++j)
    for (int k = 1; k < j; ++k)
      pres.h[j].add_term(Monomial::var(k), m.a[j][k - 1]);
  return pres;
}

struct NotZTrivial {
  enum class Reason { OddCoefficient, MultipleZTerms };
  int index = 0;
  Reason reason = Reason::OddCoefficient;
};

inline std::string to_string(const NotZTrivial& e) {
  return "not Z-trivial: j=" + std::to_string(e.index) + " (" +
         (e.reason == NotZTrivial::Reason::OddCoefficient ? "odd-coefficient"
                                                          : "multiple-z-terms") +
         ")";
}

struct ZBasis {
  std::vector<RingElement> z;            // 1-indexed; z_j in the x-generators
  std::vector<int> sigma;                // 1-indexed; 0 when h_j = 0
  std::vector<Coef> q;                   // 1-indexed; 0 when h_j = 0
  std::vector<std::vector<int>> levels;  // A_0,...,A_r
};

// Inductive acceptance test: rewrite each h_j in the z-basis built so far
// (triangular, unit diagonal, exact integer back-substitution) and require
// h_j = 2q z_k for a single k < j.  Negative q is normalized away by the
// dual-bundle replacement, which leaves z_j itself unchanged.
inline std::variant<ZBasis, NotZTrivial> z_basis(const BottMatrix& m) {
  validate(m);
  int n = m.n;
  // zvec[j][k] = coefficient of x_k in z_j
  std::vector<std::vector<Coef>> zvec(n + 1, std::vector<Coef>(n + 1, 0));
  ZBasis out;
  out.z.assign(n + 1, RingElement::zero());
  out.sigma.assign(n + 1, 0);
  out.q.assign(n + 1, 0);
  for (int j = 1; j <= n; ++j) {
    std::vector<Coef> b(n + 1, 0);  // x-coordinates of h_j
    for (int k = 1; k < j; ++k) b[k] = m.a[j][k - 1];
    std::vector<Coef> d(n + 1, 0);  // z-coordinates of h_j
    for (int k = j - 1; k >= 1; --k) {
      d[k] = b[k];
      if (d[k] != 0)
        for (int i = 1; i <= k; ++i)
          b[i] = checked_add(b[i], checked_mul(checked_neg(d[k]), zvec[k][i]));
    }
    std::vector<int> support;
    for (int k = 1; k < j; ++k)
      if (d[k] != 0) support.push_back(k);
    zvec[j][j] = 1;
    if (support.size() >= 2)
      return NotZTrivial{j, NotZTrivial::Reason::MultipleZTerms};
    if (support.size() == 1) {
      int k = support[0];
      Coef c = d[k];
      if (c % 2 != 0) return NotZTrivial{j, NotZTrivial::Reason::OddCoefficient};
      out.sigma[j] = k;
      out.q[j] = c / 2 < 0 ? -(c / 2) : c / 2;
      // z_j = x_j + (c/2) z_k, in x-coordinates
      for (int i = 1; i <= k; ++i)
        zvec[j][i] = checked_add(zvec[j][i], checked_mul(c / 2, zvec[k][i]));
    }
    for (int i = 1; i <= j; ++i)
      if (zvec[j][i] != 0) out.z[j].add_term(Monomial::var(i), zvec[j][i]);
  }
  // level partition via sigma
  std::vector<int> lv(n + 1, 0);
  int r = 0;
  for (int j = 1; j <= n; ++j) {
    if (out.sigma[j] != 0) lv[j] = lv[out.sigma[j]] + 1;
    r = std::max(r, lv[j]);
  }
  out.levels.assign(r + 1, {});
  for (int j = 1; j <= n; ++j) out.levels[lv[j]].push_back(j);
  return out;
}

inline std::variant<BottDiagram, NotZTrivial> diagram(const BottMatrix& m) {
  auto zb = z_basis(m);
  if (auto* err = std::get_if<NotZTrivial>(&zb)) return *err;
  const auto& z = std::get<ZBasis>(zb);
  BottDiagram d;
  d.n = m.n;
  d.parent.assign(m.n + 1, 0);
  d.label.assign(m.n + 1, 0);
  for (int j = 1; j <= m.n; ++j) {
    d.parent[j] = z.sigma[j];
    d.label[j] = z.q[j];
  }
  return d;
}

// Build a tower realizing a diagram.  Vertices are numbered by
// (level, subtree code, original index) so parents precede children and the
// output matrix is deterministic; then h_j = 2q_j x_{sigma(j)} + q_j h_{sigma(j)}
// unfolds into the x-basis.
inline BottMatrix tower_of_diagram(const BottDiagram& d) {
  validate(d);
  std::vector<std::tuple<int, std::string, int>> key;
  for (int v = 1; v <= d.n; ++v)
    key.emplace_back(level_of(d, v), subtree_code(d, v).value, v);
  std::vector<int> order(d.n);
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(),
            [&](int u, int v) { return key[u - 1] < key[v - 1]; });
  std::vector<int> renum(d.n + 1, 0);  // old vertex -> new index
  for (int i = 0; i < d.n; ++i) renum[order[i]] = i + 1;

  BottMatrix m = zero_matrix(d.n);
  // hvec[j][k] = a_{jk}, filled in increasing j so parents are done first
  std::vector<std::vector<Coef>> hvec(d.n + 1, std::vector<Coef>(d.n + 1, 0));
  for (int i = 0; i < d.n; ++i) {
    int v = order[i];
    int j = i + 1;
    if (d.is_root(v)) continue;
    int p = renum[d.parent[v]];
    Coef q = d.label[v];
    hvec[j][p] = checked_mul(2, q);
    for (int k = 1; k < p; ++k)
      hvec[j][k] = checked_add(hvec[j][k], checked_mul(q, hvec[p][k]));
    for (int k = 1; k < j; ++k) m.a[j][k - 1] = hvec[j][k];
  }
  return m;
}

// Total Chern class rewritten in the z-generators: substitute
// x_j = z_j - q_j z_{sigma(j)} into c(M) and reduce in the trivial ring.
// For every Z-trivial tower the result is prod_j (1 + 2 z_j).
inline std::variant<RingElement, NotZTrivial> chern_in_z_basis(const BottMatrix& m) {
  auto zb = z_basis(m);
  if (auto* err = std::get_if<NotZTrivial>(&zb)) return *err;
  const auto& z = std::get<ZBasis>(zb);
  RingPresentation zpres = trivial_presentation(m.n);
  std::vector<RingElement> subst(m.n + 1);
  for (int j = 1; j <= m.n; ++j) {
    subst[j] = RingElement::generator(j);
    if (z.sigma[j] != 0) {
      // z_j = x_j + (signed q) z_sigma, so x_j = z_j - (signed q) z_sigma;
      // the signed q is the x_sigma coefficient of z_j
      Coef lead = z.z[j].coefficient(Monomial::var(z.sigma[j]));
      subst[j].add_term(Monomial::var(z.sigma[j]), checked_neg(lead));
    }
  }
  RingElement cx = total_chern(presentation(m));
  RingElement out;
  for (const auto& [mono, c] : cx.terms) {
    RingElement prod = RingElement::constant(c);
    for (int j : mono.indices()) prod = multiply(prod, subst[j], zpres);
    out = add(out, prod);
  }
  return out;
}

// Biholomorphism test: equal canonical Bott-diagram codes.
inline std::variant<bool, NotZTrivial> biholomorphic(const BottMatrix& m1,
                                                     const BottMatrix& m2) {
  auto d1 = diagram(m1);
  if (auto* err = std::get_if<NotZTrivial>(&d1)) return *err;
  auto d2 = diagram(m2);
  if (auto* err = std::get_if<NotZTrivial>(&d2)) return *err;
  return isomorphic(std::get<BottDiagram>(d1), std::get<BottDiagram>(d2));
}

}  // namespace bott
