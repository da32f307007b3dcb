#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bott/errors.hpp"

// Labelled rooted forests (Bott diagrams) with a canonical encoding.
// Two forests get equal codes iff they are isomorphic as labelled rooted
// forests; vertex numbering never enters the code.

namespace bott {

struct BottDiagram {
  int n = 0;
  std::vector<int> parent;   // 1-indexed; 0 means root
  std::vector<Coef> label;   // 1-indexed; 0 on roots (and on unknown edges)

  bool is_root(int v) const { return parent[v] == 0; }
};

inline void validate(const BottDiagram& d) {
  if (d.n < 1) throw Error("diagram must have at least one vertex");
  if (static_cast<int>(d.parent.size()) != d.n + 1 ||
      static_cast<int>(d.label.size()) != d.n + 1)
    throw Error("diagram arrays have wrong size");
  for (int v = 1; v <= d.n; ++v) {
    if (d.parent[v] < 0 || d.parent[v] > d.n || d.parent[v] == v)
      throw Error("parent index out of range");
    if (d.is_root(v)) {
      if (d.label[v] != 0) throw Error("root carries an edge label");
    } else if (d.label[v] < 1) {
      throw Error("edge label must be positive");
    }
  }
  // acyclicity: walk each vertex to a root, bounded by n steps
  for (int v = 1; v <= d.n; ++v) {
    int u = v;
    for (int steps = 0; !d.is_root(u); ++steps) {
      if (steps > d.n) throw Error("parent relation has a cycle");
      u = d.parent[u];
    }
  }
}

inline std::vector<std::vector<int>> children_lists(const BottDiagram& d) {
  std::vector<std::vector<int>> ch(d.n + 1);
  for (int v = 1; v <= d.n; ++v)
    if (!d.is_root(v)) ch[d.parent[v]].push_back(v);
  return ch;
}

inline int level_of(const BottDiagram& d, int v) {
  int k = 0;
  while (!d.is_root(v)) {
    v = d.parent[v];
    ++k;
  }
  return k;
}

// Level partition A_0,...,A_r; A_0 is the set of roots.
inline std::vector<std::vector<int>> levels(const BottDiagram& d) {
  int r = 0;
  std::vector<int> lv(d.n + 1);
  for (int v = 1; v <= d.n; ++v) {
    lv[v] = level_of(d, v);
    r = std::max(r, lv[v]);
  }
  std::vector<std::vector<int>> out(r + 1);
  for (int v = 1; v <= d.n; ++v) out[lv[v]].push_back(v);
  return out;
}

struct CanonicalCode {
  std::string value;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

namespace detail {

// AHU-style bottom-up code.  A vertex encodes as "(" + its children's
// entries + ")", each entry prefixed by the decimal edge label; entries are
// sorted by (label, child code).  labelled=false collapses all labels to 1.
inline std::string vertex_code(const BottDiagram& d,
                               const std::vector<std::vector<int>>& ch, int v,
                               bool labelled) {
  std::vector<std::pair<Coef, std::string>> entries;
  for (int c : ch[v])
    entries.emplace_back(labelled ? d.label[c] : 1, vertex_code(d, ch, c, labelled));
  std::sort(entries.begin(), entries.end());
  std::string out = "(";
  for (auto& [q, code] : entries) {
    out += std::to_string(q);
    out += code;
  }
  out += ")";
  return out;
}

}  // namespace detail

inline CanonicalCode canonical_code(const BottDiagram& d, bool labelled = true) {
  auto ch = children_lists(d);
  std::vector<std::string> roots;
  for (int v = 1; v <= d.n; ++v)
    if (d.is_root(v)) roots.push_back(detail::vertex_code(d, ch, v, labelled));
  std::sort(roots.begin(), roots.end());
  std::string out;
  for (auto& s : roots) out += s;
  return CanonicalCode{std::move(out)};
}

// Code of the subtree rooted at v (incoming edge label excluded).
inline CanonicalCode subtree_code(const BottDiagram& d, int v, bool labelled = true) {
  auto ch = children_lists(d);
  return CanonicalCode{detail::vertex_code(d, ch, v, labelled)};
}

inline bool isomorphic(const BottDiagram& a, const BottDiagram& b,
                       bool labelled = true) {
  return canonical_code(a, labelled) == canonical_code(b, labelled);
}

// Induced sub-forest on the given vertices (must be closed under parents
// except where the parent is dropped, in which case the vertex becomes a
// root).  Vertices are renumbered 1..k preserving relative order.
inline BottDiagram induced(const BottDiagram& d, const std::vector<int>& verts) {
  std::map<int, int> renum;
  int k = 0;
  for (int v : verts) renum[v] = ++k;
  BottDiagram out;
  out.n = k;
  out.parent.assign(k + 1, 0);
  out.label.assign(k + 1, 0);
  for (int v : verts) {
    int nv = renum[v];
    auto it = d.is_root(v) ? renum.end() : renum.find(d.parent[v]);
    if (it != renum.end()) {
      out.parent[nv] = it->second;
      out.label[nv] = d.label[v];
    }
  }
  return out;
}

// Connected components as separate diagrams, in ascending-root order.
inline std::vector<BottDiagram> components(const BottDiagram& d) {
  std::vector<int> root(d.n + 1);
  for (int v = 1; v <= d.n; ++v) {
    int u = v;
    while (!d.is_root(u)) u = d.parent[u];
    root[v] = u;
  }
  std::vector<BottDiagram> out;
  for (int r = 1; r <= d.n; ++r) {
    if (!d.is_root(r)) continue;
    std::vector<int> verts;
    for (int v = 1; v <= d.n; ++v)
      if (root[v] == r) verts.push_back(v);
    out.push_back(induced(d, verts));
  }
  return out;
}

inline BottDiagram disjoint_union(const std::vector<BottDiagram>& parts) {
  BottDiagram out;
  out.parent.assign(1, 0);
  out.label.assign(1, 0);
  int offset = 0;
  for (const auto& p : parts) {
    for (int v = 1; v <= p.n; ++v) {
      out.parent.push_back(p.is_root(v) ? 0 : p.parent[v] + offset);
      out.label.push_back(p.label[v]);
    }
    offset += p.n;
  }
  out.n = offset;
  return out;
}

}  // namespace bott
