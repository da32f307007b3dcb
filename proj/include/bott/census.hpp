#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "bott/errors.hpp"
#include "bott/forest.hpp"

// Enumeration of Bott diagrams up to isomorphism: grow forests by giving
// vertex v a parent in {root, 1, ..., v-1}, then deduplicate by canonical
// code.  Exhaustive; fine at desk scale.

namespace bott {

inline std::vector<BottDiagram> enumerate_shapes(int n) {
  if (n < 1) throw Error("vertex count must be positive");
  std::map<CanonicalCode, BottDiagram> classes;
  // odometer over parent choices, parent[v] in {0,...,v-1}
  std::vector<int> choice(n + 1, 0);
  while (true) {
    BottDiagram d;
    d.n = n;
    d.parent.assign(n + 1, 0);
    d.label.assign(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
      d.parent[v] = choice[v];
      d.label[v] = choice[v] == 0 ? 0 : 1;
    }
    classes.emplace(canonical_code(d), d);
    int v = n;
    while (v >= 1 && ++choice[v] >= v) choice[v--] = 0;
    if (v < 1) break;
  }
  std::vector<BottDiagram> out;
  for (auto& [code, d] : classes) out.push_back(d);
  return out;
}

inline std::vector<BottDiagram> enumerate_labelled(int n, Coef qmax) {
  if (qmax < 1) throw Error("label bound must be positive");
  std::map<CanonicalCode, BottDiagram> classes;
  for (const auto& shape : enumerate_shapes(n)) {
    std::vector<int> edges;
    for (int v = 1; v <= n; ++v)
      if (!shape.is_root(v)) edges.push_back(v);
    std::vector<Coef> lab(edges.size(), 1);
    while (true) {
      BottDiagram d = shape;
      for (std::size_t i = 0; i < edges.size(); ++i) d.label[edges[i]] = lab[i];
      classes.emplace(canonical_code(d), d);
      std::size_t i = 0;
      while (i < lab.size() && ++lab[i] > qmax) lab[i++] = 1;
      if (i >= lab.size()) break;
    }
  }
  std::vector<BottDiagram> out;
  for (auto& [code, d] : classes) out.push_back(d);
  return out;
}

}  // namespace bott
