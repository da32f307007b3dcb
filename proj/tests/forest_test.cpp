#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <vector>

#include "bott/census.hpp"
#include "bott/forest.hpp"
#include "test_util.hpp"

using namespace bott;

namespace {

BottDiagram chain3(Coef q_bottom, Coef p_top) {
  BottDiagram d;
  d.n = 3;
  d.parent = {0, 0, 1, 2};
  d.label = {0, 0, q_bottom, p_top};
  return d;
}

BottDiagram edgeless(int n) {
  BottDiagram d;
  d.n = n;
  d.parent.assign(n + 1, 0);
  d.label.assign(n + 1, 0);
  return d;
}

BottDiagram hirzebruch(Coef q) {
  BottDiagram d;
  d.n = 2;
  d.parent = {0, 0, 1};
  d.label = {0, 0, q};
  return d;
}

}  // namespace

TEST_CASE("validation rejects cycles and bad labels") {
  BottDiagram d;
  d.n = 2;
  d.parent = {0, 2, 1};
  d.label = {0, 1, 1};
  CHECK_THROWS_AS(validate(d), Error);
  d.parent = {0, 0, 1};
  d.label = {0, 0, 0};
  CHECK_THROWS_AS(validate(d), Error);
  d.label = {0, 0, 1};
  CHECK_NOTHROW(validate(d));
}

TEST_CASE("canonical_code: invariant under vertex renumbering") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    BottDiagram d = oracle::random_forest(rng, n, 5);
    BottDiagram e = oracle::relabel(rng, d);
    CHECK(canonical_code(d) == canonical_code(e));
    CHECK(canonical_code(d, false) == canonical_code(e, false));
  }
}

TEST_CASE("canonical_code: edgeless vs single edge differ") {
  CHECK(canonical_code(edgeless(2)) != canonical_code(hirzebruch(1)));
}

TEST_CASE("canonical_code: chains with swapped labels differ") {
  BottDiagram a = chain3(1, 2);
  BottDiagram b = chain3(2, 1);
  CHECK(canonical_code(a) != canonical_code(b));
  // cross-check: no label-preserving bijection exists
  CHECK_FALSE(oracle::iso_by_bijection(a, b, true));
  CHECK(oracle::iso_by_bijection(a, b, false));
}

TEST_CASE("isomorphic: reflexive and order-insensitive for siblings") {
  BottDiagram star1;
  star1.n = 3;
  star1.parent = {0, 0, 1, 1};
  star1.label = {0, 0, 1, 2};
  BottDiagram star2;
  star2.n = 3;
  star2.parent = {0, 0, 1, 1};
  star2.label = {0, 0, 2, 1};
  CHECK(isomorphic(star1, star1));
  CHECK(isomorphic(star1, star2));
  CHECK_FALSE(isomorphic(hirzebruch(1), hirzebruch(2)));
}

TEST_CASE("code equality coincides with bijection search on all small forests") {
  // every labelled forest with n <= 4 and labels in {1,2}
  for (int n = 1; n <= 4; ++n) {
    std::vector<BottDiagram> all;
    std::vector<int> choice(n + 1, 0);
    while (true) {
      BottDiagram shape;
      shape.n = n;
      shape.parent.assign(n + 1, 0);
      shape.label.assign(n + 1, 0);
      std::vector<int> edges;
      for (int v = 1; v <= n; ++v) {
        shape.parent[v] = choice[v];
        if (choice[v] != 0) edges.push_back(v);
      }
      std::vector<Coef> lab(edges.size(), 1);
      while (true) {
        BottDiagram d = shape;
        for (std::size_t i = 0; i < edges.size(); ++i) d.label[edges[i]] = lab[i];
        all.push_back(d);
        std::size_t i = 0;
        while (i < lab.size() && ++lab[i] > 2) lab[i++] = 1;
        if (i >= lab.size()) break;
      }
      int v = n;
      while (v >= 1 && ++choice[v] >= v) choice[v--] = 0;
      if (v < 1) break;
    }
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i; j < all.size(); ++j) {
        bool codes = canonical_code(all[i]) == canonical_code(all[j]);
        bool bij = oracle::iso_by_bijection(all[i], all[j], true);
        CHECK(codes == bij);
      }
  }
}

TEST_CASE("code equality matches bijection search on random larger forests") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 5 + static_cast<int>(rng() % 3);  // 5..7
    BottDiagram a = oracle::random_forest(rng, n, 2);
    BottDiagram b = oracle::random_forest(rng, n, 2);
    CHECK((canonical_code(a) == canonical_code(b)) ==
          oracle::iso_by_bijection(a, b, true));
  }
}

TEST_CASE("levels") {
  auto lv = levels(edgeless(3));
  CHECK(lv.size() == 1);
  CHECK(lv[0].size() == 3);

  lv = levels(chain3(1, 1));
  CHECK(lv.size() == 3);
  CHECK(lv[0].size() == 1);
  CHECK(lv[1].size() == 1);
  CHECK(lv[2].size() == 1);

  BottDiagram fiber;
  fiber.n = 3;
  fiber.parent = {0, 0, 1, 1};
  fiber.label = {0, 0, 1, 1};
  lv = levels(fiber);
  CHECK(lv.size() == 2);
  CHECK(lv[0].size() == 1);
  CHECK(lv[1].size() == 2);
}

TEST_CASE("connected iff one root; forest code = sorted component codes") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    BottDiagram d = oracle::random_forest(rng, n, 3);
    auto comps = components(d);
    CHECK(comps.size() == levels(d)[0].size());
    std::vector<std::string> codes;
    for (const auto& c : comps) codes.push_back(canonical_code(c).value);
    std::sort(codes.begin(), codes.end());
    std::string joined;
    for (const auto& s : codes) joined += s;
    CHECK(joined == canonical_code(d).value);
  }
}
