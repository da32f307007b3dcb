#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "bott/errors.hpp"
#include "bott/forest.hpp"

// Cards (root deletion) and reconstruction of rooted forests from decks.

namespace bott {

struct Deck {
  std::vector<BottDiagram> cards;  // one per root, ascending-root order
};

// Card at root r: delete r, promote its children to roots; the labels on
// the deleted edges are lost.
inline BottDiagram card_at(const BottDiagram& d, int r) {
  std::vector<int> verts;
  for (int v = 1; v <= d.n; ++v)
    if (v != r) verts.push_back(v);
  BottDiagram card = induced(d, verts);
  // induced() already turned children of r into unlabelled roots
  return card;
}

inline Deck make_deck(const BottDiagram& d) {
  validate(d);
  Deck deck;
  for (int r = 1; r <= d.n; ++r)
    if (d.is_root(r)) deck.cards.push_back(card_at(d, r));
  if (deck.cards.empty()) throw Error("forest has no roots");
  return deck;
}

// Number of components of f isomorphic to the connected t.
inline long long count_copies(const BottDiagram& f, const BottDiagram& t,
                              bool labelled) {
  validate(t);
  int roots = 0;
  for (int v = 1; v <= t.n; ++v)
    if (t.is_root(v)) ++roots;
  if (roots != 1) throw Error("pattern tree is not connected");
  CanonicalCode tc = canonical_code(t, labelled);
  long long count = 0;
  for (const auto& comp : components(f))
    if (canonical_code(comp, labelled) == tc) ++count;
  return count;
}

// Single-card reconstruction shape: fresh root, card trees attached to it.
// The new edges carry label `fill` (0 = unknown).
inline BottDiagram attach_to_fresh_root(const BottDiagram& card, Coef fill) {
  BottDiagram out;
  out.n = card.n + 1;
  out.parent.assign(out.n + 1, 0);
  out.label.assign(out.n + 1, 0);
  for (int v = 1; v <= card.n; ++v) {
    if (card.is_root(v)) {
      out.parent[v + 1] = 1;
      out.label[v + 1] = fill;
    } else {
      out.parent[v + 1] = card.parent[v] + 1;
      out.label[v + 1] = card.label[v];
    }
  }
  return out;
}

// Labelled reconstruction of a single tree: the shape is determined, the
// labels on root-incident edges are not.
struct Ambiguous {
  BottDiagram shape;           // unknown labels stored as 0
  std::vector<int> unknown;    // vertices whose incoming-edge label is unknown
};

struct InvalidDeck {
  std::string reason;
};

using ReconstructResult = std::variant<BottDiagram, Ambiguous, InvalidDeck>;

inline ReconstructResult reconstruct(const Deck& deck, bool labelled) {
  const int k = static_cast<int>(deck.cards.size());
  if (k == 0) return InvalidDeck{"empty deck"};
  const int card_size = deck.cards[0].n;
  for (const auto& c : deck.cards)
    if (c.n != card_size) return InvalidDeck{"card sizes disagree"};

  if (k == 1) {
    const BottDiagram& card = deck.cards[0];
    if (!labelled) return attach_to_fresh_root(card, 1);
    Ambiguous amb;
    amb.shape = attach_to_fresh_root(card, 0);
    for (int v = 1; v <= amb.shape.n; ++v)
      if (amb.shape.parent[v] == 1) amb.unknown.push_back(v);
    return amb;
  }

  // Maximal tree over all cards; ties broken by minimal canonical code.
  // The maximality argument guarantees it is an original component, fully
  // labelled on the card it was taken from.
  std::vector<std::vector<BottDiagram>> comps(k);
  const BottDiagram* best = nullptr;
  CanonicalCode best_code;
  for (int i = 0; i < k; ++i) {
    comps[i] = components(deck.cards[i]);
    for (const auto& t : comps[i]) {
      CanonicalCode code = canonical_code(t, labelled);
      if (!best || t.n > best->n || (t.n == best->n && code < best_code)) {
        best = &t;
        best_code = code;
      }
    }
  }
  BottDiagram T = *best;

  // Multiplicity pattern: r cards contain r-1 copies of T, k-r contain r.
  std::vector<long long> counts(k);
  for (int i = 0; i < k; ++i) {
    counts[i] = 0;
    for (const auto& t : comps[i])
      if (canonical_code(t, labelled) == best_code) ++counts[i];
  }
  long long lo = *std::min_element(counts.begin(), counts.end());
  long long hi = *std::max_element(counts.begin(), counts.end());
  long long r;
  if (lo == hi) {
    if (lo != k - 1) return InvalidDeck{"copy counts inconsistent"};
    r = k;  // the forest is k copies of T
  } else {
    if (hi != lo + 1) return InvalidDeck{"copy counts inconsistent"};
    r = hi;
    long long at_lo = std::count(counts.begin(), counts.end(), lo);
    long long at_hi = std::count(counts.begin(), counts.end(), hi);
    if (at_lo != r || at_hi != k - r)
      return InvalidDeck{"copy counts inconsistent"};
  }

  // A count-(r-1) card is F' + (r-1) copies of T + the children of T.
  // Removing the known pieces leaves F' with its labels intact.
  std::vector<BottDiagram> rest;
  if (r < k) {
    int src = -1;
    for (int i = 0; i < k; ++i)
      if (counts[i] == r - 1) src = i;
    if (src < 0) return InvalidDeck{"copy counts inconsistent"};
    std::vector<CanonicalCode> remove;
    for (long long i = 0; i + 1 < r; ++i) remove.push_back(best_code);
    for (const auto& child : components(card_at(T, [&] {
           for (int v = 1; v <= T.n; ++v)
             if (T.is_root(v)) return v;
           return 1;
         }())))
      remove.push_back(canonical_code(child, labelled));
    std::vector<BottDiagram> pool = comps[src];
    for (const auto& code : remove) {
      bool found = false;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (canonical_code(pool[i], labelled) == code) {
          pool.erase(pool.begin() + static_cast<long>(i));
          found = true;
          break;
        }
      if (!found) return InvalidDeck{"card does not contain the expected trees"};
    }
    rest = std::move(pool);
  }

  std::vector<BottDiagram> parts = std::move(rest);
  for (long long i = 0; i < r; ++i) parts.push_back(T);
  BottDiagram out = disjoint_union(parts);
  if (out.n != card_size + 1) return InvalidDeck{"vertex counts inconsistent"};
  return out;
}

}  // namespace bott
