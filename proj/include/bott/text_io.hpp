#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "bott/deck.hpp"
#include "bott/errors.hpp"
#include "bott/forest.hpp"
#include "bott/tower.hpp"

// Bit-exact text formats:
//   BottMatrix:  line 1 `n`, then for j=2..n a line `a_{j1} ... a_{j,j-1}`.
//   BottDiagram: line 1 `n`; line 2 parents (0 = root); line 3 labels (0 = root).
//   Deck:        line 1 `k`, then k diagrams separated by blank lines.

namespace bott {

namespace detail {

class TokenReader {
public:
  explicit TokenReader(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) lines_.push_back(line);
  }

  // 1-based current line number
  int line_no() const { return static_cast<int>(line_) + 1; }

  bool at_end() const { return line_ >= lines_.size(); }

  void expect_more(const std::string& what) {
    if (at_end())
      throw ParseError(line_no(), 1, "unexpected end of input, expected " + what);
  }

  void skip_blank_lines() {
    while (!at_end() && blank(lines_[line_])) ++line_;
  }

  // Reads a full line of exactly `count` integers (count < 0: any number).
  std::vector<Coef> int_line(int count, const std::string& what) {
    expect_more(what);
    const std::string& s = lines_[line_];
    std::vector<Coef> out;
    std::size_t i = 0;
    while (true) {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      if (i >= s.size()) break;
      std::size_t start = i;
      if (s[i] == '-' || s[i] == '+') ++i;
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError(line_no(), static_cast<int>(start) + 1,
                         "expected integer in " + what);
      Coef value = 0;
      bool neg = s[start] == '-';
      for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
        value = checked_add(checked_mul(value, 10), s[i] - '0');
      }
      out.push_back(neg ? checked_neg(value) : value);
    }
    if (count >= 0 && static_cast<int>(out.size()) != count)
      throw ParseError(line_no(), 1,
                       what + ": expected " + std::to_string(count) +
                           " integers, got " + std::to_string(out.size()));
    ++line_;
    return out;
  }

  Coef single_int(const std::string& what) { return int_line(1, what)[0]; }

private:
  static bool blank(const std::string& s) {
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
  }

  std::vector<std::string> lines_;
  std::size_t line_ = 0;
};

inline int checked_dimension(Coef n, int line) {
  if (n < 1 || n > Monomial::max_vars)
    throw ParseError(line, 1, "dimension out of range");
  return static_cast<int>(n);
}

inline BottDiagram read_diagram(TokenReader& r) {
  int at = r.line_no();
  int n = checked_dimension(r.single_int("vertex count"), at);
  BottDiagram d;
  d.n = n;
  d.parent.assign(n + 1, 0);
  d.label.assign(n + 1, 0);
  int pline = r.line_no();
  auto parents = r.int_line(n, "parent line");
  int lline = r.line_no();
  auto labels = r.int_line(n, "label line");
  for (int v = 1; v <= n; ++v) {
    if (parents[v - 1] < 0 || parents[v - 1] > n)
      throw ParseError(pline, v, "parent index out of range");
    d.parent[v] = static_cast<int>(parents[v - 1]);
    d.label[v] = labels[v - 1];
  }
  try {
    validate(d);
  } catch (const Error& e) {
    throw ParseError(lline, 1, e.what());
  }
  return d;
}

}  // namespace detail

inline BottMatrix parse_matrix(const std::string& text) {
  detail::TokenReader r(text);
  r.skip_blank_lines();
  int at = r.line_no();
  int n = detail::checked_dimension(r.single_int("dimension"), at);
  BottMatrix m = zero_matrix(n);
  for (int j = 2; j <= n; ++j) m.a[j] = r.int_line(j - 1, "matrix row");
  return m;
}

inline std::string format_matrix(const BottMatrix& m) {
  std::ostringstream os;
  os << m.n << '\n';
  for (int j = 2; j <= m.n; ++j) {
    for (int k = 1; k < j; ++k) os << (k > 1 ? " " : "") << m.a[j][k - 1];
    os << '\n';
  }
  return os.str();
}

inline BottDiagram parse_diagram(const std::string& text) {
  detail::TokenReader r(text);
  r.skip_blank_lines();
  return detail::read_diagram(r);
}

inline std::string format_diagram(const BottDiagram& d) {
  std::ostringstream os;
  os << d.n << '\n';
  for (int v = 1; v <= d.n; ++v) os << (v > 1 ? " " : "") << d.parent[v];
  os << '\n';
  for (int v = 1; v <= d.n; ++v) os << (v > 1 ? " " : "") << d.label[v];
  os << '\n';
  return os.str();
}

inline Deck parse_deck(const std::string& text) {
  detail::TokenReader r(text);
  r.skip_blank_lines();
  int at = r.line_no();
  Coef k = r.single_int("card count");
  if (k < 1) throw ParseError(at, 1, "deck must contain at least one card");
  Deck deck;
  for (Coef i = 0; i < k; ++i) {
    r.skip_blank_lines();
    r.expect_more("card " + std::to_string(i + 1));
    deck.cards.push_back(detail::read_diagram(r));
  }
  return deck;
}

inline std::string format_deck(const Deck& deck) {
  std::ostringstream os;
  os << deck.cards.size() << '\n';
  for (std::size_t i = 0; i < deck.cards.size(); ++i) {
    if (i > 0) os << '\n';
    os << format_diagram(deck.cards[i]);
  }
  return os.str();
}

}  // namespace bott
