#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bott {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Coefficient arithmetic is checked 64-bit; products of labels compound, so
// wrap-around must surface as an error instead of silent garbage.
class OverflowError : public Error {
public:
  OverflowError() : Error("integer overflow in exact arithmetic") {}
};

class ParseError : public Error {
public:
  ParseError(int line, int col, const std::string& what)
      : Error("parse error: line " + std::to_string(line) + ", column " +
              std::to_string(col) + ": " + what),
        line(line), col(col) {}
  int line;
  int col;
};

using Coef = long long;

inline Coef checked_add(Coef a, Coef b) {
  Coef r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline Coef checked_mul(Coef a, Coef b) {
  Coef r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline Coef checked_neg(Coef a) {
  Coef r;
  if (__builtin_sub_overflow(Coef{0}, a, &r)) throw OverflowError();
  return r;
}

}  // namespace bott
