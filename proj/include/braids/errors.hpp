#ifndef BRAIDS_ERRORS_HPP
#define BRAIDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace braids {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad token or out-of-range generator index in a word.
struct WordError : Error {
  using Error::Error;
};

// Token-level failure; `position` is the 1-based token index.
struct ParseError : Error {
  int position;
  ParseError(int pos, const std::string& what)
      : Error("token " + std::to_string(pos) + ": " + what), position(pos) {}
};

// Operands live in different groups (strand counts or ranks differ).
struct ArityError : Error {
  using Error::Error;
};

// Coefficient overflow in exact ring arithmetic.
struct ArithmeticError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

// Abelianization of a claimed vertex is not a unit basis vector.
struct NotAVertexError : Error {
  using Error::Error;
};

// Enumeration bounds exceed the allowed budget.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace braids

#endif
