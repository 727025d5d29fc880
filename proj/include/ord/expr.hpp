#ifndef ORD_EXPR_HPP
#define ORD_EXPR_HPP

// The ordinal expression language.
//
// Atoms are decimal naturals, `w` (alias `ω`), parenthesized expressions
// and the calls deg(e), wdiv(e), succ(e).  Three operator families, one
// per arithmetic tower; `j` marks the ⊕-iterated (Jacobsthal) family and
// `#` the natural family:
//
//   tightest   ^   j^   #^      right-associative
//              *   j*   #*      left-associative      (aliases × → j*, ⊗ → #*)
//   loosest    +   #+   #-      left-associative      (alias  ⊕ → #+)
//
// `#-` (natural monus) does not chain: `a #- b #- c` and mixing `#-`
// with `+`/`#+` without parentheses are parse errors.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ord/cnf.hpp"

namespace ord {

// Input could not be tokenized or parsed.  offset is a byte position
// into the source; expected lists the token kinds that were admissible.
struct parse_error : error {
  parse_error(const std::string& msg, size_t offset,
              std::vector<std::string> expected = {});
  size_t offset;
  std::vector<std::string> expected;
};

// Evaluation failed (e.g. wdiv of a successor); [begin, end) is the byte
// span of the offending subexpression.
struct eval_error : error {
  eval_error(const std::string& msg, size_t begin, size_t end);
  size_t begin;
  size_t end;
};

enum class BinaryOp {
  OrdAdd,   // +
  NatAdd,   // #+
  NatMonus, // #-
  OrdMul,   // *
  JacMul,   // j*
  NatMul,   // #*
  OrdPow,   // ^
  JacPow,   // j^
  SjPow,    // #^
};

enum class Func { Deg, WDiv, Succ };

struct ExprAst {
  enum class Kind { Literal, Omega, Binary, Call };

  Kind kind = Kind::Literal;
  Nat literal;           // Kind::Literal
  BinaryOp op{};         // Kind::Binary
  Func func{};           // Kind::Call
  std::vector<ExprAst> children;
  size_t begin = 0;      // byte span [begin, end)
  size_t end = 0;
};

ExprAst parse(std::string_view text);

Ordinal eval(const ExprAst& ast);

// Canonical text form, one fixed spelling per value: terms joined by
// " + ", each printed as one of C, w, w*C, w^A, w^A*C where A is the
// exponent, parenthesized unless it is a bare natural or w.
std::string print_text(const Ordinal& a);

std::string print_latex(const Ordinal& a);

// {"terms":[{"exp":<ordinal>,"coeff":"<decimal>"}]} recursively.
std::string print_json(const Ordinal& a);

std::ostream& operator<<(std::ostream& os, const Ordinal& a);

}  // namespace ord

#endif
