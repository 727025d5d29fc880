#ifndef ORD_CNF_HPP
#define ORD_CNF_HPP

// Cantor normal forms for ordinals below ε₀.
//
// Every ordinal below ε₀ has a unique representation
//
//     ω^(e₀)·c₀ + ω^(e₁)·c₁ + ... + ω^(e_r)·c_r
//
// with e₀ > e₁ > ... > e_r (each exponent again such an ordinal) and
// integer coefficients cᵢ ≥ 1.  Ordinal stores exactly that: a vector of
// Terms in strictly decreasing exponent order, empty for 0.  Because the
// form is canonical, structural equality coincides with ordinal equality
// and the comparison below realizes the ordinal order.
//
// All values are immutable once built and all operations are pure
// functions, so Ordinals can be shared freely across threads.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ord {

// Coefficients are arbitrary-precision: law checking multiplies them
// combinatorially and finite powers grow fast.
using Nat = boost::multiprecision::cpp_int;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was applied outside its domain (deg of 0, ω-division of a
// successor, fundamental sequence of a non-limit, ...).
struct domain_error : error {
  using error::error;
};

class Term;

class Ordinal {
 public:
  Ordinal() = default;  // zero

  static Ordinal finite(Nat n);            // n ≥ 0
  static Ordinal omega();                  // ω
  static Ordinal omega_pow(Ordinal expo);  // ω^expo

  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept;
  bool is_finite() const;     // zero or a single exponent-0 term
  bool is_successor() const;  // has an exponent-0 term
  bool is_limit() const;      // nonzero without an exponent-0 term

  // Finite value of the ordinal; requires is_finite().
  Nat as_nat() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  explicit Ordinal(std::vector<Term> terms) : terms_(std::move(terms)) {}
  std::vector<Term> terms_;

  friend Ordinal make_ordinal(std::vector<std::pair<Ordinal, Nat>> parts);
};

// One CNF summand ω^(exponent)·coeff with coeff ≥ 1.
class Term {
 public:
  Term(Ordinal exponent, Nat coeff);

  const Ordinal& exponent() const noexcept { return exponent_; }
  const Nat& coeff() const noexcept { return coeff_; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  Ordinal exponent_;
  Nat coeff_;
};

// Split of an ordinal as limit_part + finite_part, where limit_part is 0
// or a limit ordinal and finite_part is a whole number.
struct Decomposition {
  Ordinal limit_part;
  Nat finite_part;
};

// Total order agreeing with the ordinal order: term streams are compared
// lexicographically by (exponent, coefficient); on a tie the longer
// stream is larger.
std::strong_ordering cmp(const Ordinal& a, const Ordinal& b);

// Canonicalization gateway: merges equal exponents by summing their
// coefficients, drops zero coefficients, sorts descending.  Rejects
// negative coefficients.
Ordinal make_ordinal(std::vector<std::pair<Ordinal, Nat>> parts);

Ordinal succ(const Ordinal& a);

// limit_part + finite_part = a.
Decomposition split(const Ordinal& a);

// Largest exponent of the CNF; undefined on 0.
Ordinal deg(const Ordinal& a);

// The unique b with ω·b = a; a must be 0 or a limit ordinal.
Ordinal omega_div(const Ordinal& a);

// Least ordinal strictly greater than every element; 0 for the empty set.
Ordinal lub_strict(std::span<const Ordinal> s);

// n-th element of the canonical fundamental sequence of the limit
// ordinal a: strictly increasing in n with supremum a.
//   (γ + ω^(δ+1))[n] = γ + ω^δ·n
//   (γ + ω^λ)[n]     = γ + ω^(λ[n])     for λ a limit
// A trailing coefficient > 1 is first peeled into γ.
Ordinal fund_seq(const Ordinal& a, unsigned n);

inline bool Ordinal::is_zero() const noexcept { return terms_.empty(); }

inline bool operator==(const Ordinal& a, const Ordinal& b) {
  return a.terms_ == b.terms_;
}

inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  return cmp(a, b);
}

inline bool operator==(const Term& a, const Term& b) {
  return a.coeff_ == b.coeff_ && a.exponent_ == b.exponent_;
}

}  // namespace ord

#endif
