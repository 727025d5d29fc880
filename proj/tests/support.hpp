#ifndef ORD_TESTS_SUPPORT_HPP
#define ORD_TESTS_SUPPORT_HPP

// Shared helpers for the test suites.

#include <utility>
#include <vector>

#include "ord/cnf.hpp"
#include "ord/expr.hpp"
#include "ord/laws.hpp"

namespace ts {

using ord::Nat;
using ord::Ordinal;

inline Ordinal fin(const Nat& n) { return Ordinal::finite(n); }
inline Ordinal w() { return Ordinal::omega(); }
inline Ordinal wpow(const Ordinal& e) { return Ordinal::omega_pow(e); }

// ω^(e₀)·c₀ + ... from (exponent, coeff) pairs.
inline Ordinal mk(std::vector<std::pair<Ordinal, Nat>> parts) {
  return ord::make_ordinal(std::move(parts));
}

// Convenience for fixtures written in the expression language.
inline Ordinal val(const std::string& text) {
  return ord::eval(ord::parse(text));
}

inline ord::GenParams params(std::uint64_t seed = 0) {
  ord::GenParams p;
  p.seed = seed;
  return p;
}

inline std::vector<Ordinal> seeded(int count, std::uint64_t seed = 0) {
  std::vector<Ordinal> out;
  out.reserve(static_cast<size_t>(count));
  const ord::GenParams p = params(seed);
  for (int i = 0; i < count; ++i)
    out.push_back(ord::gen_ordinal(p, static_cast<std::uint64_t>(i)));
  return out;
}

}  // namespace ts

#endif
