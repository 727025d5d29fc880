#ifndef ORD_SUPERJAC_HPP
#define ORD_SUPERJAC_HPP

// Super-Jacobsthal exponentiation a^(⊗b): the transfinite iteration of
// the natural product,
//     a^(⊗0) = 1,    a^(⊗(Sb)) = (a^(⊗b)) ⊗ a,
// continuous at limit exponents.

#include "ord/cnf.hpp"

namespace ord {

// Closed form for a finite base a ≥ 2: with b = β' + n (β' limit or 0,
// n finite), a^(⊗b) = ω^(ω⁻¹β')·a^n.
Ordinal sj_pow_finite_base(const Nat& a, const Ordinal& b);

Ordinal sj_pow(const Ordinal& a, const Ordinal& b);

}  // namespace ord

#endif
