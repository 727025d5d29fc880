#ifndef ORD_JACOBSTHAL_HPP
#define ORD_JACOBSTHAL_HPP

// Jacobsthal multiplication × (transfinite iteration of the natural sum)
// and Jacobsthal exponentiation a^(×b) (transfinite iteration of ×),
// computed by closed forms.  The defining recursions
//     a×0 = 0,        a×(Sb) = (a×b) ⊕ a,
//     a^(×0) = 1,     a^(×(Sb)) = (a^(×b)) × a
// with continuity at limits are what the test oracles iterate.

#include "ord/cnf.hpp"

namespace ord {

// With b = β' + n (β' limit or 0, n finite):
//     a×b = ω^(deg a)·β' + a×n,
// where a×n scales every coefficient of a by n.
Ordinal jac_mul(const Ordinal& a, const Ordinal& b);

Ordinal jac_pow(const Ordinal& a, const Ordinal& b);

}  // namespace ord

#endif
