#ifndef ORD_CLASSIC_HPP
#define ORD_CLASSIC_HPP

// Ordinary ordinal arithmetic: the successor-based operations obtained by
// transfinite iteration.  Computed directly on Cantor normal forms.

#include "ord/cnf.hpp"

namespace ord {

Ordinal ord_add(const Ordinal& a, const Ordinal& b);
Ordinal ord_mul(const Ordinal& a, const Ordinal& b);

// 0^0 = 1.
Ordinal ord_pow(const Ordinal& a, const Ordinal& b);

// a^b for integers a ≥ 0, b ≥ 0.  Refuses exponents whose result would
// not fit in memory.
Nat nat_pow(const Nat& a, const Nat& b);

}  // namespace ord

#endif
