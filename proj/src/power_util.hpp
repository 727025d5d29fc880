#ifndef ORD_SRC_POWER_UTIL_HPP
#define ORD_SRC_POWER_UTIL_HPP

// Internal helper shared by the exponentiation routines.

#include "ord/cnf.hpp"

namespace ord::detail {

// base^n by square-and-multiply; valid for any associative mul since
// powers of one value commute with each other.
template <class Mul>
Ordinal power(Ordinal base, Nat n, Mul mul) {
  Ordinal acc = Ordinal::finite(1);
  while (n > 0) {
    if ((n & 1) != 0) acc = mul(acc, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return acc;
}

}  // namespace ord::detail

#endif
