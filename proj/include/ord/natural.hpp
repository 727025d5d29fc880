#ifndef ORD_NATURAL_HPP
#define ORD_NATURAL_HPP

// Natural (Hessenberg) sum and product: Cantor normal forms are added and
// multiplied like polynomials in ω, with the natural sum used on the
// exponents.  Both operations are commutative and associative.  Also the
// natural monus ⊖ and the recursive characterization of ⊗ as a checkable
// necessary condition.

#include <vector>

#include "ord/cnf.hpp"

namespace ord {

// Coefficient-wise sum of the two normal forms.
Ordinal nat_add(const Ordinal& a, const Ordinal& b);

// ⊕-sum of ω^(eᵢ ⊕ fⱼ)·(cᵢ·dⱼ) over all term pairs.
Ordinal nat_mul(const Ordinal& a, const Ordinal& b);

// Least γ with b ⊕ γ ≥ a.
Ordinal nat_ominus(const Ordinal& a, const Ordinal& b);

// ((a⊗bp) ⊕ (ap⊗b)) ⊖ (ap⊗bp); requires ap < a and bp < b.
Ordinal conway_f(const Ordinal& a, const Ordinal& b, const Ordinal& ap,
                 const Ordinal& bp);

// A finite sample of the predecessors of x: all of them when x is
// finite; fundamental-sequence values at indices 0..depth plus their
// successors when x is a limit; for an infinite successor, the chain
// down to the limit part plus that part's samples.
std::vector<Ordinal> sample_predecessors(const Ordinal& x, unsigned depth);

// Necessary-condition check for claimed = a⊗b drawn from the recursive
// characterization of the natural product: for every sampled pair of
// predecessors (ap, bp),
//     claimed ⊕ (ap⊗bp) > (a⊗bp) ⊕ (ap⊗b)
// must hold.  Returns false on any violation.  Sampling cannot prove
// minimality, so true is supporting evidence only.
bool conway_witness_check(const Ordinal& a, const Ordinal& b,
                          const Ordinal& claimed, unsigned depth);

}  // namespace ord

#endif
