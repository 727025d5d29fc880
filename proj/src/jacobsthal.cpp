#include "ord/jacobsthal.hpp"

#include <utility>

#include "ord/classic.hpp"
#include "power_util.hpp"

namespace ord {

Ordinal jac_mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto [bl, bf] = split(b);
  std::vector<std::pair<Ordinal, Nat>> parts;
  // ω^(deg a)·β': ordinary product, exponents shift by deg a.
  const Ordinal d = deg(a);
  for (const auto& t : bl.terms())
    parts.emplace_back(ord_add(d, t.exponent()), t.coeff());
  // a×n = a ⊕ ... ⊕ a: every coefficient scales by n.
  if (bf > 0)
    for (const auto& t : a.terms())
      parts.emplace_back(t.exponent(), t.coeff() * bf);
  return make_ordinal(std::move(parts));
}

namespace {

// a^(×ω^d) = ω^(deg a · ω^d) for infinite a and d ≥ 1.
Ordinal jac_pow_omega_exp(const Ordinal& a, const Ordinal& d) {
  return Ordinal::omega_pow(ord_mul(deg(a), Ordinal::omega_pow(d)));
}

Ordinal jac_power(const Ordinal& base, const Nat& n) {
  return detail::power(base, n, [](const Ordinal& x, const Ordinal& y) {
    return jac_mul(x, y);
  });
}

}  // namespace

Ordinal jac_pow(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return Ordinal::finite(1);
  if (a.is_zero()) return {};  // iterates 1, 0, 0, ... stabilize at 0
  if (a == Ordinal::finite(1)) return a;
  auto [bl, bf] = split(b);
  if (a.is_finite()) {
    // Same shape as the ordinary power of a finite base: the ⊕-iterates
    // of finite values coincide with their ordinary iterates.
    return ord_mul(Ordinal::omega_pow(omega_div(bl)),
                   Ordinal::finite(nat_pow(a.as_nat(), bf)));
  }
  // a^(×b) factors through the CNF of b: exponents ω^e·c contribute
  // (a^(×ω^e))^(×c), the finite part contributes a^(×n), and the factors
  // combine by ×.
  Ordinal result = Ordinal::finite(1);
  for (const auto& t : b.terms()) {
    if (t.exponent().is_zero()) break;
    result =
        jac_mul(result, jac_power(jac_pow_omega_exp(a, t.exponent()), t.coeff()));
  }
  if (bf > 0) result = jac_mul(result, jac_power(a, bf));
  return result;
}

}  // namespace ord
