#include "ord/classic.hpp"

#include <utility>

#include "power_util.hpp"

namespace ord {

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  // Terms of a below deg(b) are absorbed; a shared exponent merges.
  const Ordinal e = deg(b);
  std::vector<std::pair<Ordinal, Nat>> parts;
  for (const auto& t : a.terms()) {
    if (cmp(t.exponent(), e) == std::strong_ordering::less) break;
    parts.emplace_back(t.exponent(), t.coeff());
  }
  for (const auto& t : b.terms()) parts.emplace_back(t.exponent(), t.coeff());
  return make_ordinal(std::move(parts));
}

Ordinal ord_mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Ordinal d = deg(a);
  std::vector<std::pair<Ordinal, Nat>> parts;
  for (const auto& t : b.terms()) {
    if (!t.exponent().is_zero()) {
      // a·ω^e = ω^(deg a + e) for e > 0: the tail of a is absorbed.
      parts.emplace_back(ord_add(d, t.exponent()), t.coeff());
    } else {
      // Finite factor c scales the leading coefficient only.
      parts.emplace_back(d, a.terms().front().coeff() * t.coeff());
      for (size_t i = 1; i < a.terms().size(); ++i)
        parts.emplace_back(a.terms()[i].exponent(), a.terms()[i].coeff());
    }
  }
  return make_ordinal(std::move(parts));
}

Nat nat_pow(const Nat& a, const Nat& b) {
  if (b < 0 || a < 0) throw error("nat_pow: negative argument");
  if (a <= 1) return b == 0 ? Nat(1) : a;
  if (b > 1000000) throw error("nat_pow: exponent too large to materialize");
  return boost::multiprecision::pow(a, b.convert_to<unsigned>());
}

Ordinal ord_pow(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return Ordinal::finite(1);
  if (a.is_zero()) return {};
  if (a == Ordinal::finite(1)) return a;
  auto [bl, bf] = split(b);
  if (a.is_finite()) {
    // a^(β'+b) = ω^(ω⁻¹β')·a^b for finite a ≥ 2.
    return ord_mul(Ordinal::omega_pow(omega_div(bl)),
                   Ordinal::finite(nat_pow(a.as_nat(), bf)));
  }
  // Infinite base: split the exponent into its CNF terms, with
  // a^(ω^e·c) = ω^(deg a·ω^e·c) for e > 0.
  const Ordinal d = deg(a);
  Ordinal result = Ordinal::finite(1);
  for (const auto& t : b.terms()) {
    if (t.exponent().is_zero()) break;
    Ordinal expo = ord_mul(ord_mul(d, Ordinal::omega_pow(t.exponent())),
                           Ordinal::finite(t.coeff()));
    result = ord_mul(result, Ordinal::omega_pow(std::move(expo)));
  }
  if (bf > 0)
    result = ord_mul(
        result, detail::power(a, bf, [](const Ordinal& x, const Ordinal& y) {
          return ord_mul(x, y);
        }));
  return result;
}

}  // namespace ord
