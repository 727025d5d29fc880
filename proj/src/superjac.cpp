#include "ord/superjac.hpp"

#include <utility>

#include "ord/classic.hpp"
#include "ord/jacobsthal.hpp"
#include "ord/natural.hpp"
#include "power_util.hpp"

namespace ord {

Ordinal sj_pow_finite_base(const Nat& a, const Ordinal& b) {
  if (a < 2) throw domain_error("sj_pow_finite_base: base must be >= 2");
  auto [bl, bf] = split(b);
  return ord_mul(Ordinal::omega_pow(omega_div(bl)),
                 Ordinal::finite(nat_pow(a, bf)));
}

namespace {

Ordinal sj_power(const Ordinal& base, const Nat& n) {
  return detail::power(base, n, [](const Ordinal& x, const Ordinal& y) {
    return nat_mul(x, y);
  });
}

// a^(⊗ω^d) for infinite a and d ≥ 1.  Since deg(x⊗y) = deg x ⊕ deg y,
// the iterates a^(⊗n) have degree (deg a)×n, so a^(⊗ω) = ω^(deg a × ω).
// For larger d write ω^d = ω × ω^d' and iterate:
//     a^(⊗ω^d) = (a^(⊗ω))^(⊗ω^d'),   (ω^m)^(⊗b) = ω^(m×b).
Ordinal sj_pow_omega_exp(const Ordinal& a, const Ordinal& d) {
  Ordinal mu = jac_mul(deg(a), Ordinal::omega());
  if (d == Ordinal::finite(1)) return Ordinal::omega_pow(std::move(mu));
  Ordinal dp = d.is_finite() ? Ordinal::finite(d.as_nat() - 1) : d;
  return Ordinal::omega_pow(jac_mul(mu, Ordinal::omega_pow(std::move(dp))));
}

}  // namespace

Ordinal sj_pow(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return Ordinal::finite(1);
  if (a.is_zero()) return {};  // iterates 1, 0, 0, ... stabilize at 0
  if (a == Ordinal::finite(1)) return a;
  if (a.is_finite()) return sj_pow_finite_base(a.as_nat(), b);
  // The CNF of b is also its natural sum of terms, and ω^e·c = ω^e × c,
  // so the exponent factors as
  //     a^(⊗b) = ⊗_j (a^(⊗ω^(e_j)))^(⊗c_j) ⊗ a^(⊗n).
  auto [bl, bf] = split(b);
  Ordinal result = Ordinal::finite(1);
  for (const auto& t : b.terms()) {
    if (t.exponent().is_zero()) break;
    result =
        nat_mul(result, sj_power(sj_pow_omega_exp(a, t.exponent()), t.coeff()));
  }
  if (bf > 0) result = nat_mul(result, sj_power(a, bf));
  return result;
}

}  // namespace ord
