#include "ord/natural.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "ord/classic.hpp"

namespace ord {

Ordinal nat_add(const Ordinal& a, const Ordinal& b) {
  std::vector<std::pair<Ordinal, Nat>> parts;
  parts.reserve(a.terms().size() + b.terms().size());
  for (const auto& t : a.terms()) parts.emplace_back(t.exponent(), t.coeff());
  for (const auto& t : b.terms()) parts.emplace_back(t.exponent(), t.coeff());
  return make_ordinal(std::move(parts));
}

Ordinal nat_mul(const Ordinal& a, const Ordinal& b) {
  std::vector<std::pair<Ordinal, Nat>> parts;
  parts.reserve(a.terms().size() * b.terms().size());
  for (const auto& s : a.terms())
    for (const auto& t : b.terms())
      parts.emplace_back(nat_add(s.exponent(), t.exponent()),
                         s.coeff() * t.coeff());
  return make_ordinal(std::move(parts));
}

namespace {

Ordinal suffix(const Ordinal& a, size_t from) {
  std::vector<std::pair<Ordinal, Nat>> parts;
  for (size_t i = from; i < a.terms().size(); ++i)
    parts.emplace_back(a.terms()[i].exponent(), a.terms()[i].coeff());
  return make_ordinal(std::move(parts));
}

}  // namespace

Ordinal nat_ominus(const Ordinal& a, const Ordinal& b) {
  if (b >= a) return {};
  // Since ⊕ is coefficient-wise, the minimal γ decomposes by exponent.
  // Walk down the shared exponents; at the first difference a's
  // coefficient must be the larger one (else b > a).
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  size_t i = 0, j = 0;
  while (true) {
    assert(i < ta.size());
    Nat cb = 0;
    if (j < tb.size()) {
      auto c = cmp(ta[i].exponent(), tb[j].exponent());
      assert(c != std::strong_ordering::less);
      if (c == std::strong_ordering::equal) {
        if (ta[i].coeff() == tb[j].coeff()) {
          ++i, ++j;
          continue;
        }
        cb = tb[j].coeff();
        ++j;
      }
    }
    assert(ta[i].coeff() > cb);
    std::vector<std::pair<Ordinal, Nat>> parts;
    parts.emplace_back(ta[i].exponent(), ta[i].coeff() - cb);
    Ordinal tail_a = suffix(a, i + 1);
    Ordinal tail_b = suffix(b, j);
    if (tail_b < tail_a) {
      const Ordinal rest = nat_ominus(tail_a, tail_b);
      for (const auto& t : rest.terms())
        parts.emplace_back(t.exponent(), t.coeff());
    }
    return make_ordinal(std::move(parts));
  }
}

Ordinal conway_f(const Ordinal& a, const Ordinal& b, const Ordinal& ap,
                 const Ordinal& bp) {
  if (ap >= a || bp >= b)
    throw domain_error("conway_f: arguments must be strict predecessors");
  return nat_ominus(nat_add(nat_mul(a, bp), nat_mul(ap, b)), nat_mul(ap, bp));
}

std::vector<Ordinal> sample_predecessors(const Ordinal& x, unsigned depth) {
  std::vector<Ordinal> out;
  if (x.is_zero()) return out;
  if (x.is_finite()) {
    for (Nat k = 0; k < x.as_nat(); ++k) out.push_back(Ordinal::finite(k));
    return out;
  }
  auto [lim, fin] = split(x);
  if (fin > 0) {
    // Infinite successor: the chain below x down to its limit part.
    for (Nat k = 0; k < fin; ++k)
      out.push_back(nat_add(lim, Ordinal::finite(k)));
  }
  for (unsigned n = 0; n <= depth; ++n) {
    Ordinal v = fund_seq(lim, n);
    out.push_back(succ(v));
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool conway_witness_check(const Ordinal& a, const Ordinal& b,
                          const Ordinal& claimed, unsigned depth) {
  const auto preds_a = sample_predecessors(a, depth);
  const auto preds_b = sample_predecessors(b, depth);
  for (const auto& ap : preds_a) {
    const Ordinal ap_b = nat_mul(ap, b);
    for (const auto& bp : preds_b) {
      Ordinal lhs = nat_add(claimed, nat_mul(ap, bp));
      Ordinal rhs = nat_add(nat_mul(a, bp), ap_b);
      if (lhs <= rhs) return false;
    }
  }
  return true;
}

}  // namespace ord
