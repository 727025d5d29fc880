#include "ord/cnf.hpp"

#include <algorithm>

namespace ord {

Term::Term(Ordinal exponent, Nat coeff)
    : exponent_(std::move(exponent)), coeff_(std::move(coeff)) {
  if (coeff_ < 1) throw error("Term: coefficient must be >= 1");
}

Ordinal Ordinal::finite(Nat n) {
  if (n < 0) throw error("Ordinal::finite: negative value");
  if (n == 0) return {};
  std::vector<Term> ts;
  ts.emplace_back(Ordinal{}, std::move(n));
  return Ordinal(std::move(ts));
}

Ordinal Ordinal::omega() { return omega_pow(finite(1)); }

Ordinal Ordinal::omega_pow(Ordinal expo) {
  std::vector<Term> ts;
  ts.emplace_back(std::move(expo), 1);
  return Ordinal(std::move(ts));
}

bool Ordinal::is_finite() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.front().exponent().is_zero());
}

bool Ordinal::is_successor() const {
  return !terms_.empty() && terms_.back().exponent().is_zero();
}

bool Ordinal::is_limit() const { return !terms_.empty() && !is_successor(); }

Nat Ordinal::as_nat() const {
  if (!is_finite()) throw domain_error("as_nat: ordinal is infinite");
  return terms_.empty() ? Nat(0) : terms_.front().coeff();
}

std::strong_ordering cmp(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const size_t n = std::min(ta.size(), tb.size());
  for (size_t i = 0; i < n; ++i) {
    auto c = cmp(ta[i].exponent(), tb[i].exponent());
    if (c != std::strong_ordering::equal) return c;
    if (ta[i].coeff() != tb[i].coeff())
      return ta[i].coeff() < tb[i].coeff() ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
  }
  return ta.size() <=> tb.size();
}

Ordinal make_ordinal(std::vector<std::pair<Ordinal, Nat>> parts) {
  for (const auto& [e, c] : parts)
    if (c < 0) throw error("make_ordinal: negative coefficient");
  std::stable_sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
    return cmp(x.first, y.first) == std::strong_ordering::greater;
  });
  std::vector<Term> ts;
  ts.reserve(parts.size());
  for (auto& [e, c] : parts) {
    if (c == 0) continue;
    if (!ts.empty() && ts.back().exponent() == e) {
      Nat merged = ts.back().coeff() + c;
      Ordinal expo = ts.back().exponent();
      ts.pop_back();
      ts.emplace_back(std::move(expo), std::move(merged));
    } else {
      ts.emplace_back(std::move(e), std::move(c));
    }
  }
  return Ordinal(std::move(ts));
}

namespace {

std::vector<std::pair<Ordinal, Nat>> as_parts(const Ordinal& a) {
  std::vector<std::pair<Ordinal, Nat>> parts;
  parts.reserve(a.terms().size());
  for (const auto& t : a.terms()) parts.emplace_back(t.exponent(), t.coeff());
  return parts;
}

}  // namespace

Ordinal succ(const Ordinal& a) {
  auto parts = as_parts(a);
  parts.emplace_back(Ordinal{}, 1);
  return make_ordinal(std::move(parts));
}

Decomposition split(const Ordinal& a) {
  if (!a.is_successor()) return {a, 0};
  auto parts = as_parts(a);
  Nat fin = std::move(parts.back().second);
  parts.pop_back();
  return {make_ordinal(std::move(parts)), std::move(fin)};
}

Ordinal deg(const Ordinal& a) {
  if (a.is_zero()) throw domain_error("deg: undefined on 0");
  return a.terms().front().exponent();
}

Ordinal omega_div(const Ordinal& a) {
  if (a.is_successor()) throw domain_error("omega_div: not divisible by omega");
  // ω^(1+e) = ω·ω^e, and 1+e is e-1 for finite e, e itself for infinite e.
  std::vector<std::pair<Ordinal, Nat>> parts;
  for (const auto& t : a.terms()) {
    const Ordinal& e = t.exponent();
    Ordinal lowered =
        e.is_finite() ? Ordinal::finite(e.as_nat() - 1) : e;
    parts.emplace_back(std::move(lowered), t.coeff());
  }
  return make_ordinal(std::move(parts));
}

Ordinal lub_strict(std::span<const Ordinal> s) {
  if (s.empty()) return {};
  const Ordinal* best = &s.front();
  for (const auto& x : s)
    if (x > *best) best = &x;
  return succ(*best);
}

Ordinal fund_seq(const Ordinal& a, unsigned n) {
  if (!a.is_limit()) throw domain_error("fund_seq: requires a limit ordinal");
  auto parts = as_parts(a);
  auto [e, c] = std::move(parts.back());
  parts.pop_back();
  if (c > 1) parts.emplace_back(e, c - 1);  // peel down to γ + ω^e
  if (e.is_limit()) {
    parts.emplace_back(fund_seq(e, n), 1);
  } else {
    // e = δ+1: approximate ω^(δ+1) by ω^δ·n.
    auto [dl, df] = split(e);
    auto dparts = as_parts(dl);
    if (df > 1) dparts.emplace_back(Ordinal{}, df - 1);
    parts.emplace_back(make_ordinal(std::move(dparts)), n);
  }
  return make_ordinal(std::move(parts));
}

}  // namespace ord
