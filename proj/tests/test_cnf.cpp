#include <vector>

#include "doctest.h"
#include "ord/classic.hpp"
#include "ord/cnf.hpp"
#include "support.hpp"

using namespace ts;

TEST_CASE("make_ordinal canonicalizes") {
  CHECK(mk({}) == Ordinal{});
  CHECK(mk({{fin(1), 1}, {fin(1), 1}}) == mk({{fin(1), 2}}));  // ω + ω = ω·2
  CHECK(mk({{fin(0), 3}, {fin(2), 1}}) == mk({{fin(2), 1}, {fin(0), 3}}));
  CHECK(mk({{fin(1), 0}}) == Ordinal{});  // zero coefficients drop
  CHECK_THROWS_AS(mk({{fin(1), -2}}), ord::error);
}

TEST_CASE("comparison") {
  CHECK(cmp(Ordinal{}, w()) == std::strong_ordering::less);
  CHECK(cmp(wpow(w()), mk({{fin(1), 5}})) == std::strong_ordering::greater);
  Ordinal v = mk({{fin(1), 2}, {fin(0), 1}});
  CHECK(cmp(v, v) == std::strong_ordering::equal);
  CHECK(fin(3) < fin(4));
  CHECK(w() > fin(1000000));
  // ω·2 > ω+k for any finite k
  CHECK(mk({{fin(1), 2}}) > mk({{fin(1), 1}, {fin(0), 900}}));
  // longer prefix-equal sequence is larger
  CHECK(mk({{fin(1), 2}, {fin(0), 1}}) > mk({{fin(1), 2}}));
}

TEST_CASE("zero, successor, limit trichotomy") {
  CHECK(succ(Ordinal{}) == fin(1));
  CHECK(succ(w()) == mk({{fin(1), 1}, {fin(0), 1}}));
  CHECK(mk({{fin(2), 1}, {fin(1), 3}}).is_limit());
  CHECK(fin(7).is_successor());
  CHECK(Ordinal{}.is_zero());
  for (const auto& a : seeded(300)) {
    int kinds = (a.is_zero() ? 1 : 0) + (a.is_successor() ? 1 : 0) +
                (a.is_limit() ? 1 : 0);
    CHECK(kinds == 1);
  }
}

TEST_CASE("split") {
  auto d = split(mk({{fin(1), 2}, {fin(0), 3}}));
  CHECK(d.limit_part == mk({{fin(1), 2}}));
  CHECK(d.finite_part == 3);
  d = split(fin(5));
  CHECK(d.limit_part.is_zero());
  CHECK(d.finite_part == 5);
  d = split(wpow(w()));
  CHECK(d.limit_part == wpow(w()));
  CHECK(d.finite_part == 0);
  SUBCASE("recompose on seeded values") {
    for (const auto& a : seeded(1000)) {
      auto s = split(a);
      CHECK(ord::ord_add(s.limit_part, fin(s.finite_part)) == a);
      CHECK(!s.limit_part.is_successor());
    }
  }
}

TEST_CASE("deg") {
  CHECK(deg(mk({{fin(2), 3}, {fin(1), 1}})) == fin(2));
  CHECK(deg(fin(7)) == Ordinal{});
  CHECK(deg(wpow(succ(w()))) == succ(w()));
  CHECK_THROWS_AS(deg(Ordinal{}), ord::domain_error);
}

TEST_CASE("omega_div") {
  CHECK(omega_div(w()) == fin(1));
  Ordinal v = mk({{fin(2), 3}});  // ω²·3
  CHECK(omega_div(v) == mk({{fin(1), 3}}));
  CHECK(ord::ord_mul(w(), omega_div(v)) == v);
  CHECK(omega_div(Ordinal{}).is_zero());
  CHECK_THROWS_AS(omega_div(succ(w())), ord::domain_error);
  CHECK_THROWS_AS(omega_div(fin(5)), ord::domain_error);
  SUBCASE("inverse of left multiplication by omega on seeded values") {
    for (const auto& a : seeded(1000)) {
      Ordinal m = ord::ord_mul(w(), a);
      CHECK(omega_div(m) == a);
    }
  }
}

TEST_CASE("lub_strict") {
  CHECK(ord::lub_strict({}) == Ordinal{});
  std::vector<Ordinal> s{w(), succ(w())};
  CHECK(ord::lub_strict(s) == succ(succ(w())));
  std::vector<Ordinal> one{fin(5)};
  CHECK(ord::lub_strict(one) == fin(6));
}

TEST_CASE("fund_seq") {
  CHECK(fund_seq(w(), 3) == fin(3));
  CHECK(fund_seq(mk({{fin(2), 1}}), 3) == mk({{fin(1), 3}}));
  CHECK(fund_seq(wpow(w()), 2) == mk({{fin(2), 1}}));
  CHECK_THROWS_AS(fund_seq(Ordinal{}, 1), ord::domain_error);
  CHECK_THROWS_AS(fund_seq(fin(4), 1), ord::domain_error);
  CHECK_THROWS_AS(fund_seq(succ(w()), 1), ord::domain_error);
  SUBCASE("strictly increasing below the value") {
    for (const auto& a : seeded(500, 17)) {
      if (!a.is_limit()) continue;
      for (unsigned n = 0; n < 6; ++n) {
        CHECK(fund_seq(a, n) < fund_seq(a, n + 1));
        CHECK(fund_seq(a, n + 1) < a);
      }
    }
  }
}

TEST_CASE("canonicity: rebuilding from terms is the identity") {
  for (const auto& a : seeded(1000, 5)) {
    std::vector<std::pair<Ordinal, Nat>> parts;
    for (const auto& t : a.terms()) parts.emplace_back(t.exponent(), t.coeff());
    CHECK(mk(std::move(parts)) == a);
  }
}

TEST_CASE("order is total and transitive on seeded triples") {
  const auto xs = seeded(999, 23);
  for (size_t i = 0; i + 2 < xs.size(); i += 3) {
    const Ordinal &a = xs[i], &b = xs[i + 1], &c = xs[i + 2];
    auto ab = cmp(a, b);
    // antisymmetry
    CHECK(cmp(b, a) == (ab == std::strong_ordering::less
                            ? std::strong_ordering::greater
                            : ab == std::strong_ordering::greater
                                  ? std::strong_ordering::less
                                  : std::strong_ordering::equal));
    // transitivity
    if (a <= b && b <= c) CHECK(a <= c);
    if (a >= b && b >= c) CHECK(a >= c);
    // equality is structural
    if (ab == std::strong_ordering::equal) CHECK(a == b);
  }
}
