#include "ord/laws.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <utility>

#include "ord/classic.hpp"
#include "ord/expr.hpp"
#include "ord/jacobsthal.hpp"
#include "ord/natural.hpp"
#include "ord/superjac.hpp"

namespace ord {

namespace {

// splitmix64: tiny, fast, and stable across platforms (the standard
// distributions are not, and reports must be byte-identical).
struct SplitMix {
  std::uint64_t state;

  explicit SplitMix(std::uint64_t s) : state(s) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
};

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  return SplitMix(a ^ (b * 0x9e3779b97f4a7c15ULL)).next();
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Ordinal gen_rec(SplitMix& rng, const GenParams& p, int depth) {
  const std::uint64_t shape = rng.below(100);
  if (shape < 10) return {};
  if (depth <= 0 || shape < 35)
    return Ordinal::finite(Nat(1 + rng.below(static_cast<std::uint64_t>(p.max_coeff))));
  const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p.max_terms)));
  std::vector<std::pair<Ordinal, Nat>> parts;
  parts.reserve(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    Ordinal e = gen_rec(rng, p, depth - 1);
    parts.emplace_back(std::move(e),
                       Nat(1 + rng.below(static_cast<std::uint64_t>(p.max_coeff))));
  }
  return make_ordinal(std::move(parts));
}

}  // namespace

Ordinal gen_ordinal(const GenParams& params, std::uint64_t stream_index) {
  SplitMix rng(mix(mix(params.seed, 0x6f7264696e616c73ULL), stream_index));
  return gen_rec(rng, params, params.max_depth);
}

Ordinal iterate_op(IterOp op, const Ordinal& base, unsigned n) {
  const bool additive = op == IterOp::OrdAdd || op == IterOp::NatAdd;
  Ordinal acc = additive ? Ordinal{} : Ordinal::finite(1);
  for (unsigned i = 0; i < n; ++i) {
    switch (op) {
      case IterOp::OrdAdd: acc = ord_add(acc, base); break;
      case IterOp::OrdMul: acc = ord_mul(acc, base); break;
      case IterOp::NatAdd: acc = nat_add(acc, base); break;
      case IterOp::NatMul: acc = nat_mul(acc, base); break;
      case IterOp::JacMul: acc = jac_mul(acc, base); break;
    }
  }
  return acc;
}

CertResult limit_certificate(const Ordinal& claimed,
                             const std::function<Ordinal(const Ordinal&)>& sample,
                             const Ordinal& beta, unsigned m_depth,
                             unsigned n_depth) {
  if (!beta.is_limit())
    throw domain_error("limit_certificate: beta must be a limit ordinal");
  CertResult res;
  std::vector<Ordinal> v;
  v.reserve(n_depth + 1);
  for (unsigned n = 0; n <= n_depth; ++n) v.push_back(sample(fund_seq(beta, n)));
  res.samples_checked = static_cast<int>(v.size());
  for (unsigned n = 0; n + 1 <= n_depth; ++n) {
    if (v[n] > v[n + 1]) {
      res.witness = v[n];
      return res;
    }
  }
  for (const auto& s : v) {
    if (s > claimed) {
      res.witness = s;
      return res;
    }
  }
  if (claimed.is_limit()) {
    // Cofinality: the samples must pass every approximant of claimed.
    // Aligned indexings (approximant m vs sample n drawn from the same
    // fundamental sequences) tie at the boundary, so the search may draw
    // further samples, up to a bounded horizon.
    const size_t horizon = static_cast<size_t>(n_depth) + m_depth + 8;
    for (unsigned m = 0; m <= m_depth; ++m) {
      Ordinal approx = fund_seq(claimed, m);
      ++res.samples_checked;
      bool beaten = false;
      for (const auto& s : v)
        if (s > approx) {
          beaten = true;
          break;
        }
      while (!beaten && v.size() <= horizon) {
        Ordinal next = sample(fund_seq(beta, static_cast<unsigned>(v.size())));
        ++res.samples_checked;
        if (next < v.back() || next > claimed) {
          res.witness = std::move(next);
          return res;
        }
        beaten = next > approx;
        v.push_back(std::move(next));
      }
      if (!beaten) {
        res.witness = std::move(approx);
        return res;
      }
    }
  } else if (v.back() != claimed) {
    // A successor (or zero) limit value can only arise if the samples
    // become constant at it.
    res.witness = v.back();
    return res;
  }
  res.passed = true;
  return res;
}

namespace {

using Inputs = std::vector<Ordinal>;
using Violation = std::optional<std::pair<Ordinal, Ordinal>>;

Violation expect_eq(Ordinal lhs, Ordinal rhs) {
  if (lhs == rhs) return std::nullopt;
  return std::make_pair(std::move(lhs), std::move(rhs));
}

Violation expect_leq(Ordinal lhs, Ordinal rhs) {
  if (lhs <= rhs) return std::nullopt;
  return std::make_pair(std::move(lhs), std::move(rhs));
}

Violation expect_lt(Ordinal lhs, Ordinal rhs) {
  if (lhs < rhs) return std::nullopt;
  return std::make_pair(std::move(lhs), std::move(rhs));
}

struct LawDef {
  LawInfo info;
  std::vector<Inputs> forced;
  std::function<Violation(const Inputs&)> run;
};

Ordinal fi(unsigned n) { return Ordinal::finite(n); }

std::vector<LawDef> build_catalog() {
  std::vector<LawDef> laws;
  auto add = [&](std::string id, std::string desc, int arity, Polarity pol,
                 std::function<Violation(const Inputs&)> run,
                 std::vector<Inputs> forced = {}) {
    laws.push_back(LawDef{LawInfo{std::move(id), std::move(desc), arity, pol},
                          std::move(forced), std::move(run)});
  };

  // The law grid, column by column within each row: the successor-based,
  // ⊕-based and ⊗-based version of each classical identity.
  add("add-assoc", "a + (b + c) = (a + b) + c", 3, Polarity::holds,
      [](const Inputs& x) {
        return expect_eq(ord_add(x[0], ord_add(x[1], x[2])),
                         ord_add(ord_add(x[0], x[1]), x[2]));
      });
  add("nat-add-assoc", "a #+ (b #+ c) = (a #+ b) #+ c", 3, Polarity::holds,
      [](const Inputs& x) {
        return expect_eq(nat_add(x[0], nat_add(x[1], x[2])),
                         nat_add(nat_add(x[0], x[1]), x[2]));
      });
  add("mul-left-distrib", "a * (b + c) = a*b + a*c", 3, Polarity::holds,
      [](const Inputs& x) {
        return expect_eq(ord_mul(x[0], ord_add(x[1], x[2])),
                         ord_add(ord_mul(x[0], x[1]), ord_mul(x[0], x[2])));
      });
  add("jacthm", "a j* (b #+ c) = (a j* b) #+ (a j* c)", 3, Polarity::holds,
      [](const Inputs& x) {
        return expect_eq(jac_mul(x[0], nat_add(x[1], x[2])),
                         nat_add(jac_mul(x[0], x[1]), jac_mul(x[0], x[2])));
      });
  add("nat-mul-left-distrib", "a #* (b #+ c) = (a #* b) #+ (a #* c)", 3,
      Polarity::holds, [](const Inputs& x) {
        return expect_eq(nat_mul(x[0], nat_add(x[1], x[2])),
                         nat_add(nat_mul(x[0], x[1]), nat_mul(x[0], x[2])));
      });
  add("mul-assoc", "a * (b * c) = (a * b) * c", 3, Polarity::holds,
      [](const Inputs& x) {
        return expect_eq(ord_mul(x[0], ord_mul(x[1], x[2])),
                         ord_mul(ord_mul(x[0], x[1]), x[2]));
      });
  add("jaccor1", "a j* (b j* c) = (a j* b) j* c", 3, Polarity::holds,
      [](const Inputs& x) {
        return expect_eq(jac_mul(x[0], jac_mul(x[1], x[2])),
                         jac_mul(jac_mul(x[0], x[1]), x[2]));
      });
  add("nat-mul-assoc", "a #* (b #* c) = (a #* b) #* c", 3, Polarity::holds,
      [](const Inputs& x) {
        return expect_eq(nat_mul(x[0], nat_mul(x[1], x[2])),
                         nat_mul(nat_mul(x[0], x[1]), x[2]));
      });
  add("pow-add", "a ^ (b + c) = a^b * a^c", 3, Polarity::holds,
      [](const Inputs& x) {
        return expect_eq(ord_pow(x[0], ord_add(x[1], x[2])),
                         ord_mul(ord_pow(x[0], x[1]), ord_pow(x[0], x[2])));
      });
  add("jaccor2", "a j^ (b + c) = (a j^ b) j* (a j^ c)", 3, Polarity::holds,
      [](const Inputs& x) {
        return expect_eq(jac_pow(x[0], ord_add(x[1], x[2])),
                         jac_mul(jac_pow(x[0], x[1]), jac_pow(x[0], x[2])));
      });
  add("mainthm", "a #^ (b #+ c) = (a #^ b) #* (a #^ c)", 3, Polarity::holds,
      [](const Inputs& x) {
        return expect_eq(sj_pow(x[0], nat_add(x[1], x[2])),
                         nat_mul(sj_pow(x[0], x[1]), sj_pow(x[0], x[2])));
      });
  add("pow-mul", "a ^ (b * c) = (a ^ b) ^ c", 3, Polarity::holds,
      [](const Inputs& x) {
        return expect_eq(ord_pow(x[0], ord_mul(x[1], x[2])),
                         ord_pow(ord_pow(x[0], x[1]), x[2]));
      });
  add("jaccor3", "a j^ (b * c) = (a j^ b) j^ c", 3, Polarity::holds,
      [](const Inputs& x) {
        return expect_eq(jac_pow(x[0], ord_mul(x[1], x[2])),
                         jac_pow(jac_pow(x[0], x[1]), x[2]));
      });
  add("maincor", "a #^ (b j* c) = (a #^ b) #^ c", 3, Polarity::holds,
      [](const Inputs& x) {
        return expect_eq(sj_pow(x[0], jac_mul(x[1], x[2])),
                         sj_pow(sj_pow(x[0], x[1]), x[2]));
      });

  // Off-grid positive laws.
  add("nat-add-comm", "a #+ b = b #+ a", 2, Polarity::holds,
      [](const Inputs& x) {
        return expect_eq(nat_add(x[0], x[1]), nat_add(x[1], x[0]));
      });
  add("nat-mul-comm", "a #* b = b #* a", 2, Polarity::holds,
      [](const Inputs& x) {
        return expect_eq(nat_mul(x[0], x[1]), nat_mul(x[1], x[0]));
      });
  add("nat-mul-right-distrib", "(b #+ c) #* a = (b #* a) #+ (c #* a)", 3,
      Polarity::holds, [](const Inputs& x) {
        return expect_eq(nat_mul(nat_add(x[1], x[2]), x[0]),
                         nat_add(nat_mul(x[1], x[0]), nat_mul(x[2], x[0])));
      });
  add("maincor-families",
      "a #^ (b0 #+ ... #+ bk) = (a #^ b0) #* ... #* (a #^ bk) for k <= 6", 8,
      Polarity::holds, [](const Inputs& x) -> Violation {
        const Ordinal& a = x[0];
        Ordinal sum;
        Ordinal prod = fi(1);
        for (size_t i = 1; i < x.size(); ++i) {
          sum = nat_add(sum, x[i]);
          prod = nat_mul(prod, sj_pow(a, x[i]));
          Ordinal lhs = sj_pow(a, sum);
          if (lhs != prod) return std::make_pair(std::move(lhs), prod);
        }
        return std::nullopt;
      });

  // Pointwise comparisons between the towers.
  add("leq-add", "a + b <= a #+ b", 2, Polarity::holds, [](const Inputs& x) {
    return expect_leq(ord_add(x[0], x[1]), nat_add(x[0], x[1]));
  });
  add("leq-mul", "a * b <= a j* b <= a #* b", 2, Polarity::holds,
      [](const Inputs& x) -> Violation {
        Ordinal v1 = ord_mul(x[0], x[1]);
        Ordinal v2 = jac_mul(x[0], x[1]);
        Ordinal v3 = nat_mul(x[0], x[1]);
        if (auto v = expect_leq(std::move(v1), v2)) return v;
        return expect_leq(std::move(v2), std::move(v3));
      });
  add("leq-pow", "a ^ b <= a j^ b <= a #^ b", 2, Polarity::holds,
      [](const Inputs& x) -> Violation {
        Ordinal v1 = ord_pow(x[0], x[1]);
        Ordinal v2 = jac_pow(x[0], x[1]);
        Ordinal v3 = sj_pow(x[0], x[1]);
        if (auto v = expect_leq(std::move(v1), v2)) return v;
        return expect_leq(std::move(v2), std::move(v3));
      });

  add("deg-hom", "deg(a #* b) = deg(a) #+ deg(b) for a, b > 0", 2,
      Polarity::holds, [](const Inputs& x) -> Violation {
        if (x[0].is_zero() || x[1].is_zero()) return std::nullopt;
        return expect_eq(deg(nat_mul(x[0], x[1])),
                         nat_add(deg(x[0]), deg(x[1])));
      });
  add("omega-jac", "w * d = w j* d", 1, Polarity::holds, [](const Inputs& x) {
    return expect_eq(ord_mul(Ordinal::omega(), x[0]),
                     jac_mul(Ordinal::omega(), x[0]));
  });
  add("monoton",
      "((a #* y) #+ (x #* b)) #- (x #* y) is increasing in x and y "
      "for x < a, y < b",
      2, Polarity::holds, [](const Inputs& x) -> Violation {
        const Ordinal& a = x[0];
        const Ordinal& b = x[1];
        if (a.is_zero() || b.is_zero()) return std::nullopt;
        const auto preds_a = sample_predecessors(a, 2);
        const auto preds_b = sample_predecessors(b, 2);
        // Monotone along each axis implies monotone on the grid.
        for (const auto& q : preds_b) {
          for (size_t i = 0; i + 1 < preds_a.size(); ++i) {
            Ordinal lo = conway_f(a, b, preds_a[i], q);
            Ordinal hi = conway_f(a, b, preds_a[i + 1], q);
            if (lo > hi) return std::make_pair(std::move(lo), std::move(hi));
          }
        }
        for (const auto& p : preds_a) {
          for (size_t j = 0; j + 1 < preds_b.size(); ++j) {
            Ordinal lo = conway_f(a, b, p, preds_b[j]);
            Ordinal hi = conway_f(a, b, p, preds_b[j + 1]);
            if (lo > hi) return std::make_pair(std::move(lo), std::move(hi));
          }
        }
        return std::nullopt;
      });
  add("nat-add-strict-mono", "b < c implies a #+ b < a #+ c", 3,
      Polarity::holds, [](const Inputs& x) -> Violation {
        if (x[1] == x[2]) return std::nullopt;
        const Ordinal& lo = std::min(x[1], x[2]);
        const Ordinal& hi = std::max(x[1], x[2]);
        if (auto v = expect_lt(nat_add(x[0], lo), nat_add(x[0], hi))) return v;
        return expect_lt(nat_add(lo, x[0]), nat_add(hi, x[0]));
      });
  add("nat-mul-strict-mono", "b < c and a > 0 imply a #* b < a #* c", 3,
      Polarity::holds, [](const Inputs& x) -> Violation {
        if (x[0].is_zero() || x[1] == x[2]) return std::nullopt;
        const Ordinal& lo = std::min(x[1], x[2]);
        const Ordinal& hi = std::max(x[1], x[2]);
        if (auto v = expect_lt(nat_mul(x[0], lo), nat_mul(x[0], hi))) return v;
        return expect_lt(nat_mul(lo, x[0]), nat_mul(hi, x[0]));
      });
  add("monus-minimal", "a #- b is the least g with b #+ g >= a", 2,
      Polarity::holds, [](const Inputs& x) -> Violation {
        const Ordinal& a = x[0];
        const Ordinal& b = x[1];
        Ordinal g = nat_ominus(a, b);
        if (auto v = expect_leq(a, nat_add(b, g))) return v;
        if (g.is_zero()) return std::nullopt;
        if (g.is_successor()) {
          auto [lim, fin] = split(g);
          Ordinal below = nat_add(lim, Ordinal::finite(fin - 1));
          return expect_lt(nat_add(b, below), a);
        }
        for (unsigned n = 0; n <= 8; ++n)
          if (auto v = expect_lt(nat_add(b, fund_seq(g, n)), a)) return v;
        return std::nullopt;
      });
  add("conway-witness",
      "a #* b passes the predecessor sample check of the recursive "
      "characterization",
      2, Polarity::holds, [](const Inputs& x) -> Violation {
        Ordinal m = nat_mul(x[0], x[1]);
        if (conway_witness_check(x[0], x[1], m, 4)) return std::nullopt;
        return std::make_pair(m, m);
      });

  // False variants; each run is expected to surface a counterexample,
  // with the classic one pinned as trial 0.
  add("naive-jac-distrib", "a j* (b + c) = (a j* b) #+ (a j* c)", 3,
      Polarity::fails,
      [](const Inputs& x) {
        return expect_eq(jac_mul(x[0], ord_add(x[1], x[2])),
                         nat_add(jac_mul(x[0], x[1]), jac_mul(x[0], x[2])));
      },
      {{fi(1), fi(1), Ordinal::omega()}});
  add("naive-sj-add", "a #^ (b + c) = (a #^ b) #* (a #^ c)", 3, Polarity::fails,
      [](const Inputs& x) {
        return expect_eq(sj_pow(x[0], ord_add(x[1], x[2])),
                         nat_mul(sj_pow(x[0], x[1]), sj_pow(x[0], x[2])));
      },
      {{fi(2), fi(1), Ordinal::omega()}});
  add("naive-mul-right-distrib", "(a + b) * c = a*c + b*c", 3, Polarity::fails,
      [](const Inputs& x) {
        return expect_eq(ord_mul(ord_add(x[0], x[1]), x[2]),
                         ord_add(ord_mul(x[0], x[2]), ord_mul(x[1], x[2])));
      },
      {{fi(1), fi(1), Ordinal::omega()}});
  add("naive-jac-right-distrib", "(a #+ b) j* c = (a j* c) #+ (b j* c)", 3,
      Polarity::fails,
      [](const Inputs& x) {
        return expect_eq(jac_mul(nat_add(x[0], x[1]), x[2]),
                         nat_add(jac_mul(x[0], x[2]), jac_mul(x[1], x[2])));
      },
      {{fi(1), fi(1), Ordinal::omega()}});

  return laws;
}

const std::vector<LawDef>& catalog() {
  static const std::vector<LawDef> laws = build_catalog();
  return laws;
}

const LawDef& find_law(const std::string& id) {
  for (const auto& law : catalog())
    if (law.info.id == id) return law;
  throw unknown_law_error("unknown law: " + id);
}

}  // namespace

const std::vector<LawInfo>& law_catalog() {
  static const std::vector<LawInfo> infos = [] {
    std::vector<LawInfo> out;
    for (const auto& law : catalog()) out.push_back(law.info);
    return out;
  }();
  return infos;
}

LawReport check_law(const std::string& law_id, const GenParams& params,
                    int trials, const CheckOptions& opts) {
  const LawDef& law = find_law(law_id);
  LawReport rep;
  rep.law_id = law_id;
  rep.seed = params.seed;
  rep.expected_polarity = law.info.polarity;

  auto tuple_for = [&](int t) -> Inputs {
    if (opts.include_forced && t < static_cast<int>(law.forced.size()))
      return law.forced[static_cast<size_t>(t)];
    GenParams p = params;
    p.seed = mix(mix(params.seed, fnv1a(law_id)), static_cast<std::uint64_t>(t));
    Inputs xs;
    xs.reserve(static_cast<size_t>(law.info.arity));
    for (int k = 0; k < law.info.arity; ++k)
      xs.push_back(gen_ordinal(p, static_cast<std::uint64_t>(k)));
    return xs;
  };

  if (law.info.polarity == Polarity::fails) {
    // Hunt for one counterexample; that settles the refutation.
    for (int t = 0; t < trials; ++t) {
      Inputs xs = tuple_for(t);
      ++rep.trials;
      if (auto v = law.run(xs)) {
        rep.failures.push_back(
            {std::move(xs), std::move(v->first), std::move(v->second)});
        break;
      }
    }
    return rep;
  }

  rep.trials = trials;
  const unsigned nthreads =
      std::min<unsigned>(std::max(1u, opts.threads),
                         trials > 0 ? static_cast<unsigned>(trials) : 1u);
  if (nthreads <= 1) {
    for (int t = 0; t < trials; ++t) {
      Inputs xs = tuple_for(t);
      if (auto v = law.run(xs))
        rep.failures.push_back(
            {std::move(xs), std::move(v->first), std::move(v->second)});
    }
    return rep;
  }

  std::vector<std::vector<LawFailure>> found(nthreads);
  std::vector<std::exception_ptr> errors(nthreads);
  std::vector<std::thread> workers;
  workers.reserve(nthreads);
  for (unsigned w = 0; w < nthreads; ++w) {
    workers.emplace_back([&, w] {
      try {
        // Contiguous blocks keep the merged failure list in trial order.
        const int lo = static_cast<int>(
            static_cast<long long>(trials) * w / nthreads);
        const int hi = static_cast<int>(
            static_cast<long long>(trials) * (w + 1) / nthreads);
        for (int t = lo; t < hi; ++t) {
          Inputs xs = tuple_for(t);
          if (auto v = law.run(xs))
            found[w].push_back(
                {std::move(xs), std::move(v->first), std::move(v->second)});
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : workers) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto& part : found)
    for (auto& f : part) rep.failures.push_back(std::move(f));
  return rep;
}

nlohmann::ordered_json report_json(const LawReport& report) {
  nlohmann::ordered_json j;
  j["id"] = report.law_id;
  j["polarity"] =
      report.expected_polarity == Polarity::holds ? "holds" : "fails";
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["passed"] = report.passed();
  auto failures = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) {
    nlohmann::ordered_json e;
    auto inputs = nlohmann::ordered_json::array();
    for (const auto& in : f.inputs) inputs.push_back(print_text(in));
    e["inputs"] = std::move(inputs);
    e["lhs"] = print_text(f.lhs);
    e["rhs"] = print_text(f.rhs);
    failures.push_back(std::move(e));
  }
  j["failures"] = std::move(failures);
  return j;
}

}  // namespace ord
