#ifndef ORD_LAWS_HPP
#define ORD_LAWS_HPP

// Seeded random ordinal generation, iteration oracles for the recursive
// definitions, limit-convergence certificates, and the executable
// catalog of algebraic laws (including the deliberately false ones,
// which are expected to produce counterexamples).

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ord/cnf.hpp"

namespace ord {

struct GenParams {
  int max_depth = 2;   // exponent-nesting bound; 0 generates finite values
  int max_terms = 3;
  int max_coeff = 5;
  std::uint64_t seed = 0;
};

// Deterministic function of (params, stream_index); mixes zero, finite,
// successor and limit shapes within the requested bounds.
Ordinal gen_ordinal(const GenParams& params, std::uint64_t stream_index);

enum class IterOp { OrdAdd, OrdMul, NatAdd, NatMul, JacMul };

// n-fold left iterate of op applied to base, starting from the unit
// (0 for the additions, 1 for the multiplications).  This is the literal
// successor recursion of the iterated operations and serves as the
// independent oracle for every closed form.
Ordinal iterate_op(IterOp op, const Ordinal& base, unsigned n);

struct CertResult {
  bool passed = false;
  int samples_checked = 0;
  std::optional<Ordinal> witness;  // violating sample or unmatched approximant
};

// Desk-scale check that claimed = lim of sample(gamma) as gamma runs
// along the fundamental sequence of the limit ordinal beta:
//  (i)  the samples v_n = sample(beta[n]) are weakly increasing,
//  (ii) every v_n <= claimed,
//  (iii) if claimed is a limit, each of its fundamental-sequence values
//        up to m_depth is exceeded by some sample (the search may draw
//        samples past n_depth, up to a bounded horizon); otherwise the
//        samples must have stabilized at claimed.
CertResult limit_certificate(const Ordinal& claimed,
                             const std::function<Ordinal(const Ordinal&)>& sample,
                             const Ordinal& beta, unsigned m_depth,
                             unsigned n_depth);

enum class Polarity { holds, fails };

struct LawFailure {
  std::vector<Ordinal> inputs;
  Ordinal lhs;
  Ordinal rhs;
};

struct LawReport {
  std::string law_id;
  int trials = 0;
  std::vector<LawFailure> failures;
  std::uint64_t seed = 0;
  Polarity expected_polarity = Polarity::holds;

  // A holds-law passes with no failures; a fails-law passes once a
  // counterexample has been exhibited.
  bool passed() const {
    return expected_polarity == Polarity::holds ? failures.empty()
                                                : !failures.empty();
  }
};

struct LawInfo {
  std::string id;
  std::string description;  // in expression-language spelling
  int arity;
  Polarity polarity;
};

const std::vector<LawInfo>& law_catalog();

struct unknown_law_error : error {
  using error::error;
};

struct CheckOptions {
  // Negative laws pin their known counterexample as trial 0.
  bool include_forced = true;
  // Trials use per-trial seeds derived from (seed, law id, trial index),
  // so parallel and serial runs produce identical reports.
  unsigned threads = 1;
};

LawReport check_law(const std::string& law_id, const GenParams& params,
                    int trials, const CheckOptions& opts = {});

nlohmann::ordered_json report_json(const LawReport& report);

}  // namespace ord

#endif
