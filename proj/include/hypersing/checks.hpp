#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypersing/corpus.hpp"

namespace hypersing {

/// error marks a check that could not run (failed precondition, budget).
enum class Verdict { pass, fail, inconclusive, error };

std::string to_string(Verdict v);

/// Witness fields in insertion order; rationals as "p/q" text.
using Witness = std::vector<std::pair<std::string, std::string>>;

struct CheckResult {
    std::string check;
    Verdict verdict = Verdict::inconclusive;
    Witness witness;
    std::string message;
};

/// A computed quantity and whether it is exact (not a bound, not unstable).
struct Quantity {
    ExtRat value;
    bool exact = true;
};

/// alpha_f >= alpha_h + 1/(theta + 1). theta.exact = false means theta is a
/// lower bound, which can only strengthen the tested inequality.
Verdict teissier_verdict(const Quantity& alpha_f, const Quantity& alpha_h, const Quantity& theta);

/// alpha_f >= sum 1/(theta_i + 1); inexact thetas are lower bounds.
Verdict chain_verdict(const Quantity& alpha_f, const std::vector<Quantity>& thetas);

/// alpha_h >= alpha_f - 1/mult.
Verdict upper_bound_verdict(const Quantity& alpha_h, const Quantity& alpha_f, std::uint64_t mult);

/// Hyperplane defaults to a generic one drawn from the sampler.
CheckResult check_teissier(const Poly& f, const std::optional<Hyperplane>& h, const Sampler& sampler,
                           const Limits& limits = {});
CheckResult check_corollary_chain(const Poly& f, const Sampler& sampler, const Limits& limits = {});
CheckResult check_upper_bound(const Poly& f, const Sampler& sampler, const Limits& limits = {});
/// d defaults to mult(f).
CheckResult check_milnor_chain(const Poly& f, const Sampler& sampler, const Limits& limits = {},
                               std::optional<std::uint64_t> d = std::nullopt);
CheckResult check_lct_relation(const Poly& f, bool nondegenerate, const Limits& limits = {});
CheckResult check_spectrum_family(const Family& family, const std::vector<Rational>& samples,
                                  const std::vector<Rational>& exclusions, const Sampler& sampler,
                                  const Limits& limits = {});
CheckResult check_mu_constant(const Family& family, const std::vector<Rational>& samples,
                              const std::vector<Rational>& exclusions, const Limits& limits = {});
CheckResult check_expectations(const Poly& f, const Expectations& expect, const Limits& limits = {});

/// Runs one requested check of an entry; precondition and budget failures
/// become Verdict::error.
CheckResult run_check(const CorpusEntry& entry, CheckKind kind, const Sampler& sampler,
                      const Limits& limits = {});

}  // namespace hypersing
