#include "hypersing/checks.hpp"

#include <algorithm>

namespace hypersing {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::fail: return "FAIL";
        case Verdict::inconclusive: return "INCONCLUSIVE";
        case Verdict::error: return "ERROR";
    }
    return "unknown";
}

namespace {

std::string str(bool b) { return b ? "true" : "false"; }

Rational reciprocal_plus_one(const Rational& theta) { return Rational(1 / (theta + 1)); }

ExtRat min_one(const ExtRat& v) { return v < ExtRat(Rational(1)) ? v : ExtRat(Rational(1)); }

void require_isolated_singular(const Poly& f, const Limits& limits) {
    ExtNat mu = milnor_number(f, limits);
    if (mu.is_infinite() || mu == ExtNat(0)) throw DomainError("isolated singularity required");
}

void require_two_vars(const Poly& f) {
    if (f.arity() < 2) throw DomainError("at least two variables required");
}

template <typename T>
void add_stability(Witness& w, const std::string& prefix, const Stable<T>& s) {
    w.emplace_back(prefix + "seeds", std::to_string(s.seeds[0]) + "," + std::to_string(s.seeds[1]));
    w.emplace_back(prefix + "height", std::to_string(s.height));
    w.emplace_back(prefix + "escalations", std::to_string(s.escalations));
}

std::string hyperplanes_text(const std::vector<Hyperplane>& hs) {
    std::string out;
    for (const auto& h : hs) out += (out.empty() ? "" : " ") + to_string(h);
    return out;
}

Quantity exponent_quantity(const MinExp& e) { return Quantity{e.value, e.exact}; }

// A sample drawn from the sampler avoiding the listed values.
Rational generic_parameter(Sampler& s, const std::vector<Rational>& avoid) {
    for (;;) {
        Rational t(s.next_coefficient());
        if (std::find(avoid.begin(), avoid.end(), t) == avoid.end()) return t;
    }
}

Poly instance(const Family& fam, const Rational& t) {
    return fam.kind() == FamilyKind::cover ? fam.instantiate({Rational(1), t}) : fam.instantiate(t);
}

std::vector<Rational> without(std::vector<Rational> samples, const std::vector<Rational>& exclusions) {
    std::erase_if(samples, [&](const Rational& t) {
        return std::find(exclusions.begin(), exclusions.end(), t) != exclusions.end();
    });
    return samples;
}

}  // namespace

Verdict teissier_verdict(const Quantity& alpha_f, const Quantity& alpha_h, const Quantity& theta) {
    if (!alpha_f.exact || !alpha_h.exact) return Verdict::inconclusive;
    if (theta.value.is_infinite()) return Verdict::inconclusive;
    ExtRat rhs = alpha_h.value + ExtRat(reciprocal_plus_one(theta.value.value()));
    if (alpha_f.value >= rhs) return Verdict::pass;
    return theta.exact ? Verdict::fail : Verdict::inconclusive;
}

Verdict chain_verdict(const Quantity& alpha_f, const std::vector<Quantity>& thetas) {
    if (!alpha_f.exact) return Verdict::inconclusive;
    Rational sum = 0;
    bool exact = true;
    for (const auto& t : thetas) {
        if (t.value.is_infinite()) return Verdict::inconclusive;
        sum += reciprocal_plus_one(t.value.value());
        exact = exact && t.exact;
    }
    if (alpha_f.value >= ExtRat(sum)) return Verdict::pass;
    return exact ? Verdict::fail : Verdict::inconclusive;
}

Verdict upper_bound_verdict(const Quantity& alpha_h, const Quantity& alpha_f, std::uint64_t mult) {
    if (!alpha_h.exact || !alpha_f.exact || mult == 0) return Verdict::inconclusive;
    if (alpha_h.value.is_infinite()) return Verdict::pass;
    if (alpha_f.value.is_infinite()) return Verdict::fail;
    Rational rhs = alpha_f.value.value() - Rational(1, static_cast<unsigned long>(mult));
    return alpha_h.value >= ExtRat(rhs) ? Verdict::pass : Verdict::fail;
}

CheckResult check_teissier(const Poly& f, const std::optional<Hyperplane>& h, const Sampler& sampler,
                           const Limits& limits) {
    CheckResult r{"teissier", Verdict::inconclusive, {}, ""};
    require_two_vars(f);
    require_isolated_singular(f, limits);
    MinExp af = minimal_exponent(f, limits);
    ThetaVal th = theta(f, limits);
    Quantity alpha_h{ExtRat::infinity(), false};
    if (h) {
        Poly g = restrict(f, *h, limits.max_terms);
        MinExp ah = minimal_exponent(g, limits);
        alpha_h = exponent_quantity(ah);
        r.witness.emplace_back("hyperplane", to_string(*h));
    } else {
        SectionResult sec = generic_section(f, SectionInvariant::exponent, sampler, limits);
        if (sec.stable.value) alpha_h = Quantity{sec.stable.value->value, sec.stable.value->exact};
        r.witness.emplace_back("hyperplane", "generic " + hyperplanes_text(sec.hyperplanes));
        add_stability(r.witness, "section_", sec.stable);
        if (!sec.stable.value) r.message = "section exponent did not stabilize";
    }
    Quantity theta_q{ExtRat(th.value), is_exact(th.status)};
    r.verdict = teissier_verdict(exponent_quantity(af), alpha_h, theta_q);

    r.witness.emplace_back("alpha_f", to_string(af.value));
    r.witness.emplace_back("alpha_f_method", to_string(af.method));
    r.witness.emplace_back("alpha_f_exact", str(af.exact));
    r.witness.emplace_back("alpha_section", alpha_h.exact || !alpha_h.value.is_infinite() ? to_string(alpha_h.value) : "none");
    r.witness.emplace_back("alpha_section_exact", str(alpha_h.exact));
    r.witness.emplace_back("theta", to_string(th.value));
    r.witness.emplace_back("theta_status", to_string(th.status));
    if (!alpha_h.value.is_infinite()) {
        ExtRat rhs = alpha_h.value + ExtRat(reciprocal_plus_one(th.value));
        r.witness.emplace_back("rhs", to_string(rhs));
        r.witness.emplace_back("equality", str(rhs == af.value));
    }
    if (r.message.empty()) {
        if (r.verdict == Verdict::pass) r.message = "alpha(f) >= alpha(f|H) + 1/(theta+1)";
        else if (r.verdict == Verdict::fail) r.message = "inequality violated with exact quantities";
        else if (!af.exact || !alpha_h.exact) r.message = "a minimal exponent is not exact";
        else r.message = "inequality fails only against a theta lower bound";
    }
    return r;
}

namespace {

struct ChainOutcome {
    std::vector<InvariantValue> thetas;
    friend bool operator==(const ChainOutcome&, const ChainOutcome&) = default;
};

}  // namespace

CheckResult check_corollary_chain(const Poly& f, const Sampler& sampler, const Limits& limits) {
    CheckResult r{"corollary_chain", Verdict::inconclusive, {}, ""};
    require_two_vars(f);
    require_isolated_singular(f, limits);
    MinExp af = minimal_exponent(f, limits);
    std::function<ChainOutcome(Sampler)> run = [&](Sampler s) {
        ChainOutcome out;
        Poly g = f;
        for (;;) {
            ThetaVal t;
            try {
                t = theta(g, limits);
            } catch (const DomainError& e) {
                throw DomainError(std::string("section lost isolatedness (degenerate sampling): ") + e.what());
            }
            out.thetas.push_back({ExtRat(t.value), is_exact(t.status)});
            if (g.arity() == 1) break;
            g = random_section(g, s);
        }
        return out;
    };
    Stable<ChainOutcome> st = two_seed_stable(sampler, run);
    add_stability(r.witness, "", st);
    r.witness.emplace_back("alpha_f", to_string(af.value));
    r.witness.emplace_back("alpha_f_exact", str(af.exact));
    if (!st.value) {
        r.message = "generic section chain did not stabilize";
        return r;
    }
    std::vector<Quantity> thetas;
    Rational sum = 0;
    for (std::size_t i = 0; i < st.value->thetas.size(); ++i) {
        const auto& t = st.value->thetas[i];
        thetas.push_back({t.value, t.exact});
        sum += reciprocal_plus_one(t.value.value());
        r.witness.emplace_back("theta_" + std::to_string(i), to_string(t.value));
        r.witness.emplace_back("theta_" + std::to_string(i) + "_exact", str(t.exact));
    }
    r.witness.emplace_back("sum", to_string(sum));
    r.witness.emplace_back("equality", str(ExtRat(sum) == af.value));
    r.verdict = chain_verdict(exponent_quantity(af), thetas);
    if (r.verdict == Verdict::pass) r.message = "sum of 1/(theta_i+1) <= alpha(f)";
    else if (r.verdict == Verdict::fail) r.message = "chain sum exceeds alpha(f) with exact quantities";
    else if (!af.exact) r.message = "minimal exponent of f is not exact";
    else r.message = "chain sum exceeds alpha(f) only against theta lower bounds";
    return r;
}

CheckResult check_upper_bound(const Poly& f, const Sampler& sampler, const Limits& limits) {
    CheckResult r{"upper_bound", Verdict::inconclusive, {}, ""};
    require_two_vars(f);
    MinExp af = minimal_exponent(f, limits);
    std::uint64_t mult = multiplicity(f).value();
    SectionResult sec = generic_section(f, SectionInvariant::exponent, sampler, limits);
    add_stability(r.witness, "section_", sec.stable);
    r.witness.emplace_back("hyperplane", "generic " + hyperplanes_text(sec.hyperplanes));
    r.witness.emplace_back("alpha_f", to_string(af.value));
    r.witness.emplace_back("alpha_f_exact", str(af.exact));
    r.witness.emplace_back("mult", std::to_string(mult));
    if (!sec.stable.value) {
        r.message = "section exponent did not stabilize";
        return r;
    }
    Quantity ah{sec.stable.value->value, sec.stable.value->exact};
    r.witness.emplace_back("alpha_section", to_string(ah.value));
    r.witness.emplace_back("alpha_section_exact", str(ah.exact));
    if (!sec.hyperplanes.empty())
        r.witness.emplace_back("section_method",
                               to_string(minimal_exponent(restrict(f, sec.hyperplanes.front(), limits.max_terms), limits).method));
    if (!af.value.is_infinite()) {
        Rational rhs = af.value.value() - Rational(1) / mult;
        r.witness.emplace_back("rhs", to_string(rhs));
    }
    r.verdict = upper_bound_verdict(ah, exponent_quantity(af), mult);
    if (r.verdict == Verdict::pass) r.message = "alpha(f|H) >= alpha(f) - 1/mult(f)";
    else if (r.verdict == Verdict::fail) r.message = "inequality violated with exact quantities";
    else if (!ah.exact) r.message = "no exact route for the section exponent";
    else r.message = "minimal exponent of f is not exact";
    return r;
}

namespace {

ExtNat colength_of_generic(const std::vector<Poly>& gens, const VarSet& vars, std::size_t count,
                           bool add_linear_form, Sampler& s, const Limits& limits) {
    std::vector<Poly> combos;
    for (std::size_t k = 0; k < count; ++k) {
        Poly h(vars);
        for (const auto& g : gens) h += g * Rational(s.next_coefficient());
        combos.push_back(std::move(h));
    }
    if (add_linear_form) {
        Poly l(vars);
        for (std::size_t i = 0; i < vars.size(); ++i) l += Poly::variable(vars, i) * Rational(s.next_coefficient());
        combos.push_back(std::move(l));
    }
    return colength(Ideal(vars, std::move(combos)), limits);
}

Poly restrict_or_zero(const Poly& p, const Hyperplane& h, const VarSet& target, std::size_t cap) {
    try {
        return restrict(p, h, cap);
    } catch (const DomainError&) {
        return Poly(target);
    }
}

}  // namespace

CheckResult check_milnor_chain(const Poly& f, const Sampler& sampler, const Limits& limits,
                               std::optional<std::uint64_t> d_override) {
    CheckResult r{"milnor_chain", Verdict::inconclusive, {}, ""};
    require_two_vars(f);
    require_isolated_singular(f, limits);
    const std::size_t n = f.arity();
    const std::uint64_t d = d_override ? *d_override : multiplicity(f).value();
    if (d < 2) throw DomainError("multiplicity chain needs d >= 2");
    const ExtNat mu_f = milnor_number(f, limits);
    const Ideal jf = jacobian_ideal(f);

    std::function<ExtNat(Sampler)> section_mu = [&](Sampler s) {
        return milnor_number(random_section(f, s), limits);
    };
    std::function<ExtNat(Sampler)> restricted_jacobian = [&](Sampler s) {
        Hyperplane h = Hyperplane::random(n, s);
        VarSet target = f.vars().without(h.pivot());
        std::vector<Poly> gens;
        for (const auto& p : jf.generators()) gens.push_back(restrict_or_zero(p, h, target, limits.max_terms));
        return colength_of_generic(gens, target, n - 1, false, s, limits);
    };
    std::function<ExtNat(Sampler)> jacobian_e = [&](Sampler s) {
        return colength_of_generic(jf.generators(), f.vars(), n, false, s, limits);
    };
    std::function<ExtNat(Sampler)> mixed = [&](Sampler s) {
        return colength_of_generic(jf.generators(), f.vars(), n - 1, true, s, limits);
    };
    auto family_mu = [&](bool at_zero) {
        return std::function<ExtNat(Sampler)>([&, at_zero](Sampler s) {
            Hyperplane h = Hyperplane::random(n, s);
            Poly adapted = adapt_to_hyperplane(f, h, limits.max_terms);
            Rational t = at_zero ? Rational(0) : generic_parameter(s, {Rational(0), Rational(1)});
            return milnor_number(loeser_family(adapted, d).instantiate(t), limits);
        });
    };

    struct Step {
        std::string name;
        Stable<ExtNat> st;
    };
    std::vector<Step> steps;
    steps.push_back({"mu_section", two_seed_stable(sampler.fork(1), section_mu)});
    steps.push_back({"e_jacobian_on_section", two_seed_stable(sampler.fork(2), restricted_jacobian)});
    steps.push_back({"mixed_multiplicity", two_seed_stable(sampler.fork(3), mixed)});
    steps.push_back({"mu_family_generic_t", two_seed_stable(sampler.fork(4), family_mu(false))});
    steps.push_back({"mu_family_t0", two_seed_stable(sampler.fork(5), family_mu(true))});
    steps.push_back({"e_jacobian", two_seed_stable(sampler.fork(6), jacobian_e)});

    int max_esc = 0;
    bool all_stable = true;
    for (const auto& s : steps) {
        max_esc = std::max(max_esc, s.st.escalations);
        r.witness.emplace_back(s.name, s.st.value ? to_string(*s.st.value) : "unstable");
        if (!s.st.value) all_stable = false;
    }
    r.witness.emplace_back("d", std::to_string(d));
    r.witness.emplace_back("mu_f", to_string(mu_f));
    r.witness.emplace_back("max_escalations", std::to_string(max_esc));
    r.witness.emplace_back("height", std::to_string(sampler.height()));
    if (!all_stable) {
        r.message = "sampling instability";
        return r;
    }
    const ExtNat mu_g = *steps[0].st.value;
    if (mu_g.is_infinite()) {
        r.message = "generic section is not isolated";
        return r;
    }
    const ExtNat target = (d - 1) * mu_g.value();
    r.witness.emplace_back("target", to_string(target));
    std::vector<std::string> broken;
    if (*steps[1].st.value != mu_g) broken.push_back("e(J_f O_H) = mu(g)");
    if (*steps[2].st.value != mu_g) broken.push_back("e(J^[n-1], m) = mu(g)");
    if (*steps[3].st.value != target) broken.push_back("mu(h_t) = (d-1) mu(g)");
    if (*steps[4].st.value != target) broken.push_back("mu(h_0) = (d-1) mu(g)");
    if (*steps[5].st.value != mu_f) broken.push_back("e(J_f) = mu(f)");
    if (broken.empty()) {
        r.verdict = Verdict::pass;
        r.message = "all multiplicity equalities hold";
    } else {
        r.verdict = Verdict::fail;
        r.message = "violated:";
        for (const auto& b : broken) r.message += " " + b + ";";
        r.message.pop_back();
    }
    return r;
}

CheckResult check_lct_relation(const Poly& f, bool nondegenerate, const Limits& limits) {
    CheckResult r{"lct_relation", Verdict::inconclusive, {}, ""};
    require_isolated_singular(f, limits);
    MinExp af = minimal_exponent(f, limits);
    r.witness.emplace_back("alpha_f", to_string(af.value));
    r.witness.emplace_back("alpha_f_exact", str(af.exact));
    if (!nondegenerate) {
        r.message = "entry not flagged nondegenerate";
        return r;
    }
    if (f.arity() > kMaxNewtonDim) {
        r.message = "Newton polyhedron dimension above the supported cap";
        return r;
    }
    std::vector<Exponent> support;
    for (const auto& [e, c] : f.terms()) support.push_back(e);
    NewtonPoly np = newton_polyhedron(std::span<const Exponent>(support));
    ExtRat diag = min_one(ExtRat(lct_monomial(np)));
    ExtRat lhs = min_one(af.value);
    r.witness.emplace_back("lct_from_exponent", to_string(lhs));
    r.witness.emplace_back("newton_diagonal", to_string(diag));
    if (!af.exact) {
        r.message = "minimal exponent is not exact";
        return r;
    }
    r.verdict = lhs == diag ? Verdict::pass : Verdict::fail;
    r.message = r.verdict == Verdict::pass ? "min(alpha, 1) equals the Newton diagonal value"
                                           : "min(alpha, 1) differs from the Newton diagonal value";
    return r;
}

CheckResult check_spectrum_family(const Family& family, const std::vector<Rational>& samples,
                                  const std::vector<Rational>& exclusions, const Sampler& sampler,
                                  const Limits& limits) {
    CheckResult r{"spectrum_family", Verdict::inconclusive, {}, ""};
    std::vector<Rational> ts = without(samples, exclusions);
    // One extra generic parameter: equal mu there places every sample in the
    // open (connected) stratum of generic mu.
    Sampler s = sampler.fork(0);
    std::vector<Rational> avoid = exclusions;
    avoid.insert(avoid.end(), ts.begin(), ts.end());
    ts.push_back(generic_parameter(s, avoid));
    r.witness.emplace_back("generic_t", to_string(ts.back()));

    std::optional<ExtNat> mu0;
    std::optional<Spectrum> sp0;
    bool mu_constant = true;
    bool spectrum_constant = true;
    for (const auto& t : ts) {
        Poly h = instance(family, t);
        ExtNat mu = milnor_number(h, limits);
        r.witness.emplace_back("mu@" + to_string(t), to_string(mu));
        if (mu.is_infinite() || mu == ExtNat(0)) {
            r.message = "instance at t = " + to_string(t) + " is not an isolated singularity";
            return r;
        }
        if (!find_qh_weights(h)) {
            r.message = "instance at t = " + to_string(t) + " is not quasi-homogeneous";
            return r;
        }
        Spectrum sp = spectrum_qh(h, limits);
        r.witness.emplace_back("spectrum@" + to_string(t), to_string(sp));
        if (!mu0) {
            mu0 = mu;
            sp0 = sp;
            continue;
        }
        if (mu != *mu0) mu_constant = false;
        if (!(sp == *sp0)) spectrum_constant = false;
    }
    if (!mu_constant) {
        r.message = "mu is not constant on the samples";
    } else if (!spectrum_constant) {
        r.verdict = Verdict::fail;
        r.message = "spectrum varies in a mu-constant family";
    } else {
        r.verdict = Verdict::pass;
        r.message = "mu and spectrum constant on the samples";
    }
    return r;
}

CheckResult check_mu_constant(const Family& family, const std::vector<Rational>& samples,
                              const std::vector<Rational>& exclusions, const Limits& limits) {
    CheckResult r{"mu_constant", Verdict::inconclusive, {}, ""};
    ScanResult scan = mu_scan(family, samples, exclusions, limits);
    bool failed_sample = false;
    for (const auto& p : scan.points) {
        r.witness.emplace_back("mu@" + to_string(p.t), p.mu ? to_string(*p.mu) : "error: " + p.error);
        if (!p.mu) failed_sample = true;
    }
    if (scan.points.empty()) {
        r.message = "no samples left after exclusions";
    } else if (scan.constant) {
        r.verdict = Verdict::pass;
        r.message = "mu constant on the samples";
    } else if (failed_sample) {
        r.message = "some samples could not be computed";
    } else {
        r.verdict = Verdict::fail;
        r.message = "mu takes " + std::to_string(scan.partition.size()) + " values on the samples";
    }
    return r;
}

CheckResult check_expectations(const Poly& f, const Expectations& expect, const Limits& limits) {
    CheckResult r{"expect", Verdict::pass, {}, ""};
    std::vector<std::string> failed;
    std::vector<std::string> unsure;
    auto note = [&](const std::string& key, const std::string& got, const std::string& want, bool ok) {
        r.witness.emplace_back(key, got);
        r.witness.emplace_back(key + "_expected", want);
        if (!ok) failed.push_back(key);
    };
    if (expect.mu) {
        ExtNat mu = milnor_number(f, limits);
        note("mu", to_string(mu), to_string(*expect.mu), mu == *expect.mu);
    }
    if (expect.mult) {
        ExtNat m = multiplicity(f);
        note("mult", to_string(m), to_string(*expect.mult), m == *expect.mult);
    }
    if (expect.theta) {
        ThetaVal t = theta(f, limits);
        r.witness.emplace_back("theta_status", to_string(t.status));
        if (is_exact(t.status)) {
            note("theta", to_string(t.value), to_string(*expect.theta), t.value == *expect.theta);
        } else {
            // The true value is at least the bound.
            note("theta", to_string(t.value), to_string(*expect.theta), t.value <= *expect.theta);
            if (t.value <= *expect.theta) unsure.push_back("theta");
        }
    }
    if (expect.exponent) {
        MinExp e = minimal_exponent(f, limits);
        r.witness.emplace_back("exponent_method", to_string(e.method));
        if (e.exact) {
            note("exponent", to_string(e.value), to_string(*expect.exponent), e.value == *expect.exponent);
        } else {
            r.witness.emplace_back("exponent", to_string(e.value));
            r.witness.emplace_back("exponent_expected", to_string(*expect.exponent));
            unsure.push_back("exponent");
        }
    }
    if (expect.spectrum) {
        Spectrum want(f.arity());
        for (const auto& v : *expect.spectrum) want.add(v);
        if (find_qh_weights(f)) {
            Spectrum got = spectrum_qh(f, limits);
            note("spectrum", to_string(got), to_string(want), got == want);
        } else {
            r.witness.emplace_back("spectrum_expected", to_string(want));
            unsure.push_back("spectrum");
        }
    }
    if (!failed.empty()) {
        r.verdict = Verdict::fail;
        r.message = "mismatch:";
        for (const auto& k : failed) r.message += " " + k;
    } else if (!unsure.empty()) {
        r.verdict = Verdict::inconclusive;
        r.message = "not exactly computable:";
        for (const auto& k : unsure) r.message += " " + k;
    } else {
        r.message = "all expected values match";
    }
    return r;
}

CheckResult run_check(const CorpusEntry& entry, CheckKind kind, const Sampler& sampler, const Limits& limits) {
    const Sampler s = sampler.fork(fnv1a64(to_string(kind)));
    const std::vector<Rational> samples = entry.params.samples ? *entry.params.samples : default_samples();
    try {
        switch (kind) {
            case CheckKind::teissier: {
                std::optional<Hyperplane> h;
                if (entry.params.hyperplane) h = Hyperplane(*entry.params.hyperplane);
                return check_teissier(entry.poly, h, s, limits);
            }
            case CheckKind::corollary_chain: return check_corollary_chain(entry.poly, s, limits);
            case CheckKind::upper_bound: return check_upper_bound(entry.poly, s, limits);
            case CheckKind::milnor_chain: return check_milnor_chain(entry.poly, s, limits, entry.params.d);
            case CheckKind::lct_relation: return check_lct_relation(entry.poly, entry.params.nondegenerate, limits);
            case CheckKind::spectrum_family:
                return check_spectrum_family(*entry.family, samples, entry.params.exclusions, s, limits);
            case CheckKind::mu_constant:
                return check_mu_constant(*entry.family, samples, entry.params.exclusions, limits);
            case CheckKind::expect: return check_expectations(entry.poly, entry.params.expect, limits);
        }
    } catch (const Error& e) {
        return CheckResult{to_string(kind), Verdict::error, {}, e.what()};
    }
    return CheckResult{to_string(kind), Verdict::error, {}, "unknown check"};
}

}  // namespace hypersing
