#include "fsmcheck/verdicts.hpp"

#include <algorithm>

#include "detail.hpp"
#include "fsmcheck/constructions.hpp"
#include "fsmcheck/reduction.hpp"
#include "fsmcheck/simulation.hpp"

namespace fsmcheck {

namespace {

void check_config(const SearchConfig& cfg) {
    if (cfg.max_states < 1) throw ValidationError("state bound must be at least 1");
}

std::vector<std::string> numbered_states(int n) {
    std::vector<std::string> v;
    v.reserve(n);
    for (int i = 0; i < n; ++i) v.push_back("q" + std::to_string(i));
    return v;
}

// Recursive cell filler. Cells are scanned row-major (state then input), so
// first-use numbering of targets coincides with breadth-first discovery
// order; a machine is emitted once per isomorphism class.
struct Enumerator {
    Fsm& buf;
    int n;           // states in this round
    int num_inputs;
    int num_outputs;
    std::optional<std::uint64_t> cap;
    const std::function<bool(const Fsm&)>& visit;
    std::uint64_t emitted = 0;

    enum class Walk { Continue, Stop, Truncate };

    Walk fill(int cell, int max_seen) {
        const int total = n * num_inputs;
        if (cell == total) {
            if (max_seen != n - 1) return Walk::Continue;  // some state never used
            if (cap && emitted >= *cap) return Walk::Truncate;
            ++emitted;
            return visit(buf) ? Walk::Continue : Walk::Stop;
        }
        const int row = cell / num_inputs;
        if (row > max_seen) return Walk::Continue;  // row not discovered: dead branch
        // remaining cells must still be able to discover the missing states
        if (max_seen + (total - cell) < n - 1) return Walk::Continue;

        const int x = cell % num_inputs;
        buf.clear_transition(row, x);
        Walk w = fill(cell + 1, max_seen);
        if (w != Walk::Continue) return w;

        const int top = std::min(max_seen + 1, n - 1);
        for (int t = 0; t <= top; ++t) {
            for (int o = 0; o < num_outputs; ++o) {
                buf.set_transition(row, x, o, t);
                w = fill(cell + 1, std::max(max_seen, t));
                if (w != Walk::Continue) return w;
            }
        }
        buf.clear_transition(row, x);
        return Walk::Continue;
    }
};

}  // namespace

EnumerationOutcome enumerate_candidates(const SearchConfig& cfg,
                                        const std::function<bool(const Fsm&)>& visit) {
    check_config(cfg);
    const std::vector<std::string>& ins = cfg.inputs;
    const std::vector<std::string>& outs = cfg.outputs;
    if (ins.empty() || outs.empty())
        throw ValidationError("candidate alphabets must be nonempty");

    std::uint64_t emitted_total = 0;
    for (int n = 1; n <= cfg.max_states; ++n) {
        Fsm buf("candidate", numbered_states(n), ins, outs, 0);
        std::optional<std::uint64_t> remaining;
        if (cfg.candidate_cap) remaining = *cfg.candidate_cap - emitted_total;
        Enumerator e{buf, n, buf.num_inputs(), buf.num_outputs(), remaining, visit};
        Enumerator::Walk w = e.fill(0, 0);
        emitted_total += e.emitted;
        if (w == Enumerator::Walk::Stop) return EnumerationOutcome::Stopped;
        if (w == Enumerator::Walk::Truncate) return EnumerationOutcome::Truncated;
    }
    return EnumerationOutcome::Exhausted;
}

std::vector<Fsm> all_candidates(const SearchConfig& cfg) {
    std::vector<Fsm> out;
    enumerate_candidates(cfg, [&out](const Fsm& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

namespace {

SearchConfig effective(const Fsm& spec, SearchConfig cfg) {
    if (cfg.inputs.empty()) cfg.inputs = spec.inputs;
    if (cfg.outputs.empty()) cfg.outputs = spec.outputs;
    return cfg;
}

// Shared sweep skeleton: planning is done once against an alphabet template,
// then each candidate is screened with allocation-free checks.
struct Sweep {
    const Fsm& spec;
    detail::Joint joint;  // spec vs candidate alphabets
    std::vector<detail::SuiteWordPlan> plan;
    detail::ProductScratch scratch;
    std::vector<std::uint8_t> sim_scratch;

    Sweep(const Fsm& spec_, const TestSuite& t, const SearchConfig& cfg) : spec(spec_) {
        Fsm proto("candidate", {"q0"}, cfg.inputs, cfg.outputs, 0);
        joint = detail::make_joint(spec, proto);
        plan = detail::plan_suite(spec, t, joint);
    }
};

}  // namespace

SearchVerdict check_m_complete(const Fsm& spec, const TestSuite& t, const SearchConfig& cfg_in) {
    SearchConfig cfg = effective(spec, cfg_in);
    check_config(cfg);
    Sweep sweep(spec, t, cfg);
    const bool containment = cfg.require_containment.value_or(true);

    SearchVerdict verdict{SearchVerdict::Outcome::Holds, std::nullopt, 0};
    EnumerationOutcome eo = enumerate_candidates(cfg, [&](const Fsm& cand) {
        ++verdict.examined;
        if (!detail::suite_equiv_holds(cand, sweep.joint, sweep.plan)) return true;
        if (containment && !detail::u_contained(spec, cand, sweep.joint, sweep.scratch))
            return true;
        detail::ProductWitness pw = detail::product_search(
            spec, spec.initial, cand, cand.initial, sweep.joint, false, sweep.scratch);
        if (pw.hit == detail::ProductHit::None) return true;
        verdict.outcome = SearchVerdict::Outcome::Fails;
        verdict.counterexample = cand;
        return false;
    });
    if (eo == EnumerationOutcome::Truncated && !verdict.fails())
        verdict.outcome = SearchVerdict::Outcome::Inconclusive;
    return verdict;
}

SearchVerdict check_m_perfect(const Fsm& spec, const TestSuite& t, const SearchConfig& cfg_in) {
    SearchConfig cfg = effective(spec, cfg_in);
    check_config(cfg);
    Sweep sweep(spec, t, cfg);
    const bool containment = cfg.require_containment.value_or(false);

    SearchVerdict verdict{SearchVerdict::Outcome::Holds, std::nullopt, 0};
    EnumerationOutcome eo = enumerate_candidates(cfg, [&](const Fsm& cand) {
        ++verdict.examined;
        if (!detail::suite_alike_holds(cand, sweep.joint, sweep.plan)) return true;
        if (containment && !detail::u_contained(spec, cand, sweep.joint, sweep.scratch))
            return true;
        detail::ProductWitness pw = detail::product_search(
            spec, spec.initial, cand, cand.initial, sweep.joint, true, sweep.scratch);
        if (pw.hit == detail::ProductHit::None) return true;
        verdict.outcome = SearchVerdict::Outcome::Fails;
        verdict.counterexample = cand;
        return false;
    });
    if (eo == EnumerationOutcome::Truncated && !verdict.fails())
        verdict.outcome = SearchVerdict::Outcome::Inconclusive;
    return verdict;
}

CrossValidationReport cross_validate_perfectness(const Fsm& spec, const TestSuite& t,
                                                 const SearchConfig& cfg_in) {
    SearchConfig cfg = effective(spec, cfg_in);
    check_config(cfg);
    Sweep sweep(spec, t, cfg);

    CrossValidationReport report;
    EnumerationOutcome eo = enumerate_candidates(cfg, [&](const Fsm& cand) {
        ++report.candidates;
        if (!detail::suite_alike_holds(cand, sweep.joint, sweep.plan)) return true;
        ++report.suite_alike;
        detail::ProductWitness pw = detail::product_search(
            spec, spec.initial, cand, cand.initial, sweep.joint, true, sweep.scratch);
        const bool unlike = pw.hit != detail::ProductHit::None;
        const bool bisim = detail::greatest_simulation_exists(spec, cand, sweep.sim_scratch) &&
                           detail::greatest_simulation_exists(cand, spec, sweep.sim_scratch);
        if (unlike == bisim) {
            ++report.disagreements;
            if (report.samples.size() < 8) report.samples.push_back(cand);
        }
        return true;
    });
    report.truncated = eo == EnumerationOutcome::Truncated;
    return report;
}

std::size_t completeness_bound(const Fsm& spec, const TestSuite& t) {
    Word sigma = shortest_non_extensible(t, spec);
    if (sigma.empty())
        throw PreconditionError(PreconditionError::Kind::NoUsableSigma,
                                "shortest non-extensible suite word is empty");
    if (!accepts(spec, spec.initial, sigma))
        throw PreconditionError(PreconditionError::Kind::NoUsableSigma,
                                "shortest non-extensible suite word blocks in the spec");
    return (sigma.size() + 1) * reachable(spec).size();
}

}  // namespace fsmcheck
