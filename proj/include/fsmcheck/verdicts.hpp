#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fsmcheck/fsm.hpp"

// Bounded-exhaustive verdicts: a test suite is checked against every
// candidate implementation with up to a given number of states, enumerated
// once per isomorphism class. A truncated search never claims "holds".

namespace fsmcheck {

struct SearchConfig {
    int max_states = 1;                     // candidate state bound, >= 1
    std::vector<std::string> inputs;        // empty: use the spec's
    std::vector<std::string> outputs;       // empty: use the spec's
    std::optional<std::uint64_t> candidate_cap;
    // Restrict candidates to those that can run every word the spec runs.
    // Unset: on for the completeness check, off for the perfectness check.
    std::optional<bool> require_containment;
};

enum class EnumerationOutcome {
    Exhausted,  // every candidate visited
    Stopped,    // visitor asked to stop
    Truncated,  // candidate cap hit with candidates left
};

// Calls `visit` for every partial deterministic machine with at most
// cfg.max_states states over the configured alphabets, each isomorphism
// class exactly once: states are numbered in breadth-first discovery order
// from the initial state and every state is reachable. The Fsm reference is
// a reused buffer; copy it to keep a candidate. Returning false stops the
// enumeration.
EnumerationOutcome enumerate_candidates(const SearchConfig& cfg,
                                        const std::function<bool(const Fsm&)>& visit);

// Materializes the stream (mind the cap for larger bounds).
std::vector<Fsm> all_candidates(const SearchConfig& cfg);

struct SearchVerdict {
    enum class Outcome { Holds, Fails, Inconclusive } outcome;
    std::optional<Fsm> counterexample;
    std::uint64_t examined = 0;

    bool holds() const { return outcome == Outcome::Holds; }
    bool fails() const { return outcome == Outcome::Fails; }
};

// Does the suite expose every candidate (within the state bound, and with
// the containment side condition) that the spec tells apart on commonly
// defined words? Fails with the first candidate, in enumeration order, that
// is suite-equivalent to the spec yet not equivalent to it.
SearchVerdict check_m_complete(const Fsm& spec, const TestSuite& t, const SearchConfig& cfg);

// Blocking-aware analogue: fails with the first candidate that is
// suite-alike to the spec yet not alike to it.
SearchVerdict check_m_perfect(const Fsm& spec, const TestSuite& t, const SearchConfig& cfg);

// For every suite-alike candidate, compares "not alike to the spec" with
// "not bi-similar to the spec"; the two must agree. Disagreeing candidates
// (expected: none) are reported, a few kept verbatim.
struct CrossValidationReport {
    std::uint64_t candidates = 0;
    std::uint64_t suite_alike = 0;
    std::uint64_t disagreements = 0;
    std::vector<Fsm> samples;  // first few disagreeing candidates
    bool truncated = false;
};
CrossValidationReport cross_validate_perfectness(const Fsm& spec, const TestSuite& t,
                                                 const SearchConfig& cfg);

// (|sigma| + 1) * |reachable states|, sigma the shortest non-extensible
// suite word; the size at which completeness_counterexample refutes the
// suite. Propagates the construction's sigma errors.
std::size_t completeness_bound(const Fsm& spec, const TestSuite& t);

}  // namespace fsmcheck
