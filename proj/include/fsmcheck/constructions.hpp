#pragma once

#include <cstddef>
#include <vector>

#include "fsmcheck/fsm.hpp"

// Counterexample generators: machines that agree with a specification on a
// given test suite yet differ from it in full behavior. One refutes bounded
// completeness (output equivalence), the other refutes perfectness (the
// blocking-aware relation). Plus the word predicates they are built on.

namespace fsmcheck {

// Subsequence occurrence: haystack can be split as b0 x0 b1 x1 ... bk xk bk+1
// where x0..xk spell the needle.
bool is_embedded(const Word& needle, const Word& haystack);

// w can be obtained from some suite member by deleting one contiguous
// nonempty block, i.e. w = s1 s2 and s1 g s2 is in the suite, g nonempty.
bool is_extensible(const Word& w, const TestSuite& t);

// Minimal-length suite member that is not extensible in the suite; ties
// broken lexicographically. The overload taking a machine ranks symbols by
// its input declaration order; the other uses plain string order.
Word shortest_non_extensible(const TestSuite& t);
Word shortest_non_extensible(const TestSuite& t, const Fsm& symbol_order);

// Builds a machine with (|sigma|+1) * |S| states (sigma = shortest
// non-extensible suite member) that runs exactly the same input words as the
// reduced spec, matches it on every suite word, and still differs from it on
// sigma followed by one more input. Level l of the state grid advances to
// l+1 exactly when the l-th transition of sigma's path fires, and the single
// "marked" transition after sigma's endpoint has its output flipped at the
// top level. `prune` drops unreachable states.
//
// Preconditions (PreconditionError): spec reduced with at least two states;
// at least two output symbols; sigma nonempty and runnable; no runnable
// suite word longer than sigma embeds sigma.
Fsm completeness_counterexample(const Fsm& m, const TestSuite& t, bool prune = false);

// Tree-shaped machine that is suite-alike to the spec but behaves
// differently on `sigma`: sigma's path is copied with its final output
// flipped, then runnable suite words are grafted on, one transition at a
// time, copying the spec's behavior, until every runnable suite word runs in
// the tree. The trace records the tree's suite measure after each stage;
// it grows strictly, which is what bounds the construction.
struct TreeCounterexample {
    Fsm machine;
    std::vector<std::size_t> measure_trace;  // suite measure of N_0, N_1, ...
};

// Preconditions (PreconditionError / ValidationError): sigma nonempty, over
// the spec's inputs, runnable, not in the suite, and no runnable suite word
// has sigma as a proper prefix; at least two output symbols.
TreeCounterexample perfectness_counterexample(const Fsm& m, const TestSuite& t, const Word& sigma);

}  // namespace fsmcheck
