#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsmcheck/fsm.hpp"

// Behavioral comparison of machine states, bounded by a test suite or over
// all input words. Two flavors throughout:
//
//  * output equivalence — equal outputs on every word both states can run;
//    blocked words are silently skipped.
//  * alikeness          — output equivalence plus agreement of the blocking
//    structure: no word in scope may run in one state and block in the other.
//
// Failed checks carry the shortest witness, ties broken lexicographically
// (first machine's input declaration order, then the second's extras).

namespace fsmcheck {

enum class WitnessKind {
    OutputMismatch,
    BlockingAsymmetryFirst,   // witness runs in the first machine only
    BlockingAsymmetrySecond,  // witness runs in the second machine only
};

std::string witness_kind_name(WitnessKind k);

struct Verdict {
    bool holds = true;
    std::optional<Word> witness;
    std::optional<WitnessKind> kind;

    static Verdict yes() { return {}; }
    static Verdict no(Word w, WitnessKind k) { return {false, std::move(w), k}; }

    // Line protocol: `HOLDS` or `FAILS <kind> <witness-word>`.
    std::string to_line() const;
};

// Output equivalence of (m, s) and (n, q) restricted to suite words.
Verdict equiv_under_suite(const Fsm& m, StateId s, const Fsm& n, StateId q, const TestSuite& t);

// Alikeness of (m, s) and (n, q) restricted to suite words.
Verdict alike_under_suite(const Fsm& m, StateId s, const Fsm& n, StateId q, const TestSuite& t);

// Output equivalence over all words, decided by product traversal of the
// commonly defined inputs.
Verdict equiv_total(const Fsm& m, StateId s, const Fsm& n, StateId q);

// Alikeness over all words: equal defined-word sets and equal outputs.
Verdict alike_total(const Fsm& m, StateId s, const Fsm& n, StateId q);

// Machine-level conveniences comparing the initial states.
Verdict equiv_total(const Fsm& m, const Fsm& n);
Verdict alike_total(const Fsm& m, const Fsm& n);
Verdict equiv_under_suite(const Fsm& m, const Fsm& n, const TestSuite& t);
Verdict alike_under_suite(const Fsm& m, const Fsm& n, const TestSuite& t);

// Partition of m's states into alikeness classes. Blocks are ordered by
// their least member (declaration order), as are members within a block.
std::vector<std::vector<StateId>> alikeness_partition(const Fsm& m);

}  // namespace fsmcheck
