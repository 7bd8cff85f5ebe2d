#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Core model: deterministic Mealy machines with a partial transition map.
// A machine may leave (state, input) pairs undefined; feeding a word that
// reaches an undefined pair "blocks" instead of completing. All algorithms
// in this library are built on top of that blocking-aware run semantics.

namespace fsmcheck {

using StateId = int;

struct FsmError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments: unknown state/symbol, malformed configuration.
struct ValidationError : FsmError {
    using FsmError::FsmError;
};

// Text-format problems; message carries a line number where possible.
struct FormatError : FsmError {
    using FsmError::FsmError;
};

// An operation refused to run because its input machine/suite does not
// satisfy a documented requirement.
struct PreconditionError : FsmError {
    enum class Kind {
        NotReduced,
        OutputAlphabetTooSmall,
        NoUsableSigma,
        SigmaInSuite,
        SigmaBlocks,
        SigmaHasSuiteExtension,
        SigmaEmbeddedInSuite,
        UnreachableStates,
        OutputAlphabetMismatch,
    };
    PreconditionError(Kind k, const std::string& msg) : FsmError(msg), kind(k) {}
    Kind kind;
};

// A finite input word. Symbols are opaque tokens; the empty word is written
// `eps` in text form.
struct Word {
    std::vector<std::string> symbols;

    Word() = default;
    explicit Word(std::vector<std::string> syms) : symbols(std::move(syms)) {}

    std::size_t size() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }
    bool operator==(const Word&) const = default;

    Word prefix(std::size_t len) const {
        return Word(std::vector<std::string>(symbols.begin(), symbols.begin() + len));
    }
};

// A finite, nonempty set of words. Stored deduplicated in first-seen order;
// orderings that matter (shortest/lexicographic selections) are applied by
// the operations that need them, against an explicit symbol ranking.
struct TestSuite {
    std::vector<Word> words;

    static TestSuite of(std::vector<Word> ws);
    bool contains(const Word& w) const;
};

struct Transition {
    StateId src;
    int input;
    int output;
    StateId dst;
};

class Fsm {
public:
    struct Cell {
        std::int16_t target = -1;  // -1: (state, input) undefined
        std::int16_t output = -1;
    };

    std::string name;
    std::vector<std::string> states;   // declaration order; used for all tie-breaking
    std::vector<std::string> inputs;   // declaration order
    std::vector<std::string> outputs;  // declaration order
    StateId initial = 0;

    Fsm() = default;
    Fsm(std::string name, std::vector<std::string> states, std::vector<std::string> inputs,
        std::vector<std::string> outputs, StateId initial);

    int num_states() const { return static_cast<int>(states.size()); }
    int num_inputs() const { return static_cast<int>(inputs.size()); }
    int num_outputs() const { return static_cast<int>(outputs.size()); }

    bool defined(StateId s, int x) const { return cell(s, x).target >= 0; }
    StateId next(StateId s, int x) const { return cell(s, x).target; }
    int output_of(StateId s, int x) const { return cell(s, x).output; }

    const Cell& cell(StateId s, int x) const { return table_[s * num_inputs() + x]; }
    void set_transition(StateId s, int x, int out, StateId dst);
    void clear_transition(StateId s, int x);
    void reset_table() { table_.assign(states.size() * inputs.size(), Cell{}); }

    std::vector<Transition> transitions() const;

    // Index lookups; the *_checked forms throw ValidationError on miss.
    std::optional<int> state_index(const std::string& name) const;
    std::optional<int> input_index(const std::string& sym) const;
    std::optional<int> output_index(const std::string& sym) const;
    int state_index_checked(const std::string& name) const;
    int input_index_checked(const std::string& sym) const;

    // Structural invariants: nonempty alphabets, initial in range, all cell
    // indices in range. Throws ValidationError.
    void check_valid() const;

private:
    std::vector<Cell> table_;
};

// Convenience builder for literal machines. Transitions are given as
// (src, input, output, dst) name tuples and declare states on first use
// (initial first).
Fsm make_fsm(const std::string& name, const std::vector<std::string>& inputs,
             const std::vector<std::string>& outputs, const std::string& initial,
             const std::vector<std::array<std::string, 4>>& transitions,
             const std::vector<std::string>& extra_states = {});

// Outcome of feeding a word to a state: either the run completes, yielding a
// target state and an output word of equal length, or it blocks after its
// longest defined prefix.
struct RunResult {
    bool is_completed = false;
    StateId target = -1;          // valid when completed
    Word output;                  // valid when completed
    std::size_t defined_prefix = 0;  // valid when blocked

    static RunResult completed(StateId t, Word out);
    static RunResult blocked(std::size_t prefix_len);
    bool operator==(const RunResult&) const = default;
};

// Feeds `w` to state `s`. Unknown states or symbols raise ValidationError;
// that is distinct from a blocked run, which is a normal result.
RunResult run(const Fsm& m, StateId s, const Word& w);

// Membership of `w` in U(s): true iff the run completes.
bool accepts(const Fsm& m, StateId s, const Word& w);

// Length of the longest prefix of `w` that runs from the initial state.
// Words that complete score their full length.
std::size_t blocking_measure(const Fsm& m, const Word& w);

// Sum of blocking_measure over the suite.
std::size_t suite_measure(const Fsm& m, const TestSuite& t);

// ---- text formats --------------------------------------------------------
//
// Machine files are line oriented, `#` starts a comment:
//
//   fsm <name>
//   inputs <sym>...
//   outputs <sym>...
//   initial <state>
//   trans <src> <in>/<out> <dst>
//
// States are declared by first occurrence (initial line, then trans lines,
// source before destination). Duplicate (src, in) lines are an error.
//
// Suite files hold one word per line: symbols are concatenated when every
// alphabet symbol is a single character, whitespace-separated otherwise;
// `eps` denotes the empty word.

Fsm parse_fsm(const std::string& text);
std::string fsm_to_text(const Fsm& m, const std::string& provenance = "");

Word parse_word(const std::string& text, std::span<const std::string> alphabet);
TestSuite parse_suite(const std::string& text, std::span<const std::string> alphabet);
std::string format_word(const Word& w);
std::string suite_to_text(const TestSuite& t);

}  // namespace fsmcheck
