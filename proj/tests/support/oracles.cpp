#include "support/oracles.hpp"

#include <algorithm>

namespace fsmcheck::testing {

namespace {

struct JointView {
    std::vector<std::string> symbols;
    std::vector<int> in_a, in_b;
};

JointView joint_view(const Fsm& a, const Fsm& b) {
    JointView j;
    j.symbols = a.inputs;
    for (const auto& s : b.inputs)
        if (std::find(j.symbols.begin(), j.symbols.end(), s) == j.symbols.end())
            j.symbols.push_back(s);
    for (const auto& s : j.symbols) {
        j.in_a.push_back(a.input_index(s).value_or(-1));
        j.in_b.push_back(b.input_index(s).value_or(-1));
    }
    return j;
}

Word to_word(const std::vector<int>& idx, const JointView& j) {
    Word w;
    for (int k : idx) w.symbols.push_back(j.symbols[k]);
    return w;
}

struct Searcher {
    const Fsm& a;
    const Fsm& b;
    const JointView& j;
    bool blocking_sensitive;
    std::vector<int> word;
    OracleVerdict found;

    // extends a clean co-defined prefix by one symbol; true once a witness
    // is fixed in `found`
    bool extend(StateId sa, StateId sb, std::size_t depth) {
        if (depth == 0) return false;
        for (std::size_t k = 0; k < j.symbols.size(); ++k) {
            const int xa = j.in_a[k];
            const int xb = j.in_b[k];
            const bool da = xa >= 0 && a.defined(sa, xa);
            const bool db = xb >= 0 && b.defined(sb, xb);
            word.push_back(static_cast<int>(k));
            if (da && db) {
                const bool same =
                    a.outputs[a.output_of(sa, xa)] == b.outputs[b.output_of(sb, xb)];
                if (!same) {
                    found = {false, to_word(word, j), WitnessKind::OutputMismatch};
                    return true;
                }
                if (extend(a.next(sa, xa), b.next(sb, xb), depth - 1)) return true;
            } else if (blocking_sensitive && da != db) {
                found = {false, to_word(word, j),
                         da ? WitnessKind::BlockingAsymmetryFirst
                            : WitnessKind::BlockingAsymmetrySecond};
                return true;
            }
            word.pop_back();
        }
        return false;
    }
};

OracleVerdict search(const Fsm& a, StateId s, const Fsm& b, StateId q, std::size_t max_len,
                     bool blocking_sensitive) {
    JointView j = joint_view(a, b);
    // iterative deepening keeps the (length, lex) discovery order: once the
    // previous depth found nothing, the first hit at this depth is minimal
    for (std::size_t len = 1; len <= max_len; ++len) {
        Searcher sr{a, b, j, blocking_sensitive, {}, {}};
        if (sr.extend(s, q, len)) return sr.found;
    }
    return {};
}

}  // namespace

OracleVerdict oracle_equiv(const Fsm& a, StateId s, const Fsm& b, StateId q,
                           std::size_t max_len) {
    return search(a, s, b, q, max_len, false);
}

OracleVerdict oracle_alike(const Fsm& a, StateId s, const Fsm& b, StateId q,
                           std::size_t max_len) {
    return search(a, s, b, q, max_len, true);
}

namespace {

OracleVerdict naive(const Fsm& a, StateId s, const Fsm& b, StateId q, std::size_t max_len,
                    bool blocking_sensitive) {
    JointView j = joint_view(a, b);
    const std::size_t base = j.symbols.size();
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<int> idx(len, 0);
        for (;;) {
            Word w = to_word(idx, j);
            RunResult ra = [&] {
                try {
                    return run(a, s, w);
                } catch (const ValidationError&) {
                    return RunResult::blocked(0);  // symbol foreign to a
                }
            }();
            RunResult rb = [&] {
                try {
                    return run(b, q, w);
                } catch (const ValidationError&) {
                    return RunResult::blocked(0);
                }
            }();
            if (ra.is_completed && rb.is_completed && !(ra.output == rb.output))
                return {false, w, WitnessKind::OutputMismatch};
            if (blocking_sensitive && ra.is_completed != rb.is_completed)
                return {false, w,
                        ra.is_completed ? WitnessKind::BlockingAsymmetryFirst
                                        : WitnessKind::BlockingAsymmetrySecond};
            // odometer increment in lex order
            std::size_t pos = len;
            while (pos > 0) {
                if (idx[pos - 1] + 1 < static_cast<int>(base)) {
                    ++idx[pos - 1];
                    break;
                }
                idx[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    }
    return {};
}

}  // namespace

OracleVerdict oracle_equiv_naive(const Fsm& a, StateId s, const Fsm& b, StateId q,
                                 std::size_t max_len) {
    return naive(a, s, b, q, max_len, false);
}

OracleVerdict oracle_alike_naive(const Fsm& a, StateId s, const Fsm& b, StateId q,
                                 std::size_t max_len) {
    return naive(a, s, b, q, max_len, true);
}

}  // namespace fsmcheck::testing
