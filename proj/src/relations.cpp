#include "fsmcheck/relations.hpp"

#include <algorithm>
#include <numeric>

#include "detail.hpp"

namespace fsmcheck {

using detail::Joint;
using detail::ProductHit;

std::string witness_kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::OutputMismatch: return "OutputMismatch";
        case WitnessKind::BlockingAsymmetryFirst: return "BlockingAsymmetry(first)";
        case WitnessKind::BlockingAsymmetrySecond: return "BlockingAsymmetry(second)";
    }
    return "?";
}

std::string Verdict::to_line() const {
    if (holds) return "HOLDS";
    std::string line = "FAILS";
    if (kind) line += " " + witness_kind_name(*kind);
    if (witness) line += " " + format_word(*witness);
    return line;
}

namespace {

void check_state(const Fsm& m, StateId s) {
    if (s < 0 || s >= m.num_states()) throw ValidationError("state index out of range");
}

Word joint_to_word(const std::vector<int>& word, const Joint& j) {
    Word w;
    w.symbols.reserve(word.size());
    for (int k : word) w.symbols.push_back(j.symbols[k]);
    return w;
}

WitnessKind hit_kind(ProductHit h) {
    switch (h) {
        case ProductHit::OnlyFirst: return WitnessKind::BlockingAsymmetryFirst;
        case ProductHit::OnlySecond: return WitnessKind::BlockingAsymmetrySecond;
        default: return WitnessKind::OutputMismatch;
    }
}

// Classification of one suite word against a state pair.
struct SuiteViolation {
    std::vector<int> word;
    WitnessKind kind;
};

// Scans the suite and keeps the (length, lex)-least violating word.
// `blocking_sensitive` selects the alikeness reading.
Verdict suite_check(const Fsm& m, StateId s, const Fsm& n, StateId q, const TestSuite& t,
                    bool blocking_sensitive) {
    check_state(m, s);
    check_state(n, q);
    Joint j = detail::make_joint(m, n);
    std::optional<SuiteViolation> best;

    for (const auto& w : t.words) {
        std::vector<int> word = detail::word_to_joint(w, j);
        detail::IndexRun ra = detail::run_joint(m, s, word, j.in_first);
        detail::IndexRun rb = detail::run_joint(n, q, word, j.in_second);

        std::optional<WitnessKind> kind;
        if (ra.completed && rb.completed) {
            StateId a = s, b = q;
            for (int k : word) {
                const int xa = j.in_first[k];
                const int xb = j.in_second[k];
                if (!detail::out_equal(j, m.output_of(a, xa), n.output_of(b, xb))) {
                    kind = WitnessKind::OutputMismatch;
                    break;
                }
                a = m.next(a, xa);
                b = n.next(b, xb);
            }
        } else if (blocking_sensitive && ra.completed != rb.completed) {
            kind = ra.completed ? WitnessKind::BlockingAsymmetryFirst
                                : WitnessKind::BlockingAsymmetrySecond;
        }
        if (kind && (!best || detail::joint_word_less(word, best->word)))
            best = SuiteViolation{std::move(word), *kind};
    }
    if (!best) return Verdict::yes();
    return Verdict::no(joint_to_word(best->word, j), best->kind);
}

Verdict total_check(const Fsm& m, StateId s, const Fsm& n, StateId q, bool blocking_sensitive) {
    check_state(m, s);
    check_state(n, q);
    Joint j = detail::make_joint(m, n);
    detail::ProductScratch sc;
    detail::ProductWitness pw = detail::product_search(m, s, n, q, j, blocking_sensitive, sc);
    if (pw.hit == ProductHit::None) return Verdict::yes();
    return Verdict::no(joint_to_word(pw.word, j), hit_kind(pw.hit));
}

}  // namespace

Verdict equiv_under_suite(const Fsm& m, StateId s, const Fsm& n, StateId q, const TestSuite& t) {
    return suite_check(m, s, n, q, t, false);
}

Verdict alike_under_suite(const Fsm& m, StateId s, const Fsm& n, StateId q, const TestSuite& t) {
    return suite_check(m, s, n, q, t, true);
}

Verdict equiv_total(const Fsm& m, StateId s, const Fsm& n, StateId q) {
    return total_check(m, s, n, q, false);
}

Verdict alike_total(const Fsm& m, StateId s, const Fsm& n, StateId q) {
    return total_check(m, s, n, q, true);
}

Verdict equiv_total(const Fsm& m, const Fsm& n) { return equiv_total(m, m.initial, n, n.initial); }
Verdict alike_total(const Fsm& m, const Fsm& n) { return alike_total(m, m.initial, n, n.initial); }
Verdict equiv_under_suite(const Fsm& m, const Fsm& n, const TestSuite& t) {
    return equiv_under_suite(m, m.initial, n, n.initial, t);
}
Verdict alike_under_suite(const Fsm& m, const Fsm& n, const TestSuite& t) {
    return alike_under_suite(m, m.initial, n, n.initial, t);
}

std::vector<std::vector<StateId>> alikeness_partition(const Fsm& m) {
    const int n = m.num_states();
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&root](int a) {
        while (root[a] != a) a = root[a] = root[root[a]];
        return a;
    };

    // pairwise union-find; alikeness within one machine is an equivalence
    // relation, so joining every related pair is enough
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const int ra = find(a);
            const int rb = find(b);
            if (ra == rb) continue;
            if (alike_total(m, a, m, b).holds) root[std::max(ra, rb)] = std::min(ra, rb);
        }
    }
    std::vector<std::vector<StateId>> blocks;
    std::vector<int> block_of(n, -1);
    for (int a = 0; a < n; ++a) {
        int r = find(a);
        if (block_of[r] < 0) {
            block_of[r] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[block_of[r]].push_back(a);
    }
    return blocks;
}

}  // namespace fsmcheck
