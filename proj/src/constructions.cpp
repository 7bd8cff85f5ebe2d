#include "fsmcheck/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "fsmcheck/reduction.hpp"

namespace fsmcheck {

bool is_embedded(const Word& needle, const Word& haystack) {
    std::size_t i = 0;
    for (std::size_t k = 0; k < haystack.size() && i < needle.size(); ++k) {
        if (haystack.symbols[k] == needle.symbols[i]) ++i;
    }
    return i == needle.size();
}

bool is_extensible(const Word& w, const TestSuite& t) {
    for (const Word& tau : t.words) {
        if (tau.size() <= w.size()) continue;
        for (std::size_t i = 0; i <= w.size(); ++i) {
            const bool prefix_ok =
                std::equal(w.symbols.begin(), w.symbols.begin() + i, tau.symbols.begin());
            const bool suffix_ok = std::equal(w.symbols.begin() + i, w.symbols.end(),
                                              tau.symbols.end() - (w.size() - i));
            if (prefix_ok && suffix_ok) return true;
        }
    }
    return false;
}

namespace {

using SymbolLess = std::function<bool(const std::string&, const std::string&)>;

bool word_less(const Word& a, const Word& b, const SymbolLess& sym_less) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.symbols[i] != b.symbols[i]) return sym_less(a.symbols[i], b.symbols[i]);
    }
    return false;
}

Word shortest_non_extensible_by(const TestSuite& t, const SymbolLess& sym_less) {
    const Word* best = nullptr;
    for (const Word& w : t.words) {
        if (is_extensible(w, t)) continue;
        if (!best || word_less(w, *best, sym_less)) best = &w;
    }
    // a longest suite member is never extensible, so a candidate exists
    return *best;
}

}  // namespace

Word shortest_non_extensible(const TestSuite& t) {
    return shortest_non_extensible_by(t, std::less<std::string>());
}

Word shortest_non_extensible(const TestSuite& t, const Fsm& symbol_order) {
    auto less = [&symbol_order](const std::string& a, const std::string& b) {
        auto ra = symbol_order.input_index(a);
        auto rb = symbol_order.input_index(b);
        if (ra && rb) return *ra < *rb;
        if (ra != rb) return ra.has_value();  // known symbols rank before foreign ones
        return a < b;
    };
    return shortest_non_extensible_by(t, less);
}

namespace {
void check_suite_symbols(const Fsm& m, const TestSuite& t) {
    for (const Word& w : t.words)
        for (const auto& sym : w.symbols)
            if (!m.input_index(sym))
                throw ValidationError("suite symbol not in the machine's alphabet: " + sym);
}

int least_other_output(const Fsm& m, int out) {
    for (int o = 0; o < m.num_outputs(); ++o)
        if (o != out) return o;
    throw PreconditionError(PreconditionError::Kind::OutputAlphabetTooSmall,
                            "need at least two output symbols");
}
}  // namespace

Fsm completeness_counterexample(const Fsm& m, const TestSuite& t, bool prune) {
    check_suite_symbols(m, t);
    if (m.num_states() < 2 || !is_reduced(m).holds)
        throw PreconditionError(PreconditionError::Kind::NotReduced,
                                "spec must be reduced with at least two states");
    if (m.num_outputs() < 2)
        throw PreconditionError(PreconditionError::Kind::OutputAlphabetTooSmall,
                                "need at least two output symbols");

    const Word sigma = shortest_non_extensible(t, m);
    if (sigma.empty())
        throw PreconditionError(PreconditionError::Kind::NoUsableSigma,
                                "shortest non-extensible suite word is empty");
    RunResult sig_run = run(m, m.initial, sigma);
    if (!sig_run.is_completed)
        throw PreconditionError(PreconditionError::Kind::NoUsableSigma,
                                "shortest non-extensible suite word blocks in the spec");
    for (const Word& tau : t.words) {
        if (tau.size() > sigma.size() && is_embedded(sigma, tau) &&
            accepts(m, m.initial, tau))
            throw PreconditionError(
                PreconditionError::Kind::SigmaEmbeddedInSuite,
                "runnable suite word '" + format_word(tau) + "' embeds '" + format_word(sigma) +
                    "'; the construction cannot stay suite-equivalent");
    }

    const int top = static_cast<int>(sigma.size());  // levels run 0 .. top
    const int ns = m.num_states();

    // the path of sigma through the spec; path_trans[l] fires at level l
    std::vector<std::pair<StateId, int>> path_trans(sigma.size());
    StateId cur = m.initial;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        const int x = m.input_index_checked(sigma.symbols[i]);
        path_trans[i] = {cur, x};
        cur = m.next(cur, x);
    }
    const StateId sigma_end = cur;

    // marked transition: least defined input after sigma's endpoint; a
    // reduced machine with two or more states always has one
    int marked_input = -1;
    for (int x = 0; x < m.num_inputs(); ++x) {
        if (m.defined(sigma_end, x)) {
            marked_input = x;
            break;
        }
    }
    if (marked_input < 0)
        throw PreconditionError(PreconditionError::Kind::NotReduced,
                                "no transition out of sigma's endpoint");
    const int flipped = least_other_output(m, m.output_of(sigma_end, marked_input));

    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(top + 1) * ns);
    for (int l = 0; l <= top; ++l)
        for (StateId s = 0; s < ns; ++s) names.push_back(m.states[s] + "@" + std::to_string(l));
    auto grid = [ns](StateId s, int l) { return l * ns + s; };

    Fsm n(m.name + "_counterexample", names, m.inputs, m.outputs, grid(m.initial, 0));
    for (int l = 0; l < top; ++l) {
        for (StateId s = 0; s < ns; ++s) {
            for (int x = 0; x < m.num_inputs(); ++x) {
                if (!m.defined(s, x)) continue;
                const bool steps = path_trans[l] == std::make_pair(s, x);
                n.set_transition(grid(s, l), x, m.output_of(s, x),
                                 grid(m.next(s, x), steps ? l + 1 : l));
            }
        }
    }
    for (StateId s = 0; s < ns; ++s) {
        for (int x = 0; x < m.num_inputs(); ++x) {
            if (!m.defined(s, x)) continue;
            const bool marked = s == sigma_end && x == marked_input;
            n.set_transition(grid(s, top), x, marked ? flipped : m.output_of(s, x),
                             grid(m.next(s, x), top));
        }
    }

    if (!prune) return n;

    std::vector<StateId> keep = reachable(n);
    std::vector<int> remap(n.num_states(), -1);
    std::vector<std::string> kept_names;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        remap[keep[i]] = static_cast<int>(i);
        kept_names.push_back(n.states[keep[i]]);
    }
    Fsm pruned(n.name, kept_names, n.inputs, n.outputs, remap[n.initial]);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (int x = 0; x < n.num_inputs(); ++x) {
            if (!n.defined(keep[i], x)) continue;
            pruned.set_transition(static_cast<StateId>(i), x, n.output_of(keep[i], x),
                                  remap[n.next(keep[i], x)]);
        }
    }
    return pruned;
}

namespace {

// Growing tree machine; state 0 is the root.
struct Tree {
    const Fsm& spec;
    std::vector<std::vector<Fsm::Cell>> rows;  // per state, per spec input

    explicit Tree(const Fsm& m) : spec(m) { add_state(); }

    int add_state() {
        rows.emplace_back(spec.num_inputs());
        return static_cast<int>(rows.size()) - 1;
    }

    void link(int src, int x, int out, int dst) {
        rows[src][x].target = static_cast<std::int16_t>(dst);
        rows[src][x].output = static_cast<std::int16_t>(out);
    }

    // longest runnable prefix of the word (as spec input indices)
    std::size_t runnable_prefix(const std::vector<int>& word) const {
        int cur = 0;
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (rows[cur][word[i]].target < 0) return i;
            cur = rows[cur][word[i]].target;
        }
        return word.size();
    }

    std::size_t measure(const std::vector<std::vector<int>>& words) const {
        std::size_t sum = 0;
        for (const auto& w : words) sum += runnable_prefix(w);
        return sum;
    }

    Fsm freeze(const std::string& name) const {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < rows.size(); ++i) names.push_back("t" + std::to_string(i));
        Fsm out(name, names, spec.inputs, spec.outputs, 0);
        for (std::size_t s = 0; s < rows.size(); ++s)
            for (int x = 0; x < spec.num_inputs(); ++x)
                if (rows[s][x].target >= 0)
                    out.set_transition(static_cast<StateId>(s), x, rows[s][x].output,
                                       rows[s][x].target);
        return out;
    }
};

}  // namespace

TreeCounterexample perfectness_counterexample(const Fsm& m, const TestSuite& t,
                                              const Word& sigma) {
    check_suite_symbols(m, t);
    if (sigma.empty()) throw ValidationError("sigma must be a nonempty word");
    std::vector<int> sig(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i)
        sig[i] = m.input_index_checked(sigma.symbols[i]);
    if (m.num_outputs() < 2)
        throw PreconditionError(PreconditionError::Kind::OutputAlphabetTooSmall,
                                "need at least two output symbols");
    if (!accepts(m, m.initial, sigma))
        throw PreconditionError(PreconditionError::Kind::SigmaBlocks,
                                "sigma blocks in the spec");
    if (t.contains(sigma))
        throw PreconditionError(PreconditionError::Kind::SigmaInSuite, "sigma is a suite member");
    for (const Word& tau : t.words) {
        if (tau.size() > sigma.size() && accepts(m, m.initial, tau) &&
            std::equal(sigma.symbols.begin(), sigma.symbols.end(), tau.symbols.begin()))
            throw PreconditionError(
                PreconditionError::Kind::SigmaHasSuiteExtension,
                "runnable suite word '" + format_word(tau) + "' extends sigma");
    }

    // runnable suite words, in (length, lex) order by input declaration order
    std::vector<std::vector<int>> targets;
    for (const Word& w : t.words) {
        if (!accepts(m, m.initial, w)) continue;
        std::vector<int> iw(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) iw[i] = m.input_index_checked(w.symbols[i]);
        targets.push_back(std::move(iw));
    }
    std::sort(targets.begin(), targets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    // stage 0: sigma's path with the last output flipped
    Tree tree(m);
    StateId ms = m.initial;
    int cur = 0;
    for (std::size_t i = 0; i < sig.size(); ++i) {
        const int out = m.output_of(ms, sig[i]);
        const bool last = i + 1 == sig.size();
        const int node = tree.add_state();
        tree.link(cur, sig[i], last ? least_other_output(m, out) : out, node);
        cur = node;
        ms = m.next(ms, sig[i]);
    }

    TreeCounterexample result;
    result.measure_trace.push_back(tree.measure(targets));

    // graft the least missing runnable suite word, one transition per stage
    for (;;) {
        const std::vector<int>* missing = nullptr;
        for (const auto& w : targets) {
            if (tree.runnable_prefix(w) < w.size()) {
                missing = &w;
                break;
            }
        }
        if (!missing) break;

        const std::size_t len = tree.runnable_prefix(*missing);
        int node = 0;
        StateId spec_state = m.initial;
        for (std::size_t i = 0; i < len; ++i) {
            node = tree.rows[node][(*missing)[i]].target;
            spec_state = m.next(spec_state, (*missing)[i]);
        }
        const int x = (*missing)[len];
        const int fresh = tree.add_state();
        tree.link(node, x, m.output_of(spec_state, x), fresh);

        const std::size_t f = tree.measure(targets);
        if (f <= result.measure_trace.back())
            throw std::logic_error("tree growth did not increase the suite measure");
        result.measure_trace.push_back(f);
    }

    result.machine = tree.freeze(m.name + "_tree");
    return result;
}

}  // namespace fsmcheck
