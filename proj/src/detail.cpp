#include "detail.hpp"

#include <algorithm>

namespace fsmcheck::detail {

Joint make_joint(const Fsm& first, const Fsm& second) {
    Joint j;
    j.symbols = first.inputs;
    for (const auto& sym : second.inputs) {
        if (std::find(j.symbols.begin(), j.symbols.end(), sym) == j.symbols.end())
            j.symbols.push_back(sym);
    }
    j.in_first.resize(j.symbols.size());
    j.in_second.resize(j.symbols.size());
    for (std::size_t k = 0; k < j.symbols.size(); ++k) {
        j.in_first[k] = first.input_index(j.symbols[k]).value_or(-1);
        j.in_second[k] = second.input_index(j.symbols[k]).value_or(-1);
    }
    j.out_second_to_first.resize(second.outputs.size());
    for (int o = 0; o < second.num_outputs(); ++o)
        j.out_second_to_first[o] = first.output_index(second.outputs[o]).value_or(-1);
    return j;
}

std::vector<int> word_to_joint(const Word& w, const Joint& j) {
    std::vector<int> out;
    out.reserve(w.size());
    for (const auto& sym : w.symbols) {
        auto it = std::find(j.symbols.begin(), j.symbols.end(), sym);
        if (it == j.symbols.end())
            throw ValidationError("word symbol outside both input alphabets: " + sym);
        out.push_back(static_cast<int>(it - j.symbols.begin()));
    }
    return out;
}

namespace {
std::vector<int> reconstruct(const ProductScratch& sc, int pair, int last_symbol) {
    std::vector<int> word;
    for (int p = pair; sc.parent[p] >= 0; p = sc.parent[p]) word.push_back(sc.via[p]);
    std::reverse(word.begin(), word.end());
    word.push_back(last_symbol);
    return word;
}
}  // namespace

ProductWitness product_search(const Fsm& m, StateId s, const Fsm& n, StateId q, const Joint& j,
                              bool blocking_sensitive, ProductScratch& sc) {
    const int nq = n.num_states();
    sc.reset(static_cast<std::size_t>(m.num_states()) * nq);
    const int start = s * nq + q;
    sc.dist[start] = 0;
    sc.fifo.push_back(start);

    // FIFO over pairs, expanding inputs in joint order, gives each pair its
    // lexicographically least shortest access word; the first violation seen
    // is therefore the (length, lex)-minimal witness.
    for (std::size_t head = 0; head < sc.fifo.size(); ++head) {
        const int pair = sc.fifo[head];
        const StateId a = pair / nq;
        const StateId b = pair % nq;
        for (int k = 0; k < static_cast<int>(j.symbols.size()); ++k) {
            const int xa = j.in_first[k];
            const int xb = j.in_second[k];
            const bool da = xa >= 0 && m.defined(a, xa);
            const bool db = xb >= 0 && n.defined(b, xb);
            if (da && db) {
                if (!out_equal(j, m.output_of(a, xa), n.output_of(b, xb)))
                    return {ProductHit::Mismatch, reconstruct(sc, pair, k)};
                const int succ = m.next(a, xa) * nq + n.next(b, xb);
                if (sc.dist[succ] < 0) {
                    sc.dist[succ] = sc.dist[pair] + 1;
                    sc.parent[succ] = pair;
                    sc.via[succ] = static_cast<std::int16_t>(k);
                    sc.fifo.push_back(succ);
                }
            } else if (blocking_sensitive && da != db) {
                return {da ? ProductHit::OnlyFirst : ProductHit::OnlySecond,
                        reconstruct(sc, pair, k)};
            }
        }
    }
    return {};
}

bool u_contained(const Fsm& m, const Fsm& n, const Joint& j, ProductScratch& sc) {
    const int nq = n.num_states();
    sc.reset(static_cast<std::size_t>(m.num_states()) * nq);
    const int start = m.initial * nq + n.initial;
    sc.dist[start] = 0;
    sc.fifo.push_back(start);
    for (std::size_t head = 0; head < sc.fifo.size(); ++head) {
        const int pair = sc.fifo[head];
        const StateId a = pair / nq;
        const StateId b = pair % nq;
        for (int k = 0; k < static_cast<int>(j.symbols.size()); ++k) {
            const int xa = j.in_first[k];
            if (xa < 0 || !m.defined(a, xa)) continue;
            const int xb = j.in_second[k];
            if (xb < 0 || !n.defined(b, xb)) return false;
            const int succ = m.next(a, xa) * nq + n.next(b, xb);
            if (sc.dist[succ] < 0) {
                sc.dist[succ] = 0;
                sc.fifo.push_back(succ);
            }
        }
    }
    return true;
}

IndexRun run_joint(const Fsm& m, StateId s, std::span<const int> word,
                   std::span<const int> to_local) {
    StateId cur = s;
    for (std::size_t i = 0; i < word.size(); ++i) {
        const int x = to_local[word[i]];
        if (x < 0 || !m.defined(cur, x)) return {false, cur, i};
        cur = m.next(cur, x);
    }
    return {true, cur, word.size()};
}

std::vector<SuiteWordPlan> plan_suite(const Fsm& spec, const TestSuite& t, const Joint& j) {
    std::vector<SuiteWordPlan> plan;
    plan.reserve(t.words.size());
    for (const auto& w : t.words) {
        SuiteWordPlan p;
        p.joint = word_to_joint(w, j);
        StateId cur = spec.initial;
        p.spec_completes = true;
        p.spec_prefix = p.joint.size();
        for (std::size_t i = 0; i < p.joint.size(); ++i) {
            const int x = j.in_first[p.joint[i]];
            if (x < 0 || !spec.defined(cur, x)) {
                p.spec_completes = false;
                p.spec_prefix = i;
                break;
            }
            p.spec_outs.push_back(spec.output_of(cur, x));
            cur = spec.next(cur, x);
        }
        plan.push_back(std::move(p));
    }
    return plan;
}

namespace {
// Walks one planned word through the candidate in full. `mismatch` records a
// spec/candidate output difference along the walked prefix; it only matters
// when both machines complete the word.
struct CandWalk {
    bool completes;
    bool mismatch;
};
CandWalk walk(const Fsm& cand, const Joint& j, const SuiteWordPlan& p) {
    StateId cur = cand.initial;
    bool mismatch = false;
    for (std::size_t i = 0; i < p.joint.size(); ++i) {
        const int x = j.in_second[p.joint[i]];
        if (x < 0 || !cand.defined(cur, x)) return {false, mismatch};
        if (i < p.spec_outs.size() && !out_equal(j, p.spec_outs[i], cand.output_of(cur, x)))
            mismatch = true;
        cur = cand.next(cur, x);
    }
    return {true, mismatch};
}
}  // namespace

bool suite_equiv_holds(const Fsm& cand, const Joint& j, std::span<const SuiteWordPlan> plan) {
    for (const auto& p : plan) {
        if (!p.spec_completes) continue;  // only words defined in both are compared
        CandWalk cw = walk(cand, j, p);
        if (cw.completes && cw.mismatch) return false;
    }
    return true;
}

bool suite_alike_holds(const Fsm& cand, const Joint& j, std::span<const SuiteWordPlan> plan) {
    for (const auto& p : plan) {
        CandWalk cw = walk(cand, j, p);
        if (p.spec_completes != cw.completes) return false;
        if (p.spec_completes && cw.completes && cw.mismatch) return false;
    }
    return true;
}

bool greatest_simulation_exists(const Fsm& m, const Fsm& n, std::vector<std::uint8_t>& rel) {
    const int ns = m.num_states();
    const int nq = n.num_states();
    rel.assign(static_cast<std::size_t>(ns) * nq, 1);

    // second-machine input index per first-machine input symbol
    int map_buf[64];
    std::vector<int> map_vec;
    int* to_second = map_buf;
    if (m.num_inputs() > 64) {
        map_vec.resize(m.num_inputs());
        to_second = map_vec.data();
    }
    for (int x = 0; x < m.num_inputs(); ++x)
        to_second[x] = n.input_index(m.inputs[x]).value_or(-1);

    Joint j;  // only output identification needed here
    j.out_second_to_first.resize(n.outputs.size());
    for (int o = 0; o < n.num_outputs(); ++o)
        j.out_second_to_first[o] = m.output_index(n.outputs[o]).value_or(-1);

    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s < ns; ++s) {
            for (int q = 0; q < nq; ++q) {
                if (!rel[s * nq + q]) continue;
                bool ok = true;
                for (int x = 0; x < m.num_inputs() && ok; ++x) {
                    if (!m.defined(s, x)) continue;
                    const int xq = to_second[x];
                    if (xq < 0 || !n.defined(q, xq) ||
                        !out_equal(j, m.output_of(s, x), n.output_of(q, xq)) ||
                        !rel[m.next(s, x) * nq + n.next(q, xq)]) {
                        ok = false;
                    }
                }
                if (!ok) {
                    rel[s * nq + q] = 0;
                    changed = true;
                    if (s == m.initial && q == n.initial) return false;
                }
            }
        }
    }
    return rel[m.initial * nq + n.initial] != 0;
}

bool joint_word_less(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace fsmcheck::detail
