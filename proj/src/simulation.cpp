#include "fsmcheck/simulation.hpp"

#include <algorithm>

#include "detail.hpp"
#include "fsmcheck/reduction.hpp"

namespace fsmcheck {

bool StatePairRelation::contains(StateId a, StateId b) const {
    return std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) != pairs.end();
}

std::string StatePairRelation::to_lines(const Fsm& first, const Fsm& second) const {
    std::string out;
    for (const auto& [a, b] : pairs) {
        out += "pair " + first.states[a] + " " + second.states[b] + "\n";
    }
    return out;
}

std::optional<StatePairRelation> greatest_simulation(const Fsm& m, const Fsm& n) {
    std::vector<std::uint8_t> rel;
    if (!detail::greatest_simulation_exists(m, n, rel)) return std::nullopt;
    StatePairRelation r;
    const int nq = n.num_states();
    for (StateId s = 0; s < m.num_states(); ++s)
        for (StateId q = 0; q < nq; ++q)
            if (rel[s * nq + q]) r.pairs.emplace_back(s, q);
    return r;
}

bool bisimilar(const Fsm& m, const Fsm& n) {
    thread_local std::vector<std::uint8_t> rel;
    return detail::greatest_simulation_exists(m, n, rel) &&
           detail::greatest_simulation_exists(n, m, rel);
}

std::optional<StatePairRelation> isomorphic(const Fsm& m, const Fsm& n) {
    for (const Fsm* mm : {&m, &n}) {
        if (fully_reachable(*mm)) continue;
        std::string who;
        std::vector<char> seen(mm->num_states(), 0);
        for (StateId s : reachable(*mm)) seen[s] = 1;
        for (StateId s = 0; s < mm->num_states(); ++s)
            if (!seen[s]) who += (who.empty() ? "" : ", ") + mm->states[s];
        throw PreconditionError(PreconditionError::Kind::UnreachableStates,
                                "machine " + mm->name + " has unreachable states: " + who);
    }
    auto subset = [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        for (const auto& s : a)
            if (std::find(b.begin(), b.end(), s) == b.end()) return false;
        return true;
    };
    if (m.outputs.size() != n.outputs.size() || !subset(m.outputs, n.outputs))
        throw PreconditionError(PreconditionError::Kind::OutputAlphabetMismatch,
                                "output alphabets differ");

    if (m.num_states() != n.num_states()) return std::nullopt;

    // per-symbol index maps from the first machine into the second; an
    // input symbol of n that m lacks can only make defined-sets disagree,
    // which the pair scan below already detects through the reverse map
    thread_local std::vector<int> to_n_in, to_m_in, out_map;
    to_n_in.assign(m.inputs.size(), -1);
    for (int x = 0; x < m.num_inputs(); ++x)
        to_n_in[x] = n.input_index(m.inputs[x]).value_or(-1);
    to_m_in.assign(n.inputs.size(), -1);
    for (int x = 0; x < n.num_inputs(); ++x)
        to_m_in[x] = m.input_index(n.inputs[x]).value_or(-1);
    out_map.assign(n.outputs.size(), -1);
    for (int o = 0; o < n.num_outputs(); ++o)
        out_map[o] = m.output_index(n.outputs[o]).value_or(-1);

    thread_local std::vector<int> fwd, rev, fifo;
    fwd.assign(m.num_states(), -1);
    rev.assign(n.num_states(), -1);
    fifo.clear();
    fwd[m.initial] = n.initial;
    rev[n.initial] = m.initial;
    fifo.push_back(m.initial);

    for (std::size_t head = 0; head < fifo.size(); ++head) {
        const StateId a = fifo[head];
        const StateId b = fwd[a];
        // inputs defined at b but foreign or undefined at a
        for (int xb = 0; xb < n.num_inputs(); ++xb) {
            if (!n.defined(b, xb)) continue;
            const int xa = to_m_in[xb];
            if (xa < 0 || !m.defined(a, xa)) return std::nullopt;
        }
        for (int xa = 0; xa < m.num_inputs(); ++xa) {
            const bool da = m.defined(a, xa);
            const int xb = to_n_in[xa];
            const bool db = xb >= 0 && n.defined(b, xb);
            if (da != db) return std::nullopt;  // defined-input sets must agree
            if (!da) continue;
            if (out_map[n.output_of(b, xb)] != m.output_of(a, xa)) return std::nullopt;
            const StateId ra = m.next(a, xa);
            const StateId rb = n.next(b, xb);
            if (fwd[ra] < 0 && rev[rb] < 0) {
                fwd[ra] = rb;
                rev[rb] = ra;
                fifo.push_back(ra);
            } else if (fwd[ra] != rb || rev[rb] != ra) {
                return std::nullopt;  // map would not be a bijection
            }
        }
    }

    // full reachability of m guarantees totality; equal sizes plus
    // injectivity give surjectivity
    StatePairRelation rel;
    for (StateId a = 0; a < m.num_states(); ++a) rel.pairs.emplace_back(a, fwd[a]);
    return rel;
}

}  // namespace fsmcheck
