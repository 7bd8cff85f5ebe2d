#include "fsmcheck/reduction.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace fsmcheck {

std::vector<StateId> reachable(const Fsm& m) {
    std::vector<char> seen(m.num_states(), 0);
    std::vector<StateId> fifo{m.initial};
    seen[m.initial] = 1;
    for (std::size_t head = 0; head < fifo.size(); ++head) {
        StateId s = fifo[head];
        for (int x = 0; x < m.num_inputs(); ++x) {
            if (!m.defined(s, x)) continue;
            StateId t = m.next(s, x);
            if (!seen[t]) {
                seen[t] = 1;
                fifo.push_back(t);
            }
        }
    }
    std::vector<StateId> out;
    for (StateId s = 0; s < m.num_states(); ++s)
        if (seen[s]) out.push_back(s);
    return out;
}

bool fully_reachable(const Fsm& m) {
    const int n = m.num_states();
    if (n > 64) return static_cast<int>(reachable(m).size()) == n;
    std::uint64_t seen = 1ull << m.initial;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (int s = 0; s < n; ++s) {
            if (!(frontier >> s & 1)) continue;
            for (int x = 0; x < m.num_inputs(); ++x)
                if (m.defined(s, x)) next |= 1ull << m.next(s, x);
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n == 64 ? ~0ull : (1ull << n) - 1);
}

Verdict is_reduced(const Fsm& m) {
    if (!fully_reachable(m)) return Verdict{false, std::nullopt, std::nullopt};
    for (StateId a = 0; a < m.num_states(); ++a) {
        for (StateId b = a + 1; b < m.num_states(); ++b) {
            if (equiv_total(m, a, m, b).holds) return Verdict{false, std::nullopt, std::nullopt};
        }
    }
    return Verdict::yes();
}

Verdict is_p_reduced(const Fsm& m) {
    if (!fully_reachable(m)) return Verdict{false, std::nullopt, std::nullopt};
    for (StateId a = 0; a < m.num_states(); ++a) {
        for (StateId b = a + 1; b < m.num_states(); ++b) {
            if (alike_total(m, a, m, b).holds) return Verdict{false, std::nullopt, std::nullopt};
        }
    }
    return Verdict::yes();
}

Fsm p_reduce(const Fsm& m) {
    std::vector<StateId> reach = reachable(m);

    // group reachable states into alikeness classes (union-find on pairs)
    std::vector<int> root(m.num_states());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&root](int a) {
        while (root[a] != a) a = root[a] = root[root[a]];
        return a;
    };
    for (std::size_t i = 0; i < reach.size(); ++i) {
        for (std::size_t k = i + 1; k < reach.size(); ++k) {
            const int ra = find(reach[i]);
            const int rb = find(reach[k]);
            if (ra == rb) continue;
            if (alike_total(m, reach[i], m, reach[k]).holds) root[std::max(ra, rb)] = std::min(ra, rb);
        }
    }

    // classes ordered by representative = least member in declaration order
    std::vector<int> class_of(m.num_states(), -1);
    std::vector<StateId> reps;
    for (StateId s : reach) {
        int r = find(s);
        if (class_of[r] < 0) {
            class_of[r] = static_cast<int>(reps.size());
            reps.push_back(s);  // reach is in declaration order, so first hit is least
        }
        class_of[s] = class_of[r];
    }

    std::vector<std::string> names;
    names.reserve(reps.size());
    for (StateId r : reps) names.push_back("[" + m.states[r] + "]");

    Fsm q(m.name, names, m.inputs, m.outputs, class_of[m.initial]);
    for (std::size_t c = 0; c < reps.size(); ++c) {
        StateId rep = reps[c];
        for (int x = 0; x < m.num_inputs(); ++x) {
            if (!m.defined(rep, x)) continue;
            q.set_transition(static_cast<StateId>(c), x, m.output_of(rep, x),
                             class_of[m.next(rep, x)]);
        }
    }
    return q;
}

}  // namespace fsmcheck
