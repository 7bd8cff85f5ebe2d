#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsmcheck/fsm.hpp"

// Simulation relations between machines: a pair set closed under the
// transfer condition "whenever the first moves, the second matches the move
// with the same input and output". Bi-similarity asks for simulations both
// ways; isomorphism for a full structural bijection.

namespace fsmcheck {

// A set of (state-of-first, state-of-second) pairs. Serializes as lines
// `pair <stateA> <stateB>`.
struct StatePairRelation {
    std::vector<std::pair<StateId, StateId>> pairs;

    bool contains(StateId a, StateId b) const;
    std::string to_lines(const Fsm& first, const Fsm& second) const;
};

// Largest transfer-closed relation, computed by pruning violating pairs from
// the full product. Present iff the initial pair survives, i.e. iff the
// second machine simulates the first.
std::optional<StatePairRelation> greatest_simulation(const Fsm& m, const Fsm& n);

// Simulations exist in both directions.
bool bisimilar(const Fsm& m, const Fsm& n);

// Structural equality up to state renaming. Both machines must be fully
// reachable and have equal output alphabets (as sets); violations raise
// PreconditionError. Determinism forces the only candidate map, built by
// synchronized traversal from the initial pair.
std::optional<StatePairRelation> isomorphic(const Fsm& m, const Fsm& n);

}  // namespace fsmcheck
