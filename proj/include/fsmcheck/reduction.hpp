#pragma once

#include <vector>

#include "fsmcheck/fsm.hpp"
#include "fsmcheck/relations.hpp"

// Reachability, the two reducedness notions, and quotienting a machine by
// state alikeness. The quotient keeps only reachable states, merges alike
// ones, and names each class after its least member: `[<rep>]`.

namespace fsmcheck {

// States reachable from the initial state, in declaration order.
std::vector<StateId> reachable(const Fsm& m);

bool fully_reachable(const Fsm& m);

// All states reachable and every distinct pair output-distinguishable.
Verdict is_reduced(const Fsm& m);

// All states reachable and no two distinct states alike.
Verdict is_p_reduced(const Fsm& m);

// Alikeness quotient over the reachable part. The result simulates and is
// simulated by the input, is alike to it, and quotienting again changes
// nothing (up to isomorphism).
Fsm p_reduce(const Fsm& m);

}  // namespace fsmcheck
