#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fsmcheck/fsm.hpp"

// Internal machinery shared by the relation deciders and the candidate
// searches. Everything here works on symbol *indices* against a Joint view
// of two machines so that the hot loops never touch strings and candidate
// sweeps can reuse scratch buffers across millions of machines.

namespace fsmcheck::detail {

// Union of two machines' input alphabets (first machine's declaration order,
// then the second's extras) plus an output identification map. A symbol
// present in only one alphabet is simply undefined everywhere in the other
// machine, and an output symbol foreign to the first machine compares
// unequal to all of its outputs.
struct Joint {
    std::vector<std::string> symbols;
    std::vector<int> in_first;   // joint index -> first machine input index, -1 if absent
    std::vector<int> in_second;  // joint index -> second machine input index
    std::vector<int> out_second_to_first;  // second output index -> first output index, -1
};

Joint make_joint(const Fsm& first, const Fsm& second);

// Ranks every suite symbol in the joint order; words whose symbols lie
// outside the union are rejected.
std::vector<int> word_to_joint(const Word& w, const Joint& j);

inline bool out_equal(const Joint& j, int first_out, int second_out) {
    return j.out_second_to_first[second_out] == first_out;
}

// Per-pair BFS scratch. Pairs are encoded as s * |Q| + q.
struct ProductScratch {
    std::vector<std::int32_t> dist;
    std::vector<std::int32_t> parent;
    std::vector<std::int16_t> via;
    std::vector<std::int32_t> fifo;

    void reset(std::size_t pairs) {
        dist.assign(pairs, -1);
        parent.assign(pairs, -1);
        via.assign(pairs, -1);
        fifo.clear();
    }
};

// A violation discovered by a product search: the joint word leading to it
// plus what went wrong on its last symbol.
enum class ProductHit : std::uint8_t { None, Mismatch, OnlyFirst, OnlySecond };

struct ProductWitness {
    ProductHit hit = ProductHit::None;
    std::vector<int> word;  // joint symbol indices
};

// Shortest (then lexicographically least, in joint order) word violating
// output agreement on commonly defined words. `blocking_sensitive` extends
// the search so that one-sidedly defined inputs also count as violations,
// which decides the blocking-aware relation instead.
ProductWitness product_search(const Fsm& m, StateId s, const Fsm& n, StateId q, const Joint& j,
                              bool blocking_sensitive, ProductScratch& scratch);

// True iff every word runnable from the first machine's initial state is
// runnable from the second's (containment of the defined-word sets), decided
// by following only the first machine's defined inputs.
bool u_contained(const Fsm& m, const Fsm& n, const Joint& j, ProductScratch& scratch);

// Lenient index-level run: joint symbols mapped through `to_local`; a symbol
// absent from the machine's alphabet blocks like an undefined pair.
struct IndexRun {
    bool completed;
    StateId target;
    std::size_t defined_prefix;
};
IndexRun run_joint(const Fsm& m, StateId s, std::span<const int> word,
                   std::span<const int> to_local);

// Precomputed spec-side view of one suite word, for candidate sweeps.
struct SuiteWordPlan {
    std::vector<int> joint;      // the word, as joint symbols
    bool spec_completes;
    std::size_t spec_prefix;     // defined prefix when blocked
    std::vector<int> spec_outs;  // first-machine output indices along the defined prefix
};

std::vector<SuiteWordPlan> plan_suite(const Fsm& spec, const TestSuite& t, const Joint& j);

// Suite-bounded checks of one candidate against the planned spec runs.
// They return true when the candidate agrees with the spec on the suite
// (outputs only for the plain check, blocking structure too for the
// blocking-sensitive one).
bool suite_equiv_holds(const Fsm& cand, const Joint& j, std::span<const SuiteWordPlan> plan);
bool suite_alike_holds(const Fsm& cand, const Joint& j, std::span<const SuiteWordPlan> plan);

// Greatest transfer-closed relation over S x Q, as a bitset; returns whether
// the initial pair survived. `rel` is scratch sized |S|*|Q|.
bool greatest_simulation_exists(const Fsm& m, const Fsm& n, std::vector<std::uint8_t>& rel);

// Lexicographic comparison of joint-index words by (length, symbols).
bool joint_word_less(std::span<const int> a, std::span<const int> b);

}  // namespace fsmcheck::detail
