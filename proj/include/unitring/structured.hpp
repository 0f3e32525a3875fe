#pragma once

// Structured infinite groups G = Z^k x| T: a finite torsion part T together
// with k pairwise-commuting free generators acting on T by automorphisms.
// This is the input model for the hypercentrality classifier; it is the
// smallest shape in which all three classification cases are expressible.

#include "unitring/group.hpp"

#include <optional>
#include <vector>

namespace unitring {

// One action is a permutation of T's element indices; validation checks it
// is an automorphism (bijective and multiplicative on the Cayley table).
struct StructuredGroup {
    GroupPtr torsion;
    int free_rank = 0;
    std::vector<std::vector<int>> actions; // one permutation per free generator

    // Image of element x under action j.
    int act(int j, int x) const { return actions[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)]; }
};

// Validates and constructs; throws Validation errors:
//   NotAPermutation / NotAnAutomorphism  - an action fails bijectivity or
//                                          multiplicativity,
//   ActionsDoNotCommute                  - two actions do not commute (the
//                                          free generators are required to
//                                          commute, so their actions must),
//   BadParams                            - rank/action count mismatch.
StructuredGroup make_structured(GroupPtr torsion, int free_rank,
                                std::vector<std::vector<int>> actions);

// Whether the structured group is plainly finite (k = 0).
inline bool is_finite(const StructuredGroup& s) { return s.free_rank == 0; }

enum class ChainOutcome {
    Nilpotent,    // chain reached {1}; class bound = number of steps
    Hypercentral, // representable for reporting; the finite-T chain always
                  // yields a concrete class bound, so this tag is unused here
    No,           // chain stabilized above {1}
    Indeterminate // step budget exhausted before stabilization
};

std::string to_string(ChainOutcome o);

struct ChainResult {
    ChainOutcome outcome = ChainOutcome::Indeterminate;
    std::optional<int> class_bound;       // set when outcome == Nilpotent
    std::vector<Subgroup> chain;          // H1 = [T,G] >= H2 = [H1,G] >= ...
};

inline bool is_positive(const ChainResult& r) {
    return r.outcome == ChainOutcome::Nilpotent || r.outcome == ChainOutcome::Hypercentral;
}

// Descending chain H0 = T, H_{m+1} = [H_m, G].  Since G is generated by T
// together with the free generators, [H_m, G] is generated by the ordinary
// commutators [h, t] and the twists h^{-1}*action_j(h), closed up to a
// subgroup stable under conjugation and all actions.  The group G is
// nilpotent (hence hypercentral) exactly when the chain reaches {1}; the
// step count bounds the nilpotency class because gamma_{m+1}(G) <= H_m.
ChainResult structured_is_hypercentral(const StructuredGroup& s, int max_steps = 64);

// The same chain, exposed for reporting: [T,G] >= [T,G,G] >= ... down to
// the stable term (or the budget).  Empty exactly when H1 already equals T
// is impossible; for k = 0 and abelian T the chain is [{1}] after one step.
std::vector<Subgroup> torsion_commutator_chain(const StructuredGroup& s, int max_steps = 64);

} // namespace unitring
