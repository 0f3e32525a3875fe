#include "unitring/structured.hpp"

#include "unitring/errors.hpp"

#include <algorithm>
#include <set>

namespace unitring {

StructuredGroup make_structured(GroupPtr torsion, int free_rank,
                                std::vector<std::vector<int>> actions) {
    if (free_rank < 0) fail_validation("BadParams", "free rank must be nonnegative");
    if (static_cast<int>(actions.size()) != free_rank)
        fail_validation("BadParams", "expected one action per free generator");
    const int n = torsion->order();
    for (const auto& a : actions) {
        if (static_cast<int>(a.size()) != n)
            fail_validation("NotAPermutation", "action length does not match group order");
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int v : a) {
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
                fail_validation("NotAPermutation", "action is not a permutation of the elements");
            seen[static_cast<std::size_t>(v)] = 1;
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (a[static_cast<std::size_t>(torsion->mul(x, y))] !=
                    torsion->mul(a[static_cast<std::size_t>(x)], a[static_cast<std::size_t>(y)]))
                    fail_validation("NotAnAutomorphism",
                                    "action is not multiplicative on the torsion part");
    }
    // The free generators commute, so their actions must commute as maps.
    for (std::size_t i = 0; i < actions.size(); ++i)
        for (std::size_t j = i + 1; j < actions.size(); ++j)
            for (int x = 0; x < n; ++x)
                if (actions[i][static_cast<std::size_t>(actions[j][static_cast<std::size_t>(x)])] !=
                    actions[j][static_cast<std::size_t>(actions[i][static_cast<std::size_t>(x)])])
                    fail_validation("ActionsDoNotCommute",
                                    "actions of the free generators do not commute");
    return {std::move(torsion), free_rank, std::move(actions)};
}

std::string to_string(ChainOutcome o) {
    switch (o) {
    case ChainOutcome::Nilpotent: return "nilpotent";
    case ChainOutcome::Hypercentral: return "hypercentral";
    case ChainOutcome::No: return "no";
    case ChainOutcome::Indeterminate: return "indeterminate";
    }
    return "?";
}

namespace {

// One chain step: H -> [H, G], generated by the commutators [h, t] over
// t in T and the twists h^{-1} action_j(h), closed to a subgroup stable
// under conjugation by T and under every action (G-conjugation is exactly
// T-conjugation composed with action powers).
Subgroup chain_step(const StructuredGroup& s, const Subgroup& h) {
    const auto& g = *s.torsion;
    std::set<int> gens;
    for (int x : h.elements) {
        for (int t = 0; t < g.order(); ++t) gens.insert(g.commutator(x, t));
        for (int j = 0; j < s.free_rank; ++j) gens.insert(g.mul(g.inv(x), s.act(j, x)));
    }
    Subgroup cur = subgroup_closure(s.torsion, std::vector<int>(gens.begin(), gens.end()));
    for (;;) {
        std::vector<int> extra;
        for (int x : cur.elements) {
            for (int t = 0; t < g.order(); ++t)
                if (!cur.contains(g.conj(x, t))) extra.push_back(g.conj(x, t));
            for (int j = 0; j < s.free_rank; ++j)
                if (!cur.contains(s.act(j, x))) extra.push_back(s.act(j, x));
        }
        if (extra.empty()) return cur;
        std::vector<int> all = cur.elements;
        all.insert(all.end(), extra.begin(), extra.end());
        cur = subgroup_closure(s.torsion, all);
    }
}

} // namespace

ChainResult structured_is_hypercentral(const StructuredGroup& s, int max_steps) {
    ChainResult out;
    Subgroup h = full_subgroup(s.torsion);
    if (h.order() == 1) {
        out.outcome = ChainOutcome::Nilpotent;
        out.class_bound = 0;
        return out;
    }
    for (int step = 1; step <= max_steps; ++step) {
        Subgroup next = chain_step(s, h);
        out.chain.push_back(next);
        if (next.order() == 1) {
            out.outcome = ChainOutcome::Nilpotent;
            out.class_bound = step;
            return out;
        }
        if (next.order() == h.order()) {
            out.outcome = ChainOutcome::No;
            return out;
        }
        h = std::move(next);
    }
    out.outcome = ChainOutcome::Indeterminate;
    return out;
}

std::vector<Subgroup> torsion_commutator_chain(const StructuredGroup& s, int max_steps) {
    return structured_is_hypercentral(s, max_steps).chain;
}

} // namespace unitring
