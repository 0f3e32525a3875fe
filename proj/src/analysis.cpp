#include "unitring/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace unitring {

namespace {

// Overflow-guarded base^exp with an early bail-out against `limit`.
// Returns limit + 1 as soon as the product would exceed it.
std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) return limit + 1;
        r *= base;
    }
    return r;
}

} // namespace

// ---------- V(KG) enumeration ----------

EnumeratedUnitGroup enumerate_v_kg(const FFRing& k, const GroupPtr& g, std::uint64_t budget) {
    const int n = g->order();
    const std::uint64_t q = k.ctx->size();
    const std::uint64_t candidates = checked_pow(q, n - 1, budget);
    if (candidates > budget)
        fail_budget("enumerating V(KG) needs |K|^(|G|-1) = " + std::to_string(q) + "^" +
                    std::to_string(n - 1) + " candidates, over the budget " +
                    std::to_string(budget));

    std::vector<GroupRingElem<FFRing>> carrier;
    std::vector<std::uint64_t> digits(n > 1 ? static_cast<std::size_t>(n - 1) : 0, 0);
    for (std::uint64_t c = 0; c < candidates; ++c) {
        GroupRingElem<FFRing> x(g, k);
        FFElement sum = k.zero();
        for (int i = 0; i + 1 < n; ++i) {
            FFElement v = k.ctx->element(digits[static_cast<std::size_t>(i)]);
            sum = sum + v;
            x.set(i + 1, v);
        }
        x.set(0, k.one() - sum); // forced: augmentation is exactly 1
        if (try_invert(x)) carrier.push_back(std::move(x));
        for (int i = 0; i + 1 < n; ++i) {
            if (++digits[static_cast<std::size_t>(i)] < q) break;
            digits[static_cast<std::size_t>(i)] = 0;
        }
    }

    // For a p-group in characteristic p, 1 + omega(KG) is all of the
    // augmentation-one set; the filter above must therefore keep everything.
    int m = n;
    const int p = static_cast<int>(k.characteristic());
    while (m % p == 0) m /= p;
    if (m == 1 && carrier.size() != candidates)
        throw std::logic_error("p-group unit count disagrees with the candidate count");

    if (carrier.size() > static_cast<std::size_t>(FiniteGroup::kMaxOrder))
        fail_budget("V(KG) has " + std::to_string(carrier.size()) +
                    " elements, over the Cayley-table bound " +
                    std::to_string(FiniteGroup::kMaxOrder));

    // Dense coefficient key (field-element indices) -> carrier position.
    auto key_of = [&](const GroupRingElem<FFRing>& x) {
        std::vector<std::uint64_t> key(static_cast<std::size_t>(n), 0);
        for (const auto& [gi, v] : x.coeffs()) key[static_cast<std::size_t>(gi)] = k.ctx->index_of(v);
        return key;
    };
    std::map<std::vector<std::uint64_t>, int> position;
    for (std::size_t i = 0; i < carrier.size(); ++i) position[key_of(carrier[i])] = static_cast<int>(i);

    const int order = static_cast<int>(carrier.size());
    std::vector<std::vector<int>> table(static_cast<std::size_t>(order),
                                        std::vector<int>(static_cast<std::size_t>(order), 0));
    std::vector<std::string> names;
    names.reserve(carrier.size());
    for (const auto& x : carrier) names.push_back(to_text(x));
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) {
            auto it = position.find(key_of(gr_mul(carrier[static_cast<std::size_t>(i)],
                                                  carrier[static_cast<std::size_t>(j)])));
            if (it == position.end())
                throw std::logic_error("unit carrier is not closed under multiplication");
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = it->second;
        }
    GroupPtr as_group = FiniteGroup::from_table(std::move(table), std::move(names));
    return {k, g, std::move(carrier), std::move(as_group)};
}

UnitGroupStructure unit_group_structure(const EnumeratedUnitGroup& v) {
    UnitGroupStructure out;
    out.order = v.as_group->order();
    out.center_order = center(v.as_group).order();
    CentralSeries cs = upper_central_series(v.as_group);
    for (const auto& z : cs.series) out.series_orders.push_back(z.order());
    out.nilpotency_class = cs.nilpotency_class;
    return out;
}

// ---------- bounded unit search in ZG ----------

std::vector<GroupRingElem<IntRing>> bounded_unit_search_zg(const GroupPtr& g, int bound,
                                                           std::uint64_t budget) {
    if (bound < 0) fail_validation("BadParams", "coefficient bound must be nonnegative");
    const int n = g->order();
    const std::uint64_t base = 2ull * static_cast<std::uint64_t>(bound) + 1;
    const std::uint64_t candidates = checked_pow(base, n, budget);
    if (candidates > budget)
        fail_budget("searching ZG needs (2B+1)^|G| = " + std::to_string(base) + "^" +
                    std::to_string(n) + " candidates, over the budget " + std::to_string(budget));

    IntRing ring;
    std::vector<GroupRingElem<IntRing>> found;
    // Big-endian odometer: digits[0] is the coefficient of element 0 and is
    // the most significant, so candidates arrive in lexicographic order.
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (std::uint64_t c = 0; c < candidates; ++c) {
        long long aug = 0;
        for (int d : digits) aug += d - bound;
        if (aug == 1) {
            GroupRingElem<IntRing> x(g, ring);
            for (int i = 0; i < n; ++i)
                x.set(i, BigInt(digits[static_cast<std::size_t>(i)] - bound));
            if (try_invert(x)) found.push_back(std::move(x));
        }
        for (int i = n; i-- > 0;) {
            if (++digits[static_cast<std::size_t>(i)] < static_cast<int>(base)) break;
            digits[static_cast<std::size_t>(i)] = 0;
        }
    }
    return found;
}

// ---------- necessary conditions on the group ----------

std::string DedekindReport::first_failure() const {
    if (!subgroups_normal) return "(1) not every subgroup is normal: " + normal_counterexample;
    if (!conj_power) return "(2) conjugation leaves {t, t^-1}: " + conj_counterexample;
    if (!odd_central) return "(3) an odd-order element is not central: " + odd_counterexample;
    if (!mixed_abelian)
        return "(4) odd and even torsion together force a central torsion part: " +
               mixed_counterexample;
    return "";
}

DedekindReport verify_dedekind_conditions(const GroupPtr& g) {
    DedekindReport r;
    const int n = g->order();

    r.subgroups_normal = true;
    for (int x = 0; x < n && r.subgroups_normal; ++x) {
        Subgroup cyc = subgroup_closure(g, {x});
        for (int h = 0; h < n; ++h)
            if (!cyc.contains(g->conj(x, h))) {
                r.subgroups_normal = false;
                r.normal_counterexample =
                    "<" + g->name(x) + "> is not normalized by " + g->name(h);
                break;
            }
    }

    r.conj_power = true;
    for (int t = 0; t < n && r.conj_power; ++t)
        for (int h = 0; h < n; ++h) {
            int c = g->conj(t, h);
            if (c != t && c != g->inv(t)) {
                r.conj_power = false;
                r.conj_counterexample = "conjugating " + g->name(t) + " by " + g->name(h) +
                                        " gives " + g->name(c);
                break;
            }
        }

    r.odd_central = true;
    for (int t = 0; t < n && r.odd_central; ++t) {
        if (g->element_order(t) % 2 == 0) continue;
        for (int h = 0; h < n; ++h)
            if (g->mul(t, h) != g->mul(h, t)) {
                r.odd_central = false;
                r.odd_counterexample = "odd-order " + g->name(t) + " does not commute with " +
                                       g->name(h);
                break;
            }
    }

    bool has_odd = false, has_even = false;
    for (int t = 0; t < n; ++t) {
        int o = g->element_order(t);
        if (o > 1 && o % 2 == 1) has_odd = true;
        if (o % 2 == 0) has_even = true;
    }
    if (has_odd && has_even) {
        r.mixed_vacuous = false;
        r.mixed_abelian = g->is_abelian();
        if (!r.mixed_abelian) {
            for (int a = 0; a < n && r.mixed_counterexample.empty(); ++a)
                for (int b = 0; b < n; ++b)
                    if (g->mul(a, b) != g->mul(b, a)) {
                        r.mixed_counterexample =
                            g->name(a) + " and " + g->name(b) + " do not commute";
                        break;
                    }
        }
    } else {
        r.mixed_vacuous = true;
        r.mixed_abelian = true;
    }
    return r;
}

// ---------- hypercentrality classification ----------

std::string HypercentralVerdict::answer_text() const {
    switch (answer) {
    case HCAnswer::Yes: return std::string("Yes(") + case_tag + ")";
    case HCAnswer::No: return "No";
    case HCAnswer::Indeterminate: return "Indeterminate";
    }
    return "?";
}

HypercentralVerdict classify_hypercentral_finite(const GroupPtr& g) {
    HypercentralVerdict v;
    if (g->is_abelian()) {
        v.answer = HCAnswer::Yes;
        v.case_tag = 'a';
        v.reason = "the torsion part is the whole group and it is abelian";
        return v;
    }
    K8E2Result dec = decompose_k8_e2(g);
    if (dec.ok()) {
        v.answer = HCAnswer::Yes;
        v.case_tag = 'c';
        v.reason = "quaternion-times-elementary decomposition found; a finite input leaves no "
                   "room for case (b) actions";
        v.decomposition = std::move(dec.decomposition);
        return v;
    }
    v.answer = HCAnswer::No;
    DedekindReport report = verify_dedekind_conditions(g);
    v.reason = report.all_pass() ? "decomposition failed: " + dec.failure : report.first_failure();
    return v;
}

HypercentralVerdict classify_hypercentral_structured(const StructuredGroup& s) {
    HypercentralVerdict v;
    ChainResult chain = structured_is_hypercentral(s);
    if (chain.outcome == ChainOutcome::Indeterminate) {
        v.answer = HCAnswer::Indeterminate;
        v.reason = "the descending commutator chain did not stabilize within its budget";
        return v;
    }
    if (!is_positive(chain)) {
        v.answer = HCAnswer::No;
        v.reason = "the descending commutator chain stabilizes at a subgroup of order " +
                   std::to_string(chain.chain.back().order()) + " instead of reaching 1";
        return v;
    }

    const auto& t = s.torsion;
    auto action_is_identity = [&](const std::vector<int>& a) {
        for (int x = 0; x < t->order(); ++x)
            if (a[static_cast<std::size_t>(x)] != x) return false;
        return true;
    };
    auto action_is_inversion = [&](const std::vector<int>& a) {
        for (int x = 0; x < t->order(); ++x)
            if (a[static_cast<std::size_t>(x)] != t->inv(x)) return false;
        return true;
    };

    bool all_identity = true;
    for (const auto& a : s.actions) all_identity = all_identity && action_is_identity(a);

    if (t->is_abelian() && all_identity) {
        v.answer = HCAnswer::Yes;
        v.case_tag = 'a';
        v.reason = "the torsion part is abelian and central";
        return v;
    }
    if (t->is_abelian() && t->is_2_group()) {
        bool ok = true;
        for (const auto& a : s.actions)
            ok = ok && (action_is_identity(a) || action_is_inversion(a));
        if (ok) {
            v.answer = HCAnswer::Yes;
            v.case_tag = 'b';
            v.reason = "abelian 2-group torsion part; every generator acts as t -> t or t -> t^-1";
            return v;
        }
    }

    std::string c_failure;
    K8E2Result dec = decompose_k8_e2(t);
    if (!dec.ok()) {
        c_failure = "decomposition failed: " + dec.failure;
    } else {
        std::vector<K8Action> classes;
        for (int j = 0; j < s.free_rank && c_failure.empty(); ++j) {
            const auto& a = s.actions[static_cast<std::size_t>(j)];
            for (int e : dec.decomposition->elementary.elements)
                if (a[static_cast<std::size_t>(e)] != e) {
                    c_failure = "generator " + std::to_string(j + 1) +
                                " moves the elementary part (" + t->name(e) + ")";
                    break;
                }
            if (!c_failure.empty()) break;
            K8Action cls = k8_action_class(dec.decomposition->quaternion, a);
            if (cls == K8Action::NotInner) {
                c_failure = "generator " + std::to_string(j + 1) +
                            " does not act as one of the four inner maps on the quaternion part";
                break;
            }
            classes.push_back(cls);
        }
        if (c_failure.empty()) {
            v.answer = HCAnswer::Yes;
            v.case_tag = 'c';
            v.reason = "torsion part splits as quaternion times central elementary part and every "
                       "generator acts by an inner map";
            v.decomposition = std::move(dec.decomposition);
            v.action_classes = std::move(classes);
            return v;
        }
    }

    v.answer = HCAnswer::No;
    std::string ab = t->is_abelian() ? "actions are not all trivial (a) nor all +-1 powers (b)"
                                     : "the torsion part is nonabelian (rules out (a) and (b))";
    v.reason = "chain reaches 1 but no case applies: " + ab + "; " + c_failure;
    return v;
}

// ---------- hyperbolicity ----------

std::string to_string(About a) { return a == About::V ? "V" : "U"; }

std::string to_string(HyperbolicAnswer a) {
    switch (a) {
    case HyperbolicAnswer::Hyperbolic: return "Hyperbolic";
    case HyperbolicAnswer::NotHyperbolic: return "NotHyperbolic";
    case HyperbolicAnswer::Undetermined: return "Undetermined";
    }
    return "?";
}

GroupDescriptor infinite_descriptor(bool has_torsion, bool has_p_prime_torsion,
                                    std::string text) {
    if (has_p_prime_torsion && !has_torsion)
        fail_validation("BadParams", "torsion coprime to the characteristic is still torsion");
    return {false, nullptr, has_torsion, has_p_prime_torsion, std::move(text)};
}

Z2Witness construct_z2_witness(std::uint32_t p, const GroupPtr& g, int g0) {
    RFRing ring(p);
    if (g0 < 0 || g0 >= g->order())
        fail_precondition("BadParams", "torsion element index out of range");
    if (g0 == 0)
        fail_precondition("DegenerateTorsionElement",
                          "the identity gives e = 1 and a degenerate witness");
    GroupRingElem<RFRing> e = hat_idempotent(g, ring, g0);
    GroupRingElem<RFRing> rest = gr_sub(GroupRingElem<RFRing>::one(g, ring), e);
    RatFunc t = RatFunc::t(p);
    RatFunc t1 = t + RatFunc::one(p);
    GroupRingElem<RFRing> u1 = gr_add(e, gr_scale(t, rest));
    GroupRingElem<RFRing> u2 = gr_add(e, gr_scale(t1, rest));
    return {ring, g, std::move(u1), std::move(u2), g0, 0};
}

bool verify_z2_witness(const Z2Witness& w, int n) {
    if (n < 1) fail_precondition("BadParams", "independence bound must be at least 1");
    const RFRing& ring = w.ring;
    GroupRingElem<RFRing> id = GroupRingElem<RFRing>::one(w.group, ring);
    if (!ring.equal(augmentation(w.u1), ring.one())) return false;
    if (!ring.equal(augmentation(w.u2), ring.one())) return false;
    auto inv1 = try_invert(w.u1);
    auto inv2 = try_invert(w.u2);
    if (!inv1 || !inv2) return false;
    if (!gr_mul(gr_mul(*inv1, *inv2), gr_mul(w.u1, w.u2)).equal(id)) return false;

    // Power tables u^a for a in [-n, n], built incrementally.
    auto powers = [&](const GroupRingElem<RFRing>& u, const GroupRingElem<RFRing>& ui) {
        std::vector<GroupRingElem<RFRing>> p(2 * static_cast<std::size_t>(n) + 1, id);
        for (int a = 1; a <= n; ++a) {
            p[static_cast<std::size_t>(n + a)] = gr_mul(p[static_cast<std::size_t>(n + a - 1)], u);
            p[static_cast<std::size_t>(n - a)] = gr_mul(p[static_cast<std::size_t>(n - a + 1)], ui);
        }
        return p;
    };
    auto p1 = powers(w.u1, *inv1);
    auto p2 = powers(w.u2, *inv2);
    for (int a = -n; a <= n; ++a)
        for (int b = -n; b <= n; ++b) {
            if (a == 0 && b == 0) continue;
            if (gr_mul(p1[static_cast<std::size_t>(a + n)], p2[static_cast<std::size_t>(b + n)])
                    .equal(id))
                return false;
        }
    return true;
}

HyperbolicVerdict classify_hyperbolic(const FieldDescriptor& k, const GroupDescriptor& g,
                                      About about, int witness_bound) {
    const FieldTraits tr = field_traits(k);
    if (g.finite) {
        if (!g.group) fail_precondition("BadParams", "finite descriptor carries no group");
        if (g.group->order() == 1)
            fail_precondition("TrivialGroup", "the classification assumes a nontrivial group");
    }

    HyperbolicVerdict v;
    v.about = about;

    if (about == About::V && g.finite) {
        if (tr.is_finite) {
            v.answer = HyperbolicAnswer::Hyperbolic;
            v.rule = "R1-finite-field";
            v.notes.push_back("V(KG) is a finite group, hence hyperbolic");
            return v;
        }
        v.answer = HyperbolicAnswer::NotHyperbolic;
        v.rule = "R1-infinite-field";
        v.notes.push_back("a finite group over an infinite field never has hyperbolic V(KG)");
        if (tr.tr_deg >= 1) {
            const int p = static_cast<int>(tr.characteristic);
            for (int x = 1; x < g.group->order(); ++x) {
                if (g.group->element_order(x) % p == 0) continue;
                Z2Witness w = construct_z2_witness(tr.characteristic, g.group, x);
                if (!verify_z2_witness(w, witness_bound))
                    throw std::logic_error("constructed witness failed verification");
                w.verified_bound = witness_bound;
                v.witness = std::move(w);
                v.notes.push_back("Z^2 witness attached for torsion element " + g.group->name(x));
                break;
            }
        }
        return v;
    }
    if (about == About::V && !g.finite && g.has_p_prime_torsion && tr.tr_deg >= 1) {
        v.answer = HyperbolicAnswer::NotHyperbolic;
        v.rule = "R2-coprime-torsion";
        v.notes.push_back("torsion coprime to the characteristic over a transcendental field "
                          "embeds Z^2 into V(KG)");
        return v;
    }
    if (about == About::V && !g.finite && g.has_torsion && !tr.is_algebraic_over_prime) {
        v.answer = HyperbolicAnswer::NotHyperbolic;
        v.rule = "R3-not-algebraic";
        v.notes.push_back("hyperbolic V(KG) with torsion forces K algebraic over its prime "
                          "field, and this K is not");
        return v;
    }
    if (about == About::U && !tr.is_finite) {
        v.answer = HyperbolicAnswer::NotHyperbolic;
        v.rule = "R4-infinite-field";
        v.notes.push_back("hyperbolic U(KG) forces a finite K, and this K is infinite");
        return v;
    }

    v.answer = HyperbolicAnswer::Undetermined;
    v.rule = "none";
    if (about == About::U)
        v.notes.push_back("the field is finite, as a hyperbolic full unit group requires");
    else if (!g.has_torsion && !g.finite)
        v.notes.push_back("the group is torsion-free, so no torsion obstruction applies");
    else if (tr.is_algebraic_over_prime)
        v.notes.push_back(
            "the field is algebraic over its prime field, so no field obstruction applies");
    v.notes.push_back("no sufficiency rule covers this input");
    return v;
}

} // namespace unitring
