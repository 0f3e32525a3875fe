#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "unitring/analysis.hpp"
#include "unitring/errors.hpp"
#include "unitring/format.hpp"
#include "unitring/group.hpp"
#include "unitring/group_ring.hpp"
#include "unitring/structured.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace unitring;

namespace {

template <class F>
std::string error_code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

int idx(const GroupPtr& g, const std::string& name) {
    auto i = g->index_of(name);
    REQUIRE(i.has_value());
    return *i;
}

// Exhaustive oracle for V(KG): generate every element of KG, keep the
// augmentation-one ones that have a two-sided partner somewhere in KG.
std::set<std::string> v_kg_oracle(const FFRing& k, const GroupPtr& g) {
    const int n = g->order();
    const std::uint64_t q = k.ctx->size();
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= q;
    std::vector<GroupRingElem<FFRing>> all;
    for (std::uint64_t code = 0; code < total; ++code) {
        GroupRingElem<FFRing> x(g, k);
        std::uint64_t c = code;
        for (int i = 0; i < n; ++i) {
            x.set(i, k.ctx->element(c % q));
            c /= q;
        }
        all.push_back(std::move(x));
    }
    const auto id = GroupRingElem<FFRing>::one(g, k);
    std::set<std::string> units;
    for (const auto& x : all) {
        if (!k.equal(augmentation(x), k.one())) continue;
        for (const auto& y : all)
            if (gr_mul(x, y) == id && gr_mul(y, x) == id) {
                units.insert(to_text(x));
                break;
            }
    }
    return units;
}

std::vector<int> action_inversion(const GroupPtr& g) {
    std::vector<int> phi(static_cast<std::size_t>(g->order()));
    for (int x = 0; x < g->order(); ++x) phi[static_cast<std::size_t>(x)] = g->inv(x);
    return phi;
}

std::vector<int> action_identity(const GroupPtr& g) {
    std::vector<int> phi(static_cast<std::size_t>(g->order()));
    for (int x = 0; x < g->order(); ++x) phi[static_cast<std::size_t>(x)] = x;
    return phi;
}

std::vector<int> action_conj(const GroupPtr& g, int by) {
    std::vector<int> phi(static_cast<std::size_t>(g->order()));
    for (int x = 0; x < g->order(); ++x) phi[static_cast<std::size_t>(x)] = g->conj(x, by);
    return phi;
}

} // namespace

TEST_CASE("V(KG) enumeration matches the exhaustive pairing oracle") {
    struct Case {
        GroupPtr g;
        FFRing k;
    };
    for (const auto& [g, k] : {Case{cyclic_group(2), FFRing(2, 1)},
                               Case{cyclic_group(2), FFRing(3, 1)},
                               Case{cyclic_group(3), FFRing(2, 1)},
                               Case{cyclic_group(2), FFRing(2, 2)}}) {
        const auto v = enumerate_v_kg(k, g, 1u << 20);
        std::set<std::string> got;
        for (const auto& x : v.carrier) got.insert(to_text(x));
        CHECK(got == v_kg_oracle(k, g));
        CHECK(v.as_group->order() == static_cast<int>(v.carrier.size()));
        CHECK(v.carrier[0] == GroupRingElem<FFRing>::one(g, k));
    }
    // Frozen orders: GF(2)C2 and GF(3)C2 have V = {1, g}; GF(2)C3 has V = C3.
    CHECK(enumerate_v_kg(FFRing(2, 1), cyclic_group(2), 1u << 20).as_group->order() == 2);
    CHECK(enumerate_v_kg(FFRing(3, 1), cyclic_group(2), 1u << 20).as_group->order() == 2);
    CHECK(enumerate_v_kg(FFRing(2, 1), cyclic_group(3), 1u << 20).as_group->order() == 3);
}

TEST_CASE("V(GF(2)Q8) is the full 2^7 and is nilpotent") {
    const auto v = enumerate_v_kg(FFRing(2, 1), quaternion8(), 1u << 20);
    CHECK(v.as_group->order() == 128);
    const auto s = unit_group_structure(v);
    CHECK(s.order == 128);
    REQUIRE(s.nilpotency_class.has_value());
    CHECK(s.series_orders.front() == 1);
    CHECK(s.series_orders.back() == 128);
    for (std::size_t i = 1; i < s.series_orders.size(); ++i)
        CHECK(s.series_orders[i] > s.series_orders[i - 1]); // strictly ascending to the top
    // The group elements of Q8 sit inside V as the 8 basis units.
    int basis_count = 0;
    for (const auto& x : v.carrier)
        if (x.support_size() == 1) ++basis_count;
    CHECK(basis_count == 8);
}

TEST_CASE("V-structure of abelian examples") {
    const auto v = enumerate_v_kg(FFRing(2, 1), cyclic_group(3), 1u << 20);
    const auto s = unit_group_structure(v);
    CHECK(s.order == 3);
    CHECK(s.center_order == 3);
    CHECK(s.nilpotency_class == 1);
}

TEST_CASE("enumeration budgets") {
    CHECK(error_code_of([] { enumerate_v_kg(FFRing(7, 1), quaternion8(), 1000); }) ==
          "BudgetExceeded"); // 7^7 candidates > 1000
    CHECK(error_code_of([] {
              enumerate_v_kg(FFRing(2, 2), quaternion8(), 1u << 20);
          }) == "BudgetExceeded"); // |V| = 4^7 exceeds the Cayley-table cap
}

TEST_CASE("bounded unit search: Hamiltonian 2-groups have only trivial units") {
    const GroupPtr q8 = quaternion8();
    const auto units = bounded_unit_search_zg(q8, 1, 10'000'000);
    REQUIRE(units.size() == 8);
    for (const auto& u : units) {
        CHECK(is_trivial_unit(u));
        CHECK(u.support_size() == 1);
        CHECK(u.coeffs().begin()->second == 1); // augmentation one forces +g
    }
    // Every group element appears.
    std::set<int> support;
    for (const auto& u : units) support.insert(u.coeffs().begin()->first);
    CHECK(support.size() == 8);

    const auto c2_units = bounded_unit_search_zg(cyclic_group(2), 3, 10'000'000);
    REQUIRE(c2_units.size() == 2);
    CHECK(to_text(c2_units[0]) + "|" + to_text(c2_units[1]) == "g|1");

    const auto c1_units = bounded_unit_search_zg(cyclic_group(1), 2, 100);
    REQUIRE(c1_units.size() == 1);
    CHECK(to_text(c1_units[0]) == "1");
}

TEST_CASE("bounded unit search finds the nontrivial C5 units") {
    IntRing zz;
    const GroupPtr c5 = cyclic_group(5);
    const auto units = bounded_unit_search_zg(c5, 1, 10'000'000);
    CHECK(units.size() == 15); // 5 trivial + 5 shifts of u + 5 shifts of u^-1
    std::set<std::string> texts;
    for (const auto& u : units) texts.insert(to_text(u));
    CHECK(texts.count("-1 + g + g^4") == 1);
    CHECK(texts.count("-1 + g^2 + g^3") == 1);
    CHECK(texts.count("1") == 1);
    const auto u = parse_element(c5, zz, "-1 + g + g^4");
    const auto v = parse_element(c5, zz, "-1 + g^2 + g^3");
    CHECK(gr_mul(u, v) == GroupRingElem<IntRing>::one(c5, zz));
    CHECK(gr_mul(v, u) == GroupRingElem<IntRing>::one(c5, zz));
    int nontrivial = 0;
    for (const auto& x : units)
        if (!is_trivial_unit(x)) ++nontrivial;
    CHECK(nontrivial == 10);

    // Lexicographic order of coefficient vectors, element 0 most significant.
    std::vector<std::vector<int>> vecs;
    for (const auto& x : units) {
        std::vector<int> vec;
        for (int g = 0; g < 5; ++g) vec.push_back(x.coeff(g).convert_to<int>());
        vecs.push_back(std::move(vec));
    }
    CHECK(std::is_sorted(vecs.begin(), vecs.end()));
}

TEST_CASE("search guards") {
    CHECK(error_code_of([] { bounded_unit_search_zg(quaternion8(), -1, 100); }) == "BadParams");
    CHECK(error_code_of([] {
              bounded_unit_search_zg(generalized_quaternion16(), 1, 1000);
          }) == "BudgetExceeded"); // 3^16 candidates
}

TEST_CASE("necessary-condition report on the catalog") {
    // K8: Hamiltonian, no odd torsion; everything passes, (4) vacuously.
    const auto rk8 = verify_dedekind_conditions(quaternion8());
    CHECK(rk8.all_pass());
    CHECK(rk8.mixed_vacuous);
    CHECK(rk8.first_failure().empty());

    const auto rk8c2 = verify_dedekind_conditions(direct_product(quaternion8(), cyclic_group(2)));
    CHECK(rk8c2.all_pass());

    const auto rc12 = verify_dedekind_conditions(cyclic_group(12));
    CHECK(rc12.all_pass());
    CHECK_FALSE(rc12.mixed_vacuous); // has odd and even torsion, but abelian

    // K8 x C3 is Hamiltonian yet fails the conjugation-power condition.
    const auto rmix = verify_dedekind_conditions(direct_product(quaternion8(), cyclic_group(3)));
    CHECK(rmix.subgroups_normal);
    CHECK_FALSE(rmix.conj_power);
    CHECK(rmix.odd_central);
    CHECK_FALSE(rmix.mixed_abelian);
    CHECK(rmix.first_failure().find("(2)") != std::string::npos);
    CHECK_FALSE(rmix.conj_counterexample.empty());

    // S3 fails everything that can fail.
    const auto rs3 = verify_dedekind_conditions(symmetric3());
    CHECK_FALSE(rs3.subgroups_normal);
    CHECK_FALSE(rs3.conj_power);
    CHECK_FALSE(rs3.odd_central);
    CHECK_FALSE(rs3.mixed_abelian);

    // D4: no odd torsion, so (3) and (4) hold vacuously.
    const auto rd4 = verify_dedekind_conditions(dihedral_group(4));
    CHECK_FALSE(rd4.subgroups_normal);
    CHECK_FALSE(rd4.conj_power);
    CHECK(rd4.odd_central);
    CHECK(rd4.mixed_abelian);
    CHECK(rd4.mixed_vacuous);
}

TEST_CASE("finite hypercentrality catalog with independent cross-check") {
    std::vector<std::pair<GroupPtr, std::string>> table;
    for (int n = 1; n <= 16; ++n) table.emplace_back(cyclic_group(n), "Yes(a)");
    table.emplace_back(elementary_abelian_2(3), "Yes(a)");
    table.emplace_back(direct_product(cyclic_group(4), cyclic_group(2)), "Yes(a)");
    table.emplace_back(quaternion8(), "Yes(c)");
    table.emplace_back(direct_product(quaternion8(), cyclic_group(2)), "Yes(c)");
    table.emplace_back(direct_product(quaternion8(), elementary_abelian_2(2)), "Yes(c)");
    table.emplace_back(dihedral_group(4), "No");
    table.emplace_back(symmetric3(), "No");
    table.emplace_back(generalized_quaternion16(), "No");
    table.emplace_back(direct_product(quaternion8(), cyclic_group(3)), "No");
    for (const auto& [g, expected] : table) {
        const auto v = classify_hypercentral_finite(g);
        CHECK(v.answer_text() == expected);
        // Independent predicate: abelian or K8 x E2.
        const bool oracle = g->is_abelian() || decompose_k8_e2(g).ok();
        CHECK((v.answer == HCAnswer::Yes) == oracle);
        if (v.answer == HCAnswer::No) CHECK_FALSE(v.reason.empty());
        if (v.case_tag == 'c') REQUIRE(v.decomposition.has_value());
    }
}

TEST_CASE("structured classifier: the four anchor rows") {
    // (T = C4, k = 1, inversion) -> Yes(b).
    {
        const auto s = make_structured(cyclic_group(4), 1, {action_inversion(cyclic_group(4))});
        const auto v = classify_hypercentral_structured(s);
        CHECK(v.answer_text() == "Yes(b)");
        const auto chain = structured_is_hypercentral(s);
        CHECK(chain.outcome == ChainOutcome::Nilpotent);
        CHECK(chain.class_bound == 2);
    }
    // (T = C3, k = 1, inversion) -> No: the chain stalls at C3.
    {
        const auto s = make_structured(cyclic_group(3), 1, {action_inversion(cyclic_group(3))});
        const auto v = classify_hypercentral_structured(s);
        CHECK(v.answer_text() == "No");
        const auto chain = structured_is_hypercentral(s);
        CHECK(chain.outcome == ChainOutcome::No);
        CHECK(chain.chain.back().order() == 3);
    }
    // (T = K8 x C2, k = 1, conj-by-i fixing C2) -> Yes(c).
    {
        const GroupPtr t = direct_product(quaternion8(), cyclic_group(2));
        const int by = idx(t, "(i,1)");
        const auto s = make_structured(t, 1, {action_conj(t, by)});
        const auto v = classify_hypercentral_structured(s);
        CHECK(v.answer_text() == "Yes(c)");
        REQUIRE(v.action_classes.size() == 1);
        CHECK(v.action_classes[0] == K8Action::ConjByI);
    }
    // (T = K8, k = 1, i <-> j exchange) -> No despite a positive chain.
    {
        const GroupPtr k8 = quaternion8();
        std::vector<int> swap(8);
        swap[0] = 0;
        swap[static_cast<std::size_t>(idx(k8, "u"))] = idx(k8, "u");
        swap[static_cast<std::size_t>(idx(k8, "i"))] = idx(k8, "j");
        swap[static_cast<std::size_t>(idx(k8, "iu"))] = idx(k8, "ju");
        swap[static_cast<std::size_t>(idx(k8, "j"))] = idx(k8, "i");
        swap[static_cast<std::size_t>(idx(k8, "ju"))] = idx(k8, "iu");
        swap[static_cast<std::size_t>(idx(k8, "ij"))] = idx(k8, "iju");
        swap[static_cast<std::size_t>(idx(k8, "iju"))] = idx(k8, "ij");
        const auto s = make_structured(k8, 1, {swap});
        const auto chain = structured_is_hypercentral(s);
        CHECK(is_positive(chain)); // nilpotent as an abstract group...
        const auto v = classify_hypercentral_structured(s);
        CHECK(v.answer_text() == "No"); // ...but the action is not inner
        CHECK(v.reason.find("inner") != std::string::npos);
    }
}

TEST_CASE("structured classifier: edges") {
    // Trivial torsion: Z^3 is hypercentral via case (a), chain empty.
    {
        const auto s = make_structured(cyclic_group(1), 3,
                                       {action_identity(cyclic_group(1)),
                                        action_identity(cyclic_group(1)),
                                        action_identity(cyclic_group(1))});
        const auto v = classify_hypercentral_structured(s);
        CHECK(v.answer_text() == "Yes(a)");
        CHECK(structured_is_hypercentral(s).class_bound == 0);
    }
    // k = 0 reduces to the finite classifier across the catalog.
    for (const auto& g : {cyclic_group(6), quaternion8(), symmetric3(),
                          direct_product(quaternion8(), cyclic_group(2))}) {
        const auto s = make_structured(g, 0, {});
        CHECK(classify_hypercentral_structured(s).answer_text() ==
              classify_hypercentral_finite(g).answer_text());
    }
    // C4 with [inversion, identity]: still case (b).
    {
        const GroupPtr c4 = cyclic_group(4);
        const auto s = make_structured(c4, 2, {action_inversion(c4), action_identity(c4)});
        CHECK(classify_hypercentral_structured(s).answer_text() == "Yes(b)");
    }
    // An abelian 2-group with a non-inversion automorphism is not case (b):
    // C2 x C2 with the coordinate swap.
    {
        const GroupPtr e4 = elementary_abelian_2(2);
        // Elements 1, e1, e2, e1e2; swap e1 <-> e2.
        std::vector<int> swap{0, 2, 1, 3};
        const auto s = make_structured(e4, 1, {swap});
        const auto v = classify_hypercentral_structured(s);
        CHECK(v.answer_text() == "No");
    }
    // Step budget zero reports Indeterminate.
    {
        const GroupPtr c4 = cyclic_group(4);
        const auto s = make_structured(c4, 1, {action_inversion(c4)});
        CHECK(structured_is_hypercentral(s, 0).outcome == ChainOutcome::Indeterminate);
    }
}

TEST_CASE("structured validation errors") {
    const GroupPtr c4 = cyclic_group(4);
    CHECK(error_code_of([&] { make_structured(c4, 1, {{0, 1, 2}}); }) == "NotAPermutation");
    CHECK(error_code_of([&] { make_structured(c4, 1, {{0, 0, 2, 3}}); }) == "NotAPermutation");
    CHECK(error_code_of([&] { make_structured(c4, 2, {action_identity(c4)}); }) == "BadParams");
    // x -> x^2 on C4 is not injective; a permutation that is not
    // multiplicative: swap 1 and g on C4 (fixes the identity? no, must fix 0).
    CHECK(error_code_of([&] { make_structured(c4, 1, {{0, 2, 1, 3}}); }) == "NotAnAutomorphism");
    // Non-commuting actions on K8: conj-by-i and the i <-> j exchange.
    const GroupPtr k8 = quaternion8();
    std::vector<int> swap(8);
    swap[0] = 0;
    swap[static_cast<std::size_t>(idx(k8, "u"))] = idx(k8, "u");
    swap[static_cast<std::size_t>(idx(k8, "i"))] = idx(k8, "j");
    swap[static_cast<std::size_t>(idx(k8, "iu"))] = idx(k8, "ju");
    swap[static_cast<std::size_t>(idx(k8, "j"))] = idx(k8, "i");
    swap[static_cast<std::size_t>(idx(k8, "ju"))] = idx(k8, "iu");
    swap[static_cast<std::size_t>(idx(k8, "ij"))] = idx(k8, "iju");
    swap[static_cast<std::size_t>(idx(k8, "iju"))] = idx(k8, "ij");
    CHECK(error_code_of([&] {
              make_structured(k8, 2, {action_conj(k8, idx(k8, "i")), swap});
          }) == "ActionsDoNotCommute");
}

TEST_CASE("Z^2 witnesses verify for all coprime prime pairs") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (int q : {2, 3, 5, 7}) {
            if (static_cast<int>(p) == q) continue;
            const GroupPtr cq = cyclic_group(q);
            auto w = construct_z2_witness(p, cq, 1);
            CHECK(verify_z2_witness(w, 5));
            // The two units commute and have augmentation one by design;
            // spot-check the invariants directly too.
            RFRing ring(p);
            CHECK(ring.equal(augmentation(w.u1), ring.one()));
            CHECK(ring.equal(augmentation(w.u2), ring.one()));
            CHECK(gr_mul(w.u1, w.u2) == gr_mul(w.u2, w.u1));
        }
    }
}

TEST_CASE("witness construction guards and tampering") {
    CHECK(error_code_of([] { construct_z2_witness(3, cyclic_group(3), 1); }) ==
          "OrderDivisibleByChar");
    CHECK(error_code_of([] { construct_z2_witness(2, cyclic_group(3), 0); }) ==
          "DegenerateTorsionElement");
    CHECK(error_code_of([] { construct_z2_witness(9, cyclic_group(2), 1); }) == "NotPrime");

    auto w = construct_z2_witness(2, cyclic_group(3), 1);
    CHECK(error_code_of([&] { verify_z2_witness(w, 0); }) == "BadParams");
    // Tamper: u2 := u1 makes u1^1 u2^-1 collapse to 1.
    auto bad = w;
    bad.u2 = bad.u1;
    CHECK_FALSE(verify_z2_witness(bad, 2));
    // Tamper: a non-unit slot is rejected, not crashed on.
    auto bad2 = w;
    bad2.u2 = gr_add(bad2.u1, GroupRingElem<RFRing>::one(w.group, w.ring)); // aug 2 = 0 mod 2
    CHECK_FALSE(verify_z2_witness(bad2, 2));

    // Witness over a nonabelian group: the idempotent of u in K8 over GF(3).
    const GroupPtr k8 = quaternion8();
    auto wk8 = construct_z2_witness(3, k8, idx(k8, "u"));
    CHECK(verify_z2_witness(wk8, 3));
}

TEST_CASE("hyperbolicity verdicts match the rule cascade") {
    const auto q8 = finite_descriptor(quaternion8(), "Q8");
    const auto c3 = finite_descriptor(cyclic_group(3), "C3");

    // Finite K, finite G: always hyperbolic (finite unit group).
    {
        const auto v = classify_hyperbolic(FieldDescriptor::finite(2, 2), q8, About::V);
        CHECK(v.answer == HyperbolicAnswer::Hyperbolic);
        CHECK(v.rule == "R1-finite-field");
        CHECK_FALSE(v.witness.has_value());
    }
    // Transcendental K, finite G: not hyperbolic; witness iff coprime torsion.
    {
        const auto v = classify_hyperbolic(FieldDescriptor::function_field(2), q8, About::V);
        CHECK(v.answer == HyperbolicAnswer::NotHyperbolic);
        CHECK(v.rule == "R1-infinite-field");
        CHECK_FALSE(v.witness.has_value()); // Q8 is a 2-group, no coprime element
    }
    {
        const auto v = classify_hyperbolic(FieldDescriptor::function_field(2), c3, About::V);
        CHECK(v.answer == HyperbolicAnswer::NotHyperbolic);
        CHECK(v.rule == "R1-infinite-field");
        REQUIRE(v.witness.has_value());
        CHECK(v.witness->verified_bound == 5);
        CHECK(verify_z2_witness(*v.witness, 3)); // re-verify independently
    }
    {
        const auto v = classify_hyperbolic(FieldDescriptor::function_field(3), q8, About::V, 3);
        CHECK(v.answer == HyperbolicAnswer::NotHyperbolic);
        REQUIRE(v.witness.has_value()); // i has order 4, coprime to 3
        CHECK(v.witness->verified_bound == 3);
    }
    // Infinite algebraic K, finite G: not hyperbolic, no witness possible here.
    {
        const auto v = classify_hyperbolic(FieldDescriptor::algebraic_infinite(2), c3, About::V);
        CHECK(v.answer == HyperbolicAnswer::NotHyperbolic);
        CHECK(v.rule == "R1-infinite-field");
        CHECK_FALSE(v.witness.has_value());
    }
    // R2: infinite G with p'-torsion over a transcendental field.
    {
        const auto v = classify_hyperbolic(FieldDescriptor::function_field(2),
                                           infinite_descriptor(true, true, "inf"), About::V);
        CHECK(v.answer == HyperbolicAnswer::NotHyperbolic);
        CHECK(v.rule == "R2-coprime-torsion");
    }
    // R3: torsion whose coprimality is unknown still suffices when K is
    // not algebraic over its prime field.
    {
        const auto v = classify_hyperbolic(FieldDescriptor::function_field(2),
                                           infinite_descriptor(true, false, "inf"), About::V);
        CHECK(v.answer == HyperbolicAnswer::NotHyperbolic);
        CHECK(v.rule == "R3-not-algebraic");
    }
    // Infinite algebraic field, infinite group with torsion: out of scope.
    {
        const auto v = classify_hyperbolic(FieldDescriptor::algebraic_infinite(2),
                                           infinite_descriptor(true, true, "inf"), About::V);
        CHECK(v.answer == HyperbolicAnswer::Undetermined);
        CHECK(v.rule == "none");
    }
    // R4: the full unit group over any infinite field.
    {
        const auto v = classify_hyperbolic(FieldDescriptor::algebraic_infinite(2), q8, About::U);
        CHECK(v.answer == HyperbolicAnswer::NotHyperbolic);
        CHECK(v.rule == "R4-infinite-field");
        CHECK(v.about == About::U);
    }
    {
        const auto v = classify_hyperbolic(FieldDescriptor::function_field(5),
                                           infinite_descriptor(false, false, "inf"), About::U);
        CHECK(v.answer == HyperbolicAnswer::NotHyperbolic);
        CHECK(v.rule == "R4-infinite-field");
    }
    // U over a finite field is outside the cascade.
    {
        const auto v = classify_hyperbolic(FieldDescriptor::finite(2, 2), q8, About::U);
        CHECK(v.answer == HyperbolicAnswer::Undetermined);
        CHECK(v.rule == "none");
    }
    // Torsion-free infinite G, about V: undetermined.
    {
        const auto v = classify_hyperbolic(FieldDescriptor::function_field(2),
                                           infinite_descriptor(false, false, "inf"), About::V);
        CHECK(v.answer == HyperbolicAnswer::Undetermined);
    }
    // The trivial group is rejected as degenerate.
    CHECK(error_code_of([] {
              classify_hyperbolic(FieldDescriptor::finite(2, 1),
                                  finite_descriptor(cyclic_group(1), "C1"), About::V);
          }) == "TrivialGroup");
}
