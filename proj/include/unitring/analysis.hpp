#ifndef UNITRING_ANALYSIS_HPP
#define UNITRING_ANALYSIS_HPP

// The decision layer: enumeration of the augmentation-one unit group V(KG)
// over a finite field, bounded unit searches in ZG, the normality and
// centrality conditions a hypercentral unit group forces on the underlying
// group, the hypercentrality classifiers (finite and structured inputs),
// the hyperbolicity rule cascade, and explicit Z^2 witnesses inside
// GF(p)(t)G for the non-hyperbolicity certificates.

#include "unitring/field_descriptor.hpp"
#include "unitring/format.hpp"
#include "unitring/group.hpp"
#include "unitring/group_ring.hpp"
#include "unitring/structured.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace unitring {

// ---------- V(KG) enumeration ----------

struct EnumeratedUnitGroup {
    FFRing ring;
    GroupPtr base_group;
    std::vector<GroupRingElem<FFRing>> carrier; // carrier[0] = 1
    GroupPtr as_group;                          // Cayley table over carrier indices
};

// Enumerates all augmentation-one elements of KG (|K|^(|G|-1) candidates:
// the non-identity coefficients run free, the identity coefficient is
// forced), keeps those try_invert accepts, and materializes the group.
// When G is a p-group in characteristic p every candidate must turn out to
// be a unit; that count is asserted, not assumed. BudgetExceeded when the
// candidate count exceeds `budget` or the unit group outgrows the Cayley
// table bound.
EnumeratedUnitGroup enumerate_v_kg(const FFRing& k, const GroupPtr& g, std::uint64_t budget);

struct UnitGroupStructure {
    int order = 0;
    int center_order = 0;
    std::vector<int> series_orders; // |Z_0|, |Z_1|, ...
    std::optional<int> nilpotency_class;
};

UnitGroupStructure unit_group_structure(const EnumeratedUnitGroup& v);

// ---------- bounded unit search in ZG ----------

// All x in ZG with every coefficient in [-B, B], augmentation 1 and a
// verified two-sided inverse, in lexicographic coefficient-vector order
// (coefficient of element 0 most significant, values ascending from -B).
// BudgetExceeded when (2B+1)^|G| > budget.
std::vector<GroupRingElem<IntRing>> bounded_unit_search_zg(const GroupPtr& g, int bound,
                                                           std::uint64_t budget);

// ---------- necessary conditions on the group ----------

// The four conditions a hypercentral unit group forces on G; each failed
// item carries a human-readable counterexample.
struct DedekindReport {
    bool subgroups_normal = false;    // (1) every subgroup normal
    bool conj_power = false;          // (2) g^-1 t g in {t, t^-1}
    bool odd_central = false;         // (3) odd-order elements central
    bool mixed_abelian = false;       // (4) odd and even torsion together force abelian
    bool mixed_vacuous = false;       // (4) holds vacuously
    std::string normal_counterexample;
    std::string conj_counterexample;
    std::string odd_counterexample;
    std::string mixed_counterexample;

    bool all_pass() const { return subgroups_normal && conj_power && odd_central && mixed_abelian; }
    // Empty when all pass; otherwise names the first failed condition.
    std::string first_failure() const;
};

DedekindReport verify_dedekind_conditions(const GroupPtr& g);

// ---------- hypercentrality classification ----------

enum class HCAnswer { Yes, No, Indeterminate };

struct HypercentralVerdict {
    HCAnswer answer = HCAnswer::No;
    char case_tag = 0;  // 'a' | 'b' | 'c' when answer == Yes
    std::string reason; // failure / collapse note
    std::optional<K8E2Decomposition> decomposition; // case (c) evidence
    std::vector<K8Action> action_classes;           // per-generator tags (structured case c)

    std::string answer_text() const; // "Yes(a)", "No", "Indeterminate"
};

// Finite input: the whole group is torsion, so only cases (a) and (c) can
// occur; the verdict's reason records this collapse for case-(b)-shaped
// questions. TrivialGroup stays accepted here (it is abelian).
HypercentralVerdict classify_hypercentral_finite(const GroupPtr& g);

// Structured input G = Z^k x| T: positive chain verdict plus one of
//  (a) T abelian and every action trivial,
//  (b) T an abelian 2-group and every action identity or global inversion,
//  (c) T = K8 x E2 with E2 fixed pointwise and every action inner on K8.
HypercentralVerdict classify_hypercentral_structured(const StructuredGroup& s);

// ---------- hyperbolicity ----------

enum class About { V, U };
std::string to_string(About a);

struct GroupDescriptor {
    bool finite = true;
    GroupPtr group;                    // finite case
    bool has_torsion = false;          // infinite case
    bool has_p_prime_torsion = false;  // infinite case: torsion coprime to char K
    std::string text;                  // original spec text, echoed in reports
};

inline GroupDescriptor finite_descriptor(GroupPtr g, std::string text = "") {
    return {true, std::move(g), false, false, std::move(text)};
}
GroupDescriptor infinite_descriptor(bool has_torsion, bool has_p_prime_torsion,
                                    std::string text = "");

struct Z2Witness {
    RFRing ring;
    GroupPtr group;
    GroupRingElem<RFRing> u1, u2;
    int g0 = 0;
    int verified_bound = 0; // largest N verify_z2_witness has confirmed
};

// Over GF(p)(t)G with e the averaging idempotent of g0:
//   u1 = e + t(1-e),  u2 = e + (1+t)(1-e).
// Errors: DegenerateTorsionElement (g0 = 1), OrderDivisibleByChar.
Z2Witness construct_z2_witness(std::uint32_t p, const GroupPtr& g, int g0);

// Bounded certificate: augmentations are 1, the pair commutes, and
// u1^a u2^b != 1 on [-N,N]^2 minus the origin. Precondition: N >= 1.
bool verify_z2_witness(const Z2Witness& w, int n);

enum class HyperbolicAnswer { Hyperbolic, NotHyperbolic, Undetermined };
std::string to_string(HyperbolicAnswer a);

struct HyperbolicVerdict {
    HyperbolicAnswer answer = HyperbolicAnswer::Undetermined;
    About about = About::V;
    std::string rule;               // which cascade rule fired ("none" otherwise)
    std::vector<std::string> notes; // necessary conditions that passed, etc.
    std::optional<Z2Witness> witness;
};

// First-match rule cascade (V = augmentation-one units, U = all units):
//   R1  V, finite G:   Hyperbolic iff K finite; over a transcendental K a
//                      verified Z^2 witness is attached when some nontrivial
//                      element has order coprime to char K.
//   R2  V, infinite G with torsion coprime to char K, tr.deg(K) >= 1.
//   R3  V, G with torsion, K not algebraic over its prime field.
//   R4  U, K infinite.
// Anything else is Undetermined. TrivialGroup is rejected.
HyperbolicVerdict classify_hyperbolic(const FieldDescriptor& k, const GroupDescriptor& g,
                                      About about, int witness_bound = 5);

} // namespace unitring

#endif
