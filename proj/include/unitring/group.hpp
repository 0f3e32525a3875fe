#ifndef UNITRING_GROUP_HPP
#define UNITRING_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace unitring {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group as a validated Cayley table over element indices 0..n-1.
// Index 0 is the two-sided identity; associativity, identity and inverses
// are all verified at construction. Desk-scale only: order is capped so the
// cubic associativity sweep and quotient materialization stay cheap.
class FiniteGroup {
public:
    static constexpr int kMaxOrder = 512;

    // Validates and takes ownership. `names` may be empty (labels are then
    // synthesized as "1", "x1", "x2", ...); names[0] must be "1".
    static GroupPtr from_table(std::vector<std::vector<int>> table,
                               std::vector<std::string> names = {});

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
    int conj(int x, int g) const { return mul(mul(inv(g), x), g); } // g^-1 x g
    int commutator(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

    const std::vector<std::vector<int>>& table() const { return table_; }
    const std::string& name(int g) const { return names_[static_cast<std::size_t>(g)]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> index_of(const std::string& name) const;

    int element_order(int g) const;
    int exponent() const;
    bool is_abelian() const;
    bool is_2_group() const; // |G| is a power of two

    bool same(const FiniteGroup& o) const { return this == &o || table_ == o.table_; }

private:
    FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> names);
    void validate() const;

    int n_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    std::vector<std::string> names_;
};

inline GroupPtr group_from_table(std::vector<std::vector<int>> table,
                                 std::vector<std::string> names = {}) {
    return FiniteGroup::from_table(std::move(table), std::move(names));
}

// Subset of a parent group that is itself a group: sorted indices, always
// containing 0, closed under the table and inverses (checked on creation).
struct Subgroup {
    GroupPtr parent;
    std::vector<int> elements;

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(int g) const;
    bool operator==(const Subgroup& o) const {
        return parent->same(*o.parent) && elements == o.elements;
    }
};

Subgroup make_subgroup(GroupPtr parent, std::vector<int> elements);
Subgroup subgroup_closure(GroupPtr parent, const std::vector<int>& generators);
Subgroup trivial_subgroup(GroupPtr parent);
Subgroup full_subgroup(GroupPtr parent);
bool is_normal(const Subgroup& h);

// Builtin catalog.
GroupPtr cyclic_group(int n);
GroupPtr dihedral_group(int n); // order 2n, n >= 1
GroupPtr quaternion8();         // labels 1,u,i,iu,j,ju,ij,iju with i^2=j^2=u
GroupPtr generalized_quaternion16();
GroupPtr elementary_abelian_2(int k);
GroupPtr symmetric3();
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
// name in {cyclic, dihedral, quaternion8, genquaternion16, elemabelian2, symmetric3}
GroupPtr builtin(const std::string& name, const std::vector<int>& params = {});

Subgroup center(const GroupPtr& g);
Subgroup centralizer(const GroupPtr& g, const std::vector<int>& s);

// Quotient by a normal subgroup, materialized as a fresh Cayley table on
// cosets. Coset 0 is N itself; cosets are ordered by minimal element.
struct Quotient {
    GroupPtr group;
    std::vector<int> coset_of; // parent element -> coset index
};
Quotient quotient_group(const GroupPtr& g, const Subgroup& n);

// Z_0 = 1 <= Z_1 <= ... computed via quotient tables until stable.
// nilpotency_class is empty when the series stops short of G.
struct CentralSeries {
    std::vector<Subgroup> series;
    std::optional<int> nilpotency_class;
};
CentralSeries upper_central_series(const GroupPtr& g);

// Dedekind test: every cyclic subgroup normal (sufficient for all subgroups).
bool all_subgroups_normal(const GroupPtr& g);

// G = K8 x E2 recognition. On success `quaternion` is a Q8 subgroup found by
// scanning ordered pairs of order-4 elements (first hit wins) and
// `elementary` a central elementary-abelian complement built greedily in
// index order. On failure, `failure` names the condition that failed.
struct K8E2Decomposition {
    Subgroup quaternion;
    Subgroup elementary;
    int i_index;
    int j_index;
};
struct K8E2Result {
    std::optional<K8E2Decomposition> decomposition;
    std::string failure;
    bool ok() const { return decomposition.has_value(); }
};
K8E2Result decompose_k8_e2(const GroupPtr& g);

// Canonical (i, j, u) basis of a quaternion subgroup: i is the lowest-index
// element of order 4, j the lowest-index order-4 element outside <i>.
struct QuaternionBasis {
    int i, j, u;
};
QuaternionBasis quaternion_basis(const Subgroup& k8);

// Which of the four inner automorphisms of K8 a map induces, if any.
enum class K8Action { Identity, ConjByI, ConjByJ, ConjByIJ, NotInner };
std::string to_string(K8Action a);

// `phi` maps parent indices to parent indices; it must restrict to an
// automorphism of k8 (NotAnAutomorphism otherwise).
K8Action k8_action_class(const Subgroup& k8, const std::vector<int>& phi);

} // namespace unitring

#endif
