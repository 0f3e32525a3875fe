#include "unitring/group.hpp"

#include "unitring/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace unitring {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> names)
    : n_(static_cast<int>(table.size())), table_(std::move(table)), names_(std::move(names)) {
    validate();
    inv_.assign(static_cast<std::size_t>(n_), -1);
    for (int g = 0; g < n_; ++g) {
        for (int h = 0; h < n_; ++h) {
            if (mul(g, h) == 0 && mul(h, g) == 0) {
                inv_[static_cast<std::size_t>(g)] = h;
                break;
            }
        }
        if (inv_[static_cast<std::size_t>(g)] < 0)
            fail_validation("NoInverse", "element " + std::to_string(g) + " has no inverse");
    }
    if (names_.empty()) {
        names_.reserve(static_cast<std::size_t>(n_));
        names_.push_back("1");
        for (int g = 1; g < n_; ++g) names_.push_back("x" + std::to_string(g));
    }
    if (static_cast<int>(names_.size()) != n_)
        fail_validation("BadParams", "label count does not match group order");
    if (names_[0] != "1") fail_validation("BadParams", "identity label must be \"1\"");
}

void FiniteGroup::validate() const {
    if (n_ == 0) fail_validation("NoIdentity", "empty table");
    if (n_ > kMaxOrder)
        fail_validation("BadParams",
                        "group order " + std::to_string(n_) + " exceeds the bound " +
                            std::to_string(kMaxOrder));
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n_) fail_validation("BadParams", "table is not square");
        for (int v : row)
            if (v < 0 || v >= n_) fail_validation("BadParams", "table entry out of range");
    }
    for (int g = 0; g < n_; ++g)
        if (mul(0, g) != g || mul(g, 0) != g)
            fail_validation("NoIdentity", "element 0 is not a two-sided identity");
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    fail_validation("NotAssociative",
                                    "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                        std::to_string(c) + ") violates associativity");
}

GroupPtr FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                 std::vector<std::string> names) {
    return GroupPtr(new FiniteGroup(std::move(table), std::move(names)));
}

std::optional<int> FiniteGroup::index_of(const std::string& name) const {
    for (int g = 0; g < n_; ++g)
        if (names_[static_cast<std::size_t>(g)] == name) return g;
    return std::nullopt;
}

int FiniteGroup::element_order(int g) const {
    int k = 1, x = g;
    while (x != 0) {
        x = mul(x, g);
        ++k;
    }
    return k;
}

int FiniteGroup::exponent() const {
    long long e = 1;
    for (int g = 0; g < n_; ++g) e = std::lcm(e, static_cast<long long>(element_order(g)));
    return static_cast<int>(e);
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

bool FiniteGroup::is_2_group() const {
    int m = n_;
    while (m % 2 == 0) m /= 2;
    return m == 1;
}

bool Subgroup::contains(int g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

Subgroup make_subgroup(GroupPtr parent, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    Subgroup h{std::move(parent), std::move(elements)};
    if (h.elements.empty() || h.elements.front() != 0)
        fail_validation("NoIdentity", "subgroup must contain the identity");
    for (int a : h.elements) {
        if (a < 0 || a >= h.parent->order())
            fail_validation("BadParams", "subgroup element out of range");
        if (!h.contains(h.parent->inv(a)))
            fail_validation("NoInverse", "subgroup not closed under inverses");
        for (int b : h.elements)
            if (!h.contains(h.parent->mul(a, b)))
                fail_validation("BadParams", "subgroup not closed under multiplication");
    }
    return h;
}

Subgroup subgroup_closure(GroupPtr parent, const std::vector<int>& generators) {
    std::set<int> seen{0};
    seen.insert(generators.begin(), generators.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(seen.begin(), seen.end());
        for (int a : cur) {
            if (seen.insert(parent->inv(a)).second) grew = true;
            for (int b : cur)
                if (seen.insert(parent->mul(a, b)).second) grew = true;
        }
    }
    return make_subgroup(std::move(parent), std::vector<int>(seen.begin(), seen.end()));
}

Subgroup trivial_subgroup(GroupPtr parent) { return make_subgroup(std::move(parent), {0}); }

Subgroup full_subgroup(GroupPtr parent) {
    std::vector<int> all(static_cast<std::size_t>(parent->order()));
    std::iota(all.begin(), all.end(), 0);
    return make_subgroup(std::move(parent), std::move(all));
}

bool is_normal(const Subgroup& h) {
    const auto& g = *h.parent;
    for (int x : h.elements)
        for (int s = 0; s < g.order(); ++s)
            if (!h.contains(g.conj(x, s))) return false;
    return true;
}

namespace {

std::vector<std::vector<int>> empty_table(int n) {
    return std::vector<std::vector<int>>(static_cast<std::size_t>(n),
                                         std::vector<int>(static_cast<std::size_t>(n), 0));
}

} // namespace

GroupPtr cyclic_group(int n) {
    if (n < 1) fail_validation("BadParams", "cyclic group order must be positive");
    auto t = empty_table(n);
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
        names.push_back(a == 0 ? "1" : (a == 1 ? "g" : "g^" + std::to_string(a)));
    }
    return FiniteGroup::from_table(std::move(t), std::move(names));
}

GroupPtr dihedral_group(int n) {
    if (n < 1) fail_validation("BadParams", "dihedral parameter must be positive");
    // Elements s^b r^a, index = b*n + a, with s r s = r^-1.
    int order = 2 * n;
    auto t = empty_table(order);
    auto idx = [n](int b, int a) { return b * n + ((a % n) + n) % n; };
    for (int b1 = 0; b1 < 2; ++b1)
        for (int a1 = 0; a1 < n; ++a1)
            for (int b2 = 0; b2 < 2; ++b2)
                for (int a2 = 0; a2 < n; ++a2) {
                    // (s^b1 r^a1)(s^b2 r^a2) = s^(b1+b2) r^(±a1 + a2)
                    int a = (b2 == 0) ? a1 + a2 : -a1 + a2;
                    t[static_cast<std::size_t>(idx(b1, a1))][static_cast<std::size_t>(idx(b2, a2))] =
                        idx((b1 + b2) % 2, a);
                }
    std::vector<std::string> names;
    for (int b = 0; b < 2; ++b)
        for (int a = 0; a < n; ++a) {
            std::string s = b ? "s" : "";
            if (a == 1) s += "r";
            else if (a > 1) s += "r^" + std::to_string(a);
            names.push_back(s.empty() ? "1" : s);
        }
    return FiniteGroup::from_table(std::move(t), std::move(names));
}

GroupPtr quaternion8() {
    // Index = 2*basis + sign with basis 0..3 <-> 1,i,j,k and k = ij.
    // Signed quaternion-unit multiplication gives i^2 = j^2 = u, ji = iju.
    static const int basis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    auto t = empty_table(8);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ba = a / 2, sa = a % 2, bb = b / 2, sb = b % 2;
            int basis = basis_mul[ba][bb];
            int sign = (sa + sb + sign_mul[ba][bb]) % 2;
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 2 * basis + sign;
        }
    return FiniteGroup::from_table(std::move(t), {"1", "u", "i", "iu", "j", "ju", "ij", "iju"});
}

GroupPtr generalized_quaternion16() {
    // <a, b | a^8 = 1, b^2 = a^4, b^-1 a b = a^-1>; index = e*8 + k for a^k b^e.
    auto t = empty_table(16);
    auto idx = [](int e, int k) { return e * 8 + ((k % 8) + 8) % 8; };
    for (int e1 = 0; e1 < 2; ++e1)
        for (int k1 = 0; k1 < 8; ++k1)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int k2 = 0; k2 < 8; ++k2) {
                    // (a^k1 b^e1)(a^k2 b^e2): b a^k = a^-k b, b^2 = a^4.
                    int k = (e1 == 0) ? k1 + k2 : k1 - k2;
                    int e = e1 + e2;
                    if (e == 2) k += 4;
                    t[static_cast<std::size_t>(idx(e1, k1))][static_cast<std::size_t>(idx(e2, k2))] =
                        idx(e % 2, k);
                }
    std::vector<std::string> names;
    for (int e = 0; e < 2; ++e)
        for (int k = 0; k < 8; ++k) {
            std::string s;
            if (k == 1) s = "a";
            else if (k > 1) s = "a^" + std::to_string(k);
            if (e) s += "b";
            names.push_back(s.empty() ? "1" : s);
        }
    return FiniteGroup::from_table(std::move(t), std::move(names));
}

GroupPtr elementary_abelian_2(int k) {
    if (k < 0 || k > 9) fail_validation("BadParams", "elementary abelian rank out of range");
    int n = 1 << k;
    auto t = empty_table(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a ^ b;
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        std::string s;
        for (int bit = 0; bit < k; ++bit)
            if (a & (1 << bit)) s += "e" + std::to_string(bit + 1);
        names.push_back(s.empty() ? "1" : s);
    }
    return FiniteGroup::from_table(std::move(t), std::move(names));
}

GroupPtr symmetric3() {
    // Permutations of {0,1,2}: r = (012) rotation, s = (01) swap.
    static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                    {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    auto compose_index = [](int a, int b) {
        int c[3];
        for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
        for (int i = 0; i < 6; ++i)
            if (c[0] == perms[i][0] && c[1] == perms[i][1] && c[2] == perms[i][2]) return i;
        return -1;
    };
    auto t = empty_table(6);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = compose_index(a, b);
    return FiniteGroup::from_table(std::move(t), {"1", "r", "r^2", "s", "sr", "sr^2"});
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
    int na = a->order(), nb = b->order();
    if (na * nb > FiniteGroup::kMaxOrder)
        fail_validation("BadParams", "direct product exceeds the order bound");
    auto t = empty_table(na * nb);
    for (int x1 = 0; x1 < na; ++x1)
        for (int y1 = 0; y1 < nb; ++y1)
            for (int x2 = 0; x2 < na; ++x2)
                for (int y2 = 0; y2 < nb; ++y2)
                    t[static_cast<std::size_t>(x1 * nb + y1)][static_cast<std::size_t>(x2 * nb + y2)] =
                        a->mul(x1, x2) * nb + b->mul(y1, y2);
    std::vector<std::string> names;
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) {
            if (x == 0 && y == 0) names.push_back("1");
            else names.push_back("(" + a->name(x) + "," + b->name(y) + ")");
        }
    return FiniteGroup::from_table(std::move(t), std::move(names));
}

GroupPtr builtin(const std::string& name, const std::vector<int>& params) {
    auto want = [&](std::size_t k) {
        if (params.size() != k) fail_validation("BadParams", "wrong parameter count for " + name);
    };
    if (name == "cyclic") {
        want(1);
        return cyclic_group(params[0]);
    }
    if (name == "dihedral") {
        want(1);
        return dihedral_group(params[0]);
    }
    if (name == "quaternion8") {
        want(0);
        return quaternion8();
    }
    if (name == "genquaternion16") {
        want(0);
        return generalized_quaternion16();
    }
    if (name == "elemabelian2") {
        want(1);
        return elementary_abelian_2(params[0]);
    }
    if (name == "symmetric3") {
        want(0);
        return symmetric3();
    }
    fail_validation("UnknownName", "no builtin group named " + name);
}

Subgroup centralizer(const GroupPtr& g, const std::vector<int>& s) {
    std::vector<int> elems;
    for (int x = 0; x < g->order(); ++x) {
        bool commutes = true;
        for (int y : s)
            if (g->mul(x, y) != g->mul(y, x)) {
                commutes = false;
                break;
            }
        if (commutes) elems.push_back(x);
    }
    return make_subgroup(g, std::move(elems));
}

Subgroup center(const GroupPtr& g) {
    std::vector<int> all(static_cast<std::size_t>(g->order()));
    std::iota(all.begin(), all.end(), 0);
    return centralizer(g, all);
}

Quotient quotient_group(const GroupPtr& g, const Subgroup& n) {
    if (!is_normal(n)) fail_precondition("BadParams", "quotient by a non-normal subgroup");
    int order = g->order();
    std::vector<int> coset_of(static_cast<std::size_t>(order), -1);
    std::vector<int> reps;
    for (int x = 0; x < order; ++x) {
        if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(x); // x is minimal in its coset by scan order
        for (int h : n.elements) coset_of[static_cast<std::size_t>(g->mul(x, h))] = c;
    }
    int m = static_cast<int>(reps.size());
    std::vector<std::vector<int>> t(static_cast<std::size_t>(m),
                                    std::vector<int>(static_cast<std::size_t>(m), 0));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                coset_of[static_cast<std::size_t>(g->mul(reps[static_cast<std::size_t>(a)],
                                                         reps[static_cast<std::size_t>(b)]))];
    std::vector<std::string> names;
    names.push_back("1");
    for (int c = 1; c < m; ++c) names.push_back("[" + g->name(reps[static_cast<std::size_t>(c)]) + "]");
    return {FiniteGroup::from_table(std::move(t), std::move(names)), std::move(coset_of)};
}

CentralSeries upper_central_series(const GroupPtr& g) {
    CentralSeries out;
    out.series.push_back(trivial_subgroup(g));
    while (true) {
        const Subgroup& z = out.series.back();
        if (z.order() == g->order()) {
            out.nilpotency_class = static_cast<int>(out.series.size()) - 1;
            return out;
        }
        Quotient q = quotient_group(g, z);
        Subgroup zq = center(q.group);
        std::vector<int> next;
        for (int x = 0; x < g->order(); ++x)
            if (zq.contains(q.coset_of[static_cast<std::size_t>(x)])) next.push_back(x);
        if (static_cast<int>(next.size()) == z.order()) return out; // stable below G
        out.series.push_back(make_subgroup(g, std::move(next)));
    }
}

bool all_subgroups_normal(const GroupPtr& g) {
    // A group is Dedekind iff every cyclic subgroup is normal, and the
    // conjugate of <x> is <x^h>, so membership of generators suffices.
    for (int x = 0; x < g->order(); ++x) {
        Subgroup cyc = subgroup_closure(g, {x});
        for (int h = 0; h < g->order(); ++h)
            if (!cyc.contains(g->conj(x, h))) return false;
    }
    return true;
}

K8E2Result decompose_k8_e2(const GroupPtr& g) {
    int n = g->order();
    if (n % 8 != 0) return {std::nullopt, "order is not divisible by 8"};

    std::vector<int> order4;
    for (int x = 0; x < n; ++x)
        if (g->element_order(x) == 4) order4.push_back(x);

    std::optional<Subgroup> k8;
    int i_found = -1, j_found = -1;
    for (int i : order4) {
        int u = g->mul(i, i);
        for (int j : order4) {
            if (g->mul(j, j) != u) continue;
            if (g->conj(i, j) != g->inv(i)) continue; // j^-1 i j = i^-1
            Subgroup h = subgroup_closure(g, {i, j});
            if (h.order() != 8) continue;
            k8 = std::move(h);
            i_found = i;
            j_found = j;
            break;
        }
        if (k8) break;
    }
    if (!k8) return {std::nullopt, "no quaternion subgroup of order 8"};

    // Greedy complement: central involutions avoiding the found K8.
    Subgroup z = center(g);
    std::vector<int> e2{0};
    auto in_e2 = [&e2](int x) { return std::binary_search(e2.begin(), e2.end(), x); };
    for (int zc : z.elements) {
        if (zc == 0 || g->element_order(zc) != 2) continue;
        if (in_e2(zc)) continue;
        bool clash = false;
        for (int e : e2)
            if (k8->contains(g->mul(e, zc)) && g->mul(e, zc) != 0) {
                clash = true;
                break;
            }
        if (clash || k8->contains(zc)) continue;
        std::vector<int> grown;
        grown.reserve(e2.size() * 2);
        for (int e : e2) {
            grown.push_back(e);
            grown.push_back(g->mul(e, zc));
        }
        std::sort(grown.begin(), grown.end());
        e2 = std::move(grown);
    }
    if (static_cast<int>(e2.size()) * 8 != n)
        return {std::nullopt, "no central elementary-abelian complement of the right order"};

    // K8 x E2 -> G by multiplication must be a bijection.
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int k : k8->elements)
        for (int e : e2) {
            int prod = g->mul(k, e);
            if (hit[static_cast<std::size_t>(prod)])
                return {std::nullopt, "product map K8 x E2 -> G is not injective"};
            hit[static_cast<std::size_t>(prod)] = 1;
        }

    Subgroup e2_sub = make_subgroup(g, e2);
    return {K8E2Decomposition{std::move(*k8), std::move(e2_sub), i_found, j_found}, ""};
}

QuaternionBasis quaternion_basis(const Subgroup& k8) {
    const auto& g = *k8.parent;
    int i = -1, j = -1;
    for (int x : k8.elements)
        if (g.element_order(x) == 4) {
            i = x;
            break;
        }
    if (i < 0) fail_precondition("BadParams", "subgroup has no element of order 4");
    Subgroup gen_i = subgroup_closure(k8.parent, {i});
    for (int x : k8.elements)
        if (g.element_order(x) == 4 && !gen_i.contains(x)) {
            j = x;
            break;
        }
    if (j < 0 || k8.order() != 8 || g.mul(j, j) != g.mul(i, i) || g.conj(i, j) != g.inv(i))
        fail_precondition("BadParams", "subgroup is not quaternion of order 8");
    return {i, j, g.mul(i, i)};
}

std::string to_string(K8Action a) {
    switch (a) {
    case K8Action::Identity: return "identity";
    case K8Action::ConjByI: return "conj-by-i";
    case K8Action::ConjByJ: return "conj-by-j";
    case K8Action::ConjByIJ: return "conj-by-ij";
    case K8Action::NotInner: return "not-inner";
    }
    return "?";
}

K8Action k8_action_class(const Subgroup& k8, const std::vector<int>& phi) {
    const auto& g = *k8.parent;
    if (static_cast<int>(phi.size()) != g.order())
        fail_precondition("NotAnAutomorphism", "map is not defined on the whole parent group");
    for (int x : k8.elements) {
        int px = phi[static_cast<std::size_t>(x)];
        if (!k8.contains(px))
            fail_precondition("NotAnAutomorphism", "map does not send K8 to itself");
        for (int y : k8.elements)
            if (phi[static_cast<std::size_t>(g.mul(x, y))] != g.mul(px, phi[static_cast<std::size_t>(y)]))
                fail_precondition("NotAnAutomorphism", "map is not multiplicative on K8");
    }
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (int x : k8.elements) {
        int px = phi[static_cast<std::size_t>(x)];
        if (seen[static_cast<std::size_t>(px)])
            fail_precondition("NotAnAutomorphism", "map is not injective on K8");
        seen[static_cast<std::size_t>(px)] = 1;
    }

    QuaternionBasis b = quaternion_basis(k8);
    int iu = g.mul(b.i, b.u), ju = g.mul(b.j, b.u);
    int pi = phi[static_cast<std::size_t>(b.i)], pj = phi[static_cast<std::size_t>(b.j)];
    if (pi == b.i && pj == b.j) return K8Action::Identity;
    if (pi == b.i && pj == ju) return K8Action::ConjByI;
    if (pi == iu && pj == b.j) return K8Action::ConjByJ;
    if (pi == iu && pj == ju) return K8Action::ConjByIJ;
    return K8Action::NotInner;
}

} // namespace unitring
