#ifndef UNITRING_GROUP_RING_HPP
#define UNITRING_GROUP_RING_HPP

// Sparse group-ring elements over any coefficient ring from rings.hpp:
// sums a_g·g indexed by group-element index, with no stored zeros.
// Provides the ring operations, augmentation, the star involution
// (sum a_g g -> sum a_g g^-1), the left regular representation, exact
// inversion via the linear solvers, and the averaging idempotent used by
// the Z^2 witness construction.

#include "unitring/errors.hpp"
#include "unitring/group.hpp"
#include "unitring/matrix.hpp"
#include "unitring/rings.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace unitring {

template <class R>
class GroupRingElem {
public:
    using Value = typename R::Value;

    GroupRingElem(GroupPtr group, R ring) : group_(std::move(group)), ring_(std::move(ring)) {}

    static GroupRingElem zero(GroupPtr group, R ring) {
        return GroupRingElem(std::move(group), std::move(ring));
    }
    static GroupRingElem one(GroupPtr group, R ring) { return basis(std::move(group), std::move(ring), 0); }
    // The single group element g with coefficient 1.
    static GroupRingElem basis(GroupPtr group, R ring, int g) {
        GroupRingElem x(std::move(group), std::move(ring));
        x.set(g, x.ring_.one());
        return x;
    }

    const GroupPtr& group() const { return group_; }
    const R& ring() const { return ring_; }
    const std::map<int, Value>& coeffs() const { return c_; }

    Value coeff(int g) const {
        auto it = c_.find(g);
        return it == c_.end() ? ring_.zero() : it->second;
    }

    // Normalizing write: zero coefficients are erased, never stored.
    void set(int g, Value v) {
        if (g < 0 || g >= group_->order())
            fail_precondition("BadParams", "coefficient index outside the group");
        if (ring_.is_zero(v)) c_.erase(g);
        else c_.insert_or_assign(g, std::move(v));
    }

    void add_to(int g, const Value& v) { set(g, ring_.add(coeff(g), v)); }

    bool is_zero() const { return c_.empty(); }
    int support_size() const { return static_cast<int>(c_.size()); }

    bool equal(const GroupRingElem& o) const {
        if (c_.size() != o.c_.size()) return false;
        auto it = o.c_.begin();
        for (const auto& [g, v] : c_) {
            if (it->first != g || !ring_.equal(it->second, v)) return false;
            ++it;
        }
        return true;
    }
    bool operator==(const GroupRingElem& o) const { return equal(o); }
    bool operator!=(const GroupRingElem& o) const { return !equal(o); }

private:
    GroupPtr group_;
    R ring_;
    std::map<int, Value> c_;
};

namespace detail {
template <class R>
void require_same_context(const GroupRingElem<R>& x, const GroupRingElem<R>& y) {
    if (!x.group()->same(*y.group()) || !x.ring().same(y.ring()))
        fail_precondition("MixedContexts", "operands live in different group rings");
}
} // namespace detail

template <class R>
GroupRingElem<R> gr_add(const GroupRingElem<R>& x, const GroupRingElem<R>& y) {
    detail::require_same_context(x, y);
    GroupRingElem<R> out = x;
    for (const auto& [g, v] : y.coeffs()) out.add_to(g, v);
    return out;
}

template <class R>
GroupRingElem<R> gr_neg(const GroupRingElem<R>& x) {
    GroupRingElem<R> out(x.group(), x.ring());
    for (const auto& [g, v] : x.coeffs()) out.set(g, x.ring().neg(v));
    return out;
}

template <class R>
GroupRingElem<R> gr_sub(const GroupRingElem<R>& x, const GroupRingElem<R>& y) {
    return gr_add(x, gr_neg(y));
}

template <class R>
GroupRingElem<R> gr_scale(const typename R::Value& c, const GroupRingElem<R>& x) {
    GroupRingElem<R> out(x.group(), x.ring());
    for (const auto& [g, v] : x.coeffs()) out.set(g, x.ring().mul(c, v));
    return out;
}

// Cayley-table convolution.
template <class R>
GroupRingElem<R> gr_mul(const GroupRingElem<R>& x, const GroupRingElem<R>& y) {
    detail::require_same_context(x, y);
    GroupRingElem<R> out(x.group(), x.ring());
    const auto& g = *x.group();
    for (const auto& [a, va] : x.coeffs())
        for (const auto& [b, vb] : y.coeffs())
            out.add_to(g.mul(a, b), x.ring().mul(va, vb));
    return out;
}

// Sum of coefficients; a ring homomorphism onto the coefficients.
template <class R>
typename R::Value augmentation(const GroupRingElem<R>& x) {
    typename R::Value s = x.ring().zero();
    for (const auto& [g, v] : x.coeffs()) s = x.ring().add(s, v);
    return s;
}

// sum a_g g -> sum a_g g^-1; an involutive anti-automorphism.
template <class R>
GroupRingElem<R> star(const GroupRingElem<R>& x) {
    GroupRingElem<R> out(x.group(), x.ring());
    for (const auto& [g, v] : x.coeffs()) out.set(x.group()->inv(g), v);
    return out;
}

// g^-1·x·g for a group element g.
template <class R>
GroupRingElem<R> gr_conj(const GroupRingElem<R>& x, int g) {
    GroupRingElem<R> out(x.group(), x.ring());
    for (const auto& [m, v] : x.coeffs()) out.set(x.group()->conj(m, g), v);
    return out;
}

// Matrix of left multiplication by x in the group-element basis:
// column g holds the coordinates of x·g, so rep(x)·vec(y) = vec(x·y).
template <class R>
Matrix<R> regular_rep(const GroupRingElem<R>& x) {
    const auto& grp = *x.group();
    Matrix<R> m(x.ring(), grp.order());
    for (const auto& [a, v] : x.coeffs())
        for (int g = 0; g < grp.order(); ++g) m.at(grp.mul(a, g), g) = v;
    return m;
}

// Exact inversion through the regular representation: solve rep(x)·v = e_1.
// Over a field the system is solved by Gauss-Jordan elimination; over the
// integers fraction-free elimination decides integrality as well. The
// returned inverse is verified on both sides before being handed back.
template <class R>
std::optional<GroupRingElem<R>> try_invert(const GroupRingElem<R>& x) {
    const auto& grp = *x.group();
    const R& ring = x.ring();
    Matrix<R> rep = regular_rep(x);
    std::vector<typename R::Value> e1(static_cast<std::size_t>(grp.order()), ring.zero());
    e1[0] = ring.one();
    std::optional<std::vector<typename R::Value>> sol;
    if constexpr (R::is_field) sol = field_solve(std::move(rep), std::move(e1));
    else sol = integer_solve(std::move(rep), std::move(e1));
    if (!sol) return std::nullopt;
    GroupRingElem<R> y(x.group(), ring);
    for (int g = 0; g < grp.order(); ++g) y.set(g, (*sol)[static_cast<std::size_t>(g)]);
    GroupRingElem<R> id = GroupRingElem<R>::one(x.group(), ring);
    if (!gr_mul(x, y).equal(id) || !gr_mul(y, x).equal(id))
        throw std::logic_error("inversion postcondition failed");
    return y;
}

// x^k with k possibly negative (inverts first; NotAUnit if impossible).
template <class R>
GroupRingElem<R> gr_pow(const GroupRingElem<R>& x, long long k) {
    GroupRingElem<R> base = x;
    if (k < 0) {
        auto inv = try_invert(x);
        if (!inv) fail_precondition("NotAUnit", "negative power of a non-unit");
        base = *inv;
        k = -k;
    }
    GroupRingElem<R> acc = GroupRingElem<R>::one(x.group(), x.ring());
    while (k > 0) {
        if (k & 1) acc = gr_mul(acc, base);
        base = gr_mul(base, base);
        k >>= 1;
    }
    return acc;
}

// u^-1·v^-1·u·v; both arguments must be units.
template <class R>
GroupRingElem<R> gr_commutator(const GroupRingElem<R>& u, const GroupRingElem<R>& v) {
    auto ui = try_invert(u);
    auto vi = try_invert(v);
    if (!ui || !vi) fail_precondition("NotAUnit", "commutator of non-units");
    return gr_mul(gr_mul(*ui, *vi), gr_mul(u, v));
}

// True iff x = c·g for a single group element g and a unit scalar c
// (over the integers: c = +-1; over a field: any nonzero c).
template <class R>
bool is_trivial_unit(const GroupRingElem<R>& x) {
    return x.support_size() == 1 && x.ring().is_unit(x.coeffs().begin()->second);
}

// Averaging idempotent e = o(g)^-1·(1 + g + ... + g^{o(g)-1}). Requires a
// coefficient ring of characteristic p with p not dividing o(g); the
// characteristic-zero variant (denominators in Q) is deliberately absent.
template <class R>
GroupRingElem<R> hat_idempotent(const GroupPtr& group, R ring, int g) {
    if (ring.characteristic() == 0)
        fail_precondition("CharacteristicZero",
                          "averaging idempotent needs positive characteristic");
    int o = group->element_order(g);
    if (o % static_cast<int>(ring.characteristic()) == 0)
        fail_precondition("OrderDivisibleByChar",
                          "element order " + std::to_string(o) +
                              " is divisible by the characteristic");
    typename R::Value inv_o = ring.inv(ring.from_int(o));
    GroupRingElem<R> e(group, ring);
    int x = 0;
    for (int k = 0; k < o; ++k) {
        e.add_to(x, inv_o);
        x = group->mul(x, g);
    }
    return e;
}

} // namespace unitring

#endif
