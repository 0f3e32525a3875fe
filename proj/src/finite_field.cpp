#include "unitring/finite_field.hpp"

#include "unitring/bigint.hpp"
#include "unitring/errors.hpp"

#include <algorithm>
#include <cmath>

namespace unitring {

namespace {

// Enumerate monic degree-d polynomials by ascending lexicographic
// (c_0, ..., c_{d-1}) tuple; index is the base-p encoding of that tuple.
Poly monic_by_index(std::uint32_t p, std::uint32_t d, std::uint64_t index) {
    std::vector<std::uint32_t> c(d + 1, 0);
    // Lexicographic order on (c_0, ..., c_{d-1}) means c_0 is the most
    // significant digit of the index.
    for (std::uint32_t i = 0; i < d; ++i) {
        std::uint64_t weight = 1;
        for (std::uint32_t j = i + 1; j < d; ++j) weight *= p;
        c[i] = static_cast<std::uint32_t>(index / weight % p);
    }
    c[d] = 1;
    return Poly(p, std::move(c));
}

std::uint64_t pow_u64(std::uint32_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r *= b;
    return r;
}

} // namespace

bool poly_is_irreducible(const Poly& f) {
    int d = f.degree();
    if (d < 1) return false;
    std::uint32_t p = f.p();
    for (int e = 1; 2 * e <= d; ++e) {
        std::uint64_t count = pow_u64(p, static_cast<std::uint32_t>(e));
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g = monic_by_index(p, static_cast<std::uint32_t>(e), idx);
            if (f.divmod(g).second.is_zero()) return false;
        }
    }
    return true;
}

FFContext::FFContext(std::uint32_t p, std::uint32_t n, Poly modulus)
    : p_(p), n_(n), q_(pow_u64(p, n)), modulus_(std::move(modulus)) {}

std::shared_ptr<const FFContext> FFContext::make(std::uint32_t p, std::uint32_t n) {
    if (!is_prime_u32(p)) fail_validation("NotPrime", std::to_string(p) + " is not prime");
    if (n < 1) fail_validation("BadParams", "extension degree must be >= 1");
    double bits = n * std::log2(static_cast<double>(p));
    if (bits > 20.0001 || pow_u64(p, n) > kSizeBudget)
        fail_budget("field size " + std::to_string(p) + "^" + std::to_string(n) +
                    " exceeds the 2^20 construction bound");
    std::uint64_t tuples = pow_u64(p, n);
    for (std::uint64_t idx = 0; idx < tuples; ++idx) {
        Poly f = monic_by_index(p, n, idx);
        if (poly_is_irreducible(f))
            return std::shared_ptr<const FFContext>(new FFContext(p, n, std::move(f)));
    }
    fail_validation("NoIrreducible", "no monic irreducible found (unreachable for prime p)");
}

FFElement FFContext::zero() const {
    return FFElement(shared_from_this(), std::vector<std::uint32_t>(n_, 0));
}

FFElement FFContext::one() const { return from_int(1); }

FFElement FFContext::generator() const {
    std::vector<std::uint32_t> c(n_, 0);
    if (n_ >= 2) c[1] = 1;
    return FFElement(shared_from_this(), std::move(c));
}

FFElement FFContext::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    std::vector<std::uint32_t> c(n_, 0);
    c[0] = static_cast<std::uint32_t>(r);
    return FFElement(shared_from_this(), std::move(c));
}

FFElement FFContext::element(std::uint64_t index) const {
    if (index >= q_) fail_precondition("BadParams", "field element index out of range");
    std::vector<std::uint32_t> c(n_, 0);
    for (std::uint32_t i = 0; i < n_; ++i) {
        c[i] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return FFElement(shared_from_this(), std::move(c));
}

std::uint64_t FFContext::index_of(const FFElement& a) const {
    std::uint64_t idx = 0;
    for (std::uint32_t i = n_; i-- > 0;) idx = idx * p_ + a.coeffs()[i];
    return idx;
}

namespace {

void check_contexts(const FFElement& a, const FFElement& b) {
    if (!a.context()->same(*b.context()))
        fail_precondition("MixedContexts", "finite-field elements from different fields");
}

} // namespace

FFElement::FFElement(FFContextPtr ctx, std::vector<std::uint32_t> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    if (c_.size() != ctx_->n()) fail_precondition("BadParams", "coefficient vector length mismatch");
    for (auto& v : c_) v %= ctx_->p();
}

bool FFElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FFElement::is_one() const {
    if (c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

FFElement FFElement::operator+(const FFElement& o) const {
    check_contexts(*this, o);
    std::vector<std::uint32_t> r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (c_[i] + o.c_[i]) % ctx_->p();
    return FFElement(ctx_, std::move(r));
}

FFElement FFElement::operator-() const {
    std::vector<std::uint32_t> r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (ctx_->p() - c_[i]) % ctx_->p();
    return FFElement(ctx_, std::move(r));
}

FFElement FFElement::operator-(const FFElement& o) const { return *this + (-o); }

FFElement FFElement::operator*(const FFElement& o) const {
    check_contexts(*this, o);
    Poly prod = Poly(ctx_->p(), c_) * Poly(ctx_->p(), o.c_);
    Poly rem = prod.divmod(ctx_->modulus()).second;
    std::vector<std::uint32_t> r(ctx_->n(), 0);
    for (std::uint32_t i = 0; i < ctx_->n(); ++i) r[i] = rem.coeff(static_cast<int>(i));
    return FFElement(ctx_, std::move(r));
}

FFElement FFElement::inverse() const {
    if (is_zero()) fail_precondition("DivisionByZero", "inverse of zero in GF(p^n)");
    // Extended Euclid on (value, modulus) in GF(p)[x].
    std::uint32_t p = ctx_->p();
    Poly r0(p, c_), r1 = ctx_->modulus();
    Poly s0 = Poly::one(p), s1 = Poly::zero(p);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        Poly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 is a nonzero constant: elements are coprime to the irreducible modulus.
    std::uint64_t s_inv = 1, base = r0.coeff(0), e = p - 2;
    while (e) {
        if (e & 1) s_inv = s_inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    Poly inv = s0.scale(static_cast<std::uint32_t>(s_inv));
    std::vector<std::uint32_t> rc(ctx_->n(), 0);
    for (std::uint32_t i = 0; i < ctx_->n(); ++i) rc[i] = inv.coeff(static_cast<int>(i));
    return FFElement(ctx_, std::move(rc));
}

FFElement FFElement::pow(std::int64_t e) const {
    FFElement base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    FFElement acc = ctx_->one();
    std::uint64_t k = static_cast<std::uint64_t>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool FFElement::operator==(const FFElement& o) const {
    return ctx_->same(*o.ctx_) && c_ == o.c_;
}

bool FFElement::operator<(const FFElement& o) const {
    check_contexts(*this, o);
    return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(), o.c_.rend());
}

std::string FFElement::to_string() const {
    if (ctx_->n() == 1) return std::to_string(c_[0]);
    return Poly(ctx_->p(), c_).to_string('a');
}

} // namespace unitring
