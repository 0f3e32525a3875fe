#include "unitring/ratfunc.hpp"

#include "unitring/errors.hpp"

namespace unitring {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, base = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

} // namespace

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.p() != den_.p())
        fail_precondition("MixedContexts", "rational function over mixed prime fields");
    if (den_.is_zero()) fail_precondition("ZeroDenominator", "denominator is the zero polynomial");
    if (num_.is_zero()) {
        den_ = Poly::one(den_.p());
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    if (!den_.is_monic()) {
        std::uint32_t s = inv_mod(den_.lead(), den_.p());
        num_ = num_.scale(s);
        den_ = den_.scale(s);
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) fail_precondition("DivisionByZero", "inverse of zero in GF(p)(t)");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(std::int64_t e) const {
    RatFunc base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    RatFunc acc = one(p());
    std::uint64_t k = static_cast<std::uint64_t>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string('t');
    return "(" + num_.to_string('t') + ")/(" + den_.to_string('t') + ")";
}

} // namespace unitring
