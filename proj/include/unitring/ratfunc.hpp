#ifndef UNITRING_RATFUNC_HPP
#define UNITRING_RATFUNC_HPP

#include "unitring/poly.hpp"

#include <cstdint>
#include <string>

namespace unitring {

// Element of the rational function field GF(p)(t), kept canonical:
// gcd(num, den) = 1 and den monic. Equality is therefore component-wise.
class RatFunc {
public:
    RatFunc(Poly num, Poly den); // normalizes; ZeroDenominator if den = 0

    static RatFunc zero(std::uint32_t p) { return RatFunc(Poly::zero(p), Poly::one(p)); }
    static RatFunc one(std::uint32_t p) { return RatFunc(Poly::one(p), Poly::one(p)); }
    static RatFunc t(std::uint32_t p) { return RatFunc(Poly::x(p), Poly::one(p)); }
    static RatFunc constant(std::uint32_t p, std::int64_t c) {
        return RatFunc(Poly::constant(p, c), Poly::one(p));
    }
    static RatFunc from_poly(Poly num) {
        std::uint32_t p = num.p();
        return RatFunc(std::move(num), Poly::one(p));
    }

    std::uint32_t p() const { return num_.p(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc inverse() const; // DivisionByZero on 0
    RatFunc pow(std::int64_t e) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    bool operator<(const RatFunc& o) const {
        if (num_ != o.num_) return num_ < o.num_;
        return den_ < o.den_;
    }

    // "t^2+t", "(t+1)/(t^2+1)"; denominator omitted when 1.
    std::string to_string() const;

private:
    Poly num_, den_;
};

inline RatFunc rf_normalize(Poly num, Poly den) { return RatFunc(std::move(num), std::move(den)); }

} // namespace unitring

#endif
