#ifndef UNITRING_RINGS_HPP
#define UNITRING_RINGS_HPP

// Coefficient-ring contexts for the group ring: the rational integers,
// GF(p^n), and GF(p)(t), all behind one small uniform interface so that
// group-ring arithmetic and the linear solvers can be written once.
//
// Interface expected from a ring context R:
//   R::Value                      - element type
//   R::is_field                   - compile-time bool
//   characteristic()              - 0 for Z, p otherwise
//   zero(), one(), from_int(v)
//   add/sub/neg/mul, is_zero, equal
//   inv(a)                        - fields only (DivisionByZero on 0)
//   is_unit(a)                    - +-1 over Z, any nonzero over a field
//   to_string(a), same(other)     - printing and mixed-context detection

#include "unitring/bigint.hpp"
#include "unitring/errors.hpp"
#include "unitring/finite_field.hpp"
#include "unitring/ratfunc.hpp"

#include <cstdint>
#include <string>

namespace unitring {

struct IntRing {
    using Value = BigInt;
    static constexpr bool is_field = false;

    std::uint32_t characteristic() const { return 0; }
    Value zero() const { return Value(0); }
    Value one() const { return Value(1); }
    Value from_int(std::int64_t v) const { return Value(v); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value neg(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    bool is_zero(const Value& a) const { return a.is_zero(); }
    bool equal(const Value& a, const Value& b) const { return a == b; }
    Value inv(const Value& a) const {
        if (!is_unit(a)) fail_precondition("NotAUnit", "only +-1 are invertible integers");
        return a;
    }
    bool is_unit(const Value& a) const { return a == 1 || a == -1; }
    std::string to_string(const Value& a) const { return a.str(); }
    bool same(const IntRing&) const { return true; }
};

struct FFRing {
    using Value = FFElement;
    static constexpr bool is_field = true;

    FFContextPtr ctx;

    explicit FFRing(FFContextPtr c) : ctx(std::move(c)) {}
    FFRing(std::uint32_t p, std::uint32_t n) : ctx(FFContext::make(p, n)) {}

    std::uint32_t characteristic() const { return ctx->p(); }
    Value zero() const { return ctx->zero(); }
    Value one() const { return ctx->one(); }
    Value from_int(std::int64_t v) const { return ctx->from_int(v); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value neg(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    bool is_zero(const Value& a) const { return a.is_zero(); }
    bool equal(const Value& a, const Value& b) const { return a == b; }
    Value inv(const Value& a) const { return a.inverse(); }
    bool is_unit(const Value& a) const { return !a.is_zero(); }
    std::string to_string(const Value& a) const { return a.to_string(); }
    bool same(const FFRing& o) const { return ctx->same(*o.ctx); }
};

struct RFRing {
    using Value = RatFunc;
    static constexpr bool is_field = true;

    std::uint32_t p;

    explicit RFRing(std::uint32_t prime) : p(prime) {
        if (!is_prime_u32(prime)) fail_validation("NotPrime", "function-field base must be prime");
    }

    std::uint32_t characteristic() const { return p; }
    Value zero() const { return RatFunc::zero(p); }
    Value one() const { return RatFunc::one(p); }
    Value from_int(std::int64_t v) const { return RatFunc::constant(p, v); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value neg(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    bool is_zero(const Value& a) const { return a.is_zero(); }
    bool equal(const Value& a, const Value& b) const { return a == b; }
    Value inv(const Value& a) const { return a.inverse(); }
    bool is_unit(const Value& a) const { return !a.is_zero(); }
    std::string to_string(const Value& a) const { return a.to_string(); }
    bool same(const RFRing& o) const { return p == o.p; }
};

} // namespace unitring

#endif
