#ifndef UNITRING_FIELD_DESCRIPTOR_HPP
#define UNITRING_FIELD_DESCRIPTOR_HPP

#include <cstdint>
#include <string>

namespace unitring {

// The three coefficient-field shapes the classifiers distinguish:
//   Finite            GF(p^n)
//   FunctionField     GF(p)(t), the transcendence-degree-1 representative
//   AlgebraicInfinite an infinite algebraic extension of GF(p), traits only
enum class FieldKind { Finite, FunctionField, AlgebraicInfinite };

struct FieldDescriptor {
    FieldKind kind;
    std::uint32_t p = 2;
    std::uint32_t n = 1; // extension degree, Finite only

    static FieldDescriptor finite(std::uint32_t p, std::uint32_t n = 1);
    static FieldDescriptor function_field(std::uint32_t p);
    static FieldDescriptor algebraic_infinite(std::uint32_t p);

    bool operator==(const FieldDescriptor& o) const {
        return kind == o.kind && p == o.p && (kind != FieldKind::Finite || n == o.n);
    }

    std::string to_string() const; // "GF(2^3)", "GF(3)(t)", "algcl(2)"
};

struct FieldTraits {
    bool is_finite;
    bool is_algebraic_over_prime;
    int tr_deg;
    std::uint32_t characteristic;
};

FieldTraits field_traits(const FieldDescriptor& d);

} // namespace unitring

#endif
