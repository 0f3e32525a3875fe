#include "unitring/field_descriptor.hpp"

#include "unitring/bigint.hpp"
#include "unitring/errors.hpp"

namespace unitring {

namespace {

void check_prime(std::uint32_t p) {
    if (!is_prime_u32(p)) fail_validation("NotPrime", std::to_string(p) + " is not prime");
}

} // namespace

FieldDescriptor FieldDescriptor::finite(std::uint32_t p, std::uint32_t n) {
    check_prime(p);
    if (n < 1) fail_validation("BadParams", "extension degree must be >= 1");
    return {FieldKind::Finite, p, n};
}

FieldDescriptor FieldDescriptor::function_field(std::uint32_t p) {
    check_prime(p);
    return {FieldKind::FunctionField, p, 1};
}

FieldDescriptor FieldDescriptor::algebraic_infinite(std::uint32_t p) {
    check_prime(p);
    return {FieldKind::AlgebraicInfinite, p, 1};
}

std::string FieldDescriptor::to_string() const {
    switch (kind) {
    case FieldKind::Finite:
        if (n == 1) return "GF(" + std::to_string(p) + ")";
        return "GF(" + std::to_string(p) + "^" + std::to_string(n) + ")";
    case FieldKind::FunctionField:
        return "GF(" + std::to_string(p) + ")(t)";
    case FieldKind::AlgebraicInfinite:
        return "algcl(" + std::to_string(p) + ")";
    }
    return "?";
}

FieldTraits field_traits(const FieldDescriptor& d) {
    switch (d.kind) {
    case FieldKind::Finite:
        return {true, true, 0, d.p};
    case FieldKind::FunctionField:
        return {false, false, 1, d.p};
    case FieldKind::AlgebraicInfinite:
        return {false, true, 0, d.p};
    }
    fail_validation("BadParams", "invalid field descriptor");
}

} // namespace unitring
