#ifndef UNITRING_FINITE_FIELD_HPP
#define UNITRING_FINITE_FIELD_HPP

#include "unitring/poly.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace unitring {

class FFElement;

// GF(p^n) presented as GF(p)[x] modulo a deterministic irreducible: the
// smallest monic irreducible of degree n when coefficient tuples
// (c_0, ..., c_{n-1}) are compared lexicographically. Construction is
// capped at p^n <= 2^20.
class FFContext : public std::enable_shared_from_this<FFContext> {
public:
    static constexpr std::uint64_t kSizeBudget = 1u << 20;

    static std::shared_ptr<const FFContext> make(std::uint32_t p, std::uint32_t n);

    std::uint32_t p() const { return p_; }
    std::uint32_t n() const { return n_; }
    std::uint64_t size() const { return q_; }
    const Poly& modulus() const { return modulus_; }

    FFElement zero() const;
    FFElement one() const;
    // Class of x; equals zero in the degenerate n = 1 presentation GF(p)[x]/(x).
    FFElement generator() const;
    FFElement from_int(std::int64_t v) const;
    // Elements indexed 0..p^n-1 by base-p digit vectors (constant digit first).
    FFElement element(std::uint64_t index) const;
    std::uint64_t index_of(const FFElement& a) const;

    bool same(const FFContext& o) const { return p_ == o.p_ && n_ == o.n_; }

private:
    FFContext(std::uint32_t p, std::uint32_t n, Poly modulus);
    std::uint32_t p_, n_;
    std::uint64_t q_;
    Poly modulus_;
};

using FFContextPtr = std::shared_ptr<const FFContext>;

// An element of GF(p^n): a length-n vector of residues mod p, representing
// c_0 + c_1 x + ... + c_{n-1} x^{n-1} modulo the context's irreducible.
class FFElement {
public:
    FFElement(FFContextPtr ctx, std::vector<std::uint32_t> coeffs);

    const FFContextPtr& context() const { return ctx_; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;

    FFElement operator+(const FFElement& o) const;
    FFElement operator-(const FFElement& o) const;
    FFElement operator-() const;
    FFElement operator*(const FFElement& o) const;
    FFElement inverse() const; // DivisionByZero on 0
    FFElement pow(std::int64_t e) const;

    bool operator==(const FFElement& o) const;
    bool operator!=(const FFElement& o) const { return !(*this == o); }
    bool operator<(const FFElement& o) const; // total order for sorted containers

    // Polynomial in `a` for n >= 2, plain residue for prime fields.
    std::string to_string() const;

private:
    FFContextPtr ctx_;
    std::vector<std::uint32_t> c_;
};

// True iff f (monic, degree >= 1) has no monic divisor of degree 1..deg/2.
bool poly_is_irreducible(const Poly& f);

inline FFContextPtr ff_make(std::uint32_t p, std::uint32_t n) { return FFContext::make(p, n); }

} // namespace unitring

#endif
