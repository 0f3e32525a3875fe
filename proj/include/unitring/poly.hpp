#ifndef UNITRING_POLY_HPP
#define UNITRING_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace unitring {

// Dense univariate polynomial over the prime field GF(p).
// Coefficients are stored ascending by degree with no trailing zeros;
// the zero polynomial is the empty list and has degree -1.
class Poly {
public:
    Poly(std::uint32_t p, std::vector<std::uint32_t> coeffs);

    static Poly zero(std::uint32_t p) { return Poly(p, {}); }
    static Poly one(std::uint32_t p) { return Poly(p, {1}); }
    static Poly constant(std::uint32_t p, std::int64_t c);
    static Poly x(std::uint32_t p) { return Poly(p, {0, 1}); }

    std::uint32_t p() const { return p_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    std::uint32_t coeff(int k) const;
    std::uint32_t lead() const { return coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scale(std::uint32_t c) const;

    // Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly monic() const;

    bool operator==(const Poly& o) const { return p_ == o.p_ && coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const; // degree, then coefficient tuple; total order for maps

    std::string to_string(char var = 't') const;

private:
    void trim();
    std::uint32_t p_;
    std::vector<std::uint32_t> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

} // namespace unitring

#endif
