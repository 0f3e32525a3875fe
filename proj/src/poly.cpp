#include "unitring/poly.hpp"

#include "unitring/errors.hpp"

#include <algorithm>
#include <sstream>

namespace unitring {

namespace {

void check_same_field(const Poly& a, const Poly& b) {
    if (a.p() != b.p())
        fail_precondition("MixedContexts", "polynomials over different prime fields");
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    // Fermat; p is prime and a != 0 mod p.
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

Poly::Poly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
    if (p < 2) fail_precondition("NotPrime", "polynomial characteristic must be a prime");
    for (auto& c : coeffs_) c %= p_;
    trim();
}

Poly Poly::constant(std::uint32_t p, std::int64_t c) {
    std::int64_t r = c % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return Poly(p, {static_cast<std::uint32_t>(r)});
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint32_t Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Poly Poly::operator+(const Poly& o) const {
    check_same_field(*this, o);
    std::vector<std::uint32_t> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = (coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i))) % p_;
    return Poly(p_, std::move(r));
}

Poly Poly::operator-() const {
    std::vector<std::uint32_t> r(coeffs_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (p_ - coeffs_[i]) % p_;
    return Poly(p_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_same_field(*this, o);
    if (is_zero() || o.is_zero()) return zero(p_);
    std::vector<std::uint32_t> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            std::uint64_t v = r[i + j] + static_cast<std::uint64_t>(coeffs_[i]) * o.coeffs_[j];
            r[i + j] = static_cast<std::uint32_t>(v % p_);
        }
    }
    return Poly(p_, std::move(r));
}

Poly Poly::scale(std::uint32_t c) const {
    std::vector<std::uint32_t> r(coeffs_.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(coeffs_[i]) * (c % p_) % p_);
    return Poly(p_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    check_same_field(*this, d);
    if (d.is_zero()) fail_precondition("DivisionByZero", "polynomial division by zero");
    Poly rem = *this;
    std::vector<std::uint32_t> quot(
        degree() >= d.degree() ? static_cast<std::size_t>(degree() - d.degree() + 1) : 0, 0);
    std::uint32_t lead_inv = mod_inverse(d.lead(), p_);
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int shift = rem.degree() - d.degree();
        std::uint32_t factor =
            static_cast<std::uint32_t>(static_cast<std::uint64_t>(rem.lead()) * lead_inv % p_);
        quot[static_cast<std::size_t>(shift)] = factor;
        std::vector<std::uint32_t> sub(static_cast<std::size_t>(shift), 0);
        for (auto c : d.coeffs_)
            sub.push_back(static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * factor % p_));
        rem = rem - Poly(p_, std::move(sub));
    }
    return {Poly(p_, std::move(quot)), rem};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scale(mod_inverse(lead(), p_));
}

bool Poly::operator<(const Poly& o) const {
    if (p_ != o.p_) return p_ < o.p_;
    if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
    return std::lexicographical_compare(coeffs_.rbegin(), coeffs_.rend(), o.coeffs_.rbegin(),
                                        o.coeffs_.rend());
}

std::string Poly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        std::uint32_t c = coeff(k);
        if (c == 0) continue;
        if (!first) out << "+";
        first = false;
        if (k == 0) {
            out << c;
        } else {
            if (c != 1) out << c;
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

} // namespace unitring
