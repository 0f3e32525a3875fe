#include "unitring/format.hpp"

#include <cctype>

namespace unitring {

bool coeff_needs_parens(const std::string& s) {
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if ((c == '+' || c == '-') && depth == 0) return true;
    }
    return false;
}

namespace detail {

std::string trim_spaces(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<SignedTerm> split_signed_terms(const std::string& s) {
    std::vector<SignedTerm> out;
    bool neg = false;
    bool seen_sign = false; // a pending sign with no term content yet
    std::string cur;
    int depth = 0;
    auto flush = [&](std::size_t pos) {
        std::string body = trim_spaces(cur);
        if (body.empty())
            fail_parse("ParseError", "empty term at position " + std::to_string(pos));
        out.push_back({neg, std::move(body)});
        cur.clear();
        seen_sign = false;
    };
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        else if (c == ')') {
            if (--depth < 0)
                fail_parse("ParseError", "unbalanced ')' at position " + std::to_string(i));
        }
        if ((c == '+' || c == '-') && depth == 0) {
            if (trim_spaces(cur).empty()) {
                // A sign may prefix the very first term, once.
                if (!out.empty() || seen_sign)
                    fail_parse("ParseError", "empty term at position " + std::to_string(i));
                neg = (c == '-');
                seen_sign = true;
                continue;
            }
            flush(i);
            neg = (c == '-');
            continue;
        }
        cur += c;
    }
    if (depth != 0) fail_parse("ParseError", "unbalanced '(' in element text");
    flush(s.size());
    return out;
}

std::string strip_outer_parens(std::string s) {
    for (;;) {
        if (s.size() < 2 || s.front() != '(' || s.back() != ')') return s;
        int depth = 0;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            else if (s[i] == ')') --depth;
            if (depth == 0) return s; // first '(' closes before the end
        }
        s = trim_spaces(s.substr(1, s.size() - 2));
    }
}

} // namespace detail

Poly parse_poly_text(std::uint32_t p, const std::string& text, char var) {
    std::string s = detail::trim_spaces(text);
    if (s.empty()) fail_parse("ParseError", "empty polynomial");
    if (s == "0") return Poly::zero(p);
    std::vector<std::uint32_t> coeffs;
    auto bump = [&](std::size_t deg, std::uint64_t c, bool neg) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
        std::uint64_t cur = coeffs[deg];
        std::uint64_t add = c % p;
        coeffs[deg] = static_cast<std::uint32_t>(neg ? (cur + p - add) % p : (cur + add) % p);
    };
    for (const auto& term : detail::split_signed_terms(s)) {
        const std::string& b = term.body;
        std::size_t i = 0;
        std::uint64_t c = 1;
        bool have_digits = false;
        while (i < b.size() && std::isdigit(static_cast<unsigned char>(b[i]))) {
            if (!have_digits) {
                have_digits = true;
                c = 0;
            }
            c = (c * 10 + static_cast<std::uint64_t>(b[i] - '0')) % p; // residue suffices
            ++i;
        }
        std::size_t deg = 0;
        if (i < b.size()) {
            if (b[i] != var)
                fail_parse("ParseError", "unexpected '" + std::string(1, b[i]) +
                                             "' in polynomial term '" + b + "'");
            ++i;
            if (i < b.size()) {
                if (b[i] != '^' || i + 1 == b.size())
                    fail_parse("ParseError", "malformed exponent in term '" + b + "'");
                ++i;
                std::size_t e = 0;
                while (i < b.size()) {
                    if (!std::isdigit(static_cast<unsigned char>(b[i])))
                        fail_parse("ParseError", "malformed exponent in term '" + b + "'");
                    e = e * 10 + static_cast<std::size_t>(b[i] - '0');
                    if (e > 4096) fail_parse("ParseError", "exponent too large in '" + b + "'");
                    ++i;
                }
                deg = e;
            } else {
                deg = 1;
            }
        } else if (!have_digits) {
            fail_parse("ParseError", "empty polynomial term");
        }
        bump(deg, c, term.negative);
    }
    return Poly(p, std::move(coeffs));
}

std::string coeff_to_text(const IntRing& ring, const BigInt& v) { return ring.to_string(v); }
std::string coeff_to_text(const FFRing& ring, const FFElement& v) { return ring.to_string(v); }
std::string coeff_to_text(const RFRing& ring, const RatFunc& v) { return ring.to_string(v); }

BigInt parse_coeff(const IntRing&, const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) fail_parse("ParseError", "empty integer coefficient");
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            fail_parse("ParseError", "bad integer coefficient '" + s + "'");
    return BigInt(s);
}

FFElement parse_coeff(const FFRing& ring, const std::string& s) {
    const auto& ctx = ring.ctx;
    if (ctx->n() == 1) {
        BigInt v = parse_coeff(IntRing{}, s);
        BigInt r = v % ctx->p();
        if (r < 0) r += ctx->p();
        return ctx->from_int(static_cast<std::int64_t>(r));
    }
    Poly f = parse_poly_text(ctx->p(), s, 'a');
    Poly rem = f.divmod(ctx->modulus()).second;
    std::vector<std::uint32_t> c(ctx->n(), 0);
    for (int k = 0; k <= rem.degree(); ++k) c[static_cast<std::size_t>(k)] = rem.coeff(k);
    return FFElement(ctx, std::move(c));
}

RatFunc parse_coeff(const RFRing& ring, const std::string& s) {
    int depth = 0;
    std::size_t slash = std::string::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == '/' && depth == 0) {
            if (slash != std::string::npos)
                fail_parse("ParseError", "more than one '/' in coefficient '" + s + "'");
            slash = i;
        }
    }
    if (slash == std::string::npos)
        return RatFunc::from_poly(parse_poly_text(ring.p, detail::strip_outer_parens(s), 't'));
    Poly num = parse_poly_text(
        ring.p, detail::strip_outer_parens(detail::trim_spaces(s.substr(0, slash))), 't');
    Poly den = parse_poly_text(
        ring.p, detail::strip_outer_parens(detail::trim_spaces(s.substr(slash + 1))), 't');
    if (den.is_zero()) fail_parse("ParseError", "zero denominator in coefficient '" + s + "'");
    return RatFunc(std::move(num), std::move(den));
}

bool split_negative(const IntRing&, const BigInt& v, BigInt& magnitude) {
    if (v < 0) {
        magnitude = -v;
        return true;
    }
    magnitude = v;
    return false;
}

} // namespace unitring
