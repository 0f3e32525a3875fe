#ifndef UNITRING_FORMAT_HPP
#define UNITRING_FORMAT_HPP

// Textual form of group-ring elements for CLI input/output:
//   element := term (('+'|'-') term)*        e.g.  1 - g + g^4
//   term    := label | coeff | coeff '*' label
// Labels are the group's element names; coefficients use the ring's
// canonical text (integers; polynomials in `a` for GF(p^n); `num` or
// `(num)/(den)` in `t` for GF(p)(t)). Compound coefficients are printed
// parenthesized, e.g. (t+1)*g, so the top-level +/- split is unambiguous.
// A bare term that matches a group label is the label; otherwise it is a
// coefficient on the identity.

#include "unitring/group_ring.hpp"

#include <string>

namespace unitring {

// True when the string needs wrapping as a coefficient: it has a '+' or
// '-' outside parentheses.
bool coeff_needs_parens(const std::string& s);

// Strict parse of the Poly text form (descending '+'-joined monomials,
// e.g. "2t^3+t+1"); '-' separators are accepted and folded mod p.
Poly parse_poly_text(std::uint32_t p, const std::string& text, char var);

std::string coeff_to_text(const IntRing& ring, const BigInt& v);
std::string coeff_to_text(const FFRing& ring, const FFElement& v);
std::string coeff_to_text(const RFRing& ring, const RatFunc& v);

BigInt parse_coeff(const IntRing& ring, const std::string& s);
FFElement parse_coeff(const FFRing& ring, const std::string& s);
RatFunc parse_coeff(const RFRing& ring, const std::string& s);

// Sign extraction for printing: only the integers carry a usable sign.
bool split_negative(const IntRing& ring, const BigInt& v, BigInt& magnitude);
template <class R>
bool split_negative(const R&, const typename R::Value&, typename R::Value&) {
    return false;
}

namespace detail {
struct SignedTerm {
    bool negative;
    std::string body;
};
// Paren-aware split of "a + b - c" into signed chunks; ParseError on an
// empty chunk or unbalanced parentheses.
std::vector<SignedTerm> split_signed_terms(const std::string& s);
std::string strip_outer_parens(std::string s);
std::string trim_spaces(const std::string& s);
} // namespace detail

template <class R>
std::string to_text(const GroupRingElem<R>& x) {
    if (x.is_zero()) return "0";
    const R& ring = x.ring();
    std::string out;
    for (const auto& [g, v] : x.coeffs()) {
        typename R::Value mag = v;
        bool neg = split_negative(ring, v, mag);
        std::string cs = coeff_to_text(ring, mag);
        if (coeff_needs_parens(cs)) cs = "(" + cs + ")";
        // A bare identity coefficient that happens to spell a group label
        // (e.g. coefficient "a" over a group with an element named a) must
        // be parenthesized, since parsing resolves bare terms label-first.
        // Colliding with the identity label itself is harmless: "1" parses
        // to coefficient one on the identity either way.
        if (g == 0) {
            const auto hit = x.group()->index_of(cs);
            if (hit && *hit != 0) cs = "(" + cs + ")";
        }
        std::string term;
        if (g == 0) term = cs;
        else if (ring.equal(mag, ring.one())) term = x.group()->name(g);
        else term = cs + "*" + x.group()->name(g);
        if (out.empty()) out = (neg ? "-" : "") + term;
        else out += (neg ? " - " : " + ") + term;
    }
    return out;
}

template <class R>
GroupRingElem<R> parse_element(GroupPtr group, R ring, const std::string& text) {
    std::string s = detail::trim_spaces(text);
    if (s.empty()) fail_parse("ParseError", "empty element text");
    GroupRingElem<R> out(group, ring);
    if (s == "0") return out;
    for (const auto& term : detail::split_signed_terms(s)) {
        int idx = 0;
        std::string coeff_text;
        if (auto hit = group->index_of(term.body)) {
            idx = *hit;
            coeff_text = "1";
        } else {
            auto starpos = std::string::npos;
            int depth = 0;
            for (std::size_t i = 0; i < term.body.size(); ++i) {
                char c = term.body[i];
                if (c == '(') ++depth;
                else if (c == ')') --depth;
                else if (c == '*' && depth == 0) {
                    starpos = i;
                    break;
                }
            }
            if (starpos == std::string::npos) {
                coeff_text = term.body;
            } else {
                coeff_text = detail::trim_spaces(term.body.substr(0, starpos));
                std::string label = detail::trim_spaces(term.body.substr(starpos + 1));
                auto lidx = group->index_of(label);
                if (!lidx) fail_parse("ParseError", "unknown group element '" + label + "'");
                idx = *lidx;
            }
        }
        typename R::Value v =
            parse_coeff(ring, detail::strip_outer_parens(detail::trim_spaces(coeff_text)));
        if (term.negative) v = ring.neg(v);
        out.add_to(idx, v);
    }
    return out;
}

} // namespace unitring

#endif
