#ifndef BLOWUP_XYPOLY_HPP
#define BLOWUP_XYPOLY_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "blowup/bilaurent.hpp"

namespace blowup {

// x^a y^b in the blow-down coordinates (x, y) = (u, z*u). Ordered by total
// degree, then x-exponent, so degree-by-degree passes are deterministic.
struct XYMono {
    long a = 0;
    long b = 0;

    long deg() const { return a + b; }
    friend auto operator<=>(const XYMono& p, const XYMono& q) {
        if (auto c = p.deg() <=> q.deg(); c != 0) return c;
        return p.a <=> q.a;
    }
    friend bool operator==(const XYMono&, const XYMono&) = default;
    XYMono operator*(const XYMono& o) const { return {a + o.a, b + o.b}; }
};

// Polynomial in the truncated power-series ring in (x, y); truncation is
// applied explicitly by callers via truncated().
class XYPoly {
public:
    using TermMap = std::map<XYMono, Rational>;

    XYPoly() = default;
    static XYPoly term(XYMono m, const Rational& c);
    static XYPoly one() { return term({0, 0}, 1); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    long deg() const;     // max total degree, 0 for zero polynomial
    long mindeg() const;  // min total degree, 0 for zero polynomial

    void add_term(const XYMono& m, const Rational& c);
    XYPoly operator-() const;
    XYPoly& operator+=(const XYPoly& o);
    XYPoly& operator-=(const XYPoly& o);
    friend XYPoly operator+(XYPoly a, const XYPoly& b) { return a += b; }
    friend XYPoly operator-(XYPoly a, const XYPoly& b) { return a -= b; }
    friend XYPoly operator*(const XYPoly& a, const XYPoly& b);
    XYPoly operator*(const Rational& c) const;
    friend bool operator==(const XYPoly& a, const XYPoly& b) { return a.terms_ == b.terms_; }

    XYPoly truncated(long maxdeg) const;

    // Substitution x = u, y = z*u: x^a y^b -> z^b u^(a+b).
    BiLaurent realize() const;

    std::string to_string() const;

private:
    TermMap terms_;
};

// All monomials of total degree <= D, in XYMono order.
std::vector<XYMono> xy_monomials_upto(long D);

}  // namespace blowup

#endif
