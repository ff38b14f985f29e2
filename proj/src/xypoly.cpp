#include "blowup/xypoly.hpp"

#include <sstream>

namespace blowup {

XYPoly XYPoly::term(XYMono m, const Rational& c) {
    XYPoly p;
    if (!c.is_zero()) p.terms_[m] = c;
    return p;
}

long XYPoly::deg() const {
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.deg());
    return d;
}

long XYPoly::mindeg() const {
    return terms_.empty() ? 0 : terms_.begin()->first.deg();
}

void XYPoly::add_term(const XYMono& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

XYPoly XYPoly::operator-() const {
    XYPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

XYPoly& XYPoly::operator+=(const XYPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

XYPoly& XYPoly::operator-=(const XYPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

XYPoly operator*(const XYPoly& a, const XYPoly& b) {
    XYPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

XYPoly XYPoly::operator*(const Rational& c) const {
    XYPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

XYPoly XYPoly::truncated(long maxdeg) const {
    XYPoly r;
    for (const auto& [m, c] : terms_)
        if (m.deg() <= maxdeg) r.terms_.emplace(m, c);
    return r;
}

BiLaurent XYPoly::realize() const {
    BiLaurent r;
    for (const auto& [m, c] : terms_) r.add_term(Monomial{m.b, m.a + m.b}, c);
    return r;
}

std::string XYPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        const bool has_var = (m.a != 0 || m.b != 0);
        const bool unit = (a == Rational(1));
        if (!unit || !has_var) out << a.to_string();
        bool star = !unit && has_var;
        if (m.a != 0) {
            if (star) out << "*";
            out << "x";
            if (m.a != 1) out << "^" << m.a;
            star = true;
        }
        if (m.b != 0) {
            if (star) out << "*";
            out << "y";
            if (m.b != 1) out << "^" << m.b;
        }
    }
    return out.str();
}

std::vector<XYMono> xy_monomials_upto(long D) {
    std::vector<XYMono> out;
    for (long d = 0; d <= D; ++d)
        for (long a = 0; a <= d; ++a) out.push_back({a, d - a});
    return out;
}

}  // namespace blowup
