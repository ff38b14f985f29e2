#include "blowup/bilaurent.hpp"

#include <algorithm>
#include <sstream>

namespace blowup {

BiLaurent BiLaurent::constant(const Rational& c) { return term({0, 0}, c); }

BiLaurent BiLaurent::term(Monomial m, const Rational& c) {
    BiLaurent p;
    if (!c.is_zero()) p.terms_[m] = c;
    return p;
}

Rational BiLaurent::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void BiLaurent::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiLaurent BiLaurent::operator-() const {
    BiLaurent r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

BiLaurent BiLaurent::operator*(const Rational& c) const {
    BiLaurent r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

std::optional<long> BiLaurent::min_udeg() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.udeg;  // map is ordered by (udeg, zexp)
}

long BiLaurent::max_udeg() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.udeg;
}

long BiLaurent::min_zexp() const {
    long m = 0;
    bool first = true;
    for (const auto& [mo, c] : terms_) {
        if (first || mo.zexp < m) m = mo.zexp;
        first = false;
    }
    return m;
}

long BiLaurent::max_zexp() const {
    long m = 0;
    bool first = true;
    for (const auto& [mo, c] : terms_) {
        if (first || mo.zexp > m) m = mo.zexp;
        first = false;
    }
    return m;
}

bool BiLaurent::is_holomorphic_U() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.zexp >= 0; });
}

bool BiLaurent::is_holomorphic_V() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.zexp <= t.first.udeg; });
}

BiLaurent BiLaurent::to_v_chart() const {
    BiLaurent r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.udeg - m.zexp, m.udeg}, c);
    return r;
}

BiLaurent BiLaurent::to_u_chart() const {
    BiLaurent r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.udeg - m.zexp, m.udeg}, c);
    return r;
}

BiLaurent BiLaurent::truncated(const Window& w) const {
    BiLaurent r;
    for (const auto& [m, c] : terms_)
        if (w.contains(m)) r.terms_.emplace(m, c);
    return r;
}

BiLaurent BiLaurent::non_v_part() const {
    BiLaurent r;
    for (const auto& [m, c] : terms_)
        if (m.zexp > m.udeg) r.terms_.emplace(m, c);
    return r;
}

BiLaurent BiLaurent::at_u0() const {
    BiLaurent r;
    for (const auto& [m, c] : terms_)
        if (m.udeg == 0) r.terms_.emplace(m, c);
    return r;
}

std::string BiLaurent::to_string() const {
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

        const bool has_var = (m.zexp != 0 || m.udeg != 0);
        const bool unit = (a == Rational(1));
        if (!unit || !has_var) out << a.to_string();
        bool star = !unit && has_var;
        if (m.zexp != 0) {
            if (star) out << "*";
            out << "z";
            if (m.zexp != 1) out << "^" << m.zexp;
            star = true;
        }
        if (m.udeg != 0) {
            if (star) out << "*";
            out << "u";
            if (m.udeg != 1) out << "^" << m.udeg;
        }
    }
    return out.str();
}

}  // namespace blowup
