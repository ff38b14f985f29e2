#ifndef BLOWUP_BILAURENT_HPP
#define BLOWUP_BILAURENT_HPP

#include <map>
#include <optional>
#include <string>

#include "blowup/monomial.hpp"
#include "blowup/rational.hpp"

namespace blowup {

// Sparse exact polynomial in z (integer exponents) and u (non-negative
// exponents). Transition entries, cochains and section components all live
// here, stored in the (z,u) chart. No zero coefficients are ever kept.
class BiLaurent {
public:
    using TermMap = std::map<Monomial, Rational>;

    BiLaurent() = default;
    static BiLaurent constant(const Rational& c);
    static BiLaurent term(Monomial m, const Rational& c);
    // z^k, u^k convenience factories.
    static BiLaurent z(long k = 1) { return term({k, 0}, 1); }
    static BiLaurent u(long k = 1) { return term({0, k}, 1); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const;

    BiLaurent operator-() const;
    BiLaurent& operator+=(const BiLaurent& o);
    BiLaurent& operator-=(const BiLaurent& o);
    friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
    friend BiLaurent operator-(BiLaurent a, const BiLaurent& b) { return a -= b; }
    friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b);
    BiLaurent operator*(const Rational& c) const;
    friend bool operator==(const BiLaurent& a, const BiLaurent& b) { return a.terms_ == b.terms_; }

    void add_term(const Monomial& m, const Rational& c);

    // Largest power of u dividing the polynomial; nullopt for 0.
    std::optional<long> min_udeg() const;
    long max_udeg() const;  // 0 for the zero polynomial
    long min_zexp() const;
    long max_zexp() const;

    // Holomorphic on the U chart: no negative powers of z.
    bool is_holomorphic_U() const;
    // Holomorphic on the V chart: every term satisfies zexp <= udeg.
    bool is_holomorphic_V() const;

    // Coordinate change (xi,v) = (z^-1, zu): z^l u^i -> xi^(i-l) v^i. The
    // result reuses (zexp,udeg) slots for (xi,v) exponents.
    BiLaurent to_v_chart() const;
    // Inverse change: xi^a v^b -> z^(b-a) u^b.
    BiLaurent to_u_chart() const;

    BiLaurent truncated(const Window& w) const;
    // Terms with zexp > udeg (the part that is not V-holomorphic).
    BiLaurent non_v_part() const;
    // Restriction to the exceptional divisor u = 0.
    BiLaurent at_u0() const;

    std::string to_string() const;

private:
    TermMap terms_;
};

inline BiLaurent operator*(const Rational& c, const BiLaurent& p) { return p * c; }

}  // namespace blowup

#endif
