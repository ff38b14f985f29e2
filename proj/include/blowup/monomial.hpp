#ifndef BLOWUP_MONOMIAL_HPP
#define BLOWUP_MONOMIAL_HPP

#include <compare>

namespace blowup {

// z^zexp * u^udeg on the overlap chart. zexp may be negative, udeg never is.
// Ordering is (udeg, zexp); bases enumerated in this order everywhere so that
// pivot choices and representatives are reproducible.
struct Monomial {
    long zexp = 0;
    long udeg = 0;

    friend auto operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.udeg <=> b.udeg; c != 0) return c;
        return a.zexp <=> b.zexp;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;

    Monomial operator*(const Monomial& o) const { return {zexp + o.zexp, udeg + o.udeg}; }
};

// Retained exponent ranges for truncated computations: u in [0, umax],
// z in [zmin, zmax].
struct Window {
    long umax = 0;
    long zmin = 0;
    long zmax = 0;

    bool contains(const Monomial& m) const {
        return m.udeg >= 0 && m.udeg <= umax && m.zexp >= zmin && m.zexp <= zmax;
    }
    Window enlarged(long du = 2, long dz = 2) const { return {umax + du, zmin - dz, zmax + dz}; }
    friend bool operator==(const Window&, const Window&) = default;
};

}  // namespace blowup

#endif
