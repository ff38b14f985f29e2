#ifndef BLOWUP_BUNDLE_HPP
#define BLOWUP_BUNDLE_HPP

#include <optional>

#include "blowup/blmatrix.hpp"

namespace blowup {

// The pair (j, p): splitting type plus extension-class polynomial. Valid
// classes have every term z^l u^i inside 1 <= i <= 2j-2, i-j+1 <= l <= j-1;
// for j <= 1 that support is empty and p must vanish.
struct ExtensionClass {
    long j = 0;
    BiLaurent p;
};

void validate_canonical_support(long j, const BiLaurent& p);

// Rank-2 bundle on the blown-up plane in canonical form, with transition
// matrix [[z^j, p], [0, z^-j]] from the U chart to the V chart.
class BundleV {
public:
    static BundleV make(long j, BiLaurent p);

    const ExtensionClass& ext() const { return ext_; }
    long j() const { return ext_.j; }
    const BiLaurent& p() const { return ext_.p; }
    const BLMatrix& T() const { return T_; }
    bool is_split() const { return ext_.p.is_zero(); }

private:
    BundleV(ExtensionClass e, BLMatrix t) : ext_(std::move(e)), T_(std::move(t)) {}
    ExtensionClass ext_;
    BLMatrix T_;
};

inline BundleV make_bundle(long j, BiLaurent p) { return BundleV::make(j, std::move(p)); }

long splitting_type(const BundleV& b);

// Largest power of u dividing p; nullopt encodes the split case p = 0.
std::optional<long> u_multiplicity(const BiLaurent& p);

// 4x4 transition matrix of End V acting on vec(M) = (b, a, d, c) for
// M = [[a, b], [c, d]]: end_transition(b) * vec(M) = vec(T M T^-1).
BLMatrix end_transition(const BundleV& b);
// Closed form of its inverse (the End matrix of T^-1).
BLMatrix end_transition_inverse(const BundleV& b);

// vec / unvec in the (b, a, d, c) order used by end_transition.
std::vector<BiLaurent> vec_end(const BLMatrix& m2x2);
BLMatrix unvec_end(const std::vector<BiLaurent>& v);

}  // namespace blowup

#endif
