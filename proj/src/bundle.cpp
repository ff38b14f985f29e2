#include "blowup/bundle.hpp"

#include "blowup/errors.hpp"

namespace blowup {

void validate_canonical_support(long j, const BiLaurent& p) {
    if (j < 0) throw DomainError("splitting type must be non-negative");
    for (const auto& [m, c] : p.terms()) {
        const long i = m.udeg, l = m.zexp;
        if (i < 1 || i > 2 * j - 2 || l < i - j + 1 || l > j - 1)
            throw CanonicalSupportViolation(
                l, i,
                "term z^" + std::to_string(l) + "*u^" + std::to_string(i) +
                    " outside canonical support for j=" + std::to_string(j));
    }
}

BundleV BundleV::make(long j, BiLaurent p) {
    validate_canonical_support(j, p);
    BLMatrix t(2, 2);
    t.at(0, 0) = BiLaurent::z(j);
    t.at(0, 1) = p;
    t.at(1, 1) = BiLaurent::z(-j);
    return BundleV(ExtensionClass{j, std::move(p)}, std::move(t));
}

long splitting_type(const BundleV& b) { return b.j(); }

std::optional<long> u_multiplicity(const BiLaurent& p) { return p.min_udeg(); }

BLMatrix end_transition(const BundleV& b) {
    const long j = b.j();
    const BiLaurent& p = b.p();
    BLMatrix t(4, 4);
    t.at(0, 0) = BiLaurent::z(2 * j);
    t.at(0, 1) = -(p * BiLaurent::z(j));
    t.at(0, 2) = p * BiLaurent::z(j);
    t.at(0, 3) = -(p * p);
    t.at(1, 1) = BiLaurent::constant(1);
    t.at(1, 3) = p * BiLaurent::z(-j);
    t.at(2, 2) = BiLaurent::constant(1);
    t.at(2, 3) = -(p * BiLaurent::z(-j));
    t.at(3, 3) = BiLaurent::z(-2 * j);
    return t;
}

BLMatrix end_transition_inverse(const BundleV& b) {
    // Conjugation by T^-1 = [[z^-j, -p], [0, z^j]].
    const long j = b.j();
    const BiLaurent& p = b.p();
    BLMatrix t(4, 4);
    t.at(0, 0) = BiLaurent::z(-2 * j);
    t.at(0, 1) = p * BiLaurent::z(-j);
    t.at(0, 2) = -(p * BiLaurent::z(-j));
    t.at(0, 3) = -(p * p);
    t.at(1, 1) = BiLaurent::constant(1);
    t.at(1, 3) = -(p * BiLaurent::z(j));
    t.at(2, 2) = BiLaurent::constant(1);
    t.at(2, 3) = p * BiLaurent::z(j);
    t.at(3, 3) = BiLaurent::z(2 * j);
    return t;
}

std::vector<BiLaurent> vec_end(const BLMatrix& m) {
    return {m.at(0, 1), m.at(0, 0), m.at(1, 1), m.at(1, 0)};
}

BLMatrix unvec_end(const std::vector<BiLaurent>& v) {
    BLMatrix m(2, 2);
    m.at(0, 1) = v[0];
    m.at(0, 0) = v[1];
    m.at(1, 1) = v[2];
    m.at(1, 0) = v[3];
    return m;
}

}  // namespace blowup
