#include "blowup/invariants.hpp"

#include <sstream>

#include "blowup/errors.hpp"

namespace blowup {

long binom2(long a) { return a >= 2 ? a * (a - 1) / 2 : 0; }

long r1_formula(long j, std::optional<long> m) {
    if (j <= 0) return 0;
    if (!m) return binom2(j);
    // Values m >= j-1 plateau: C(j-m,2) = 0 there.
    return binom2(j) - binom2(j - *m);
}

long moduli_dim_formula(long j, long m) {
    if (j < 1 || m < 1 || m > 2 * j - 2)
        throw DomainError("moduli dimension formula needs 1 <= m <= 2j-2, got j=" +
                          std::to_string(j) + " m=" + std::to_string(m));
    // m(2j - (m+1)/2) written to stay integral.
    return m * 2 * j - m * (m + 1) / 2;
}

BoundsVerdict bounds_check(long j, long lr1, long lq, long c) {
    BoundsVerdict v;
    if (j == 0) {
        v.lr1_lower = v.lr1_upper = (lr1 == 0);
        v.lq_lower = v.lq_upper = (lq == 0);
        v.charge_lower = v.charge_upper = (c == 0);
        return v;
    }
    v.lr1_lower = lr1 >= j - 1;
    v.lr1_upper = lr1 <= j * (j - 1) / 2;
    v.lq_lower = lq >= 1;
    v.lq_upper = lq <= j * (j + 1) / 2;
    v.charge_lower = c >= j;
    v.charge_upper = c <= j * j;
    return v;
}

InvariantReport report(const BundleV& b, CheckPolicy policy) {
    InvariantReport r;
    r.j = b.j();
    r.p_text = b.p().to_string();
    r.m = u_multiplicity(b.p());

    std::ostringstream mismatch;

    CechResult r1 = r1_oracle_full(b);
    r.lr1_oracle = static_cast<long>(r1.dim);
    r.r1_window = r1.window;
    r.lr1_formula = r1_formula(r.j, r.m);
    if (r.lr1_formula != r.lr1_oracle)
        mismatch << "l(R1) formula " << r.lr1_formula << " != oracle " << r.lr1_oracle << "; ";

    CechResult me = moduli_dim_oracle_full(b);
    r.h1end_oracle = static_cast<long>(me.dim);
    if (r.m && r.j >= 1) {
        r.h1end_formula = moduli_dim_formula(r.j, *r.m);
        if (*r.h1end_formula != r.h1end_oracle)
            mismatch << "h1(End) formula " << *r.h1end_formula << " != oracle " << r.h1end_oracle
                     << "; ";
    }

    LqResult lq = lq_oracle_full(b);
    r.lq_oracle = lq.lq;
    r.degree_cap = lq.D;
    r.charge = r.lq_oracle + r.lr1_oracle;
    r.stabilized = r1.stabilized && me.stabilized;

    r.bounds = bounds_check(r.j, r.lr1_oracle, r.lq_oracle, r.charge);
    if (!r.bounds.all_fatal_pass()) mismatch << "fatal bound violated; ";

    r.mismatch = mismatch.str();
    r.crosscheck_ok = r.mismatch.empty();
    if (policy == CheckPolicy::Throw && !r.crosscheck_ok)
        throw CrossCheckMismatch("j=" + std::to_string(r.j) + " p=" + r.p_text + ": " + r.mismatch);
    return r;
}

}  // namespace blowup
