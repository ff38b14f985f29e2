#ifndef BLOWUP_INVARIANTS_HPP
#define BLOWUP_INVARIANTS_HPP

#include <optional>
#include <string>

#include "blowup/dirimg.hpp"

namespace blowup {

// C(a,2) extended by zero below a = 2.
long binom2(long a);

// l(R^1) = C(j,2) - C(j-m,2); the split case (m absent) plateaus at C(j,2).
long r1_formula(long j, std::optional<long> m);

// Local moduli dimension m(2j - (m+1)/2); requires 1 <= m <= 2j-2.
long moduli_dim_formula(long j, long m);

struct BoundsVerdict {
    bool lr1_lower = false, lr1_upper = false;
    bool lq_lower = false, lq_upper = false;
    bool charge_lower = false, charge_upper = false;
    // lq_lower is a contested claim and is reported, never fatal.
    bool all_fatal_pass() const {
        return lr1_lower && lr1_upper && lq_upper && charge_lower && charge_upper;
    }
    bool all_pass() const { return all_fatal_pass() && lq_lower; }
};

// j-1 <= lr1 <= j(j-1)/2, 1 <= lq <= j(j+1)/2, j <= c <= j^2. For j = 0 all
// invariants must vanish.
BoundsVerdict bounds_check(long j, long lr1, long lq, long c);

struct InvariantReport {
    long j = 0;
    std::string p_text;
    std::optional<long> m;  // nullopt = split
    long lr1_formula = 0;
    long lr1_oracle = 0;
    long lq_oracle = 0;
    long charge = 0;
    std::optional<long> h1end_formula;  // undefined for the split case
    long h1end_oracle = 0;
    BoundsVerdict bounds;
    bool stabilized = false;
    Window r1_window;
    long degree_cap = 0;
    bool crosscheck_ok = false;
    std::string mismatch;
};

enum class CheckPolicy { Throw, Collect };

// Runs every oracle and formula, asserts agreement where both are defined.
// Under Throw a disagreement or fatal bound violation raises
// CrossCheckMismatch; under Collect the report records it.
InvariantReport report(const BundleV& b, CheckPolicy policy = CheckPolicy::Throw);

}  // namespace blowup

#endif
