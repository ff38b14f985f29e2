#ifndef BLOWUP_VERIFY_HPP
#define BLOWUP_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "blowup/invariants.hpp"

namespace blowup {

// Formula-vs-oracle sweep driver shared by the CLI `verify` command and the
// acceptance suite: exhaustive canonical monomials plus seeded random
// multi-term classes per splitting type, split-bundle maxima, and lower
// sharpness witnesses. `robust` re-checks every stabilized dimension under
// one extra window / degree-cap enlargement.
struct VerifyOptions {
    long jmax = 3;
    int samples = 50;
    std::uint64_t seed = 0;
    bool robust = false;
};

struct SweepCase {
    long j = 0;
    std::string p_text;
    bool canonical = false;  // exhaustive part vs random part
    long m = 0;
    long lr1_oracle = -1, lr1_formula = -1;
    long h1end_oracle = -1, h1end_formula = -1;
    bool lr1_ok = false, h1end_ok = false;
    bool robust_ok = true;
    std::string error;
    bool ok() const { return error.empty() && lr1_ok && h1end_ok && robust_ok; }
};

struct SplitCase {
    long j = 0;
    long lr1 = -1, lq = -1, charge = -1;
    bool ok = false;
    bool robust_ok = true;
    std::string error;
};

struct SharpnessCase {
    long j = 0;
    std::string p_text;
    long charge = -1;
    bool ok = false;
    std::string error;
};

struct VerifyOutcome {
    VerifyOptions opts;
    std::vector<SweepCase> sweep;
    std::vector<SplitCase> splits;
    std::vector<SharpnessCase> sharpness;
    std::size_t checked = 0, failed = 0;
    bool all_ok = false;
};

VerifyOutcome run_verify(const VerifyOptions& opts);

// Seeded multi-term extension classes used by the sweep (2..4 distinct
// canonical monomials, small rational coefficients).
std::vector<BiLaurent> random_classes(long j, int count, std::uint64_t seed);

}  // namespace blowup

#endif
