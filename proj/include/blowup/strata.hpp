#ifndef BLOWUP_STRATA_HPP
#define BLOWUP_STRATA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "blowup/invariants.hpp"

namespace blowup {

// Deterministic candidate enumeration for witness searches: the zero class,
// the canonical monomials with coefficient 1, two-term sums with signs, then
// seeded sparse random classes, truncated at `budget` distinct entries.
std::vector<ExtensionClass> candidate_stream(long j, std::size_t budget, std::uint64_t seed = 0);

// The canonical support lattice for splitting type j, in (udeg, zexp) order.
std::vector<Monomial> canonical_support(long j);

struct SpectrumResult {
    long j = 0;
    // One entry per k in [j, j^2]; first witness found in stream order.
    std::map<long, std::optional<ExtensionClass>> witnesses;
    std::size_t candidates_tried = 0;
    std::vector<long> missing;  // charges with no witness within budget
};

SpectrumResult charge_spectrum(long j, std::size_t budget, std::uint64_t seed = 0);

struct StrataCell {
    std::optional<ExtensionClass> witness;
    long charge = 0;
};

struct StrataTable {
    long j = 0;
    // (w, h) = (l(Q), l(R1)) over the box w in [1, j(j+1)/2], h in
    // [j-1, j(j-1)/2]. Values observed outside the box are kept separately.
    std::map<std::pair<long, long>, StrataCell> cells;
    std::vector<std::pair<std::pair<long, long>, ExtensionClass>> outside_box;
    SpectrumResult spectrum;
    std::size_t candidates_tried = 0;
    std::vector<std::pair<long, long>> missing_cells;
};

StrataTable strata_survey(long j, std::size_t budget, std::uint64_t seed = 0);

// First class in the stream realizing (lq, lr1), if any within budget.
std::optional<ExtensionClass> find_witness(long j, long lq, long lr1, std::size_t budget,
                                           std::uint64_t seed = 0);

std::size_t default_budget(long j);

}  // namespace blowup

#endif
