#include "blowup/strata.hpp"

#include <random>
#include <set>

#include "blowup/errors.hpp"

namespace blowup {

std::vector<Monomial> canonical_support(long j) {
    std::vector<Monomial> out;
    for (long i = 1; i <= 2 * j - 2; ++i)
        for (long l = i - j + 1; l <= j - 1; ++l) out.push_back({l, i});
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t default_budget(long j) { return j >= 4 ? 2000 : 500; }

std::vector<ExtensionClass> candidate_stream(long j, std::size_t budget, std::uint64_t seed) {
    std::vector<ExtensionClass> out;
    std::set<std::string> seen;
    auto push = [&](BiLaurent p) {
        if (out.size() >= budget) return;
        if (!seen.insert(p.to_string()).second) return;
        out.push_back(ExtensionClass{j, std::move(p)});
    };

    push(BiLaurent{});  // the split class
    const std::vector<Monomial> sup = canonical_support(j);
    for (const auto& m : sup) push(BiLaurent::term(m, 1));
    for (std::size_t a = 0; a < sup.size() && out.size() < budget; ++a)
        for (std::size_t b = a + 1; b < sup.size() && out.size() < budget; ++b) {
            BiLaurent p = BiLaurent::term(sup[a], 1);
            push(p + BiLaurent::term(sup[b], 1));
            push(p - BiLaurent::term(sup[b], 1));
        }

    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x853c49e6748fea9bULL + j);
    const long coeff_pool[][2] = {{1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {3, 1}, {1, 2}, {-1, 2}};
    std::size_t guard = 0;
    while (out.size() < budget && !sup.empty() && guard < budget * 40) {
        ++guard;
        std::uniform_int_distribution<std::size_t> nterms(1, std::min<std::size_t>(4, sup.size()));
        const std::size_t t = nterms(rng);
        BiLaurent p;
        std::set<std::size_t> used;
        for (std::size_t i = 0; i < t; ++i) {
            std::uniform_int_distribution<std::size_t> pick(0, sup.size() - 1);
            std::size_t mi = pick(rng);
            if (!used.insert(mi).second) continue;
            std::uniform_int_distribution<std::size_t> cpick(0, std::size(coeff_pool) - 1);
            const auto& c = coeff_pool[cpick(rng)];
            p += BiLaurent::term(sup[mi], Rational(c[0], c[1]));
        }
        if (p.is_zero()) continue;
        push(std::move(p));
    }
    return out;
}

SpectrumResult charge_spectrum(long j, std::size_t budget, std::uint64_t seed) {
    if (j < 1) throw DomainError("charge spectrum needs j >= 1");
    return strata_survey(j, budget, seed).spectrum;
}

StrataTable strata_survey(long j, std::size_t budget, std::uint64_t seed) {
    if (j < 1) throw DomainError("strata survey needs j >= 1");
    StrataTable t;
    t.j = j;
    t.spectrum.j = j;
    for (long k = j; k <= j * j; ++k) t.spectrum.witnesses[k] = std::nullopt;

    const long wlo = 1, whi = j * (j + 1) / 2;
    const long hlo = j - 1, hhi = j * (j - 1) / 2;
    const std::size_t total_cells =
        static_cast<std::size_t>(whi - wlo + 1) * static_cast<std::size_t>(hhi - hlo + 1);

    auto box_full = [&] {
        if (t.cells.size() < total_cells) return false;
        for (const auto& [k, w] : t.spectrum.witnesses)
            if (!w) return false;
        return true;
    };

    const auto stream = candidate_stream(j, budget, seed);
    for (const auto& cand : stream) {
        if (box_full()) break;
        ++t.candidates_tried;
        BundleV b = make_bundle(j, cand.p);
        InvariantReport r = report(b);  // Throw policy: mismatches abort the survey
        const std::pair<long, long> cell{r.lq_oracle, r.lr1_oracle};
        const bool in_box = cell.first >= wlo && cell.first <= whi && cell.second >= hlo &&
                            cell.second <= hhi;
        if (in_box) {
            if (!t.cells.count(cell)) t.cells[cell] = StrataCell{cand, r.charge};
        } else {
            t.outside_box.emplace_back(cell, cand);
        }
        auto it = t.spectrum.witnesses.find(r.charge);
        if (it != t.spectrum.witnesses.end() && !it->second) it->second = cand;
    }
    t.spectrum.candidates_tried = t.candidates_tried;

    for (long w = wlo; w <= whi; ++w)
        for (long h = hlo; h <= hhi; ++h)
            if (!t.cells.count({w, h})) t.missing_cells.emplace_back(w, h);
    for (const auto& [k, w] : t.spectrum.witnesses)
        if (!w) t.spectrum.missing.push_back(k);
    return t;
}

std::optional<ExtensionClass> find_witness(long j, long lq, long lr1, std::size_t budget,
                                           std::uint64_t seed) {
    for (const auto& cand : candidate_stream(j, budget, seed)) {
        BundleV b = make_bundle(j, cand.p);
        InvariantReport r = report(b);
        if (r.lq_oracle == lq && r.lr1_oracle == lr1) return cand;
    }
    return std::nullopt;
}

}  // namespace blowup
