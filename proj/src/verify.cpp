#include "blowup/verify.hpp"

#include <random>
#include <set>

#include "blowup/strata.hpp"

namespace blowup {

std::vector<BiLaurent> random_classes(long j, int count, std::uint64_t seed) {
    const std::vector<Monomial> sup = canonical_support(j);
    std::vector<BiLaurent> out;
    if (sup.empty()) return out;
    std::mt19937_64 rng(seed ^ (0xda3e39cb94b95bdbULL + static_cast<std::uint64_t>(j) * 1000003));
    const long coeff_pool[][2] = {{1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {3, 1}, {1, 2}, {-1, 2}};
    while (static_cast<int>(out.size()) < count) {
        std::uniform_int_distribution<std::size_t> nterms(2, std::min<std::size_t>(4, sup.size()));
        std::size_t t = sup.size() == 1 ? 1 : nterms(rng);
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
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

// Extra-enlargement probes for the robustness checks.
long h1_dim_at(const BundleV& b, const Window& w) {
    BLMatrix tinv(2, 2);
    tinv.at(0, 0) = BiLaurent::z(-b.j());
    tinv.at(0, 1) = -b.p();
    tinv.at(1, 1) = BiLaurent::z(b.j());
    return static_cast<long>(h1(b.T(), tinv, w).dim);
}

long h1_end_dim_at(const BundleV& b, const Window& w) {
    return static_cast<long>(h1(end_transition(b), end_transition_inverse(b), w).dim);
}

void run_sweep_case(SweepCase& c, const BiLaurent& p, bool robust) {
    try {
        BundleV b = make_bundle(c.j, p);
        auto m = u_multiplicity(p);
        c.m = m.value_or(0);

        CechResult r1 = r1_oracle_full(b);
        c.lr1_oracle = static_cast<long>(r1.dim);
        c.lr1_formula = r1_formula(c.j, m);
        c.lr1_ok = c.lr1_oracle == c.lr1_formula;

        CechResult me = moduli_dim_oracle_full(b);
        c.h1end_oracle = static_cast<long>(me.dim);
        c.h1end_formula = m ? moduli_dim_formula(c.j, *m) : -1;
        c.h1end_ok = m && c.h1end_oracle == c.h1end_formula;

        if (robust) {
            c.robust_ok = h1_dim_at(b, r1.window.enlarged()) == c.lr1_oracle &&
                          h1_end_dim_at(b, me.window.enlarged()) == c.h1end_oracle;
        }
    } catch (const Error& e) {
        c.error = e.what();
    }
}

}  // namespace

VerifyOutcome run_verify(const VerifyOptions& opts) {
    VerifyOutcome out;
    out.opts = opts;

    for (long j = 2; j <= opts.jmax; ++j) {
        for (const auto& m : canonical_support(j)) {
            SweepCase c;
            c.j = j;
            c.canonical = true;
            BiLaurent p = BiLaurent::term(m, 1);
            c.p_text = p.to_string();
            run_sweep_case(c, p, opts.robust);
            out.sweep.push_back(std::move(c));
        }
        for (const auto& p : random_classes(j, opts.samples, opts.seed)) {
            SweepCase c;
            c.j = j;
            c.canonical = false;
            c.p_text = p.to_string();
            run_sweep_case(c, p, opts.robust);
            out.sweep.push_back(std::move(c));
        }
    }

    for (long j = 1; j <= opts.jmax; ++j) {
        SplitCase s;
        s.j = j;
        try {
            BundleV b = make_bundle(j, BiLaurent{});
            s.lr1 = r1_oracle(b);
            LqResult lr = lq_oracle_full(b);
            s.lq = lr.lq;
            s.charge = s.lq + s.lr1;
            s.ok = s.lr1 == j * (j - 1) / 2 && s.lq == j * (j + 1) / 2 && s.charge == j * j;
            if (opts.robust) s.robust_ok = lq_at(b, lr.D + 2).lq == s.lq;
        } catch (const Error& e) {
            s.error = e.what();
        }
        out.splits.push_back(std::move(s));
    }

    for (long j = 2; j <= std::min<long>(3, opts.jmax); ++j) {
        SharpnessCase c;
        c.j = j;
        try {
            BiLaurent p = BiLaurent::u(1);
            c.p_text = p.to_string();
            c.charge = charge(make_bundle(j, p));
            c.ok = c.charge == j;
        } catch (const Error& e) {
            c.error = e.what();
        }
        out.sharpness.push_back(std::move(c));
    }

    out.checked = out.sweep.size() + out.splits.size() + out.sharpness.size();
    for (const auto& c : out.sweep)
        if (!c.ok()) ++out.failed;
    for (const auto& s : out.splits)
        if (!s.ok || !s.error.empty() || !s.robust_ok) ++out.failed;
    for (const auto& s : out.sharpness)
        if (!s.ok || !s.error.empty()) ++out.failed;
    out.all_ok = out.failed == 0;
    return out;
}

}  // namespace blowup
