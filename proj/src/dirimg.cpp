#include "blowup/dirimg.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "blowup/errors.hpp"

namespace blowup {

namespace {

// On-demand dense indexing of arbitrary ordered keys. Encounter order is a
// valid total order for the span builders and is reproducible run to run.
template <typename Key>
class CoordIndex {
public:
    long get(const Key& k) {
        auto [it, inserted] = map_.try_emplace(k, next_);
        if (inserted) ++next_;
        return it->second;
    }

private:
    std::map<Key, long> map_;
    long next_ = 0;
};

using SecKey = std::pair<long, Monomial>;  // (component, monomial) of a section
using SlotKey = std::pair<long, XYMono>;   // (generator slot, ring monomial)

SparseVec section_coords(const std::vector<BiLaurent>& s, CoordIndex<SecKey>& ix) {
    SparseVec v;
    for (std::size_t c = 0; c < s.size(); ++c)
        for (const auto& [m, coef] : s[c].terms())
            v.emplace_back(ix.get({static_cast<long>(c), m}), coef);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

SparseVec slot_coords(const std::vector<XYPoly>& phi, CoordIndex<SlotKey>& ix) {
    SparseVec v;
    for (std::size_t t = 0; t < phi.size(); ++t)
        for (const auto& [m, coef] : phi[t].terms())
            v.emplace_back(ix.get({static_cast<long>(t), m}), coef);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

std::vector<BiLaurent> scale_section(const std::vector<BiLaurent>& s, const XYMono& m) {
    const BiLaurent factor = XYPoly::term(m, 1).realize();
    std::vector<BiLaurent> out(s.size());
    for (std::size_t c = 0; c < s.size(); ++c)
        if (!s[c].is_zero()) out[c] = factor * s[c];
    return out;
}

long section_u_order(const std::vector<BiLaurent>& s) {
    long best = -1;
    for (const auto& comp : s) {
        auto mu = comp.min_udeg();
        if (mu && (best < 0 || *mu < best)) best = *mu;
    }
    return best < 0 ? 0 : best;
}

long vector_degree(const std::vector<XYPoly>& phi) {
    long d = 0;
    for (const auto& q : phi)
        if (!q.is_zero()) d = std::max(d, q.deg());
    return d;
}

}  // namespace

ModulePresentation pushforward_module(const BundleV& b, long D) {
    const long j = b.j();
    const Window w{D, 0, D + 2 * j + 2};
    CechResult sections = h0(b.T(), w, /*strict_z_boundary=*/true);

    // Process section candidates in u-filtration order.
    std::vector<std::size_t> order(sections.reps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) {
        return section_u_order(sections.reps[a]) < section_u_order(sections.reps[c]);
    });

    const std::vector<XYMono> ring = xy_monomials_upto(D);

    ModulePresentation out;
    out.trunc_degree = D;

    CoordIndex<SecKey> ix;
    SpanBuilder span;
    for (std::size_t oi : order) {
        const auto& cand = sections.reps[oi];
        if (span.contains(section_coords(cand, ix))) continue;
        out.sections.push_back(cand);
        out.degree_tags.push_back(section_u_order(cand));
        for (const auto& m : ring) span.add(section_coords(scale_section(cand, m), ix));
    }
    out.gens = out.sections.size();

    // Exact syzygies up to degree D: kernel of (t, m) -> m * g_t.
    CoordIndex<SecKey> ix2;
    KernelBuilder kb;
    std::vector<std::vector<XYPoly>> syzygies;
    long col = 0;
    for (std::size_t t = 0; t < out.gens; ++t)
        for (const auto& m : ring) {
            auto payload =
                kb.add(section_coords(scale_section(out.sections[t], m), ix2), {{col, 1}});
            ++col;
            if (!payload) continue;
            std::vector<XYPoly> r(out.gens);
            for (const auto& [ci, coef] : *payload) {
                const std::size_t tt = ci / ring.size();
                const XYMono& mm = ring[ci % ring.size()];
                r[tt].add_term(mm, coef);
            }
            syzygies.push_back(std::move(r));
        }

    // Keep a generating set: drop syzygies that lie in the multiple-span of
    // earlier ones. Kernel vectors already come out in degree-friendly order
    // but sort anyway to make the selection explicit.
    std::stable_sort(syzygies.begin(), syzygies.end(),
                     [](const auto& a, const auto& c) { return vector_degree(a) < vector_degree(c); });
    CoordIndex<SlotKey> rix;
    SpanBuilder rel_span;
    for (auto& syz : syzygies) {
        if (rel_span.contains(slot_coords(syz, rix))) continue;
        const long dr = vector_degree(syz);
        for (const auto& m : ring) {
            if (m.deg() + dr > D) continue;
            std::vector<XYPoly> mult(out.gens);
            for (std::size_t t = 0; t < out.gens; ++t) mult[t] = XYPoly::term(m, 1) * syz[t];
            rel_span.add(slot_coords(mult, rix));
        }
        out.rels.push_back(std::move(syz));
    }

    // Every stored relation must annihilate the realized generators exactly.
    for (const auto& r : out.rels) {
        std::vector<BiLaurent> acc(2);
        for (std::size_t t = 0; t < out.gens; ++t) {
            const BiLaurent f = r[t].realize();
            for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += f * out.sections[t][c];
        }
        for (const auto& compo : acc)
            if (!compo.is_zero())
                throw Error("internal: pushforward relation fails to annihilate");
    }
    return out;
}

ModulePresentation pushforward_module_checked(const BundleV& b, long D) {
    ModulePresentation a = pushforward_module(b, D);
    ModulePresentation c = pushforward_module(b, D + 2);
    if (a.gens != c.gens)
        throw NonStabilized("pushforward generator count changed between D=" +
                            std::to_string(D) + " and D+2");
    return a;
}

ModulePresentation dualize(const ModulePresentation& p, long D) {
    const std::vector<XYMono> ring = xy_monomials_upto(D);
    const long gen_cap = D / 2;

    // Solution space of phi . rels == 0 (mod degree > D), unknowns phi as
    // columns (slot, monomial).
    CoordIndex<std::pair<long, XYMono>> cix;  // (relation index, product monomial)
    KernelBuilder kb;
    std::vector<std::vector<XYPoly>> solutions;
    long col = 0;
    for (std::size_t t = 0; t < p.gens; ++t)
        for (const auto& m : ring) {
            SparseVec main;
            for (std::size_t ri = 0; ri < p.rels.size(); ++ri) {
                const XYPoly prod = (XYPoly::term(m, 1) * p.rels[ri][t]).truncated(D);
                for (const auto& [mm, coef] : prod.terms())
                    main.emplace_back(cix.get({static_cast<long>(ri), mm}), coef);
            }
            std::sort(main.begin(), main.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            auto payload = kb.add(std::move(main), {{col, 1}});
            ++col;
            if (!payload) continue;
            std::vector<XYPoly> phi(p.gens);
            for (const auto& [ci, coef] : *payload) {
                const std::size_t tt = ci / ring.size();
                phi[tt].add_term(ring[ci % ring.size()], coef);
            }
            solutions.push_back(std::move(phi));
        }

    std::stable_sort(solutions.begin(), solutions.end(), [](const auto& a, const auto& c) {
        return vector_degree(a) < vector_degree(c);
    });

    ModulePresentation out;
    out.trunc_degree = D;

    // Minimal generators by increasing degree. Solutions above gen_cap are
    // truncation tails, not module elements; stabilization over D would
    // surface any genuine generator this cut ever hid.
    CoordIndex<SlotKey> six;
    SpanBuilder span;
    for (auto& phi : solutions) {
        const long d = vector_degree(phi);
        if (d > gen_cap) continue;
        if (span.contains(slot_coords(phi, six))) continue;
        out.degree_tags.push_back(d);
        for (const auto& m : ring) {
            if (m.deg() + d > D) continue;
            std::vector<XYPoly> mult(p.gens);
            for (std::size_t t = 0; t < p.gens; ++t) mult[t] = XYPoly::term(m, 1) * phi[t];
            span.add(slot_coords(mult, six));
        }
        out.gen_vectors.push_back(std::move(phi));
    }
    out.gens = out.gen_vectors.size();

    // Relations among the accepted generators. Multiplier degrees are capped
    // so products stay exact; the kernel then contains no truncation junk.
    long maxgd = 0;
    for (const auto& d : out.degree_tags) maxgd = std::max(maxgd, d);
    const long relcap = D - maxgd;
    CoordIndex<SlotKey> rix;
    KernelBuilder rkb;
    std::vector<XYMono> relring = xy_monomials_upto(relcap);
    std::vector<std::vector<XYPoly>> rsyz;
    col = 0;
    for (std::size_t s = 0; s < out.gens; ++s)
        for (const auto& m : relring) {
            std::vector<XYPoly> mult(p.gens);
            for (std::size_t t = 0; t < p.gens; ++t)
                mult[t] = XYPoly::term(m, 1) * out.gen_vectors[s][t];
            auto payload = rkb.add(slot_coords(mult, rix), {{col, 1}});
            ++col;
            if (!payload) continue;
            std::vector<XYPoly> r(out.gens);
            for (const auto& [ci, coef] : *payload)
                r[ci / relring.size()].add_term(relring[ci % relring.size()], coef);
            rsyz.push_back(std::move(r));
        }
    std::stable_sort(rsyz.begin(), rsyz.end(), [](const auto& a, const auto& c) {
        return vector_degree(a) < vector_degree(c);
    });
    CoordIndex<SlotKey> rrix;
    SpanBuilder rspan;
    for (auto& r : rsyz) {
        if (rspan.contains(slot_coords(r, rrix))) continue;
        const long dr = vector_degree(r);
        for (const auto& m : relring) {
            if (m.deg() + dr > relcap) continue;
            std::vector<XYPoly> mult(out.gens);
            for (std::size_t s = 0; s < out.gens; ++s) mult[s] = XYPoly::term(m, 1) * r[s];
            rspan.add(slot_coords(mult, rrix));
        }
        out.rels.push_back(std::move(r));
    }
    return out;
}

namespace {

// C-dimension at truncation degree d of span{ m * vecs } inside R^slots.
std::size_t multiple_span_rank(const std::vector<std::vector<XYPoly>>& vecs, long d,
                               CoordIndex<SlotKey>& ix, SpanBuilder& span) {
    const std::vector<XYMono> ring = xy_monomials_upto(d);
    for (const auto& v : vecs)
        for (const auto& m : ring) {
            std::vector<XYPoly> mult(v.size());
            for (std::size_t t = 0; t < v.size(); ++t)
                mult[t] = (XYPoly::term(m, 1) * v[t]).truncated(d);
            SparseVec sv = slot_coords(mult, ix);
            if (!sv.empty()) span.add(std::move(sv));
        }
    return span.rank();
}

std::size_t multiple_span_rank(const std::vector<std::vector<XYPoly>>& vecs, long d) {
    CoordIndex<SlotKey> ix;
    SpanBuilder span;
    return multiple_span_rank(vecs, d, ix, span);
}

}  // namespace

LqComputation lq_at(const BundleV& b, long D) {
    LqComputation out;
    out.D = D;
    out.M = pushforward_module(b, D);
    out.dual = dualize(out.M, D);
    out.bidual = dualize(out.dual, D);

    // rho(g_k) as a coordinate vector against the dual generators.
    std::vector<std::vector<XYPoly>> rho_vec(out.M.gens);
    for (std::size_t k = 0; k < out.M.gens; ++k) {
        rho_vec[k].resize(out.dual.gens);
        for (std::size_t t = 0; t < out.dual.gens; ++t)
            rho_vec[k][t] = out.dual.gen_vectors[t][k];
    }

    // Express rho(g_k) in the bidual generators (the EvalMap); membership in
    // the bidual span is also the consistency check for the embedding.
    {
        const std::vector<XYMono> ring = xy_monomials_upto(D);
        CoordIndex<SlotKey> ix;
        KernelBuilder kb;
        long col = 0;
        for (std::size_t s = 0; s < out.bidual.gens; ++s)
            for (const auto& m : ring) {
                std::vector<XYPoly> mult(out.dual.gens);
                for (std::size_t t = 0; t < out.dual.gens; ++t)
                    mult[t] = (XYPoly::term(m, 1) * out.bidual.gen_vectors[s][t]).truncated(D);
                kb.add(slot_coords(mult, ix), {{col, 1}});
                ++col;
            }
        out.eval.rho.assign(out.M.gens, std::vector<XYPoly>(out.bidual.gens));
        for (std::size_t k = 0; k < out.M.gens; ++k) {
            KernelBuilder probe = kb;  // keep the Psi span pristine per solve
            auto payload = probe.add(slot_coords(rho_vec[k], ix), {{col, 1}});
            if (!payload) continue;  // not in the bidual span at this cap
            for (const auto& [ci, coef] : *payload) {
                if (ci >= col) continue;  // the rho column itself
                const std::size_t s = ci / ring.size();
                // The payload solves  rho + sum c_sm m*Psi_s = 0  (up to the
                // unit normalization at the rho slot), so flip signs.
                out.eval.rho[k][s].add_term(ring[ci % ring.size()], -coef);
            }
        }
    }

    // Cokernel dimension profile: l_d = rank(bidual multiples) - rank(rho
    // multiples) at each truncation degree, watched for a plateau.
    std::vector<long> profile;
    bool consistent = true;
    for (long d = 0; d <= D; ++d) {
        CoordIndex<SlotKey> ix;
        SpanBuilder span;
        const std::size_t r_psi = multiple_span_rank(out.bidual.gen_vectors, d, ix, span);
        // Continuing into the same span gives the union rank; rho must not
        // stick out of the bidual.
        const std::size_t r_union = multiple_span_rank(rho_vec, d, ix, span);
        if (r_union != r_psi) consistent = false;
        const std::size_t r_rho = multiple_span_rank(rho_vec, d);
        profile.push_back(static_cast<long>(r_psi) - static_cast<long>(r_rho));
    }
    out.lq = profile.back();
    out.plateau = consistent && profile.size() >= 2 && profile[profile.size() - 2] == out.lq;
    return out;
}

LqResult lq_oracle_full(const BundleV& b) {
    if (b.j() == 0) return {0, 0, 0};
    const long j = b.j();
    long D = 2 * j + 2;
    LqComputation a = lq_at(b, D);
    for (int step = 0; step < 5; ++step) {
        LqComputation c = lq_at(b, D + 2);
        const bool agree = a.M.gens == c.M.gens && a.M.rels.size() == c.M.rels.size() &&
                           a.lq == c.lq && a.plateau && c.plateau;
        if (agree) return {c.lq, D + 2, step + 1};
        a = std::move(c);
        D += 2;
    }
    throw NonStabilized("l(Q) failed to stabilize for j=" + std::to_string(b.j()));
}

long lq_oracle(const BundleV& b) { return lq_oracle_full(b).lq; }

long charge(const BundleV& b) { return lq_oracle(b) + r1_oracle(b); }

}  // namespace blowup
