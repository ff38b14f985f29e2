#include "blowup/cech.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "blowup/errors.hpp"

namespace blowup {

namespace {

using CoordKey = std::pair<long, Monomial>;  // (component, monomial)

// Sparse coordinates of a cochain vector against a fixed index map.
SparseVec coords_of(const std::vector<BiLaurent>& v, const std::map<CoordKey, long>& index) {
    SparseVec out;
    for (std::size_t c = 0; c < v.size(); ++c)
        for (const auto& [m, coef] : v[c].terms()) {
            auto it = index.find({static_cast<long>(c), m});
            if (it != index.end()) out.emplace_back(it->second, coef);
        }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<BiLaurent> column_times_monomial(const BLMatrix& T, std::size_t col, Monomial m) {
    std::vector<BiLaurent> v(T.rows());
    const BiLaurent mono = BiLaurent::term(m, 1);
    for (std::size_t r = 0; r < T.rows(); ++r)
        if (!T.at(r, col).is_zero()) v[r] = T.at(r, col) * mono;
    return v;
}

}  // namespace

Window default_window(long j) { return Window{2 * j, -(3 * j + 2), 3 * j + 2}; }

CechResult h0(const BLMatrix& T, const Window& w, bool strict_z_boundary) {
    const std::size_t r = T.cols();
    const long zlo = std::max(0L, w.zmin);

    // Domain: U-holomorphic monomials per component, in (component, u, z)
    // order so kernel representatives are reproducible.
    struct DomainElem {
        long comp;
        Monomial m;
    };
    std::vector<DomainElem> domain;
    for (long c = 0; c < static_cast<long>(r); ++c)
        for (long u = 0; u <= w.umax; ++u)
            for (long z = zlo; z <= w.zmax; ++z) domain.push_back({c, Monomial{z, u}});

    // First pass: collect every coordinate where a non-V-holomorphic term of
    // some image can land.
    std::set<CoordKey> keys;
    std::vector<std::vector<BiLaurent>> images(domain.size());
    for (std::size_t k = 0; k < domain.size(); ++k) {
        auto img = column_times_monomial(T, domain[k].comp, domain[k].m);
        for (auto& comp : img) comp = comp.non_v_part();
        for (std::size_t c = 0; c < img.size(); ++c)
            for (const auto& [m, coef] : img[c].terms()) keys.insert({static_cast<long>(c), m});
        images[k] = std::move(img);
    }
    std::map<CoordKey, long> index;
    long next = 0;
    for (const auto& k : keys) index.emplace(k, next++);

    KernelBuilder kb;
    CechResult out;
    out.window = w;
    for (std::size_t k = 0; k < domain.size(); ++k) {
        auto payload = kb.add(coords_of(images[k], index), SparseVec{{static_cast<long>(k), 1}});
        if (!payload) continue;
        std::vector<BiLaurent> section(r);
        for (const auto& [di, coef] : *payload)
            section[domain[di].comp].add_term(domain[di].m, coef);
        for (const auto& comp : section) {
            if (comp.is_zero()) continue;
            if (comp.max_zexp() == w.zmax) out.boundary_contact = true;
        }
        out.reps.push_back(std::move(section));
    }
    if (strict_z_boundary && out.boundary_contact)
        throw WindowTooSmall("section touches zmax; enlarge the window");
    out.dim = out.reps.size();
    return out;
}

CechResult h1(const BLMatrix& T, const BLMatrix& Tinv, const Window& w) {
    const std::size_t r = T.cols();

    // Quotient coordinates: the z<0 slice of the window (the U-holomorphic
    // cochains span exactly the z>=0 monomials, so they are already gone).
    std::map<CoordKey, long> index;
    std::vector<CoordKey> coords;
    for (long c = 0; c < static_cast<long>(r); ++c)
        for (long u = 0; u <= w.umax; ++u)
            for (long z = w.zmin; z <= -1; ++z) {
                index.emplace(CoordKey{c, Monomial{z, u}}, static_cast<long>(coords.size()));
                coords.push_back({c, Monomial{z, u}});
            }

    // The V side must reach every row, so its z range is padded by the
    // largest downward shift Tinv can apply.
    long shift = 0;
    for (std::size_t i = 0; i < Tinv.rows(); ++i)
        for (std::size_t jj = 0; jj < Tinv.cols(); ++jj)
            if (!Tinv.at(i, jj).is_zero()) shift = std::min(shift, Tinv.at(i, jj).min_zexp());
    const long zlo = w.zmin + shift;  // shift <= 0

    SpanBuilder span;
    Window trunc{w.umax, w.zmin, -1};
    for (long c = 0; c < static_cast<long>(r); ++c)
        for (long u = 0; u <= w.umax; ++u) {
            const long zhi = std::min(u, w.zmax);
            for (long z = zlo; z <= zhi; ++z) {
                auto img = column_times_monomial(Tinv, c, Monomial{z, u});
                for (auto& comp : img) comp = comp.truncated(trunc);
                SparseVec sv = coords_of(img, index);
                if (!sv.empty()) span.add(std::move(sv));
            }
        }

    CechResult out;
    out.window = w;
    out.dim = coords.size() - span.rank();
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (span.has_pivot(static_cast<long>(i))) continue;
        std::vector<BiLaurent> rep(r);
        rep[coords[i].first] = BiLaurent::term(coords[i].second, 1);
        out.reps.push_back(std::move(rep));
    }
    return out;
}

CechResult h1(const BLMatrix& T, const Window& w) { return h1(T, T.inverse_unimodular(), w); }

CechResult h1_stabilized(const BLMatrix& T, const BLMatrix& Tinv, Window w,
                         int max_enlargements) {
    CechResult prev = h1(T, Tinv, w);
    for (int step = 1; step <= max_enlargements; ++step) {
        Window next = w.enlarged();
        CechResult cur = h1(T, Tinv, next);
        if (cur.dim == prev.dim) {
            cur.stabilized = true;
            cur.enlargements = step;
            return cur;
        }
        prev = std::move(cur);
        w = next;
    }
    throw NonStabilized("h1 dimension failed to stabilize after " +
                        std::to_string(max_enlargements) + " window enlargements");
}

CechResult r1_oracle_full(const BundleV& b) {
    if (b.j() == 0) {
        CechResult out;
        out.window = default_window(0);
        out.stabilized = true;
        return out;
    }
    BLMatrix tinv(2, 2);
    tinv.at(0, 0) = BiLaurent::z(-b.j());
    tinv.at(0, 1) = -b.p();
    tinv.at(1, 1) = BiLaurent::z(b.j());
    return h1_stabilized(b.T(), tinv, default_window(b.j()));
}

long r1_oracle(const BundleV& b) { return static_cast<long>(r1_oracle_full(b).dim); }

CechResult moduli_dim_oracle_full(const BundleV& b) {
    if (b.j() == 0) {
        CechResult out;
        out.window = default_window(0);
        out.stabilized = true;
        return out;
    }
    return h1_stabilized(end_transition(b), end_transition_inverse(b), default_window(b.j()));
}

long moduli_dim_oracle(const BundleV& b) {
    return static_cast<long>(moduli_dim_oracle_full(b).dim);
}

namespace {

// Shared driver for hom_space and traceless_auto_dim: kernel of the exact
// identity X T1 - T2 X = 0 over matrices holomorphic on both charts, with
// optional per-monomial trace constraints.
struct EndoKernel {
    std::vector<BLMatrix> basis;
};

EndoKernel endo_kernel(const BLMatrix& T1, const BLMatrix& T2, const Window& w, bool traceless) {
    struct DomainElem {
        std::size_t row, col;
        Monomial m;
    };
    std::vector<DomainElem> domain;
    for (std::size_t e = 0; e < 4; ++e) {
        const std::size_t rr = e / 2, cc = e % 2;
        for (long u = 0; u <= w.umax; ++u)
            for (long z = 0; z <= std::min(u, w.zmax); ++z)
                domain.push_back({rr, cc, Monomial{z, u}});
    }

    // Constraint coordinates live in two blocks: entries of X T1 - T2 X and,
    // when requested, the trace of X.
    std::set<std::pair<long, Monomial>> keys;
    std::vector<std::vector<BiLaurent>> cons(domain.size());
    for (std::size_t k = 0; k < domain.size(); ++k) {
        BLMatrix x(2, 2);
        x.at(domain[k].row, domain[k].col) = BiLaurent::term(domain[k].m, 1);
        BLMatrix d = x * T1 - T2 * x;
        std::vector<BiLaurent> flat{d.at(0, 0), d.at(0, 1), d.at(1, 0), d.at(1, 1)};
        if (traceless) {
            BiLaurent tr = x.at(0, 0) + x.at(1, 1);
            flat.push_back(tr);
        }
        for (std::size_t c = 0; c < flat.size(); ++c)
            for (const auto& [m, coef] : flat[c].terms()) keys.insert({static_cast<long>(c), m});
        cons[k] = std::move(flat);
    }
    std::map<std::pair<long, Monomial>, long> index;
    long next = 0;
    for (const auto& k : keys) index.emplace(k, next++);

    KernelBuilder kb;
    EndoKernel out;
    for (std::size_t k = 0; k < domain.size(); ++k) {
        SparseVec sv;
        for (std::size_t c = 0; c < cons[k].size(); ++c)
            for (const auto& [m, coef] : cons[k][c].terms())
                sv.emplace_back(index.at({static_cast<long>(c), m}), coef);
        std::sort(sv.begin(), sv.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        auto payload = kb.add(std::move(sv), SparseVec{{static_cast<long>(k), 1}});
        if (!payload) continue;
        BLMatrix x(2, 2);
        for (const auto& [di, coef] : *payload)
            x.at(domain[di].row, domain[di].col) += BiLaurent::term(domain[di].m, coef);
        out.basis.push_back(std::move(x));
    }
    return out;
}

}  // namespace

HomResult hom_space(const BundleV& b1, const BundleV& b2, const Window& w) {
    HomResult out;
    out.window = w;
    out.basis = endo_kernel(b1.T(), b2.T(), w, false).basis;
    out.dim = out.basis.size();
    auto bigger = endo_kernel(b1.T(), b2.T(), w.enlarged(), false);
    out.stabilized = bigger.basis.size() == out.dim;
    return out;
}

HomResult hom_space(const BundleV& b1, const BundleV& b2) {
    return hom_space(b1, b2, default_window(std::max(b1.j(), b2.j())));
}

long traceless_auto_dim(const BundleV& b) {
    const Window w = default_window(b.j());
    auto kern = endo_kernel(b.T(), b.T(), w, true);
    // The invariant content is the restriction to the exceptional divisor:
    // traceless endomorphisms vanishing on it exist for large windows even
    // off the split locus, but only the split bundle keeps one alive at u=0.
    SpanBuilder at_divisor;
    std::size_t dim = 0;
    for (const auto& x : kern.basis) {
        SparseVec v;
        for (std::size_t e = 0; e < 4; ++e) {
            Rational c = x.at(e / 2, e % 2).coeff(Monomial{0, 0});
            if (!c.is_zero()) v.emplace_back(static_cast<long>(e), c);
        }
        if (!v.empty() && at_divisor.add(std::move(v))) ++dim;
    }
    return static_cast<long>(dim);
}

}  // namespace blowup
