#include "blowup/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>

#include "blowup/errors.hpp"

namespace blowup {

namespace {

// One Bareiss forward elimination. The row updates of each pivot step are
// independent; `parallel` turns them into an OpenMP loop.
EchelonForm bareiss(QMatrix m, bool parallel) {
    const std::size_t rows = m.rows(), cols = m.cols();
    EchelonForm out{std::move(m), {}, 0};
    QMatrix& a = out.m;
    Rational prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a.at(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a.at(r, j), a.at(piv, j));
        const Rational p = a.at(r, c);
        const long lr = static_cast<long>(r), lc = static_cast<long>(c);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
        for (long i = lr + 1; i < static_cast<long>(rows); ++i) {
            const Rational f = a.at(i, lc);
            for (std::size_t j = c; j < cols; ++j)
                a.at(i, j) = (a.at(i, j) * p - f * a.at(lr, j)) / prev;
        }
        prev = p;
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    (void)parallel;
    return out;
}

}  // namespace

EchelonForm eliminate_serial(QMatrix m) { return bareiss(std::move(m), false); }
EchelonForm eliminate_omp(QMatrix m) { return bareiss(std::move(m), true); }

EchelonForm eliminate(QMatrix m) {
    const bool big = m.rows() * m.cols() >= 4096;
    return bareiss(std::move(m), big);
}

std::size_t rank(const QMatrix& m) { return eliminate(m).rank; }

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
    const std::size_t cols = m.cols();
    EchelonForm e = eliminate(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[fc] = Rational(1);
        // Back substitution over the echelon rows above/at fc.
        for (std::size_t ri = e.rank; ri-- > 0;) {
            const std::size_t pc = e.pivot_cols[ri];
            if (pc > fc) continue;
            Rational s(0);
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (x[j].is_zero()) continue;
                s += e.m.at(ri, j) * x[j];
            }
            x[pc] = -s / e.m.at(ri, pc);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const QMatrix& m, const std::vector<Rational>& b) {
    if (b.size() != m.rows()) throw DomainError("solve shape mismatch");
    QMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    EchelonForm e = eliminate(std::move(aug));
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;

    std::vector<Rational> x(m.cols(), Rational(0));
    for (std::size_t ri = e.rank; ri-- > 0;) {
        const std::size_t pc = e.pivot_cols[ri];
        Rational s = e.m.at(ri, m.cols());
        for (std::size_t j = pc + 1; j < m.cols(); ++j) {
            if (x[j].is_zero()) continue;
            s -= e.m.at(ri, j) * x[j];
        }
        x[pc] = s / e.m.at(ri, pc);
    }
    return x;
}

SparseVec sparse_axpy(const SparseVec& x, const Rational& c, const SparseVec& y) {
    SparseVec r;
    r.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i].first < y[j].first) {
            r.push_back(x[i++]);
        } else if (x[i].first > y[j].first) {
            r.emplace_back(y[j].first, c * y[j].second);
            ++j;
        } else {
            Rational v = x[i].second + c * y[j].second;
            if (!v.is_zero()) r.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    for (; i < x.size(); ++i) r.push_back(x[i]);
    for (; j < y.size(); ++j) r.emplace_back(y[j].first, c * y[j].second);
    return r;
}

SparseVec SpanBuilder::reduce(SparseVec v) const {
    // Front elimination only: a vector whose leading coordinate carries no
    // pivot cannot be a combination of stored rows (every combination leads
    // with some pivot index), so it is already known independent.
    while (!v.empty()) {
        auto it = rows_.find(v.front().first);
        if (it == rows_.end()) return v;
        v = sparse_axpy(v, -v.front().second, it->second);
    }
    return v;
}

bool SpanBuilder::add(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const Rational lead = v.front().second;
    for (auto& [i, c] : v) c /= lead;
    rows_.emplace(v.front().first, std::move(v));
    return true;
}

std::optional<SparseVec> KernelBuilder::add(SparseVec main, SparseVec payload) {
    while (!main.empty()) {
        auto it = rows_.find(main.front().first);
        if (it == rows_.end()) break;
        const Rational c = -main.front().second;
        main = sparse_axpy(main, c, it->second.first);
        payload = sparse_axpy(payload, c, it->second.second);
    }
    if (main.empty()) return payload;
    const Rational lead = main.front().second;
    for (auto& [i, c] : main) c /= lead;
    for (auto& [i, c] : payload) c /= lead;
    rows_.emplace(main.front().first, std::make_pair(std::move(main), std::move(payload)));
    return std::nullopt;
}

}  // namespace blowup
