#ifndef BLOWUP_LINALG_HPP
#define BLOWUP_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "blowup/rational.hpp"

namespace blowup {

// ---------------------------------------------------------------------------
// Dense exact matrices with fraction-free (Bareiss) elimination.
//
// eliminate_serial is the reference implementation; eliminate_omp runs the
// row-update loop of each pivot step under OpenMP. Both take the first
// nonzero pivot in fixed row order, so they produce the same echelon form
// entry for entry. bench/bench_elim compares them.
// ---------------------------------------------------------------------------

class QMatrix {
public:
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

struct EchelonForm {
    QMatrix m;                       // row echelon, fraction-free scaling
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

EchelonForm eliminate_serial(QMatrix m);
EchelonForm eliminate_omp(QMatrix m);
// Dispatches to the OpenMP kernel for matrices worth the fork overhead.
EchelonForm eliminate(QMatrix m);

std::size_t rank(const QMatrix& m);
// Basis of { x : m x = 0 }, deterministic: one vector per free column, unit
// coefficient at that column, produced in column order.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);
// One solution of m x = b, if any.
std::optional<std::vector<Rational>> solve(const QMatrix& m, const std::vector<Rational>& b);

// ---------------------------------------------------------------------------
// Sparse incremental echelon over an arbitrary coordinate index space.
//
// The cohomology and module computations generate long streams of very
// sparse vectors; SpanBuilder keeps a reduced row basis keyed by leading
// index (smallest coordinate first), so membership tests, rank and pivot
// sets are deterministic in the insertion order.
// ---------------------------------------------------------------------------

// Sorted by index, no zero coefficients.
using SparseVec = std::vector<std::pair<long, Rational>>;

SparseVec sparse_axpy(const SparseVec& x, const Rational& c, const SparseVec& y);  // x + c*y

class SpanBuilder {
public:
    // Reduces v against the stored rows; returns the residual.
    SparseVec reduce(SparseVec v) const;
    // Adds v to the span. Returns true when v was independent.
    bool add(SparseVec v);
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    std::size_t rank() const { return rows_.size(); }
    const std::map<long, SparseVec>& rows() const { return rows_; }
    bool has_pivot(long idx) const { return rows_.count(idx) != 0; }

private:
    std::map<long, SparseVec> rows_;  // leading index -> normalized row
};

// Tracks kernel combinations alongside the span: vectors are fed together
// with a payload (typically a unit vector in the domain); when the main part
// reduces to zero the accumulated payload combination is a kernel element.
class KernelBuilder {
public:
    // Returns the kernel payload when `main` was dependent, nullopt otherwise.
    std::optional<SparseVec> add(SparseVec main, SparseVec payload);
    std::size_t rank() const { return rows_.size(); }

private:
    std::map<long, std::pair<SparseVec, SparseVec>> rows_;
};

}  // namespace blowup

#endif
