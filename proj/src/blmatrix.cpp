#include "blowup/blmatrix.hpp"

#include "blowup/errors.hpp"

namespace blowup {

BLMatrix BLMatrix::identity(std::size_t n) {
    BLMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = BiLaurent::constant(1);
    return m;
}

BLMatrix operator*(const BLMatrix& a, const BLMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    BLMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BiLaurent& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * b.at(k, j);
            }
        }
    return r;
}

BLMatrix operator+(const BLMatrix& a, const BLMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum shape mismatch");
    BLMatrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
}

BLMatrix operator-(const BLMatrix& a, const BLMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix diff shape mismatch");
    BLMatrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
}

bool operator==(const BLMatrix& a, const BLMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

std::vector<BiLaurent> BLMatrix::apply(const std::vector<BiLaurent>& v) const {
    if (v.size() != cols_) throw DomainError("matrix apply shape mismatch");
    std::vector<BiLaurent> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            r[i] += at(i, j) * v[j];
        }
    return r;
}

BLMatrix BLMatrix::minor_matrix(std::size_t r, std::size_t c) const {
    BLMatrix m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
            if (j == c) continue;
            m.at(mi, mj) = at(i, j);
            ++mj;
        }
        ++mi;
    }
    return m;
}

BiLaurent BLMatrix::det() const {
    if (rows_ != cols_) throw DomainError("determinant of non-square matrix");
    if (rows_ == 0) return BiLaurent::constant(1);
    if (rows_ == 1) return at(0, 0);
    if (rows_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    BiLaurent d;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (at(0, j).is_zero()) continue;
        BiLaurent cof = at(0, j) * minor_matrix(0, j).det();
        if (j % 2 == 0)
            d += cof;
        else
            d -= cof;
    }
    return d;
}

BLMatrix BLMatrix::inverse_unimodular() const {
    if (rows_ != cols_) throw DomainError("inverse of non-square matrix");
    if (!(det() == BiLaurent::constant(1)))
        throw DomainError("inverse requires unit determinant");
    const std::size_t n = rows_;
    BLMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            BiLaurent cof = minor_matrix(j, i).det();
            adj.at(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return adj;
}

}  // namespace blowup
