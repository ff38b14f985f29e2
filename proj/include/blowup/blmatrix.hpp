#ifndef BLOWUP_BLMATRIX_HPP
#define BLOWUP_BLMATRIX_HPP

#include <cstddef>
#include <vector>

#include "blowup/bilaurent.hpp"

namespace blowup {

// Rectangular matrix with BiLaurent entries. Transition matrices and cochain
// maps are small (2x2 or 4x4), so the arithmetic here is naive and exact.
class BLMatrix {
public:
    BLMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    static BLMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BiLaurent& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const BiLaurent& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    friend BLMatrix operator*(const BLMatrix& a, const BLMatrix& b);
    friend BLMatrix operator+(const BLMatrix& a, const BLMatrix& b);
    friend BLMatrix operator-(const BLMatrix& a, const BLMatrix& b);
    friend bool operator==(const BLMatrix& a, const BLMatrix& b);

    std::vector<BiLaurent> apply(const std::vector<BiLaurent>& v) const;

    BiLaurent det() const;  // square only, Laplace expansion
    // Inverse of a unit-determinant square matrix (the adjugate). Throws
    // DomainError when det != 1.
    BLMatrix inverse_unimodular() const;

private:
    BLMatrix minor_matrix(std::size_t r, std::size_t c) const;
    std::size_t rows_, cols_;
    std::vector<BiLaurent> e_;
};

}  // namespace blowup

#endif
