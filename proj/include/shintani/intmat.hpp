#pragma once

// Dense int64 matrices with Smith normal form. Used for residue rings,
// unit-group structure and simplicial homology.

#include "shintani/field.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace shintani {

class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    static IntMatrix identity(size_t n);
    static IntMatrix from_mat2(const Mat2& m);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    int64_t& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    int64_t operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;
    bool is_zero() const;
    IntMatrix transpose() const;
    Mat2 to_mat2() const;

  private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<int64_t> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    std::vector<int64_t> diagonal() const;
    size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& A);

/// Inverse of a unimodular 2x2 matrix.
Mat2 unimodular_inverse(const Mat2& m);
int64_t det(const Mat2& m);

/// Hermite basis [[h11, h12], [0, h22]] (columns are basis vectors) of the
/// full-rank sublattice of Z^2 generated by the given vectors; h11, h22 > 0,
/// 0 <= h12 < h11.
Mat2 lattice_hnf(const std::vector<Coords>& generators);

/// Membership of x in the lattice spanned by the columns of a nonsingular basis.
bool lattice_contains(const Mat2& basis, const Coords& x);

}  // namespace shintani
