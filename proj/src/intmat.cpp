#include "shintani/intmat.hpp"

#include "shintani/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace shintani {

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_mat2(const Mat2& m) {
    IntMatrix r(2, 2);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) r(i, j) = m[i][j];
    return r;
}

Mat2 IntMatrix::to_mat2() const {
    require(rows_ == 2 && cols_ == 2, ErrorCode::Internal, "matrix is not 2x2");
    return Mat2{{{(*this)(0, 0), (*this)(0, 1)}, {(*this)(1, 0), (*this)(1, 1)}}};
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    require(cols_ == o.rows_, ErrorCode::Internal, "matrix dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            int64_t a = (*this)(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) r(i, j) = checked_add(r(i, j), checked_mul(a, o(k, j)));
        }
    return r;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](int64_t v) { return v == 0; });
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<int64_t> SmithForm::diagonal() const {
    std::vector<int64_t> d;
    for (size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
}

size_t SmithForm::rank() const {
    size_t r = 0;
    for (int64_t d : diagonal())
        if (d != 0) ++r;
    return r;
}

namespace {

void swap_rows(IntMatrix& m, size_t a, size_t b) {
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, size_t a, size_t b) {
    for (size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row_a += k * row_b
void add_row(IntMatrix& m, size_t a, size_t b, int64_t k) {
    for (size_t j = 0; j < m.cols(); ++j) m(a, j) = checked_add(m(a, j), checked_mul(k, m(b, j)));
}
void add_col(IntMatrix& m, size_t a, size_t b, int64_t k) {
    for (size_t i = 0; i < m.rows(); ++i) m(i, a) = checked_add(m(i, a), checked_mul(k, m(i, b)));
}
void negate_row(IntMatrix& m, size_t a) {
    for (size_t j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
    IntMatrix D = A;
    IntMatrix U = IntMatrix::identity(A.rows());
    IntMatrix V = IntMatrix::identity(A.cols());
    const size_t n = std::min(A.rows(), A.cols());
    for (size_t t = 0; t < n; ++t) {
        while (true) {
            // smallest nonzero entry of the trailing block becomes the pivot
            size_t pr = 0, pc = 0;
            int64_t best = 0;
            for (size_t i = t; i < D.rows(); ++i)
                for (size_t j = t; j < D.cols(); ++j)
                    if (D(i, j) != 0 && (best == 0 || std::llabs(D(i, j)) < best)) {
                        best = std::llabs(D(i, j));
                        pr = i;
                        pc = j;
                    }
            if (best == 0) goto done;
            swap_rows(D, t, pr);
            swap_rows(U, t, pr);
            swap_cols(D, t, pc);
            swap_cols(V, t, pc);
            bool clean = true;
            for (size_t i = t + 1; i < D.rows(); ++i) {
                int64_t q = floor_div(D(i, t), D(t, t));
                if (q != 0) {
                    add_row(D, i, t, -q);
                    add_row(U, i, t, -q);
                }
                if (D(i, t) != 0) clean = false;
            }
            for (size_t j = t + 1; j < D.cols(); ++j) {
                int64_t q = floor_div(D(t, j), D(t, t));
                if (q != 0) {
                    add_col(D, j, t, -q);
                    add_col(V, j, t, -q);
                }
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility: fold any offending row into the pivot row
            bool divisible = true;
            for (size_t i = t + 1; i < D.rows() && divisible; ++i)
                for (size_t j = t + 1; j < D.cols(); ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        add_row(D, t, i, 1);
                        add_row(U, t, i, 1);
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (D(t, t) < 0) {
            negate_row(D, t);
            negate_row(U, t);
        }
    }
done:
    return SmithForm{std::move(U), std::move(D), std::move(V)};
}

int64_t det(const Mat2& m) { return checked_sub(checked_mul(m[0][0], m[1][1]), checked_mul(m[0][1], m[1][0])); }

Mat2 unimodular_inverse(const Mat2& m) {
    int64_t d = det(m);
    require(d == 1 || d == -1, ErrorCode::Internal, "matrix is not unimodular");
    return Mat2{{{m[1][1] * d, -m[0][1] * d}, {-m[1][0] * d, m[0][0] * d}}};
}

Mat2 lattice_hnf(const std::vector<Coords>& generators) {
    // column operations: Euclid on the second row leaves a single pivot column
    Coords pivot{0, 0};
    std::vector<Coords> flat;
    for (const Coords& c : generators) {
        if (c[1] == 0) {
            flat.push_back(c);
            continue;
        }
        if (pivot[1] == 0) {
            pivot = c;
            continue;
        }
        Coords a = pivot, b = c;
        while (b[1] != 0) {
            int64_t q = floor_div(a[1], b[1]);
            a = {checked_sub(a[0], checked_mul(q, b[0])), checked_sub(a[1], checked_mul(q, b[1]))};
            std::swap(a, b);
        }
        pivot = a;
        flat.push_back(b);
    }
    require(pivot[1] != 0, ErrorCode::InvalidArgument, "lattice is not of full rank");
    int64_t h11 = 0;
    for (const auto& c : flat) h11 = gcd64(h11, c[0]);
    require(h11 != 0, ErrorCode::InvalidArgument, "lattice is not of full rank");
    if (pivot[1] < 0) pivot = {-pivot[0], -pivot[1]};
    int64_t h12 = floor_mod(pivot[0], h11);
    return Mat2{{{h11, h12}, {0, pivot[1]}}};
}

bool lattice_contains(const Mat2& basis, const Coords& x) {
    int64_t d = det(basis);
    require(d != 0, ErrorCode::InvalidArgument, "singular lattice basis");
    // adj(B) x must be divisible by det
    __int128 y0 = static_cast<__int128>(basis[1][1]) * x[0] - static_cast<__int128>(basis[0][1]) * x[1];
    __int128 y1 = -static_cast<__int128>(basis[1][0]) * x[0] + static_cast<__int128>(basis[0][0]) * x[1];
    return y0 % d == 0 && y1 % d == 0;
}

}  // namespace shintani
