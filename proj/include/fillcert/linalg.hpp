#pragma once

// Exact integer linear algebra: fraction-free (Bareiss) elimination, Smith
// normal form, and integer kernels.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace fillcert {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    size_t rows() const noexcept { return rows_; }
    size_t cols() const noexcept { return cols_; }

    Integer& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transposed() const;
    IntMatrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
    bool is_zero() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Rank over Q by fraction-free Gaussian elimination.
size_t bareiss_rank(const IntMatrix& m);

/// Determinant of a square matrix by Bareiss elimination.
Integer bareiss_determinant(const IntMatrix& m);

/// Invariant factors d_1 | d_2 | ... (nonzero only) of the Smith normal form.
std::vector<Integer> smith_invariants(const IntMatrix& m);

/// Basis over Q of the left kernel {w : w m = 0}, as primitive integer
/// vectors. Pivots are taken from the last row index down, so each basis
/// vector has a single nonzero entry among the free indices.
std::vector<IntVector> left_kernel(const IntMatrix& m);

/// w * m.
IntVector row_times(const IntVector& w, const IntMatrix& m);

}  // namespace fillcert
