#include "fillcert/linalg.hpp"

#include <algorithm>
#include <utility>

#include "fillcert/errors.hpp"

namespace fillcert {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const size_t nr = rows.size();
    const size_t nc = nr ? rows[0].size() : 0;
    IntMatrix m(nr, nc);
    for (size_t r = 0; r < nr; ++r) {
        if (rows[r].size() != nc) throw InvalidInput("ragged matrix rows");
        for (size_t c = 0; c < nc; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw InvalidInput("block out of range");
    IntMatrix b(nr, nc);
    for (size_t r = 0; r < nr; ++r)
        for (size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix product shape mismatch");
    IntMatrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0) continue;
            for (size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

namespace {

// In-place Bareiss elimination to row echelon form; returns rank and the sign
// of the row permutation. After return, the last pivot equals the
// determinant of the leading rank x rank minor (up to that sign).
struct BareissResult {
    size_t rank = 0;
    int sign = 1;
    Integer last_pivot = 1;
};

BareissResult bareiss_in_place(IntMatrix& a) {
    BareissResult res;
    Integer prev = 1;
    size_t row = 0;
    for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        size_t piv = row;
        while (piv < a.rows() && a(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row) {
            for (size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
            res.sign = -res.sign;
        }
        for (size_t r = row + 1; r < a.rows(); ++r) {
            for (size_t c = col + 1; c < a.cols(); ++c) {
                a(r, c) = (a(row, col) * a(r, c) - a(r, col) * a(row, c)) / prev;
            }
            a(r, col) = 0;
        }
        prev = a(row, col);
        ++row;
    }
    res.rank = row;
    res.last_pivot = prev;
    return res;
}

}  // namespace

size_t bareiss_rank(const IntMatrix& m) {
    IntMatrix a = m;
    return bareiss_in_place(a).rank;
}

Integer bareiss_determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant of non-square matrix");
    if (m.rows() == 0) return 1;
    IntMatrix a = m;
    const BareissResult r = bareiss_in_place(a);
    if (r.rank < m.rows()) return 0;
    return r.sign * r.last_pivot;
}

std::vector<Integer> smith_invariants(const IntMatrix& m) {
    IntMatrix a = m;
    const size_t nr = a.rows();
    const size_t nc = a.cols();
    std::vector<Integer> diag;
    size_t t = 0;
    while (t < nr && t < nc) {
        // Pivot: smallest nonzero absolute value in the remaining block.
        size_t pr = nr, pc = nc;
        for (size_t r = t; r < nr; ++r)
            for (size_t c = t; c < nc; ++c)
                if (a(r, c) != 0 && (pr == nr || abs(a(r, c)) < abs(a(pr, pc)))) {
                    pr = r;
                    pc = c;
                }
        if (pr == nr) break;
        for (size_t c = 0; c < nc; ++c) std::swap(a(t, c), a(pr, c));
        for (size_t r = 0; r < nr; ++r) std::swap(a(r, t), a(r, pc));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t r = t + 1; r < nr; ++r) {
                if (a(r, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
                for (size_t c = t; c < nc; ++c) a(r, c) -= q * a(t, c);
                if (a(r, t) != 0) {
                    for (size_t c = 0; c < nc; ++c) std::swap(a(t, c), a(r, c));
                    clean = false;
                }
            }
            for (size_t c = t + 1; c < nc; ++c) {
                if (a(t, c) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
                for (size_t r = t; r < nr; ++r) a(r, c) -= q * a(r, t);
                if (a(t, c) != 0) {
                    for (size_t r = 0; r < nr; ++r) std::swap(a(r, t), a(r, c));
                    clean = false;
                }
            }
            if (clean) {
                // Divisibility: pivot must divide the whole remaining block.
                for (size_t r = t + 1; r < nr && clean; ++r)
                    for (size_t c = t + 1; c < nc; ++c)
                        if (a(r, c) % a(t, t) != 0) {
                            for (size_t cc = t; cc < nc; ++cc) a(t, cc) += a(r, cc);
                            clean = false;
                            break;
                        }
            }
        }
        diag.push_back(abs(a(t, t)));
        ++t;
    }
    return diag;
}

std::vector<IntVector> left_kernel(const IntMatrix& m) {
    // Solve m^T w = 0 over Q, unknowns ordered from the last row of m down.
    const size_t n = m.rows();
    const size_t eqs = m.cols();
    std::vector<std::vector<mpq_class>> a(eqs, std::vector<mpq_class>(n));
    for (size_t e = 0; e < eqs; ++e)
        for (size_t v = 0; v < n; ++v) a[e][v] = m(n - 1 - v, e);

    std::vector<long> pivot_of_col(n, -1);
    size_t row = 0;
    for (size_t col = 0; col < n && row < eqs; ++col) {
        size_t piv = row;
        while (piv < eqs && a[piv][col] == 0) ++piv;
        if (piv == eqs) continue;
        std::swap(a[piv], a[row]);
        const mpq_class inv = 1 / a[row][col];
        for (auto& v : a[row]) v *= inv;
        for (size_t r = 0; r < eqs; ++r) {
            if (r == row || a[r][col] == 0) continue;
            const mpq_class f = a[r][col];
            for (size_t c = 0; c < n; ++c) a[r][c] -= f * a[row][c];
        }
        pivot_of_col[col] = static_cast<long>(row);
        ++row;
    }

    std::vector<IntVector> basis;
    for (size_t free = 0; free < n; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        std::vector<mpq_class> sol(n);
        sol[free] = 1;
        for (size_t col = 0; col < n; ++col)
            if (pivot_of_col[col] >= 0) sol[col] = -a[pivot_of_col[col]][free];
        Integer lcm = 1;
        for (const auto& q : sol) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
        IntVector w(n);
        Integer g = 0;
        for (size_t v = 0; v < n; ++v) {
            mpq_class scaled = sol[v] * lcm;
            w[n - 1 - v] = scaled.get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[n - 1 - v].get_mpz_t());
        }
        if (g > 1)
            for (auto& x : w) x /= g;
        basis.push_back(std::move(w));
    }
    return basis;
}

IntVector row_times(const IntVector& w, const IntMatrix& m) {
    if (w.size() != m.rows()) throw InvalidInput("vector/matrix shape mismatch");
    IntVector out(m.cols());
    for (size_t r = 0; r < m.rows(); ++r) {
        if (w[r] == 0) continue;
        for (size_t c = 0; c < m.cols(); ++c) out[c] += w[r] * m(r, c);
    }
    return out;
}

}  // namespace fillcert
