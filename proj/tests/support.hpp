#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <vector>

#include "fillcert/group_ring.hpp"
#include "fillcert/linalg.hpp"

namespace testsupport {

using fillcert::Integer;

// Value of p at an integer point with nonzero coordinates, as a rational.
inline mpq_class evaluate(const fillcert::LaurentPoly& p, const std::vector<long>& point) {
    mpq_class total = 0;
    for (const auto& [e, c] : p.terms()) {
        mpq_class term = c;
        for (size_t i = 0; i < e.size(); ++i) {
            mpq_class base = point[i];
            if (e[i] < 0) base = 1 / base;
            for (int64_t n = 0; n < (e[i] < 0 ? -e[i] : e[i]); ++n) term *= base;
        }
        total += term;
    }
    return total;
}

// Whether some nonzero w with entries in [-bound, bound] has w * m == 0.
inline bool brute_force_left_kernel(const fillcert::IntMatrix& m, int bound) {
    const size_t n = m.rows();
    std::vector<long> w(n, -bound);
    while (true) {
        bool nonzero = false;
        for (long x : w) nonzero = nonzero || x != 0;
        if (nonzero) {
            bool zero = true;
            for (size_t c = 0; c < m.cols() && zero; ++c) {
                Integer s = 0;
                for (size_t r = 0; r < n; ++r) s += w[r] * m(r, c);
                zero = s == 0;
            }
            if (zero) return true;
        }
        size_t i = 0;
        while (i < n && w[i] == bound) w[i++] = -bound;
        if (i == n) return false;
        ++w[i];
    }
}

// Leibniz expansion; only for small matrices.
inline Integer leibniz_determinant(const fillcert::IntMatrix& m) {
    const size_t n = m.rows();
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    Integer det = 0;
    do {
        int inversions = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        Integer term = inversions % 2 ? -1 : 1;
        for (size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

}  // namespace testsupport
