#include <doctest.h>

#include <random>

#include "fillcert/linalg.hpp"
#include "support.hpp"

using namespace fillcert;

TEST_CASE("Bareiss rank and determinant") {
    const IntMatrix a = IntMatrix::from_rows({{1, 2}, {1, 4}});
    CHECK(bareiss_determinant(a) == 2);
    CHECK(bareiss_rank(a) == 2);
    const IntMatrix b = IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    CHECK(bareiss_rank(b) == 2);
    CHECK(bareiss_determinant(b) == 0);
    CHECK(bareiss_rank(IntMatrix(3, 4)) == 0);
}

TEST_CASE("determinants agree with Leibniz expansion") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const size_t n = 1 + trial % 5;
        IntMatrix m(n, n);
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) m(r, c) = d(rng);
        CHECK(bareiss_determinant(m) == testsupport::leibniz_determinant(m));
    }
}

TEST_CASE("Smith invariants") {
    const auto inv = smith_invariants(IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    REQUIRE(inv.size() == 3);
    CHECK(inv[0] == 2);
    CHECK(inv[1] == 6);
    CHECK(inv[2] == 12);
    CHECK(smith_invariants(IntMatrix::from_rows({{1, 2}, {2, 4}})).size() == 1);
}

TEST_CASE("left kernel vectors annihilate and ranks match") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> d(-2, 2);
    for (int trial = 0; trial < 40; ++trial) {
        const size_t r = 2 + trial % 4, c = 1 + trial % 3;
        IntMatrix m(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) m(i, j) = d(rng);
        const auto ker = left_kernel(m);
        CHECK(ker.size() + bareiss_rank(m) == r);
        CHECK(smith_invariants(m).size() == bareiss_rank(m));
        for (const auto& w : ker) {
            for (const auto& x : row_times(w, m)) CHECK(x == 0);
        }
        // the bounded search sees every kernel with a small generator
        const bool found = testsupport::brute_force_left_kernel(m, 3);
        if (found) CHECK_FALSE(ker.empty());
        bool small = false;
        for (const auto& w : ker) {
            bool fits = true;
            for (const auto& x : w) fits = fits && abs(x) <= 3;
            small = small || fits;
        }
        if (small) CHECK(found);
    }
}
