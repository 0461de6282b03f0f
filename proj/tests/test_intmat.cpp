#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <vector>

#include "ulrich/intmat.hpp"

using namespace ulrich;

namespace {

// Independent oracle: plain Gaussian elimination over exact rationals,
// written without any of the library's structural shortcuts.
int rational_rank(const std::vector<std::vector<long long>>& m) {
    using Rat = boost::multiprecision::cpp_rational;
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) a[r][c] = m[r][c];

    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        for (size_t r = row + 1; r < rows; ++r) {
            if (a[r][col] == 0) continue;
            const Rat f = a[r][col] / a[row][col];
            for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

IntMatrix from_dense(const std::vector<std::vector<long long>>& m) {
    IntMatrix out(static_cast<int>(m.size()),
                  m.empty() ? 0 : static_cast<int>(m[0].size()));
    for (size_t r = 0; r < m.size(); ++r)
        for (size_t c = 0; c < m[r].size(); ++c)
            out.add(static_cast<int>(r), static_cast<int>(c), m[r][c]);
    return out;
}

}  // namespace

TEST_CASE("entry accumulation and cancellation") {
    IntMatrix m(2, 2);
    m.add(0, 0, 3);
    m.add(0, 0, -3);
    m.add(1, 1, 5);
    CHECK(m.entry(0, 0) == 0);
    CHECK(m.entry(1, 1) == 5);
    CHECK(m.rank() == 1);
}

TEST_CASE("hand-sized ranks") {
    CHECK(from_dense({{1, 2}, {2, 4}}).rank() == 1);
    CHECK(from_dense({{1, 2}, {3, 4}}).rank() == 2);
    CHECK(from_dense({{0, 0}, {0, 0}}).rank() == 0);
    CHECK(from_dense({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}).rank() == 2);
    // a case where naive integer elimination overflows without Bareiss care
    CHECK(from_dense({{1000000007, 2},
                      {3, 999999937},
                      {1000000010, 999999939}})
              .rank() == 2);
    CHECK(IntMatrix(0, 5).rank() == 0);
    CHECK(IntMatrix(5, 0).rank() == 0);
}

TEST_CASE("structural matrices with one nonzero per row") {
    // the shape produced by monomial cup products: each row hits one column
    IntMatrix m(6, 3);
    for (int r = 0; r < 6; ++r) m.add(r, r % 3, 1 + r);
    CHECK(m.rank() == 3);

    IntMatrix n(4, 8);
    for (int r = 0; r < 4; ++r) n.add(r, 2 * r, -1);
    CHECK(n.rank() == 4);
}

TEST_CASE("random matrices agree with the rational-elimination oracle") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> dim(1, 9);
    std::uniform_int_distribution<long long> val(-6, 6);
    std::uniform_int_distribution<int> density(0, 3);

    for (int trial = 0; trial < 300; ++trial) {
        const int r = dim(rng), c = dim(rng);
        std::vector<std::vector<long long>> m(r, std::vector<long long>(c, 0));
        for (auto& row : m)
            for (auto& x : row)
                if (density(rng) == 0) x = val(rng);
        CAPTURE(trial);
        CHECK(from_dense(m).rank() == rational_rank(m));
    }
}

TEST_CASE("random low-rank products agree with the oracle") {
    // A = B.C with inner dimension 2 has rank at most 2; the oracle confirms
    // the library never overshoots on structured input.
    std::mt19937 rng(71);
    std::uniform_int_distribution<long long> val(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        const int r = 5, c = 7, inner = 2;
        std::vector<std::vector<long long>> b(r, std::vector<long long>(inner)),
            cc(inner, std::vector<long long>(c)), a(r, std::vector<long long>(c, 0));
        for (auto& row : b)
            for (auto& x : row) x = val(rng);
        for (auto& row : cc)
            for (auto& x : row) x = val(rng);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                for (int k = 0; k < inner; ++k) a[i][j] += b[i][k] * cc[k][j];
        const int got = from_dense(a).rank();
        CHECK(got == rational_rank(a));
        CHECK(got <= inner);
    }
}
