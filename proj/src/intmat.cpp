#include "ulrich/intmat.hpp"

#include <set>

namespace ulrich {

namespace {

// Bareiss fraction-free elimination on a dense block; returns its rank.
int dense_bareiss_rank(std::vector<std::vector<BigInt>>& a) {
    const int nr = static_cast<int>(a.size());
    if (nr == 0) return 0;
    const int nc = static_cast<int>(a[0].size());
    std::vector<char> col_used(nc, 0);

    BigInt prev = 1;
    int rank = 0;
    for (int r = 0; r < nr; ++r) {
        // locate a pivot in rows >= r, unused columns
        int pr = -1, pc = -1;
        for (int i = r; i < nr && pr < 0; ++i)
            for (int c = 0; c < nc; ++c)
                if (!col_used[c] && a[i][c] != 0) {
                    pr = i;
                    pc = c;
                    break;
                }
        if (pr < 0) break;
        std::swap(a[r], a[pr]);

        const BigInt piv = a[r][pc];
        for (int j = r + 1; j < nr; ++j) {
            const BigInt f = a[j][pc];
            for (int c = 0; c < nc; ++c) {
                if (col_used[c]) continue;
                a[j][c] = (piv * a[j][c] - f * a[r][c]) / prev;
            }
            a[j][pc] = 0;
        }
        prev = piv;
        col_used[pc] = 1;
        ++rank;
    }
    return rank;
}

}  // namespace

int IntMatrix::rank() const {
    auto rows = row_data_;
    std::vector<std::set<int>> col_rows(cols_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : rows[r]) col_rows[c].insert(r);

    std::vector<char> row_active(rows_, 1), col_active(cols_, 1);
    int rank = 0;

    // Clear structurally forced pivots until none remain. A singleton
    // column pivots for free; a singleton row eliminates its column from
    // every other row (the elimination only scales those rows, which
    // leaves the rank unchanged).
    bool progress = true;
    while (progress) {
        progress = false;
        for (int c = 0; c < cols_; ++c) {
            if (!col_active[c] || col_rows[c].size() != 1) continue;
            const int r = *col_rows[c].begin();
            ++rank;
            for (const auto& [cc, v] : rows[r])
                if (cc != c) col_rows[cc].erase(r);
            col_rows[c].clear();
            rows[r].clear();
            row_active[r] = 0;
            col_active[c] = 0;
            progress = true;
        }
        for (int r = 0; r < rows_; ++r) {
            if (!row_active[r] || rows[r].size() != 1) continue;
            const int c = rows[r].begin()->first;
            ++rank;
            for (int i : col_rows[c])
                if (i != r) rows[i].erase(c);
            col_rows[c].clear();
            rows[r].clear();
            row_active[r] = 0;
            col_active[c] = 0;
            progress = true;
        }
    }

    // remaining block has no singleton rows or columns; finish densely
    std::vector<int> live_rows, live_cols;
    for (int r = 0; r < rows_; ++r)
        if (row_active[r] && !rows[r].empty()) live_rows.push_back(r);
    std::vector<int> col_index(cols_, -1);
    for (int c = 0; c < cols_; ++c)
        if (col_active[c] && !col_rows[c].empty()) {
            col_index[c] = static_cast<int>(live_cols.size());
            live_cols.push_back(c);
        }
    if (live_rows.empty() || live_cols.empty()) return rank;

    std::vector<std::vector<BigInt>> dense(
        live_rows.size(), std::vector<BigInt>(live_cols.size(), 0));
    for (size_t i = 0; i < live_rows.size(); ++i)
        for (const auto& [c, v] : rows[live_rows[i]]) dense[i][col_index[c]] = v;

    return rank + dense_bareiss_rank(dense);
}

}  // namespace ulrich
