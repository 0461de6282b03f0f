#ifndef ULRICH_INTMAT_HPP
#define ULRICH_INTMAT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

namespace ulrich {

using BigInt = boost::multiprecision::cpp_int;

// Sparse integer matrix supporting exact rank computation. Elimination is
// fraction-free: structurally forced pivots (singleton rows/columns) are
// cleared first without arithmetic growth, the remaining dense block goes
// through Bareiss elimination over the integers.
class IntMatrix {
  public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int r, int c, long long v) {
        if (v == 0) return;
        auto& cell = row_data_[r][c];
        cell += v;
        if (cell == 0) row_data_[r].erase(c);
    }

    long long entry(int r, int c) const {
        auto it = row_data_[r].find(c);
        if (it == row_data_[r].end()) return 0;
        return static_cast<long long>(it->second);
    }

    // exact rank over the rationals (equivalently, over the integers)
    int rank() const;

  private:
    int rows_, cols_;
    std::vector<std::map<int, BigInt>> row_data_;
};

// rank with domain/codomain dimensions attached
struct RankedMap {
    long long domain_dim = 0;
    long long codomain_dim = 0;
    long long rank = 0;
};

}  // namespace ulrich

#endif
