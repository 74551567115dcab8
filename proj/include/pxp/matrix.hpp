#ifndef PXP_MATRIX_HPP
#define PXP_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "pxp/errors.hpp"

namespace pxp {

// Small dense matrix over an exact field; row reduction, rank, nullspace.
template <class K>
class DenseMatrix {
  public:
    DenseMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, K::zero()) {
        if (rows < 0 || cols < 0) throw InvalidInput("negative matrix dimension");
    }

    static DenseMatrix identity(int n) {
        DenseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = K::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const K& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    // Reduced row echelon form; pivot columns appended to *pivots if given.
    DenseMatrix rref(std::vector<int>* pivots = nullptr) const {
        DenseMatrix m = *this;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int p = -1;
            for (int i = row; i < rows_; ++i) {
                if (!m.at(i, col).is_zero()) {
                    p = i;
                    break;
                }
            }
            if (p < 0) continue;
            if (p != row)
                for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(row, j));
            K inv = m.at(row, col).inv();
            for (int j = col; j < cols_; ++j) m.at(row, j) = m.at(row, j) * inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == row || m.at(i, col).is_zero()) continue;
                K f = m.at(i, col);
                for (int j = col; j < cols_; ++j)
                    m.at(i, j) = m.at(i, j) - f * m.at(row, j);
            }
            if (pivots) pivots->push_back(col);
            ++row;
        }
        return m;
    }

    int rank() const {
        std::vector<int> pivots;
        rref(&pivots);
        return static_cast<int>(pivots.size());
    }

    // Canonical basis of {v : Mv = 0}: one vector per free column of the
    // reduced echelon form, free coordinate set to 1, ordered by free column.
    std::vector<std::vector<K>> nullspace() const {
        std::vector<int> pivots;
        DenseMatrix r = rref(&pivots);
        std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
        for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
        std::vector<std::vector<K>> basis;
        for (int free = 0; free < cols_; ++free) {
            if (is_pivot[static_cast<std::size_t>(free)]) continue;
            std::vector<K> v(static_cast<std::size_t>(cols_), K::zero());
            v[static_cast<std::size_t>(free)] = K::one();
            for (std::size_t i = 0; i < pivots.size(); ++i)
                v[static_cast<std::size_t>(pivots[i])] = -r.at(static_cast<int>(i), free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

  private:
    int rows_, cols_;
    std::vector<K> a_;
};

}  // namespace pxp

#endif
