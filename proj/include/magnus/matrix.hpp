#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "magnus/rational_function.hpp"

namespace magnus {

// Dense matrix over the rational-function field.
class FieldMatrix {
  public:
    FieldMatrix() : FieldMatrix(0, 0, 0) {}

    FieldMatrix(std::size_t rows, std::size_t cols, std::size_t vars)
        : rows_(rows), cols_(cols), vars_(vars),
          entries_(rows * cols, RationalFunction::zero(vars)) {}

    static FieldMatrix identity(std::size_t n, std::size_t vars) {
        FieldMatrix m(n, n, vars);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = RationalFunction::one(vars);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t variable_count() const { return vars_; }

    RationalFunction& at(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }
    const RationalFunction& at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.entries_ == b.entries_;
    }
    friend bool operator!=(const FieldMatrix& a, const FieldMatrix& b) {
        return !(a == b);
    }

    FieldMatrix operator-() const {
        FieldMatrix r = *this;
        for (auto& e : r.entries_)
            e = -e;
        return r;
    }

    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionError("matrix product shape mismatch");
        FieldMatrix r(a.rows_, b.cols_, a.vars_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero())
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (b.at(k, j).is_zero())
                        continue;
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
                }
            }
        return r;
    }

    friend FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionError("matrix difference shape mismatch");
        FieldMatrix r = a;
        for (std::size_t i = 0; i < r.entries_.size(); ++i)
            r.entries_[i] -= b.entries_[i];
        return r;
    }

    // Vertical stack (same column count).
    static FieldMatrix stack(const FieldMatrix& top, const FieldMatrix& bot) {
        if (top.cols_ != bot.cols_)
            throw DimensionError("stacked matrices differ in column count");
        FieldMatrix r(top.rows_ + bot.rows_, top.cols_, top.vars_);
        for (std::size_t i = 0; i < top.rows_; ++i)
            for (std::size_t j = 0; j < top.cols_; ++j)
                r.at(i, j) = top.at(i, j);
        for (std::size_t i = 0; i < bot.rows_; ++i)
            for (std::size_t j = 0; j < bot.cols_; ++j)
                r.at(top.rows_ + i, j) = bot.at(i, j);
        return r;
    }

    FieldMatrix submatrix(std::size_t row0, std::size_t col0,
                          std::size_t nrows, std::size_t ncols) const {
        FieldMatrix r(nrows, ncols, vars_);
        for (std::size_t i = 0; i < nrows; ++i)
            for (std::size_t j = 0; j < ncols; ++j)
                r.at(i, j) = at(row0 + i, col0 + j);
        return r;
    }

    FieldMatrix specialize(const std::vector<ExponentVector>& images,
                           std::size_t target_vars) const {
        FieldMatrix r(rows_, cols_, target_vars);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r.at(i, j) = at(i, j).specialize(images, target_vars);
        return r;
    }

  private:
    std::size_t rows_, cols_, vars_;
    std::vector<RationalFunction> entries_;
};

namespace detail {

// Pivot choice for fraction-field elimination: the nonzero entry with the
// fewest terms, ties broken by lexicographically smallest position. Works
// on the permuted view starting at elimination step k.
template <class View>
inline bool choose_pivot(const View& entry, std::size_t k, std::size_t n,
                         std::size_t& pr, std::size_t& pc) {
    bool found = false;
    std::size_t best = 0;
    for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j) {
            const RationalFunction& e = entry(i, j);
            if (e.is_zero())
                continue;
            const std::size_t weight = e.term_count();
            if (!found || weight < best) {
                found = true;
                best = weight;
                pr = i;
                pc = j;
            }
        }
    return found;
}

} // namespace detail

// Exact determinant by fraction-field Gaussian elimination with full
// pivoting; every intermediate entry is kept reduced.
inline RationalFunction determinant(const FieldMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    const std::size_t vars = m.variable_count();
    if (n == 0)
        return RationalFunction::one(vars);

    FieldMatrix w = m;
    std::vector<std::size_t> row(n), col(n);
    std::iota(row.begin(), row.end(), 0);
    std::iota(col.begin(), col.end(), 0);
    auto entry = [&](std::size_t i, std::size_t j) -> RationalFunction& {
        return w.at(row[i], col[j]);
    };

    int sign = 1;
    RationalFunction det = RationalFunction::one(vars);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pr = k, pc = k;
        if (!detail::choose_pivot(entry, k, n, pr, pc))
            return RationalFunction::zero(vars);
        if (pr != k) {
            std::swap(row[pr], row[k]);
            sign = -sign;
        }
        if (pc != k) {
            std::swap(col[pc], col[k]);
            sign = -sign;
        }
        const RationalFunction pivot = entry(k, k);
        det *= pivot;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (entry(i, k).is_zero())
                continue;
            const RationalFunction f = entry(i, k) / pivot;
            for (std::size_t j = k + 1; j < n; ++j) {
                if (entry(k, j).is_zero())
                    continue;
                entry(i, j) -= f * entry(k, j);
            }
            entry(i, k) = RationalFunction::zero(vars);
        }
    }
    if (sign < 0)
        det = -det;
    return det;
}

// Solves m * x = rhs exactly (m square). Gauss-Jordan with the same pivot
// strategy as the determinant. Throws SingularityError when no pivot
// exists at some elimination step.
inline FieldMatrix solve(const FieldMatrix& m, const FieldMatrix& rhs) {
    if (m.rows() != m.cols())
        throw DimensionError("solve with a non-square matrix");
    if (rhs.rows() != m.rows())
        throw DimensionError("right-hand side has wrong row count");
    const std::size_t n = m.rows();
    const std::size_t w = rhs.cols();
    const std::size_t vars = m.variable_count();

    FieldMatrix a = m;
    FieldMatrix b = rhs;
    std::vector<std::size_t> row(n), col(n);
    std::iota(row.begin(), row.end(), 0);
    std::iota(col.begin(), col.end(), 0);
    auto entry = [&](std::size_t i, std::size_t j) -> RationalFunction& {
        return a.at(row[i], col[j]);
    };

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pr = k, pc = k;
        if (!detail::choose_pivot(entry, k, n, pr, pc))
            throw SingularityError("matrix is singular",
                                   static_cast<int>(k), static_cast<int>(k));
        std::swap(row[pr], row[k]);
        std::swap(col[pc], col[k]);
        const RationalFunction pivot = entry(k, k);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || entry(i, k).is_zero())
                continue;
            const RationalFunction f = entry(i, k) / pivot;
            for (std::size_t j = k + 1; j < n; ++j) {
                if (entry(k, j).is_zero())
                    continue;
                entry(i, j) -= f * entry(k, j);
            }
            entry(i, k) = RationalFunction::zero(vars);
            for (std::size_t j = 0; j < w; ++j) {
                if (b.at(row[k], j).is_zero())
                    continue;
                b.at(row[i], j) -= f * b.at(row[k], j);
            }
        }
    }

    // Diagonalized system: unknown col[k] reads off from permuted row k.
    FieldMatrix x(n, w, vars);
    for (std::size_t k = 0; k < n; ++k) {
        const RationalFunction& pivot = entry(k, k);
        for (std::size_t j = 0; j < w; ++j)
            x.at(col[k], j) = b.at(row[k], j) / pivot;
    }
    return x;
}

// Exact inverse; throws SingularityError on singular input.
inline FieldMatrix inverse(const FieldMatrix& m) {
    return solve(m, FieldMatrix::identity(m.rows(), m.variable_count()));
}

} // namespace magnus
