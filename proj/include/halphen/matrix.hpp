/*
   Copyright 2026 The Halphen Library Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HALPHEN_MATRIX_HPP
#define HALPHEN_MATRIX_HPP

#include <optional>
#include <vector>

#include "series.hpp"

namespace halphen {

template <class T>
class Mat {
   public:
    Mat(int rows, int cols, const T& fill)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), fill) {}

    static Mat identity(int n, const T& zero, const T& one) {
        Mat m(n, n, zero);
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return data_[index(i, j)]; }
    const T& operator()(int i, int j) const { return data_[index(i, j)]; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }

    int rows_, cols_;
    std::vector<T> data_;
};

using QMat = Mat<Rational>;
using SeriesMat = Mat<TruncSeries>;

inline QMat qmat_zero(int r, int c) { return QMat(r, c, Rational(0)); }
inline QMat qmat_identity(int n) { return QMat::identity(n, Rational(0), Rational(1)); }

inline QMat operator*(const QMat& a, const QMat& b) {
    if (a.cols() != b.rows()) throw Error("BAD_DIMENSION", "matrix product shape mismatch");
    QMat r = qmat_zero(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

inline std::vector<Rational> operator*(const QMat& a, const std::vector<Rational>& v) {
    if (a.cols() != static_cast<int>(v.size()))
        throw Error("BAD_DIMENSION", "matrix/vector shape mismatch");
    std::vector<Rational> r(static_cast<std::size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r[static_cast<std::size_t>(i)] += a(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

inline QMat transpose(const QMat& a) {
    QMat r = qmat_zero(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

// Fraction-free (Bareiss) elimination. Exact over Q; row swaps tracked by
// sign, a pivotless column short-circuits to 0.
inline Rational det_scalar(QMat m) {
    if (m.rows() != m.cols()) throw Error("BAD_DIMENSION", "determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return Rational(1);
    Rational prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) { swap_row = i; break; }
            if (swap_row < 0) return Rational(0);
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

// Laplace expansion with row-subset memoisation; entries are aligned to the
// least precision first. Sized for the <= 7x7 matrices that occur here.
inline TruncSeries det_series(const SeriesMat& m) {
    if (m.rows() != m.cols()) throw Error("BAD_DIMENSION", "determinant of non-square matrix");
    int n = m.rows();
    int p = m(0, 0).precision();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p = std::min(p, m(i, j).precision());
    std::vector<std::optional<TruncSeries>> minor(static_cast<std::size_t>(1) << n);
    minor[0] = TruncSeries::one(p);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int col = __builtin_popcount(mask) - 1;
        TruncSeries acc = TruncSeries::zero(p);
        int pos = 0;
        for (int row = 0; row < n; ++row) {
            if (!(mask & (1u << row))) continue;
            const TruncSeries& entry = m(row, col);
            if (!entry.is_zero_to_precision()) {
                TruncSeries term = entry.truncated(p) * (*minor[mask ^ (1u << row)]);
                acc = ((pos + col) % 2 == 0) ? acc + term : acc - term;
            }
            ++pos;
        }
        minor[mask] = acc;
    }
    return *minor[(1u << n) - 1];
}

// Gauss-Jordan inverse; throws SINGULAR when the matrix is not invertible.
inline QMat inverse(const QMat& a) {
    if (a.rows() != a.cols()) throw Error("BAD_DIMENSION", "inverse of non-square matrix");
    int n = a.rows();
    QMat m = a;
    QMat inv = qmat_identity(n);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (m(i, k) != 0) { pivot = i; break; }
        if (pivot < 0) throw Error("SINGULAR", "matrix is singular");
        if (pivot != k)
            for (int j = 0; j < n; ++j) {
                std::swap(m(k, j), m(pivot, j));
                std::swap(inv(k, j), inv(pivot, j));
            }
        Rational d = m(k, k);
        for (int j = 0; j < n; ++j) {
            m(k, j) /= d;
            inv(k, j) /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || m(i, k) == 0) continue;
            Rational f = m(i, k);
            for (int j = 0; j < n; ++j) {
                m(i, j) -= f * m(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

// Rank of a rational matrix by plain elimination.
inline int rank(QMat m) {
    int r = 0;
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m(i, col) == 0) continue;
            Rational f = m(i, col) / m(r, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

// Solve A x = b for A with full column rank, rows >= cols. Returns the
// solution and whether every equation (including redundant ones) holds
// exactly.
struct FitResult {
    std::vector<Rational> solution;
    bool consistent = false;
};

inline FitResult fit_solve(QMat a, std::vector<Rational> b) {
    if (a.rows() != static_cast<int>(b.size()))
        throw Error("BAD_DIMENSION", "fit_solve shape mismatch");
    QMat a0 = a;
    std::vector<Rational> b0 = b;
    int rows = a.rows(), cols = a.cols();
    std::vector<int> pivot_col_of_row;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (a(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r) {
            for (int j = 0; j < cols; ++j) std::swap(a(r, j), a(pivot, j));
            std::swap(b[static_cast<std::size_t>(r)], b[static_cast<std::size_t>(pivot)]);
        }
        for (int i = 0; i < rows; ++i) {
            if (i == r || a(i, col) == 0) continue;
            Rational f = a(i, col) / a(r, col);
            for (int j = col; j < cols; ++j) a(i, j) -= f * a(r, j);
            b[static_cast<std::size_t>(i)] -= f * b[static_cast<std::size_t>(r)];
        }
        pivot_col_of_row.push_back(col);
        ++r;
    }
    FitResult res;
    if (r < cols) return res;  // underdetermined: caller must add samples
    res.solution.assign(static_cast<std::size_t>(cols), Rational(0));
    for (int i = 0; i < r; ++i)
        res.solution[static_cast<std::size_t>(pivot_col_of_row[static_cast<std::size_t>(i)])] =
            b[static_cast<std::size_t>(i)] / a(i, pivot_col_of_row[static_cast<std::size_t>(i)]);
    res.consistent = true;
    for (int i = 0; i < rows && res.consistent; ++i) {
        Rational s = 0;
        for (int j = 0; j < cols; ++j) s += a0(i, j) * res.solution[static_cast<std::size_t>(j)];
        if (s != b0[static_cast<std::size_t>(i)]) res.consistent = false;
    }
    return res;
}

inline SeriesMat series_mat(int r, int c, int precision) {
    return SeriesMat(r, c, TruncSeries::zero(precision));
}

inline std::vector<TruncSeries> operator*(const QMat& a, const std::vector<TruncSeries>& v) {
    if (a.cols() != static_cast<int>(v.size()))
        throw Error("BAD_DIMENSION", "matrix/series-vector shape mismatch");
    int p = v.front().precision();
    for (const auto& s : v) p = std::min(p, s.precision());
    std::vector<TruncSeries> r;
    r.reserve(static_cast<std::size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i) {
        TruncSeries acc = TruncSeries::zero(p);
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            acc = acc + a(i, j) * v[static_cast<std::size_t>(j)];
        }
        r.push_back(std::move(acc));
    }
    return r;
}

}  // namespace halphen

#endif
