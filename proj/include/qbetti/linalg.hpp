// Dense exact-integer matrices and fraction-free rank computation.
#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qbetti {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix. Boundary maps, Laplacians and the Dirac
/// operator all have entries in {-1,0,+1} or small sums of them, so int64
/// arithmetic is exact for every product formed at desk scale. Rank is the
/// only place where intermediate values grow; exact_rank() switches to
/// arbitrary precision internally.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(checked_extent(rows, cols), 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::int64_t& operator()(int i, int j) { return data_[idx(i, j)]; }
    std::int64_t operator()(int i, int j) const { return data_[idx(i, j)]; }

    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

    bool is_zero() const {
        for (std::int64_t v : data_)
            if (v != 0) return false;
        return true;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Contiguous block copy, rows [r0, r0+nr) x cols [c0, c0+nc).
    IntMatrix block(int r0, int c0, int nr, int nc) const {
        if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_)
            throw std::invalid_argument("IntMatrix::block: out of range");
        IntMatrix b(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    std::size_t nnz() const {
        std::size_t c = 0;
        for (std::int64_t v : data_) c += (v != 0);
        return c;
    }

private:
    static std::size_t checked_extent(int rows, int cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
        return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    }

    std::size_t idx(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("IntMatrix: index out of range");
        return static_cast<std::size_t>(i) * cols_ + j;
    }

    int rows_, cols_;
    std::vector<std::int64_t> data_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix product: shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int l = 0; l < a.cols(); ++l) {
            const std::int64_t ail = a(i, l);
            if (ail == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += ail * b(l, j);
        }
    return c;
}

inline IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("IntMatrix sum: shape mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

/// Exact rank over the rationals via Bareiss fraction-free elimination.
/// Every intermediate entry is a minor of the input (Sylvester identity), so
/// the division by the previous pivot is exact in integer arithmetic.
inline int exact_rank(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = m(i, j);

    int rank = 0;
    BigInt prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank) std::swap(a[piv], a[rank]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

/// Coordinate-triplet dump: header "rows cols nnz", then one "row col value"
/// line per nonzero.
inline void write_triplets(const IntMatrix& m, std::ostream& os) {
    os << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) os << i << ' ' << j << ' ' << m(i, j) << '\n';
}

inline IntMatrix read_triplets(std::istream& is) {
    int rows, cols;
    std::size_t nnz;
    if (!(is >> rows >> cols >> nnz)) throw std::runtime_error("triplet header: parse error");
    IntMatrix m(rows, cols);
    for (std::size_t t = 0; t < nnz; ++t) {
        int i, j;
        std::int64_t v;
        if (!(is >> i >> j >> v)) throw std::runtime_error("triplet entry: parse error");
        m(i, j) = v;
    }
    return m;
}

}  // namespace qbetti
