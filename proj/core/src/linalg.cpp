#include "satake/linalg.hpp"

#include <stdexcept>

namespace satake {

QuadMatrix QuadMatrix::identity(int n) {
    QuadMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = QuadScalar(1);
    return m;
}

QuadMatrix QuadMatrix::operator+(const QuadMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    QuadMatrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

QuadMatrix QuadMatrix::operator-(const QuadMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    QuadMatrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

QuadMatrix QuadMatrix::operator*(const QuadMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    QuadMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const QuadScalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const QuadScalar& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

QuadMatrix QuadMatrix::scaled(const QuadScalar& c) const {
    QuadMatrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
    return r;
}

QuadMatrix QuadMatrix::pow(int k) const {
    if (rows_ != cols_) throw std::invalid_argument("pow: non-square matrix");
    if (k < 0) throw std::invalid_argument("pow: negative exponent");
    QuadMatrix result = identity(rows_);
    QuadMatrix base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

QuadScalar QuadMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: non-square matrix");
    QuadScalar t(0);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

QuadScalar QuadMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: non-square matrix");
    QuadMatrix m = *this;
    QuadScalar d(1);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int i = col; i < rows_; ++i)
            if (!m.at(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) return QuadScalar(0);
        if (pivot != col) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        QuadScalar inv = m.at(col, col).inverse();
        for (int i = col + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            QuadScalar f = m.at(i, col) * inv;
            for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

std::vector<QuadScalar> QuadMatrix::apply(const std::vector<QuadScalar>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("apply: size mismatch");
    std::vector<QuadScalar> out(rows_, QuadScalar(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

std::vector<int> rref_in_place(QuadMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
        QuadScalar inv = m.at(row, col).inverse();
        for (int j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            QuadScalar f = m.at(i, col);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(QuadMatrix m) {
    return static_cast<int>(rref_in_place(m).size());
}

std::vector<std::vector<QuadScalar>> nullspace(QuadMatrix m) {
    std::vector<int> pivots = rref_in_place(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<QuadScalar>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<QuadScalar> v(m.cols(), QuadScalar(0));
        v[free] = QuadScalar(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

QuadMatrix vstack(const std::vector<QuadMatrix>& blocks) {
    if (blocks.empty()) return QuadMatrix();
    int cols = blocks.front().cols();
    int rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
        rows += b.rows();
    }
    QuadMatrix m(rows, cols);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < cols; ++j) m.at(off + i, j) = b.at(i, j);
        off += b.rows();
    }
    return m;
}

}  // namespace satake
