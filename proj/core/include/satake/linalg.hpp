#pragma once

#include <vector>

#include "satake/quad_scalar.hpp"

namespace satake {

// Dense matrix over Q(sqrt p) with exact Gaussian elimination. Sizes here
// are tiny (at most n^n for n <= 4), so no pivoting heuristics or sparsity.
class QuadMatrix {
public:
    QuadMatrix() : rows_(0), cols_(0) {}
    QuadMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, QuadScalar(0)) {}

    static QuadMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    QuadScalar& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const QuadScalar& at(int i, int j) const {
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    QuadMatrix operator+(const QuadMatrix& o) const;
    QuadMatrix operator-(const QuadMatrix& o) const;
    QuadMatrix operator*(const QuadMatrix& o) const;
    QuadMatrix scaled(const QuadScalar& c) const;
    QuadMatrix pow(int k) const;  // k >= 0, square matrices
    bool operator==(const QuadMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    QuadScalar trace() const;
    QuadScalar det() const;

    std::vector<QuadScalar> apply(const std::vector<QuadScalar>& v) const;

private:
    int rows_, cols_;
    std::vector<QuadScalar> data_;
};

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref_in_place(QuadMatrix& m);

int rank(QuadMatrix m);

// Basis of the right nullspace { v : M v = 0 }, as columns.
std::vector<std::vector<QuadScalar>> nullspace(QuadMatrix m);

// Stack matrices vertically (all with the same column count).
QuadMatrix vstack(const std::vector<QuadMatrix>& blocks);

}  // namespace satake
