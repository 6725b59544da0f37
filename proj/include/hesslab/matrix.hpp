#pragma once

#include "hesslab/scalar.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hesslab {

/// Dense matrix of exact scalars.  Everything here is exact; elimination uses
/// plain fraction arithmetic (entries are small at the scales we run).
class scalar_matrix {
public:
    scalar_matrix() : rows_(0), cols_(0) {}
    scalar_matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static scalar_matrix identity(std::size_t n);
    /// Ones on the anti-diagonal, zeroes elsewhere (the order-reversing
    /// permutation matrix).
    static scalar_matrix flipped_identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    scalar_matrix transpose() const;
    scalar_matrix operator*(const scalar_matrix& o) const;
    scalar_matrix operator+(const scalar_matrix& o) const;
    scalar_matrix operator-(const scalar_matrix& o) const;
    scalar_matrix scaled(const scalar& c) const;
    std::vector<scalar> apply(const std::vector<scalar>& v) const;

    bool operator==(const scalar_matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    scalar determinant() const;
    scalar_matrix inverse() const; // throws Singular
    std::size_t rank() const;

    /// Basis of the right kernel, each vector primitive with positive leading
    /// entry; empty iff full column rank.
    std::vector<std::vector<scalar>> nullspace() const;

    bool is_symmetric() const;
    /// Zero at all (i, j) with i + j > n + 1 (1-based), i.e. below the
    /// anti-diagonal.
    bool is_zero_below_antidiagonal() const;
    bool is_lower_triangular() const;
    bool is_upper_triangular() const;

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<scalar> data_;
};

/// Invertible matrix with its exact inverse cached.
class transform {
public:
    static transform identity(std::size_t n);
    /// Throws Singular when the matrix is not invertible.
    static transform make(scalar_matrix m);

    const scalar_matrix& mat() const { return mat_; }
    const scalar_matrix& inv() const { return inv_; }
    std::size_t dim() const { return mat_.rows(); }

    transform then(const transform& right) const; // this->mat * right.mat

private:
    transform(scalar_matrix m, scalar_matrix i) : mat_(std::move(m)), inv_(std::move(i)) {}
    scalar_matrix mat_, inv_;
};

/// Scale a vector to primitive integral form (content 1 over Z or Z[i]) with
/// a canonical leading sign/unit.  Zero vectors are returned unchanged.
void normalize_primitive(std::vector<scalar>& v);

/// Solve A x = b exactly; nullopt when inconsistent.  Free coordinates are
/// set to zero (deterministic).
std::optional<std::vector<scalar>> solve_linear(const scalar_matrix& A,
                                                const std::vector<scalar>& b);

} // namespace hesslab
