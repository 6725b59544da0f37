#include "hesslab/matrix.hpp"

#include "hesslab/errors.hpp"

#include <utility>

namespace hesslab {

scalar_matrix scalar_matrix::identity(std::size_t n) {
    scalar_matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = scalar(1);
    return m;
}

scalar_matrix scalar_matrix::flipped_identity(std::size_t n) {
    scalar_matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1 - i) = scalar(1);
    return m;
}

scalar_matrix scalar_matrix::transpose() const {
    scalar_matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

scalar_matrix scalar_matrix::operator*(const scalar_matrix& o) const {
    if (cols_ != o.rows_)
        fail(errc::dimension_mismatch, "exact_linalg", "matrix product shape mismatch");
    scalar_matrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                m.at(i, j) += at(i, k) * o.at(k, j);
        }
    return m;
}

scalar_matrix scalar_matrix::operator+(const scalar_matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        fail(errc::dimension_mismatch, "exact_linalg", "matrix sum shape mismatch");
    scalar_matrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
    return m;
}

scalar_matrix scalar_matrix::operator-(const scalar_matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        fail(errc::dimension_mismatch, "exact_linalg", "matrix difference shape mismatch");
    scalar_matrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
    return m;
}

scalar_matrix scalar_matrix::scaled(const scalar& c) const {
    scalar_matrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * c;
    return m;
}

std::vector<scalar> scalar_matrix::apply(const std::vector<scalar>& v) const {
    if (v.size() != cols_)
        fail(errc::dimension_mismatch, "exact_linalg", "matrix-vector shape mismatch");
    std::vector<scalar> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

namespace {
// Row-reduce in place; returns (pivot columns, determinant scale tracked for
// square input).  Elimination is plain exact division.
struct rref_result {
    std::vector<std::size_t> pivot_cols;
    scalar det; // valid for square matrices only
};

rref_result rref_in_place(scalar_matrix& m) {
    rref_result res;
    res.det = scalar(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
            res.det = -res.det;
        }
        scalar inv = m.at(row, col).inverse();
        res.det *= m.at(row, col);
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            scalar f = m.at(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    return res;
}
} // namespace

scalar scalar_matrix::determinant() const {
    if (rows_ != cols_) fail(errc::dimension_mismatch, "exact_linalg", "determinant of non-square");
    scalar_matrix m = *this;
    rref_result r = rref_in_place(m);
    if (r.pivot_cols.size() != rows_) return scalar(0);
    return r.det;
}

scalar_matrix scalar_matrix::inverse() const {
    if (rows_ != cols_) fail(errc::dimension_mismatch, "exact_linalg", "inverse of non-square");
    scalar_matrix aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = scalar(1);
    }
    rref_result r = rref_in_place(aug);
    if (r.pivot_cols.size() != rows_ || r.pivot_cols.back() >= cols_)
        fail(errc::singular, "exact_linalg", "matrix is singular");
    for (std::size_t k = 0; k < rows_; ++k)
        if (r.pivot_cols[k] != k) fail(errc::singular, "exact_linalg", "matrix is singular");
    scalar_matrix inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

std::size_t scalar_matrix::rank() const {
    scalar_matrix m = *this;
    return rref_in_place(m).pivot_cols.size();
}

std::vector<std::vector<scalar>> scalar_matrix::nullspace() const {
    scalar_matrix m = *this;
    rref_result r = rref_in_place(m);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<scalar>> basis;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<scalar> v(cols_);
        v[free_col] = scalar(1);
        for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
            v[r.pivot_cols[k]] = -m.at(k, free_col);
        normalize_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool scalar_matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool scalar_matrix::is_zero_below_antidiagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i + j + 2 > rows_ + 1 && !at(i, j).is_zero()) return false;
    return true;
}

bool scalar_matrix::is_lower_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

bool scalar_matrix::is_upper_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < i && j < cols_; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

std::string scalar_matrix::str() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out += "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out += ", ";
            out += at(i, j).str();
        }
        out += "]";
        if (i + 1 < rows_) out += "\n";
    }
    return out;
}

transform transform::identity(std::size_t n) {
    return transform(scalar_matrix::identity(n), scalar_matrix::identity(n));
}

transform transform::make(scalar_matrix m) {
    scalar_matrix inv = m.inverse();
    return transform(std::move(m), std::move(inv));
}

transform transform::then(const transform& right) const {
    return transform(mat_ * right.mat(), right.inv() * inv_);
}

void normalize_primitive(std::vector<scalar>& v) {
    bool all_rational = true;
    for (const auto& s : v)
        if (!s.is_rational()) all_rational = false;

    // Clear denominators.
    mpz_class den = 1;
    for (const auto& s : v) {
        den = lcm(den, s.re().get_den());
        den = lcm(den, s.im().get_den());
    }
    for (auto& s : v) s *= scalar(mpq_class(den));

    if (all_rational) {
        mpz_class g = 0;
        for (const auto& s : v) g = gcd(g, s.re().get_num());
        if (g == 0) return;
        for (auto& s : v) s = scalar(mpq_class(s.re().get_num() / g));
        for (const auto& s : v) {
            if (s.is_zero()) continue;
            if (s.re() < 0)
                for (auto& t : v) t = -t;
            break;
        }
        return;
    }

    gaussian_int g(0, 0);
    for (const auto& s : v)
        g = gauss_gcd(g, gaussian_int(s.re().get_num(), s.im().get_num()));
    if (g.is_zero()) return;
    scalar ginv = scalar(mpq_class(g.re), mpq_class(g.im)).inverse();
    for (auto& s : v) s *= ginv;
    for (const auto& s : v) {
        if (s.is_zero()) continue;
        // multiply through by the unit making the leading entry canonical
        gaussian_int lead(s.re().get_num() * s.im().get_den(), s.im().get_num() * s.re().get_den());
        gaussian_int canon = unit_canonical(lead);
        scalar unit(1);
        gaussian_int z = lead;
        for (int k = 0; k < 4 && !(z == canon); ++k) {
            z = gaussian_int(-z.im, z.re);
            unit *= scalar::imaginary_unit();
        }
        for (auto& t : v) t *= unit;
        break;
    }
}

std::optional<std::vector<scalar>> solve_linear(const scalar_matrix& A,
                                                const std::vector<scalar>& b) {
    if (b.size() != A.rows())
        fail(errc::dimension_mismatch, "exact_linalg", "solve shape mismatch");
    scalar_matrix aug(A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i];
    }
    rref_result r = rref_in_place(aug);
    for (std::size_t c : r.pivot_cols)
        if (c == A.cols()) return std::nullopt; // inconsistent
    std::vector<scalar> x(A.cols());
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
        x[r.pivot_cols[k]] = aug.at(k, A.cols());
    return x;
}

} // namespace hesslab
