#ifndef LIECOH_MATRIX_HPP
#define LIECOH_MATRIX_HPP

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace liecoh {

/// Dense row-major matrix over Q.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<Rational>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw dimension_error("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Matrix whose rows are the given vectors; all must have length `cols`.
    static Matrix from_rows(std::size_t cols, std::span<const Vector> rows) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw dimension_error("row length mismatch");
            std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
        }
        return m;
    }

    static Matrix from_columns(std::size_t rows, std::span<const Vector> cols) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw dimension_error("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Rational& at(std::size_t i, std::size_t j) {
        check_index(i, j);
        return data_[i * cols_ + j];
    }
    const Rational& at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return data_[i * cols_ + j];
    }

    Vector row(std::size_t i) const {
        return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    Vector column(std::size_t j) const {
        Vector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    std::span<Rational> row_span(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Rational> row_span(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
    }

    /// First `n` rows.
    Matrix top_rows(std::size_t n) const {
        Matrix m(n, cols_);
        std::copy(data_.begin(), data_.begin() + n * cols_, m.data_.begin());
        return m;
    }

    Matrix select_columns(std::span<const std::size_t> idx) const {
        Matrix m(rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw dimension_error("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (sgn(aik) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Vector operator*(const Matrix& a, const Vector& v) {
        if (a.cols_ != v.size()) throw dimension_error("matrix-vector shape mismatch");
        Vector out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0) out[i] += a(i, j) * v[j];
        return out;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw dimension_error("matrix sum shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw dimension_error("matrix difference shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    friend Matrix operator*(const Rational& s, Matrix a) {
        for (auto& x : a.data_) x *= s;
        return a;
    }

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw dimension_error("matrix index out of range");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct Rref {
    Matrix matrix;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan elimination; the pivot is the first nonzero entry in column order.
inline Rref rref(Matrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> nz;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m(p, c)) == 0) ++p;
        if (p == rows) continue;
        m.swap_rows(r, p);
        if (m(r, c) != 1) {
            const Rational inv = 1 / m(r, c);
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(m(r, j)) != 0) m(r, j) *= inv;
        }
        nz.clear();
        for (std::size_t j = c; j < cols; ++j)
            if (sgn(m(r, j)) != 0) nz.push_back(j);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            const Rational factor = m(i, c);
            for (std::size_t j : nz) m(i, j) -= factor * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Linear subspace of Q^n, stored as a reduced row echelon basis.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient) { return Subspace(ambient, Matrix(0, ambient), {}); }
    static Subspace full(std::size_t ambient) {
        std::vector<std::size_t> piv(ambient);
        for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
        return Subspace(ambient, Matrix::identity(ambient), std::move(piv));
    }

    /// Row span of `rows`.
    static Subspace row_span(const Matrix& rows) {
        auto r = rref(rows);
        return Subspace(rows.cols(), r.matrix.top_rows(r.rank), std::move(r.pivot_cols));
    }

    static Subspace span(std::size_t ambient, std::span<const Vector> vectors) {
        return row_span(Matrix::from_rows(ambient, vectors));
    }

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    Vector basis_vector(std::size_t i) const { return basis_.row(i); }

    std::vector<Vector> basis_vectors() const {
        std::vector<Vector> out;
        out.reserve(dim());
        for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
        return out;
    }

    /// Removes the components along the echelon basis; zero iff v lies in the subspace.
    Vector reduce(Vector v) const {
        check(v);
        for (std::size_t r = 0; r < dim(); ++r) {
            const Rational coeff = v[pivots_[r]];
            if (sgn(coeff) == 0) continue;
            for (std::size_t j = pivots_[r]; j < ambient_; ++j)
                if (sgn(basis_(r, j)) != 0) v[j] -= coeff * basis_(r, j);
        }
        return v;
    }

    bool contains(const Vector& v) const { return liecoh::is_zero(reduce(v)); }

    /// Adds v to the span, keeping the basis reduced; false if v was already inside.
    bool insert(const Vector& v) {
        Vector r = reduce(v);
        std::size_t c = 0;
        while (c < ambient_ && sgn(r[c]) == 0) ++c;
        if (c == ambient_) return false;
        const Rational lead = r[c];
        for (std::size_t j = c; j < ambient_; ++j) r[j] /= lead;
        std::size_t at = 0;
        while (at < dim() && pivots_[at] < c) ++at;
        Matrix next(dim() + 1, ambient_);
        for (std::size_t i = 0, out = 0; i <= dim(); ++i, ++out) {
            if (i == at) {
                for (std::size_t j = 0; j < ambient_; ++j) next(out, j) = r[j];
                ++out;
            }
            if (i == dim()) break;
            const Rational f = basis_(i, c);
            for (std::size_t j = 0; j < ambient_; ++j) next(out, j) = basis_(i, j);
            if (sgn(f) != 0)
                for (std::size_t j = c; j < ambient_; ++j)
                    if (sgn(r[j]) != 0) next(out, j) -= f * r[j];
        }
        basis_ = std::move(next);
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), c);
        return true;
    }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw dimension_error("subspace ambient mismatch");
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

    /// Coordinates of v in the echelon basis, or nullopt when v is outside.
    std::optional<Vector> coordinates(const Vector& v) const {
        check(v);
        Vector c(dim());
        for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
        if (!liecoh::is_zero(reduce(v))) return std::nullopt;
        return c;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw dimension_error("subspace ambient mismatch");
        auto rows = a.basis_vectors();
        auto more = b.basis_vectors();
        rows.insert(rows.end(), more.begin(), more.end());
        return span(a.ambient_, rows);
    }

private:
    Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    void check(const Vector& v) const {
        if (v.size() != ambient_) throw dimension_error("vector length does not match subspace ambient dimension");
    }

    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Null space {v : m v = 0} of m, a subspace of Q^{cols}.
inline Subspace kernel_basis(const Matrix& m) {
    const auto r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivot_cols) is_pivot[c] = true;
    std::vector<Vector> vecs;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v = zero_vector(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = -r.matrix(i, f);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), vecs);
}

/// Column span of m, a subspace of Q^{rows}.
inline Subspace image_basis(const Matrix& m) { return Subspace::row_span(m.transpose()); }

/// Some x with a x = b, or nullopt if the system is inconsistent.
inline std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw dimension_error("right-hand side length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const auto r = rref(std::move(aug));
    Vector x = zero_vector(a.cols());
    for (std::size_t i = 0; i < r.rank; ++i) {
        if (r.pivot_cols[i] == a.cols()) return std::nullopt;
        x[r.pivot_cols[i]] = r.matrix(i, a.cols());
    }
    return x;
}

inline Rational determinant(Matrix m) {
    if (m.rows() != m.cols()) throw dimension_error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m(i, c)) == 0) continue;
            const Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

inline Matrix inverse(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw dimension_error("inverse of non-square matrix");
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto r = rref(std::move(aug));
    if (r.rank < n || r.pivot_cols[n - 1] != n - 1) throw invalid_input("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.matrix(i, n + j);
    return inv;
}

inline Vector add(Vector a, const Vector& b) {
    if (a.size() != b.size()) throw dimension_error("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Vector sub(Vector a, const Vector& b) {
    if (a.size() != b.size()) throw dimension_error("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline Vector scale(const Rational& s, Vector a) {
    for (auto& x : a) x *= s;
    return a;
}

} // namespace liecoh

#endif
