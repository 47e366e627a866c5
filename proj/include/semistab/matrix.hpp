#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "semistab/errors.hpp"
#include "semistab/polynomial.hpp"
#include "semistab/rational.hpp"

namespace semistab {

namespace detail {

// In-place row echelon form over an exact field; returns the rank.
// Scalars must support +, -, *, / and == with T(0) comparisons exact.
template <typename T>
int echelonize(std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return 0;
    const size_t cols = rows[0].size();
    int rank = 0;
    const T zero{0};
    for (size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (size_t r = static_cast<size_t>(rank); r < rows.size(); ++r) {
            if (!(rows[r][col] == zero)) {
                pivot = static_cast<int>(r);
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
        auto& prow = rows[static_cast<size_t>(rank)];
        const T inv_p = T(1) / prow[col];
        for (size_t c = col; c < cols; ++c) prow[c] = prow[c] * inv_p;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<size_t>(rank)) continue;
            const T factor = rows[r][col];
            if (factor == zero) continue;
            for (size_t c = col; c < cols; ++c) rows[r][c] = rows[r][c] - factor * prow[c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

// Dense square matrix over an exact scalar field (Rational or
// CyclotomicNumber). Immutable-by-convention value type; every operation
// returns a fresh matrix.
template <typename T>
class Matrix {
public:
    explicit Matrix(int n) : n_(n), e_(checked_size(n), T(0)) {}
    Matrix(int n, std::vector<T> entries) : n_(n), e_(std::move(entries)) {
        if (e_.size() != checked_size(n)) throw DimensionMismatch("entry count != n*n");
    }
    // Row-major literal, e.g. Matrix<Rational>({{1, 2}, {0, 1}}).
    Matrix(std::initializer_list<std::initializer_list<T>> rows) : n_(static_cast<int>(rows.size())) {
        e_.reserve(checked_size(n_));
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != n_) throw DimensionMismatch("ragged matrix literal");
            for (const auto& x : row) e_.push_back(x);
        }
    }

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }
    static Matrix zero(int n) { return Matrix(n); }

    int n() const { return n_; }
    const T& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    T& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<T>& entries() const { return e_; }

    bool operator==(const Matrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        const T zero{0};
        for (const auto& x : e_)
            if (!(x == zero)) return false;
        return true;
    }
    bool is_identity() const { return *this == identity(n_); }

    Matrix operator-() const {
        Matrix r(n_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = T(0) - e_[i];
        return r;
    }
    Matrix operator+(const Matrix& o) const {
        check_same(o);
        Matrix r(n_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_same(o);
        Matrix r(n_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        check_same(o);
        Matrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const T& a = at(i, k);
                if (a == T(0)) continue;
                for (int j = 0; j < n_; ++j) r.at(i, j) = r.at(i, j) + a * o.at(k, j);
            }
        return r;
    }
    Matrix scaled(const T& s) const {
        Matrix r(n_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
        return r;
    }
    Matrix transpose() const {
        Matrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Matrix pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        Matrix acc = identity(n_);
        Matrix base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    T trace() const {
        T t{0};
        for (int i = 0; i < n_; ++i) t = t + at(i, i);
        return t;
    }

    int rank() const {
        auto rows = to_rows();
        return detail::echelonize(rows);
    }

    T det() const {
        // Forward elimination tracking row swaps and pivots.
        auto rows = to_rows();
        T result{1};
        int r = 0;
        for (int col = 0; col < n_ && r < n_; ++col) {
            int pivot = -1;
            for (int i = r; i < n_; ++i)
                if (!(rows[static_cast<size_t>(i)][static_cast<size_t>(col)] == T(0))) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return T(0);
            if (pivot != r) {
                std::swap(rows[static_cast<size_t>(r)], rows[static_cast<size_t>(pivot)]);
                result = T(0) - result;
            }
            const T p = rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
            result = result * p;
            for (int i = r + 1; i < n_; ++i) {
                const T f = rows[static_cast<size_t>(i)][static_cast<size_t>(col)] / p;
                if (f == T(0)) continue;
                for (int c = col; c < n_; ++c)
                    rows[static_cast<size_t>(i)][static_cast<size_t>(c)] =
                        rows[static_cast<size_t>(i)][static_cast<size_t>(c)] -
                        f * rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
            }
            ++r;
        }
        return r == n_ ? result : T(0);
    }

    bool is_invertible() const { return rank() == n_; }

    Matrix inverse() const {
        // Gauss-Jordan on [A | I].
        std::vector<std::vector<T>> rows(static_cast<size_t>(n_),
                                         std::vector<T>(static_cast<size_t>(2 * n_), T(0)));
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = at(i, j);
            rows[static_cast<size_t>(i)][static_cast<size_t>(n_ + i)] = T(1);
        }
        detail::echelonize(rows);
        // A is invertible exactly when the left block reduced to the identity.
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                const T expected = i == j ? T(1) : T(0);
                if (!(rows[static_cast<size_t>(i)][static_cast<size_t>(j)] == expected))
                    throw SingularMatrix("matrix is singular");
            }
        Matrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(n_ + j)];
        return r;
    }

    // Applies f entrywise, converting the scalar type.
    template <typename U, typename F>
    Matrix<U> map(F&& f) const {
        std::vector<U> out;
        out.reserve(e_.size());
        for (const auto& x : e_) out.push_back(f(x));
        return Matrix<U>(n_, std::move(out));
    }

    std::vector<std::vector<T>> to_rows() const {
        std::vector<std::vector<T>> rows(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            rows[static_cast<size_t>(i)].reserve(static_cast<size_t>(n_));
            for (int j = 0; j < n_; ++j) rows[static_cast<size_t>(i)].push_back(at(i, j));
        }
        return rows;
    }

    std::string str() const {
        std::string out = "[";
        for (int i = 0; i < n_; ++i) {
            out += i ? "; " : "";
            for (int j = 0; j < n_; ++j) out += (j ? " " : "") + at(i, j).str();
        }
        return out + "]";
    }

private:
    static size_t checked_size(int n) {
        if (n <= 0) throw DimensionMismatch("matrix dimension must be positive");
        return static_cast<size_t>(n) * static_cast<size_t>(n);
    }
    void check_same(const Matrix& o) const {
        if (n_ != o.n_) throw DimensionMismatch("matrix dimensions differ");
    }

    int n_;
    std::vector<T> e_;
};

using RationalMatrix = Matrix<Rational>;

// Basis of the null space { v : M v = 0 }, as column vectors.
template <typename T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
    auto rows = m.to_rows();
    detail::echelonize(rows);
    const int n = m.n();
    std::vector<int> pivot_col_of_row;
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (const auto& row : rows) {
        for (int c = 0; c < n; ++c) {
            if (!(row[static_cast<size_t>(c)] == T(0))) {
                pivot_col_of_row.push_back(c);
                is_pivot[static_cast<size_t>(c)] = true;
                break;
            }
        }
    }
    std::vector<std::vector<T>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<T> v(static_cast<size_t>(n), T(0));
        v[static_cast<size_t>(free)] = T(1);
        for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
            const int pc = pivot_col_of_row[r];
            v[static_cast<size_t>(pc)] = T(0) - rows[r][static_cast<size_t>(free)];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Monic characteristic polynomial det(xI - M) by the Faddeev-LeVerrier
// recurrence, exact over Q.
Polynomial char_poly(const RationalMatrix& m);

// All rational roots with multiplicities (ascending); does not require the
// polynomial to split.
std::vector<std::pair<Rational, int>> polynomial_rational_roots(const Polynomial& p);

// Eigenvalues with multiplicities when the characteristic polynomial splits
// over Q; throws SpectrumNotRational otherwise.
std::vector<std::pair<Rational, int>> rational_eigenvalues(const RationalMatrix& m);

}  // namespace semistab
