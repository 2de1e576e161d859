// Small dense matrices over the scalar types used here (double, Rational, RatFunc, Puiseux series)
// with Gauss/LDU style factorizations.
#pragma once

#include "tropcrit/errors.hpp"
#include "tropcrit/puiseux.hpp"
#include "tropcrit/ratfunc.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

namespace tropcrit {

template <class T>
struct FieldOps;

template <>
struct FieldOps<double> {
    static double zero_like(const double&) { return 0.0; }
    static double from_int(const double&, long k) { return static_cast<double>(k); }
    static bool is_zero(const double& x) { return x == 0.0; }
    static bool better_pivot(const double& a, const double& b) { return std::abs(a) > std::abs(b); }
};

template <>
struct FieldOps<long double> {
    static long double zero_like(const long double&) { return 0.0L; }
    static long double from_int(const long double&, long k) { return static_cast<long double>(k); }
    static bool is_zero(const long double& x) { return x == 0.0L; }
    static bool better_pivot(const long double& a, const long double& b) { return std::abs(a) > std::abs(b); }
};

template <>
struct FieldOps<Rational> {
    static Rational zero_like(const Rational&) { return Rational(0); }
    static Rational from_int(const Rational&, long k) { return Rational(k); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static bool better_pivot(const Rational&, const Rational&) { return false; }
};

template <>
struct FieldOps<RatFunc> {
    static RatFunc zero_like(const RatFunc& x) { return RatFunc::constant(x.variables(), 0); }
    static RatFunc from_int(const RatFunc& x, long k) { return RatFunc::constant(x.variables(), Rational(k)); }
    static bool is_zero(const RatFunc& x) { return x.is_zero(); }
    static bool better_pivot(const RatFunc& a, const RatFunc& b) {
        return a.num().size() + a.den().size() < b.num().size() + b.den().size();
    }
};

template <class R>
struct FieldOps<BasicPuiseux<R>> {
    using S = BasicPuiseux<R>;
    static S zero_like(const S&) { return S(); }
    static S from_int(const S&, long k) { return S::constant(static_cast<R>(k)); }
    // Unresolved zeros stay in the computation and carry their precision.
    static bool is_zero(const S& x) { return x.is_zero() && x.exact(); }
    // Lowest valuation first, then the larger leading coefficient.
    static bool better_pivot(const S& a, const S& b) {
        if (a.is_unresolved()) return false;
        if (b.is_unresolved()) return true;
        Rational va = a.leading_exponent(), vb = b.leading_exponent();
        if (va != vb) return va < vb;
        return std::abs(a.leading_coefficient()) > std::abs(b.leading_coefficient());
    }
};

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, const T& zero) : r_(r), c_(c), a_(r * c, zero), zero_(zero) {}

    static Matrix identity(std::size_t n, const T& like) {
        T z = FieldOps<T>::zero_like(like);
        Matrix m(n, n, z);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldOps<T>::from_int(like, 1);
        return m;
    }

    static Matrix from_int(const std::vector<std::vector<long>>& rows, const T& like) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), FieldOps<T>::zero_like(like));
        for (std::size_t i = 0; i < m.r_; ++i)
            for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = FieldOps<T>::from_int(like, rows[i][j]);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    const T& zero() const { return zero_; }
    T one() const { return FieldOps<T>::from_int(zero_, 1); }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Matrix transpose() const {
        Matrix t(c_, r_, zero_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
        Matrix s(rows.size(), cols.size(), zero_);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
        return s;
    }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<T>()))> {
        using U = decltype(f(std::declval<T>()));
        Matrix<U> m(r_, c_, f(zero_));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw DimensionMismatch("matrix product");
        Matrix m(a.r_, b.c_, a.zero_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                if (FieldOps<T>::is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.c_; ++j) {
                    if (FieldOps<T>::is_zero(b(k, j))) continue;
                    m(i, j) = m(i, j) + a(i, k) * b(k, j);
                }
            }
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix m = a;
        for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
        return m;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix m = a;
        for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
        return m;
    }

    bool is_lower_triangular() const {
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = i + 1; j < c_; ++j)
                if (!FieldOps<T>::is_zero((*this)(i, j))) return false;
        return true;
    }

    bool is_upper_triangular() const { return transpose().is_lower_triangular(); }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
    T zero_{};
};

template <class T>
struct LDU {
    Matrix<T> L, D, U;
};

// g = L D U with L lower unipotent, D diagonal, U upper unipotent; no pivoting.
template <class T>
LDU<T> ldu(const Matrix<T>& g) {
    std::size_t n = g.rows();
    Matrix<T> A = g;
    LDU<T> out{Matrix<T>::identity(n, g.zero()), Matrix<T>(n, n, g.zero()), Matrix<T>::identity(n, g.zero())};
    for (std::size_t k = 0; k < n; ++k) {
        const T p = A(k, k);
        if (FieldOps<T>::is_zero(p)) throw NotInBigCell("leading principal minor " + std::to_string(k + 1) + " vanishes");
        out.D(k, k) = p;
        for (std::size_t i = k + 1; i < n; ++i) out.L(i, k) = A(i, k) / p;
        for (std::size_t j = k + 1; j < n; ++j) out.U(k, j) = A(k, j) / p;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (FieldOps<T>::is_zero(out.L(i, k))) continue;
            for (std::size_t j = k + 1; j < n; ++j)
                if (!FieldOps<T>::is_zero(A(k, j))) A(i, j) = A(i, j) - out.L(i, k) * A(k, j);
        }
    }
    return out;
}

template <class T>
T determinant(Matrix<T> A) {
    std::size_t n = A.rows();
    T det = A.one();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i) {
            if (FieldOps<T>::is_zero(A(i, k))) continue;
            if (piv == n || FieldOps<T>::better_pivot(A(i, k), A(piv, k))) piv = i;
        }
        if (piv == n) return A.zero();
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(A(k, j), A(piv, j));
            det = -det;
        }
        const T p = A(k, k);
        det = det * p;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (FieldOps<T>::is_zero(A(i, k))) continue;
            T f = A(i, k) / p;
            for (std::size_t j = k + 1; j < n; ++j)
                if (!FieldOps<T>::is_zero(A(k, j))) A(i, j) = A(i, j) - f * A(k, j);
        }
    }
    return det;
}

template <class T>
T minor(const Matrix<T>& g, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    return determinant(g.submatrix(rows, cols));
}

// Solves A x = b (A square, nonsingular) by elimination with pivoting.
template <class T>
std::vector<T> solve(Matrix<T> A, std::vector<T> b) {
    std::size_t n = A.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i) {
            if (FieldOps<T>::is_zero(A(i, k))) continue;
            if (piv == n || FieldOps<T>::better_pivot(A(i, k), A(piv, k))) piv = i;
        }
        if (piv == n) throw NotInBigCell("singular linear system");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(A(k, j), A(piv, j));
            std::swap(b[k], b[piv]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (FieldOps<T>::is_zero(A(i, k))) continue;
            T f = A(i, k) / A(k, k);
            for (std::size_t j = k + 1; j < n; ++j)
                if (!FieldOps<T>::is_zero(A(k, j))) A(i, j) = A(i, j) - f * A(k, j);
            b[i] = b[i] - f * b[k];
        }
    }
    std::vector<T> x(n, A.zero());
    for (std::size_t k = n; k-- > 0;) {
        T s = b[k];
        for (std::size_t j = k + 1; j < n; ++j)
            if (!FieldOps<T>::is_zero(A(k, j))) s = s - A(k, j) * x[j];
        x[k] = s / A(k, k);
    }
    return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& A) {
    std::size_t n = A.rows();
    Matrix<T> inv(n, n, A.zero());
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<T> e(n, A.zero());
        e[j] = A.one();
        auto col = solve(A, e);
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    return inv;
}

// Inverse of a unipotent triangular matrix by the Neumann series (exact, no division).
template <class T>
Matrix<T> unipotent_inverse(const Matrix<T>& u) {
    std::size_t n = u.rows();
    Matrix<T> I = Matrix<T>::identity(n, u.zero());
    Matrix<T> N = I - u;
    Matrix<T> acc = I, p = I;
    for (std::size_t k = 1; k < n; ++k) {
        p = p * N;
        acc = acc + p;
    }
    return acc;
}

} // namespace tropcrit
