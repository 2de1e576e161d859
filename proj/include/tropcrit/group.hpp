// Elementary matrices of GL_n and the factorizations used by the mirror charts: Gauss decomposition
// through w0bar, twist, inverse twist, and peeling x_{-i} factors off a lower-triangular matrix.
#pragma once

#include "tropcrit/matrix.hpp"
#include "tropcrit/weights.hpp"

#include <algorithm>
#include <vector>

namespace tropcrit {

template <class T>
T field_one(const T& like) { return FieldOps<T>::from_int(like, 1); }

// x_i(a) = I + a E_{i,i+1}; letters are 1-based.
template <class T>
Matrix<T> x_elem(std::size_t n, int i, const T& a) {
    auto m = Matrix<T>::identity(n, a);
    m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i)) = a;
    return m;
}

template <class T>
Matrix<T> y_elem(std::size_t n, int i, const T& a) {
    auto m = Matrix<T>::identity(n, a);
    m(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1)) = a;
    return m;
}

// x_i(-1) y_i(1) x_i(-1): e_i -> e_{i+1}, e_{i+1} -> -e_i.
template <class T>
Matrix<T> s_dot(std::size_t n, int i, const T& like) {
    auto m = Matrix<T>::identity(n, like);
    auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(i);
    T one = field_one(like);
    m(a, a) = FieldOps<T>::zero_like(like);
    m(b, b) = FieldOps<T>::zero_like(like);
    m(a, b) = -one;
    m(b, a) = one;
    return m;
}

template <class T>
Matrix<T> s_dot_inverse(std::size_t n, int i, const T& like) { return s_dot(n, i, like).transpose(); }

template <class T>
Matrix<T> word_s_dot(std::size_t n, const ReducedWord& w, const T& like) {
    auto m = Matrix<T>::identity(n, like);
    for (int i : w) m = m * s_dot(n, i, like);
    return m;
}

template <class T>
Matrix<T> w0_bar(std::size_t n, const T& like) {
    return word_s_dot(n, standard_word(static_cast<int>(n)), like);
}

// x_{-i}(z) = y_i(z) alpha_i^vee(1/z)
template <class T>
Matrix<T> x_minus(std::size_t n, int i, const T& z) {
    auto m = Matrix<T>::identity(n, z);
    auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(i);
    T one = field_one(z);
    m(a, a) = one / z;
    m(b, a) = one;
    m(b, b) = z;
    return m;
}

template <class T>
Matrix<T> x_minus_word(std::size_t n, const ReducedWord& w, const std::vector<T>& z) {
    if (w.size() != z.size()) throw DimensionMismatch("word and parameter lengths differ");
    auto m = Matrix<T>::identity(n, z.empty() ? T{} : z[0]);
    for (std::size_t k = 0; k < w.size(); ++k) m = m * x_minus(n, w[k], z[k]);
    return m;
}

template <class T>
Matrix<T> x_word(std::size_t n, const ReducedWord& w, const std::vector<T>& a) {
    if (w.size() != a.size()) throw DimensionMismatch("word and parameter lengths differ");
    auto m = Matrix<T>::identity(n, a.empty() ? T{} : a[0]);
    for (std::size_t k = 0; k < w.size(); ++k) m = m * x_elem(n, w[k], a[k]);
    return m;
}

template <class T>
Matrix<T> y_word(std::size_t n, const ReducedWord& w, const std::vector<T>& a) {
    if (w.size() != a.size()) throw DimensionMismatch("word and parameter lengths differ");
    auto m = Matrix<T>::identity(n, a.empty() ? T{} : a[0]);
    for (std::size_t k = 0; k < w.size(); ++k) m = m * y_elem(n, w[k], a[k]);
    return m;
}

template <class T>
Matrix<T> diagonal(const std::vector<T>& d) {
    Matrix<T> m(d.size(), d.size(), FieldOps<T>::zero_like(d.at(0)));
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

// Sum of the superdiagonal.
template <class T>
T chi(const Matrix<T>& u) {
    T s = u.zero();
    for (std::size_t i = 0; i + 1 < u.rows(); ++i) s = s + u(i, i + 1);
    return s;
}

template <class T>
struct GaussFactors {
    Matrix<T> u1;
    std::vector<T> q;  // diagonal of q
    Matrix<T> u2;
};

// b = u1 w0bar q^{-1} u2.
template <class T>
GaussFactors<T> gauss_factorize(const Matrix<T>& b) {
    std::size_t n = b.rows();
    auto w0 = w0_bar(n, b.zero());
    auto f = ldu(w0.transpose() * b);
    GaussFactors<T> out{w0 * f.L * w0.transpose(), {}, f.U};
    for (std::size_t i = 0; i < n; ++i) out.q.push_back(field_one(b.zero()) / f.D(i, i));
    return out;
}

// Phi(q, u): the element of B_- of the form u w0bar q^{-1} u2.
template <class T>
Matrix<T> phi(const std::vector<T>& q, const Matrix<T>& u) {
    std::size_t n = u.rows();
    std::vector<T> qi;
    for (const auto& x : q) qi.push_back(field_one(x) / x);
    auto f = ldu(u * w0_bar(n, u.zero()) * diagonal(qi));
    return f.L * f.D;
}

template <class T>
T superpotential_matrix(const Matrix<T>& b) {
    auto g = gauss_factorize(b);
    return chi(g.u1) + chi(g.u2);
}

template <class T>
std::vector<T> hw(const Matrix<T>& b) { return gauss_factorize(b).q; }

// w0bar diag(b)^{-1} w0bar^{-1}
template <class T>
std::vector<T> wt(const Matrix<T>& b) {
    std::size_t n = b.rows();
    std::vector<T> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(field_one(b.zero()) / b(n - 1 - i, n - 1 - i));
    return out;
}

// [(w0bar b^T)^{-1}]_+
template <class T>
Matrix<T> twist(const Matrix<T>& b) {
    std::size_t n = b.rows();
    return ldu(inverse(w0_bar(n, b.zero()) * b.transpose())).U;
}

// Lower-triangular c with unit-free torus part and twist(c) = u.
template <class T>
Matrix<T> inverse_twist(const Matrix<T>& u) {
    std::size_t n = u.rows();
    Matrix<T> h = unipotent_inverse(u).transpose();
    Matrix<T> up = Matrix<T>::identity(n, u.zero());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::size_t m = n - 1 - i;
        Matrix<T> A(m, m, u.zero());
        std::vector<T> rhs;
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t t = 0; t < m; ++t) A(j, t) = h(i + 1 + t, j);
            rhs.push_back(-h(i, j));
        }
        auto sol = solve(A, rhs);
        for (std::size_t t = 0; t < m; ++t) up(i, i + 1 + t) = sol[t];
    }
    // (up h)_{ij} = 0 for i + j <= n - 2 by construction; never formed by subtraction
    Matrix<T> m(n, n, u.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i + j + 2 <= n) continue;
            T s = h(i, j);
            for (std::size_t k = i + 1; k < n; ++k)
                if (!FieldOps<T>::is_zero(h(k, j))) s = s + up(i, k) * h(k, j);
            m(i, j) = s;
        }
    return m * w0_bar(n, u.zero());
}

// Nonzero pattern of x_{-w}(z) for z with no cancellation (all entries of the
// factors are monomials with positive coefficients).
inline std::vector<std::vector<bool>> x_minus_pattern(std::size_t n, ReducedWord::const_iterator first,
                                                      ReducedWord::const_iterator last) {
    std::vector<std::vector<bool>> p(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) p[i][i] = true;
    for (auto it = first; it != last; ++it) {
        auto a = static_cast<std::size_t>(*it - 1), b = a + 1;
        // right factor x_{-i}: column a picks up column b
        for (std::size_t r = 0; r < n; ++r) p[r][a] = p[r][a] || p[r][b];
    }
    return p;
}

// z with c = x_{-w}(z), read off by minor ratios; c is consumed factor by factor.
template <class T>
std::vector<T> peel(Matrix<T> g, const ReducedWord& word) {
    std::size_t n = g.rows();
    std::vector<int> w;
    for (int r = static_cast<int>(n); r >= 1; --r) w.push_back(r);
    std::vector<T> zs;
    for (int i : word) {
        auto pos = std::find(w.begin(), w.end(), i + 1) - w.begin();
        std::size_t k = static_cast<std::size_t>(pos) + 1;
        std::vector<int> I(w.begin(), w.begin() + static_cast<long>(k));
        std::sort(I.begin(), I.end());
        std::vector<std::size_t> rows, rows2, cols;
        for (int r : I) {
            rows.push_back(static_cast<std::size_t>(r - 1));
            rows2.push_back(static_cast<std::size_t>((r == i + 1 ? i : r) - 1));
        }
        std::sort(rows2.begin(), rows2.end());
        for (std::size_t c = 0; c < k; ++c) cols.push_back(c);
        T den = minor(g, rows2, cols);
        if (FieldOps<T>::is_zero(den)) throw NotInBigCell("vanishing minor while peeling letter " + std::to_string(i));
        T z = minor(g, rows, cols) / den;
        zs.push_back(z);
        // x_{-i}(z)^{-1} = alpha_i^vee(z) y_i(-z)
        auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(i);
        std::size_t done = zs.size();
        auto pat = x_minus_pattern(n, word.begin() + static_cast<long>(done), word.end());
        for (std::size_t c = 0; c < n; ++c) {
            T ra = g(a, c), rb = g(b, c);
            g(a, c) = z * ra;
            g(b, c) = pat[b][c] ? rb / z - ra : g.zero();
        }
        for (auto& v : w) {
            if (v == i) v = i + 1;
            else if (v == i + 1) v = i;
        }
    }
    return zs;
}

// Phi(q, eta(x_{-w}(z)))
template <class T>
Matrix<T> chart_x_minus(const ReducedWord& word, const std::vector<T>& q, const std::vector<T>& z) {
    std::size_t n = q.size();
    return phi(q, twist(x_minus_word(n, word, z)));
}

template <class T>
struct ChartPoint {
    std::vector<T> q;
    std::vector<T> z;
};

template <class T>
ChartPoint<T> chart_invert_matrix(const ReducedWord& word, const Matrix<T>& b) {
    auto g = gauss_factorize(b);
    return {g.q, peel(inverse_twist(g.u1), word)};
}

} // namespace tropcrit
