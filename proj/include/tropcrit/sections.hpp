// Borel-Weil side: y-charts on G/B and G/P, the projection between them, the sections f_P and
// omega_lambda^{-1}, the valuation nu, and the comparison with nu_vee.
#pragma once

#include "tropcrit/group.hpp"
#include "tropcrit/laurent.hpp"
#include "tropcrit/polytope.hpp"
#include "tropcrit/ratfunc.hpp"
#include "tropcrit/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropcrit {

std::vector<std::string> y_chart_variables(std::size_t N); // x1..xN

template <class T>
Matrix<T> y_chart_matrix(int n, const ReducedWord& word, const std::vector<T>& x) {
    return y_word(static_cast<std::size_t>(n), word, x);
}

// nu of the matrix coefficients <xi, y_i(x) v_lambda>, sorted.
std::vector<LatticePoint> borel_weil_valuations(const DominantWeight& lambda, const ReducedWord& word);

// Pattern g_1..g_N: s-dots at the positive subexpression J of w_P, y_i(u_k) elsewhere.
struct ParabolicChart {
    int n = 0;
    ReducedWord word;
    ParabolicType P;
    std::vector<int> J;         // 1-based positions
    std::vector<int> positions; // chart coordinates u_k, k not in J
    std::vector<std::string> variables() const;
};

ParabolicChart parabolic_chart(const ReducedWord& word, const ParabolicType& P);

template <class T>
Matrix<T> parabolic_chart_matrix(const ParabolicChart& c, const std::vector<T>& u, const T& like) {
    auto n = static_cast<std::size_t>(c.n);
    auto g = Matrix<T>::identity(n, like);
    std::size_t next = 0;
    for (std::size_t k = 0; k < c.word.size(); ++k) {
        int pos = static_cast<int>(k) + 1;
        if (std::find(c.J.begin(), c.J.end(), pos) != c.J.end()) g = g * s_dot(n, c.word[k], like);
        else g = g * y_elem(n, c.word[k], u.at(next++));
    }
    return g;
}

// g = m p with p in P and m unipotent with identity diagonal blocks.
template <class T>
Matrix<T> parabolic_m(const Matrix<T>& g, const ParabolicType& P) {
    std::size_t n = g.rows();
    std::vector<std::vector<std::size_t>> blocks;
    for (auto [a, b] : P.blocks()) {
        std::vector<std::size_t> bl;
        for (int r = a; r <= b; ++r) bl.push_back(static_cast<std::size_t>(r - 1));
        blocks.push_back(bl);
    }
    auto G = g;
    auto m = Matrix<T>::identity(n, g.zero());
    for (std::size_t s = 0; s < blocks.size(); ++s) {
        const auto& bs = blocks[s];
        auto inv = inverse(G.submatrix(bs, bs));
        for (std::size_t t = s + 1; t < blocks.size(); ++t)
            for (std::size_t r : blocks[t]) {
                std::vector<T> coef(bs.size(), g.zero());
                for (std::size_t j = 0; j < bs.size(); ++j)
                    for (std::size_t l = 0; l < bs.size(); ++l) coef[j] = coef[j] + G(r, bs[l]) * inv(l, j);
                for (std::size_t j = 0; j < bs.size(); ++j) m(r, bs[j]) = coef[j];
                for (std::size_t col = 0; col < n; ++col) {
                    T acc = G(r, col);
                    for (std::size_t j = 0; j < bs.size(); ++j) acc = acc - coef[j] * G(bs[j], col);
                    G(r, col) = acc;
                }
            }
    }
    return m;
}

// Entries of m below the block diagonal, columns right to left, rows bottom to top.
std::vector<std::pair<std::size_t, std::size_t>> parabolic_m_coordinates(const ParabolicType& P);

// u_k as functions of x1..xN, in the order of ParabolicChart::positions.
std::vector<RatFunc> pi_P_in_charts(const ReducedWord& word, const ParabolicType& P);

using Character = std::vector<int>; // coefficients of eps_1..eps_n
std::vector<Character> chart_torus_weights(const ReducedWord& word, const ParabolicType& P);

struct SectionFunction {
    int n = 0;
    ReducedWord word;
    LaurentPoly f; // in x1..xN
};

SectionFunction f_P(const ReducedWord& word, const ParabolicType& P);
SectionFunction omega_inv(const DominantWeight& lambda, const ReducedWord& word);
Exponent nu(const SectionFunction& s);

struct ConjectureReport {
    DominantWeight lambda;
    ReducedWord word;
    SectionFunction omega;
    Exponent nu;
    std::vector<Rational> nu_vee;
    bool equal = false;
};

ConjectureReport conjecture_check(const DominantWeight& lambda, const ReducedWord& word);

struct SweepCase {
    DominantWeight lambda;
    ReducedWord word;
    std::optional<ConjectureReport> report;
    std::string error_code; // set when the case is unsupported
    std::string error;
};

struct SweepResult {
    std::vector<SweepCase> cases; // sorted by (lambda, word)
    std::size_t equal = 0, unequal = 0, unsupported = 0;
};

// Integral weights with fundamental coefficients <= bound, against every word.
std::vector<DominantWeight> integral_weights(int n, int bound);
SweepResult conjecture_sweep(int n, int bound, const std::vector<ReducedWord>& words, unsigned threads = 0);

} // namespace tropcrit
