// Mirror side: the quiver chart theta_M, the charts x~_{-i}, the superpotential and its
// tropicalization, and the valuation nu_vee of the critical point.
#pragma once

#include "tropcrit/crit.hpp"
#include "tropcrit/group.hpp"
#include "tropcrit/quiver.hpp"
#include "tropcrit/ratfunc.hpp"
#include "tropcrit/weights.hpp"

#include <memory>
#include <string>
#include <vector>

namespace tropcrit {

inline constexpr int kSymbolicBound = 4;

// Word (1..n-1, 1..n-2, .., 1) with the vertical arrows z_{n-m, j} as parameters.
std::vector<int> theta_word_arrows(const Quiver& q);

template <class T>
std::vector<T> arrows_from_vertices(const Quiver& q, const std::vector<T>& x) {
    std::vector<T> z;
    for (const auto& a : q.arrows())
        z.push_back(x[static_cast<std::size_t>(a.head)] / x[static_cast<std::size_t>(a.tail)]);
    return z;
}

// kappa: q_i = x_{ii} / x_{nn}
template <class T>
std::vector<T> torus_from_vertices(const Quiver& q, const std::vector<T>& x) {
    std::vector<T> out;
    const T& xn = x[static_cast<std::size_t>(q.star(q.n()))];
    for (int i = 1; i <= q.n(); ++i) out.push_back(x[static_cast<std::size_t>(q.star(i))] / xn);
    return out;
}

template <class T>
Matrix<T> theta_M(const Quiver& q, const std::vector<T>& x) {
    auto z = arrows_from_vertices(q, x);
    std::vector<T> params;
    for (int a : theta_word_arrows(q)) params.push_back(z[static_cast<std::size_t>(a)]);
    auto u1 = x_word(static_cast<std::size_t>(q.n()), standard_word(q.n()), params);
    return phi(torus_from_vertices(q, x), u1);
}

// hw, W, wt read off in chart coordinates (kappa, F, gamma).
template <class T>
struct ChartReadout {
    std::vector<T> hw;
    T W;
    std::vector<T> wt;
};

template <class T>
ChartReadout<T> hw_W_wt(const Quiver& q, const std::vector<T>& x) {
    ChartReadout<T> r;
    r.hw = torus_from_vertices(q, x);
    auto z = arrows_from_vertices(q, x);
    r.W = z.at(0);
    for (std::size_t a = 1; a < z.size(); ++a) r.W = r.W + z[a];
    const T& xn = x[static_cast<std::size_t>(q.star(q.n()))];
    auto zeta = [&](int k) {
        T s = field_one(xn);
        if (k > q.n()) return s;
        for (int v : q.diagonal(k)) s = s * x[static_cast<std::size_t>(v)];
        return s;
    };
    for (int i = 1; i <= q.n(); ++i) r.wt.push_back(zeta(i) / (zeta(i + 1) * xn));
    return r;
}

template <class T>
ChartReadout<T> hw_W_wt(const Matrix<T>& b) {
    auto g = gauss_factorize(b);
    return {g.q, chi(g.u1) + chi(g.u2), wt(b)};
}

// Symbolic vertex variables x{ij} and arrow variables (arrow labels).
std::vector<RatFunc> vertex_variables(const Quiver& q);
std::vector<RatFunc> arrow_variables(const Quiver& q);

// Superpotential in the chart x~_{-i}, variables z1..zN, q1..qn.
struct ChartSuperpotential {
    int n = 0;
    ReducedWord word;
    std::vector<std::string> variables;
    RatFunc W;
};

ChartSuperpotential superpotential_chart(int n, const ReducedWord& word);
// chi(u1) + chi(u2) of the symbolic chart matrix (independent code path).
RatFunc superpotential_chart_matrix(int n, const ReducedWord& word);

// <c, z-exponent> + <lambda, q-exponent>
struct AffineForm {
    std::vector<long> c;
    std::vector<long> lambda;

    Rational eval(const std::vector<Rational>& point, const DominantWeight& lam) const;
    std::string str() const;
    friend bool operator==(const AffineForm& a, const AffineForm& b) { return a.c == b.c && a.lambda == b.lambda; }
    friend bool operator<(const AffineForm& a, const AffineForm& b) {
        return a.c != b.c ? a.c < b.c : a.lambda < b.lambda;
    }
};

std::vector<AffineForm> superpotential_tropical(int n, const ReducedWord& word);

// (x~_{-i})^{-1} o theta_M in arrow variables.
struct ChartTransition {
    int n = 0;
    ReducedWord word;
    std::vector<std::string> variables; // arrow labels, quiver order
    std::vector<RatFunc> q;
    std::vector<RatFunc> z;

    std::vector<Rational> tropical_z(const std::vector<Rational>& sigma) const;
    std::vector<double> evaluate_z(const std::vector<double>& arrows) const;
};

std::shared_ptr<const ChartTransition> chart_transition_symbolic(int n, const ReducedWord& word);

std::vector<Rational> nu_vee(const DominantWeight& lambda, const ReducedWord& word);

// chart_invert_matrix plus forward re-evaluation; throws PrecisionExhausted
// when the recovered point does not reproduce b to its retained precision.
ChartPoint<PuiseuxSeries> chart_invert(const ReducedWord& word, const Matrix<PuiseuxSeries>& b);
ChartPoint<double> chart_invert(const ReducedWord& word, const Matrix<double>& b, double tol = 1e-9);

struct NumericNuVee {
    std::vector<Rational> point;
    int K = 0; // truncation that succeeded
};

NumericNuVee nu_vee_numeric(const DominantWeight& lambda, const ReducedWord& word, int K0 = 8, int Kmax = 64);

} // namespace tropcrit
