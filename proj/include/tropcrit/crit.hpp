// Puiseux expansion of the totally positive critical point in the quiver chart: leading
// coefficients from layer minima, higher orders from the linear systems Psi_{l,k}.
#pragma once

#include "tropcrit/puiseux.hpp"
#include "tropcrit/quiver.hpp"
#include "tropcrit/tropsolve.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tropcrit {

template <class Real>
struct BasicLayerProblem {
    std::vector<int> free;                    // V_l^bullet
    std::vector<std::pair<int, int>> arrows;  // (tail, head) of A_l^bullet
    std::map<int, Real> boundary;             // d_w for w in V_{l-1}
};

template <class Real>
struct LayerSolution {
    std::map<int, Real> values;
    int iterations = 0;
    Real gradient_norm = 0;
};

template <class Real>
Real layer_objective(const BasicLayerProblem<Real>& p, const std::map<int, Real>& d);
// dF/dd_v for v in p.free, in the order of p.free.
template <class Real>
std::vector<Real> layer_gradient(const BasicLayerProblem<Real>& p, const std::map<int, Real>& d);
template <class Real>
LayerSolution<Real> solve_layer_minimum(const BasicLayerProblem<Real>& p, Real tol = Real(1e-12),
                                        int max_iter = 200);

template <class Real>
struct BasicCriticalExpansion {
    Quiver quiver;
    TropicalPoint trop;
    int K = 0;
    std::vector<Real> d;              // per vertex
    std::vector<std::vector<Real>> x; // per vertex, x[v][0] = 1, k = 0..K

    long M() const { return trop.M; }
    BasicPuiseux<Real> vertex_series(int v) const;
    BasicPuiseux<Real> arrow_series(int a) const;  // from the z_{a,k} recursion
    Real arrow_coefficient(int a, int k) const;     // c_a z_{a,k}
};

template <class Real>
BasicCriticalExpansion<Real> expand_critical_point(const DominantWeight& lambda, int K, Real tol = Real(1e-12));

// max |coefficient| of the critical point equations through order K, computed
// from the vertex series by series division (independent of the recursion).
template <class Real>
Real residual_report(const BasicCriticalExpansion<Real>& e);

// zeta_{i-1} zeta_{i+1} = zeta_i^2 through the reliable order, zeta_j the
// product of x_v over the diagonal D_j, zeta_{n+1} = 1.
template <class Real>
bool check_path_identity(const BasicCriticalExpansion<Real>& e, int i, Real tol = Real(1e-9));

template <class Real>
BasicCriticalExpansion<Real> perturbed(BasicCriticalExpansion<Real> e, int v, int k, Real eps) {
    e.x[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)] += eps;
    return e;
}

// Smallest-denominator rational within tol (denominators up to maxden).
std::optional<Rational> recognize_rational(double x, long maxden = 1024, double tol = 1e-9);

// "t^{5/6} - 1/2 t^{7/6} + ..." with recognized coefficients where possible.
template <class Real>
std::string series_pretty(const BasicPuiseux<Real>& s);

using LayerProblem = BasicLayerProblem<double>;
using CriticalExpansion = BasicCriticalExpansion<double>;

} // namespace tropcrit
