#include "tropcrit/crit.hpp"

#include "tropcrit/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <set>
#include <sstream>

namespace tropcrit {

namespace {

template <class Real>
using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
template <class Real>
using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

template <class Real>
struct LogLayer {
    const BasicLayerProblem<Real>& p;
    std::map<int, int> slot; // free vertex -> index

    explicit LogLayer(const BasicLayerProblem<Real>& prob) : p(prob) {
        for (std::size_t k = 0; k < p.free.size(); ++k) slot[p.free[k]] = static_cast<int>(k);
    }

    Real log_of(int v, const Vec<Real>& y) const {
        auto it = slot.find(v);
        if (it != slot.end()) return y(it->second);
        return std::log(p.boundary.at(v));
    }

    Real value(const Vec<Real>& y) const {
        Real f = 0;
        for (auto [t, h] : p.arrows) f += std::exp(log_of(h, y) - log_of(t, y));
        return f;
    }

    // gradient and Hessian in log coordinates; the Hessian is the weighted Dirichlet Laplacian
    void derivatives(const Vec<Real>& y, Vec<Real>& g, Mat<Real>& H) const {
        const auto n = static_cast<Eigen::Index>(p.free.size());
        g = Vec<Real>::Zero(n);
        H = Mat<Real>::Zero(n, n);
        for (auto [t, h] : p.arrows) {
            Real c = std::exp(log_of(h, y) - log_of(t, y));
            auto ih = slot.find(h), it = slot.find(t);
            if (ih != slot.end()) {
                g(ih->second) += c;
                H(ih->second, ih->second) += c;
            }
            if (it != slot.end()) {
                g(it->second) -= c;
                H(it->second, it->second) += c;
            }
            if (ih != slot.end() && it != slot.end()) {
                H(ih->second, it->second) -= c;
                H(it->second, ih->second) -= c;
            }
        }
    }
};

template <class Real>
std::vector<Real> z_coefficients(const BasicCriticalExpansion<Real>& e, int a, int upto) {
    const auto& arr = e.quiver.arrows()[static_cast<std::size_t>(a)];
    const auto& xh = e.x[static_cast<std::size_t>(arr.head)];
    const auto& xt = e.x[static_cast<std::size_t>(arr.tail)];
    std::vector<Real> z(static_cast<std::size_t>(upto) + 1, Real(0));
    z[0] = 1;
    for (int k = 1; k <= upto; ++k) {
        Real s = xh[static_cast<std::size_t>(k)] - xt[static_cast<std::size_t>(k)];
        for (int j = 1; j < k; ++j) s -= xt[static_cast<std::size_t>(j)] * z[static_cast<std::size_t>(k - j)];
        z[static_cast<std::size_t>(k)] = s;
    }
    return z;
}

template <class Real>
Real arrow_c(const BasicCriticalExpansion<Real>& e, int a) {
    const auto& arr = e.quiver.arrows()[static_cast<std::size_t>(a)];
    return e.d[static_cast<std::size_t>(arr.head)] / e.d[static_cast<std::size_t>(arr.tail)];
}

// coefficient of t^{pi(v) + k/M} in sum_{h(a)=v} z_a - sum_{t(a)=v} z_a
template <class Real>
Real crit_coefficient(const BasicCriticalExpansion<Real>& e, int v, int k) {
    const Rational pv = e.trop.pi(e.quiver, v);
    const Rational M(e.M());
    Real s = 0;
    auto term = [&](int a) -> Real {
        Rational shift = (e.trop.sigma[static_cast<std::size_t>(a)] - pv) * M;
        long j = k - shift.to_long();
        if (j < 0) return Real(0);
        return arrow_c(e, a) * z_coefficients(e, a, static_cast<int>(j))[static_cast<std::size_t>(j)];
    };
    for (int a : e.quiver.incoming(v)) s += term(a);
    for (int a : e.quiver.outgoing(v)) s -= term(a);
    return s;
}

} // namespace

template <class Real>
Real layer_objective(const BasicLayerProblem<Real>& p, const std::map<int, Real>& d) {
    Real f = 0;
    for (auto [t, h] : p.arrows) f += d.at(h) / d.at(t);
    return f;
}

template <class Real>
std::vector<Real> layer_gradient(const BasicLayerProblem<Real>& p, const std::map<int, Real>& d) {
    std::vector<Real> g;
    for (int v : p.free) {
        Real s = 0;
        for (auto [t, h] : p.arrows) {
            if (h == v) s += Real(1) / d.at(t);
            if (t == v) s -= d.at(h) / (d.at(t) * d.at(t));
        }
        g.push_back(s);
    }
    return g;
}

template <class Real>
LayerSolution<Real> solve_layer_minimum(const BasicLayerProblem<Real>& p, Real tol, int max_iter) {
    for (auto& [w, val] : p.boundary)
        if (!(val > 0)) throw std::invalid_argument("layer boundary values must be positive");
    LogLayer<Real> L(p);
    const auto n = static_cast<Eigen::Index>(p.free.size());
    LayerSolution<Real> out;
    Real mean = 0;
    for (auto& [w, val] : p.boundary) mean += std::log(val);
    if (!p.boundary.empty()) mean /= static_cast<Real>(p.boundary.size());
    Vec<Real> y = Vec<Real>::Constant(n, mean), g;
    Mat<Real> H;
    for (int it = 0;; ++it) {
        L.derivatives(y, g, H);
        Real f = L.value(y);
        out.gradient_norm = g.norm();
        out.iterations = it;
        if (out.gradient_norm <= tol * std::max(Real(1), f)) break;
        if (it >= max_iter) throw NoConvergence("layer Newton did not converge, |grad| = " +
                                                std::to_string(static_cast<double>(out.gradient_norm)));
        Eigen::LLT<Mat<Real>> llt(H);
        if (llt.info() != Eigen::Success) throw NoConvergence("layer Hessian is not positive definite");
        Vec<Real> step = llt.solve(-g);
        Real s = 1, slope = g.dot(step);
        while (L.value(y + s * step) > f + Real(1e-4) * s * slope && s > Real(1e-12)) s /= 2;
        y += s * step;
    }
    for (std::size_t k = 0; k < p.free.size(); ++k)
        out.values[p.free[k]] = std::exp(y(static_cast<Eigen::Index>(k)));
    return out;
}

template <class Real>
BasicPuiseux<Real> BasicCriticalExpansion<Real>::vertex_series(int v) const {
    const auto& vx = quiver.vertices()[static_cast<std::size_t>(v)];
    const Rational dv = trop.delta[static_cast<std::size_t>(v)];
    if (vx.star) return BasicPuiseux<Real>::monomial(Real(1), dv);
    std::vector<Real> c;
    for (Real xk : x[static_cast<std::size_t>(v)]) c.push_back(d[static_cast<std::size_t>(v)] * xk);
    return BasicPuiseux<Real>::from_coefficients(static_cast<int>(M()), dv, c);
}

template <class Real>
Real BasicCriticalExpansion<Real>::arrow_coefficient(int a, int k) const {
    return arrow_c(*this, a) * z_coefficients(*this, a, k)[static_cast<std::size_t>(k)];
}

template <class Real>
BasicPuiseux<Real> BasicCriticalExpansion<Real>::arrow_series(int a) const {
    auto z = z_coefficients(*this, a, K);
    Real c = arrow_c(*this, a);
    for (auto& zk : z) zk *= c;
    return BasicPuiseux<Real>::from_coefficients(static_cast<int>(M()), trop.sigma[static_cast<std::size_t>(a)], z);
}

template <class Real>
BasicCriticalExpansion<Real> expand_critical_point(const DominantWeight& lambda, int K, Real tol) {
    if (K < 0) throw std::invalid_argument("negative truncation order");
    BasicCriticalExpansion<Real> e;
    e.quiver = build_quiver(lambda.n());
    e.trop = solve_tropical(e.quiver, lambda);
    e.K = K;
    const std::size_t V = e.quiver.vertices().size();
    e.d.assign(V, Real(1));
    e.x.assign(V, std::vector<Real>(static_cast<std::size_t>(K) + 1, Real(0)));
    for (auto& xv : e.x) xv[0] = 1;

    for (const auto& layer : e.trop.layers) {
        BasicLayerProblem<Real> p;
        p.free = layer.vertices;
        std::set<int> fresh(layer.vertices.begin(), layer.vertices.end());
        for (int a : layer.arrows) {
            const auto& arr = e.quiver.arrows()[static_cast<std::size_t>(a)];
            p.arrows.emplace_back(arr.tail, arr.head);
            for (int w : {arr.tail, arr.head})
                if (!fresh.count(w)) p.boundary[w] = e.d[static_cast<std::size_t>(w)];
        }
        if (!p.free.empty()) {
            auto sol = solve_layer_minimum(p, tol);
            for (auto [v, val] : sol.values) e.d[static_cast<std::size_t>(v)] = val;
        }
    }

    for (int k = 1; k <= K; ++k)
        for (std::size_t l = 0; l < e.trop.layers.size(); ++l) {
            const auto& free = e.trop.layers[l].vertices;
            if (free.empty()) continue;
            const auto n = static_cast<Eigen::Index>(free.size());
            std::map<int, Eigen::Index> slot;
            for (Eigen::Index i = 0; i < n; ++i) slot[free[static_cast<std::size_t>(i)]] = i;
            Mat<Real> Psi = Mat<Real>::Zero(n, n);
            for (int a : e.trop.layers[l].arrows) {
                const auto& arr = e.quiver.arrows()[static_cast<std::size_t>(a)];
                Real c = arrow_c(e, a);
                auto ih = slot.find(arr.head), it = slot.find(arr.tail);
                if (ih != slot.end()) Psi(ih->second, ih->second) += c;
                if (it != slot.end()) Psi(it->second, it->second) += c;
                if (ih != slot.end() && it != slot.end()) {
                    Psi(ih->second, it->second) -= c;
                    Psi(it->second, ih->second) -= c;
                }
            }
            Vec<Real> rhs(n);
            for (Eigen::Index i = 0; i < n; ++i) rhs(i) = -crit_coefficient(e, free[static_cast<std::size_t>(i)], k);
            Eigen::LLT<Mat<Real>> llt(Psi);
            if (llt.info() != Eigen::Success)
                throw InternalError("order-" + std::to_string(k) + " system is not positive definite");
            Vec<Real> y = llt.solve(rhs);
            for (Eigen::Index i = 0; i < n; ++i)
                e.x[static_cast<std::size_t>(free[static_cast<std::size_t>(i)])][static_cast<std::size_t>(k)] = y(i);
        }
    return e;
}

template <class Real>
Real residual_report(const BasicCriticalExpansion<Real>& e) {
    const auto& q = e.quiver;
    std::vector<BasicPuiseux<Real>> xs;
    for (std::size_t v = 0; v < q.vertices().size(); ++v) xs.push_back(e.vertex_series(static_cast<int>(v)));
    auto z = [&](int a) {
        const auto& arr = q.arrows()[static_cast<std::size_t>(a)];
        return xs[static_cast<std::size_t>(arr.head)] / xs[static_cast<std::size_t>(arr.tail)];
    };
    Real worst = 0;
    for (int v : q.bullets()) {
        BasicPuiseux<Real> in, out;
        for (int a : q.incoming(v)) in = in + z(a);
        for (int a : q.outgoing(v)) out = out + z(a);
        Rational pv = e.trop.pi(q, v);
        for (int k = 0; k <= e.K; ++k) {
            Rational ex = pv + Rational(k, e.M());
            worst = std::max(worst, std::abs(in.coefficient_at(ex) - out.coefficient_at(ex)));
        }
    }
    return worst;
}

template <class Real>
bool check_path_identity(const BasicCriticalExpansion<Real>& e, int i, Real tol) {
    const auto& q = e.quiver;
    const int n = q.n();
    if (i < 2 || i > n) throw std::invalid_argument("diagonal index out of range");
    auto zeta = [&](int j) {
        BasicPuiseux<Real> s = BasicPuiseux<Real>::constant(Real(1));
        if (j > n) return s;
        for (int v : q.diagonal(j)) s = s * e.vertex_series(v);
        return s;
    };
    auto lhs = zeta(i - 1) * zeta(i + 1), rhs = zeta(i) * zeta(i);
    if (lhs.leading_exponent() != rhs.leading_exponent()) return false;
    auto pl = lhs.precision(), pr = rhs.precision();
    Rational cap = pl && pr ? std::min(*pl, *pr) : pl ? *pl : pr ? *pr : lhs.leading_exponent() + Rational(e.K + 1, e.M());
    Real scale = std::max(std::abs(lhs.leading_coefficient()), std::abs(rhs.leading_coefficient()));
    for (Rational ex = lhs.leading_exponent(); ex < cap; ex += Rational(1, e.M()))
        if (std::abs(lhs.coefficient_at(ex) - rhs.coefficient_at(ex)) > tol * scale) return false;
    return true;
}

std::optional<Rational> recognize_rational(double x, long maxden, double tol) {
    for (long q = 1; q <= maxden; ++q) {
        double p = std::round(x * static_cast<double>(q));
        if (std::abs(x - p / static_cast<double>(q)) <= tol) return Rational(static_cast<long>(p), q);
    }
    return std::nullopt;
}

template <class Real>
std::string series_pretty(const BasicPuiseux<Real>& s) {
    if (s.is_zero()) return s.str();
    std::ostringstream os;
    const int M = s.grid();
    const Rational lead = s.leading_exponent();
    const long base = (lead * Rational(M)).to_long();
    Real scale = std::abs(s.leading_coefficient());
    bool first = true;
    for (std::size_t k = 0; k < s.coefficients().size(); ++k) {
        Real c = s.coefficients()[k];
        if (std::abs(c) <= Real(1e-13) * scale) continue;
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        auto r = recognize_rational(static_cast<double>(std::abs(c)));
        if (r) {
            if (*r != Rational(1)) os << r->str() << " ";
        } else {
            os.precision(10);
            os << static_cast<double>(std::abs(c)) << " ";
        }
        long num = base + static_cast<long>(k);
        os << "t^{" << (M == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(M)) << "}";
        first = false;
    }
    if (auto p = s.precision()) {
        long num = (*p * Rational(M)).to_long();
        os << " + O(t^{" << (M == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(M)) << "})";
    }
    return os.str();
}

#define TROPCRIT_INSTANTIATE(R)                                                                              \
    template R layer_objective<R>(const BasicLayerProblem<R>&, const std::map<int, R>&);                     \
    template std::vector<R> layer_gradient<R>(const BasicLayerProblem<R>&, const std::map<int, R>&);         \
    template LayerSolution<R> solve_layer_minimum<R>(const BasicLayerProblem<R>&, R, int);                   \
    template struct BasicCriticalExpansion<R>;                                                               \
    template BasicCriticalExpansion<R> expand_critical_point<R>(const DominantWeight&, int, R);              \
    template R residual_report<R>(const BasicCriticalExpansion<R>&);                                         \
    template bool check_path_identity<R>(const BasicCriticalExpansion<R>&, int, R);                          \
    template std::string series_pretty<R>(const BasicPuiseux<R>&);

TROPCRIT_INSTANTIATE(double)
TROPCRIT_INSTANTIATE(long double)

#undef TROPCRIT_INSTANTIATE

} // namespace tropcrit
