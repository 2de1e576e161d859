#include "tropcrit/tropsolve.hpp"

#include "tropcrit/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

namespace tropcrit {

Rational TropicalPoint::pi(const Quiver& q, int v) const {
    std::optional<Rational> m;
    for (int a : q.incoming(v))
        if (!m || sigma[static_cast<std::size_t>(a)] < *m) m = sigma[static_cast<std::size_t>(a)];
    if (!m) throw std::invalid_argument("pi of a vertex without incoming arrows");
    return *m;
}

TropicalPoint point_from_delta(const Quiver& q, std::vector<Rational> delta) {
    TropicalPoint p;
    p.n = q.n();
    p.delta = std::move(delta);
    mpz_class M = 1;
    for (const auto& a : q.arrows()) {
        p.sigma.push_back(p.delta[static_cast<std::size_t>(a.head)] - p.delta[static_cast<std::size_t>(a.tail)]);
        M = lcm_den(M, p.sigma.back());
    }
    p.M = M.get_si();
    return p;
}

TropicalPoint solve_tropical(const Quiver& q, const DominantWeight& lambda) {
    if (lambda.n() != q.n()) throw DimensionMismatch("weight rank does not match quiver");
    const std::size_t V = q.vertices().size(), A = q.arrows().size();
    std::vector<Rational> delta(V);
    std::vector<bool> known(V, false), used(A, false);
    for (int i = 1; i <= q.n(); ++i) {
        delta[static_cast<std::size_t>(q.star(i))] = lambda[static_cast<std::size_t>(i - 1)];
        known[static_cast<std::size_t>(q.star(i))] = true;
    }
    std::vector<Layer> layers;
    std::size_t assigned = 0;
    while (assigned < A) {
        auto paths = enumerate_paths(q, known, used);
        if (paths.empty()) throw InternalError("layer has no admissible paths");
        std::optional<Rational> kappa;
        std::vector<Rational> gamma;
        for (const auto& p : paths) {
            gamma.push_back((delta[static_cast<std::size_t>(p.end)] - delta[static_cast<std::size_t>(p.start)]) /
                            Rational(p.len()));
            if (!kappa || gamma.back() < *kappa) kappa = gamma.back();
        }
        Layer L{*kappa, {}, {}};
        std::vector<bool> new_arrow(A, false), new_vertex(V, false);
        for (std::size_t k = 0; k < paths.size(); ++k) {
            if (gamma[k] != *kappa) continue;
            const auto& p = paths[k];
            Rational d = delta[static_cast<std::size_t>(p.start)];
            for (std::size_t s = 0; s < p.arrows.size(); ++s) {
                new_arrow[static_cast<std::size_t>(p.arrows[s])] = true;
                d += *kappa;
                auto v = static_cast<std::size_t>(p.vertices[s + 1]);
                if (known[v]) {
                    if (delta[v] != d) throw InternalError("inconsistent vertex value on a minimizing path");
                    continue;
                }
                if (new_vertex[v] && delta[v] != d) throw InternalError("two minimizing paths disagree");
                new_vertex[v] = true;
                delta[v] = d;
            }
        }
        for (std::size_t a = 0; a < A; ++a)
            if (new_arrow[a]) {
                L.arrows.push_back(static_cast<int>(a));
                used[a] = true;
                ++assigned;
            }
        for (std::size_t v = 0; v < V; ++v)
            if (new_vertex[v]) {
                L.vertices.push_back(static_cast<int>(v));
                known[v] = true;
            }
        if (L.arrows.empty()) throw InternalError("layer made no progress");
        if (!layers.empty() && !(layers.back().kappa < L.kappa))
            throw InternalError("layer values are not strictly increasing");
        layers.push_back(std::move(L));
    }
    TropicalPoint p = point_from_delta(q, std::move(delta));
    p.layers = std::move(layers);
    for (std::size_t a = 0; a < A; ++a) {
        // sigma equals kappa on every arrow of the layer
        bool ok = false;
        for (const auto& L : p.layers)
            if (std::find(L.arrows.begin(), L.arrows.end(), static_cast<int>(a)) != L.arrows.end())
                ok = p.sigma[a] == L.kappa;
        if (!ok) throw InternalError("arrow value differs from its layer value");
    }
    return p;
}

TropicalPoint solve_tropical(const DominantWeight& lambda) {
    return solve_tropical(build_quiver(lambda.n()), lambda);
}

std::vector<std::string> tropical_condition_failures(const Quiver& q, const TropicalPoint& p) {
    std::vector<std::string> bad;
    for (int v : q.bullets()) {
        std::optional<Rational> mi, mo;
        for (int a : q.incoming(v))
            if (!mi || p.sigma[static_cast<std::size_t>(a)] < *mi) mi = p.sigma[static_cast<std::size_t>(a)];
        for (int a : q.outgoing(v))
            if (!mo || p.sigma[static_cast<std::size_t>(a)] < *mo) mo = p.sigma[static_cast<std::size_t>(a)];
        if (!mi || !mo || *mi != *mo) bad.push_back(q.vertices()[static_cast<std::size_t>(v)].name);
    }
    return bad;
}

bool satisfies_tropical_conditions(const Quiver& q, const TropicalPoint& p) {
    return tropical_condition_failures(q, p).empty();
}

IdealFilling::IdealFilling(int n) : n_(n), e_(static_cast<std::size_t>(n * n)) {}

bool IdealFilling::is_ideal() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j) {
            if ((*this)(i, j).sign() < 0) return false;
            if (j - i >= 2 && (*this)(i, j) != std::max((*this)(i + 1, j), (*this)(i, j - 1))) return false;
        }
    return true;
}

bool IdealFilling::is_integral() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (!(*this)(i, j).is_integer()) return false;
    return true;
}

std::vector<Rational> IdealFilling::flat() const {
    std::vector<Rational> v;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j) v.push_back((*this)(i, j));
    return v;
}

IdealFilling IdealFilling::from_flat(int n, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != n * (n - 1) / 2) throw DimensionMismatch("filling needs n(n-1)/2 entries");
    IdealFilling f(n);
    std::size_t k = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) f(i, j) = v[k++];
    return f;
}

std::string IdealFilling::pretty() const {
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(n_));
    std::size_t w = 1;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j) w = std::max(w, (*this)(i, j).str().size());
    std::ostringstream os;
    for (int i = 1; i < n_; ++i) {
        os << std::string((static_cast<std::size_t>(i) - 1) * (w + 3), ' ');
        for (int j = i + 1; j <= n_; ++j) {
            std::string s = (*this)(i, j).str();
            os << "[" << std::string(w - s.size(), ' ') << s << "]" << (j < n_ ? " " : "");
        }
        os << "\n";
    }
    return os.str();
}

IdealFilling ideal_filling(const Quiver& q, const TropicalPoint& p) {
    IdealFilling f(q.n());
    for (int i = 1; i <= q.n(); ++i)
        for (int j = i + 1; j <= q.n(); ++j) f(i, j) = p.pi(q, q.vertex(j, i));
    return f;
}

IdealFilling ideal_filling(const DominantWeight& lambda) {
    Quiver q = build_quiver(lambda.n());
    return ideal_filling(q, solve_tropical(q, lambda));
}

TropicalPoint filling_to_tropical(const IdealFilling& f) {
    if (!f.is_ideal()) throw NotIdeal("filling is not ideal");
    const int n = f.n();
    Quiver q = build_quiver(n);
    std::vector<Rational> delta(q.vertices().size());
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            Rational h, v;
            for (int k = j + 1; k <= n; ++k) h += f(i, k);
            for (int k = 1; k < i; ++k) v += f(k, j);
            delta[static_cast<std::size_t>(q.vertex(j, i))] = h - v;
        }
    return point_from_delta(q, std::move(delta));
}

DominantWeight filling_weight(const IdealFilling& f) {
    std::vector<Rational> lift(static_cast<std::size_t>(f.n()));
    for (int i = 1; i <= f.n(); ++i)
        for (int j = i + 1; j <= f.n(); ++j) {
            lift[static_cast<std::size_t>(i - 1)] += f(i, j);
            lift[static_cast<std::size_t>(j - 1)] -= f(i, j);
        }
    return DominantWeight(f.n(), std::move(lift));
}

ChainDecomposition chain_decomposition(const IdealFilling& f) {
    const int n = f.n();
    ChainDecomposition chain;
    std::vector<int> I;
    for (int i = 1; i < n; ++i) I.push_back(i);
    Rational prev(0);
    while (!I.empty()) {
        Rational m = f(I[0], I[0] + 1);
        for (int i : I) m = std::min(m, f(i, i + 1));
        if (m != prev) chain.push_back({parabolic_from_complement(n, I), m - prev});
        prev = m;
        std::vector<int> next;
        for (int i : I)
            if (f(i, i + 1) > m) next.push_back(i);
        I = std::move(next);
    }
    std::vector<Rational> sum(static_cast<std::size_t>(n));
    for (const auto& t : chain) {
        auto lp = lambda_P(t.P);
        for (int k = 0; k < n; ++k) sum[static_cast<std::size_t>(k)] += t.coefficient * lp[static_cast<std::size_t>(k)];
    }
    if (!DominantWeight(n, sum).same_weight(filling_weight(f)))
        throw InternalError("chain does not reconstruct the weight");
    return chain;
}

ChainDecomposition chain_decomposition(const DominantWeight& lambda) {
    return chain_decomposition(ideal_filling(lambda));
}

bool is_integral(const DominantWeight& lambda) { return ideal_filling(lambda).is_integral(); }

std::vector<DyckPath> dyck_paths(int n) {
    std::vector<DyckPath> out;
    DyckPath cur;
    auto rec = [&](auto&& self, PosRoot r) -> void {
        cur.push_back(r);
        if (r.j == r.i + 1) out.push_back(cur);
        if (r.i + 1 < r.j) self(self, PosRoot{r.i + 1, r.j});
        if (r.j + 1 <= n) self(self, PosRoot{r.i, r.j + 1});
        cur.pop_back();
    };
    for (int p = 1; p < n; ++p) rec(rec, PosRoot{p, p + 1});
    return out;
}

FflReport ffl_check(const DominantWeight& lambda, const std::vector<Rational>& point) {
    const int n = lambda.n();
    IdealFilling f = IdealFilling::from_flat(n, point);
    auto m = lambda.fundamental();
    FflReport rep;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (f(i, j).sign() < 0) {
                rep.inside = false;
                rep.violations.push_back("n_" + std::to_string(i) + std::to_string(j) + " < 0");
            }
    for (const auto& path : dyck_paths(n)) {
        Rational lhs, rhs;
        for (const auto& r : path) lhs += f(r.i, r.j);
        for (int k = path.front().i; k <= path.back().i; ++k) rhs += m[static_cast<std::size_t>(k - 1)];
        if (lhs > rhs) {
            rep.inside = false;
            std::string s;
            for (const auto& r : path) s += (s.empty() ? "" : ",") + std::to_string(r.i) + std::to_string(r.j);
            rep.violations.push_back("path (" + s + "): " + lhs.str() + " > " + rhs.str());
        }
    }
    return rep;
}

} // namespace tropcrit
