#include "tropcrit/polytope.hpp"

#include "tropcrit/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace tropcrit {

namespace {

struct Row {
    std::vector<Rational> a;
    Rational b;
    std::set<int> origin;
};

// scale so that the first nonzero coefficient has absolute value 1
void normalize(Row& r) {
    for (const auto& x : r.a)
        if (!x.is_zero()) {
            Rational s = x.sign() > 0 ? x : -x;
            for (auto& y : r.a) y = y / s;
            r.b = r.b / s;
            return;
        }
}

// Fourier-Motzkin step removing variable k, with Chernikov's origin bound.
std::vector<Row> eliminate(const std::vector<Row>& rows, std::size_t k, std::size_t eliminated) {
    std::vector<const Row*> pos, neg;
    std::map<std::vector<Rational>, Row> out;
    auto keep = [&](Row r) {
        normalize(r);
        bool trivial = std::all_of(r.a.begin(), r.a.end(), [](const Rational& x) { return x.is_zero(); });
        if (trivial) {
            if (r.b.sign() < 0) throw NoSolution("empty polytope");
            return;
        }
        auto it = out.find(r.a);
        if (it == out.end()) out.emplace(r.a, std::move(r));
        else if (r.b < it->second.b) it->second = std::move(r);
    };
    for (const auto& r : rows) {
        int s = r.a[k].sign();
        if (s > 0) pos.push_back(&r);
        else if (s < 0) neg.push_back(&r);
        else keep(r);
    }
    for (const Row* p : pos)
        for (const Row* q : neg) {
            Row r;
            std::set_union(p->origin.begin(), p->origin.end(), q->origin.begin(), q->origin.end(),
                           std::inserter(r.origin, r.origin.begin()));
            if (r.origin.size() > eliminated + 2) continue;
            Rational mp = -q->a[k], mq = p->a[k];
            r.a.resize(p->a.size());
            for (std::size_t j = 0; j < r.a.size(); ++j) r.a[j] = mp * p->a[j] + mq * q->a[j];
            r.a[k] = Rational(0);
            r.b = mp * p->b + mq * q->b;
            keep(std::move(r));
        }
    std::vector<Row> res;
    for (auto& [key, r] : out) res.push_back(std::move(r));
    return res;
}

} // namespace

std::vector<LatticePoint> lattice_points(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b) {
    if (A.size() != b.size()) throw DimensionMismatch("H-representation rows");
    std::size_t N = A.empty() ? 0 : A[0].size();
    std::vector<Row> rows;
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i].size() != N) throw DimensionMismatch("H-representation columns");
        rows.push_back({A[i], b[i], {static_cast<int>(i)}});
    }
    // proj[k]: system in the first k variables
    std::vector<std::vector<Row>> proj(N + 1);
    try {
        proj[N] = rows;
        for (std::size_t k = N; k-- > 0;) proj[k] = eliminate(proj[k + 1], k, N - 1 - k);
    } catch (const NoSolution&) {
        return {};
    }
    // integer rows: a x <= floor(b) once a is cleared of denominators
    struct IntRow {
        std::vector<long> a;
        long b;
    };
    auto to_int = [](const std::vector<Rational>& a, const Rational& b) {
        mpz_class l = 1;
        for (const auto& x : a) l = lcm(l, x.den());
        IntRow r;
        for (const auto& x : a) r.a.push_back((x * Rational(l)).to_long());
        r.b = (b * Rational(l)).floor().get_si();
        return r;
    };
    std::vector<std::vector<IntRow>> level(N);
    for (std::size_t k = 0; k < N; ++k)
        for (const auto& r : proj[k + 1])
            if (!r.a[k].is_zero()) level[k].push_back(to_int(r.a, r.b));
    std::vector<IntRow> original;
    for (std::size_t i = 0; i < A.size(); ++i) original.push_back(to_int(A[i], b[i]));

    auto floor_div = [](long p, long q) {
        long d = p / q;
        return (p % q != 0 && ((p < 0) != (q < 0))) ? d - 1 : d;
    };
    auto ceil_div = [&](long p, long q) { return -floor_div(-p, q); };

    std::vector<LatticePoint> out;
    LatticePoint x(N, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == N) {
            out.push_back(x);
            return;
        }
        bool has_lo = false, has_hi = false;
        long lo = 0, hi = 0;
        for (const auto& r : level[k]) {
            long rest = r.b;
            for (std::size_t j = 0; j < k; ++j) rest -= r.a[j] * x[j];
            long c = r.a[k];
            if (c > 0) {
                long f = floor_div(rest, c);
                if (!has_hi || f < hi) hi = f;
                has_hi = true;
            } else {
                long f = ceil_div(rest, c);
                if (!has_lo || f > lo) lo = f;
                has_lo = true;
            }
        }
        if (!has_lo || !has_hi) throw InternalError("lattice_points: unbounded coordinate " + std::to_string(k + 1));
        for (long v = lo; v <= hi; ++v) {
            x[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    // original inequalities, as a guard on the projections
    for (const auto& p : out)
        for (const auto& r : original) {
            long s = 0;
            for (std::size_t j = 0; j < N; ++j) s += r.a[j] * p[j];
            if (s > r.b) throw InternalError("lattice_points: projection admitted an outside point");
        }
    return out;
}

bool StringPolytope::contains(const std::vector<Rational>& c) const {
    if (c.size() != dim()) throw DimensionMismatch("point dimension");
    for (const auto& f : forms)
        if (f.eval(c, lambda).sign() < 0) return false;
    return true;
}

StringPolytope string_polytope(const DominantWeight& lambda, const ReducedWord& word) {
    if (!lambda.is_integral()) throw NonIntegralWeight("string polytope needs an integral weight, got " + lambda.str());
    StringPolytope P;
    P.n = lambda.n();
    P.word = word;
    P.lambda = lambda;
    P.forms = superpotential_tropical(P.n, word);
    std::vector<Rational> zero(word.size(), Rational(0));
    for (const auto& f : P.forms) {
        std::vector<Rational> row;
        for (long k : f.c) row.push_back(Rational(-k));
        P.A.push_back(row);
        P.b.push_back(f.eval(zero, lambda));
    }
    P.points = lattice_points(P.A, P.b);
    return P;
}

} // namespace tropcrit
