#include "doctest.h"
#include "gen.hpp"
#include "oracles.hpp"

#include "tropcrit/errors.hpp"
#include "tropcrit/polytope.hpp"

#include <algorithm>

using namespace tropcrit;

namespace {

std::vector<long> lift(const DominantWeight& w) {
    std::vector<long> out;
    auto c = w.canonical();
    for (int i = 0; i < w.n(); ++i) out.push_back(c[static_cast<std::size_t>(i)].to_long());
    return out;
}

std::vector<Rational> as_rational(const LatticePoint& p) {
    std::vector<Rational> out;
    for (long x : p) out.push_back(Rational(x));
    return out;
}

} // namespace

TEST_SUITE("polytope") {

TEST_CASE("string polytope 212 at rho") {
    auto P = string_polytope(DominantWeight::rho(3), {2, 1, 2});
    CHECK(P.forms.size() == 6);
    std::vector<LatticePoint> want{{0, 0, 0}, {0, 1, 0}, {0, 2, 1}, {0, 1, 1}, {1, 1, 0}, {1, 0, 0}, {1, 2, 1}, {2, 1, 0}};
    std::sort(want.begin(), want.end());
    CHECK(P.points == want);
    CHECK(P.contains({Rational(1), Rational(1), Rational(1, 2)}));
    CHECK_FALSE(P.contains({Rational(3), Rational(0), Rational(0)}));
    CHECK(string_polytope(DominantWeight::rho(3), {1, 2, 1}).points.size() == 8);
    CHECK_THROWS_AS(string_polytope(DominantWeight(2, {Rational(1, 2), Rational(0)}), {1}), NonIntegralWeight);
}

TEST_CASE("zero weight and rank one") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : reduced_words(n)) {
            auto P = string_polytope(DominantWeight::zero(n), w);
            REQUIRE(P.points.size() == 1);
            CHECK(std::all_of(P.points[0].begin(), P.points[0].end(), [](long x) { return x == 0; }));
        }
    for (long l = 0; l <= 6; l += 2) {
        auto P = string_polytope(DominantWeight(2, {Rational(l), Rational(0)}), {1});
        CHECK(P.points.size() == static_cast<std::size_t>(l + 1));
        CHECK(P.points.front() == LatticePoint{0});
        CHECK(P.points.back() == LatticePoint{l});
    }
}

TEST_CASE("lattice points match a brute-force scan") {
    gen::Gen g(61);
    for (int rep = 0; rep < 200; ++rep) {
        int N = g.uniform(1, 3);
        std::vector<std::vector<Rational>> A;
        std::vector<Rational> b;
        // a box keeps it bounded, plus random cuts
        for (int j = 0; j < N; ++j) {
            std::vector<Rational> up(static_cast<std::size_t>(N)), dn(static_cast<std::size_t>(N));
            up[static_cast<std::size_t>(j)] = 1;
            dn[static_cast<std::size_t>(j)] = -1;
            A.push_back(up);
            b.push_back(Rational(g.uniform(0, 5)));
            A.push_back(dn);
            b.push_back(Rational(g.uniform(0, 5)));
        }
        int cuts = g.uniform(0, 4);
        for (int c = 0; c < cuts; ++c) {
            std::vector<Rational> row;
            for (int j = 0; j < N; ++j) row.push_back(Rational(g.uniform(-3, 3)));
            A.push_back(row);
            b.push_back(g.rational(6, 3));
        }
        auto pts = lattice_points(A, b);
        std::vector<LatticePoint> brute;
        LatticePoint x(static_cast<std::size_t>(N));
        std::function<void(int)> rec = [&](int k) {
            if (k == N) {
                for (std::size_t i = 0; i < A.size(); ++i) {
                    Rational s;
                    for (int j = 0; j < N; ++j) s += A[i][static_cast<std::size_t>(j)] * Rational(x[static_cast<std::size_t>(j)]);
                    if (b[i] < s) return;
                }
                brute.push_back(x);
                return;
            }
            for (long v = -6; v <= 6; ++v) {
                x[static_cast<std::size_t>(k)] = v;
                rec(k + 1);
            }
        };
        rec(0);
        CHECK(pts == brute);
    }
}

TEST_CASE("lattice count equals the Weyl dimension") {
    int polytopes = 0;
    for (int n = 2; n <= 4; ++n) {
        auto words = reduced_words(n);
        int maxc = 4;
        std::vector<long> m(static_cast<std::size_t>(n - 1), 0);
        while (true) {
            auto lam = DominantWeight::from_fundamental(n, m);
            long long want = weyl_dim(lam);
            CHECK(want == oracle::gt_count(lift(lam)));
            for (const auto& w : words) {
                CAPTURE(lam.str());
                CAPTURE(word_str(w));
                auto P = string_polytope(lam, w);
                CHECK(static_cast<long long>(P.points.size()) == want);
                ++polytopes;
            }
            std::size_t k = 0;
            while (k < m.size() && m[k] == maxc) m[k++] = 0;
            if (k == m.size()) break;
            ++m[k];
        }
    }
    CHECK(polytopes >= 200);
}

TEST_CASE("nu_vee lies in the string polytope") {
    gen::Gen g(62);
    for (int rep = 0; rep < 200; ++rep) {
        int n = g.uniform(2, 4);
        auto lam = g.weight(n, n == 4 ? 3 : 6);
        auto words = reduced_words(n);
        auto w = words[static_cast<std::size_t>(g.uniform(0, static_cast<int>(words.size()) - 1))];
        auto nv = nu_vee(lam, w);
        auto P = string_polytope(lam, w);
        CHECK(P.contains(nv));
        bool integral = std::all_of(nv.begin(), nv.end(), [](const Rational& r) { return r.is_integer(); });
        CHECK(integral == is_integral(lam));
        if (integral) {
            LatticePoint p;
            for (const auto& r : nv) p.push_back(r.to_long());
            CHECK(std::binary_search(P.points.begin(), P.points.end(), p));
        }
        (void)as_rational;
    }
}

} // TEST_SUITE
