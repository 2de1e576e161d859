#include "doctest.h"
#include "gen.hpp"
#include "oracles.hpp"

#include "tropcrit/errors.hpp"
#include "tropcrit/tropsolve.hpp"

using namespace tropcrit;

namespace {

std::vector<Rational> arrows_af(const Quiver& q, const TropicalPoint& p) {
    std::vector<Rational> out;
    for (const char* l : {"a", "b", "c", "d", "e", "f"}) out.push_back(p.sigma[static_cast<std::size_t>(q.arrow_by_label(l))]);
    return out;
}

std::vector<Rational> R(std::initializer_list<Rational> xs) { return xs; }

} // namespace

TEST_SUITE("tropsolve") {

TEST_CASE("n=3 fixtures") {
    auto q = build_quiver(3);
    auto p = solve_tropical(q, DominantWeight::parse("7,5,0"));
    CHECK(arrows_af(q, p) == R({1, 2, 1, 3, 2, 2}));
    auto p2 = solve_tropical(q, DominantWeight::parse("6,3,-2"));
    CHECK(arrows_af(q, p2) ==
          R({Rational(3, 2), Rational(13, 6), Rational(3, 2), Rational(17, 6), Rational(13, 6), Rational(13, 6)}));
    CHECK(p2.M == 6);
    auto p3 = solve_tropical(q, DominantWeight::parse("3,1,0"));
    CHECK(arrows_af(q, p3) ==
          R({Rational(5, 6), Rational(5, 6), Rational(7, 6), Rational(1, 2), Rational(5, 6), Rational(1, 2)}));
}

TEST_CASE("zero and rank one") {
    for (int n = 2; n <= 5; ++n) {
        auto p = solve_tropical(DominantWeight::zero(n));
        for (const auto& d : p.delta) CHECK(d.is_zero());
        for (const auto& s : p.sigma) CHECK(s.is_zero());
    }
    for (long l = 0; l <= 9; ++l) {
        auto p = solve_tropical(DominantWeight(2, {Rational(l), Rational(0)}));
        for (const auto& s : p.sigma) CHECK(s == Rational(l, 2));
    }
    CHECK_THROWS_AS(DominantWeight(3, {Rational(0), Rational(1), Rational(0)}), NotDominant);
}

TEST_CASE("ideal filling fixtures") {
    auto f = ideal_filling(DominantWeight::parse("6,3,-2"));
    CHECK(f(1, 2) == Rational(3, 2));
    CHECK(f(2, 3) == Rational(13, 6));
    CHECK(f(1, 3) == Rational(13, 6));
    CHECK_FALSE(is_integral(DominantWeight::parse("6,3,-2")));
    auto g = ideal_filling(DominantWeight::rho(3).scaled(2));
    CHECK(g.flat() == R({1, 1, 1}));
    auto h = ideal_filling(DominantWeight::parse("7,5,0"));
    CHECK(h(1, 2) == 1);
    CHECK(h(2, 3) == 2);
    CHECK(h(1, 3) == 2);
    CHECK(is_integral(DominantWeight::rho(3).scaled(2)));
    CHECK_FALSE(is_integral(DominantWeight::parse("3,0")));
    CHECK(is_integral(DominantWeight::parse("4,0")));
}

TEST_CASE("filling to tropical") {
    auto ones = IdealFilling::from_flat(3, R({1, 1, 1}));
    auto t = filling_to_tropical(ones);
    auto q = build_quiver(3);
    CHECK(t.delta[static_cast<std::size_t>(q.star(1))] == 2);
    CHECK(t.delta[static_cast<std::size_t>(q.star(2))] == 0);
    CHECK(t.delta[static_cast<std::size_t>(q.star(3))] == -2);
    auto t2 = filling_to_tropical(ideal_filling(DominantWeight::parse("6,3,-2")));
    CHECK(t2.delta[static_cast<std::size_t>(q.star(1))] == Rational(11, 3));
    CHECK(t2.delta[static_cast<std::size_t>(q.star(2))] == Rational(2, 3));
    CHECK(t2.delta[static_cast<std::size_t>(q.star(3))] == Rational(-13, 3));
    auto bad = IdealFilling::from_flat(3, R({1, 5, 1}));
    CHECK_THROWS_AS(filling_to_tropical(bad), NotIdeal);
}

TEST_CASE("chain decomposition fixtures") {
    auto c = chain_decomposition(DominantWeight::parse("2w1+5w2", 3));
    REQUIRE(c.size() == 2);
    CHECK(c[0].P.I_P.empty());
    CHECK(c[0].coefficient == 1);
    CHECK(c[1].P.I_P == std::vector<int>{1});
    CHECK(c[1].coefficient == 1);
    auto c2 = chain_decomposition(DominantWeight::rho(3).scaled(2));
    REQUIRE(c2.size() == 1);
    CHECK(c2[0].coefficient == 1);
    auto c3 = chain_decomposition(DominantWeight::parse("6,3,-2"));
    REQUIRE(c3.size() == 2);
    CHECK(c3[0].coefficient == Rational(3, 2));
    CHECK(c3[1].P.I_P == std::vector<int>{1});
    CHECK(c3[1].coefficient == Rational(2, 3));
}

TEST_CASE("dyck paths") {
    CHECK(dyck_paths(2).size() == 1);
    auto d3 = dyck_paths(3);
    CHECK(d3.size() == 3);
    CHECK(std::find(d3.begin(), d3.end(), DyckPath{{1, 2}, {1, 3}, {2, 3}}) != d3.end());
    for (int n = 2; n <= 6; ++n)
        for (const auto& p : dyck_paths(n)) {
            CHECK(p.front().j == p.front().i + 1);
            CHECK(p.back().j == p.back().i + 1);
            for (std::size_t k = 1; k < p.size(); ++k) {
                bool step = (p[k].i == p[k - 1].i + 1 && p[k].j == p[k - 1].j) ||
                            (p[k].i == p[k - 1].i && p[k].j == p[k - 1].j + 1);
                CHECK(step);
            }
        }
}

TEST_CASE("ffl membership") {
    auto lam = DominantWeight::parse("7,5,0");
    CHECK(ffl_check(lam, ideal_filling(lam).flat()).inside);
    CHECK(ffl_check(lam, R({0, 0, 0})).inside);
    auto r = ffl_check(DominantWeight::zero(3), R({1, 1, 1}));
    CHECK_FALSE(r.inside);
    CHECK_FALSE(r.violations.empty());
    CHECK_THROWS_AS(ffl_check(lam, R({0, 0})), DimensionMismatch);
}

TEST_CASE("layered solver properties") {
    gen::Gen g(31);
    for (int rep = 0; rep < 250; ++rep) {
        int n = g.uniform(2, 5);
        auto lam = g.weight(n, 6).shifted(Rational(g.uniform(-3, 3)));
        auto q = build_quiver(n);
        auto p = solve_tropical(q, lam);
        CAPTURE(lam.str());
        CHECK(tropical_condition_failures(q, p).empty());
        for (const auto& s : p.sigma) CHECK(s.sign() >= 0);
        for (int i = 1; i <= n; ++i) CHECK(p.delta[static_cast<std::size_t>(q.star(i))] == lam[static_cast<std::size_t>(i - 1)]);
        // weight zero along diagonals
        auto dsum = [&](int k) {
            Rational s;
            if (k > n) return s;
            for (int v : q.diagonal(k)) s += p.delta[static_cast<std::size_t>(v)];
            return s;
        };
        for (int i = 2; i <= n; ++i) CHECK(dsum(i - 1) + dsum(i + 1) == Rational(2) * dsum(i));
        // shift equivariance
        Rational c(g.uniform(-7, 7), g.uniform(1, 3));
        auto ps = solve_tropical(q, lam.shifted(c));
        for (std::size_t v = 0; v < p.delta.size(); ++v) CHECK(ps.delta[v] == p.delta[v] + c);
        // bijection round trips
        auto f = ideal_filling(q, p);
        CHECK(f.is_ideal());
        CHECK(filling_weight(f).same_weight(lam));
        auto back = filling_to_tropical(f);
        Rational shift = back.delta[0] - p.delta[0];
        for (std::size_t v = 0; v < p.delta.size(); ++v) CHECK(back.delta[v] == p.delta[v] + shift);
        CHECK(back.sigma == p.sigma);
        CHECK(ideal_filling(q, back) == f);
        // FFL membership
        CHECK(ffl_check(lam, f.flat()).inside);
        // minimal first-diagonal entries equal half the fundamental coefficient
        auto m = lam.fundamental();
        Rational mn = f(1, 2);
        for (int k = 1; k < n; ++k) mn = std::min(mn, f(k, k + 1));
        for (int k = 1; k < n; ++k)
            if (f(k, k + 1) == mn) CHECK(m[static_cast<std::size_t>(k - 1)] == Rational(2) * f(k, k + 1));
        // integrality through chain coefficients agrees with the filling
        bool chain_int = true;
        for (const auto& t : chain_decomposition(f)) chain_int = chain_int && t.coefficient.is_integer();
        CHECK(chain_int == f.is_integral());
    }
}

TEST_CASE("filling round trip from the filling side") {
    gen::Gen g(32);
    int done = 0;
    while (done < 200) {
        int n = g.uniform(2, 5);
        // random ideal filling: choose the first diagonal, then take maxima
        IdealFilling f(n);
        for (int k = 1; k < n; ++k) f(k, k + 1) = Rational(g.uniform(0, 12), g.uniform(1, 3));
        for (int d = 2; d < n; ++d)
            for (int i = 1; i + d <= n; ++i) f(i, i + d) = std::max(f(i + 1, i + d), f(i, i + d - 1));
        auto t = filling_to_tropical(f);
        auto q = build_quiver(n);
        CHECK(satisfies_tropical_conditions(q, t));
        CHECK(ideal_filling(q, t) == f);
        ++done;
    }
}

TEST_CASE("uniqueness probe on a grid") {
    int lambdas = 0;
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; b <= a; ++b)
            for (long c = 0; c <= b; ++c) {
                std::vector<Rational> lam{Rational(a), Rational(b), Rational(c)};
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(c);
                CHECK(oracle::grid_solutions_n3(lam, 12) == 1);
                ++lambdas;
            }
    CHECK(lambdas == 35);
}

} // TEST_SUITE
