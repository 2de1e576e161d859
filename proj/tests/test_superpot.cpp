#include "doctest.h"
#include "gen.hpp"

#include "tropcrit/errors.hpp"
#include "tropcrit/superpot.hpp"
#include "tropcrit/tropsolve.hpp"

#include <cmath>
#include <set>

using namespace tropcrit;

namespace {

struct Sym3 {
    Quiver q = build_quiver(3);
    std::vector<RatFunc> x = vertex_variables(q);
    std::vector<RatFunc> z = arrows_from_vertices(q, x);
    RatFunc operator[](const char* l) const { return z[static_cast<std::size_t>(q.arrow_by_label(l))]; }
};

RatFunc one_like(const RatFunc& f) { return RatFunc::constant(f.variables(), 1); }

Matrix<double> random_lower(gen::Gen& g, std::size_t n) {
    Matrix<double> b(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) b(i, j) = g.real(0.5, 2.0);
    return b;
}

double max_diff(const Matrix<double>& a, const Matrix<double>& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

std::vector<Rational> R(std::initializer_list<Rational> xs) { return xs; }

} // namespace

TEST_SUITE("superpot") {

TEST_CASE("w0bar and elementary matrices") {
    auto w = w0_bar<double>(3, 0.0);
    // antidiagonal signed permutation
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK((std::abs(w(i, j)) == 1.0) == (i + j == 2));
    auto s = s_dot<double>(2, 1, 0.0);
    CHECK(s(0, 1) == -1.0);
    CHECK(s(1, 0) == 1.0);
    auto xm = x_minus<double>(3, 2, 4.0);
    auto back = y_elem<double>(3, 2, 4.0) * diagonal<double>({1.0, 0.25, 4.0});
    CHECK(max_diff(xm, back) < 1e-15);
}

TEST_CASE("theta_M n=3 matches the displayed chart") {
    Sym3 s;
    auto th = theta_M(s.q, s.x);
    auto a = s["a"], b = s["b"], c = s["c"], d = s["d"], e = s["e"], f = s["f"];
    auto one = one_like(a);
    CHECK(th(0, 0) == one / (e * f));
    CHECK(th(1, 0) == one / (c * d * f));
    CHECK(th(1, 1) == one / (b * f));
    CHECK(th(2, 0) == one / (a * c * d * f));
    CHECK(th(2, 1) == (b + d) / (a * b * d * f));
    CHECK(th(2, 2) == one / (a * d));
    CHECK(th(0, 1).is_zero());
    CHECK(th(0, 2).is_zero());
    CHECK(th(1, 2).is_zero());
    // chart readouts
    auto r = hw_W_wt(s.q, s.x);
    CHECK(r.hw[0] == a * c * d * f);
    CHECK(r.hw[1] == d * f);
    CHECK(r.hw[2] == one);
    CHECK(r.W == a + b + c + d + e + f);
    CHECK(r.wt[0] == a * d);
    CHECK(r.wt[1] == b * f);
    CHECK(r.wt[2] == f * e);
    // matrix readouts agree
    auto m = hw_W_wt(th);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(m.hw[i] == r.hw[i]);
        CHECK(m.wt[i] == r.wt[i]);
    }
    CHECK(m.W == r.W);
}

TEST_CASE("theta_M n=2 and the SL2 factorization") {
    auto q = build_quiver(2);
    auto x = vertex_variables(q);
    auto th = theta_M(q, x);
    auto z = arrows_from_vertices(q, x)[static_cast<std::size_t>(q.vertical_into(1, 1))];
    auto Q = x[static_cast<std::size_t>(q.star(1))] / x[static_cast<std::size_t>(q.star(2))];
    auto one = one_like(z);
    CHECK(th(0, 0) == z / Q);
    CHECK(th(0, 1).is_zero());
    CHECK(th(1, 0) == one / Q);
    CHECK(th(1, 1) == one / z);
    auto g = gauss_factorize(th);
    CHECK(g.u1(0, 1) == z);
    CHECK(g.u2(0, 1) == Q / z);
    CHECK(g.q[0] == Q);
    CHECK(g.q[1] == one);
}

TEST_CASE("hw and W of theta_M are kappa and F (n=3,4)") {
    for (int n : {3, 4}) {
        auto q = build_quiver(n);
        auto x = vertex_variables(q);
        auto th = theta_M(q, x);
        auto m = hw_W_wt(th);
        auto r = hw_W_wt(q, x);
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
            CHECK(m.hw[i] == r.hw[i]);
            CHECK(m.wt[i] == r.wt[i]);
        }
        CHECK(m.W == r.W);
    }
}

TEST_CASE("hw and W closed forms for n=3 lower-triangular matrices") {
    gen::Gen g(51);
    for (int rep = 0; rep < 200; ++rep) {
        auto b = random_lower(g, 3);
        double b1 = b(0, 0), b2 = b(1, 0), b3 = b(1, 1), b4 = b(2, 0), b5 = b(2, 1), b6 = b(2, 2);
        double det2 = b2 * b5 - b3 * b4;
        if (std::abs(det2) < 1e-3) continue;
        auto r = hw_W_wt(b);
        CHECK(r.hw[0] == doctest::Approx(1 / b4));
        CHECK(r.hw[1] == doctest::Approx(b4 / det2));
        CHECK(r.hw[2] == doctest::Approx(det2 / (b1 * b3 * b6)));
        CHECK(r.W == doctest::Approx((b2 + b5) / b4 + (b1 * b5 + b2 * b6) / det2));
        auto f = gauss_factorize(b);
        std::vector<double> qi;
        for (double v : f.q) qi.push_back(1 / v);
        CHECK(max_diff(f.u1 * w0_bar(3, 0.0) * diagonal(qi) * f.u2, b) < 1e-10);
        CHECK(f.u1.is_upper_triangular());
        CHECK(f.u2.is_upper_triangular());
    }
}

TEST_CASE("gauss factorization of w0bar") {
    for (std::size_t n = 2; n <= 5; ++n) {
        auto f = gauss_factorize(w0_bar(n, Rational(0)));
        auto I = Matrix<Rational>::identity(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(f.q[i] == 1);
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(f.u1(i, j) == I(i, j));
                CHECK(f.u2(i, j) == I(i, j));
            }
        }
    }
}

TEST_CASE("twist of x_{-212}") {
    std::vector<std::string> names{"z1", "z2", "z3"};
    std::vector<RatFunc> z;
    for (const auto& s : names) z.push_back(RatFunc::variable(names, s));
    auto u = twist(x_minus_word(3, {2, 1, 2}, z));
    auto one = one_like(z[0]);
    CHECK(u(0, 1) == z[2]);
    CHECK(u(0, 2) == z[1]);
    CHECK(u(1, 2) == z[0] + z[1] / z[2]);
    CHECK(u(1, 0).is_zero());
    CHECK(u(0, 0) == one);
    // entries subtraction-free
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(u(i, j).is_subtraction_free());
    // inverse twist recovers a matrix peeling back to z
    auto c = inverse_twist(u);
    CHECK(c.is_lower_triangular());
    auto zz = peel(c, {2, 1, 2});
    for (std::size_t k = 0; k < 3; ++k) CHECK(zz[k] == z[k]);
}

TEST_CASE("twist round trips on numerics") {
    gen::Gen g(52);
    for (int rep = 0; rep < 200; ++rep) {
        int n = g.uniform(2, 5);
        auto words = reduced_words(n);
        auto w = words[static_cast<std::size_t>(g.uniform(0, static_cast<int>(words.size()) - 1))];
        std::vector<double> z;
        for (std::size_t k = 0; k < w.size(); ++k) z.push_back(g.real(0.3, 3.0));
        auto c = x_minus_word(static_cast<std::size_t>(n), w, z);
        auto u = twist(c);
        CHECK(u.is_upper_triangular());
        // definitional: [g]_- [g]_0 [g]_+ re-multiplies
        auto G = inverse(w0_bar(static_cast<std::size_t>(n), 0.0) * c.transpose());
        auto f = ldu(G);
        CHECK(max_diff(f.L * f.D * f.U, G) < 1e-9);
        auto c2 = inverse_twist(u);
        CHECK(max_diff(c2, c) < 1e-8);
        auto zz = peel(c2, w);
        for (std::size_t k = 0; k < z.size(); ++k) CHECK(zz[k] == doctest::Approx(z[k]).epsilon(1e-8));
    }
}

TEST_CASE("superpotential in the chart 212") {
    auto W = superpotential_chart(3, {2, 1, 2});
    auto v = [&](const char* s) { return RatFunc::variable(W.variables, s); };
    auto z1 = v("z1"), z2 = v("z2"), z3 = v("z3"), q1 = v("q1"), q2 = v("q2"), q3 = v("q3");
    auto expect = z3 + z1 + z2 / z3 + q1 * z3 / (q2 * z2) + q2 * (z2 + z1 * z3) / (q3 * z1 * z3 * z3);
    CHECK(W.W == expect);
    CHECK(superpotential_chart_matrix(3, {2, 1, 2}) == expect);
    auto W2 = superpotential_chart(2, {1});
    auto z = RatFunc::variable(W2.variables, "z1");
    CHECK(W2.W == z + RatFunc::variable(W2.variables, "q1") / (RatFunc::variable(W2.variables, "q2") * z));
    CHECK(superpotential_chart_matrix(3, {1, 2, 1}) == superpotential_chart(3, {1, 2, 1}).W);
    CHECK_THROWS_AS(superpotential_chart(3, {1, 1, 2}), InvalidWord);
}

TEST_CASE("chart matrix reproduces the superpotential for all n=4 words") {
    for (const auto& w : reduced_words(4)) {
        CAPTURE(word_str(w));
        CHECK(superpotential_chart_matrix(4, w) == superpotential_chart(4, w).W);
    }
}

TEST_CASE("tropical superpotential fixtures") {
    auto f = superpotential_tropical(3, {2, 1, 2});
    std::set<std::string> got;
    for (const auto& a : f) got.insert(a.str());
    std::set<std::string> want{"c3", "c1", "c2 - c3", "l1 - l2 - c2 + c3", "l2 - l3 - c1 + c2 - 2c3", "l2 - l3 - c3"};
    CHECK(got == want);
    auto f2 = superpotential_tropical(2, {1});
    std::set<std::string> got2;
    for (const auto& a : f2) got2.insert(a.str());
    CHECK(got2 == std::set<std::string>{"c1", "l1 - l2 - c1"});
    CHECK(superpotential_tropical(3, {1, 2, 1}).size() == 6);
}

TEST_CASE("chart transition 212") {
    auto t = chart_transition_symbolic(3, {2, 1, 2});
    auto v = [&](const char* s) { return RatFunc::variable(t->variables, s); };
    auto a = v("a"), b = v("b"), c = v("c"), d = v("d"), f = v("f");
    CHECK(t->z[0] == a * d / (b + d));
    CHECK(t->z[1] == a * b);
    CHECK(t->z[2] == b + d);
    CHECK(t->q[0] == a * c * d * f);
    CHECK(t->q[1] == d * f);
    CHECK(t->q[2] == one_like(a));
    // cached
    CHECK(chart_transition_symbolic(3, {2, 1, 2}).get() == t.get());
    auto t2 = chart_transition_symbolic(2, {1});
    CHECK(t2->z[0] == RatFunc::variable(t2->variables, t2->variables[0]));
}

TEST_CASE("transition agrees with numeric inversion of theta_M") {
    gen::Gen g(53);
    int cases = 0;
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : reduced_words(n)) {
            auto t = chart_transition_symbolic(n, w);
            auto q = build_quiver(n);
            int reps = n == 4 ? 8 : 40;
            for (int rep = 0; rep < reps; ++rep) {
                std::vector<double> x;
                for (std::size_t v = 0; v < q.vertices().size(); ++v) x.push_back(g.real(0.3, 3.0));
                auto th = theta_M(q, x);
                auto cp = chart_invert(w, th);
                auto za = t->evaluate_z(arrows_from_vertices(q, x));
                for (std::size_t k = 0; k < za.size(); ++k) CHECK(cp.z[k] == doctest::Approx(za[k]).epsilon(1e-8));
                auto kap = torus_from_vertices(q, x);
                for (std::size_t i = 0; i < kap.size(); ++i) CHECK(cp.q[i] == doctest::Approx(kap[i]).epsilon(1e-8));
                CHECK(max_diff(chart_x_minus(w, cp.q, cp.z), th) < 1e-8);
                ++cases;
            }
        }
    CHECK(cases >= 200);
}

TEST_CASE("chart_invert round trip on random points") {
    gen::Gen g(54);
    for (int rep = 0; rep < 200; ++rep) {
        int n = g.uniform(2, 4);
        auto words = reduced_words(n);
        auto w = words[static_cast<std::size_t>(g.uniform(0, static_cast<int>(words.size()) - 1))];
        std::vector<double> q, z;
        for (int i = 0; i < n; ++i) q.push_back(g.real(0.3, 3.0));
        for (std::size_t k = 0; k < w.size(); ++k) z.push_back(g.real(0.3, 3.0));
        auto cp = chart_invert(w, chart_x_minus(w, q, z));
        for (std::size_t k = 0; k < z.size(); ++k) CHECK(cp.z[k] == doctest::Approx(z[k]).epsilon(1e-8));
        for (int i = 0; i < n; ++i) CHECK(cp.q[static_cast<std::size_t>(i)] == doctest::Approx(q[static_cast<std::size_t>(i)]).epsilon(1e-8));
    }
}

TEST_CASE("nu_vee fixtures") {
    auto lam = DominantWeight::parse("2w1+5w2", 3);
    CHECK(nu_vee(lam, {2, 1, 2}) == R({2, 3, 2}));
    auto num = nu_vee_numeric(lam, {2, 1, 2});
    CHECK(num.point == R({2, 3, 2}));
    for (long l = 0; l <= 5; ++l) {
        DominantWeight w(2, {Rational(l), Rational(0)});
        CHECK(nu_vee(w, {1}) == R({Rational(l, 2)}));
        CHECK(nu_vee_numeric(w, {1}).point == R({Rational(l, 2)}));
    }
    for (const auto& w : reduced_words(3)) {
        auto z = nu_vee(DominantWeight::zero(3), w);
        for (const auto& c : z) CHECK(c.is_zero());
    }
}

TEST_CASE("nu_vee: symbolic and numeric paths agree and land in the polytope") {
    gen::Gen g(55);
    for (int rep = 0; rep < 60; ++rep) {
        int n = g.uniform(2, rep < 40 ? 3 : 4);
        auto lam = g.weight(n, n == 4 ? 2 : 4);
        auto words = reduced_words(n);
        auto w = words[static_cast<std::size_t>(g.uniform(0, static_cast<int>(words.size()) - 1))];
        CAPTURE(lam.str());
        CAPTURE(word_str(w));
        auto a = nu_vee(lam, w);
        auto b = nu_vee_numeric(lam, w);
        CHECK(a == b.point);
        for (const auto& f : superpotential_tropical(n, w)) CHECK(f.eval(a, lam) >= 0);
    }
}

} // TEST_SUITE
