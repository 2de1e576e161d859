#include "tropcrit/sections.hpp"

#include "tropcrit/errors.hpp"
#include "tropcrit/superpot.hpp"
#include "tropcrit/tropsolve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace tropcrit {

namespace {

void require_word(int n, const ReducedWord& word) {
    if (n < 2) throw DimensionMismatch("rank must be at least 2");
    if (!is_reduced_word_of(word, longest_element(n)))
        throw InvalidWord(word_str(word) + " is not a reduced word for w0 in S_" + std::to_string(n));
}

std::vector<RatFunc> variables_of(const std::vector<std::string>& names) {
    std::vector<RatFunc> out;
    for (const auto& s : names) out.push_back(RatFunc::variable(names, s));
    return out;
}

Matrix<RatFunc> y_chart_symbolic(int n, const ReducedWord& word) {
    auto names = y_chart_variables(word.size());
    return y_chart_matrix(n, word, variables_of(names));
}

template <class K, class V, class F>
V cached(std::shared_mutex& mu, std::map<K, V>& cache, const K& key, F make) {
    {
        std::shared_lock lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    V v = make();
    std::unique_lock lock(mu);
    return cache.emplace(key, std::move(v)).first->second;
}

using ChartKey = std::tuple<int, ReducedWord, std::vector<int>>;

ChartKey chart_key(const ReducedWord& word, const ParabolicType& P) { return {P.n, word, P.I_P}; }

RatFunc minor_rf(const Matrix<RatFunc>& h, const std::vector<std::size_t>& rows) {
    std::vector<std::size_t> cols(rows.size());
    for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
    return minor(h, rows, cols);
}

Rational eval_rational(const RatFunc& f, const std::vector<Rational>& x) {
    Rational d = f.den().evaluate(x);
    if (d.is_zero()) throw DivisionByZeroSeries("pole at the sample point");
    return f.num().evaluate(x) / d;
}

std::vector<RatFunc> compute_pi(const ReducedWord& word, const ParabolicType& P) {
    const int n = P.n;
    auto c = parabolic_chart(word, P);
    auto y = y_chart_symbolic(n, word);
    const RatFunc one = field_one(y(0, 0));
    // lift of y(x)P to G/B inside the chart's cell: m w_P
    ReducedWord wp;
    for (int pos : c.J) wp.push_back(word[static_cast<std::size_t>(pos - 1)]);
    auto h = parabolic_m(y, P) * word_s_dot(static_cast<std::size_t>(n), wp, one);

    Perm w = longest_element(n);
    std::vector<RatFunc> u;
    for (std::size_t k = 0; k < word.size(); ++k) {
        int i = word[k];
        int pos = static_cast<int>(k) + 1;
        if (std::find(c.J.begin(), c.J.end(), pos) != c.J.end()) {
            h = s_dot_inverse(static_cast<std::size_t>(n), i, one) * h;
        } else {
            auto at = std::find(w.begin(), w.end(), i + 1);
            std::size_t len = static_cast<std::size_t>(at - w.begin()) + 1;
            std::vector<std::size_t> I, sI;
            for (std::size_t r = 0; r < len; ++r) {
                int v = w[r];
                I.push_back(static_cast<std::size_t>(v - 1));
                int sv = v == i ? i + 1 : v == i + 1 ? i : v;
                sI.push_back(static_cast<std::size_t>(sv - 1));
            }
            std::sort(I.begin(), I.end());
            std::sort(sI.begin(), sI.end());
            RatFunc den = minor_rf(h, sI);
            if (den.is_zero())
                throw FactorizationAmbiguity("pi_P: vanishing pivot minor at position " + std::to_string(pos));
            RatFunc uk = minor_rf(h, I) / den;
            if (uk.num().size() + uk.den().size() > 20000) throw SymbolicBlowup("pi_P: coordinate too large");
            h = y_elem(static_cast<std::size_t>(n), i, -uk) * h;
            u.push_back(uk);
        }
        w = left_mul_simple(w, i);
    }
    if (!h.is_upper_triangular())
        throw FactorizationAmbiguity("pi_P: residual factor is not in B for word " + word_str(word));

    // flags of y(x) and g(pi(x)) agree in G/P at sample points
    for (int trial = 0, ok = 0; ok < 3 && trial < 20; ++trial) {
        std::vector<Rational> x;
        for (std::size_t k = 0; k < word.size(); ++k)
            x.push_back(Rational(static_cast<long>(2 + (trial * 7 + static_cast<int>(k) * 3) % 11),
                                 static_cast<long>(1 + (trial + static_cast<int>(k)) % 4)));
        std::vector<Rational> uv;
        try {
            for (const auto& f : u) uv.push_back(eval_rational(f, x));
        } catch (const DivisionByZeroSeries&) {
            continue;
        }
        auto lhs = parabolic_m(y_chart_matrix(n, word, x), P);
        auto rhs = parabolic_m(parabolic_chart_matrix(c, uv, Rational(0)), P);
        for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r)
            for (std::size_t s = 0; s < static_cast<std::size_t>(n); ++s)
                if (lhs(r, s) != rhs(r, s))
                    throw FactorizationAmbiguity("pi_P: flag check failed for word " + word_str(word));
        ++ok;
    }
    return u;
}

SectionFunction compute_f_P(const ReducedWord& word, const ParabolicType& P) {
    const int n = P.n;
    auto c = parabolic_chart(word, P);
    auto uvars = variables_of(c.variables());
    auto names = c.variables();
    const RatFunc one = RatFunc::constant(names, 1);
    auto g = parabolic_chart_matrix(c, uvars, one);
    auto m = parabolic_m(g, P);
    auto coords = parabolic_m_coordinates(P);
    if (coords.size() != uvars.size()) throw InternalError("chart dimension differs from dim G/P");

    // dim 0 (P = G) has the empty determinant 1
    RatFunc jac = one;
    if (!coords.empty()) {
        Matrix<RatFunc> J(coords.size(), uvars.size(), RatFunc::constant(names, 0));
        for (std::size_t a = 0; a < coords.size(); ++a)
            for (std::size_t b = 0; b < uvars.size(); ++b) J(a, b) = m(coords[a].first, coords[a].second).derivative(b);
        jac = determinant(J);
    }
    RatFunc f = jac;
    for (const auto& v : uvars) f = f * v;
    if (!f.is_laurent() || !f.as_laurent().is_monomial())
        throw LowestWeightAmbiguous("f_P: chart volume is not a single monomial for word " + word_str(word) +
                                    ", P=" + P.str());
    auto [a, coef] = *f.as_laurent().terms().begin();

    // torus weight of the monomial must cancel lambda_P up to the center
    auto chi = chart_torus_weights(word, P);
    auto lp = lambda_P(P);
    std::vector<Rational> wsum(lp.lift());
    for (std::size_t k = 0; k < a.size(); ++k)
        for (int e = 0; e < n; ++e) wsum[static_cast<std::size_t>(e)] += Rational(a[k] * chi[k][static_cast<std::size_t>(e)]);
    if (!std::all_of(wsum.begin(), wsum.end(), [&](const Rational& r) { return r == wsum[0]; }))
        throw NoSolution("f_P: no lowest-weight monomial of weight -lambda_P for word " + word_str(word));

    auto pi = pi_P_in_charts(word, P);
    auto xnames = y_chart_variables(word.size());
    RatFunc out = RatFunc::constant(xnames, coef);
    for (std::size_t k = 0; k < a.size(); ++k) out = out * pi[k].pow(a[k]);
    if (!out.is_laurent() || !out.as_laurent().is_polynomial())
        throw NoSolution("f_P: pullback is not regular on the chart: " + out.str());
    return {n, word, out.as_laurent()};
}

using Column = std::vector<std::size_t>; // 0-based rows, increasing

void tableaux(const std::vector<std::size_t>& heights, std::size_t n, std::vector<Column>& cur,
              const std::function<void(const std::vector<Column>&)>& emit) {
    std::size_t c = cur.size();
    if (c == heights.size()) {
        emit(cur);
        return;
    }
    std::size_t h = heights[c];
    Column col(h);
    std::function<void(std::size_t)> fill = [&](std::size_t r) {
        if (r == h) {
            cur.push_back(col);
            tableaux(heights, n, cur, emit);
            cur.pop_back();
            return;
        }
        std::size_t lo = r == 0 ? 0 : col[r - 1] + 1;
        if (c > 0) lo = std::max(lo, cur[c - 1][r]);
        for (std::size_t v = lo; v + (h - r) <= n; ++v) {
            col[r] = v;
            fill(r + 1);
        }
    };
    fill(0);
}

} // namespace

std::vector<std::string> y_chart_variables(std::size_t N) {
    std::vector<std::string> v;
    for (std::size_t k = 1; k <= N; ++k) v.push_back("x" + std::to_string(k));
    return v;
}

std::vector<LatticePoint> borel_weil_valuations(const DominantWeight& lambda, const ReducedWord& word) {
    const int n = lambda.n();
    require_word(n, word);
    if (!lambda.is_integral()) throw NonIntegralWeight("Borel-Weil needs an integral weight, got " + lambda.str());
    auto y = y_chart_symbolic(n, word);
    auto names = y_chart_variables(word.size());

    std::map<Column, LaurentPoly> minors;
    auto col_minor = [&](const Column& rows) -> const LaurentPoly& {
        auto it = minors.find(rows);
        if (it == minors.end()) it = minors.emplace(rows, minor_rf(y, rows).as_laurent()).first;
        return it->second;
    };

    std::vector<std::size_t> heights;
    auto m = lambda.fundamental();
    for (int k = n - 1; k >= 1; --k)
        for (long c = 0; c < m[static_cast<std::size_t>(k - 1)].to_long(); ++c) heights.push_back(static_cast<std::size_t>(k));

    std::map<Exponent, LaurentPoly, LexDesc> pivots;
    std::vector<Column> cur;
    tableaux(heights, static_cast<std::size_t>(n), cur, [&](const std::vector<Column>& cols) {
        LaurentPoly p = LaurentPoly::constant(names, 1);
        for (const auto& c : cols) p *= col_minor(c);
        while (!p.is_zero()) {
            const auto& [e, coef] = p.leading_term();
            auto it = pivots.find(e);
            if (it == pivots.end()) {
                Exponent key = e;
                pivots.emplace(std::move(key), std::move(p));
                return;
            }
            p -= it->second.scaled(coef / it->second.leading_term().second);
        }
    });
    if (static_cast<long long>(pivots.size()) != weyl_dim(lambda))
        throw InternalError("standard monomials do not span a space of the Weyl dimension");
    std::vector<LatticePoint> out;
    for (const auto& [e, p] : pivots) out.emplace_back(e.begin(), e.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> ParabolicChart::variables() const {
    std::vector<std::string> v;
    for (int k : positions) v.push_back("u" + std::to_string(k));
    return v;
}

ParabolicChart parabolic_chart(const ReducedWord& word, const ParabolicType& P) {
    require_word(P.n, word);
    ParabolicChart c;
    c.n = P.n;
    c.word = word;
    c.P = P;
    c.J = positive_subexpression(word, longest_of_parabolic(P));
    for (int k = 1; k <= static_cast<int>(word.size()); ++k)
        if (std::find(c.J.begin(), c.J.end(), k) == c.J.end()) c.positions.push_back(k);
    return c;
}

std::vector<std::pair<std::size_t, std::size_t>> parabolic_m_coordinates(const ParabolicType& P) {
    std::vector<int> block_of(static_cast<std::size_t>(P.n));
    int b = 0;
    for (auto [lo, hi] : P.blocks()) {
        for (int r = lo; r <= hi; ++r) block_of[static_cast<std::size_t>(r - 1)] = b;
        ++b;
    }
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t col = static_cast<std::size_t>(P.n); col-- > 0;)
        for (std::size_t row = static_cast<std::size_t>(P.n); row-- > 0;)
            if (block_of[row] > block_of[col]) out.emplace_back(row, col);
    return out;
}

std::vector<RatFunc> pi_P_in_charts(const ReducedWord& word, const ParabolicType& P) {
    require_word(P.n, word);
    if (P.n > kSymbolicBound)
        throw RankTooLarge("symbolic pipeline is limited to n <= " + std::to_string(kSymbolicBound));
    static std::shared_mutex mu;
    static std::map<ChartKey, std::vector<RatFunc>> cache;
    return cached(mu, cache, chart_key(word, P), [&] { return compute_pi(word, P); });
}

std::vector<Character> chart_torus_weights(const ReducedWord& word, const ParabolicType& P) {
    auto c = parabolic_chart(word, P);
    Perm p = identity_perm(P.n);
    std::vector<Character> out;
    for (std::size_t k = 0; k < word.size(); ++k) {
        int i = word[k];
        auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(i);
        if (std::find(c.J.begin(), c.J.end(), static_cast<int>(k) + 1) != c.J.end()) {
            std::swap(p[a], p[b]);
        } else {
            Character chi(static_cast<std::size_t>(P.n), 0);
            chi[static_cast<std::size_t>(p[b] - 1)] += 1;
            chi[static_cast<std::size_t>(p[a] - 1)] -= 1;
            out.push_back(chi);
        }
    }
    return out;
}

SectionFunction f_P(const ReducedWord& word, const ParabolicType& P) {
    require_word(P.n, word);
    static std::shared_mutex mu;
    static std::map<ChartKey, SectionFunction> cache;
    return cached(mu, cache, chart_key(word, P), [&] { return compute_f_P(word, P); });
}

SectionFunction omega_inv(const DominantWeight& lambda, const ReducedWord& word) {
    const int n = lambda.n();
    require_word(n, word);
    if (!is_integral(lambda)) throw NotIntegral("weight " + lambda.str() + " has a non-integral ideal filling");
    LaurentPoly f = LaurentPoly::constant(y_chart_variables(word.size()), 1);
    for (const auto& t : chain_decomposition(lambda)) {
        auto fp = f_P(word, t.P).f;
        f *= fp.pow(static_cast<int>(t.coefficient.to_long()));
    }
    return {n, word, f};
}

Exponent nu(const SectionFunction& s) {
    if (s.f.is_zero()) throw ZeroSection("nu of the zero section");
    return s.f.leading_term().first;
}

ConjectureReport conjecture_check(const DominantWeight& lambda, const ReducedWord& word) {
    ConjectureReport r;
    r.lambda = lambda;
    r.word = word;
    r.omega = omega_inv(lambda, word);
    r.nu = nu(r.omega);
    r.nu_vee = nu_vee(lambda, word);
    r.equal = r.nu.size() == r.nu_vee.size() &&
              std::equal(r.nu.begin(), r.nu.end(), r.nu_vee.begin(), [](int a, const Rational& b) { return Rational(a) == b; });
    return r;
}

} // namespace tropcrit
