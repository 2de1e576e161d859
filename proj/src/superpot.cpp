#include "tropcrit/superpot.hpp"

#include "tropcrit/errors.hpp"
#include "tropcrit/tropsolve.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

namespace tropcrit {

namespace {

constexpr std::size_t kMaxTerms = 20000;

void require_word(int n, const ReducedWord& word) {
    if (n < 2) throw DimensionMismatch("rank must be at least 2");
    if (!is_reduced_word_of(word, longest_element(n)))
        throw InvalidWord(word_str(word) + " is not a reduced word for w0 in S_" + std::to_string(n));
}

void require_symbolic(int n) {
    if (n > kSymbolicBound)
        throw RankTooLarge("symbolic pipeline is limited to n <= " + std::to_string(kSymbolicBound));
}

void check_size(const RatFunc& f, const char* what) {
    if (f.num().size() + f.den().size() > kMaxTerms) throw SymbolicBlowup(std::string(what) + ": expression too large");
}

std::vector<RatFunc> named_variables(const std::vector<std::string>& names) {
    std::vector<RatFunc> out;
    for (const auto& s : names) out.push_back(RatFunc::variable(names, s));
    return out;
}

// Coefficients agree on the common grid up to the smaller retained precision.
bool series_close(const PuiseuxSeries& a, const PuiseuxSeries& b, double tol) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.leading_exponent() != b.leading_exponent()) return false;
    int M = std::lcm(a.grid(), b.grid());
    auto pa = a.precision(), pb = b.precision();
    Rational lead = a.leading_exponent();
    Rational cap;
    if (pa && pb) cap = std::min(*pa, *pb);
    else if (pa) cap = *pa;
    else if (pb) cap = *pb;
    else cap = lead + Rational(std::max(a.order(), b.order()) + 1, 1);
    double scale = std::max(std::abs(a.leading_coefficient()), std::abs(b.leading_coefficient()));
    for (Rational e = lead; e < cap; e += Rational(1, M))
        if (std::abs(a.coefficient_at(e) - b.coefficient_at(e)) > tol * scale) return false;
    return true;
}

} // namespace

std::vector<int> theta_word_arrows(const Quiver& q) {
    std::vector<int> out;
    int n = q.n();
    for (int j = 1; j < n; ++j)
        for (int m = 1; m <= n - j; ++m) out.push_back(q.vertical_into(n - m, j));
    return out;
}

std::vector<RatFunc> vertex_variables(const Quiver& q) { return named_variables(q.vertex_names()); }
std::vector<RatFunc> arrow_variables(const Quiver& q) { return named_variables(q.arrow_labels()); }

ChartSuperpotential superpotential_chart(int n, const ReducedWord& word) {
    require_word(n, word);
    ChartSuperpotential out{n, word, {}, {}};
    std::size_t N = word.size();
    for (std::size_t k = 1; k <= N; ++k) out.variables.push_back("z" + std::to_string(k));
    for (int i = 1; i <= n; ++i) out.variables.push_back("q" + std::to_string(i));
    auto vars = named_variables(out.variables);
    std::vector<RatFunc> z(vars.begin(), vars.begin() + static_cast<long>(N));
    auto q = [&](int i) { return vars[N + static_cast<std::size_t>(i - 1)]; };

    RatFunc W = chi(twist(x_minus_word(static_cast<std::size_t>(n), word, z)));
    for (std::size_t k = 0; k < N; ++k) {
        int ik = word[k];
        RatFunc term = q(ik) / (q(ik + 1) * z[k]);
        for (std::size_t j = k + 1; j < N; ++j) term = term * z[j].pow(-cartan(word[j], ik));
        W = W + term;
    }
    check_size(W, "superpotential");
    out.W = W;
    return out;
}

RatFunc superpotential_chart_matrix(int n, const ReducedWord& word) {
    require_word(n, word);
    std::vector<std::string> names;
    std::size_t N = word.size();
    for (std::size_t k = 1; k <= N; ++k) names.push_back("z" + std::to_string(k));
    for (int i = 1; i <= n; ++i) names.push_back("q" + std::to_string(i));
    auto vars = named_variables(names);
    std::vector<RatFunc> z(vars.begin(), vars.begin() + static_cast<long>(N));
    std::vector<RatFunc> q(vars.begin() + static_cast<long>(N), vars.end());
    return superpotential_matrix(chart_x_minus(word, q, z));
}

Rational AffineForm::eval(const std::vector<Rational>& point, const DominantWeight& lam) const {
    if (point.size() != c.size() || lam.n() != static_cast<int>(lambda.size()))
        throw DimensionMismatch("affine form evaluation");
    Rational s;
    for (std::size_t k = 0; k < c.size(); ++k) s += Rational(c[k]) * point[k];
    for (std::size_t i = 0; i < lambda.size(); ++i) s += Rational(lambda[i]) * lam[i];
    return s;
}

std::string AffineForm::str() const {
    std::ostringstream os;
    bool first = true;
    auto put = [&](long k, const std::string& name) {
        if (k == 0) return;
        if (first) os << (k < 0 ? "-" : "");
        else os << (k < 0 ? " - " : " + ");
        long a = k < 0 ? -k : k;
        if (a != 1) os << a;
        os << name;
        first = false;
    };
    for (std::size_t i = 0; i < lambda.size(); ++i) put(lambda[i], "l" + std::to_string(i + 1));
    for (std::size_t k = 0; k < c.size(); ++k) put(c[k], "c" + std::to_string(k + 1));
    if (first) os << "0";
    return os.str();
}

namespace {

std::vector<AffineForm> tropical_forms(int n, const ReducedWord& word) {
    auto W = superpotential_chart(n, word);
    std::size_t N = word.size();
    std::vector<AffineForm> forms;
    for (const auto& t : ratfunc_expand_positive(W.W)) {
        AffineForm f;
        for (std::size_t k = 0; k < N; ++k) f.c.push_back(t.exponent[k]);
        for (int i = 0; i < n; ++i) f.lambda.push_back(t.exponent[N + static_cast<std::size_t>(i)]);
        forms.push_back(std::move(f));
    }
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    return forms;
}

} // namespace

std::vector<AffineForm> superpotential_tropical(int n, const ReducedWord& word) {
    require_word(n, word);
    static std::shared_mutex mu;
    static std::map<std::pair<int, ReducedWord>, std::vector<AffineForm>> cache;
    auto key = std::make_pair(n, word);
    {
        std::shared_lock lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto forms = tropical_forms(n, word);
    std::unique_lock lock(mu);
    return cache.emplace(key, std::move(forms)).first->second;
}

std::vector<Rational> ChartTransition::tropical_z(const std::vector<Rational>& sigma) const {
    if (sigma.size() != variables.size()) throw DimensionMismatch("arrow valuation vector");
    std::vector<Rational> out;
    for (const auto& f : z) out.push_back(f.tropicalize(sigma));
    return out;
}

std::vector<double> ChartTransition::evaluate_z(const std::vector<double>& arrows) const {
    if (arrows.size() != variables.size()) throw DimensionMismatch("arrow value vector");
    std::vector<double> out;
    for (const auto& f : z) out.push_back(f.evaluate(arrows));
    return out;
}

namespace {

ChartTransition build_transition(int n, const ReducedWord& word) {
    auto quiver = build_quiver(n);
    ChartTransition t{n, word, quiver.arrow_labels(), {}, {}};
    auto av = arrow_variables(quiver);
    std::vector<RatFunc> params;
    for (int a : theta_word_arrows(quiver)) params.push_back(av[static_cast<std::size_t>(a)]);
    auto u1 = x_word(static_cast<std::size_t>(n), standard_word(n), params);
    t.z = peel(inverse_twist(u1), word);
    RatFunc acc = RatFunc::constant(t.variables, 1);
    t.q.assign(static_cast<std::size_t>(n), acc);
    for (int i = n - 1; i >= 1; --i) {
        acc = acc * av[static_cast<std::size_t>(quiver.horizontal_into(i + 1, i))] *
              av[static_cast<std::size_t>(quiver.vertical_into(i, i))];
        t.q[static_cast<std::size_t>(i - 1)] = acc;
    }
    for (const auto& f : t.z) {
        check_size(f, "chart transition");
        if (!f.is_subtraction_free())
            throw NotSubtractionFree("transition to chart " + word_str(word) + " has coordinate " + f.str());
    }
    return t;
}

} // namespace

std::shared_ptr<const ChartTransition> chart_transition_symbolic(int n, const ReducedWord& word) {
    require_word(n, word);
    require_symbolic(n);
    static std::shared_mutex mu;
    static std::map<std::pair<int, ReducedWord>, std::shared_ptr<const ChartTransition>> cache;
    auto key = std::make_pair(n, word);
    {
        std::shared_lock lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto t = std::make_shared<const ChartTransition>(build_transition(n, word));
    std::unique_lock lock(mu);
    return cache.emplace(key, t).first->second;
}

std::vector<Rational> nu_vee(const DominantWeight& lambda, const ReducedWord& word) {
    require_word(lambda.n(), word);
    auto trop = solve_tropical(lambda);
    return chart_transition_symbolic(lambda.n(), word)->tropical_z(trop.sigma);
}

ChartPoint<double> chart_invert(const ReducedWord& word, const Matrix<double>& b, double tol) {
    require_word(static_cast<int>(b.rows()), word);
    auto cp = chart_invert_matrix(word, b);
    auto back = chart_x_minus(word, cp.q, cp.z);
    double scale = 0, err = 0;
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            scale = std::max(scale, std::abs(b(i, j)));
            err = std::max(err, std::abs(back(i, j) - b(i, j)));
        }
    if (err > tol * std::max(1.0, scale)) throw PrecisionExhausted("chart_invert: forward re-evaluation differs by " + std::to_string(err));
    return cp;
}

ChartPoint<PuiseuxSeries> chart_invert(const ReducedWord& word, const Matrix<PuiseuxSeries>& b) {
    require_word(static_cast<int>(b.rows()), word);
    auto cp = chart_invert_matrix(word, b);
    for (const auto& z : cp.z)
        if (z.is_zero() || !z.is_positive()) throw PrecisionExhausted("chart_invert: coordinate lost its leading term");
    auto back = chart_x_minus(word, cp.q, cp.z);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!series_close(back(i, j), b(i, j), 1e-6))
                throw PrecisionExhausted("chart_invert: forward re-evaluation differs at entry (" + std::to_string(i + 1) +
                                         "," + std::to_string(j + 1) + ")");
    return cp;
}

NumericNuVee nu_vee_numeric(const DominantWeight& lambda, const ReducedWord& word, int K0, int Kmax) {
    require_word(lambda.n(), word);
    std::string last;
    for (int K = std::max(1, K0); K <= Kmax; K *= 2) {
        try {
            auto e = expand_critical_point<double>(lambda, K);
            std::vector<PuiseuxSeries> xs;
            for (std::size_t v = 0; v < e.quiver.vertices().size(); ++v) xs.push_back(e.vertex_series(static_cast<int>(v)));
            auto cp = chart_invert(word, theta_M(e.quiver, xs));
            NumericNuVee out;
            out.K = K;
            for (const auto& z : cp.z) out.point.push_back(z.leading_exponent());
            return out;
        } catch (const PrecisionExhausted& ex) {
            last = ex.what();
        } catch (const NotInBigCell& ex) {
            last = ex.what();
        }
    }
    throw PrecisionExhausted("nu_vee_numeric: truncation cap " + std::to_string(Kmax) + " reached (" + last + ")");
}

} // namespace tropcrit
