// Sparse multivariate Laurent polynomials over Q in named variables. Terms are kept in
// lexicographically decreasing order of exponent vectors, so begin() is the lex-max term for the
// declared variable order.
#pragma once

#include "tropcrit/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tropcrit {

using Exponent = std::vector<int>;

struct LexDesc {
    bool operator()(const Exponent& a, const Exponent& b) const { return b < a; }
};

class LaurentPoly {
public:
    using Terms = std::map<Exponent, Rational, LexDesc>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static LaurentPoly constant(const std::vector<std::string>& vars, const Rational& c);
    static LaurentPoly variable(const std::vector<std::string>& vars, std::size_t idx);
    static LaurentPoly variable(const std::vector<std::string>& vars, const std::string& name);
    static LaurentPoly monomial(const std::vector<std::string>& vars, Exponent e,
                                const Rational& c = Rational(1));

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_polynomial() const;
    bool all_coefficients_positive() const;
    Rational constant_term() const;
    Rational coefficient(const Exponent& e) const;

    const std::pair<const Exponent, Rational>& leading_term() const;
    Exponent min_exponents() const;
    int degree_in(std::size_t v) const;
    int total_degree() const;

    void add_term(const Exponent& e, const Rational& c);

    LaurentPoly shifted(const Exponent& by) const;
    LaurentPoly scaled(const Rational& c) const;
    LaurentPoly derivative(std::size_t v) const;
    LaurentPoly pow(int e) const;
    // Same polynomial written over another variable list containing ours.
    LaurentPoly reembed(const std::vector<std::string>& target) const;
    // Collect by powers of variable v; returned coefficients have v-exponent 0.
    std::map<int, LaurentPoly> collect(std::size_t v) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // min over terms of <e, w>; the tropicalization of a positive polynomial.
    Rational tropical_min(const std::vector<Rational>& w) const;

    template <class T, class Conv>
    T evaluate(const std::vector<T>& vals, const T& zero, const T& one, Conv conv) const {
        T acc = zero;
        for (const auto& [e, c] : terms_) {
            T m = conv(c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                T p = one;
                for (int k = 0; k < (e[i] < 0 ? -e[i] : e[i]); ++k) p = p * vals[i];
                m = e[i] > 0 ? m * p : m / p;
            }
            acc = acc + m;
        }
        return acc;
    }
    double evaluate(const std::vector<double>& vals) const;
    Rational evaluate(const std::vector<Rational>& vals) const;

    std::string str() const;

private:
    void require_same(const LaurentPoly& o) const;

    std::vector<std::string> vars_;
    Terms terms_;
};

// Exact quotient of polynomials (nonnegative exponents); nullopt if b does not divide a.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b);

// Monic gcd of polynomials over Q (recursive primitive remainder sequences).
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Scale so the lex-leading coefficient is 1.
LaurentPoly make_monic(const LaurentPoly& p);

} // namespace tropcrit
