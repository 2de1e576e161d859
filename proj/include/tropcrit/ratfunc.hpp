#pragma once

#include "tropcrit/laurent.hpp"

#include <string>
#include <vector>

namespace tropcrit {

// Quotient of Laurent polynomials, kept reduced: the denominator is a monic
// polynomial free of monomial factors and coprime to the numerator.
class RatFunc {
public:
    RatFunc() : den_(LaurentPoly::constant({}, 1)) {}
    explicit RatFunc(const LaurentPoly& num);
    RatFunc(const LaurentPoly& num, const LaurentPoly& den);

    static RatFunc constant(const std::vector<std::string>& vars, const Rational& c) {
        return RatFunc(LaurentPoly::constant(vars, c));
    }
    static RatFunc variable(const std::vector<std::string>& vars, const std::string& name) {
        return RatFunc(LaurentPoly::variable(vars, name));
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    const std::vector<std::string>& variables() const { return num_.variables(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_constant(); }
    // Both numerator and denominator carry only positive coefficients.
    bool is_subtraction_free() const;
    LaurentPoly as_laurent() const; // std::domain_error unless is_laurent()

    RatFunc operator-() const;
    RatFunc inverse() const;
    RatFunc derivative(std::size_t v) const;
    RatFunc pow(int e) const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    template <class T, class Conv>
    T evaluate(const std::vector<T>& vals, const T& zero, const T& one, Conv conv) const {
        return num_.evaluate(vals, zero, one, conv) / den_.evaluate(vals, zero, one, conv);
    }
    double evaluate(const std::vector<double>& vals) const;

    // Min-plus evaluation; requires a subtraction-free representative.
    Rational tropicalize(const std::vector<Rational>& w) const;

    std::string str() const;

private:
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

struct PositiveTerm {
    Exponent exponent;
    Rational coefficient;
};

// Monomial list of f; f must reduce to a Laurent polynomial with positive coefficients.
std::vector<PositiveTerm> ratfunc_expand_positive(const RatFunc& f);

} // namespace tropcrit
