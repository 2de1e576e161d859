#include "tropcrit/ratfunc.hpp"

#include "tropcrit/errors.hpp"

#include <stdexcept>

namespace tropcrit {

RatFunc::RatFunc(const LaurentPoly& num)
    : num_(num), den_(LaurentPoly::constant(num.variables(), 1)) {}

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.variables() != den_.variables()) throw std::invalid_argument("RatFunc: variable lists differ");
    normalize();
}

void RatFunc::normalize() {
    const auto& vars = den_.variables();
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(vars, 1);
        return;
    }
    // Move the monomial part of the denominator into the numerator.
    Exponent md = den_.min_exponents();
    Exponent neg = md;
    for (int& x : neg) x = -x;
    den_ = den_.shifted(neg);
    num_ = num_.shifted(neg);
    if (!den_.is_constant()) {
        LaurentPoly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            auto qn = exact_divide(num_, g);
            auto qd = exact_divide(den_, g);
            if (!qn || !qd) throw std::logic_error("RatFunc: gcd does not divide");
            num_ = *qn;
            den_ = *qd;
            // exact_divide can leave a monomial factor in the denominator.
            Exponent m2 = den_.min_exponents();
            for (int& x : m2) x = -x;
            den_ = den_.shifted(m2);
            num_ = num_.shifted(m2);
        }
    }
    Rational lc = den_.leading_term().second;
    if (lc != Rational(1)) {
        Rational inv = Rational(1) / lc;
        den_ = den_.scaled(inv);
        num_ = num_.scaled(inv);
    }
}

bool RatFunc::is_subtraction_free() const {
    return num_.all_coefficients_positive() && den_.all_coefficients_positive();
}

LaurentPoly RatFunc::as_laurent() const {
    if (!is_laurent()) throw std::domain_error("RatFunc::as_laurent: denominator " + den_.str());
    return num_.scaled(Rational(1) / den_.constant_term());
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    if (a.den_.is_constant() && b.den_.is_constant()) {
        RatFunc r;
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_;
        return r;
    }
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::derivative(std::size_t v) const {
    LaurentPoly n = num_.derivative(v) * den_ - num_ * den_.derivative(v);
    return RatFunc(n, den_ * den_);
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r(num_.pow(e), den_.pow(e));
    return r;
}

double RatFunc::evaluate(const std::vector<double>& vals) const {
    return num_.evaluate(vals) / den_.evaluate(vals);
}

Rational RatFunc::tropicalize(const std::vector<Rational>& w) const {
    if (!is_subtraction_free())
        throw NotSubtractionFree("tropicalize: negative coefficient in " + str());
    return num_.tropical_min(w) - den_.tropical_min(w);
}

std::string RatFunc::str() const {
    if (den_.is_constant()) return num_.scaled(Rational(1) / den_.constant_term()).str();
    std::string n = num_.size() > 1 ? "(" + num_.str() + ")" : num_.str();
    return n + "/(" + den_.str() + ")";
}

std::vector<PositiveTerm> ratfunc_expand_positive(const RatFunc& f) {
    if (!f.is_laurent()) throw NotSubtractionFree("non-monomial denominator " + f.den().str());
    LaurentPoly p = f.as_laurent();
    if (!p.all_coefficients_positive()) throw NotSubtractionFree("negative coefficient in " + p.str());
    std::vector<PositiveTerm> out;
    for (const auto& [e, c] : p.terms()) out.push_back({e, c});
    return out;
}

} // namespace tropcrit
