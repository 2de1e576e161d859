#include "tropcrit/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace tropcrit {

Rational::Rational(long p, long q) {
    if (q == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(p, q);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (c != ' ') s += c;
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty");
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string p = s.substr(0, slash);
    std::string q = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(p) || !valid_int(q)) throw std::invalid_argument("Rational::parse: '" + raw + "'");
    if (p[0] == '+') p = p.substr(1);
    if (q[0] == '+') q = q.substr(1);
    mpz_class zp(p), zq(q);
    if (zq == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    mpq_class v(zp, zq);
    v.canonicalize();
    return Rational(v);
}

long double Rational::to_long_double() const {
    return std::stold(v_.get_num().get_str()) / std::stold(v_.get_den().get_str());
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw std::domain_error("Rational::to_long: " + str());
    return v_.get_num().get_si();
}

mpz_class Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return r;
}

mpz_class Rational::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::size_t Rational::hash() const {
    std::hash<std::string> h;
    return h(str());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, int e) {
    Rational b = e < 0 ? Rational(1) / base : base;
    unsigned k = e < 0 ? static_cast<unsigned>(-e) : static_cast<unsigned>(e);
    Rational r(1);
    while (k) {
        if (k & 1u) r *= b;
        b *= b;
        k >>= 1u;
    }
    return r;
}

mpz_class lcm_den(const mpz_class& a, const Rational& r) {
    mpz_class out;
    mpz_class d = r.den();
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return out;
}

} // namespace tropcrit
