#include "tropcrit/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tropcrit {

LaurentPoly LaurentPoly::constant(const std::vector<std::string>& vars, const Rational& c) {
    LaurentPoly p(vars);
    p.add_term(Exponent(vars.size(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(const std::vector<std::string>& vars, std::size_t idx) {
    if (idx >= vars.size()) throw std::out_of_range("LaurentPoly::variable");
    Exponent e(vars.size(), 0);
    e[idx] = 1;
    return monomial(vars, e);
}

LaurentPoly LaurentPoly::variable(const std::vector<std::string>& vars, const std::string& name) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw std::invalid_argument("unknown variable " + name);
    return variable(vars, static_cast<std::size_t>(it - vars.begin()));
}

LaurentPoly LaurentPoly::monomial(const std::vector<std::string>& vars, Exponent e, const Rational& c) {
    if (e.size() != vars.size()) throw std::invalid_argument("LaurentPoly::monomial: exponent length");
    LaurentPoly p(vars);
    p.add_term(e, c);
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool LaurentPoly::is_polynomial() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return false;
    return true;
}

bool LaurentPoly::all_coefficients_positive() const {
    for (const auto& [e, c] : terms_)
        if (c.sign() <= 0) return false;
    return true;
}

Rational LaurentPoly::constant_term() const { return coefficient(Exponent(vars_.size(), 0)); }

Rational LaurentPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Exponent, Rational>& LaurentPoly::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading_term of zero polynomial");
    return *terms_.begin();
}

Exponent LaurentPoly::min_exponents() const {
    Exponent m(vars_.size(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (std::size_t i = 0; i < e.size(); ++i) m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

int LaurentPoly::degree_in(std::size_t v) const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        d = first ? e[v] : std::max(d, e[v]);
        first = false;
    }
    return d;
}

int LaurentPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
    if (c.is_zero()) return;
    if (e.size() != vars_.size()) throw std::invalid_argument("LaurentPoly::add_term: exponent length");
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::shifted(const Exponent& by) const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        for (std::size_t i = 0; i < f.size(); ++i) f[i] += by[i];
        r.terms_.emplace_hint(r.terms_.end(), std::move(f), c);
    }
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return LaurentPoly(vars_);
    LaurentPoly r = *this;
    for (auto& [e, k] : r.terms_) k *= c;
    return r;
}

LaurentPoly LaurentPoly::derivative(std::size_t v) const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exponent f = e;
        f[v] -= 1;
        r.add_term(f, c * Rational(e[v]));
    }
    return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k < 0) {
        if (!is_monomial()) throw std::domain_error("negative power of a non-monomial");
        const auto& [e, c] = *terms_.begin();
        Exponent f = e;
        for (int& x : f) x *= k;
        return monomial(vars_, f, tropcrit::pow(c, k));
    }
    LaurentPoly r = constant(vars_, 1), b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

LaurentPoly LaurentPoly::reembed(const std::vector<std::string>& target) const {
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(target.begin(), target.end(), vars_[i]);
        if (it == target.end()) throw std::invalid_argument("reembed: missing variable " + vars_[i]);
        where[i] = static_cast<std::size_t>(it - target.begin());
    }
    LaurentPoly r(target);
    for (const auto& [e, c] : terms_) {
        Exponent f(target.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) f[where[i]] = e[i];
        r.add_term(f, c);
    }
    return r;
}

std::map<int, LaurentPoly> LaurentPoly::collect(std::size_t v) const {
    std::map<int, LaurentPoly> out;
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        f[v] = 0;
        auto it = out.find(e[v]);
        if (it == out.end()) it = out.emplace(e[v], LaurentPoly(vars_)).first;
        it->second.add_term(f, c);
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

void LaurentPoly::require_same(const LaurentPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("LaurentPoly: variable lists differ");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
    require_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
    require_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.require_same(b);
    LaurentPoly r(a.vars_);
    Exponent f(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < f.size(); ++i) f[i] = ea[i] + eb[i];
            r.add_term(f, ca * cb);
        }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

Rational LaurentPoly::tropical_min(const std::vector<Rational>& w) const {
    if (terms_.empty()) throw std::domain_error("tropical_min of zero polynomial");
    bool first = true;
    Rational best;
    for (const auto& [e, c] : terms_) {
        Rational s;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) s += Rational(e[i]) * w[i];
        if (first || s < best) best = s;
        first = false;
    }
    return best;
}

double LaurentPoly::evaluate(const std::vector<double>& vals) const {
    return evaluate<double>(vals, 0.0, 1.0, [](const Rational& r) { return r.to_double(); });
}

Rational LaurentPoly::evaluate(const std::vector<Rational>& vals) const {
    return evaluate<Rational>(vals, Rational(0), Rational(1), [](const Rational& r) { return r; });
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        Rational a = c.abs();
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        if (mono.empty())
            os << a.str();
        else if (a == Rational(1))
            os << mono;
        else
            os << a.str() << "*" << mono;
        first = false;
    }
    return os.str();
}

namespace {

// Largest variable index occurring with positive degree in p or q, or -1.
int top_variable(const LaurentPoly& p, const LaurentPoly& q) {
    int top = -1;
    for (const LaurentPoly* x : {&p, &q})
        for (const auto& [e, c] : x->terms())
            for (int i = static_cast<int>(e.size()) - 1; i > top; --i)
                if (e[i] != 0) {
                    top = i;
                    break;
                }
    return top;
}

LaurentPoly content_in(const LaurentPoly& p, std::size_t v) {
    LaurentPoly g(p.variables());
    for (auto& [d, c] : p.collect(v)) {
        g = g.is_zero() ? make_monic(c) : poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b, std::size_t v) {
    int db = b.degree_in(v);
    auto cb = b.collect(v);
    const LaurentPoly lcb = cb.rbegin()->second;
    while (!a.is_zero() && a.degree_in(v) >= db) {
        int da = a.degree_in(v);
        auto ca = a.collect(v);
        LaurentPoly lca = ca.rbegin()->second;
        Exponent sh(a.nvars(), 0);
        sh[v] = da - db;
        a = a * lcb - (lca * b).shifted(sh);
    }
    return a;
}

LaurentPoly divide_or_throw(const LaurentPoly& a, const LaurentPoly& b) {
    auto q = exact_divide(a, b);
    if (!q) throw std::logic_error("poly_gcd: inexact division");
    return *q;
}

} // namespace

LaurentPoly make_monic(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(Rational(1) / p.leading_term().second);
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_divide by zero");
    if (a.is_zero()) return LaurentPoly(a.variables());
    if (b.is_monomial()) {
        const auto& [eb, cb] = b.leading_term();
        Exponent neg = eb;
        for (int& x : neg) x = -x;
        return a.shifted(neg).scaled(Rational(1) / cb);
    }
    // Strip monomial content: divisibility in the Laurent ring reduces to
    // the polynomial case for monomial-free parts.
    Exponent ma = a.min_exponents(), mb = b.min_exponents();
    Exponent na = ma, nb = mb;
    for (int& x : na) x = -x;
    for (int& x : nb) x = -x;
    LaurentPoly r = a.shifted(na);
    LaurentPoly d = b.shifted(nb);
    const auto& [ed, cd] = d.leading_term();
    LaurentPoly q(a.variables());
    Exponent f(a.nvars());
    while (!r.is_zero()) {
        const auto& [er, cr] = r.leading_term();
        for (std::size_t i = 0; i < f.size(); ++i) {
            f[i] = er[i] - ed[i];
            if (f[i] < 0) return std::nullopt;
        }
        Rational c = cr / cd;
        q.add_term(f, c);
        r -= d.shifted(f).scaled(c);
    }
    Exponent back(a.nvars());
    for (std::size_t i = 0; i < back.size(); ++i) back[i] = ma[i] - mb[i];
    return q.shifted(back);
}

LaurentPoly poly_gcd(const LaurentPoly& a0, const LaurentPoly& b0) {
    if (a0.is_zero()) return make_monic(b0);
    if (b0.is_zero()) return make_monic(a0);
    // Monomial factors are units in the Laurent ring.
    Exponent na = a0.min_exponents(), nb = b0.min_exponents();
    for (int& x : na) x = -x;
    for (int& x : nb) x = -x;
    LaurentPoly a = a0.shifted(na), b = b0.shifted(nb);
    const auto& vars = a.variables();
    if (a.is_constant() || b.is_constant()) return LaurentPoly::constant(vars, 1);
    if (a == b) return make_monic(a);
    int top = top_variable(a, b);
    std::size_t v = static_cast<std::size_t>(top);
    if (a.degree_in(v) == 0) return poly_gcd(a, content_in(b, v));
    if (b.degree_in(v) == 0) return poly_gcd(content_in(a, v), b);

    LaurentPoly ca = content_in(a, v), cb = content_in(b, v);
    LaurentPoly pa = divide_or_throw(a, ca), pb = divide_or_throw(b, cb);
    LaurentPoly c = poly_gcd(ca, cb);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        LaurentPoly r = pseudo_remainder(pa, pb, v);
        pa = pb;
        if (r.is_zero()) {
            pb = r;
            break;
        }
        if (r.degree_in(v) == 0) {
            pa = LaurentPoly::constant(vars, 1);
            break;
        }
        pb = divide_or_throw(r, content_in(r, v));
    }
    LaurentPoly g = pa.degree_in(v) > 0 ? divide_or_throw(pa, content_in(pa, v)) : LaurentPoly::constant(vars, 1);
    return make_monic(c * g);
}

} // namespace tropcrit
