// Truncated Puiseux series on a grid (1/M)Z with floating coefficients. Exponents are exact; a
// series either is exact (a finite sum) or carries an absolute precision: every term from t^{cap/M}
// on is unknown. Leading terms that cancel in a sum are stripped and the reliable order shrinks
// with them.
#pragma once

#include "tropcrit/errors.hpp"
#include "tropcrit/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace tropcrit {

template <class T>
class BasicPuiseux {
public:
    static constexpr int kExactInverseTerms = 32;

    BasicPuiseux() = default; // exact zero

    static BasicPuiseux monomial(T c, const Rational& exponent) {
        BasicPuiseux s;
        if (c == T(0)) return s;
        s.M_ = static_cast<int>(exponent.den().get_si());
        s.lead_ = exponent.num().get_si();
        s.c_ = {c};
        return s;
    }

    static BasicPuiseux constant(T c) { return monomial(c, Rational(0)); }

    // coeffs[k] multiplies t^{lead + k/M}; terms after the last one are unknown
    // unless exact is set.
    static BasicPuiseux from_coefficients(int M, const Rational& lead, std::vector<T> coeffs, bool exact = false) {
        Rational scaled = lead * Rational(M);
        if (!scaled.is_integer()) throw std::invalid_argument("Puiseux: leading exponent off grid");
        BasicPuiseux s;
        s.M_ = M;
        s.lead_ = scaled.to_long();
        s.c_ = std::move(coeffs);
        s.exact_ = exact;
        s.cap_ = s.lead_ + static_cast<long>(s.c_.size());
        s.strip();
        return s;
    }

    // Zero series; inexact zeros (every retained term cancelled) are O(t^precision).
    bool is_zero() const { return c_.empty(); }
    bool is_unresolved() const { return c_.empty() && !exact_; }
    bool exact() const { return exact_; }
    int grid() const { return M_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<T>& coefficients() const { return c_; }
    bool is_positive() const { return !c_.empty() && c_[0] > T(0); }

    Rational leading_exponent() const {
        if (is_unresolved()) throw PrecisionExhausted("cancellation consumed every retained term");
        if (c_.empty()) throw ZeroSeries("leading exponent of the zero series");
        return Rational(lead_, M_);
    }

    // First exponent whose coefficient is unknown; nullopt for exact series.
    std::optional<Rational> precision() const {
        if (exact_) return std::nullopt;
        return Rational(cap_, M_);
    }

    T leading_coefficient() const {
        if (is_unresolved()) throw PrecisionExhausted("cancellation consumed every retained term");
        if (c_.empty()) throw ZeroSeries("leading coefficient of the zero series");
        return c_[0];
    }

    T coefficient_at(const Rational& e) const {
        Rational idx = e * Rational(M_);
        if (!exact_ && idx >= Rational(cap_)) throw PrecisionExhausted("coefficient beyond precision: t^" + e.str());
        if (!idx.is_integer()) return T(0);
        long k = idx.to_long() - lead_;
        if (k < 0 || k >= static_cast<long>(c_.size())) return T(0);
        return c_[static_cast<std::size_t>(k)];
    }

    BasicPuiseux regrid(int M) const {
        if (M % M_ != 0) throw std::invalid_argument("Puiseux::regrid: not a multiple");
        int f = M / M_;
        BasicPuiseux s;
        s.M_ = M;
        s.exact_ = exact_;
        s.lead_ = lead_ * f;
        s.cap_ = cap_ * f;
        if (!c_.empty()) {
            s.c_.assign((c_.size() - 1) * static_cast<std::size_t>(f) + 1, T(0));
            for (std::size_t k = 0; k < c_.size(); ++k) s.c_[k * static_cast<std::size_t>(f)] = c_[k];
            if (!exact_) s.c_.resize(static_cast<std::size_t>(s.cap_ - s.lead_), T(0));
        }
        return s;
    }

    // Truncate to at most `terms` known coefficients (turns exact into inexact).
    BasicPuiseux truncated(int terms) const {
        BasicPuiseux s = *this;
        if (s.c_.empty()) return s;
        long newcap = lead_ + terms;
        if (exact_ || newcap < cap_) {
            s.exact_ = false;
            s.cap_ = exact_ ? newcap : std::min(cap_, newcap);
            s.c_.resize(static_cast<std::size_t>(s.cap_ - s.lead_), T(0));
        }
        return s;
    }

    BasicPuiseux operator-() const {
        BasicPuiseux s = *this;
        for (auto& x : s.c_) x = -x;
        return s;
    }

    friend BasicPuiseux operator+(const BasicPuiseux& a0, const BasicPuiseux& b0) {
        if (a0.is_zero() && a0.exact_) return b0;
        if (b0.is_zero() && b0.exact_) return a0;
        int M = std::lcm(a0.M_, b0.M_);
        BasicPuiseux a = a0.regrid(M), b = b0.regrid(M);
        BasicPuiseux r;
        r.M_ = M;
        r.exact_ = a.exact_ && b.exact_;
        long lo = std::min(a.lead_, b.lead_);
        long hi;
        if (r.exact_) {
            hi = std::max(a.lead_ + static_cast<long>(a.c_.size()), b.lead_ + static_cast<long>(b.c_.size()));
        } else {
            hi = std::min(a.exact_ ? std::numeric_limits<long>::max() : a.cap_,
                          b.exact_ ? std::numeric_limits<long>::max() : b.cap_);
            r.cap_ = hi;
        }
        r.lead_ = lo;
        if (hi > lo) {
            r.c_.assign(static_cast<std::size_t>(hi - lo), T(0));
            // noise is judged against the largest input coefficient seen so far
            T scale = T(0);
            for (long i = lo; i < hi; ++i) {
                T x = a.at_index(i), y = b.at_index(i);
                T v = x + y;
                scale = std::max(scale, std::abs(x) + std::abs(y));
                if (std::abs(v) <= cancel_eps() * scale) v = T(0);
                r.c_[static_cast<std::size_t>(i - lo)] = v;
            }
        } else {
            r.cap_ = hi;
        }
        r.strip();
        return r;
    }

    friend BasicPuiseux operator-(const BasicPuiseux& a, const BasicPuiseux& b) { return a + (-b); }

    friend BasicPuiseux operator*(const BasicPuiseux& a0, const BasicPuiseux& b0) {
        if (a0.is_zero() && a0.exact_) return a0;
        if (b0.is_zero() && b0.exact_) return b0;
        if (a0.is_zero() || b0.is_zero()) {
            // O(t^p) times a series with valuation v (or O(t^q)) is O(t^{p+v}) (or O(t^{p+q}))
            int M = std::lcm(a0.M_, b0.M_);
            BasicPuiseux a = a0.regrid(M), b = b0.regrid(M);
            BasicPuiseux r;
            r.M_ = M;
            r.exact_ = false;
            long ea = a.is_zero() ? a.cap_ : a.lead_, eb = b.is_zero() ? b.cap_ : b.lead_;
            r.cap_ = ea + eb;
            return r;
        }
        int M = std::lcm(a0.M_, b0.M_);
        BasicPuiseux a = a0.regrid(M), b = b0.regrid(M);
        BasicPuiseux r;
        r.M_ = M;
        r.exact_ = a.exact_ && b.exact_;
        r.lead_ = a.lead_ + b.lead_;
        std::size_t n;
        if (r.exact_) {
            n = a.c_.size() + b.c_.size() - 1;
        } else {
            long cap = std::numeric_limits<long>::max();
            if (!b.exact_) cap = std::min(cap, a.lead_ + b.cap_);
            if (!a.exact_) cap = std::min(cap, b.lead_ + a.cap_);
            r.cap_ = cap;
            n = static_cast<std::size_t>(cap - r.lead_);
        }
        r.c_.assign(n, T(0));
        for (std::size_t i = 0; i < a.c_.size() && i < n; ++i)
            for (std::size_t j = 0; j < b.c_.size() && i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        r.strip();
        return r;
    }

    BasicPuiseux inverse(int exact_terms = kExactInverseTerms) const {
        if (is_unresolved()) throw PrecisionExhausted("inverse of a series whose retained terms all cancelled");
        if (c_.empty()) throw DivisionByZeroSeries("inverse of the zero series");
        BasicPuiseux r;
        r.M_ = M_;
        r.lead_ = -lead_;
        if (exact_ && c_.size() == 1) {
            r.c_ = {T(1) / c_[0]};
            return r;
        }
        std::size_t n = exact_ ? static_cast<std::size_t>(exact_terms) : c_.size();
        r.exact_ = false;
        r.cap_ = r.lead_ + static_cast<long>(n);
        r.c_.assign(n, T(0));
        r.c_[0] = T(1) / c_[0];
        for (std::size_t k = 1; k < n; ++k) {
            T s = T(0);
            for (std::size_t j = 1; j <= k && j < c_.size(); ++j) s += c_[j] * r.c_[k - j];
            r.c_[k] = -s / c_[0];
        }
        return r;
    }

    friend BasicPuiseux operator/(const BasicPuiseux& a, const BasicPuiseux& b) {
        return a * b.inverse();
    }

    BasicPuiseux pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        BasicPuiseux r = constant(T(1)), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    std::string str(int digits = 6) const {
        if (c_.empty()) return exact_ ? "0" : "O(t^" + Rational(cap_, M_).str() + ")";
        std::ostringstream os;
        os.precision(digits);
        bool first = true;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == T(0)) continue;
            T a = std::abs(c_[k]);
            os << (first ? (c_[k] < T(0) ? "-" : "") : (c_[k] < T(0) ? " - " : " + "));
            if (a != T(1)) os << static_cast<double>(a) << " ";
            os << "t^{" << Rational(lead_ + static_cast<long>(k), M_).str() << "}";
            first = false;
        }
        if (!exact_) os << " + O(t^{" << Rational(cap_, M_).str() << "})";
        return os.str();
    }

    static T cancel_eps() { return T(1) / T(1e11); }

private:
    T at_index(long i) const {
        long k = i - lead_;
        if (k < 0 || k >= static_cast<long>(c_.size())) return T(0);
        return c_[static_cast<std::size_t>(k)];
    }

    // Drop vanishing leading (and, for exact series, trailing) coefficients.
    void strip() {
        std::size_t z = 0;
        while (z < c_.size() && c_[z] == T(0)) ++z;
        if (z == c_.size()) {
            c_.clear();
            if (exact_) lead_ = 0;
            return;
        }
        if (z) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(z));
            lead_ += static_cast<long>(z);
        }
        if (exact_)
            while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    int M_ = 1;
    long lead_ = 0;
    std::vector<T> c_;
    long cap_ = 0;
    bool exact_ = true;
};

using PuiseuxSeries = BasicPuiseux<double>;

template <class T>
Rational series_val(const BasicPuiseux<T>& s) {
    return s.leading_exponent();
}

enum class SeriesOp { add, mul, div };

template <class T>
BasicPuiseux<T> series_arith(const BasicPuiseux<T>& a, const BasicPuiseux<T>& b, SeriesOp op) {
    switch (op) {
    case SeriesOp::add: {
        auto r = a + b;
        if (r.is_unresolved()) throw PrecisionExhausted("cancellation consumed every retained term");
        return r;
    }
    case SeriesOp::mul: return a * b;
    case SeriesOp::div: return a / b;
    }
    throw std::logic_error("series_arith");
}

} // namespace tropcrit
