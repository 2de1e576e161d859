#include "tropcrit/weights.hpp"

#include "tropcrit/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace tropcrit {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

int require_n(std::optional<int> n, const std::string& spec) {
    if (!n) throw std::invalid_argument("weight '" + spec + "' needs n");
    return *n;
}

} // namespace

DominantWeight::DominantWeight(int n, std::vector<Rational> lift) : n_(n), lift_(std::move(lift)) {
    if (n < 1 || static_cast<int>(lift_.size()) != n)
        throw DimensionMismatch("weight lift has " + std::to_string(lift_.size()) + " entries, expected " +
                                std::to_string(n));
    for (int i = 0; i + 1 < n; ++i)
        if (lift_[i] < lift_[i + 1]) throw NotDominant("lift " + str() + " is not weakly decreasing");
}

DominantWeight DominantWeight::from_fundamental(int n, const std::vector<Rational>& m) {
    if (static_cast<int>(m.size()) != n - 1) throw DimensionMismatch("need n-1 fundamental coefficients");
    std::vector<Rational> lift(static_cast<std::size_t>(n));
    for (int i = n - 2; i >= 0; --i) lift[i] = lift[i + 1] + m[i];
    return DominantWeight(n, std::move(lift));
}

DominantWeight DominantWeight::from_fundamental(int n, const std::vector<long>& m) {
    std::vector<Rational> r(m.begin(), m.end());
    return from_fundamental(n, r);
}

DominantWeight DominantWeight::rho(int n) {
    return from_fundamental(n, std::vector<long>(static_cast<std::size_t>(n - 1), 1));
}

DominantWeight DominantWeight::parse(const std::string& spec0, std::optional<int> n) {
    std::string spec = trim(spec0);
    if (spec.empty()) throw std::invalid_argument("empty weight");
    if (spec == "0") return zero(require_n(n, spec));
    if (spec == "rho") return rho(require_n(n, spec));
    if (spec.find('w') != std::string::npos) {
        int nn = require_n(n, spec);
        std::vector<Rational> m(static_cast<std::size_t>(nn - 1));
        std::string body;
        for (char c : spec)
            if (!std::isspace(static_cast<unsigned char>(c))) body += c;
        std::size_t pos = 0;
        while (pos < body.size()) {
            std::size_t next = body.find('+', pos);
            std::string term = body.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            pos = next == std::string::npos ? body.size() : next + 1;
            std::size_t w = term.find('w');
            if (w == std::string::npos || w + 1 >= term.size())
                throw std::invalid_argument("bad fundamental term '" + term + "'");
            Rational c = w == 0 ? Rational(1) : Rational::parse(term.substr(0, w));
            std::size_t used = 0;
            int k = std::stoi(term.substr(w + 1), &used);
            if (used != term.size() - w - 1 || k < 1 || k > nn - 1)
                throw std::invalid_argument("bad fundamental index in '" + term + "'");
            m[k - 1] += c;
        }
        return from_fundamental(nn, m);
    }
    std::vector<Rational> lift;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) lift.push_back(Rational::parse(trim(tok)));
    int nn = static_cast<int>(lift.size());
    if (n && *n != nn)
        throw DimensionMismatch("weight " + spec + " has " + std::to_string(nn) + " entries but n=" +
                                std::to_string(*n));
    return DominantWeight(nn, std::move(lift));
}

std::vector<Rational> DominantWeight::fundamental() const {
    std::vector<Rational> m;
    for (int i = 0; i + 1 < n_; ++i) m.push_back(lift_[i] - lift_[i + 1]);
    return m;
}

bool DominantWeight::is_integral() const {
    for (const auto& m : fundamental())
        if (!m.is_integer()) return false;
    return true;
}

bool DominantWeight::is_zero() const {
    for (const auto& m : fundamental())
        if (!m.is_zero()) return false;
    return true;
}

DominantWeight DominantWeight::canonical() const { return shifted(-lift_.back()); }

DominantWeight DominantWeight::zero_sum() const {
    Rational s;
    for (const auto& x : lift_) s += x;
    return shifted(-(s / Rational(n_)));
}

DominantWeight DominantWeight::shifted(const Rational& c) const {
    auto l = lift_;
    for (auto& x : l) x += c;
    return DominantWeight(n_, std::move(l));
}

DominantWeight DominantWeight::scaled(const Rational& c) const {
    if (c.sign() < 0) throw NotDominant("negative multiple of a weight");
    auto l = lift_;
    for (auto& x : l) x *= c;
    return DominantWeight(n_, std::move(l));
}

bool DominantWeight::same_weight(const DominantWeight& o) const {
    return n_ == o.n_ && fundamental() == o.fundamental();
}

DominantWeight operator+(const DominantWeight& a, const DominantWeight& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("adding weights of different rank");
    auto l = a.lift_;
    for (std::size_t i = 0; i < l.size(); ++i) l[i] += b.lift_[i];
    return DominantWeight(a.n_, std::move(l));
}

std::string DominantWeight::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < lift_.size(); ++i) s += (i ? "," : "") + lift_[i].str();
    return s + ")";
}

Perm identity_perm(int n) {
    Perm p(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) p[k] = k + 1;
    return p;
}

Perm longest_element(int n) {
    Perm p(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) p[k] = n - k;
    return p;
}

Perm right_mul_simple(Perm w, int i) {
    std::swap(w[i - 1], w[i]);
    return w;
}

Perm left_mul_simple(Perm w, int i) {
    for (auto& x : w) {
        if (x == i) x = i + 1;
        else if (x == i + 1) x = i;
    }
    return w;
}

int perm_length(const Perm& w) {
    int inv = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
            if (w[a] > w[b]) ++inv;
    return inv;
}

Perm word_to_perm(const ReducedWord& word, int n) {
    Perm p = identity_perm(n);
    for (int i : word) {
        if (i < 1 || i >= n) throw std::invalid_argument("letter " + std::to_string(i) + " out of range");
        p = right_mul_simple(p, i);
    }
    return p;
}

bool is_reduced_word_of(const ReducedWord& word, const Perm& w) {
    int n = static_cast<int>(w.size());
    for (int i : word)
        if (i < 1 || i >= n) return false;
    return static_cast<int>(word.size()) == perm_length(w) && word_to_perm(word, n) == w;
}

ReducedWord standard_word(int n) {
    ReducedWord w;
    for (int top = n - 1; top >= 1; --top)
        for (int i = 1; i <= top; ++i) w.push_back(i);
    return w;
}

ReducedWord parse_word(const std::string& s0) {
    std::string s = trim(s0);
    ReducedWord w;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) w.push_back(std::stoi(trim(tok)));
    } else {
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
                throw std::invalid_argument("bad reduced word '" + s + "'");
            w.push_back(c - '0');
        }
    }
    if (w.empty()) throw std::invalid_argument("empty reduced word");
    return w;
}

std::string word_str(const ReducedWord& w) {
    bool small = std::all_of(w.begin(), w.end(), [](int i) { return i < 10; });
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (!small && k) s += ",";
        s += std::to_string(w[k]);
    }
    return s;
}

std::vector<ReducedWord> reduced_words(int n, int bound) {
    if (n > bound) throw RankTooLarge("reduced words enumerated only for n <= " + std::to_string(bound));
    if (n < 2) return {ReducedWord{}};
    std::vector<ReducedWord> out;
    const int N = n * (n - 1) / 2;
    ReducedWord cur;
    auto rec = [&](auto&& self, const Perm& w) -> void {
        if (static_cast<int>(cur.size()) == N) {
            out.push_back(cur);
            return;
        }
        for (int i = 1; i < n; ++i) {
            if (w[i - 1] > w[i]) continue; // w s_i would be shorter
            cur.push_back(i);
            self(self, right_mul_simple(w, i));
            cur.pop_back();
        }
    };
    rec(rec, identity_perm(n));
    return out;
}

std::vector<int> ParabolicType::complement() const {
    std::vector<int> c;
    for (int i = 1; i < n; ++i)
        if (!std::binary_search(I_P.begin(), I_P.end(), i)) c.push_back(i);
    return c;
}

std::vector<std::pair<int, int>> ParabolicType::blocks() const {
    std::vector<std::pair<int, int>> b;
    int start = 1;
    for (int i = 1; i <= n; ++i) {
        bool glued = i < n && std::binary_search(I_P.begin(), I_P.end(), i);
        if (!glued) {
            b.emplace_back(start, i);
            start = i + 1;
        }
    }
    return b;
}

std::string ParabolicType::str() const {
    std::string s = "{";
    for (std::size_t k = 0; k < I_P.size(); ++k) s += (k ? "," : "") + std::to_string(I_P[k]);
    return s + "}";
}

ParabolicType parabolic_from_complement(int n, const std::vector<int>& I_upper) {
    ParabolicType p{n, {}};
    std::set<int> up(I_upper.begin(), I_upper.end());
    for (int i = 1; i < n; ++i)
        if (!up.count(i)) p.I_P.push_back(i);
    return p;
}

Perm longest_of_parabolic(const ParabolicType& p) {
    Perm w = identity_perm(p.n);
    for (auto [a, b] : p.blocks()) std::reverse(w.begin() + (a - 1), w.begin() + b);
    return w;
}

DominantWeight lambda_P(const ParabolicType& p) {
    std::vector<Rational> lift(static_cast<std::size_t>(p.n));
    for (int a = 1; a <= p.n; ++a)
        for (int b = a + 1; b <= p.n; ++b) {
            bool in_levi = true;
            for (int i = a; i < b; ++i)
                if (!std::binary_search(p.I_P.begin(), p.I_P.end(), i)) in_levi = false;
            if (in_levi) continue;
            lift[a - 1] += 1;
            lift[b - 1] -= 1;
        }
    return DominantWeight(p.n, std::move(lift));
}

std::vector<int> positive_subexpression(const ReducedWord& word, const Perm& v) {
    Perm u = v;
    std::vector<int> J;
    for (std::size_t t = word.size(); t-- > 0;) {
        int i = word[t];
        if (u[i - 1] > u[i]) {
            J.push_back(static_cast<int>(t) + 1);
            u = right_mul_simple(u, i);
        }
    }
    std::reverse(J.begin(), J.end());
    if (u != identity_perm(static_cast<int>(v.size())))
        throw InternalError("word does not contain a subexpression for v");
    return J;
}

long long weyl_dim(const DominantWeight& lambda) {
    if (!lambda.is_integral()) throw NonIntegralWeight("weight " + lambda.str() + " is not integral");
    int n = lambda.n();
    Rational d(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d *= (lambda[i] - lambda[j] + Rational(j - i)) / Rational(j - i);
    return d.to_long();
}

int cartan(int a, int b) {
    if (a == b) return 2;
    if (a - b == 1 || b - a == 1) return -1;
    return 0;
}

int pairing(int i, int j, int k, int l) {
    auto d = [](int x, int y) { return x == y ? 1 : 0; };
    return d(i, k) + d(j + 1, l + 1) - d(i, l + 1) - d(j + 1, k);
}

} // namespace tropcrit
