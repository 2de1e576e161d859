// Type A root data: weights as lifts, Weyl group words, parabolics.
#pragma once

#include "tropcrit/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropcrit {

class DominantWeight {
public:
    DominantWeight() = default;
    DominantWeight(int n, std::vector<Rational> lift);

    static DominantWeight from_fundamental(int n, const std::vector<Rational>& m);
    static DominantWeight from_fundamental(int n, const std::vector<long>& m);
    static DominantWeight zero(int n) { return DominantWeight(n, std::vector<Rational>(static_cast<std::size_t>(n))); }
    static DominantWeight rho(int n);
    // "7,5,0", "2w1+5w2", "rho" or "0"; the latter three need n.
    static DominantWeight parse(const std::string& spec, std::optional<int> n = std::nullopt);

    int n() const { return n_; }
    const std::vector<Rational>& lift() const { return lift_; }
    const Rational& operator[](std::size_t i) const { return lift_[i]; }

    std::vector<Rational> fundamental() const;
    bool is_integral() const;
    bool is_zero() const;
    DominantWeight canonical() const;    // last entry 0
    DominantWeight zero_sum() const;     // entries sum to 0
    DominantWeight shifted(const Rational& c) const;
    DominantWeight scaled(const Rational& c) const;
    bool same_weight(const DominantWeight& o) const;

    friend DominantWeight operator+(const DominantWeight& a, const DominantWeight& b);
    friend bool operator==(const DominantWeight& a, const DominantWeight& b) {
        return a.n_ == b.n_ && a.lift_ == b.lift_;
    }

    std::string str() const;

private:
    int n_ = 0;
    std::vector<Rational> lift_;
};

// Permutations of {1..n} in one-line notation, stored 0-indexed: p[k] = w(k+1).
using Perm = std::vector<int>;
using ReducedWord = std::vector<int>;

Perm identity_perm(int n);
Perm longest_element(int n);
Perm right_mul_simple(Perm w, int i); // w s_i
Perm left_mul_simple(Perm w, int i);  // s_i w
int perm_length(const Perm& w);
Perm word_to_perm(const ReducedWord& word, int n);
bool is_reduced_word_of(const ReducedWord& word, const Perm& w);

ReducedWord standard_word(int n); // (1,..,n-1, 1,..,n-2, ..., 1)
ReducedWord parse_word(const std::string& s);
std::string word_str(const ReducedWord& w);

std::vector<ReducedWord> reduced_words(int n, int bound = 5);

struct ParabolicType {
    int n = 0;
    std::vector<int> I_P; // sorted simple indices inside the Levi

    std::vector<int> complement() const;
    bool is_borel() const { return I_P.empty(); }
    // Maximal runs of consecutive indices {a..b} glued by I_P, 1-based, inclusive.
    std::vector<std::pair<int, int>> blocks() const;
    friend bool operator==(const ParabolicType& a, const ParabolicType& b) {
        return a.n == b.n && a.I_P == b.I_P;
    }
    std::string str() const;
};

ParabolicType parabolic_from_complement(int n, const std::vector<int>& I_upper);
Perm longest_of_parabolic(const ParabolicType& p);
DominantWeight lambda_P(const ParabolicType& p);

// Right-to-left greedy positive subexpression for v in word; 1-based positions.
std::vector<int> positive_subexpression(const ReducedWord& word, const Perm& v);

long long weyl_dim(const DominantWeight& lambda);

int cartan(int a, int b);
// <alpha_i + .. + alpha_j, alpha_k^v + .. + alpha_l^v>
int pairing(int i, int j, int k, int l);

} // namespace tropcrit
