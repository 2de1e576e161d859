// Exact tropical critical point on the quiver, ideal fillings, parabolic chains and the FFL
// inequalities.
#pragma once

#include "tropcrit/quiver.hpp"
#include "tropcrit/rational.hpp"
#include "tropcrit/weights.hpp"

#include <string>
#include <vector>

namespace tropcrit {

struct Layer {
    Rational kappa;
    std::vector<int> arrows;   // A_l^bullet
    std::vector<int> vertices; // V_l^bullet
};

struct TropicalPoint {
    int n = 0;
    std::vector<Rational> delta; // per vertex id
    std::vector<Rational> sigma; // per arrow id
    std::vector<Layer> layers;   // empty when not produced by the layered solver
    long M = 1;                  // lcm of sigma denominators

    Rational pi(const Quiver& q, int v) const; // min over incoming sigma
};

TropicalPoint solve_tropical(const Quiver& q, const DominantWeight& lambda);
TropicalPoint solve_tropical(const DominantWeight& lambda);

// Names of bullet vertices where min(in) != min(out); empty when the conditions hold.
std::vector<std::string> tropical_condition_failures(const Quiver& q, const TropicalPoint& p);
bool satisfies_tropical_conditions(const Quiver& q, const TropicalPoint& p);
TropicalPoint point_from_delta(const Quiver& q, std::vector<Rational> delta);

class IdealFilling {
public:
    explicit IdealFilling(int n = 0);
    int n() const { return n_; }
    // 1 <= i < j <= n
    const Rational& operator()(int i, int j) const { return e_[idx(i, j)]; }
    Rational& operator()(int i, int j) { return e_[idx(i, j)]; }
    bool is_ideal() const;
    bool is_integral() const;
    std::vector<Rational> flat() const; // (1,2),(1,3),..,(2,3),..
    static IdealFilling from_flat(int n, const std::vector<Rational>& v);
    std::string pretty() const;
    friend bool operator==(const IdealFilling& a, const IdealFilling& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>((i - 1) * n_ + (j - 1)); }
    int n_;
    std::vector<Rational> e_;
};

IdealFilling ideal_filling(const Quiver& q, const TropicalPoint& p);
IdealFilling ideal_filling(const DominantWeight& lambda);
TropicalPoint filling_to_tropical(const IdealFilling& f);
DominantWeight filling_weight(const IdealFilling& f); // sum n_ij (e_i - e_j)

struct ChainTerm {
    ParabolicType P;
    Rational coefficient;
};
using ChainDecomposition = std::vector<ChainTerm>;

ChainDecomposition chain_decomposition(const IdealFilling& f);
ChainDecomposition chain_decomposition(const DominantWeight& lambda);
bool is_integral(const DominantWeight& lambda);

// A root alpha_ij = e_i - e_j, i < j.
struct PosRoot {
    int i, j;
    friend bool operator==(const PosRoot& a, const PosRoot& b) { return a.i == b.i && a.j == b.j; }
    friend bool operator<(const PosRoot& a, const PosRoot& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; }
};
using DyckPath = std::vector<PosRoot>;

std::vector<DyckPath> dyck_paths(int n);

struct FflReport {
    bool inside = true;
    std::vector<std::string> violations;
};

// point is indexed like IdealFilling::flat().
FflReport ffl_check(const DominantWeight& lambda, const std::vector<Rational>& point);

} // namespace tropcrit
