// String polytopes from the tropical superpotential, and lattice point enumeration for bounded
// H-polytopes {x : A x <= b}.
#pragma once

#include "tropcrit/superpot.hpp"

#include <vector>

namespace tropcrit {

using LatticePoint = std::vector<long>;

// Integer points of {A x <= b}, lexicographically sorted; throws InternalError
// when the polytope is unbounded in some coordinate.
std::vector<LatticePoint> lattice_points(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b);

struct StringPolytope {
    int n = 0;
    ReducedWord word;
    DominantWeight lambda;
    std::vector<AffineForm> forms;      // forms >= 0
    std::vector<std::vector<Rational>> A; // A c <= b, one row per form
    std::vector<Rational> b;
    std::vector<LatticePoint> points;

    std::size_t dim() const { return word.size(); }
    bool contains(const std::vector<Rational>& c) const;
};

StringPolytope string_polytope(const DominantWeight& lambda, const ReducedWord& word);

} // namespace tropcrit
