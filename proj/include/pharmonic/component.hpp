#pragma once

#include <span>
#include <vector>

#include "pharmonic/multipoly.hpp"

namespace pharmonic {

// One coordinate function scale * sqrt(radicand) * poly(x). The square
// scale^2 * radicand * poly^2 is exactly rational, which is what every
// admissibility check consumes. Canonical form keeps radicand squarefree,
// so radicand == 1 whenever no radical is needed.
struct Component {
    Rat scale{1};
    std::uint64_t radicand{1};
    MultiPoly poly;

    Component() = default;
    Component(Rat s, std::uint64_t rad, MultiPoly p);

    int nvars() const { return poly.nvars(); }

    // scale^2 * radicand * poly^2, an exact polynomial.
    MultiPoly square() const;

    double eval(std::span<const double> x) const;

    bool operator==(const Component& rhs) const = default;
};

// Sum of component squares; all components must share nvars.
MultiPoly component_square_sum(std::span<const Component> cs);

}  // namespace pharmonic
