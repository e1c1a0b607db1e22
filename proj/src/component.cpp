#include "pharmonic/component.hpp"

#include <cmath>
#include <stdexcept>

namespace pharmonic {

Component::Component(Rat s, std::uint64_t rad, MultiPoly p)
    : scale(std::move(s)), radicand(rad), poly(std::move(p)) {
    if (radicand == 0) throw std::invalid_argument("component radicand must be positive");
    auto [a, b] = square_free_split(radicand);
    scale *= Rat(static_cast<unsigned long>(a));
    radicand = b;
    if (scale == 0 || poly.is_zero()) {
        scale = 0;
        radicand = 1;
        poly = MultiPoly(poly.nvars());
    }
}

MultiPoly Component::square() const {
    return (poly * poly) * (scale * scale * Rat(static_cast<unsigned long>(radicand)));
}

double Component::eval(std::span<const double> x) const {
    return to_double(scale) * std::sqrt(static_cast<double>(radicand)) * poly.eval(x);
}

MultiPoly component_square_sum(std::span<const Component> cs) {
    if (cs.empty()) throw std::invalid_argument("component_square_sum: empty list");
    MultiPoly sum(cs.front().nvars());
    for (const Component& c : cs) {
        if (c.nvars() != sum.nvars()) throw std::invalid_argument("component dimension mismatch");
        sum += c.square();
    }
    return sum;
}

}  // namespace pharmonic
