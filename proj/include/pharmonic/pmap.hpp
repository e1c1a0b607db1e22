#pragma once

#include <span>
#include <vector>

#include "pharmonic/construct.hpp"
#include "pharmonic/exponents.hpp"

namespace pharmonic {

// The map u(x) = |x|^(gamma - k) h(x) for an admissible h and a choice of p.
struct PMap {
    HarmonicCandidate candidate;
    ExponentProfile profile;
};

// Requires verify(h) to pass; throws otherwise.
PMap assemble(const HarmonicCandidate& h, const PValue& p);

// gamma = 1 for the limit equation; |grad u|^2 is then constant.
PMap infinity_map(const HarmonicCandidate& h);

// u(x) componentwise, evaluated through |x|^(gamma-k) times the exact
// component polynomials.
std::vector<double> u_eval(const PMap& u, std::span<const double> x);

// grad u(x) as an n x N matrix (rows = domain directions), assembled from
// (gamma-k) |x|^(gamma-k-2) x (x) h(x) + |x|^(gamma-k) grad h(x).
std::vector<std::vector<double>> analytic_gradient(const PMap& u, std::span<const double> x);

// Scalar (gamma-k)(r+n+k) + k(r+2) with r = gamma*p - p - gamma - k; equals
// the gamma-quadratic and so vanishes at the chosen gamma.
double symbolic_residual(const PMap& u);

// Exact polynomial identity in the four symbols (gamma, p, n, k):
// (gamma-k)(r+n+k) + k(r+2) == gamma^2 (p-1) + gamma (n-p) - k(n+k-2).
bool proof_identity_holds();

// (|grad u(x)|_F^2, |x|^(2(gamma-1)) (gamma^2 + k(k+n-2))).
std::pair<double, double> gradient_norm_identity(const PMap& u, std::span<const double> x);

}  // namespace pharmonic
