#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pharmonic/component.hpp"
#include "pharmonic/hurwitz.hpp"

namespace pharmonic {

// Candidate h : R^n -> R^N, homogeneous of degree k, with components stored
// as scale * sqrt(radicand) * poly so every admissibility check is exact.
struct HarmonicCandidate {
    int n = 0;
    int N = 0;
    int k = 0;
    std::vector<Component> components;
    std::string provenance;
};

struct AdmissibilityReport {
    bool h1_ok = false;  // every component harmonic
    bool h2_ok = false;  // sum of squares equals |x|^(2k)
    bool h3_ok = false;  // |grad h|^2 = (kn + k(2k-2)) |x|^(2k-2)
    bool h4_ok = false;  // Euler identity x . grad h_j = k h_j

    // Witness defects for failed checks (difference polynomials).
    std::vector<std::pair<int, MultiPoly>> h1_witnesses;
    std::optional<MultiPoly> h2_witness;
    std::optional<MultiPoly> h3_witness;
    std::vector<std::pair<int, MultiPoly>> h4_witnesses;

    bool all_ok() const { return h1_ok && h2_ok && h3_ok && h4_ok; }
};

// Exact polynomial checks of (h1)-(h4); never throws on failure, the report
// carries the defects. Components must be homogeneous of degree k.
AdmissibilityReport verify(const HarmonicCandidate& h);

// The constant kn + k(2k-2) appearing in the squared gradient norm of h.
inline long grad_sq_constant(int n, int k) { return static_cast<long>(k) * n + static_cast<long>(k) * (2 * k - 2); }

// {(x_i^2 - x_j^2), x_i x_j : i < j} with the scalings that make the squares
// sum to |x|^4 for every n; N = n(n-1). Recovers the classical planar pair
// (x_1^2 - x_2^2, 2 x_1 x_2) at n = 2.
HarmonicCandidate build_simple(int n);

// Even n = 2m: (|y|^2 - |z|^2, 2 x_i x_j for i <= m < j); N = 1 + n^2/4.
HarmonicCandidate build_even_simple(int n);

// Even n = 2m with a Hurwitz family F of shape [m, m, t]:
// (|y|^2 - |z|^2, 2 F(y, z)); N = 1 + t.
HarmonicCandidate build_hurwitz_even(int n, const HurwitzFamily& f);

// Odd n = 2m+1 with F of shape [m, m, t]; N = 1 + t + n. Components carry
// the radical weights sqrt(4m^2-1) and sqrt(2m^2+m) over the prefactor 2m.
HarmonicCandidate build_hurwitz_odd(int n, const HurwitzFamily& f);

// Even n = 2m, degree k >= 2: real and imaginary parts of the weighted
// monomials z^alpha, z_j = (x_{2j-1}, x_{2j}); N = 2 * binom(m+k-1, k).
HarmonicCandidate build_higher_order(int n, int k);

// Degree-3 candidate on R^3 (N = 7): the full space of cubic solid
// harmonics weighted so the squares sum to |x|^6.
HarmonicCandidate build_cubic_frame_3d();

// Smallest N among the constructions above for this n, built and verified.
// method preference on ties: hurwitz, even-simple, simple.
struct BestConstruction {
    HarmonicCandidate candidate;
    std::string method;
};
BestConstruction build_best(int n, int planner_budget = 12);

// Reference table of admissible pairs (n, N) for n = 2..32 as published;
// nullopt outside that range.
std::optional<int> reference_table_N(int n);

struct TableRow {
    int n = 0;
    int N_constructed = 0;
    std::optional<int> N_reference;
    bool gap = false;  // constructed value differs from the reference
    std::string method;
};
std::vector<TableRow> n_table(int max_n, int planner_budget = 12);

}  // namespace pharmonic
