#pragma once

#include <optional>
#include <string>

#include "pharmonic/rational.hpp"

namespace pharmonic {

// p in [1, inf], optionally carrying an exact rational value.
struct PValue {
    bool inf = false;
    double value = 2.0;
    std::optional<Rat> exact;

    static PValue infinite() { return {true, 0.0, std::nullopt}; }
    static PValue of(double p) { return {false, p, std::nullopt}; }
    static PValue of(const Rat& p) { return {false, to_double(p), p}; }
    // accepts "inf", decimals ("1.5") and fractions ("3/2")
    static PValue parse(const std::string& text);

    std::string str() const;
};

// Homogeneity exponents attached to u = |x|^(gamma-k) h:
//   gamma  solves gamma^2 (p-1) + gamma (n-p) - k(k+n-2) = 0 (larger root),
//          with gamma = k(k+n-2)/(n-1) at p = 1 and gamma = 1 at p = inf;
//   theta = 1/p, tau = (1-theta)(gamma-1),
//   a     = homogeneity of |grad u|^(p-2) grad u,
//   nu    = homogeneity of |grad u|^((p-2)/2) grad u.
// At p = inf, a and nu are stored as their finite limits.
struct ExponentProfile {
    int n = 0, k = 0;
    PValue p;
    double theta = 0, gamma = 1, tau = 0, a = 0, nu = 0;
    std::optional<Rat> gamma_exact;  // set when gamma is certified rational
};

ExponentProfile gamma_profile(int n, int k, const PValue& p);

// gamma^2 (p-1) + gamma (n-p) - k(k+n-2) at the profile's gamma (0 at p=1/inf
// by convention, where the quadratic does not apply).
double quadratic_residual(const ExponentProfile& e);

// tau^2 + tau (1 + theta (n-2)) + theta (1-theta) (n-1-k(k+n-2)) at the
// profile's tau.
double tau_residual(const ExponentProfile& e);

}  // namespace pharmonic
