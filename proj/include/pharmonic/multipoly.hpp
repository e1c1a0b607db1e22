#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "pharmonic/rational.hpp"

namespace pharmonic {

// Exponent multi-index; length always equals nvars of the owning polynomial.
using Mono = std::vector<int>;

// Graded-lexicographic term order (total degree first). Fixes the
// serialization order, so canonical polynomials round-trip bit-exactly.
struct GradedLexLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

// Sparse multivariate polynomial over exact rationals. Canonical form:
// no zero coefficients are stored, every exponent vector has length nvars.
class MultiPoly {
public:
    using TermMap = std::map<Mono, Rat, GradedLexLess>;

    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars);

    static MultiPoly constant(int nvars, const Rat& c);
    static MultiPoly variable(int nvars, int i);  // x_i, 0-based
    // (x_1^2 + ... + x_n^2)^(m/2); m must be even and >= 0.
    static MultiPoly radial_power(int nvars, int m);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for the zero polynomial
    bool is_homogeneous(int k) const;

    const Rat& coeff(const Mono& m) const;  // zero if absent
    void add_term(const Mono& m, const Rat& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator*(const Rat& c) const;

    bool operator==(const MultiPoly& rhs) const = default;

    MultiPoly partial(int i) const;  // d/dx_i, 0-based
    MultiPoly laplacian() const;
    // Euler operator sum_i x_i d_i p; equals k*p for k-homogeneous p.
    MultiPoly euler() const;

    double eval(std::span<const double> x) const;
    Rat eval_exact(std::span<const Rat> x) const;

    std::string str() const;  // human-readable, for diagnostics

private:
    int nvars_;
    TermMap terms_;

    void check_same_space(const MultiPoly& rhs) const;
};

}  // namespace pharmonic
