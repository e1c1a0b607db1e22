#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pharmonic/multipoly.hpp"

namespace pharmonic {

// Small sparse matrix over exact rationals. The families built here are
// signed permutations and their sums, so rows stay very sparse.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols);

    static RatMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat at(int i, int j) const;
    void set(int i, int j, const Rat& v);

    const std::vector<std::pair<int, Rat>>& row(int i) const { return data_[i]; }

    RatMat transpose() const;
    RatMat operator*(const RatMat& rhs) const;
    RatMat operator+(const RatMat& rhs) const;
    RatMat operator-() const;
    RatMat operator*(const Rat& c) const;
    bool operator==(const RatMat& rhs) const = default;

    bool is_zero() const;
    bool is_scalar(const Rat& c) const;  // equals c * I
    bool is_skew() const;

    // Signed permutation decomposition: column m holds a single entry
    // sign[m] at row perm[m]. Empty if the matrix is not of that shape.
    struct SignedPerm {
        std::vector<int> perm;
        std::vector<Rat> sign;
    };
    std::optional<SignedPerm> as_signed_perm() const;

private:
    int rows_, cols_;
    std::vector<std::vector<std::pair<int, Rat>>> data_;  // per-row, sorted by column
};

// 2x2 tensor helpers on the first factor of R^2 (x) R^t.
RatMat kron_sigma(const RatMat& m);  // diag(m, -m)
RatMat kron_eps(int t);              // [[0, -I], [I, 0]]
RatMat kron_mu(const RatMat& m);     // [[0, m], [m, 0]]

// Bilinear map F : R^r x R^s -> R^t with |F(x,y)| = |x||y|, stored as the
// r matrices A_l (each t x s) of F(x,y) = sum_l x_l (A_l y).
struct HurwitzFamily {
    int r = 0, s = 0, t = 0;
    std::vector<RatMat> mats;

    // A_i^T A_j + A_j^T A_i == 2 delta_ij I, checked exactly.
    bool matrix_equations_ok() const;
    // |F(x,y)|^2 - |x|^2 |y|^2 as a polynomial in r+s variables.
    MultiPoly identity_defect() const;
    bool identity_ok() const { return identity_defect().is_zero(); }

    // F_i(x,y) as a polynomial in the r+s variables (x_1..x_r, y_1..y_s).
    MultiPoly component_poly(int i) const;
};

// Multiplication table of R, C, H, O (dim 1, 2, 4, 8) as a Hurwitz family
// via left multiplication; built by Cayley-Dickson doubling from R with
// (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
HurwitzFamily base_algebra(int dim);

// Drop input coordinates: first r2 matrices, first s2 columns of each.
HurwitzFamily restrict_family(const HurwitzFamily& f, int r2, int s2);

// Exchange the two arguments: [r,s,t] -> [s,r,t].
HurwitzFamily swap_family(const HurwitzFamily& f);

// G((x,x'),y) = (F1(x,y), F2(x',y)); requires F1.s == F2.s.
HurwitzFamily direct_sum(const HurwitzFamily& f1, const HurwitzFamily& f2);

// [r,t,t] -> [r+2, 2t, 2t]. Normalizes A_1 = I, lifts the anticommuting
// complex structures J_i = A_{i+1} A_1^T by blocks, and fills the last slot
// from the product J_1...J_q or from the commutant. The exact identity
// check gates the result; failure throws.
HurwitzFamily double_family(const HurwitzFamily& f);

// Derivation tree over {base, swap, restrict, sum, double}.
struct TriplePlan {
    enum class Kind { Base, Swap, Restrict, Sum, Double };
    Kind kind = Kind::Base;
    int base_dim = 1;      // Base
    int r2 = 0, s2 = 0;    // Restrict
    std::vector<TriplePlan> children;

    int r = 0, s = 0, t = 0;  // resulting triple

    int depth() const;
    std::string str() const;  // canonical form, used for deterministic tie-breaks
    HurwitzFamily replay() const;
};

struct PlanResult {
    int t = 0;
    TriplePlan plan;
};

// Smallest t reachable for [r,s,t] with derivations of depth <= budget.
// Upper bound on t_min(r,s); deterministic (lexicographically smallest
// derivation among minimal ones).
PlanResult best_t(int r, int s, int budget = 12);

}  // namespace pharmonic
