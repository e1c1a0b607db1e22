#include "pharmonic/hurwitz.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace pharmonic {

RatMat::RatMat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rat(1));
    return m;
}

Rat RatMat::at(int i, int j) const {
    const auto& row = data_.at(i);
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == j) return it->second;
    return Rat(0);
}

void RatMat::set(int i, int j, const Rat& v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index");
    auto& row = data_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == j) {
        if (v == 0)
            row.erase(it);
        else
            it->second = v;
    } else if (v != 0) {
        row.insert(it, {j, v});
    }
}

RatMat RatMat::transpose() const {
    RatMat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) out.data_[j].emplace_back(i, v);
    // rows collected in increasing i, already sorted per row
    return out;
}

RatMat RatMat::operator*(const RatMat& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RatMat out(rows_, rhs.cols_);
    std::map<int, Rat> acc;
    for (int i = 0; i < rows_; ++i) {
        acc.clear();
        for (const auto& [k, a] : data_[i]) {
            for (const auto& [j, b] : rhs.data_[k]) acc[j] += a * b;
        }
        auto& row = out.data_[i];
        for (auto& [j, v] : acc) {
            if (v != 0) row.emplace_back(j, v);
        }
    }
    return out;
}

RatMat RatMat::operator+(const RatMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    RatMat out(rows_, cols_);
    for (int i = 0; i < rows_; ++i) {
        auto ia = data_[i].begin(), ea = data_[i].end();
        auto ib = rhs.data_[i].begin(), eb = rhs.data_[i].end();
        auto& row = out.data_[i];
        while (ia != ea || ib != eb) {
            if (ib == eb || (ia != ea && ia->first < ib->first)) {
                row.push_back(*ia++);
            } else if (ia == ea || ib->first < ia->first) {
                row.push_back(*ib++);
            } else {
                Rat v = ia->second + ib->second;
                if (v != 0) row.emplace_back(ia->first, v);
                ++ia;
                ++ib;
            }
        }
    }
    return out;
}

RatMat RatMat::operator-() const {
    RatMat out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) out.data_[i].emplace_back(j, -v);
    return out;
}

RatMat RatMat::operator*(const Rat& c) const {
    RatMat out(rows_, cols_);
    if (c == 0) return out;
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) out.data_[i].emplace_back(j, v * c);
    return out;
}

bool RatMat::is_zero() const {
    for (const auto& row : data_)
        if (!row.empty()) return false;
    return true;
}

bool RatMat::is_scalar(const Rat& c) const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i) {
        const auto& row = data_[i];
        if (c == 0) {
            if (!row.empty()) return false;
        } else {
            if (row.size() != 1 || row[0].first != i || row[0].second != c) return false;
        }
    }
    return true;
}

bool RatMat::is_skew() const {
    if (rows_ != cols_) return false;
    return *this == -transpose();
}

std::optional<RatMat::SignedPerm> RatMat::as_signed_perm() const {
    if (rows_ != cols_) return std::nullopt;
    SignedPerm sp;
    sp.perm.assign(cols_, -1);
    sp.sign.assign(cols_, Rat(0));
    std::vector<char> row_used(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        if (data_[i].size() > 1) return std::nullopt;
        for (const auto& [j, v] : data_[i]) {
            if (sp.perm[j] != -1) return std::nullopt;
            sp.perm[j] = i;
            sp.sign[j] = v;
            row_used[i] = 1;
        }
    }
    for (int j = 0; j < cols_; ++j)
        if (sp.perm[j] == -1) return std::nullopt;
    for (int i = 0; i < rows_; ++i)
        if (!row_used[i]) return std::nullopt;
    return sp;
}

RatMat kron_sigma(const RatMat& m) {
    const int t = m.rows();
    RatMat out(2 * t, 2 * m.cols());
    for (int i = 0; i < t; ++i) {
        for (const auto& [j, v] : m.row(i)) {
            out.set(i, j, v);
            out.set(t + i, m.cols() + j, -v);
        }
    }
    return out;
}

RatMat kron_eps(int t) {
    RatMat out(2 * t, 2 * t);
    for (int i = 0; i < t; ++i) {
        out.set(i, t + i, Rat(-1));
        out.set(t + i, i, Rat(1));
    }
    return out;
}

RatMat kron_mu(const RatMat& m) {
    const int t = m.rows();
    RatMat out(2 * t, 2 * m.cols());
    for (int i = 0; i < t; ++i) {
        for (const auto& [j, v] : m.row(i)) {
            out.set(i, m.cols() + j, v);
            out.set(t + i, j, v);
        }
    }
    return out;
}

bool HurwitzFamily::matrix_equations_ok() const {
    if (static_cast<int>(mats.size()) != r) return false;
    for (const RatMat& a : mats)
        if (a.rows() != t || a.cols() != s) return false;
    for (int i = 0; i < r; ++i) {
        RatMat ti = mats[i].transpose();
        for (int j = i; j < r; ++j) {
            RatMat sum = ti * mats[j] + mats[j].transpose() * mats[i];
            if (i == j) {
                if (!sum.is_scalar(Rat(2))) return false;
            } else {
                if (!sum.is_zero()) return false;
            }
        }
    }
    return true;
}

MultiPoly HurwitzFamily::component_poly(int i) const {
    MultiPoly p(r + s);
    Mono m(r + s, 0);
    for (int l = 0; l < r; ++l) {
        for (const auto& [col, v] : mats[l].row(i)) {
            std::fill(m.begin(), m.end(), 0);
            m[l] = 1;
            m[r + col] = 1;
            p.add_term(m, v);
        }
    }
    return p;
}

MultiPoly HurwitzFamily::identity_defect() const {
    MultiPoly sum(r + s);
    for (int i = 0; i < t; ++i) {
        MultiPoly fi = component_poly(i);
        sum += fi * fi;
    }
    MultiPoly x2(r + s), y2(r + s);
    for (int l = 0; l < r; ++l) {
        Mono m(r + s, 0);
        m[l] = 2;
        x2.add_term(m, Rat(1));
    }
    for (int l = 0; l < s; ++l) {
        Mono m(r + s, 0);
        m[r + l] = 2;
        y2.add_term(m, Rat(1));
    }
    return sum - x2 * y2;
}

namespace {

// Cayley-Dickson multiplication table: e_a * e_b = sign * e_idx.
struct AlgebraTable {
    int dim;
    std::vector<std::vector<std::pair<int, int>>> prod;  // [a][b] -> (idx, sign)
};

AlgebraTable cd_double(const AlgebraTable& base) {
    const int d = base.dim;
    AlgebraTable out;
    out.dim = 2 * d;
    out.prod.assign(2 * d, std::vector<std::pair<int, int>>(2 * d));
    auto conj_sign = [&](int idx) { return idx == 0 ? 1 : -1; };
    for (int a = 0; a < 2 * d; ++a) {
        for (int b = 0; b < 2 * d; ++b) {
            // (a1, a2)(b1, b2) = (a1 b1 - conj(b2) a2, b2 a1 + a2 conj(b1))
            const int a1 = a % d, b1 = b % d;
            const bool ahi = a >= d, bhi = b >= d;
            int idx, sign;
            if (!ahi && !bhi) {
                auto [i, s] = base.prod[a1][b1];
                idx = i;
                sign = s;
            } else if (ahi && !bhi) {
                // a2 conj(b1)
                auto [i, s] = base.prod[a1][b1];
                idx = d + i;
                sign = s * conj_sign(b1);
            } else if (!ahi && bhi) {
                // b2 a1
                auto [i, s] = base.prod[b1][a1];
                idx = d + i;
                sign = s;
            } else {
                // -conj(b2) a2
                auto [i, s] = base.prod[b1][a1];
                idx = i;
                sign = -s * conj_sign(b1);
            }
            out.prod[a][b] = {idx, sign};
        }
    }
    return out;
}

}  // namespace

HurwitzFamily base_algebra(int dim) {
    if (dim != 1 && dim != 2 && dim != 4 && dim != 8)
        throw std::invalid_argument("base_algebra: dim must be one of 1, 2, 4, 8");
    AlgebraTable table{1, {{{0, 1}}}};
    for (int d = 1; d < dim; d *= 2) table = cd_double(table);
    HurwitzFamily f;
    f.r = f.s = f.t = dim;
    f.mats.reserve(dim);
    for (int l = 0; l < dim; ++l) {
        RatMat a(dim, dim);
        for (int m = 0; m < dim; ++m) {
            auto [idx, sign] = table.prod[l][m];
            a.set(idx, m, Rat(sign));
        }
        f.mats.push_back(std::move(a));
    }
    if (!f.matrix_equations_ok()) throw std::logic_error("base algebra failed the Hurwitz equations");
    return f;
}

HurwitzFamily restrict_family(const HurwitzFamily& f, int r2, int s2) {
    if (r2 < 1 || r2 > f.r || s2 < 1 || s2 > f.s)
        throw std::invalid_argument("restrict: target out of range");
    HurwitzFamily out;
    out.r = r2;
    out.s = s2;
    out.t = f.t;
    for (int l = 0; l < r2; ++l) {
        RatMat a(f.t, s2);
        for (int i = 0; i < f.t; ++i)
            for (const auto& [j, v] : f.mats[l].row(i))
                if (j < s2) a.set(i, j, v);
        out.mats.push_back(std::move(a));
    }
    return out;
}

HurwitzFamily swap_family(const HurwitzFamily& f) {
    HurwitzFamily out;
    out.r = f.s;
    out.s = f.r;
    out.t = f.t;
    out.mats.assign(f.s, RatMat(f.t, f.r));
    for (int l = 0; l < f.r; ++l)
        for (int i = 0; i < f.t; ++i)
            for (const auto& [m, v] : f.mats[l].row(i)) out.mats[m].set(i, l, v);
    return out;
}

HurwitzFamily direct_sum(const HurwitzFamily& f1, const HurwitzFamily& f2) {
    if (f1.s != f2.s) throw std::invalid_argument("direct_sum: shared input dimension differs");
    HurwitzFamily out;
    out.r = f1.r + f2.r;
    out.s = f1.s;
    out.t = f1.t + f2.t;
    for (int l = 0; l < f1.r; ++l) {
        RatMat a(out.t, out.s);
        for (int i = 0; i < f1.t; ++i)
            for (const auto& [j, v] : f1.mats[l].row(i)) a.set(i, j, v);
        out.mats.push_back(std::move(a));
    }
    for (int l = 0; l < f2.r; ++l) {
        RatMat a(out.t, out.s);
        for (int i = 0; i < f2.t; ++i)
            for (const auto& [j, v] : f2.mats[l].row(i)) a.set(f1.t + i, j, v);
        out.mats.push_back(std::move(a));
    }
    return out;
}

namespace {

// Searches the commutant of {J_1..J_q} for a skew Y with Y^2 = -I. The J's
// must be signed permutations; the constraints then couple entries pairwise,
// so the solution space splits into proportionality classes found by union-find.
class CommutantSolver {
public:
    CommutantSolver(int t) : t_(t), parent_(t * t), weight_(t * t, Rat(1)), zero_(t * t, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    // cell a = w * cell b
    void relate(int a, const Rat& w, int b) {
        auto [ra, wa] = find(a);
        auto [rb, wb] = find(b);
        if (ra == rb) {
            if (wa != w * wb) mark_zero(ra);  // inconsistent ratio forces the class to 0
            return;
        }
        parent_[ra] = rb;
        weight_[ra] = w * wb / wa;
        if (zero_[ra]) mark_zero(rb);
    }

    void add_commute_constraint(const RatMat::SignedPerm& j) {
        // Y J = J Y, J column m = sign[m] e_perm[m]:
        // sign[m] * Y(i, perm[m]) = sign[inv(i)] * Y(inv(i), m)
        const int t = t_;
        std::vector<int> inv(t);
        for (int m = 0; m < t; ++m) inv[j.perm[m]] = m;
        for (int i = 0; i < t; ++i)
            for (int m = 0; m < t; ++m)
                relate(cell(i, j.perm[m]), j.sign[inv[i]] / j.sign[m], cell(inv[i], m));
    }

    void add_skew_constraint() {
        for (int i = 0; i < t_; ++i) {
            mark_zero(find(cell(i, i)).first);
            for (int j = i + 1; j < t_; ++j) relate(cell(i, j), Rat(-1), cell(j, i));
        }
    }

    // One basis element per live class: class representative set to 1.
    std::vector<RatMat> basis() {
        std::map<int, std::vector<std::pair<int, Rat>>> classes;
        for (int c = 0; c < t_ * t_; ++c) {
            auto [root, w] = find(c);
            if (zero_[root]) continue;
            classes[root].emplace_back(c, w);
        }
        std::vector<RatMat> out;
        for (auto& [root, cells] : classes) {
            RatMat y(t_, t_);
            for (auto& [c, w] : cells) y.set(c / t_, c % t_, w);
            out.push_back(std::move(y));
        }
        return out;
    }

private:
    int t_;
    std::vector<int> parent_;
    std::vector<Rat> weight_;  // cell = weight * parent
    std::vector<char> zero_;

    int cell(int i, int j) const { return i * t_ + j; }

    // value(a) = weight_[a] * value(parent_[a]); weight of a root is 1.
    std::pair<int, Rat> find(int a) {
        if (parent_[a] == a) return {a, weight_[a]};
        auto [root, wp] = find(parent_[a]);
        weight_[a] *= wp;
        parent_[a] = root;
        return {root, weight_[a]};
    }

    void mark_zero(int a) {
        auto [root, w] = find(a);
        zero_[root] = 1;
    }
};

// Normalize Y0 with Y0^2 = -c I to Y with Y^2 = -I when sqrt(c) is rational.
std::optional<RatMat> normalize_complex_structure(const RatMat& y0) {
    RatMat sq = y0 * y0;
    if (sq.is_zero()) return std::nullopt;
    Rat diag = sq.at(0, 0);
    if (diag >= 0 || !sq.is_scalar(diag)) return std::nullopt;
    auto root = exact_sqrt(Rat(-diag));
    if (!root) return std::nullopt;
    return y0 * (Rat(1) / *root);
}

std::optional<RatMat> find_commutant_structure(const std::vector<RatMat>& js, int t) {
    std::vector<RatMat::SignedPerm> perms;
    for (const RatMat& j : js) {
        auto sp = j.as_signed_perm();
        if (!sp) return std::nullopt;
        perms.push_back(std::move(*sp));
    }
    CommutantSolver solver(t);
    solver.add_skew_constraint();
    for (const auto& sp : perms) solver.add_commute_constraint(sp);
    std::vector<RatMat> basis = solver.basis();
    for (const RatMat& y : basis) {
        if (auto n = normalize_complex_structure(y)) return n;
    }
    for (size_t a = 0; a < basis.size(); ++a) {
        for (size_t b = a + 1; b < basis.size(); ++b) {
            if (auto n = normalize_complex_structure(basis[a] + basis[b])) return n;
            if (auto n = normalize_complex_structure(basis[a] + -basis[b])) return n;
        }
    }
    return std::nullopt;
}

}  // namespace

HurwitzFamily double_family(const HurwitzFamily& f) {
    if (f.s != f.t) throw std::invalid_argument("double: family must have s == t");
    if (!f.matrix_equations_ok()) throw std::invalid_argument("double: input family is not Hurwitz");
    const int t = f.t;
    const int q = f.r - 1;

    // Normalize so the first matrix is the identity; the rest become
    // anticommuting complex structures J_i.
    RatMat a1t = f.mats[0].transpose();
    std::vector<RatMat> js;
    js.reserve(q);
    for (int l = 1; l < f.r; ++l) js.push_back(f.mats[l] * a1t);

    // Last slot: product of all J's when it is itself a complex structure
    // in the right position (commuting -> off-diagonal block, anticommuting
    // -> diagonal block); otherwise search the commutant.
    RatMat p = RatMat::identity(t);
    for (const RatMat& j : js) p = p * j;

    auto commutes_all = [&](const RatMat& y) {
        for (const RatMat& j : js)
            if (!(y * j + -(j * y)).is_zero()) return false;
        return true;
    };
    auto anticommutes_all = [&](const RatMat& y) {
        for (const RatMat& j : js)
            if (!(y * j + j * y).is_zero()) return false;
        return true;
    };
    auto is_structure = [](const RatMat& y) {
        return y.is_skew() && (y * y).is_scalar(Rat(-1));
    };

    RatMat last;
    if (q >= 1 && is_structure(p) && commutes_all(p)) {
        last = kron_mu(p);
    } else if (q >= 1 && is_structure(p) && anticommutes_all(p)) {
        last = kron_sigma(p);
    } else {
        auto y = find_commutant_structure(js, t);
        if (!y) throw std::runtime_error("double: no rational complex structure completes this family");
        last = kron_mu(*y);
    }

    HurwitzFamily out;
    out.r = f.r + 2;
    out.s = out.t = 2 * t;
    out.mats.push_back(RatMat::identity(2 * t));
    for (const RatMat& j : js) out.mats.push_back(kron_sigma(j));
    out.mats.push_back(kron_eps(t));
    out.mats.push_back(std::move(last));
    if (!out.matrix_equations_ok())
        throw std::runtime_error("double: constructed family failed the exact identity check");
    return out;
}

int TriplePlan::depth() const {
    int d = 0;
    for (const TriplePlan& c : children) d = std::max(d, c.depth());
    return d + 1;
}

std::string TriplePlan::str() const {
    switch (kind) {
        case Kind::Base:
            return "base(" + std::to_string(base_dim) + ")";
        case Kind::Swap:
            return "swap(" + children[0].str() + ")";
        case Kind::Restrict:
            return "restrict(" + children[0].str() + "," + std::to_string(r2) + "," +
                   std::to_string(s2) + ")";
        case Kind::Sum:
            return "sum(" + children[0].str() + "," + children[1].str() + ")";
        case Kind::Double:
            return "double(" + children[0].str() + ")";
    }
    return "?";
}

HurwitzFamily TriplePlan::replay() const {
    switch (kind) {
        case Kind::Base:
            return base_algebra(base_dim);
        case Kind::Swap:
            return swap_family(children[0].replay());
        case Kind::Restrict:
            return restrict_family(children[0].replay(), r2, s2);
        case Kind::Sum:
            return direct_sum(children[0].replay(), children[1].replay());
        case Kind::Double:
            return double_family(children[0].replay());
    }
    throw std::logic_error("unknown plan node");
}

}  // namespace pharmonic
