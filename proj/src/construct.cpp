#include "pharmonic/construct.hpp"

#include <array>
#include <stdexcept>

namespace pharmonic {

namespace {

void require_candidate_shape(const HarmonicCandidate& h) {
    if (h.n < 2 || h.k < 1 || h.N != static_cast<int>(h.components.size()))
        throw std::invalid_argument("malformed candidate");
    for (const Component& c : h.components) {
        if (c.nvars() != h.n) throw std::invalid_argument("component dimension mismatch");
        if (!c.poly.is_homogeneous(h.k))
            throw std::invalid_argument("component is not homogeneous of the stated degree");
    }
}

}  // namespace

AdmissibilityReport verify(const HarmonicCandidate& h) {
    require_candidate_shape(h);
    AdmissibilityReport rep;

    rep.h1_ok = true;
    for (int j = 0; j < h.N; ++j) {
        MultiPoly lap = h.components[j].poly.laplacian();
        if (!lap.is_zero()) {
            rep.h1_ok = false;
            rep.h1_witnesses.emplace_back(j, std::move(lap));
        }
    }

    MultiPoly sq = component_square_sum(h.components);
    MultiPoly h2_defect = sq - MultiPoly::radial_power(h.n, 2 * h.k);
    rep.h2_ok = h2_defect.is_zero();
    if (!rep.h2_ok) rep.h2_witness = std::move(h2_defect);

    MultiPoly grad_sq(h.n);
    for (const Component& c : h.components) {
        const Rat w = c.scale * c.scale * Rat(static_cast<unsigned long>(c.radicand));
        for (int i = 0; i < h.n; ++i) {
            MultiPoly d = c.poly.partial(i);
            grad_sq += (d * d) * w;
        }
    }
    MultiPoly h3_defect =
        grad_sq - MultiPoly::radial_power(h.n, 2 * h.k - 2) * Rat(grad_sq_constant(h.n, h.k));
    rep.h3_ok = h3_defect.is_zero();
    if (!rep.h3_ok) rep.h3_witness = std::move(h3_defect);

    rep.h4_ok = true;
    for (int j = 0; j < h.N; ++j) {
        MultiPoly defect = h.components[j].poly.euler() - h.components[j].poly * Rat(h.k);
        if (!defect.is_zero()) {
            rep.h4_ok = false;
            rep.h4_witnesses.emplace_back(j, std::move(defect));
        }
    }

    // (h1) and (h2) force (h3) and (h4) for homogeneous components; hitting
    // this means the checker itself is broken.
    if (rep.h1_ok && rep.h2_ok && !(rep.h3_ok && rep.h4_ok))
        throw std::logic_error("admissibility checks inconsistent");
    return rep;
}

HarmonicCandidate build_simple(int n) {
    if (n < 2) throw std::invalid_argument("build_simple: n >= 2 required");
    HarmonicCandidate h;
    h.n = n;
    h.k = 2;
    h.provenance = "simple";
    // (x_i^2 - x_j^2) / sqrt(n-1) followed by sqrt(2n/(n-1)) x_i x_j; both
    // packaged over the common denominator 2(n-1) so n = 2 yields exactly
    // (x_1^2 - x_2^2, 2 x_1 x_2).
    const auto nm1 = static_cast<std::uint64_t>(n - 1);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            MultiPoly p(n);
            Mono mi(n, 0), mj(n, 0);
            mi[i] = 2;
            mj[j] = 2;
            p.add_term(mi, Rat(1));
            p.add_term(mj, Rat(-1));
            h.components.emplace_back(Rat(1, n - 1), nm1, std::move(p));
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            MultiPoly p(n);
            Mono m(n, 0);
            m[i] = 1;
            m[j] = 1;
            p.add_term(m, Rat(2));
            h.components.emplace_back(Rat(1, 2 * (n - 1)), 2ull * n * nm1, std::move(p));
        }
    }
    h.N = static_cast<int>(h.components.size());
    return h;
}

namespace {

MultiPoly split_difference(int n, int m) {
    // x_1^2 + ... + x_m^2 - x_{m+1}^2 - ... - x_{2m}^2 (n may exceed 2m)
    MultiPoly p(n);
    for (int i = 0; i < 2 * m; ++i) {
        Mono mono(n, 0);
        mono[i] = 2;
        p.add_term(mono, i < m ? Rat(1) : Rat(-1));
    }
    return p;
}

MultiPoly cross_term(int n, int i, int j, const Rat& c) {
    MultiPoly p(n);
    Mono m(n, 0);
    m[i] = 1;
    m[j] = 1;
    p.add_term(m, c);
    return p;
}

// F_i(y, z) with y = (x_1..x_m), z = (x_{m+1}..x_{2m}) embedded in n variables.
MultiPoly family_component(int n, int m, const HurwitzFamily& f, int i) {
    MultiPoly p(n);
    for (int l = 0; l < f.r; ++l) {
        for (const auto& [col, v] : f.mats[l].row(i)) {
            Mono mono(n, 0);
            mono[l] = 1;
            mono[m + col] = 1;
            p.add_term(mono, v);
        }
    }
    return p;
}

}  // namespace

HarmonicCandidate build_even_simple(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("build_even_simple: even n >= 2 required");
    const int m = n / 2;
    HarmonicCandidate h;
    h.n = n;
    h.k = 2;
    h.provenance = "even-simple";
    h.components.emplace_back(Rat(1), 1, split_difference(n, m));
    for (int i = 0; i < m; ++i)
        for (int j = m; j < n; ++j)
            h.components.emplace_back(Rat(1), 1, cross_term(n, i, j, Rat(2)));
    h.N = static_cast<int>(h.components.size());
    return h;
}

HarmonicCandidate build_hurwitz_even(int n, const HurwitzFamily& f) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("build_hurwitz_even: even n required");
    const int m = n / 2;
    if (f.r != m || f.s != m) throw std::invalid_argument("build_hurwitz_even: family must be [m, m, t]");
    if (!f.matrix_equations_ok()) throw std::invalid_argument("build_hurwitz_even: invalid family");
    HarmonicCandidate h;
    h.n = n;
    h.k = 2;
    h.provenance = "hurwitz-even";
    h.components.emplace_back(Rat(1), 1, split_difference(n, m));
    for (int i = 0; i < f.t; ++i)
        h.components.emplace_back(Rat(2), 1, family_component(n, m, f, i));
    h.N = static_cast<int>(h.components.size());
    return h;
}

HarmonicCandidate build_hurwitz_odd(int n, const HurwitzFamily& f) {
    if (n < 3 || n % 2 != 1) throw std::invalid_argument("build_hurwitz_odd: odd n >= 3 required");
    const int m = (n - 1) / 2;
    if (f.r != m || f.s != m) throw std::invalid_argument("build_hurwitz_odd: family must be [m, m, t]");
    if (!f.matrix_equations_ok()) throw std::invalid_argument("build_hurwitz_odd: invalid family");
    HarmonicCandidate h;
    h.n = n;
    h.k = 2;
    h.provenance = "hurwitz-odd";
    const Rat pref(1, 2 * m);
    const auto rad_a = static_cast<std::uint64_t>(4) * m * m - 1;  // 4m^2 - 1
    const auto rad_b = static_cast<std::uint64_t>(2) * m * m + m;  // 2m^2 + m
    h.components.emplace_back(pref, rad_a, split_difference(n, m));
    {
        MultiPoly p(n);
        for (int i = 0; i < 2 * m; ++i) {
            Mono mono(n, 0);
            mono[i] = 2;
            p.add_term(mono, Rat(1));
        }
        Mono last(n, 0);
        last[n - 1] = 2;
        p.add_term(last, Rat(-2 * m));
        h.components.emplace_back(pref, 1, std::move(p));
    }
    for (int i = 0; i < f.t; ++i)
        h.components.emplace_back(pref * 2, rad_a, family_component(n, m, f, i));
    for (int i = 0; i < 2 * m; ++i)
        h.components.emplace_back(pref * 2, rad_b, cross_term(n, i, n - 1, Rat(1)));
    h.N = static_cast<int>(h.components.size());
    return h;
}

namespace {

struct ComplexPoly {
    MultiPoly re, im;
};

ComplexPoly complex_mul(const ComplexPoly& a, const ComplexPoly& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

std::uint64_t multinomial(int k, const std::vector<int>& alpha) {
    Int num = 1;
    for (int i = 2; i <= k; ++i) num *= i;
    for (int a : alpha) {
        Int fact = 1;
        for (int i = 2; i <= a; ++i) fact *= i;
        num /= fact;
    }
    if (!num.fits_ulong_p()) throw std::overflow_error("multinomial coefficient too large");
    return num.get_ui();
}

void enumerate_alphas(int slots, int total, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (slots == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int a = total; a >= 0; --a) {
        cur.push_back(a);
        enumerate_alphas(slots - 1, total - a, cur, out);
        cur.pop_back();
    }
}

}  // namespace

HarmonicCandidate build_higher_order(int n, int k) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("build_higher_order: even n required");
    if (k < 2) throw std::invalid_argument("build_higher_order: k >= 2 required");
    const int m = n / 2;
    HarmonicCandidate h;
    h.n = n;
    h.k = k;
    h.provenance = "higher-order";

    std::vector<std::vector<int>> alphas;
    std::vector<int> cur;
    enumerate_alphas(m, k, cur, alphas);

    for (const auto& alpha : alphas) {
        ComplexPoly acc{MultiPoly::constant(n, Rat(1)), MultiPoly(n)};
        for (int j = 0; j < m; ++j) {
            ComplexPoly zj{MultiPoly::variable(n, 2 * j), MultiPoly::variable(n, 2 * j + 1)};
            for (int e = 0; e < alpha[j]; ++e) acc = complex_mul(acc, zj);
        }
        const std::uint64_t w = multinomial(k, alpha);
        h.components.emplace_back(Rat(1), w, acc.re);
        h.components.emplace_back(Rat(1), w, acc.im);
    }
    h.N = static_cast<int>(h.components.size());
    return h;
}

HarmonicCandidate build_cubic_frame_3d() {
    const int n = 3;
    auto poly = [&](std::initializer_list<std::pair<std::array<int, 3>, long>> terms) {
        MultiPoly p(n);
        for (const auto& [e, c] : terms) p.add_term(Mono{e[0], e[1], e[2]}, Rat(c));
        return p;
    };
    // The seven cubic solid harmonics; weights solved from the exact
    // requirement sum_j h_j^2 = |x|^6.
    HarmonicCandidate h;
    h.n = n;
    h.k = 3;
    h.provenance = "cubic-frame";
    h.components = {
        {Rat(1, 2), 1, poly({{{0, 0, 3}, 2}, {{2, 0, 1}, -3}, {{0, 2, 1}, -3}})},   // z(2z^2-3x^2-3y^2)
        {Rat(1, 4), 6, poly({{{1, 0, 2}, 4}, {{3, 0, 0}, -1}, {{1, 2, 0}, -1}})},   // x(4z^2-x^2-y^2)
        {Rat(1, 4), 6, poly({{{0, 1, 2}, 4}, {{0, 3, 0}, -1}, {{2, 1, 0}, -1}})},   // y(4z^2-x^2-y^2)
        {Rat(1), 15, poly({{{1, 1, 1}, 1}})},                                       // xyz
        {Rat(1, 2), 15, poly({{{2, 0, 1}, 1}, {{0, 2, 1}, -1}})},                   // z(x^2-y^2)
        {Rat(1, 4), 10, poly({{{3, 0, 0}, 1}, {{1, 2, 0}, -3}})},                   // x(x^2-3y^2)
        {Rat(1, 4), 10, poly({{{2, 1, 0}, 3}, {{0, 3, 0}, -1}})},                   // y(3x^2-y^2)
    };
    h.N = static_cast<int>(h.components.size());
    return h;
}

BestConstruction build_best(int n, int planner_budget) {
    if (n < 2) throw std::invalid_argument("build_best: n >= 2 required");
    BestConstruction out;
    if (n % 2 == 0) {
        const int m = n / 2;
        PlanResult plan = best_t(m, m, planner_budget);
        const int hurwitz_N = 1 + plan.t;
        const int even_N = 1 + (n * n) / 4;
        if (hurwitz_N <= even_N) {
            out.candidate = build_hurwitz_even(n, plan.plan.replay());
            out.method = "hurwitz";
        } else {
            out.candidate = build_even_simple(n);
            out.method = "even";
        }
    } else {
        const int m = (n - 1) / 2;
        PlanResult plan = best_t(m, m, planner_budget);
        const int hurwitz_N = 1 + plan.t + n;
        const int simple_N = n * (n - 1);
        if (hurwitz_N <= simple_N) {
            out.candidate = build_hurwitz_odd(n, plan.plan.replay());
            out.method = "hurwitz";
        } else {
            out.candidate = build_simple(n);
            out.method = "simple";
        }
    }
    if (!verify(out.candidate).all_ok())
        throw std::logic_error("build_best produced an inadmissible candidate");
    return out;
}

std::optional<int> reference_table_N(int n) {
    static const std::array<int, 16> even = {2,  3,  5,  5,  9,  9,  9,  9,
                                             17, 17, 27, 27, 29, 33, 33, 33};  // n = 2,4,...,32
    static const std::array<int, 15> odd = {5,  8,  12, 14, 20, 22, 24, 26,
                                            36, 38, 50, 52, 56, 62, 64};  // n = 3,5,...,31
    if (n < 2 || n > 32) return std::nullopt;
    if (n % 2 == 0) return even[static_cast<size_t>(n / 2 - 1)];
    return odd[static_cast<size_t>((n - 3) / 2)];
}

std::vector<TableRow> n_table(int max_n, int planner_budget) {
    if (max_n < 2) throw std::invalid_argument("n_table: max_n >= 2 required");
    std::vector<TableRow> rows;
    for (int n = 2; n <= max_n; ++n) {
        BestConstruction best = build_best(n, planner_budget);
        TableRow row;
        row.n = n;
        row.N_constructed = best.candidate.N;
        row.N_reference = reference_table_N(n);
        row.gap = row.N_reference && *row.N_reference != row.N_constructed;
        row.method = best.method;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace pharmonic
