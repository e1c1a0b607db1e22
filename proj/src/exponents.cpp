#include "pharmonic/exponents.hpp"

#include <cmath>
#include <stdexcept>

namespace pharmonic {

PValue PValue::parse(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "Inf") return PValue::infinite();
    if (text.find('/') != std::string::npos) return PValue::of(rat_from_string(text));
    try {
        size_t pos = 0;
        double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        // integers round-trip exactly; keep them as exact rationals
        if (v == std::floor(v) && std::abs(v) < 1e15)
            return PValue::of(Rat(static_cast<long>(v)));
        return PValue::of(v);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse p value: " + text);
    }
}

std::string PValue::str() const {
    if (inf) return "inf";
    if (exact) return exact->get_str();
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

ExponentProfile gamma_profile(int n, int k, const PValue& p) {
    if (n < 2 || k < 1) throw std::invalid_argument("gamma_profile: need n >= 2, k >= 1");
    if (!p.inf && p.value < 1.0) throw std::invalid_argument("gamma_profile: p < 1");

    ExponentProfile e;
    e.n = n;
    e.k = k;
    e.p = p;
    const long kk = static_cast<long>(k) * (k + n - 2);

    if (p.inf) {
        e.theta = 0.0;
        e.gamma = 1.0;
        e.gamma_exact = Rat(1);
        e.tau = 0.0;
        // limits of (gamma-1)(p-1) and (gamma-1)p/2 as p grows
        e.a = static_cast<double>(kk - (n - 1));
        e.nu = e.a / 2.0;
        return e;
    }

    const double pd = p.value;
    e.theta = 1.0 / pd;

    if (pd == 1.0) {
        Rat g(kk, n - 1);
        g.canonicalize();
        e.gamma_exact = g;
        e.gamma = to_double(g);
    } else if (k == 1) {
        e.gamma = 1.0;
        e.gamma_exact = Rat(1);
    } else {
        // larger root of gamma^2 (p-1) + gamma (n-p) - k(k+n-2);
        // pick the algebraic form whose numerator adds positives.
        const double disc = (pd - n) * (pd - n) + 4.0 * (pd - 1.0) * static_cast<double>(kk);
        const double sq = std::sqrt(disc);
        double g;
        if (pd >= n)
            g = (pd - n + sq) / (2.0 * (pd - 1.0));
        else
            g = 2.0 * static_cast<double>(kk) / (sq + n - pd);
        // one Newton step on the quadratic tightens the residual to rounding
        const double f = g * g * (pd - 1.0) + g * (n - pd) - static_cast<double>(kk);
        const double df = 2.0 * g * (pd - 1.0) + (n - pd);
        if (df != 0.0) g -= f / df;
        e.gamma = g;
        if (p.exact) {
            const Rat& pq = *p.exact;
            Rat disc_q = (pq - n) * (pq - n) + Rat(4) * (pq - 1) * Rat(kk);
            if (auto root = exact_sqrt(disc_q)) {
                Rat gq = (pq - n + *root) / (Rat(2) * (pq - 1));
                gq.canonicalize();
                e.gamma_exact = gq;
                e.gamma = to_double(gq);
            }
        }
    }

    e.tau = (1.0 - e.theta) * (e.gamma - 1.0);
    e.a = (e.gamma - 1.0) * (pd - 1.0);
    e.nu = (e.gamma - 1.0) * pd / 2.0;
    return e;
}

double quadratic_residual(const ExponentProfile& e) {
    if (e.p.inf || e.p.value == 1.0) return 0.0;
    const double pd = e.p.value;
    const double kk = static_cast<double>(e.k) * (e.k + e.n - 2);
    return e.gamma * e.gamma * (pd - 1.0) + e.gamma * (e.n - pd) - kk;
}

double tau_residual(const ExponentProfile& e) {
    const double th = e.theta;
    const double kk = static_cast<double>(e.k) * (e.k + e.n - 2);
    return e.tau * e.tau + e.tau * (1.0 + th * (e.n - 2)) + th * (1.0 - th) * (e.n - 1 - kk);
}

}  // namespace pharmonic
