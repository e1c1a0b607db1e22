#include "pharmonic/multipoly.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pharmonic {

bool GradedLexLess::operator()(const Mono& a, const Mono& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("negative variable count");
}

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
    MultiPoly p(nvars);
    p.add_term(Mono(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::out_of_range("variable index out of range");
    MultiPoly p(nvars);
    Mono m(nvars, 0);
    m[i] = 1;
    p.add_term(m, Rat(1));
    return p;
}

MultiPoly MultiPoly::radial_power(int nvars, int m) {
    if (m < 0 || m % 2 != 0) throw std::invalid_argument("radial_power needs even m >= 0");
    MultiPoly r2(nvars);
    for (int i = 0; i < nvars; ++i) {
        Mono mono(nvars, 0);
        mono[i] = 2;
        r2.add_term(mono, Rat(1));
    }
    MultiPoly out = MultiPoly::constant(nvars, Rat(1));
    for (int j = 0; j < m / 2; ++j) out = out * r2;
    return out;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // graded order: the last term has maximal total degree
    const Mono& m = terms_.rbegin()->first;
    return std::accumulate(m.begin(), m.end(), 0);
}

bool MultiPoly::is_homogeneous(int k) const {
    for (const auto& [m, c] : terms_) {
        if (std::accumulate(m.begin(), m.end(), 0) != k) return false;
    }
    return true;
}

const Rat& MultiPoly::coeff(const Mono& m) const {
    static const Rat zero(0);
    auto it = terms_.find(m);
    return it == terms_.end() ? zero : it->second;
}

void MultiPoly::add_term(const Mono& m, const Rat& c) {
    if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::check_same_space(const MultiPoly& rhs) const {
    if (nvars_ != rhs.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    check_same_space(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    check_same_space(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_space(b);
    MultiPoly out(a.nvars_);
    Mono m(a.nvars_, 0);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    MultiPoly out(nvars_);
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

MultiPoly MultiPoly::partial(int i) const {
    if (i < 0 || i >= nvars_) throw std::out_of_range("partial: variable index out of range");
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[i] == 0) continue;
        Mono d = m;
        d[i] -= 1;
        out.add_term(d, c * m[i]);
    }
    return out;
}

MultiPoly MultiPoly::laplacian() const {
    MultiPoly out(nvars_);
    for (int i = 0; i < nvars_; ++i) out += partial(i).partial(i);
    return out;
}

MultiPoly MultiPoly::euler() const {
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        const int deg = std::accumulate(m.begin(), m.end(), 0);
        out.add_term(m, c * deg);
    }
    return out;
}

double MultiPoly::eval(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("eval: point dimension mismatch");
    double sum = 0.0;
    for (const auto& [m, c] : terms_) {
        double term = to_double(c);
        for (int i = 0; i < nvars_; ++i) {
            for (int e = 0; e < m[i]; ++e) term *= x[i];
        }
        sum += term;
    }
    return sum;
}

Rat MultiPoly::eval_exact(std::span<const Rat> x) const {
    if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("eval_exact: point dimension mismatch");
    Rat sum(0);
    for (const auto& [m, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < nvars_; ++i) {
            for (int e = 0; e < m[i]; ++e) term *= x[i];
        }
        sum += term;
    }
    return sum;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            os << "*x" << (i + 1);
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

}  // namespace pharmonic
