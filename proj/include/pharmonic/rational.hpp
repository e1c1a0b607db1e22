#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace pharmonic {

// Exact arbitrary-precision rational; all identity checks run over this type.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline double to_double(const Rat& q) { return q.get_d(); }

// Parses "3", "-7/2" or a plain decimal integer string.
inline Rat rat_from_string(const std::string& text) {
    Rat q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + text);
    q.canonicalize();
    return q;
}

inline std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Int root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

inline std::optional<Rat> exact_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    auto num = exact_sqrt(Int(q.get_num()));
    auto den = exact_sqrt(Int(q.get_den()));
    if (!num || !den) return std::nullopt;
    Rat r(*num, *den);
    r.canonicalize();
    return r;
}

// Splits d = a^2 * b with b squarefree; returns (a, b). Trial division,
// intended for desk-scale radicands.
inline std::pair<std::uint64_t, std::uint64_t> square_free_split(std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("square_free_split(0)");
    std::uint64_t a = 1, b = 1;
    for (std::uint64_t p = 2; p * p <= d; ++p) {
        if (d % p != 0) continue;
        unsigned e = 0;
        while (d % p == 0) {
            d /= p;
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2) a *= p;
        if (e % 2 == 1) b *= p;
    }
    b *= d;  // leftover prime
    return {a, b};
}

}  // namespace pharmonic
