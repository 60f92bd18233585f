#pragma once

// Euler invariant of a torus bundle over S^1: the minimum over bases (m, l)
// of the fiber of Delta(m, psi m) + Delta(l, psi l). In the basis (m, l) these
// distances are the off-diagonal entries |c| and |b| of psi, so the invariant
// is min |b| + |c| over the GL(2,Z)-conjugacy class of psi.
//
// The search works on the binary quadratic form
//     f_psi(x, y) = omega(v, psi v) = c x^2 + (d - a) x y - b y^2,
// for which conjugation by P corresponds to f -> det(P) * f o P^-1. The trace
// t is fixed on the class and the form determines the matrix given t, so
// conjugates of cost k are forms (A, B, C) with |A| + |C| = k and
// B^2 - 4AC = t^2 - 4. Class membership is decided by reduction theory.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>

#include "topocalc/errors.hpp"
#include "topocalc/slope.hpp"

namespace topocalc {

struct TorusBundleMonodromy {
    Matrix2 psi;

    void validate() const {
        if (psi.det() != 1) throw ValidationError("torus bundle monodromy must have determinant 1");
    }
    bool is_anosov() const { return std::llabs(psi.trace()) > 2; }
};

/// Sol manifolds have generalized volume 0.
inline double volume(const TorusBundleMonodromy&) { return 0.0; }

struct BinaryForm {
    std::int64_t a = 0, b = 0, c = 0;

    std::int64_t discriminant() const { return b * b - 4 * a * c; }
    std::uint64_t cost() const { return static_cast<std::uint64_t>(std::llabs(a) + std::llabs(c)); }

    static BinaryForm of(const Matrix2& m) { return {m.c, m.d - m.a, -m.b}; }

    friend auto operator<=>(const BinaryForm&, const BinaryForm&) = default;
};

namespace detail {

inline std::int64_t isqrt(std::int64_t n) {
    if (n <= 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
    const std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

// Comparisons against sqrt(D) for a non-square D > 0.
inline bool below_root(std::int64_t x, std::int64_t D) { return x < 0 || x * x < D; }
inline bool above_root(std::int64_t y, std::int64_t D) { return y > 0 && y * y > D; }

inline bool is_reduced_indefinite(const BinaryForm& f, std::int64_t D) {
    const std::int64_t two_a = 2 * std::llabs(f.a);
    return f.b > 0 && below_root(f.b, D) && below_root(two_a - f.b, D) && above_root(two_a + f.b, D);
}

// One step of the reduction operator rho(a, b, c) = (c, r, (r^2 - D)/(4c)).
inline BinaryForm rho(const BinaryForm& f, std::int64_t D) {
    const std::int64_t abs_c = std::llabs(f.c);
    const std::int64_t two_c = 2 * abs_c;
    std::int64_t r;
    if (f.c * f.c > D) {
        r = floor_mod(-f.b, two_c);
        if (r > abs_c) r -= two_c;
    } else {
        const std::int64_t s = isqrt(D);
        r = s - floor_mod(s + f.b, two_c);
    }
    return {f.c, r, (r * r - D) / (4 * f.c)};
}

// Least form in the cycle of reduced forms properly equivalent to f.
inline BinaryForm indefinite_key(BinaryForm f, std::int64_t D) {
    for (int guard = 0; !is_reduced_indefinite(f, D); ++guard) {
        if (guard > 10000) throw ValidationError("indefinite form reduction did not terminate");
        f = rho(f, D);
    }
    BinaryForm best = f;
    BinaryForm g = rho(f, D);
    for (int guard = 0; !(g == f); ++guard) {
        if (guard > 100000) throw ValidationError("reduced cycle did not close");
        best = std::min(best, g);
        g = rho(g, D);
    }
    return best;
}

// Reduced representative of a definite form, tagged by sign through a.
inline BinaryForm definite_key(BinaryForm f) {
    const bool negative = f.a < 0;
    if (negative) f = {-f.a, f.b, -f.c};
    for (;;) {
        if (f.a > f.c) {
            f = {f.c, -f.b, f.a};
            continue;
        }
        if (f.b > f.a || f.b <= -f.a) {
            const std::int64_t D = f.discriminant();
            std::int64_t r = floor_mod(f.b, 2 * f.a);
            if (r > f.a) r -= 2 * f.a;
            f = {f.a, r, (r * r - D) / (4 * f.a)};
            continue;
        }
        break;
    }
    if (f.b < 0 && (f.b == -f.a || f.a == f.c)) f.b = -f.b;
    if (negative) f = {-f.a, f.b, -f.c};
    return f;
}

// Invariant of the GL(2,Z) class: proper classes of f and of its image
// under the orientation-reversing conjugation (A, B, C) -> (-A, B, -C).
inline BinaryForm gl_class_key(const BinaryForm& f) {
    const std::int64_t D = f.discriminant();
    const BinaryForm g{-f.a, f.b, -f.c};
    if (D > 0) return std::min(indefinite_key(f, D), indefinite_key(g, D));
    return std::min(definite_key(f), definite_key(g));
}

}  // namespace detail

/// min |b| + |c| over all GL(2,Z)-conjugates of psi.
inline std::uint64_t sol_torus_bundle_e(const TorusBundleMonodromy& m) {
    m.validate();
    const std::int64_t t = m.psi.trace();
    const BinaryForm f = BinaryForm::of(m.psi);
    const std::int64_t D = t * t - 4;
    if (D == 0) {
        // Parabolic: f = g * (u x + v y)^2 up to sign; the minimum is the content g.
        return static_cast<std::uint64_t>(std::gcd(std::gcd(std::llabs(f.a), std::llabs(f.b)), std::llabs(f.c)));
    }
    const BinaryForm key = detail::gl_class_key(f);
    const auto limit = static_cast<std::int64_t>(f.cost());
    for (std::int64_t k = 0; k < limit; ++k) {
        for (std::int64_t a = -k; a <= k; ++a) {
            const std::int64_t rest = k - std::llabs(a);
            for (std::int64_t c : {rest, -rest}) {
                const std::int64_t b2 = D + 4 * a * c;
                if (b2 < 0) continue;
                const std::int64_t b = detail::isqrt(b2);
                if (b * b != b2) continue;
                for (std::int64_t sb : {b, -b}) {
                    const BinaryForm cand{a, sb, c};
                    if (cand.a == 0 || cand.c == 0) continue;  // would make D a square
                    if (detail::gl_class_key(cand) == key) return static_cast<std::uint64_t>(k);
                }
                if (rest == 0) break;
            }
        }
    }
    return f.cost();
}

}  // namespace topocalc
