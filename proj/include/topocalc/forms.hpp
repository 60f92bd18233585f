#pragma once

// Unimodular symmetric integer forms: rank, signature and parity by exact
// congruence diagonalization, canonical names, and the counts of forms (and
// hence of closed simply connected topological 4-manifolds) of bounded rank.

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "topocalc/errors.hpp"

namespace topocalc {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct UnimodularForm {
    enum class Kind { OddIndefinite, EvenIndefinite, Definite };

    IntMatrix matrix;
    std::int64_t rank = 0;
    std::int64_t positive = 0;  // entries of either sign in a diagonalization
    std::int64_t negative = 0;
    bool even = false;
    Kind kind = Kind::Definite;
    // Even indefinite forms are e8 * E8 + hyperbolic * H, e8 = signature / 8.
    std::int64_t e8 = 0;
    std::int64_t hyperbolic = 0;
    bool orientation_reversed = false;  // definite forms are reported positive

    std::int64_t signature() const { return positive - negative; }
    /// Signature divisible by 16, as Rohlin requires of smooth spin manifolds.
    bool rohlin() const { return signature() % 16 == 0; }

    std::string canonical() const;
    /// Closed simply connected manifold realizing the form, when it is a
    /// connected sum of CP^2, its mirror and S^2 x S^2; empty otherwise.
    std::string manifold() const;
};

namespace detail {

inline std::string multiple(std::int64_t k, const std::string& unit) {
    return k == 1 ? unit : std::to_string(k) + unit;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

}  // namespace detail

inline std::string UnimodularForm::canonical() const {
    switch (kind) {
        case Kind::OddIndefinite:
            return detail::multiple(positive, "⟨1⟩") + "⊕" + detail::multiple(negative, "⟨−1⟩");
        case Kind::EvenIndefinite: {
            std::vector<std::string> parts;
            if (e8 > 0) parts.push_back(detail::multiple(e8, "E₈"));
            if (e8 < 0) parts.push_back("−" + detail::multiple(-e8, "E₈"));
            parts.push_back(detail::multiple(hyperbolic, "H"));
            return detail::join(parts, "⊕");
        }
        case Kind::Definite:
            if (!even) return detail::multiple(rank, "⟨1⟩");
            if (rank == 8) return "E₈";
            return "Definite(even, rank " + std::to_string(rank) + ")";
    }
    return "";
}

inline std::string UnimodularForm::manifold() const {
    if (even) {
        if (kind == Kind::EvenIndefinite && e8 == 0)
            return hyperbolic == 1 ? "S²×S²" : "#" + std::to_string(hyperbolic) + "S²×S²";
        return "";
    }
    // Diagonal odd form: positive copies of CP^2 and negative of its mirror.
    const std::int64_t k = positive, h = negative;
    std::vector<std::string> parts;
    if (k > 0) parts.push_back(k == 1 ? "CP²" : std::to_string(k) + "CP²");
    if (h > 0) parts.push_back(h == 1 ? "CP̄²" : std::to_string(h) + "CP̄²");
    const bool single = k + h == 1 || (k == 1 && h == 1);
    return (single ? "" : "#") + detail::join(parts, "#");
}

inline std::string to_string(UnimodularForm::Kind k) {
    switch (k) {
        case UnimodularForm::Kind::OddIndefinite: return "odd-indefinite";
        case UnimodularForm::Kind::EvenIndefinite: return "even-indefinite";
        case UnimodularForm::Kind::Definite: return "definite";
    }
    return "unknown";
}

inline void require_symmetric(const IntMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw ValidationError("matrix is not square");
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (m[i][j] != m[j][i]) throw ValidationError("matrix is not symmetric");
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline boost::multiprecision::cpp_int determinant(const IntMatrix& m) {
    using boost::multiprecision::cpp_int;
    const std::size_t n = m.size();
    if (n == 0) return 1;
    std::vector<std::vector<cpp_int>> a(n, std::vector<cpp_int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    cpp_int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Counts of positive and negative entries in a rational congruence
/// diagonalization P^T m P.
inline std::pair<std::int64_t, std::int64_t> inertia(const IntMatrix& m) {
    using boost::multiprecision::cpp_rational;
    require_symmetric(m);
    const std::size_t n = m.size();
    std::vector<std::vector<cpp_rational>> a(n, std::vector<cpp_rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    auto swap_index = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        for (auto& row : a) std::swap(row[i], row[j]);
    };
    std::int64_t pos = 0, neg = 0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][piv] == 0) ++piv;
        if (piv == n) {
            // Zero diagonal: x_i <- x_i + x_j for some a[i][j] != 0 makes
            // the new diagonal entry 2 a[i][j].
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a[i][j] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) break;  // the rest of the form vanishes
            for (std::size_t c = 0; c < n; ++c) a[pi][c] += a[pj][c];
            for (std::size_t r = 0; r < n; ++r) a[r][pi] += a[r][pj];
            piv = pi;
        }
        if (piv != k) swap_index(piv, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (a[r][k] == 0) continue;
            const cpp_rational f = a[r][k] / a[k][k];
            for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
            for (std::size_t c = k; c < n; ++c) a[c][r] = a[r][c];
        }
        if (a[k][k] > 0) ++pos;
        else ++neg;
    }
    return {pos, neg};
}

inline UnimodularForm classify(const IntMatrix& m) {
    require_symmetric(m);
    const auto det = determinant(m);
    if (det != 1 && det != -1) {
        const auto abs_det = det < 0 ? -det : det;
        throw NonUnimodularError(abs_det > INT64_MAX ? INT64_MAX : abs_det.convert_to<std::int64_t>());
    }
    UnimodularForm f;
    f.matrix = m;
    f.rank = static_cast<std::int64_t>(m.size());
    std::tie(f.positive, f.negative) = inertia(m);
    f.even = true;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i][i] % 2 != 0) f.even = false;
    if (f.positive > 0 && f.negative > 0) {
        f.kind = f.even ? UnimodularForm::Kind::EvenIndefinite : UnimodularForm::Kind::OddIndefinite;
        if (f.even) {
            f.e8 = f.signature() / 8;
            f.hyperbolic = (f.rank - 8 * (f.e8 < 0 ? -f.e8 : f.e8)) / 2;
        }
    } else {
        f.kind = UnimodularForm::Kind::Definite;
        f.orientation_reversed = f.negative > 0;
    }
    return f;
}

struct FormCount {
    std::int64_t odd = 0;
    std::int64_t even = 0;
    std::int64_t odd_ceiling = 0;   // floor(n/2) + 1
    std::int64_t even_ceiling = 0;  // floor(n/16) + 1
};

/// Forms of rank n up to orientation: odd k<1> + h<-1> with k >= h, and
/// even 2k E8 + l H with 16k + 2l = n.
inline FormCount count_forms(std::int64_t n) {
    if (n <= 0) throw ValidationError("rank must be positive");
    FormCount c;
    for (std::int64_t k = 0; k <= n; ++k)
        if (k >= n - k) ++c.odd;
    for (std::int64_t k = 0; 16 * k <= n; ++k)
        if ((n - 16 * k) % 2 == 0) ++c.even;
    c.odd_ceiling = n / 2 + 1;
    c.even_ceiling = n / 16 + 1;
    return c;
}

/// Number of forms of rank 1..n, bounding the homeomorphism types of closed
/// simply connected 4-manifolds whose forms have rank at most n.
inline std::int64_t count_Un_homeo_bound(std::int64_t n) {
    if (n <= 0) throw ValidationError("rank must be positive");
    std::int64_t total = 0;
    for (std::int64_t i = 1; i <= n; ++i) {
        const auto c = count_forms(i);
        total += c.odd + c.even;
    }
    return total;
}

/// Distinct diagonal forms h<1> + (k-h)<-1>, k = 1..n, up to orientation
/// reversal: each is realized by k unknots framed +-1.
inline std::int64_t count_simply_connected_lower(std::int64_t n) {
    if (n <= 0) throw ValidationError("rank must be positive");
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (std::int64_t k = 1; k <= n; ++k)
        for (std::int64_t h = 0; h <= k; ++h) seen.insert(std::minmax(h, k - h));
    return static_cast<std::int64_t>(seen.size());
}

}  // namespace topocalc
