#pragma once

// Slopes on a torus with a fixed homology basis (m, l).
//
// A slope is the unsigned class +-(p*m + q*l) of an essential simple closed
// curve, written as the extended rational q/p. Representatives are reduced
// and sign-canonical: p > 0, or p == 0 and q == 1. The slope "infinity"
// (the class of l) is therefore the ordinary value (0, 1) and the distance
// formula needs no special case for it.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "topocalc/errors.hpp"

namespace topocalc {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

class Slope {
public:
    /// Reduces (p, q) to the canonical representative. Throws on (0, 0).
    static Slope normalize(std::int64_t p, std::int64_t q) {
        if (p == 0 && q == 0) throw ValidationError("slope (0,0) is not a primitive class");
        const std::int64_t g = std::gcd(p, q);
        p /= g;
        q /= g;
        if (p < 0 || (p == 0 && q < 0)) {
            p = -p;
            q = -q;
        }
        return Slope(p, q);
    }

    static Slope infinity() { return Slope(0, 1); }

    /// The slope with coordinate r = q/p.
    static Slope from_rational(const Rational& r) { return normalize(r.denominator(), r.numerator()); }

    std::int64_t p() const noexcept { return p_; }
    std::int64_t q() const noexcept { return q_; }
    bool is_infinite() const noexcept { return p_ == 0; }

    /// Coordinate q/p; precondition: finite slope.
    Rational value() const {
        if (is_infinite()) throw ValidationError("infinite slope has no rational coordinate");
        return Rational(q_, p_);
    }

    friend bool operator==(const Slope&, const Slope&) = default;
    friend auto operator<=>(const Slope&, const Slope&) = default;

private:
    Slope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}

    std::int64_t p_;
    std::int64_t q_;
};

/// Minimal geometric intersection |p*s - q*r| of two slopes q/p and s/r.
inline std::uint64_t distance(const Slope& a, const Slope& b) {
    const __int128 v = static_cast<__int128>(a.p()) * b.q() - static_cast<__int128>(a.q()) * b.p();
    return static_cast<std::uint64_t>(v < 0 ? -v : v);
}

/// Parses "q/p", an integer "q", or "inf".
inline Slope parse_slope(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "1/0") return Slope::infinity();
    const auto slash = text.find('/');
    try {
        std::size_t used = 0;
        const std::string num(text.substr(0, slash));
        const std::int64_t q = std::stoll(num, &used);
        if (used != num.size()) throw std::invalid_argument("trailing");
        std::int64_t p = 1;
        if (slash != std::string_view::npos) {
            const std::string den(text.substr(slash + 1));
            p = std::stoll(den, &used);
            if (used != den.size()) throw std::invalid_argument("trailing");
        }
        return Slope::normalize(p, q);
    } catch (const std::logic_error&) {
        throw ValidationError("cannot parse slope '" + std::string(text) + "'");
    }
}

inline std::string to_string(const Slope& s) {
    if (s.is_infinite()) return "inf";
    return std::to_string(s.q()) + "/" + std::to_string(s.p());
}

/// Integer 2x2 matrix acting on homology coordinates (p, q) of p*m + q*l.
struct Matrix2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    std::int64_t det() const { return a * d - b * c; }
    std::int64_t trace() const { return a + d; }

    /// Inverse; precondition |det| == 1.
    Matrix2 inverse() const {
        const std::int64_t dt = det();
        if (dt != 1 && dt != -1) throw ValidationError("matrix is not invertible over Z");
        return {d * dt, -b * dt, -c * dt, a * dt};
    }

    Slope apply(const Slope& s) const { return Slope::normalize(a * s.p() + b * s.q(), c * s.p() + d * s.q()); }

    friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

using SlopeVector = std::vector<Slope>;

/// Dehn twist along an annulus joining boundary tori i and j whose ends are
/// the slope infinity: q/p -> q/p + sign on coordinate i, q/p - sign on j.
inline SlopeVector annulus_twist(const SlopeVector& v, std::size_t i, std::size_t j, int sign) {
    if (i == j) throw ValidationError("annulus twist needs two distinct boundary tori");
    if (i >= v.size() || j >= v.size()) throw ValidationError("annulus twist coordinate out of range");
    if (sign != 1 && sign != -1) throw ValidationError("annulus twist sign must be +1 or -1");
    if (v[i].is_infinite() || v[j].is_infinite())
        throw ValidationError("annulus twist coordinate equals the annulus slope");
    SlopeVector out = v;
    out[i] = Slope::normalize(v[i].p(), v[i].q() + sign * v[i].p());
    out[j] = Slope::normalize(v[j].p(), v[j].q() - sign * v[j].p());
    return out;
}

/// A point of R u {inf}: a geodesic foliation of the torus. Irrational
/// values are carried exactly, either as (a + b*sqrt(d))/c or as an interval
/// (lo, hi) with rational ends supplied by the caller.
class FoliationLimit {
public:
    struct Quadratic {
        std::int64_t a = 0, b = 1, c = 1, d = 2;
    };
    struct Interval {
        Rational lo, hi;
    };

    static FoliationLimit slope(const Slope& s) { return FoliationLimit(s); }
    static FoliationLimit quadratic(Quadratic x) {
        if (x.c == 0 || x.b == 0 || x.d <= 1) throw ValidationError("degenerate quadratic irrational");
        const auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x.d)));
        for (std::int64_t s = std::max<std::int64_t>(0, r - 1); s <= r + 1; ++s)
            if (s * s == x.d) throw ValidationError("quadratic radicand is a perfect square");
        FoliationLimit f;
        f.quadratic_ = x;
        return f;
    }
    static FoliationLimit interval(Rational lo, Rational hi) {
        if (!(lo < hi)) throw ValidationError("empty interval for irrational foliation");
        FoliationLimit f;
        f.interval_ = Interval{lo, hi};
        return f;
    }

    bool is_rational() const noexcept { return slope_.has_value(); }
    const std::optional<Slope>& as_slope() const noexcept { return slope_; }
    const std::optional<Quadratic>& as_quadratic() const noexcept { return quadratic_; }
    const std::optional<Interval>& as_interval() const noexcept { return interval_; }

    bool equals(const Slope& s) const { return slope_ && *slope_ == s; }

private:
    FoliationLimit() = default;
    explicit FoliationLimit(const Slope& s) : slope_(s) {}

    std::optional<Slope> slope_;
    std::optional<Quadratic> quadratic_;
    std::optional<Interval> interval_;
};

/// A finite prefix of a sequence of slope vectors together with its limit.
struct SlopeSequence {
    std::vector<SlopeVector> terms;
    std::vector<FoliationLimit> limit;

    std::size_t width() const { return limit.size(); }

    /// s^i_coord differs from the limit for every stored i.
    bool essential_at(std::size_t coord) const {
        if (coord >= limit.size()) throw ValidationError("sequence coordinate out of range");
        for (const auto& t : terms)
            if (limit[coord].equals(t.at(coord))) return false;
        return true;
    }
};

/// Distances Delta(s_i, s'_i) at one coordinate. Rejects pairs that violate
/// the divergence hypotheses visible on a finite prefix: the first sequence
/// must be essential at coord and the second must not share its limit.
inline std::vector<std::uint64_t> divergence_profile(const SlopeSequence& seq, const SlopeSequence& other,
                                                     std::size_t coord) {
    if (coord >= seq.width() || coord >= other.width())
        throw ValidationError("divergence coordinate out of range");
    if (!seq.essential_at(coord)) throw ValidationError("sequence is not essential at the coordinate");
    const auto& lim = seq.limit[coord];
    const auto& olim = other.limit[coord];
    if (lim.is_rational() && olim.is_rational() && *lim.as_slope() == *olim.as_slope())
        throw ValidationError("second sequence accumulates at the same limit");
    for (const auto& t : other.terms)
        if (lim.equals(t.at(coord))) throw ValidationError("second sequence meets the limit");
    const std::size_t n = std::min(seq.terms.size(), other.terms.size());
    std::vector<std::uint64_t> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(distance(seq.terms[i].at(coord), other.terms[i].at(coord)));
    return out;
}

}  // namespace topocalc
