#pragma once

// Seifert fibered blocks seen as Dehn fillings of an S^1-bundle over a
// compact surface F. On every boundary torus the basis is (m, l) with m the
// boundary of a fixed section and l the fiber, so the fiber is the slope inf
// and a filling q/p (p > 0) creates a cone point of order p.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topocalc/errors.hpp"
#include "topocalc/slope.hpp"

namespace topocalc {

struct BaseSurface {
    std::int64_t genus = 0;
    bool orientable = true;
    std::int64_t boundary_count = 0;

    std::int64_t euler_characteristic() const {
        return orientable ? 2 - 2 * genus - boundary_count : 2 - genus - boundary_count;
    }

    void validate() const {
        if (genus < 0 || boundary_count < 0) throw ValidationError("negative surface data");
        if (!orientable && genus < 1) throw ValidationError("non-orientable surface needs genus >= 1");
    }

    static BaseSurface disc() { return {0, true, 1}; }
    static BaseSurface annulus() { return {0, true, 2}; }
    static BaseSurface pair_of_pants() { return {0, true, 3}; }
    static BaseSurface mobius_band() { return {1, false, 1}; }

    friend bool operator==(const BaseSurface&, const BaseSurface&) = default;
};

struct SeifertBlock {
    BaseSurface base;
    std::vector<Slope> fillings;             // filled boundary circles, each with p > 0
    std::int64_t open_boundary = 0;          // unfilled boundary tori
    std::vector<std::int64_t> section_twists;  // one per open boundary torus

    std::int64_t twist(std::size_t torus) const {
        return torus < section_twists.size() ? section_twists[torus] : 0;
    }

    void validate() const {
        base.validate();
        if (open_boundary < 0) throw ValidationError("negative open boundary count");
        if (static_cast<std::int64_t>(fillings.size()) + open_boundary != base.boundary_count)
            throw ValidationError("filled + open boundary circles must equal the base boundary count");
        for (const auto& f : fillings)
            if (f.is_infinite()) throw ValidationError("a filling along the fiber is not a Seifert filling");
        if (!section_twists.empty() && static_cast<std::int64_t>(section_twists.size()) != open_boundary)
            throw ValidationError("need one section twist per open boundary torus");
    }

    friend bool operator==(const SeifertBlock&, const SeifertBlock&) = default;
};

/// chi(Sigma) = chi(F) + sum 1/p_i.
inline Rational chi_orbifold(const SeifertBlock& b) {
    b.validate();
    Rational chi(b.base.euler_characteristic());
    for (const auto& f : b.fillings) chi += Rational(1, f.p());
    return chi;
}

/// Sum of q_i/p_i plus the section twists: the integral lift of the Euler
/// number that filling the open tori continues.
inline Rational euler_lift(const SeifertBlock& b) {
    b.validate();
    if (!b.base.orientable) throw OrientationConventionError();
    Rational e(0);
    for (const auto& f : b.fillings) e += f.value();
    for (std::int64_t t : b.section_twists) e += t;
    return e;
}

/// Closed blocks: e = sum q_i/p_i. Blocks with boundary: the representative
/// of e in [0, 1).
inline Rational euler_number(const SeifertBlock& b) {
    Rational e = euler_lift(b);
    if (b.open_boundary == 0) return e;
    const std::int64_t fl = boost::rational_cast<std::int64_t>(e) - (e < Rational(0) && e.denominator() != 1 ? 1 : 0);
    return e - fl;
}

/// Moves the integer parts of every filling onto the first open torus's
/// section twist, leaving fillings with 0 <= q/p < 1. The fibration (and the
/// Euler lift) is unchanged. Closed blocks are returned as is.
inline SeifertBlock normalize_euler(const SeifertBlock& b) {
    b.validate();
    if (b.open_boundary == 0) return b;
    SeifertBlock out = b;
    if (out.section_twists.empty()) out.section_twists.assign(static_cast<std::size_t>(b.open_boundary), 0);
    for (auto& f : out.fillings) {
        std::int64_t fl = f.q() / f.p();
        if (f.q() % f.p() != 0 && f.q() < 0) --fl;
        f = Slope::normalize(f.p(), f.q() - fl * f.p());
        out.section_twists[0] += fl;
    }
    return out;
}

struct FilledResult {
    enum class Kind { SolidTorus, IntervalBundleProduct, IntervalBundleTwisted, LensSpace, GenericSeifert };

    Kind kind = Kind::GenericSeifert;
    std::uint64_t lens_order = 0;  // LensSpace only; 0 denotes S^2 x S^1
    SeifertBlock block;
    bool flat_tie = false;  // chi(Sigma) == 0 but no interval bundle was recognized
};

inline std::string to_string(FilledResult::Kind k) {
    switch (k) {
        case FilledResult::Kind::SolidTorus: return "solid-torus";
        case FilledResult::Kind::IntervalBundleProduct: return "interval-bundle-product";
        case FilledResult::Kind::IntervalBundleTwisted: return "interval-bundle-twisted";
        case FilledResult::Kind::LensSpace: return "lens-space";
        case FilledResult::Kind::GenericSeifert: return "generic-seifert";
    }
    return "unknown";
}

namespace detail {

inline bool sphere_base(const BaseSurface& s) { return s.orientable && s.genus == 0; }

// |H_1| of a closed Seifert space over S^2: |sum_i q_i prod_{j != i} p_j|.
inline std::uint64_t sphere_base_h1_order(const std::vector<Slope>& fillings) {
    __int128 total = 0;
    for (std::size_t i = 0; i < fillings.size(); ++i) {
        __int128 term = fillings[i].q();
        for (std::size_t j = 0; j < fillings.size(); ++j)
            if (j != i) term *= fillings[j].p();
        total += term;
    }
    return static_cast<std::uint64_t>(total < 0 ? -total : total);
}

}  // namespace detail

/// Names the small blocks: solid tori, interval bundles and lens spaces.
inline FilledResult recognize(const SeifertBlock& b) {
    b.validate();
    FilledResult r;
    r.block = b;
    std::size_t singular = 0;
    for (const auto& f : b.fillings)
        if (f.p() > 1) ++singular;
    const Rational chi = chi_orbifold(b);

    if (b.open_boundary == 0) {
        if (detail::sphere_base(b.base) && singular <= 2) {
            r.kind = FilledResult::Kind::LensSpace;
            r.lens_order = detail::sphere_base_h1_order(b.fillings);
        }
        return r;
    }
    if (detail::sphere_base(b.base) && b.open_boundary == 1 && singular <= 1) {
        r.kind = FilledResult::Kind::SolidTorus;
        return r;
    }
    if (chi == Rational(0)) {
        if (detail::sphere_base(b.base) && b.open_boundary == 2 && singular == 0) {
            r.kind = FilledResult::Kind::IntervalBundleProduct;
        } else if (b.base == BaseSurface::mobius_band() && singular == 0) {
            r.kind = FilledResult::Kind::IntervalBundleTwisted;
        } else if (detail::sphere_base(b.base) && b.open_boundary == 1 && singular == 2) {
            r.kind = FilledResult::Kind::IntervalBundleTwisted;
        } else {
            r.flat_tie = true;
        }
    }
    return r;
}

/// Fills the open tori listed in `slopes` (nullopt leaves a torus open).
/// Slopes are read in the torus's own basis, whose section curve is shifted
/// by that torus's twist, so the stored filling is s + twist.
/// Filling along the fiber inf is rejected unless `allow_fiber`; when allowed
/// it is accepted only where the result is still a lens space.
inline FilledResult fill_some(const SeifertBlock& b, const std::vector<std::optional<Slope>>& slopes,
                              bool allow_fiber = false) {
    b.validate();
    if (static_cast<std::int64_t>(slopes.size()) != b.open_boundary)
        throw ValidationError("need one slope entry per open boundary torus");
    SeifertBlock out;
    out.base = b.base;
    out.fillings = b.fillings;
    std::vector<Slope> fiber_fillings;
    for (std::size_t j = 0; j < slopes.size(); ++j) {
        const std::int64_t t = b.twist(j);
        if (!slopes[j]) {
            ++out.open_boundary;
            out.section_twists.push_back(t);
            continue;
        }
        const Slope& s = *slopes[j];
        if (s.is_infinite()) {
            if (!allow_fiber) throw ValidationError("filling along the fiber destroys the Seifert fibration");
            fiber_fillings.push_back(s);
            continue;
        }
        out.fillings.push_back(Slope::normalize(s.p(), s.q() + t * s.p()));
    }
    if (out.open_boundary == 0) out.section_twists.clear();

    if (!fiber_fillings.empty()) {
        // S^2 with one cone point of "order 0": connected sum of S^3 with the
        // lens spaces of the remaining cone points.
        if (fiber_fillings.size() > 1 || out.open_boundary != 0 || !detail::sphere_base(out.base) ||
            out.fillings.size() > 1)
            throw ValidationError("fiber filling does not produce a lens space here");
        FilledResult r;
        r.kind = FilledResult::Kind::LensSpace;
        r.lens_order = out.fillings.empty() ? 1 : static_cast<std::uint64_t>(out.fillings[0].p());
        r.block = out;
        return r;
    }
    return recognize(out);
}

inline FilledResult fill(const SeifertBlock& b, const SlopeVector& v, bool allow_fiber = false) {
    if (static_cast<std::int64_t>(v.size()) != b.open_boundary)
        throw ValidationError("slope vector length must equal the number of open boundary tori");
    std::vector<std::optional<Slope>> s(v.begin(), v.end());
    return fill_some(b, s, allow_fiber);
}

/// Order of pi_1 of a recognized small filling; 0 encodes an infinite group.
inline std::uint64_t pi1_order(const FilledResult& r) {
    switch (r.kind) {
        case FilledResult::Kind::LensSpace: return r.lens_order;
        case FilledResult::Kind::SolidTorus:
        case FilledResult::Kind::IntervalBundleProduct:
        case FilledResult::Kind::IntervalBundleTwisted: return 0;
        case FilledResult::Kind::GenericSeifert: break;
    }
    throw ValidationError("pi_1 order is only available for recognized small fillings");
}

/// Meridian of P x S^1 filled by an integer q1 and a finite slope s2, read on
/// the third boundary torus: -(q1 + q2/p2).
inline Slope meridian_of_filled_pants(std::int64_t q1, const Slope& s2) {
    if (s2.is_infinite()) throw ValidationError("second filling must be finite");
    return Slope::from_rational(-(Rational(q1) + s2.value()));
}

/// |e(N) + sum_j s^i_j| for each term, with e(N) the block's Euler lift.
/// At most one coordinate may accumulate at the fiber.
inline std::vector<Rational> euler_growth(const SeifertBlock& b, const SlopeSequence& seq) {
    const Rational e = euler_lift(b);
    if (static_cast<std::int64_t>(seq.width()) != b.open_boundary)
        throw ValidationError("sequence width must equal the number of open boundary tori");
    std::size_t at_fiber = 0;
    for (const auto& lim : seq.limit)
        if (lim.equals(Slope::infinity())) ++at_fiber;
    if (at_fiber > 1) throw ValidationError("two coordinates tend to the fiber and cobound an annulus");
    std::vector<Rational> out;
    out.reserve(seq.terms.size());
    for (const auto& term : seq.terms) {
        if (term.size() != seq.width()) throw ValidationError("ragged slope sequence");
        Rational sum = e;
        for (const auto& s : term) sum += s.value();
        out.push_back(sum < Rational(0) ? -sum : sum);
    }
    return out;
}

}  // namespace topocalc
