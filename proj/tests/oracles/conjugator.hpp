#pragma once

// Brute-force minimum of |b| + |c| over conjugates P psi P^-1 with P in
// GL(2,Z) and |entries of P| <= bound.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <vector>

#include "topocalc/slope.hpp"

namespace oracle {

inline const std::vector<topocalc::Matrix2>& unimodular_up_to(std::int64_t bound) {
    static std::vector<topocalc::Matrix2> cache;
    static std::int64_t cached_bound = -1;
    if (cached_bound != bound) {
        cache.clear();
        for (std::int64_t a = -bound; a <= bound; ++a)
            for (std::int64_t b = -bound; b <= bound; ++b)
                for (std::int64_t c = -bound; c <= bound; ++c)
                    for (std::int64_t d = -bound; d <= bound; ++d) {
                        const std::int64_t det = a * d - b * c;
                        if (det == 1 || det == -1) cache.push_back({a, b, c, d});
                    }
        cached_bound = bound;
    }
    return cache;
}

inline std::uint64_t brute_sol_e(const topocalc::Matrix2& psi, std::int64_t bound = 20) {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (const auto& p : unimodular_up_to(bound)) {
        const auto c = p * psi * p.inverse();
        best = std::min<std::uint64_t>(best, static_cast<std::uint64_t>(std::llabs(c.b) + std::llabs(c.c)));
    }
    return best;
}

}  // namespace oracle
