#pragma once

// Signature of a symmetric matrix from the signs of its leading principal
// minors: with D_0 = 1 and all D_k != 0, the number of negative eigenvalues
// equals the number of sign changes in D_0, D_1, ..., D_n.

#include <optional>

#include "topocalc/forms.hpp"

namespace oracle {

inline std::optional<std::int64_t> leading_minor_signature(const topocalc::IntMatrix& m) {
    const std::size_t n = m.size();
    int prev_sign = 1;
    std::int64_t changes = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        topocalc::IntMatrix sub(k, std::vector<std::int64_t>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[i][j];
        const auto d = topocalc::determinant(sub);
        if (d == 0) return std::nullopt;
        const int sign = d > 0 ? 1 : -1;
        if (sign != prev_sign) ++changes;
        prev_sign = sign;
    }
    return static_cast<std::int64_t>(n) - 2 * changes;
}

}  // namespace oracle
