#pragma once

// Exhaustive section-twist search for the generalized Euler number: every
// free twist variable ranges over [-R, R], and the last variable of each
// block without free boundary is set so the block's twists sum to zero.
// Any optimum satisfies |t| <= 2 * Delta_0 (Delta_0 = value at zero twists),
// so R = 2 * Delta_0 covers it.

#include <cstdint>
#include <functional>
#include <vector>

#include "topocalc/decomposition.hpp"

namespace oracle {

inline std::uint64_t exhaustive_euler(const topocalc::DecompGraph& g, std::int64_t radius) {
    const topocalc::TwistModel model(g);
    const std::size_t n = model.vars.size();
    std::vector<std::int64_t> t(n, 0);
    std::uint64_t best = model.objective(g, t);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == n) {
            best = std::min(best, model.objective(g, t));
            return;
        }
        if (model.forced_by_block[k]) {
            std::int64_t sum = 0;
            for (std::size_t v : model.block_vars[*model.forced_by_block[k]])
                if (v != k) sum += t[v];
            t[k] = -sum;
            rec(k + 1);
            t[k] = 0;
            return;
        }
        for (std::int64_t v = -radius; v <= radius; ++v) {
            t[k] = v;
            rec(k + 1);
        }
        t[k] = 0;
    };
    rec(0);
    return best;
}

inline std::uint64_t search_space(const topocalc::DecompGraph& g, std::int64_t radius) {
    const topocalc::TwistModel model(g);
    std::uint64_t size = 1;
    for (std::size_t k = 0; k < model.vars.size(); ++k)
        if (!model.forced_by_block[k]) size *= static_cast<std::uint64_t>(2 * radius + 1);
    return size;
}

}  // namespace oracle
