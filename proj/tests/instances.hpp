#pragma once

#include "pieri/enumerative.hpp"
#include "pieri/schubgeom.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace pieri::fixtures {

/// A seeded Ω_α F ∩ Ω_L with the modes j at which X_j° is sampled: mode m
/// for a generic L, every available mode for an L with all equalities.
struct TangentInstance {
    std::uint64_t seed = 0;
    DecSeq alpha;
    int s = 1;
    Flag flag;
    Subspace L;
    bool reducible = false;
    std::vector<int> modes;
};

inline std::optional<TangentInstance> tangent_instance(std::uint64_t seed) {
    Rng rng(seed);
    const int n = 4 + static_cast<int>(rng.uniform(0, 5));
    const int m = std::min(1 + static_cast<int>(rng.uniform(0, 2)), n - 1);
    const auto seqs = all_sequences(n, m);
    const DecSeq a = seqs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(seqs.size()) - 1))];
    const int s = 1 + static_cast<int>(rng.uniform(0, 2));
    const Flag f = random_flag(n, seed);
    const bool reducible = seed % 2 == 1;
    std::optional<Subspace> l;
    if (reducible) {
        l = reducible_special_subspace(a, s, f, rng);
    } else if (n + 1 - m - s >= 1 && critical_dim(a, m, s) >= 1) {
        l = random_subspace(n, n + 1 - m - s, rng);
        if (classify_pieri(a, f, *l, s).verdict == Verdict::Improper) l.reset();
    }
    if (!l) return std::nullopt;
    auto modes = witness_modes(a, f, *l);
    if (!reducible) {
        if (std::find(modes.begin(), modes.end(), m) == modes.end()) return std::nullopt;
        modes = {m};
    }
    return TangentInstance{seed, a, s, f, *l, reducible, modes};
}

/// The first `count` usable instances in seed order.
inline std::vector<TangentInstance> tangent_instances(int count) {
    std::vector<TangentInstance> out;
    for (std::uint64_t seed = 0; static_cast<int>(out.size()) < count && seed < 10000; ++seed)
        if (auto t = tangent_instance(seed)) out.push_back(std::move(*t));
    return out;
}

/// Seeded quintuple problems with at least two solutions, spread over a few
/// Grassmannians; the first is the G(2,4) problem with a = b = c = 1.
inline std::vector<QuintupleProblem> witness_instances(int count) {
    std::vector<QuintupleProblem> out{{4, 2, DecSeq(4, {3, 1}), DecSeq(4, {2, 1}), 1, 1, 1}};
    const std::vector<std::pair<int, int>> grass{{4, 2}, {5, 2}, {6, 2}, {6, 3}, {7, 2}, {7, 3}};
    Rng rng(2024);
    while (static_cast<int>(out.size()) < count) {
        const auto [n, m] = grass[out.size() % grass.size()];
        std::vector<QuintupleProblem> pool;
        for (const auto& p : all_problems(n, m, 1))
            if (count_pairs_d(p) >= 2) pool.push_back(p);
        if (pool.empty()) continue;
        out.push_back(pool[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 1))]);
    }
    return out;
}

}  // namespace pieri::fixtures
