#pragma once

#include "pieri/linalg.hpp"
#include "pieri/seqcomb.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pieri {

/// Complete flag F_1 ⊃ F_2 ⊃ ... ⊃ F_n ⊃ F_{n+1} = 0 in Q^n, held through an
/// adapted basis b_1..b_n with F_j = span{b_j, ..., b_n}.
class Flag {
public:
    Flag() = default;
    explicit Flag(std::vector<Vec> adapted_basis) : basis_(std::move(adapted_basis)) {
        n_ = static_cast<int>(basis_.size());
        if (n_ < 1) throw Error("Flag: empty basis");
        for (const auto& b : basis_)
            if (static_cast<int>(b.size()) != n_) throw Error("Flag: basis vector has wrong length");
        if (rank_of(n_, basis_) != n_) throw Error("Flag: basis is not invertible");
        for (int j = 1; j <= n_ + 1; ++j)
            subspaces_.push_back(Subspace::span(n_, std::vector<Vec>(basis_.begin() + (j - 1), basis_.end())));
    }

    /// Flag from a strictly nested chain D_1 ⊃ ... ⊃ D_n with dim D_j = n+1-j.
    static Flag from_chain(const std::vector<Subspace>& chain) {
        const int n = static_cast<int>(chain.size());
        std::vector<Vec> basis(static_cast<std::size_t>(n));
        for (int j = n; j >= 1; --j) {
            const Subspace& d = chain[static_cast<std::size_t>(j - 1)];
            if (d.ambient() != n || d.dim() != n + 1 - j) throw Error("Flag: chain has wrong dimensions");
            const Subspace next = j < n ? chain[static_cast<std::size_t>(j)] : Subspace::zero(n);
            if (!next.is_subspace_of(d)) throw Error("Flag: chain is not nested");
            for (const auto& v : d.basis())
                if (!next.contains(v)) {
                    basis[static_cast<std::size_t>(j - 1)] = v;
                    break;
                }
        }
        return Flag(std::move(basis));
    }

    int ambient() const { return n_; }
    const std::vector<Vec>& basis() const { return basis_; }
    const Vec& b(int j) const { return basis_.at(static_cast<std::size_t>(j - 1)); }

    /// F_j, clamped: F_j = V for j ≤ 1 and F_j = 0 for j ≥ n+1.
    const Subspace& operator[](int j) const {
        if (j < 1) j = 1;
        if (j > n_ + 1) j = n_ + 1;
        return subspaces_[static_cast<std::size_t>(j - 1)];
    }

    friend bool operator==(const Flag& a, const Flag& b) { return a.subspaces_ == b.subspaces_; }

private:
    int n_ = 0;
    std::vector<Vec> basis_;
    std::vector<Subspace> subspaces_;  // F_1 .. F_{n+1}
};

inline Flag standard_flag(int n) {
    if (n < 1) throw Error("standard_flag: n must be positive");
    std::vector<Vec> basis;
    for (int j = 1; j <= n; ++j) basis.push_back(unit_vector(n, j));
    return Flag(std::move(basis));
}

/// F'_j = span{e_1, ..., e_{n+1-j}}, opposite to the standard flag.
inline Flag reversed_flag(int n) {
    if (n < 1) throw Error("reversed_flag: n must be positive");
    std::vector<Vec> basis;
    for (int j = 1; j <= n; ++j) basis.push_back(unit_vector(n, n + 1 - j));
    return Flag(std::move(basis));
}

/// Image of the standard flag under a seeded random integer matrix,
/// resampled until invertible.
inline Flag random_flag(int n, std::uint64_t seed) {
    if (n < 1) throw Error("random_flag: n must be positive");
    Rng rng(seed);
    for (;;) {
        std::vector<Vec> basis;
        for (int j = 0; j < n; ++j) {
            Vec v;
            for (int i = 0; i < n; ++i) v.push_back(Rat(rng.small()));
            basis.push_back(std::move(v));
        }
        if (rank_of(n, basis) == n) return Flag(std::move(basis));
    }
}

/// F.|_j viewed inside F_j: coordinates with respect to b_j..b_n, in which the
/// restricted flag F_j ⊃ F_{j+1} ⊃ ... is the standard flag of Q^{n+1-j}.
struct RestrictedFlag {
    Chart chart;
    Flag flag;
};

inline RestrictedFlag restrict_flag(const Flag& f, int j) {
    if (j < 1 || j > f.ambient()) throw Error("restrict_flag: index out of range");
    std::vector<Vec> basis(f.basis().begin() + (j - 1), f.basis().end());
    return {Chart(f.ambient(), std::move(basis)), standard_flag(f.ambient() + 1 - j)};
}

/// The flag in M made of the distinct subspaces F_i ∩ M, in coordinates of
/// an adapted basis of M (so it is the standard flag there). index_of[i]
/// is the position k with F_i ∩ M = M_k, for i = 1..n+1.
struct InducedFlag {
    Chart chart;
    Flag flag;
    std::vector<int> index_of;  // 1-based by i; entry 0 unused

    int position(int i) const {
        if (i < 1) i = 1;
        if (i > static_cast<int>(index_of.size()) - 1) i = static_cast<int>(index_of.size()) - 1;
        return index_of[static_cast<std::size_t>(i)];
    }
};

inline InducedFlag induced_flag(const Flag& f, const Subspace& m) {
    if (m.ambient() != f.ambient()) throw Error("induced_flag: ambient dimension mismatch");
    if (m.is_zero()) throw Error("induced_flag: zero subspace");
    const int n = f.ambient();
    const int d = m.dim();
    std::vector<Subspace> chain;
    std::vector<int> index_of(static_cast<std::size_t>(n + 2), 0);
    for (int i = 1; i <= n + 1; ++i) {
        Subspace s = intersect(f[i], m);
        if (chain.empty() || !(chain.back() == s)) {
            if (!s.is_zero()) chain.push_back(s);
        }
        index_of[static_cast<std::size_t>(i)] = d + 1 - s.dim();
    }
    std::vector<Vec> basis(static_cast<std::size_t>(d));
    for (int k = d; k >= 1; --k) {
        const Subspace& cur = chain[static_cast<std::size_t>(k - 1)];
        const Subspace next = k < d ? chain[static_cast<std::size_t>(k)] : Subspace::zero(n);
        for (const auto& v : cur.basis())
            if (!next.contains(v)) {
                basis[static_cast<std::size_t>(k - 1)] = v;
                break;
            }
    }
    return {Chart(n, std::move(basis)), standard_flag(d), std::move(index_of)};
}

/// A random point of the dense cell of Ω_β F: f_k = b_{β_k} plus random
/// multiples of b_i for i > β_k with i ∉ β.
inline Subspace random_cell_point(const DecSeq& beta, const Flag& f, Rng& rng) {
    if (beta.n() != f.ambient()) throw Error("random_cell_point: ambient dimension mismatch");
    const int n = f.ambient();
    std::vector<bool> in_beta(static_cast<std::size_t>(n + 1), false);
    for (int x : beta.entries()) in_beta[static_cast<std::size_t>(x)] = true;
    std::vector<Vec> rows;
    for (int k = 1; k <= beta.m(); ++k) {
        Vec v = f.b(beta(k));
        for (int i = beta(k) + 1; i <= n; ++i) {
            if (in_beta[static_cast<std::size_t>(i)]) continue;
            Rat c = rng.small();
            for (int x = 0; x < n; ++x) v[static_cast<std::size_t>(x)] += c * f.b(i)[static_cast<std::size_t>(x)];
        }
        rows.push_back(std::move(v));
    }
    return Subspace::span(n, std::move(rows));
}

/// Random m-plane of Ω_β F: f_i a random vector of F_{β_i}. nullopt when the
/// draw is degenerate (dimension drop); callers retry.
inline std::optional<Subspace> random_schubert_point(const DecSeq& beta, const Flag& f, Rng& rng) {
    std::vector<Vec> rows;
    for (int i = 1; i <= beta.m(); ++i) rows.push_back(random_vector(f[beta(i)], rng));
    auto h = Subspace::span(f.ambient(), std::move(rows));
    if (h.dim() != beta.m()) return std::nullopt;
    return h;
}

/// Random m-plane of X_β(j, F, L): as above but with f_j drawn from
/// F_{β_j} ∩ L.
inline std::optional<Subspace> random_x_point(const DecSeq& beta, int j, const Flag& f, const Subspace& l, Rng& rng) {
    const Subspace target = intersect(f[beta(j)], l);
    if (target.is_zero()) return std::nullopt;
    std::vector<Vec> rows;
    for (int i = 1; i <= beta.m(); ++i) rows.push_back(random_vector(i == j ? target : f[beta(i)], rng));
    auto h = Subspace::span(f.ambient(), std::move(rows));
    if (h.dim() != beta.m()) return std::nullopt;
    return h;
}

/// Random subspace of dimension d.
inline Subspace random_subspace(int n, int d, Rng& rng) {
    for (;;) {
        std::vector<Vec> rows;
        for (int k = 0; k < d; ++k) {
            Vec v;
            for (int i = 0; i < n; ++i) v.push_back(Rat(rng.small()));
            rows.push_back(std::move(v));
        }
        auto s = Subspace::span(n, std::move(rows));
        if (s.dim() == d) return s;
    }
}

}  // namespace pieri
