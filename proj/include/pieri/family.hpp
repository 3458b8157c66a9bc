#pragma once

#include "pieri/linalg.hpp"
#include "pieri/poly.hpp"

#include <array>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace pieri {

using PolyVec = std::vector<Poly>;

/// Parameter values at which a family is checked to have its generic rank.
inline const std::array<Rat, 5>& sample_points() {
    static const std::array<Rat, 5> pts{Rat(1), rat(1, 2), Rat(2), Rat(3), Rat(-1)};
    return pts;
}

class InvalidFamily : public Error {
public:
    using Error::Error;
};

/// One-parameter family t ↦ span of polynomial vectors in Q[t]^n.
class PolyFamily {
public:
    PolyFamily() = default;
    PolyFamily(int n, std::vector<PolyVec> generators) : n_(n), gens_(std::move(generators)) {
        for (const auto& g : gens_)
            if (static_cast<int>(g.size()) != n_) throw Error("family generator has wrong length");
        std::vector<Row<RatFunc>> rows;
        for (const auto& g : gens_) rows.emplace_back(g.begin(), g.end());
        generic_ = FuncSubspace::span(n_, std::move(rows));
    }

    static PolyFamily constant(const Subspace& s) {
        std::vector<PolyVec> gens;
        for (const auto& v : s.basis()) gens.emplace_back(v.begin(), v.end());
        return PolyFamily(s.ambient(), std::move(gens));
    }

    /// Polynomial basis of a Q(t)-subspace: each echelon row is cleared of
    /// denominators and made primitive, then the basis is saturated at every
    /// sample point so that its fibres there are the true fibres.
    static PolyFamily from_generic(const FuncSubspace& s);

    int ambient() const { return n_; }
    const std::vector<PolyVec>& generators() const { return gens_; }
    const FuncSubspace& generic() const { return generic_; }
    int generic_dim() const { return generic_.dim(); }

    /// Annihilator of the generic span, computed once per family.
    const FuncSubspace& generic_annihilator() const {
        if (!annihilator_) annihilator_ = std::make_shared<const FuncSubspace>(annihilator(generic_));
        return *annihilator_;
    }

    int max_degree() const {
        int d = 0;
        for (const auto& g : gens_)
            for (const auto& p : g) d = std::max(d, p.degree());
        return d;
    }

    Vec eval(const PolyVec& g, const Rat& t) const {
        Vec v;
        v.reserve(g.size());
        for (const auto& p : g) v.push_back(p(t));
        return v;
    }

    /// Fibre at t computed from the generators.
    Subspace at(const Rat& t) const {
        std::vector<Vec> rows;
        for (const auto& g : gens_) rows.push_back(eval(g, t));
        return Subspace::span(n_, std::move(rows));
    }

    /// Throws InvalidFamily unless the fibre at every sample point has the
    /// generic dimension.
    void verify_generic_rank() const {
        for (const auto& t : sample_points()) {
            int r = at(t).dim();
            if (r != generic_dim())
                throw InvalidFamily("family has rank " + std::to_string(r) + " at t=" + to_string(t) +
                                    ", generic rank " + std::to_string(generic_dim()));
        }
    }

private:
    PolyFamily(int n, std::vector<PolyVec> generators, FuncSubspace generic)
        : n_(n), gens_(std::move(generators)), generic_(std::move(generic)) {}

    int n_ = 0;
    std::vector<PolyVec> gens_;
    FuncSubspace generic_;
    mutable std::shared_ptr<const FuncSubspace> annihilator_;
};

namespace detail {

/// Row over Q(t) scaled to a primitive polynomial vector.
inline PolyVec primitive(const Row<RatFunc>& row) {
    Poly l(1);
    for (const auto& f : row) l = Poly::exact_div(l * f.den(), Poly::gcd(l, f.den()));
    PolyVec v;
    for (const auto& f : row) v.push_back(f.num() * Poly::exact_div(l, f.den()));
    Poly g;
    for (const auto& p : v) g = Poly::gcd(g, p);
    if (!g.is_zero() && (g.degree() > 0 || g.lead() != 1))
        for (auto& p : v) p = Poly::exact_div(p, g);
    return v;
}

}  // namespace detail

inline FuncSubspace lift(const Subspace& s) {
    std::vector<Row<RatFunc>> rows;
    for (const auto& v : s.basis()) rows.emplace_back(v.begin(), v.end());
    return FuncSubspace::span(s.ambient(), std::move(rows));
}

/// The family t ↦ A ∩ fam_t, computed over Q(t).
/// Solved in the coordinates of A: x·A lies in fam_t iff x·(A φ^T) = 0 for
/// a basis φ of the annihilator of fam_t. With the kernel in echelon form
/// and A in echelon form, the rows x·A are already in echelon form.
inline PolyFamily intersect(const Subspace& a, const PolyFamily& fam) {
    if (a.ambient() != fam.ambient()) throw Error("ambient dimension mismatch");
    const int n = a.ambient();
    const int k = a.dim();
    const FuncSubspace& phi = fam.generic_annihilator();
    std::vector<Row<RatFunc>> pairings;
    for (const auto& f : phi.basis()) {
        Row<RatFunc> col;
        for (const auto& v : a.basis()) {
            RatFunc x;
            for (int i = 0; i < n; ++i)
                if (!v[static_cast<std::size_t>(i)].is_zero()) x = x + RatFunc(Poly(v[static_cast<std::size_t>(i)])) * f[static_cast<std::size_t>(i)];
            col.push_back(std::move(x));
        }
        pairings.push_back(std::move(col));
    }
    const FuncSubspace ker = annihilator(FuncSubspace::span(k, std::move(pairings)));
    std::vector<Row<RatFunc>> rows;
    for (const auto& x : ker.basis()) {
        Row<RatFunc> r(static_cast<std::size_t>(n));
        for (int j = 0; j < k; ++j) {
            const RatFunc& c = x[static_cast<std::size_t>(j)];
            if (c.is_zero()) continue;
            for (int i = 0; i < n; ++i) {
                const Rat& v = a.basis()[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                if (!v.is_zero()) r[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)] + c * RatFunc(Poly(v));
            }
        }
        rows.push_back(std::move(r));
    }
    return PolyFamily::from_generic(FuncSubspace::span(n, std::move(rows)));
}

inline PolyFamily intersect(const PolyFamily& a, const PolyFamily& b) {
    if (a.ambient() != b.ambient()) throw Error("ambient dimension mismatch");
    return PolyFamily::from_generic(intersect(a.generic(), b.generic()));
}

/// Push a family given in chart coordinates into the ambient space.
inline PolyFamily embed(const Chart& chart, const PolyFamily& fam) {
    if (fam.ambient() != chart.dim()) throw Error("embed: family does not live in the chart");
    std::vector<PolyVec> gens;
    for (const auto& g : fam.generators()) {
        PolyVec v(static_cast<std::size_t>(chart.ambient()));
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (g[k].is_zero()) continue;
            for (int i = 0; i < chart.ambient(); ++i) {
                const Rat& b = chart.basis()[k][static_cast<std::size_t>(i)];
                if (!b.is_zero()) v[static_cast<std::size_t>(i)] += g[k] * Poly(b);
            }
        }
        gens.push_back(std::move(v));
    }
    return PolyFamily(chart.ambient(), std::move(gens));
}

struct LimitTrace {
    Subspace limit;
    int steps = 0;       // number of divide-by-(t - t0) column operations
    int step_bound = 0;  // order of vanishing of the tracked maximal minor
};

namespace detail {

struct Saturation {
    std::vector<PolyVec> basis;
    int steps = 0;
    int bound = 0;
};

/// The maximal minor of a polynomial basis on the given coordinates;
/// throws if it vanishes identically.
inline Poly tracked_minor(const std::vector<PolyVec>& basis, const std::vector<int>& cols) {
    if (cols.size() != basis.size()) throw Error("saturation: pivot count differs from basis size");
    std::vector<Row<RatFunc>> m;
    for (const auto& g : basis) {
        Row<RatFunc> r;
        for (int p : cols) r.emplace_back(g[static_cast<std::size_t>(p)]);
        m.push_back(std::move(r));
    }
    Poly det = determinant(std::move(m)).num();
    if (det.is_zero()) throw InvalidFamily("polynomial generators are dependent over Q(t)");
    return det;
}

/// Make a polynomial basis of a rank-d family full rank at t0 without
/// changing the Q(t)-span. While the values at t0 are dependent, take a
/// constant dependency c, replace one column with c_k != 0 by
/// (sum c_i g_i)/(t - t0), and repeat. Each step divides every maximal minor
/// by (t - t0) up to the unit c_k, so the loop ends after at most `bound`
/// steps, the order at t0 of a fixed nonzero minor. Other points keep their
/// order, so one minor serves every point.
inline Saturation saturate_at(std::vector<PolyVec> basis, int n, const Rat& t0, int bound) {
    const int d = static_cast<int>(basis.size());
    if (d == 0) return {std::move(basis), 0, 0};
    for (auto& g : basis)
        for (auto& p : g) p = p.shifted(t0);

    int steps = 0;
    for (;;) {
        // Dependencies among the d values at 0: kernel of the n x d matrix
        // whose columns are those values, i.e. the annihilator of its rows.
        std::vector<Vec> coord_rows(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(d), Rat(0)));
        for (int k = 0; k < d; ++k)
            for (int i = 0; i < n; ++i)
                coord_rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                    basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)].coeff(0);
        auto deps = annihilator(Subspace::span(d, std::move(coord_rows)));
        if (deps.is_zero()) break;

        const Vec& c = deps.basis().front();
        std::size_t k = 0;
        while (c[k].is_zero()) ++k;
        PolyVec combo(static_cast<std::size_t>(n));
        for (int i = 0; i < d; ++i) {
            if (c[static_cast<std::size_t>(i)].is_zero()) continue;
            Poly ci(c[static_cast<std::size_t>(i)]);
            for (int j = 0; j < n; ++j)
                combo[static_cast<std::size_t>(j)] += ci * basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        for (auto& p : combo) p = p.div_t();
        basis[k] = std::move(combo);
        ++steps;
        if (steps > bound) throw Error("saturation: step bound exceeded");
    }
    for (auto& g : basis)
        for (auto& p : g) p = p.shifted(-t0);
    return {std::move(basis), steps, bound};
}

}  // namespace detail

inline PolyFamily PolyFamily::from_generic(const FuncSubspace& s) {
    std::vector<PolyVec> gens;
    for (const auto& row : s.basis()) gens.push_back(detail::primitive(row));
    if (!gens.empty()) {
        const Poly minor = detail::tracked_minor(gens, s.pivots());
        for (const auto& t : sample_points())
            gens = detail::saturate_at(std::move(gens), s.ambient(), t, minor.order_at(t)).basis;
    }
    // Saturation keeps the Q(t)-span, so the generic subspace is still s.
    return PolyFamily(s.ambient(), std::move(gens), s);
}

/// Flat limit at t = 0: saturate a polynomial basis of the generic span at
/// 0 and evaluate there.
inline LimitTrace limit_at_zero_traced(const PolyFamily& fam) {
    fam.verify_generic_rank();
    const int n = fam.ambient();
    if (fam.generic_dim() == 0) return {Subspace::zero(n), 0, 0};
    std::vector<PolyVec> start;
    for (const auto& row : fam.generic().basis()) start.push_back(detail::primitive(row));
    const int bound = detail::tracked_minor(start, fam.generic().pivots()).order_at(Rat(0));
    auto sat = detail::saturate_at(std::move(start), n, Rat(0), bound);
    std::vector<Vec> at0;
    for (const auto& g : sat.basis) at0.push_back(fam.eval(g, Rat(0)));
    return {Subspace::span(n, std::move(at0)), sat.steps, sat.bound};
}

inline Subspace limit_at_zero(const PolyFamily& fam) { return limit_at_zero_traced(fam).limit; }

}  // namespace pieri
