#pragma once

#include "pieri/flag.hpp"
#include "pieri/linalg.hpp"
#include "pieri/seqcomb.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pieri {

/// n + 2 − α_j − j − s: the threshold for dim F_{α_j} ∩ L in the
/// classification of Pieri-type intersections.
inline int critical_dim(const DecSeq& a, int j, int s) { return a.n() + 2 - a(j) - j - s; }

/// F_{α_{j-1}} with the convention F_{α_0} = 0.
inline const Subspace& previous_condition(const DecSeq& a, int j, const Flag& f) {
    return j <= 1 ? f[f.ambient() + 1] : f[a(j - 1)];
}

inline int expected_meet(int dim_a, int dim_b, int n) { return std::max(0, dim_a + dim_b - n); }

/// dim F_i ∩ L = max(0, dim F_i + dim L − n) for every i.
inline bool meets_properly(const Subspace& l, const Flag& f) {
    if (l.ambient() != f.ambient()) throw Error("meets_properly: ambient dimension mismatch");
    const int n = f.ambient();
    for (int i = 1; i <= n; ++i)
        if (intersect(f[i], l).dim() != expected_meet(n + 1 - i, l.dim(), n)) return false;
    return true;
}

inline void require_plane(const Subspace& h, const DecSeq& a, const Flag& f, const char* who) {
    if (a.n() != f.ambient() || h.ambient() != f.ambient()) throw Error(std::string(who) + ": ambient dimension mismatch");
    if (h.dim() != a.m())
        throw Error(std::string(who) + ": subspace has dimension " + std::to_string(h.dim()) + ", expected " +
                    std::to_string(a.m()));
}

/// H ∈ Ω_α F: dim H ∩ F_{α_j} ≥ j for all j. The dual description
/// dim H/(H ∩ F_{α_j}) ≤ m − j, computed in the quotient chart, must agree.
inline bool schubert_member(const Subspace& h, const DecSeq& a, const Flag& f) {
    require_plane(h, a, f, "schubert_member");
    const int m = a.m();
    bool primal = true;
    bool dual_test = true;
    for (int j = 1; j <= m; ++j) {
        Subspace k = intersect(h, f[a(j)]);
        if (k.dim() < j) primal = false;
        if (quotient_subspace(h, k).dim() > m - j) dual_test = false;
    }
    if (primal != dual_test) throw Error("schubert_member: primal and dual descriptions disagree");
    return primal;
}

/// H ∈ X_β(j, F, L): H ∈ Ω_β F and H ∩ F_{β_j} ∩ L ≠ 0.
inline bool x_member(const Subspace& h, const DecSeq& b, int j, const Flag& f, const Subspace& l) {
    if (j < 1 || j > b.m()) throw Error("x_member: index out of range");
    if (!schubert_member(h, b, f)) return false;
    return !intersect(h, f[b(j)], l).is_zero();
}

/// H ∩ L ≠ 0.
inline bool special_member(const Subspace& h, const Subspace& l) { return !intersect(h, l).is_zero(); }

/// Membership in X_β(j, F, L) through its fibration over G_j F_{β_j}, for H
/// with dim H ∩ F_{β_j} = j: K := H ∩ F_{β_j} lies in Ω_{β|_j} of the
/// restricted flag, H/K satisfies the tail conditions in V/K, and K meets
/// F_{β_j} ∩ L.
inline bool fibration_member(const Subspace& h, const DecSeq& b, int j, const Flag& f, const Subspace& l) {
    require_plane(h, b, f, "fibration_member");
    const Subspace k = intersect(h, f[b(j)]);
    if (k.dim() != j) throw Error("fibration_member: dim H ∩ F_{β_j} must equal j");
    const auto rf = restrict_flag(f, b(j));
    if (!schubert_member(rf.chart.to_coords(k), restrict_seq(b, j), rf.flag)) return false;
    const Subspace hk = quotient_subspace(h, k);
    for (int i = j + 1; i <= b.m(); ++i)
        if (intersect(hk, quotient_subspace(f[b(i)], k)).dim() < i - j) return false;
    return !intersect(k, intersect(f[b(j)], l)).is_zero();
}

enum class Verdict { Improper, TransverseReducible, TransverseIrreducible, TransverseOther };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Improper: return "Improper";
        case Verdict::TransverseReducible: return "TransverseReducible";
        case Verdict::TransverseIrreducible: return "TransverseIrreducible";
        case Verdict::TransverseOther: return "TransverseOther";
    }
    return "?";
}

struct ClassRow {
    int j = 0;
    int alpha_j = 0;
    int dim = 0;       // dim F_{α_j} ∩ L
    int critical = 0;  // n + 2 − α_j − j − s
    int expected = 0;  // dimension for a proper meeting
};

struct Classification {
    Verdict verdict = Verdict::TransverseOther;
    std::vector<ClassRow> rows;
    std::vector<int> equality;  // j with dim = critical
};

/// Verdict on Ω_α F ∩ Ω_L from the dimensions dim F_{α_j} ∩ L. Checked in
/// order: excess at some j with a nonzero meet is improper; strict defect
/// below the threshold for j < m with F_{α_m} meeting L properly is
/// irreducible; equality for every j is reducible with one component per j;
/// anything else is transverse of no named type. Zero intersections are
/// treated as having dimension −∞.
inline Classification classify_pieri(const DecSeq& a, const Flag& f, const Subspace& l, int s) {
    if (a.n() != f.ambient() || l.ambient() != f.ambient()) throw Error("classify_pieri: ambient dimension mismatch");
    const int n = a.n();
    const int m = a.m();
    if (s < 1) throw Error("classify_pieri: s must be positive");
    if (l.dim() != n + 1 - m - s)
        throw Error("classify_pieri: dim L = " + std::to_string(l.dim()) + ", expected n+1-m-s = " +
                    std::to_string(n + 1 - m - s));
    Classification c;
    for (int j = 1; j <= m; ++j) {
        ClassRow row{j, a(j), intersect(f[a(j)], l).dim(), critical_dim(a, j, s), expected_meet(n + 1 - a(j), l.dim(), n)};
        if (row.dim > 0 && row.dim == row.critical) c.equality.push_back(j);
        c.rows.push_back(row);
    }
    const bool improper = std::any_of(c.rows.begin(), c.rows.end(), [](const ClassRow& r) { return r.dim > r.critical && r.dim > 0; });
    // The zero space has dimension −∞: it lies below every threshold and never attains one.
    const bool below = std::all_of(c.rows.begin(), c.rows.end() - 1, [](const ClassRow& r) { return r.dim == 0 || r.dim < r.critical; });
    const bool proper_last = c.rows.back().dim == c.rows.back().expected;
    if (improper)
        c.verdict = Verdict::Improper;
    else if (below && proper_last)
        c.verdict = Verdict::TransverseIrreducible;
    else if (static_cast<int>(c.equality.size()) == m)
        c.verdict = Verdict::TransverseReducible;
    else
        c.verdict = Verdict::TransverseOther;
    return c;
}

/// L ∈ U_{α,s} F: F_{α_1} ∩ L = F_{α_1+s}, and for every j
/// F_{α_j} ∩ L = F_{α_j+1} ∩ L of dimension n + 2 − α_j − j − s.
inline bool cell_member(const Subspace& l, const DecSeq& a, int s, const Flag& f) {
    if (a.n() != f.ambient() || l.ambient() != f.ambient()) throw Error("cell_member: ambient dimension mismatch");
    if (s < 1 || l.dim() != a.n() + 1 - a.m() - s) return false;
    if (!(intersect(f[a(1)], l) == f[a(1) + s])) return false;
    for (int j = 1; j <= a.m(); ++j) {
        Subspace here = intersect(f[a(j)], l);
        if (!(here == intersect(f[a(j) + 1], l))) return false;
        if (here.dim() != critical_dim(a, j, s)) return false;
    }
    return true;
}

/// The β whose dense Schubert cell is U_{α,s}: [n] − α − {α_1+1, ..., α_1+s−1}
/// when α_1 ≤ n+1−s, otherwise the n+1−m−s smallest elements of [n] − α.
inline DecSeq cell_index(const DecSeq& a, int s, int n) {
    if (a.n() != n) throw Error("cell_index: ambient dimension mismatch");
    const int size = n + 1 - a.m() - s;
    if (s < 1 || size < 1) throw Error("cell_index: n+1-m-s must be positive");
    std::vector<bool> drop(static_cast<std::size_t>(n + 1), false);
    for (int x : a.entries()) drop[static_cast<std::size_t>(x)] = true;
    std::vector<int> keep;
    if (a(1) <= n + 1 - s) {
        for (int x = a(1) + 1; x <= a(1) + s - 1; ++x) drop[static_cast<std::size_t>(x)] = true;
        for (int x = n; x >= 1; --x)
            if (!drop[static_cast<std::size_t>(x)]) keep.push_back(x);
    } else {
        for (int x = 1; x <= n && static_cast<int>(keep.size()) < size; ++x)
            if (!drop[static_cast<std::size_t>(x)]) keep.push_back(x);
        std::reverse(keep.begin(), keep.end());
    }
    if (static_cast<int>(keep.size()) != size) throw Error("cell_index: inconsistent cell size");
    return DecSeq(n, std::move(keep));
}

/// Positions k where dim F_k ∩ L > dim F_{k+1} ∩ L, largest first: the
/// index of the Schubert cell containing L.
inline DecSeq jump_set(const Subspace& l, const Flag& f) {
    if (l.is_zero()) throw Error("jump_set: zero subspace");
    std::vector<int> jumps;
    for (int k = f.ambient(); k >= 1; --k)
        if (intersect(f[k], l).dim() > intersect(f[k + 1], l).dim()) jumps.push_back(k);
    return DecSeq(f.ambient(), std::move(jumps));
}

/// For L ∈ U_{α,s}: dim F_i ∩ L = dim F_i + 1 − j − (s − 1) whenever
/// α_j < i < α_{j−1}, 2 ≤ j ≤ m.
inline bool cell_dimension_check(const Subspace& l, const DecSeq& a, int s, const Flag& f) {
    if (!cell_member(l, a, s, f)) throw Error("cell_dimension_check: L is not in the cell U_{alpha,s}");
    const int n = a.n();
    for (int j = 2; j <= a.m(); ++j)
        for (int i = a(j) + 1; i < a(j - 1); ++i)
            if (intersect(f[i], l).dim() != (n + 1 - i) + 1 - j - (s - 1)) return false;
    return true;
}

/// Witness of the stratum X_j° of Ω_α F ∩ Ω_L: an m-plane H with
/// dim H ∩ F_{α_i} = i for all i, H ∩ L a line inside F_{α_j} but not inside
/// F_{α_{j−1}}. Built from f_j ∈ F_{α_j} ∩ L and f_i random in F_{α_i};
/// every draw is verified.
inline Subspace witness_point(const DecSeq& a, const Flag& f, const Subspace& l, int mode, Rng& rng) {
    if (a.n() != f.ambient() || l.ambient() != f.ambient()) throw Error("witness_point: ambient dimension mismatch");
    const int m = a.m();
    if (mode < 1 || mode > m) throw Error("witness_point: mode must be in [1, m]");
    const int s = a.n() + 1 - m - l.dim();
    if (s < 1) throw Error("witness_point: L is too large for a special condition");
    for (int j = 1; j <= m; ++j) {
        const int d = intersect(f[a(j)], l).dim();
        if (d > critical_dim(a, j, s) && d > 0) throw Error("witness_point: intersection is improper at j=" + std::to_string(j));
    }
    const Subspace target = intersect(f[a(mode)], l);
    if (target.is_subspace_of(previous_condition(a, mode, f)))
        throw Error("witness_point: F_{alpha_j} ∩ L lies in F_{alpha_{j-1}} for j=" + std::to_string(mode));

    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<Vec> rows;
        for (int i = 1; i <= m; ++i) rows.push_back(random_vector(i == mode ? target : f[a(i)], rng));
        Subspace h = Subspace::span(a.n(), rows);
        if (h.dim() != m) continue;
        bool ok = true;
        for (int i = 1; i <= m && ok; ++i) ok = intersect(h, f[a(i)]).dim() == i;
        if (!ok) continue;
        Subspace hl = intersect(h, l);
        if (hl.dim() != 1 || !hl.is_subspace_of(f[a(mode)]) || hl.is_subspace_of(previous_condition(a, mode, f))) continue;
        return h;
    }
    throw Error("witness_point: no witness found");
}

/// Modes j for which witness_point applies: F_{α_j} ∩ L ≠ 0 and not inside
/// F_{α_{j−1}}.
inline std::vector<int> witness_modes(const DecSeq& a, const Flag& f, const Subspace& l) {
    std::vector<int> out;
    for (int j = 1; j <= a.m(); ++j) {
        const Subspace t = intersect(f[a(j)], l);
        if (!t.is_zero() && !t.is_subspace_of(previous_condition(a, j, f))) out.push_back(j);
    }
    return out;
}

/// Seeded L of dimension n+1−m−s with dim F_{α_j} ∩ L equal to the critical
/// dimension for every j, built as a nested chain D_1 ⊂ ... ⊂ D_m with
/// D_j ⊂ F_{α_j} and completed by random vectors. Verified to classify as
/// reducible; nullopt when the critical dimensions are not all positive or
/// no draw succeeds.
inline std::optional<Subspace> reducible_special_subspace(const DecSeq& a, int s, const Flag& f, Rng& rng) {
    const int n = a.n();
    const int m = a.m();
    const int dim_l = n + 1 - m - s;
    if (s < 1 || dim_l < 1 || critical_dim(a, 1, s) < 1 || critical_dim(a, m, s) > dim_l) return std::nullopt;
    for (int attempt = 0; attempt < 50; ++attempt) {
        std::vector<Vec> rows;
        int have = 0;
        for (int j = 1; j <= m; ++j)
            for (; have < critical_dim(a, j, s); ++have) rows.push_back(random_vector(f[a(j)], rng));
        for (; have < dim_l; ++have) rows.push_back(random_vector(Subspace::whole(n), rng));
        Subspace l = Subspace::span(n, std::move(rows));
        if (l.dim() == dim_l && classify_pieri(a, f, l, s).verdict == Verdict::TransverseReducible) return l;
    }
    return std::nullopt;
}

/// Codimension of T_H Ω_α F ∩ T_H Ω_L in T_H Ω_α F, with Hom(H, V/H)
/// identified with Hom(H, K) for the given complement K of H. The space of
/// maps is that of m × (n−m) matrices Φ; each condition φ(H ∩ W) ⊆ (W+H)/H
/// contributes rows pairing a basis vector of H ∩ W with the annihilator of
/// the image of W in K.
inline int tangent_codim_in_chart(const Subspace& h, const DecSeq& a, const Flag& f, const Subspace& l,
                                  const std::vector<Vec>& complement) {
    require_plane(h, a, f, "tangent_codim");
    const int n = a.n();
    const int m = a.m();
    for (int j = 1; j <= m; ++j)
        if (intersect(h, f[a(j)]).dim() != j) throw Error("tangent_codim: H is not a smooth point of the Schubert variety");
    if (intersect(h, l).dim() != 1) throw Error("tangent_codim: dim H ∩ L must be 1");
    if (static_cast<int>(complement.size()) != n - m) throw Error("tangent_codim: complement has wrong dimension");

    std::vector<Vec> frame = h.basis();
    frame.insert(frame.end(), complement.begin(), complement.end());
    const Chart chart(n, frame);  // throws unless H ⊕ K = V
    const int q = n - m;

    auto conditions = [&](const Subspace& w) {
        std::vector<Vec> rows;
        std::vector<Vec> image;
        for (const auto& v : w.basis()) {
            Vec c = chart.to_coords(v);
            image.emplace_back(c.begin() + m, c.end());
        }
        const Subspace ann = annihilator(Subspace::span(q, std::move(image)));
        const Subspace hw = intersect(h, w);
        for (const auto& u : hw.basis()) {
            Vec c = chart.to_coords(u);
            for (const auto& y : ann.basis()) {
                Vec row(static_cast<std::size_t>(m * q), Rat(0));
                for (int x = 0; x < m; ++x)
                    for (int b = 0; b < q; ++b)
                        row[static_cast<std::size_t>(x * q + b)] = c[static_cast<std::size_t>(x)] * y[static_cast<std::size_t>(b)];
                rows.push_back(std::move(row));
            }
        }
        return rows;
    };

    std::vector<Vec> schubert_rows;
    for (int j = 1; j <= m; ++j) {
        auto r = conditions(f[a(j)]);
        schubert_rows.insert(schubert_rows.end(), r.begin(), r.end());
    }
    std::vector<Vec> all = schubert_rows;
    auto lr = conditions(l);
    all.insert(all.end(), lr.begin(), lr.end());
    return rank_of(m * q, std::move(all)) - rank_of(m * q, std::move(schubert_rows));
}

/// Complement of H spanned by the coordinate vectors off its pivots.
inline std::vector<Vec> coordinate_complement(const Subspace& h) {
    std::vector<Vec> k;
    for (int i : quotient_chart(h)) k.push_back(unit_vector(h.ambient(), i + 1));
    return k;
}

inline int tangent_codim(const Subspace& h, const DecSeq& a, const Flag& f, const Subspace& l) {
    return tangent_codim_in_chart(h, a, f, l, coordinate_complement(h));
}

/// One component of Y_{α,r}(F, L), indexed by β ∈ α*r: the Schubert variety
/// Ω_{β+(s−1)δ¹} F when j(α,β) = 1 (absent when that index leaves [n]),
/// otherwise X_β(j(α,β), F, L).
struct CycleComponent {
    enum class Kind { Schubert, X };
    Kind kind = Kind::Schubert;
    DecSeq index;
    int j = 1;
    std::optional<DecSeq> variety;  // Schubert kind only
};

struct CycleDescriptor {
    DecSeq alpha;
    int r = 0;
    int s = 0;
    Flag flag;
    Subspace L;
    std::vector<CycleComponent> components;

    std::vector<DecSeq> indices() const {
        std::vector<DecSeq> out;
        for (const auto& c : components) out.push_back(c.index);
        return out;
    }

    bool member(const CycleComponent& c, const Subspace& h) const {
        if (c.kind == CycleComponent::Kind::X) return x_member(h, c.index, c.j, flag, L);
        return c.variety && schubert_member(h, *c.variety, flag);
    }

    bool contains(const Subspace& h) const {
        return std::any_of(components.begin(), components.end(), [&](const CycleComponent& c) { return member(c, h); });
    }
};

inline CycleComponent make_component(const DecSeq& a, const DecSeq& b, int s) {
    CycleComponent c;
    c.index = b;
    c.j = b == a ? 1 : first_diff_index(a, b);
    if (c.j == 1) {
        c.kind = CycleComponent::Kind::Schubert;
        c.variety = plus_delta(b, 1, s - 1);
    } else {
        c.kind = CycleComponent::Kind::X;
    }
    return c;
}

/// Y_{α,r}(F, L) for L ∈ U_{α,s} F. r = 0 gives the single component
/// Ω_{α+(s−1)δ¹}.
inline CycleDescriptor y_cycle(const DecSeq& a, int r, int s, const Flag& f, const Subspace& l) {
    if (!cell_member(l, a, s, f)) throw Error("y_cycle: L is not in the cell U_{alpha,s}");
    CycleDescriptor y{a, r, s, f, l, {}};
    for (const auto& b : pieri_set(a, r)) y.components.push_back(make_component(a, b, s));
    return y;
}

}  // namespace pieri
