#pragma once

#include "pieri/family.hpp"
#include "pieri/flag.hpp"
#include "pieri/report.hpp"
#include "pieri/schubgeom.hpp"
#include "pieri/seqcomb.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pieri {

/// Pencil of hyperplanes L_t of k^N adapted to a flag M_1 ⊃ ... ⊃ M_N:
/// with coordinates x_i dual to e_i chosen so that M_i = ⟨x_1..x_{i−1}⟩^⊥
/// and L_∞ = ⟨x_{l−1}⟩^⊥, L_t = ⟨M_l, t e_j + e_{j+1} | 1 ≤ j ≤ l−2⟩.
struct Pencil {
    Flag flag;
    int l = 0;
    Subspace l_inf;
    std::vector<Vec> e;  // e_1..e_N
    PolyFamily family;    // t ↦ L_t

    int ambient() const { return flag.ambient(); }
};

inline Pencil build_pencil(const Flag& mflag, int l, const Subspace& l_inf) {
    const int n = mflag.ambient();
    if (l_inf.ambient() != n) throw Error("build_pencil: ambient dimension mismatch");
    if (l < 2 || l > n + 1) throw Error("build_pencil: l must lie in [2, N+1]");
    if (l_inf.dim() != n - 1) throw Error("build_pencil: L_inf is not a hyperplane");
    if (!mflag[l].is_subspace_of(l_inf)) throw Error("build_pencil: L_inf does not contain M_l");
    if (mflag[l - 1].is_subspace_of(l_inf)) throw Error("build_pencil: L_inf contains M_{l-1}");

    const Vec phi = annihilator(l_inf).basis().front();
    // Rows y_i of (B^T)^{-1} satisfy y_i · b_k = δ_ik for the adapted basis B.
    std::vector<Vec> x = inverse(transpose(mflag.basis(), n));
    x[static_cast<std::size_t>(l - 2)] = phi;
    const std::vector<Vec> xinv = inverse(x);
    const std::vector<Vec> e = transpose(xinv, n);  // e_j = column j of X^{-1}

    std::vector<PolyVec> gens;
    auto constant = [](const Vec& v) { return PolyVec(v.begin(), v.end()); };
    for (int j = l; j <= n; ++j) gens.push_back(constant(e[static_cast<std::size_t>(j - 1)]));
    for (int j = 1; j <= l - 2; ++j) {
        PolyVec g;
        for (int i = 0; i < n; ++i)
            g.push_back(Poly(std::vector<Rat>{e[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)],
                                              e[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i)]}));
        gens.push_back(std::move(g));
    }
    return {mflag, l, l_inf, e, PolyFamily(n, std::move(gens))};
}

/// Verifies the pencil: for t in the sample set, L_t is a hyperplane
/// containing M_l but not M_{l−1}; for i ≤ l−1, dim M_i ∩ L_t = N − i and
/// the limit at 0 of M_i ∩ L_t is M_{i+1}; L_∞ = ⟨M_l, e_1..e_{l−2}⟩.
inline CheckList pencil_check(const Pencil& p) {
    CheckList c;
    const int n = p.ambient();
    const Flag& m = p.flag;
    for (const auto& t : sample_points()) {
        const Subspace lt = p.family.at(t);
        const std::string at = " at t=" + to_string(t);
        c.add("L_t is a hyperplane" + at, lt.dim() == n - 1);
        c.add("L_t contains M_l" + at, m[p.l].is_subspace_of(lt));
        c.add("L_t avoids M_{l-1}" + at, !m[p.l - 1].is_subspace_of(lt));
        for (int i = 1; i <= p.l - 1; ++i)
            c.add("dim M_" + std::to_string(i) + " ∩ L_t = N-" + std::to_string(i) + at,
                  intersect(m[i], lt).dim() == n - i);
    }
    for (int i = 1; i <= p.l - 1; ++i) {
        const Subspace lim = limit_at_zero(intersect(m[i], p.family));
        c.add("lim M_" + std::to_string(i) + " ∩ L_t = M_" + std::to_string(i + 1), lim == m[i + 1]);
    }
    std::vector<Vec> inf = m[p.l].basis();
    inf.insert(inf.end(), p.e.begin(), p.e.begin() + std::max(0, p.l - 2));
    c.add("L_inf = <M_l, e_1..e_{l-2}>", Subspace::span(n, std::move(inf)) == p.l_inf);
    return c;
}

/// How one component of Y_{α,r}(F, L_t) degenerates.
struct BetaRecord {
    DecSeq beta;
    int j = 1;
    std::string kind_before;            // "Schubert" or "X"
    std::optional<Subspace> limit;      // lim F_{β_j} ∩ L_t, for j > 1
    std::vector<DecSeq> children;       // {γ | β ≺_α γ}
    std::vector<std::string> child_kinds;
};

struct StepReport {
    DecSeq alpha;
    int s = 0;
    int r = 0;
    Subspace M;
    Subspace l_inf;
    int l = 0;
    std::vector<BetaRecord> records;
    CheckList checks;

    bool passed() const { return checks.passed(); }
};

inline std::string component_kind(const CycleComponent& c) {
    if (c.kind == CycleComponent::Kind::X) return "X_" + c.index.str() + "(" + std::to_string(c.j) + ")";
    return c.variety ? "Omega_" + c.variety->str() : "empty";
}

namespace detail {

/// Random points of a cycle component; empty components yield none.
inline std::vector<Subspace> sample_component(const CycleComponent& c, const Flag& f, const Subspace& l, Rng& rng, int count) {
    std::vector<Subspace> out;
    for (int tries = 0; static_cast<int>(out.size()) < count && tries < 20 * count; ++tries) {
        std::optional<Subspace> h;
        if (c.kind == CycleComponent::Kind::X)
            h = random_x_point(c.index, c.j, f, l, rng);
        else if (c.variety)
            h = random_schubert_point(*c.variety, f, rng);
        else
            return out;
        if (h) out.push_back(std::move(*h));
    }
    return out;
}

/// An m-plane with f_j drawn from `target` and f_i from F_{β_i} otherwise.
inline std::optional<Subspace> draw_with(const DecSeq& b, int j, const Flag& f, const Subspace& target, Rng& rng) {
    if (target.is_zero()) return std::nullopt;
    std::vector<Vec> rows;
    for (int i = 1; i <= b.m(); ++i) rows.push_back(random_vector(i == j ? target : f[b(i)], rng));
    auto h = Subspace::span(f.ambient(), std::move(rows));
    if (h.dim() != b.m()) return std::nullopt;
    return h;
}

}  // namespace detail

/// Checks one degeneration step: the pencil L_t of hyperplanes of
/// M ∈ U_{α,s−1} lies in U_{α,s}, each component of Y_{α,r}(F, L_t)
/// degenerates to the components indexed by its children in the tree, and
/// these assemble to Y_{α,r+1}(F, M).
inline StepReport step_verify(const DecSeq& a, int s, int r, const Flag& f, const Subspace& m, const Subspace& l_inf,
                              std::uint64_t seed = 0) {
    if (a.n() != f.ambient() || m.ambient() != f.ambient() || l_inf.ambient() != f.ambient())
        throw Error("step_verify: ambient dimension mismatch");
    if (s < 2) throw Error("step_verify: s must be at least 2");
    if (r < 0) throw Error("step_verify: r must be non-negative");
    if (!cell_member(m, a, s - 1, f)) throw Error("step_verify: M is not in U_{alpha,s-1}");
    if (!l_inf.is_subspace_of(m) || l_inf.dim() != m.dim() - 1) throw Error("step_verify: L_inf is not a hyperplane of M");
    if (!f[a(1) + s].is_subspace_of(l_inf)) throw Error("step_verify: L_inf does not contain F_{alpha_1+s}");
    if (f[a(1) + s - 1].is_subspace_of(l_inf)) throw Error("step_verify: L_inf contains F_{alpha_1+s-1}");

    Rng rng(seed);
    StepReport rep{a, s, r, m, l_inf, 0, {}, {}};
    auto& c = rep.checks;
    const auto ind = induced_flag(f, m);
    const int big_n = m.dim();
    rep.l = big_n + 1 - f[a(1) + s].dim();
    const Pencil pencil = build_pencil(ind.flag, rep.l, ind.chart.to_coords(l_inf));
    const PolyFamily lt = embed(ind.chart, pencil.family);
    const CheckList pc = pencil_check(pencil);
    c.add("pencil", pc.passed(), pc.first_failure() ? pc.first_failure()->clause : "");

    for (const auto& t : sample_points())
        c.add("(i) L_t in U_{alpha,s} at t=" + to_string(t), cell_member(lt.at(t), a, s, f));
    c.add("(i) L_inf in U_{alpha,s}", cell_member(l_inf, a, s, f));

    std::vector<DecSeq> all_children;
    std::vector<CycleComponent> assembled;
    for (const auto& b : pieri_set(a, r)) {
        BetaRecord rec;
        rec.beta = b;
        const CycleComponent before = make_component(a, b, s);
        rec.j = before.j;
        rec.kind_before = before.kind == CycleComponent::Kind::X ? "X" : "Schubert";
        rec.children = tree_children(a, b);
        const std::string tag = "beta=" + b.str() + ": ";
        for (const auto& g : rec.children) {
            const CycleComponent after = make_component(a, g, s - 1);
            rec.child_kinds.push_back(component_kind(after));
            all_children.push_back(g);
            assembled.push_back(after);
        }

        if (rec.j == 1) {
            // Ω_{β+(s−1)δ¹} is reindexed as Ω_{γ+(s−2)δ¹} with γ = β + δ¹.
            // Both are empty when β_1 = n.
            const auto g = plus_delta(b, 1);
            const bool single = g ? rec.children == std::vector<DecSeq>{*g} : rec.children.empty();
            c.add(tag + "(iii) unique child beta+delta^1", single);
            const auto after = g ? make_component(a, *g, s - 1).variety : std::nullopt;
            c.add(tag + "(iii) Schubert component unchanged", before.variety == after);
            rep.records.push_back(std::move(rec));
            continue;
        }

        const int j = rec.j;
        const auto rf = restrict_flag(f, b(j));
        const DecSeq bj = restrict_seq(b, j);
        const PolyFamily lprime_t = intersect(f[b(j)], lt);
        for (const auto& t : sample_points()) {
            const auto cl = classify_pieri(bj, rf.flag, rf.chart.to_coords(lprime_t.at(t)), s - 1);
            c.add(tag + "(ii) restricted intersection irreducible at t=" + to_string(t),
                  cl.verdict == Verdict::TransverseIrreducible, verdict_name(cl.verdict));
        }
        const Subspace lim = limit_at_zero(lprime_t);
        rec.limit = lim;
        c.add(tag + "(ii) limit has generic dimension", lim.dim() == lprime_t.generic_dim());
        c.add(tag + "(ii) lim F_{beta_j} ∩ L_t = F_{beta_j+1} ∩ M", lim == intersect(f[b(j) + 1], m));
        const Subspace lim_local = rf.chart.to_coords(lim);
        c.add(tag + "(ii) limit in U_{beta|j,s-1}", cell_member(lim_local, bj, s - 1, rf.flag));
        c.add(tag + "(ii) restricted limit intersection transverse",
              classify_pieri(bj, rf.flag, lim_local, s - 1).verdict != Verdict::Improper);

        // Sampled containments between X_β(j, F, L') and its children.
        bool down = true;
        bool up = true;
        for (const auto& g : rec.children) {
            const CycleComponent comp = make_component(a, g, s - 1);
            for (const auto& h : detail::sample_component(comp, f, m, rng, 2)) down = down && x_member(h, b, j, f, lim);
            const int k = first_diff_index(a, g);
            for (int rep_i = 0; rep_i < 2; ++rep_i)
                if (auto h = detail::draw_with(b, j, f, intersect(f[g(k)], m), rng)) {
                    up = up && x_member(*h, b, j, f, lim);
                    const CycleDescriptor y{a, r + 1, s - 1, f, m, {comp}};
                    up = up && y.member(comp, *h);
                }
        }
        for (int rep_i = 0; rep_i < 2; ++rep_i)
            if (auto h = random_x_point(b, j, f, lim, rng)) {
                CycleDescriptor y{a, r + 1, s - 1, f, m, {}};
                for (const auto& g : rec.children) y.components.push_back(make_component(a, g, s - 1));
                up = up && y.contains(*h);
            }
        c.add(tag + "(iii) children lie in the limit component", down);
        c.add(tag + "(iii) limit component covered by children", up);
        rep.records.push_back(std::move(rec));
    }

    std::vector<DecSeq> sorted = all_children;
    sort_canonical(sorted);
    const bool disjoint = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    c.add("(iii) children partition alpha*(r+1)", disjoint && sorted == pieri_set(a, r + 1));
    const auto target = y_cycle(a, r + 1, s - 1, f, m);
    bool kinds = assembled.size() == target.components.size();
    for (const auto& comp : assembled) {
        auto it = std::find_if(target.components.begin(), target.components.end(),
                               [&](const CycleComponent& t) { return t.index == comp.index; });
        kinds = kinds && it != target.components.end() && component_kind(*it) == component_kind(comp);
    }
    c.add("(iii) assembled cycle equals Y_{alpha,r+1}(F,M)", kinds);
    return rep;
}

/// One stage of the chain of deformations.
struct Stage {
    int index = 0;  // 1..b+1
    std::string kind;  // "initial", "step", "collapse"
    int s = 0;
    std::vector<DecSeq> indices;  // component indices after the stage
    std::optional<StepReport> step;
    CheckList checks;
};

struct ChainReport {
    DecSeq alpha;
    int b = 0;
    std::vector<Subspace> M;  // M_1..M_b
    std::vector<Stage> stages;
    std::vector<std::vector<DecSeq>> histories;  // root-to-leaf component histories

    bool passed() const {
        return std::all_of(stages.begin(), stages.end(), [](const Stage& s) { return s.checks.passed(); });
    }
};

/// Explicit chain from Ω_α F ∩ Ω_K to Σ_{γ∈α*b} Ω_γ F: M_b ∈ U_{α,1} is a
/// random point of the dense cell, and M_{i−1} = L_{i,∞} for a random
/// hyperplane L_{i,∞} of M_i containing F_{α_1+s} but not F_{α_1+s−1}.
inline ChainReport chain_deformation(const DecSeq& a, int b, const Flag& f, const Subspace& k, std::uint64_t seed = 0) {
    const int n = a.n();
    const int m = a.m();
    if (f.ambient() != n || k.ambient() != n) throw Error("chain_deformation: ambient dimension mismatch");
    if (b < 1) throw Error("chain_deformation: b must be positive");
    if (k.dim() != n + 1 - m - b) throw Error("chain_deformation: dim K must be n+1-m-b");
    if (!meets_properly(k, f)) throw Error("chain_deformation: K does not meet the flag properly");
    if (a(1) + b > n) throw Error("chain_deformation: requires alpha_1 + b <= n");

    Rng rng(seed);
    ChainReport rep;
    rep.alpha = a;
    rep.b = b;
    rep.M.assign(static_cast<std::size_t>(b), Subspace::zero(n));
    Subspace cur = random_cell_point(cell_index(a, 1, n), f, rng);
    if (!cell_member(cur, a, 1, f)) throw Error("chain_deformation: generic point of the cell is not in U_{alpha,1}");
    rep.M[static_cast<std::size_t>(b - 1)] = cur;

    std::vector<Stage> steps;
    for (int i = b; i >= 2; --i) {
        const int s = b + 2 - i;
        const auto ind = induced_flag(f, cur);
        const int l = cur.dim() + 1 - f[a(1) + s].dim();
        Vec phi(static_cast<std::size_t>(cur.dim()), Rat(0));
        for (int q = 1; q < l - 1; ++q) phi[static_cast<std::size_t>(q - 1)] = rng.small();
        phi[static_cast<std::size_t>(l - 2)] = rng.nonzero();
        const Subspace l_inf = ind.chart.from_coords(annihilator(Subspace::span(cur.dim(), {phi})));

        Stage st;
        st.index = i;
        st.kind = "step";
        st.s = s;
        st.step = step_verify(a, s, i - 1, f, cur, l_inf, seed + static_cast<std::uint64_t>(i));
        st.checks.append(st.step->checks);
        st.checks.add("M_" + std::to_string(i - 1) + " in U_{alpha," + std::to_string(s) + "}", cell_member(l_inf, a, s, f));
        st.indices = pieri_set(a, i);
        steps.push_back(std::move(st));
        cur = l_inf;
        rep.M[static_cast<std::size_t>(i - 2)] = cur;
    }

    Stage first;
    first.index = 1;
    first.kind = "initial";
    first.s = b;
    const auto cl = classify_pieri(a, f, k, b);
    first.checks.add("Omega_alpha ∩ Omega_K irreducible", cl.verdict == Verdict::TransverseIrreducible, verdict_name(cl.verdict));
    first.checks.add("M_1 in U_{alpha,b}", cell_member(rep.M.front(), a, b, f));
    const auto y1 = y_cycle(a, 1, b, f, rep.M.front());
    first.indices = y1.indices();
    first.checks.add("Y_{alpha,1}(F,M_1) indexed by alpha*1", first.indices == pieri_set(a, 1));
    rep.stages.push_back(std::move(first));
    std::reverse(steps.begin(), steps.end());
    for (auto& st : steps) rep.stages.push_back(std::move(st));

    Stage last;
    last.index = b + 1;
    last.kind = "collapse";
    last.s = 1;
    const auto yb = y_cycle(a, b, 1, f, rep.M.back());
    last.indices = yb.indices();
    bool collapse = true;
    for (const auto& comp : yb.components) {
        if (comp.kind != CycleComponent::Kind::X) continue;
        for (int q = 0; q < 3; ++q)
            if (auto h = random_schubert_point(comp.index, f, rng)) {
                collapse = collapse && x_member(*h, comp.index, comp.j, f, rep.M.back());
                if (intersect(*h, f[comp.index(comp.j)]).dim() == comp.j)
                    collapse = collapse && fibration_member(*h, comp.index, comp.j, f, rep.M.back());
            }
    }
    last.checks.add("X components equal their Schubert varieties", collapse);
    last.checks.add("components indexed by alpha*b", last.indices == pieri_set(a, b));
    rep.stages.push_back(std::move(last));

    // Histories: follow each leaf back through the step reports' children.
    std::vector<std::vector<DecSeq>> paths;
    for (const auto& g : pieri_set(a, 1)) paths.push_back({a, g});
    for (const auto& st : rep.stages) {
        if (!st.step) continue;
        std::vector<std::vector<DecSeq>> next;
        for (const auto& p : paths)
            for (const auto& rec : st.step->records)
                if (rec.beta == p.back())
                    for (const auto& g : rec.children) {
                        auto q = p;
                        q.push_back(g);
                        next.push_back(std::move(q));
                    }
        paths = std::move(next);
    }
    rep.histories = std::move(paths);
    return rep;
}

}  // namespace pieri
