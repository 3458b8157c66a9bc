#pragma once

#include "pieri/deform.hpp"
#include "pieri/family.hpp"
#include "pieri/flag.hpp"
#include "pieri/report.hpp"
#include "pieri/schubgeom.hpp"

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace pieri {

/// The worked family for n = 9, m = 3, s = 2, α = 741 in standard
/// coordinates: L_{s,t} is cut out by four linear forms, L = span{e_1..e_5}
/// is its fibre at (∞, ∞), and L_{0,t} degenerates to L_{0,0} as t → 0.
namespace worked {

constexpr int n = 9;

inline Vec form(std::initializer_list<std::pair<int, Rat>> terms) {
    Vec v(n, Rat(0));
    for (const auto& [i, c] : terms) v[static_cast<std::size_t>(i - 1)] += c;
    return v;
}

/// Λ_1..Λ_4 at (s, t).
inline std::vector<Vec> lambda_forms(const Rat& s, const Rat& t) {
    const Rat t2 = t * t, t3 = t2 * t, t4 = t3 * t;
    return {form({{1, Rat(1)}, {8, s}}),
            form({{2, Rat(1)}, {3, t}, {4, s * t2}, {5, t2 + s * t3}, {6, t3 + s * t4}, {8, t4}}),
            form({{4, Rat(1)}, {9, s}}),
            form({{7, Rat(1)}})};
}

/// The recombined forms in σ = 1/s, τ = 1/t, valid for (σ, τ) ∈ k².
inline std::vector<Vec> recombined_forms(const Rat& sigma, const Rat& tau) {
    const Rat t2 = tau * tau, t3 = t2 * tau, t4 = t3 * tau;
    return {form({{1, -sigma * sigma}, {2, sigma * t4}, {3, sigma * t3}, {4, t2}, {5, sigma * t2 + tau}, {6, sigma * tau + 1}}),
            form({{7, Rat(1)}}),
            form({{1, sigma}, {8, Rat(1)}}),
            form({{4, sigma}, {9, Rat(1)}})};
}

inline Subspace zero_set(const std::vector<Vec>& forms) { return annihilator(Subspace::span(n, forms)); }

inline Subspace L_st(const Rat& s, const Rat& t) { return zero_set(lambda_forms(s, t)); }

/// L_{0,t} = span{t e_2 − e_3, t e_3 − e_5, t e_5 − e_6, t e_6 − e_8, e_9}.
inline PolyFamily L0t_family() {
    auto gen = [](int i, int k) {
        PolyVec v(n);
        v[static_cast<std::size_t>(i - 1)] = Poly::t();
        v[static_cast<std::size_t>(k - 1)] = Poly(-1);
        return v;
    };
    PolyVec e9(n);
    e9[8] = Poly(1);
    return PolyFamily(n, {gen(2, 3), gen(3, 5), gen(5, 6), gen(6, 8), e9});
}

inline Subspace coords(std::initializer_list<int> idx) { return Subspace::coordinate(n, std::vector<int>(idx)); }

}  // namespace worked

struct WorkedExampleReport {
    CheckList checks;
    std::vector<DecSeq> final_components;
    std::vector<std::pair<std::string, std::string>> facts;  // rendered table rows

    bool passed() const { return checks.passed(); }

    /// Aligned two-column table, one verified clause per line.
    std::string table() const {
        std::size_t w = 0;
        for (const auto& c : checks.items()) w = std::max(w, display_width(c.clause));
        std::ostringstream os;
        for (const auto& [k, v] : facts) os << k << ": " << v << "\n";
        for (const auto& c : checks.items()) {
            os << c.clause << std::string(w - display_width(c.clause) + 2, ' ') << (c.ok ? "ok" : "FAIL");
            if (!c.detail.empty()) os << "  (" << c.detail << ")";
            os << "\n";
        }
        return os.str();
    }
};

inline WorkedExampleReport worked_example_run(std::uint64_t seed = 0) {
    using namespace worked;
    WorkedExampleReport rep;
    auto& c = rep.checks;
    Rng rng(seed);
    const Flag f = standard_flag(n);
    const DecSeq a(n, {7, 4, 1});
    const int s = 2;
    const auto& pts = sample_points();

    // (A) Generic (s, t).
    bool irreducible = true, proper = true, recombined = true;
    for (const auto& sv : pts)
        for (const auto& tv : pts) {
            const Subspace l = L_st(sv, tv);
            irreducible = irreducible && classify_pieri(a, f, l, s).verdict == Verdict::TransverseIrreducible;
            for (int i : {1, 4, 7}) proper = proper && intersect(f[i], l).dim() == expected_meet(n + 1 - i, l.dim(), n);
            recombined = recombined && zero_set(recombined_forms(1 / sv, 1 / tv)) == l;
        }
    c.add("(A) recombined forms cut out L_{s,t}", recombined);
    c.add("(A) L_{s,t} meets F_1, F_4, F_7 properly", proper);
    c.add("(A) Omega_741 ∩ Omega_{L_{s,t}} transverse and irreducible", irreducible);
    const Subspace l_inf = zero_set(recombined_forms(Rat(0), Rat(0)));
    c.add("(A) L_{inf,inf} = span{e1..e5}", l_inf == coords({1, 2, 3, 4, 5}));

    // (B) L_{0,t}, t ≠ 0.
    const PolyFamily l0t = L0t_family();
    bool b_forms = true, b_cell = true, b_f2 = true, b_f4 = true, b_f7 = true, b_spans = true, b_red = true, b_wit = true,
         b_tangent = true, b_dims = true, b_y = true;
    for (const auto& tv : pts) {
        const Subspace l = l0t.at(tv);
        const Rat t2 = tv * tv;
        b_forms = b_forms && l == zero_set({form({{1, Rat(1)}}), form({{4, Rat(1)}}), form({{7, Rat(1)}}),
                                            form({{2, Rat(1)}, {3, tv}, {5, t2}, {6, t2 * tv}, {8, t2 * t2}})}) &&
                  l == L_st(Rat(0), tv);
        b_cell = b_cell && cell_member(l, a, s, f);
        b_dims = b_dims && cell_dimension_check(l, a, s, f);
        b_f2 = b_f2 && l.is_subspace_of(f[2]);
        const Subspace l4 = intersect(l, f[4]);
        const Subspace expect4 = Subspace::span(n, {form({{5, tv}, {6, Rat(-1)}}), form({{6, tv}, {8, Rat(-1)}}), form({{9, Rat(1)}})});
        b_f4 = b_f4 && l4 == intersect(l, f[5]) && l4.dim() == 3 && l4 == expect4;
        b_f7 = b_f7 && intersect(l, f[7]) == f[9];
        b_spans = b_spans && sum_span(l, f[4]) == f[2] && sum_span(l4, f[7]) == f[5] && intersect(l, f[7]).is_subspace_of(f[8]);
        const auto cl = classify_pieri(a, f, l, s);
        b_red = b_red && cl.verdict == Verdict::TransverseReducible && cl.equality == std::vector<int>{1, 2, 3};
        for (int j = 1; j <= 3; ++j) {
            const Subspace h = witness_point(a, f, l, j, rng);
            b_wit = b_wit && schubert_member(h, a, f) && special_member(h, l) && x_member(h, *plus_delta(a, j), j, f, l);
            b_tangent = b_tangent && tangent_codim(h, a, f, l) == s;
        }
        const auto y = y_cycle(a, 1, s, f, l);
        std::vector<std::string> kinds;
        for (const auto& comp : y.components) kinds.push_back(component_kind(comp));
        b_y = b_y && kinds == std::vector<std::string>{"Omega_941", "X_751(2)", "X_742(3)"};
    }
    c.add("(B) L_{0,t} is cut out by x1, x4, x7, x2+t x3+t^2 x5+t^3 x6+t^4 x8", b_forms);
    c.add("(B) L_{0,t} in U_{741,2}", b_cell);
    c.add("(B) dimension formula on U_{741,2}", b_dims);
    c.add("(B) L_{0,t} ⊂ F_2", b_f2);
    c.add("(B) L_{0,t} ∩ F_4 = L_{0,t} ∩ F_5 = <t e5-e6, t e6-e8, e9>", b_f4);
    c.add("(B) L_{0,t} ∩ F_7 = F_9", b_f7);
    c.add("(B) F_2 = <L,F_4>, F_5 = <L∩F_4,F_7>, F_8 ⊇ L∩F_7", b_spans);
    c.add("(B) reducible with J = {1,2,3}", b_red);
    c.add("(B) witnesses lie in X_841(1), X_751(2), X_742(3)", b_wit);
    c.add("(B) tangent codimension s at witnesses", b_tangent);
    c.add("(B) components Omega_941 + X_751(2) + X_742(3)", b_y);
    rep.facts.emplace_back("dim L_{0,1} ∩ F_4", std::to_string(intersect(l0t.at(Rat(1)), f[4]).dim()));

    // (C) t → 0.
    const Subspace l00 = coords({3, 5, 6, 8, 9});
    const auto trace = limit_at_zero_traced(l0t);
    c.add("(C) lim L_{0,t} = L_{0,0} = span{e3,e5,e6,e8,e9}", trace.limit == l00);
    c.add("(C) F_8 ⊂ L_{0,0}", f[8].is_subspace_of(l00));
    c.add("(C) Omega_741 ∩ Omega_{L_{0,0}} improper", classify_pieri(a, f, l00, s).verdict == Verdict::Improper);
    c.add("(C) L_{0,0} does not meet F properly", !meets_properly(l00, f));
    bool excess = true;
    for (int q = 0; q < 4; ++q)
        if (auto h = random_schubert_point(DecSeq(n, {8, 4, 1}), f, rng))
            excess = excess && schubert_member(*h, a, f) && special_member(*h, l00);
    c.add("(C) Omega_841 ⊂ Omega_741 ∩ Omega_{L_{0,0}}", excess);
    const Subspace m = coords({2, 3, 5, 6, 8, 9});
    std::vector<DecSeq> found;
    c.add("(C) M = span{e2,e3,e5,e6,e8,e9} in U_{741,1}", cell_member(m, a, 1, f));

    // j = 1: X_841(1, F, L_{0,t}) = Ω_941.
    {
        bool meet = true, same = true;
        const DecSeq b841(n, {8, 4, 1}), b941(n, {9, 4, 1});
        for (const auto& tv : pts) {
            const Subspace l = l0t.at(tv);
            meet = meet && intersect(l, f[8]) == f[9];
            for (int q = 0; q < 2; ++q) {
                if (auto h = random_schubert_point(b941, f, rng)) same = same && x_member(*h, b841, 1, f, l);
                if (auto h = random_x_point(b841, 1, f, l, rng)) same = same && schubert_member(*h, b941, f);
            }
        }
        c.add("(C) j=1: L_{0,t} ∩ F_8 = F_9", meet);
        c.add("(C) j=1: X_841(1,F,L_{0,t}) = Omega_941", same);
        if (meet && same) found.push_back(b941);
    }

    // j = 2: the fibration over G_2 F_5 and its restricted intersection.
    {
        const DecSeq b751(n, {7, 5, 1});
        const auto rf = restrict_flag(f, 5);
        const DecSeq b31 = restrict_seq(b751, 2);
        const PolyFamily l5 = intersect(f[5], l0t);
        bool shape = true;
        for (const auto& tv : pts)
            shape = shape && l5.at(tv) == Subspace::span(n, {form({{6, Rat(1)}, {5, -tv}}), form({{8, Rat(1)}, {6, -tv}}), form({{9, Rat(1)}})});
        c.add("(C) j=2: F_5 ∩ L_{0,t} = <e6-t e5, e8-t e6, e9>", shape);
        const Subspace lim = limit_at_zero(l5);
        const Subspace f6m = intersect(f[6], m);
        c.add("(C) j=2: lim F_5 ∩ L_{0,t} = F_6 ∩ M = span{e6,e8,e9}", lim == f6m && f6m == coords({6, 8, 9}));
        const Subspace local = rf.chart.to_coords(lim);
        const auto cl = classify_pieri(b31, rf.flag, local, 1);
        c.add("(C) j=2: Omega_31 ∩ Omega_{F_6∩M} in G_2 F_5 reducible with J = {1,2}",
              b31 == DecSeq(5, {3, 1}) && cl.verdict == Verdict::TransverseReducible && cl.equality == std::vector<int>{1, 2});
        const auto y = y_cycle(b31, 1, 1, rf.flag, local);
        std::vector<DecSeq> lifted;
        for (const auto& g : y.indices()) {
            std::vector<int> e;
            for (int i = 1; i <= 2; ++i) e.push_back(g(i) + b751(2) - 1);
            e.push_back(b751(3));
            lifted.emplace_back(n, std::move(e));
        }
        c.add("(C) j=2: components lift to {851, 761}", lifted == std::vector<DecSeq>{DecSeq(n, {8, 5, 1}), DecSeq(n, {7, 6, 1})});
        found.insert(found.end(), lifted.begin(), lifted.end());
        c.add("(C) j=2: F_6 ∩ M ∩ F_7 = F_8 and <F_7, M ∩ F_6> = F_6",
              intersect(f6m, f[7]) == f[8] && sum_span(f[7], f6m) == f[6]);

        // Sub-cases on sampled K ∈ Ω_31 F|_5 ∩ Ω_{F_6∩M}.
        const DecSeq q41(5, {4, 1}), q32(5, {3, 2});
        // Draw K from <F_8, F_5> and <F_7, F_6 ∩ M>; each sample is sorted into
        // case (a) or (b) by its position and must lie in the predicted variety.
        int seen_a = 0, seen_b = 0;
        bool ca = true, cb = true;
        for (int q = 0; q < 8; ++q) {
            const Subspace k = q % 2 == 0 ? Subspace::span(n, {random_vector(f[8], rng), random_vector(f[5], rng)})
                                          : Subspace::span(n, {random_vector(f[7], rng), random_vector(f6m, rng)});
            if (k.dim() != 2) continue;
            const Subspace local_k = rf.chart.to_coords(k);
            if (!schubert_member(local_k, b31, rf.flag) || !special_member(k, f6m)) {
                ca = cb = false;
                continue;
            }
            if (intersect(k, f6m).is_subspace_of(f[7])) {
                ++seen_a;
                ca = ca && schubert_member(local_k, q41, rf.flag);
            } else {
                ++seen_b;
                cb = cb && schubert_member(local_k, q32, rf.flag);
            }
        }
        c.add("(C) j=2 (a): K ∩ F_6 ∩ M ⊂ F_7 gives K in Omega_41 F|_5", ca && seen_a > 0);
        c.add("(C) j=2 (b): K ∩ F_6 ∩ M ⊄ F_7 gives K in Omega_32 F|_5", cb && seen_b > 0);
        bool fib = true;
        for (const auto& [big, small] : {std::pair{DecSeq(n, {8, 5, 1}), q41}, std::pair{DecSeq(n, {7, 6, 1}), q32}})
            for (int q = 0; q < 3; ++q)
                if (auto h = random_schubert_point(big, f, rng)) {
                    const Subspace k = intersect(*h, f[5]);
                    fib = fib && k.dim() == 2 && schubert_member(rf.chart.to_coords(k), small, rf.flag);
                }
        c.add("(C) j=2: K = H ∩ F_5 for H in Omega_851, Omega_761 lies in Omega_41, Omega_32", fib);
    }

    // j = 3: X_742(3, F, L) = Ω_631 F|_2 ∩ Ω_L in G_3 F_2.
    {
        const DecSeq b742(n, {7, 4, 2});
        const auto rf = restrict_flag(f, 2);
        const DecSeq b631 = restrict_seq(b742, 3);
        bool irr = true;
        for (const auto& tv : pts)
            irr = irr && classify_pieri(b631, rf.flag, rf.chart.to_coords(l0t.at(tv)), 1).verdict == Verdict::TransverseIrreducible;
        c.add("(C) j=3: Omega_631 ∩ Omega_{L_{0,t}} in G_3 F_2 irreducible", b631 == DecSeq(8, {6, 3, 1}) && irr);
        const Subspace local00 = rf.chart.to_coords(l00);
        const auto cl = classify_pieri(b631, rf.flag, local00, 1);
        c.add("(C) j=3: Omega_631 ∩ Omega_{L_{0,0}} in G_3 F_2 reducible with J = {1,2,3}",
              cl.verdict == Verdict::TransverseReducible && cl.equality == std::vector<int>{1, 2, 3});
        c.add("(C) j=3: lim F_2 ∩ L_{0,t} = F_2 ∩ L_{0,0}", limit_at_zero(intersect(f[2], l0t)) == intersect(f[2], l00));
        c.add("(C) j=3: F_7 ∩ L_{0,0} = F_8, F_5 = <F_7, F_4 ∩ L_{0,0}>, F_3 = <F_4, F_2 ∩ L_{0,0}>",
              intersect(f[7], l00) == f[8] && sum_span(f[7], intersect(f[4], l00)) == f[5] &&
                  sum_span(f[4], intersect(f[2], l00)) == f[3]);
        const std::vector<std::pair<std::string, DecSeq>> cases{
            {"(a)", DecSeq(n, {8, 4, 2})}, {"(b)", DecSeq(n, {7, 5, 2})}, {"(c)", DecSeq(n, {7, 4, 3})}};
        for (int mode = 1; mode <= 3; ++mode) {
            bool ok = true;
            for (int q = 0; q < 2; ++q) {
                const Subspace h = rf.chart.from_coords(witness_point(b631, rf.flag, local00, mode, rng));
                ok = ok && x_member(h, b742, 3, f, l00) && schubert_member(h, cases[static_cast<std::size_t>(mode - 1)].second, f);
            }
            const auto& [label, target] = cases[static_cast<std::size_t>(mode - 1)];
            c.add("(C) j=3 " + label + ": witnesses lie in Omega_" + target.str(), ok);
            if (ok) found.push_back(target);
        }
    }

    rep.final_components = std::move(found);
    sort_canonical(rep.final_components);
    c.add("(C) limit components = 741*2", rep.final_components == pieri_set(a, 2));

    // The same degeneration as one verified step of the chain.
    const auto step = step_verify(a, s, 1, f, m, coords({2, 3, 5, 6, 9}), seed);
    c.add("step from M with L_inf = span{e2,e3,e5,e6,e9}", step.passed(),
          step.checks.first_failure() ? step.checks.first_failure()->clause : "");
    std::string comps;
    for (const auto& g : rep.final_components) comps += (comps.empty() ? "" : " ") + g.str();
    rep.facts.emplace_back("limit components", comps);
    rep.facts.emplace_back("limit division steps", std::to_string(trace.steps) + " (bound " + std::to_string(trace.step_bound) + ")");
    return rep;
}

}  // namespace pieri
