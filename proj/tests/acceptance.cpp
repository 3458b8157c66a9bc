// Acceptance run: one PASS/FAIL line per criterion with its runtime limit.

#include "pieri/deform.hpp"
#include "pieri/enumerative.hpp"
#include "pieri/tableaux.hpp"
#include "pieri/worked_example.hpp"

#include "instances.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

using namespace pieri;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

const DecSeq a741(9, {7, 4, 1});

Outcome pieri_golden(double& ms) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto got = pieri_set(a741, 2);
    ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const std::vector<DecSeq> want{DecSeq(9, {9, 4, 1}), DecSeq(9, {8, 5, 1}), DecSeq(9, {8, 4, 2}),
                                   DecSeq(9, {7, 6, 1}), DecSeq(9, {7, 5, 2}), DecSeq(9, {7, 4, 3})};
    Outcome o;
    o.require(got == want, "set differs");
    return o;
}

Outcome tree_golden() {
    Outcome o;
    const auto t = tree_chains(a741, 2);
    o.require(t.levels.size() == 3 && t.levels[0].size() == 1 && t.levels[1].size() == 3 && t.levels[2].size() == 6,
              "level sizes");
    auto e = [](std::vector<int> p, std::vector<int> c) { return std::pair{DecSeq(9, p), DecSeq(9, c)}; };
    const std::set<std::pair<DecSeq, DecSeq>> want{
        e({7, 4, 1}, {8, 4, 1}), e({7, 4, 1}, {7, 5, 1}), e({7, 4, 1}, {7, 4, 2}),
        e({8, 4, 1}, {9, 4, 1}), e({7, 5, 1}, {8, 5, 1}), e({7, 5, 1}, {7, 6, 1}),
        e({7, 4, 2}, {8, 4, 2}), e({7, 4, 2}, {7, 5, 2}), e({7, 4, 2}, {7, 4, 3}),
    };
    o.require(std::set(t.edges.begin(), t.edges.end()) == want, "edges");
    o.require(t.chains.size() == 6, "chain count");
    for (int n = 1; n <= 7; ++n)
        for (int m = 1; m <= n; ++m)
            for (const auto& a : all_sequences(n, m))
                for (int b = 0; b <= 3; ++b) {
                    std::vector<DecSeq> leaves;
                    for (const auto& c : tree_chains(a, b).chains) leaves.push_back(c.back());
                    sort_canonical(leaves);
                    o.require(leaves == pieri_set(a, b), "leaves of " + a.str() + " b=" + std::to_string(b));
                }
    return o;
}

std::vector<Partition> partitions_in_box(int rows, int width) {
    std::vector<Partition> out;
    std::vector<int> p;
    std::function<void(int)> rec = [&](int hi) {
        out.emplace_back(p);
        if (static_cast<int>(p.size()) == rows) return;
        for (int v = 1; v <= hi; ++v) {
            p.push_back(v);
            rec(v);
            p.pop_back();
        }
    };
    rec(width);
    return out;
}

Outcome schur_pieri() {
    Outcome o;
    const int m = 3;
    // Over n = 10 the sequence rule imposes no width cutoff for λ₁ + b ≤ 7.
    const int n = 10;
    for (const auto& l : partitions_in_box(m, 4))
        for (int b = 0; b <= 3; ++b) {
            SparsePoly rhs(m);
            for (const auto& g : pieri_set(alpha_of(l, n, m), b)) rhs += schur_expand(lambda_of(g), m);
            o.require(schur_expand(l, m) * h_poly(b, m) == rhs, l.str() + " b=" + std::to_string(b));
        }
    return o;
}

Outcome schensted() {
    Outcome o;
    const auto r = pieri_bijection_check(Partition({4, 2}), 2, 3);
    o.require(r.injective, "injective");
    o.require(r.content_preserved, "content");
    o.require(r.counts_match, "image counts");
    o.require(r.chains_in_tree, "chains in tree");
    return o;
}

Outcome classifier() {
    Outcome o;
    const Flag f = standard_flag(9);
    for (const auto& [s, t] : std::vector<std::pair<Rat, Rat>>{{Rat(1), Rat(1)}, {Rat(2), Rat(-1, 3)}, {Rat(-5), Rat(7)}})
        o.require(classify_pieri(a741, f, worked::L_st(s, t), 2).verdict == Verdict::TransverseIrreducible, "L_{s,t}");
    const PolyFamily l0t = worked::L0t_family();
    for (const auto& t : sample_points()) {
        const auto c = classify_pieri(a741, f, l0t.at(t), 2);
        o.require(c.verdict == Verdict::TransverseReducible && c.equality == std::vector<int>{1, 2, 3}, "L_{0,t}");
    }
    o.require(classify_pieri(a741, f, limit_at_zero(l0t), 2).verdict == Verdict::Improper, "L_{0,0}");
    return o;
}

Outcome tangent() {
    Outcome o;
    const auto insts = fixtures::tangent_instances(20);
    o.require(insts.size() == 20, "instance count");
    bool generic = false, special = false;
    for (const auto& inst : insts) {
        o.require(inst.alpha.n() <= 9 && inst.alpha.m() <= 3 && inst.s <= 3, "instance bounds");
        Rng rng(inst.seed + 1000);
        for (int j : inst.modes) {
            (j == inst.alpha.m() ? generic : special) = true;
            const Subspace h = witness_point(inst.alpha, inst.flag, inst.L, j, rng);
            o.require(tangent_codim(h, inst.alpha, inst.flag, inst.L) == inst.s,
                      "seed " + std::to_string(inst.seed) + " j=" + std::to_string(j));
        }
    }
    o.require(generic && special, "both witness modes sampled");
    return o;
}

Subspace pencil_base(const Flag& m, int l, Rng& rng) {
    const int n = m.ambient();
    std::vector<Vec> rows = m[l].basis();
    for (int i = 1; i <= l - 2; ++i) {
        Vec v = m.b(i);
        const Rat c = rng.small();
        for (int x = 0; x < n; ++x) v[static_cast<std::size_t>(x)] += c * m.b(l - 1)[static_cast<std::size_t>(x)];
        rows.push_back(std::move(v));
    }
    return Subspace::span(n, std::move(rows));
}

Outcome pencil() {
    Outcome o;
    Rng rng(1);
    for (int n = 2; n <= 9; ++n)
        for (int l = 2; l <= n + 1; ++l) {
            const Flag m = random_flag(n, static_cast<std::uint64_t>(n * 10 + l));
            const Pencil p = build_pencil(m, l, pencil_base(m, l, rng));
            const std::string tag = "n=" + std::to_string(n) + " l=" + std::to_string(l);
            o.require(pencil_check(p).passed(), tag);
            for (int i = 1; i <= l - 1; ++i) {
                for (const auto& t : sample_points()) o.require(intersect(m[i], p.family.at(t)).dim() == n - i, tag + " dim");
                o.require(limit_at_zero(intersect(m[i], p.family)) == m[i + 1], tag + " limit");
            }
        }
    return o;
}

Outcome chain_and_worked() {
    Outcome o;
    const auto rep = chain_deformation(a741, 2, standard_flag(9), Subspace::coordinate(9, {1, 2, 3, 4, 5}));
    o.require(rep.stages.size() == 3 && rep.passed(), "chain stages");
    o.require(!rep.stages.empty() && rep.stages.back().indices == pieri_set(a741, 2), "final components");
    const auto w = worked_example_run();
    o.require(w.passed(), "worked example clauses");
    int limits = 0;
    for (const auto& c : w.checks.items())
        if (c.clause.rfind("(C)", 0) == 0 && c.clause.find("lim ") != std::string::npos) ++limits;
    o.require(limits == 3, "three limit clauses");
    return o;
}

Outcome three_way() {
    Outcome o;
    SchurCache cache;
    for (int n = 2; n <= 6; ++n)
        for (int m = 1; m < n; ++m)
            for (const auto& p : all_problems(n, m, 0)) {
                const long d = count_pairs_d(p);
                o.require(d == cohomology_oracle(p, cache) && d == pieri_pairing_oracle(p), p.str());
            }
    o.require(count_pairs_d({4, 2, DecSeq(4, {3, 1}), DecSeq(4, {2, 1}), 1, 1, 1}) == 2, "G(2,4) d = 2");
    return o;
}

Outcome witness_reality() {
    Outcome o;
    const auto insts = fixtures::witness_instances(10);
    for (std::size_t k = 0; k < insts.size(); ++k) {
        const auto& p = insts[k];
        const auto rep = quintuple_witnesses(p, k);
        o.require(rep.passed(), p.str());
        o.require(static_cast<long>(rep.witnesses.size()) == count_pairs_d(p), p.str() + " count");
        const Flag f = standard_flag(p.n);
        const Flag fp = reversed_flag(p.n);
        std::set<std::vector<Vec>> seen;
        for (const auto& w : rep.witnesses) {
            o.require(w.h.dim() == p.m, p.str() + " dim");
            o.require(schubert_member(w.h, p.alpha, f) && schubert_member(w.h, p.beta, fp) &&
                          special_member(w.h, rep.c_space),
                      p.str() + " membership");
            seen.insert(w.h.basis());
        }
        o.require(seen.size() == rep.witnesses.size(), p.str() + " distinct");
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double limit_ms;
        std::function<Outcome(double&)> run;
    };
    auto timed = [](Outcome (*f)()) { return [f](double&) { return f(); }; };
    const std::vector<Criterion> criteria{
        {"Pieri set golden", 1, pieri_golden},
        {"Tree golden and leaf partition", 1000, timed(tree_golden)},
        {"Schur-Pieri polynomial identity", 10000, timed(schur_pieri)},
        {"Schensted bijection", 10000, timed(schensted)},
        {"Classifier on the worked family", 1000, timed(classifier)},
        {"Tangent transversality", 30000, timed(tangent)},
        {"Pencil degeneration", 5000, timed(pencil)},
        {"Chain deformation and worked example", 30000, timed(chain_and_worked)},
        {"Three-way count agreement", 60000, timed(three_way)},
        {"Witness reality", 30000, timed(witness_reality)},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        double inner = -1;
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            o = c.run(inner);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double ms = inner >= 0 ? inner : std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok && ms > c.limit_ms) {
            o.ok = false;
            o.detail = "over time limit";
        }
        if (!o.ok) ++failed;
        std::printf("%s %zu. %s (%.3f ms, limit %.0f ms)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, c.name, ms, c.limit_ms,
                    o.ok ? "" : ": ", o.detail.c_str());
    }
    return failed == 0 ? 0 : 1;
}
