#pragma once

#include "pieri/flag.hpp"
#include "pieri/linalg.hpp"
#include "pieri/report.hpp"
#include "pieri/schubgeom.hpp"
#include "pieri/seqcomb.hpp"
#include "pieri/tableaux.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pieri {

/// Schubert problem Ω_α F ∩ Ω_β F' ∩ Ω_A ∩ Ω_B ∩ Ω_C on G_m(k^n), with
/// dim A = n+1−m−a, dim B = n+1−m−b, dim C = n+1−m−c.
struct QuintupleProblem {
    int n = 0;
    int m = 0;
    DecSeq alpha;
    DecSeq beta;
    int a = 0;
    int b = 0;
    int c = 0;

    /// Throws unless the data are consistent and a+b+c+|α|+|β| = m(n−m).
    void validate() const {
        if (m < 1 || m >= n) throw Error("problem: need 1 <= m < n");
        if (alpha.n() != n || alpha.m() != m) throw Error("problem: alpha is not a sequence for (n, m)");
        if (beta.n() != n || beta.m() != m) throw Error("problem: beta is not a sequence for (n, m)");
        if (a < 0 || b < 0 || c < 0) throw Error("problem: a, b, c must be non-negative");
        const int total = a + b + c + codim(alpha) + codim(beta);
        if (total != m * (n - m))
            throw Error("problem: a+b+c+|alpha|+|beta| = " + std::to_string(total) + ", expected " +
                        std::to_string(m * (n - m)));
    }

    std::string str() const {
        return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " alpha=" + alpha.str() + " beta=" + beta.str() +
               " a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c);
    }
};

/// g ∈ α*r
inline bool in_pieri_set(const DecSeq& a, const DecSeq& g, int r) {
    return interlaces(a, g) && codim(g) - codim(a) == r;
}

/// Pairs (γ, δ) ∈ (α*a) × (β*b) with δ^∨ ∈ γ*c, in canonical order.
inline std::vector<std::pair<DecSeq, DecSeq>> solution_pairs(const QuintupleProblem& p) {
    p.validate();
    std::vector<std::pair<DecSeq, DecSeq>> out;
    for (const auto& g : pieri_set(p.alpha, p.a))
        for (const auto& d : pieri_set(p.beta, p.b))
            if (in_pieri_set(g, dual(d), p.c)) out.emplace_back(g, d);
    return out;
}

inline long count_pairs_d(const QuintupleProblem& p) { return static_cast<long>(solution_pairs(p).size()); }

/// Memoized Schur polynomials s_λ(x_1..x_m).
class SchurCache {
public:
    const SparsePoly& get(const Partition& l, int m) {
        auto key = std::make_pair(m, l);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, schur_expand(l, m)).first;
        return it->second;
    }

private:
    std::map<std::pair<int, Partition>, SparsePoly> cache_;
};

inline constexpr int kOracleMaxN = 8;

/// Coefficient of s_{(n−m)^m} in s_{λ(α)} s_{λ(β)} h_a h_b h_c after
/// projection to the Chow ring of G_m(k^n).
inline long cohomology_oracle(const QuintupleProblem& p, SchurCache& cache) {
    p.validate();
    if (p.n > kOracleMaxN) throw Error("cohomology_oracle: n > " + std::to_string(kOracleMaxN) + " is out of bounds");
    const int m = p.m;
    SparsePoly prod = cache.get(lambda_of(p.alpha), m) * cache.get(lambda_of(p.beta), m);
    for (int r : {p.a, p.b, p.c}) prod = prod * cache.get(Partition({r}), m);
    const SchurExpansion e = chow_project(schur_decompose(prod, m), p.n, m);
    auto it = e.find(Partition(std::vector<int>(static_cast<std::size_t>(m), p.n - m)));
    return it == e.end() ? 0 : it->second;
}

inline long cohomology_oracle(const QuintupleProblem& p) {
    SchurCache cache;
    return cohomology_oracle(p, cache);
}

/// Multiplicity of β^∨ in [α]·h_a·h_b·h_c computed by iterated Pieri sets.
inline long pieri_pairing_oracle(const QuintupleProblem& p) {
    p.validate();
    std::map<DecSeq, long> cls{{p.alpha, 1}};
    for (int r : {p.a, p.b, p.c}) {
        std::map<DecSeq, long> next;
        for (const auto& [g, mult] : cls)
            for (const auto& h : pieri_set(g, r)) next[h] += mult;
        cls = std::move(next);
    }
    auto it = cls.find(dual(p.beta));
    return it == cls.end() ? 0 : it->second;
}

/// The m-plane H_{αβ} of Ω_α F ∩ Ω_β F' ∩ Ω_C with its general-position checks.
struct TripleWitness {
    DecSeq alpha;
    DecSeq beta;
    std::vector<Subspace> k;  // K_j = F_{α_j} ∩ F'_{β_{m+1−j}}
    std::vector<Vec> f;       // f_j ∈ K_j
    Subspace h;
    CheckList checks;

    bool passed() const { return checks.passed(); }
};

/// Builds H_{αβ} when β^∨ ∈ α*c (c = m(n−m) − |α| − |β|); nullopt otherwise.
/// Every general-position condition is recorded in checks; membership in
/// the three Schubert varieties is verified on the result.
inline std::optional<TripleWitness> triple_witness(const DecSeq& a, const DecSeq& b, const Subspace& c_space,
                                                   const Flag& f, const Flag& fp) {
    require_compatible(a, b);
    const int n = a.n();
    const int m = a.m();
    if (f.ambient() != n || fp.ambient() != n || c_space.ambient() != n)
        throw Error("triple_witness: ambient dimension mismatch");
    const int c = m * (n - m) - codim(a) - codim(b);
    if (c < 0) throw Error("triple_witness: |alpha| + |beta| exceeds m(n-m)");
    if (c_space.dim() != n + 1 - m - c)
        throw Error("triple_witness: C has dimension " + std::to_string(c_space.dim()) + ", expected " +
                    std::to_string(n + 1 - m - c));
    if (!in_pieri_set(a, dual(b), c)) return std::nullopt;

    TripleWitness w{a, b, {}, {}, Subspace::zero(n), {}};
    std::vector<Vec> sum_basis;
    std::vector<int> piece;  // sum_basis index -> j
    int total = 0;
    for (int j = 1; j <= m; ++j) {
        Subspace kj = intersect(f[a(j)], fp[b(m + 1 - j)]);
        w.checks.add("K_" + std::to_string(j) + " nonzero", !kj.is_zero(), "dim " + std::to_string(kj.dim()));
        total += kj.dim();
        for (const auto& v : kj.basis()) {
            sum_basis.push_back(v);
            piece.push_back(j);
        }
        w.k.push_back(std::move(kj));
    }
    const int sum_dim = rank_of(n, sum_basis);
    w.checks.add("sum of K_j direct", sum_dim == total, std::to_string(sum_dim) + " of " + std::to_string(total));
    if (!w.checks.passed()) return w;

    const Chart sum_chart(n, sum_basis);
    const Subspace line = intersect(c_space, sum_chart.image());
    w.checks.add("C meets the sum in a line", line.dim() == 1, "dim " + std::to_string(line.dim()));
    if (line.dim() != 1) return w;

    const Vec coords = sum_chart.to_coords(line.basis().front());
    w.f.assign(static_cast<std::size_t>(m), Vec(static_cast<std::size_t>(n), Rat(0)));
    for (std::size_t k = 0; k < sum_basis.size(); ++k) {
        auto& fj = w.f[static_cast<std::size_t>(piece[k] - 1)];
        for (int i = 0; i < n; ++i) fj[static_cast<std::size_t>(i)] += coords[k] * sum_basis[k][static_cast<std::size_t>(i)];
    }
    for (int j = 1; j <= m; ++j) {
        const Vec& fj = w.f[static_cast<std::size_t>(j - 1)];
        const std::string tag = "f_" + std::to_string(j);
        const std::string js = std::to_string(j);
        const std::string ks = std::to_string(m + 1 - j);
        w.checks.add(tag + " not in F_{alpha_" + js + "+1}", !f[a(j) + 1].contains(fj));
        w.checks.add(tag + " not in F'_{beta_" + ks + "+1}", !fp[b(m + 1 - j) + 1].contains(fj));
    }
    w.h = Subspace::span(n, w.f);
    w.checks.add("H is an m-plane", w.h.dim() == m, "dim " + std::to_string(w.h.dim()));
    if (w.h.dim() != m) return w;
    w.checks.add("H in Omega_alpha F", schubert_member(w.h, a, f));
    w.checks.add("H in Omega_beta F'", schubert_member(w.h, b, fp));
    w.checks.add("H meets C", special_member(w.h, c_space));
    return w;
}

/// Witness planes for all pairs; empty when β^∨ ∉ α*c. Throws when a
/// general-position check fails.
inline std::vector<Subspace> triple_witnesses(const DecSeq& a, const DecSeq& b, const Subspace& c_space, const Flag& f,
                                              const Flag& fp) {
    auto w = triple_witness(a, b, c_space, f, fp);
    if (!w) return {};
    if (auto bad = w->checks.first_failure()) throw Error("triple_witnesses: " + bad->clause + " fails");
    return {w->h};
}

/// Real solutions of the degenerate quintuple problem
/// (Σ_γ Ω_γ F) ∩ (Σ_δ Ω_δ F') ∩ Ω_C, with F standard, F' reversed and C a
/// seeded random subspace (resampled until every check passes).
struct QuintupleReport {
    QuintupleProblem problem;
    long d = 0;
    Subspace c_space;
    std::vector<TripleWitness> witnesses;
    int attempts = 0;
    CheckList checks;

    bool passed() const { return checks.passed(); }
};

inline constexpr int kWitnessRetries = 50;

inline QuintupleReport quintuple_witnesses(const QuintupleProblem& p, std::uint64_t seed = 0) {
    p.validate();
    const auto pairs = solution_pairs(p);
    const Flag f = standard_flag(p.n);
    const Flag fp = reversed_flag(p.n);
    QuintupleReport rep{p, static_cast<long>(pairs.size()), Subspace::zero(p.n), {}, 0, {}};
    const int c_dim = p.n + 1 - p.m - p.c;
    if (pairs.empty() || c_dim < 1) {
        rep.checks.add("witness count equals d", pairs.empty(), "d = " + std::to_string(rep.d));
        return rep;
    }
    Rng rng(seed);
    for (rep.attempts = 1; rep.attempts <= kWitnessRetries; ++rep.attempts) {
        rep.c_space = random_subspace(p.n, c_dim, rng);
        rep.witnesses.clear();
        bool ok = true;
        for (const auto& [g, d] : pairs) {
            auto w = triple_witness(g, d, rep.c_space, f, fp);
            if (!w || !w->passed()) {
                ok = false;
                break;
            }
            rep.witnesses.push_back(std::move(*w));
        }
        if (ok) break;
    }
    if (rep.attempts > kWitnessRetries) {
        rep.checks.add("general position", false, "no valid C after " + std::to_string(kWitnessRetries) + " draws");
        return rep;
    }
    for (const auto& w : rep.witnesses) {
        const std::string tag = w.alpha.str() + "|" + w.beta.str() + " ";
        rep.checks.append(w.checks, tag);
        if (p.a > 0) rep.checks.add(tag + "H in Omega_" + p.alpha.str() + " F", schubert_member(w.h, p.alpha, f));
        if (p.b > 0) rep.checks.add(tag + "H in Omega_" + p.beta.str() + " F'", schubert_member(w.h, p.beta, fp));
    }
    bool distinct = true;
    for (std::size_t i = 0; i < rep.witnesses.size(); ++i)
        for (std::size_t j = i + 1; j < rep.witnesses.size(); ++j)
            if (rep.witnesses[i].h == rep.witnesses[j].h) distinct = false;
    rep.checks.add("witnesses pairwise distinct", distinct);
    rep.checks.add("witness count equals d", static_cast<long>(rep.witnesses.size()) == rep.d,
                   std::to_string(rep.witnesses.size()) + " vs " + std::to_string(rep.d));
    return rep;
}

/// All valid problems on G_m(k^n) with a, b, c ≥ lo.
inline std::vector<QuintupleProblem> all_problems(int n, int m, int lo = 1) {
    std::vector<QuintupleProblem> out;
    const auto seqs = all_sequences(n, m);
    const int dim = m * (n - m);
    for (const auto& al : seqs)
        for (const auto& be : seqs) {
            const int rest = dim - codim(al) - codim(be);
            for (int a = lo; a <= rest; ++a)
                for (int b = lo; a + b <= rest; ++b) {
                    const int c = rest - a - b;
                    if (c >= lo) out.push_back({n, m, al, be, a, b, c});
                }
        }
    return out;
}

}  // namespace pieri
