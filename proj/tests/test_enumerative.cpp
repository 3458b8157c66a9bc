#include "pieri/enumerative.hpp"

#include "instances.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace pieri;

namespace {

QuintupleProblem g24() { return {4, 2, DecSeq(4, {3, 1}), DecSeq(4, {2, 1}), 1, 1, 1}; }

// Every valid problem with n ≤ 6, including those with a zero among a, b, c.
std::vector<QuintupleProblem> sweep() {
    std::vector<QuintupleProblem> out;
    for (int n = 2; n <= 6; ++n)
        for (int m = 1; m < n; ++m)
            for (const auto& p : all_problems(n, m, 0)) out.push_back(p);
    return out;
}

}  // namespace

TEST(Count, Grassmannian24) {
    auto p = g24();
    EXPECT_NO_THROW(p.validate());
    EXPECT_EQ(count_pairs_d(p), 2);
    EXPECT_EQ(cohomology_oracle(p), 2);
    EXPECT_EQ(pieri_pairing_oracle(p), 2);
}

TEST(Count, ProjectiveSpaceLines) {
    // m = 1: every valid problem on projective space has one solution.
    for (int n = 2; n <= 6; ++n)
        for (const auto& p : all_problems(n, 1, 0)) {
            EXPECT_EQ(count_pairs_d(p), 1) << p.str();
            EXPECT_EQ(cohomology_oracle(p), 1);
        }
}

TEST(Count, ValidationErrors) {
    QuintupleProblem bad = g24();
    bad.c = 2;
    EXPECT_THROW(bad.validate(), Error);
    bad = g24();
    bad.a = -1;
    bad.c = 3;
    EXPECT_THROW(bad.validate(), Error);
    bad = g24();
    bad.m = 4;
    EXPECT_THROW(bad.validate(), Error);
}

TEST(Count, ThreeWayAgreementUpToSix) {
    SchurCache cache;
    long instances = 0;
    for (const auto& p : sweep()) {
        ++instances;
        const long d = count_pairs_d(p);
        EXPECT_EQ(d, cohomology_oracle(p, cache)) << p.str();
        EXPECT_EQ(d, pieri_pairing_oracle(p)) << p.str();
    }
    EXPECT_GT(instances, 1000);
}

TEST(Count, SwapSymmetryOfOracles) {
    SchurCache cache;
    for (const auto& p : sweep()) {
        QuintupleProblem q{p.n, p.m, p.beta, p.alpha, p.b, p.a, p.c};
        EXPECT_EQ(cohomology_oracle(p, cache), cohomology_oracle(q, cache)) << p.str();
        EXPECT_EQ(pieri_pairing_oracle(p), pieri_pairing_oracle(q)) << p.str();
        EXPECT_EQ(count_pairs_d(p), count_pairs_d(q)) << p.str();
    }
}

TEST(Count, SolutionPairsSatisfyDefinition) {
    auto p = g24();
    for (const auto& [g, d] : solution_pairs(p)) {
        EXPECT_TRUE(in_pieri_set(p.alpha, g, p.a));
        EXPECT_TRUE(in_pieri_set(p.beta, d, p.b));
        EXPECT_TRUE(in_pieri_set(g, dual(d), p.c));
    }
}

TEST(Witness, TripleCase) {
    // a = b = 0: one plane when β^∨ ∈ α*c, none otherwise.
    const int n = 5, m = 2;
    const Flag f = standard_flag(n);
    const Flag fp = reversed_flag(n);
    Rng rng(3);
    int built = 0;
    for (const auto& al : all_sequences(n, m))
        for (const auto& be : all_sequences(n, m)) {
            const int c = m * (n - m) - codim(al) - codim(be);
            if (c < 0 || n + 1 - m - c < 1) continue;
            // Resample C until it is in general position, as the solver does.
            Subspace cs = random_subspace(n, n + 1 - m - c, rng);
            int draws = 1;
            for (auto w = triple_witness(al, be, cs, f, fp); w && !w->passed() && draws < kWitnessRetries; ++draws) {
                cs = random_subspace(n, n + 1 - m - c, rng);
                w = triple_witness(al, be, cs, f, fp);
            }
            EXPECT_LT(draws, 5) << al.str() << " " << be.str();
            auto ws = triple_witnesses(al, be, cs, f, fp);
            if (!in_pieri_set(al, dual(be), c)) {
                EXPECT_TRUE(ws.empty());
                continue;
            }
            ASSERT_EQ(ws.size(), 1u);
            ++built;
            EXPECT_TRUE(schubert_member(ws[0], al, f));
            EXPECT_TRUE(schubert_member(ws[0], be, fp));
            EXPECT_TRUE(special_member(ws[0], cs));
        }
    EXPECT_GT(built, 5);
}

TEST(Witness, TripleRejectsWrongC) {
    const Flag f = standard_flag(4);
    EXPECT_THROW(triple_witness(DecSeq(4, {3, 1}), DecSeq(4, {2, 1}), Subspace::coordinate(4, {1}), f, reversed_flag(4)),
                 Error);
}

TEST(Witness, QuintupleG24) {
    auto rep = quintuple_witnesses(g24(), 0);
    EXPECT_TRUE(rep.passed());
    ASSERT_EQ(rep.witnesses.size(), 2u);
    EXPECT_FALSE(rep.witnesses[0].h == rep.witnesses[1].h);
}

TEST(Witness, SeededInstances) {
    auto insts = fixtures::witness_instances(10);
    ASSERT_EQ(insts.size(), 10u);
    const auto& first = insts.front();
    EXPECT_EQ(first.str(), g24().str());
    for (std::size_t k = 0; k < insts.size(); ++k) {
        const auto& p = insts[k];
        auto rep = quintuple_witnesses(p, k);
        EXPECT_TRUE(rep.passed()) << p.str();
        EXPECT_EQ(static_cast<long>(rep.witnesses.size()), count_pairs_d(p));
        const Flag f = standard_flag(p.n);
        const Flag fp = reversed_flag(p.n);
        std::set<std::vector<Vec>> seen;
        for (const auto& w : rep.witnesses) {
            EXPECT_EQ(w.h.dim(), p.m);
            EXPECT_TRUE(schubert_member(w.h, w.alpha, f));
            EXPECT_TRUE(schubert_member(w.h, w.beta, fp));
            EXPECT_TRUE(schubert_member(w.h, p.alpha, f));
            EXPECT_TRUE(schubert_member(w.h, p.beta, fp));
            EXPECT_TRUE(special_member(w.h, rep.c_space));
            seen.insert(w.h.basis());
        }
        EXPECT_EQ(seen.size(), rep.witnesses.size());
    }
}

TEST(Witness, DeterministicInSeed) {
    auto a = quintuple_witnesses(g24(), 7);
    auto b = quintuple_witnesses(g24(), 7);
    EXPECT_EQ(a.c_space, b.c_space);
    ASSERT_EQ(a.witnesses.size(), b.witnesses.size());
    for (std::size_t i = 0; i < a.witnesses.size(); ++i) EXPECT_EQ(a.witnesses[i].h, b.witnesses[i].h);
}

TEST(Witness, BroadSweep) {
    std::uint64_t seed = 0;
    for (int n = 3; n <= 6; ++n)
        for (int m = 1; m < n && m <= 3; ++m)
            for (const auto& p : all_problems(n, m, 1)) EXPECT_TRUE(quintuple_witnesses(p, seed++).passed()) << p.str();
}
