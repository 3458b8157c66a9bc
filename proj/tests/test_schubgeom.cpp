#include "pieri/worked_example.hpp"
#include "pieri/schubgeom.hpp"

#include "instances.hpp"

#include <gtest/gtest.h>

using namespace pieri;

namespace {

// dim H ∩ F_{α_j} ≥ j straight from the definition.
bool member_by_definition(const Subspace& h, const DecSeq& a, const Flag& f) {
    for (int j = 1; j <= a.m(); ++j)
        if (intersect(h, f[a(j)]).dim() < j) return false;
    return true;
}

bool entrywise_leq(const DecSeq& a, const DecSeq& b) {
    for (int i = 1; i <= a.m(); ++i)
        if (a(i) > b(i)) return false;
    return true;
}

const DecSeq a741(9, {7, 4, 1});

}  // namespace

TEST(Membership, CellPointsAgreeWithDefinition) {
    Rng rng(11);
    for (int n = 3; n <= 6; ++n)
        for (int m = 1; m < n; ++m) {
            Flag f = random_flag(n, static_cast<std::uint64_t>(10 * n + m));
            for (const auto& b : all_sequences(n, m)) {
                Subspace h = random_cell_point(b, f, rng);
                EXPECT_EQ(jump_set(h, f), b);
                for (const auto& a : all_sequences(n, m)) {
                    EXPECT_EQ(schubert_member(h, a, f), member_by_definition(h, a, f));
                    EXPECT_EQ(schubert_member(h, a, f), entrywise_leq(a, b)) << "H in cell " << b.str() << " vs " << a.str();
                }
            }
        }
}

TEST(Membership, SchubertPointsAreMembers) {
    Rng rng(3);
    Flag f = random_flag(7, 3);
    for (const auto& a : all_sequences(7, 3)) {
        auto h = random_schubert_point(a, f, rng);
        if (!h) continue;
        EXPECT_TRUE(schubert_member(*h, a, f));
    }
}

TEST(Membership, MonotoneInBruhatOrder) {
    // Ω_β ⊂ Ω_α whenever α ≤ β.
    Rng rng(8);
    Flag f = random_flag(6, 8);
    for (const auto& b : all_sequences(6, 3)) {
        auto h = random_schubert_point(b, f, rng);
        if (!h) continue;
        for (const auto& a : all_sequences(6, 3))
            if (bruhat_leq(a, b)) {
                EXPECT_TRUE(schubert_member(*h, a, f));
            }
    }
}

TEST(Membership, WrongDimensionRejected) {
    Flag f = standard_flag(5);
    EXPECT_THROW(schubert_member(Subspace::coordinate(5, {1}), DecSeq(5, {4, 2}), f), Error);
}

TEST(Membership, FibrationDescriptionAgrees) {
    Rng rng(21);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 7;
        Flag f = random_flag(n, static_cast<std::uint64_t>(trial));
        Subspace l = random_subspace(n, 3, rng);
        for (const auto& b : all_sequences(n, 3))
            for (int j = 1; j <= 3; ++j) {
                std::vector<Subspace> hs;
                if (auto h = random_x_point(b, j, f, l, rng)) hs.push_back(*h);
                if (auto h = random_schubert_point(b, f, rng)) hs.push_back(*h);
                for (const auto& h : hs) {
                    if (intersect(h, f[b(j)]).dim() != j) continue;
                    EXPECT_EQ(fibration_member(h, b, j, f, l), x_member(h, b, j, f, l)) << b.str() << " j=" << j;
                }
            }
    }
}

TEST(Classifier, WorkedExampleClassifications) {
    const Flag f = standard_flag(9);
    for (const auto& [s, t] : std::vector<std::pair<Rat, Rat>>{{Rat(1), Rat(1)}, {Rat(2), Rat(-1, 3)}, {Rat(-5), Rat(7)}}) {
        auto c = classify_pieri(a741, f, worked::L_st(s, t), 2);
        EXPECT_EQ(c.verdict, Verdict::TransverseIrreducible);
    }
    const PolyFamily l0t = worked::L0t_family();
    for (const auto& t : sample_points()) {
        auto c = classify_pieri(a741, f, l0t.at(t), 2);
        EXPECT_EQ(c.verdict, Verdict::TransverseReducible);
        EXPECT_EQ(c.equality, (std::vector<int>{1, 2, 3}));
    }
    auto c = classify_pieri(a741, f, worked::coords({3, 5, 6, 8, 9}), 2);
    EXPECT_EQ(c.verdict, Verdict::Improper);
}

TEST(Classifier, RowsAndValidation) {
    const Flag f = standard_flag(9);
    auto c = classify_pieri(a741, f, worked::L0t_family().at(Rat(1)), 2);
    ASSERT_EQ(c.rows.size(), 3u);
    EXPECT_EQ(c.rows[0].critical, 1);
    EXPECT_EQ(c.rows[1].critical, 3);
    EXPECT_EQ(c.rows[2].critical, 5);
    EXPECT_THROW(classify_pieri(a741, f, Subspace::coordinate(9, {1, 2}), 2), Error);
    EXPECT_THROW(classify_pieri(a741, f, Subspace::coordinate(9, {1, 2, 3, 4, 5, 6}), 0), Error);
}

TEST(Classifier, ReducibleConstructionAttainsEveryThreshold) {
    Rng rng(5);
    int built = 0;
    for (int n = 4; n <= 8; ++n)
        for (const auto& a : all_sequences(n, 2))
            for (int s = 1; s <= 2; ++s) {
                Flag f = random_flag(n, static_cast<std::uint64_t>(n * 31 + s));
                auto l = reducible_special_subspace(a, s, f, rng);
                if (!l) continue;
                ++built;
                auto c = classify_pieri(a, f, *l, s);
                EXPECT_EQ(c.verdict, Verdict::TransverseReducible);
                for (const auto& r : c.rows) EXPECT_EQ(r.dim, r.critical);
            }
    EXPECT_GT(built, 10);
    EXPECT_FALSE(reducible_special_subspace(a741, 0, standard_flag(9), rng).has_value());
}

TEST(Cell, IndexAndMembership) {
    EXPECT_EQ(cell_index(a741, 2, 9), DecSeq(9, {9, 6, 5, 3, 2}));
    EXPECT_EQ(cell_index(DecSeq(9, {9, 4, 1}), 2, 9), DecSeq(9, {7, 6, 5, 3, 2}));
    const Flag f = standard_flag(9);
    EXPECT_TRUE(cell_member(worked::L0t_family().at(Rat(1)), a741, 2, f));
    EXPECT_FALSE(cell_member(worked::coords({3, 5, 6, 8, 9}), a741, 2, f));
    Rng rng(2);
    for (int n = 4; n <= 8; ++n)
        for (int m = 1; m <= 3 && m < n; ++m)
            for (const auto& a : all_sequences(n, m))
                for (int s = 1; n + 1 - m - s >= 1 && s <= 3; ++s) {
                    if (a(1) + s > n + 1) continue;
                    Flag g = random_flag(n, static_cast<std::uint64_t>(n + 7 * s));
                    Subspace l = random_cell_point(cell_index(a, s, n), g, rng);
                    EXPECT_TRUE(cell_member(l, a, s, g)) << a.str() << " s=" << s;
                    EXPECT_TRUE(cell_dimension_check(l, a, s, g));
                }
}

TEST(Witness, PointsLieInTheirStratum) {
    for (const auto& inst : fixtures::tangent_instances(12)) {
        Rng rng(inst.seed + 1000);
        for (int j : inst.modes) {
            Subspace h = witness_point(inst.alpha, inst.flag, inst.L, j, rng);
            EXPECT_TRUE(schubert_member(h, inst.alpha, inst.flag));
            EXPECT_TRUE(x_member(h, inst.alpha, j, inst.flag, inst.L));
            EXPECT_EQ(intersect(h, inst.L).dim(), 1);
        }
    }
}

TEST(Tangent, CodimEqualsS) {
    auto insts = fixtures::tangent_instances(20);
    ASSERT_EQ(insts.size(), 20u);
    int reducible = 0;
    for (const auto& inst : insts) {
        reducible += inst.reducible;
        Rng rng(inst.seed + 1000);
        for (int j : inst.modes) {
            Subspace h = witness_point(inst.alpha, inst.flag, inst.L, j, rng);
            EXPECT_EQ(tangent_codim(h, inst.alpha, inst.flag, inst.L), inst.s)
                << "seed " << inst.seed << " alpha " << inst.alpha.str() << " j=" << j;
        }
    }
    EXPECT_GT(reducible, 0);
    EXPECT_LT(reducible, 20);
}

TEST(Tangent, IndependentOfComplement) {
    for (const auto& inst : fixtures::tangent_instances(6)) {
        Rng rng(inst.seed + 77);
        const int n = inst.alpha.n();
        Subspace h = witness_point(inst.alpha, inst.flag, inst.L, inst.modes.front(), rng);
        for (int attempt = 0; attempt < 20; ++attempt) {
            auto k = random_subspace(n, n - inst.alpha.m(), rng);
            if (!intersect(k, h).is_zero()) continue;
            EXPECT_EQ(tangent_codim_in_chart(h, inst.alpha, inst.flag, inst.L, k.basis()),
                      tangent_codim(h, inst.alpha, inst.flag, inst.L));
            break;
        }
    }
}

TEST(Cycle, WorkedExampleComponents) {
    const Flag f = standard_flag(9);
    const Subspace l = worked::L0t_family().at(Rat(1));
    auto y = y_cycle(a741, 2, 2, f, l);
    EXPECT_EQ(y.indices(), pieri_set(a741, 2));
    for (const auto& c : y.components) {
        if (c.index == DecSeq(9, {9, 4, 1})) {
            EXPECT_FALSE(c.variety.has_value());
        }
        if (c.index == DecSeq(9, {8, 5, 1})) {
            EXPECT_EQ(*c.variety, DecSeq(9, {9, 5, 1}));
        }
        if (c.index == DecSeq(9, {7, 5, 2})) {
            EXPECT_EQ(c.kind, CycleComponent::Kind::X);
            EXPECT_EQ(c.j, 2);
        }
        if (c.index == DecSeq(9, {7, 4, 3})) {
            EXPECT_EQ(c.j, 3);
        }
    }
    auto y0 = y_cycle(a741, 0, 2, f, l);
    ASSERT_EQ(y0.components.size(), 1u);
    EXPECT_EQ(*y0.components.front().variety, DecSeq(9, {8, 4, 1}));
    EXPECT_THROW(y_cycle(a741, 1, 2, f, worked::coords({3, 5, 6, 8, 9})), Error);
}

TEST(Cycle, SampledPointsAreContained) {
    const Flag f = standard_flag(9);
    const Subspace l = worked::L0t_family().at(Rat(2));
    auto y = y_cycle(a741, 1, 2, f, l);
    Rng rng(4);
    for (const auto& c : y.components)
        for (int k = 0; k < 3; ++k) {
            std::optional<Subspace> h = c.kind == CycleComponent::Kind::X ? random_x_point(c.index, c.j, f, l, rng)
                                                                          : random_schubert_point(*c.variety, f, rng);
            if (!h) continue;
            EXPECT_TRUE(y.member(c, *h));
            EXPECT_TRUE(y.contains(*h));
        }
}
