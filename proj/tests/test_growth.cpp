#include "bct/audit.hpp"
#include "bct/classification.hpp"
#include "bct/growth.hpp"
#include "bct/parse.hpp"

#include <gtest/gtest.h>

using namespace bct;

namespace {

WeierstrassCurve<QuadElem> curve(long D, const std::string& model) { return parse_curve(model, QuadField(D)); }

Group G(const std::string& s) { return *parse_group(s); }

const GrowthRecord* find(const GrowthReport& rep, const QuadElem& d) {
    for (const auto& r : rep.records)
        if (same_square_class(r.d, d)) return &r;
    return nullptr;
}

}  // namespace

TEST(Plan, SummandCount) {
    EXPECT_EQ(summand_count(G("C2xC8"), 2), 2);
    EXPECT_EQ(summand_count(G("C12"), 3), 1);
    EXPECT_EQ(summand_count(G("C5"), 7), 0);
}

TEST(Plan, CyclicTwoTorsion) {
    const auto C = curve(-1, "[1,0,1,-454,-544]");
    const auto S = to_short(C).curve;
    const auto plan = detection_plan(S, G("C2"));
    const auto& e2 = plan.at(2);
    EXPECT_EQ(e2.label, "psi4");
    ASSERT_EQ(e2.factors.size(), 2u);
    EXPECT_EQ(e2.factors[0], two_division_cubic(S));
    EXPECT_EQ(e2.factors[1], division_poly_x(S, 4));
    for (long p : {3L, 5L, 7L}) {
        ASSERT_EQ(plan.at(p).factors.size(), 1u);
        EXPECT_EQ(plan.at(p).factors[0], division_poly_x(S, static_cast<int>(p)));
    }
}

TEST(Plan, FullOrSaturatedParts) {
    const auto S = to_short(curve(-3, "[0,1]")).curve;
    EXPECT_TRUE(detection_plan(S, G("C3xC3")).at(3).factors.empty());
    EXPECT_TRUE(detection_plan(S, G("C10")).at(5).factors.empty());
    EXPECT_TRUE(detection_plan(S, G("C1")).at(2).factors.empty());
    EXPECT_EQ(detection_plan(S, G("C8")).at(2).label, "psi16");
    EXPECT_EQ(detection_plan(S, G("C2xC8")).at(2).label, "psi16");
    EXPECT_EQ(detection_plan(S, G("C4")).at(2).label, "psi8");
}

TEST(Plan, Pruning) {
    const auto S = to_short(curve(-1, "[1,0,0,-45,81]")).curve;
    GrowthOptions opt;
    opt.prune = true;
    // C10 over Q(i): only C2xC10 is possible, so the odd parts cannot grow
    const auto plan = detection_plan(S, G("C10"), opt);
    EXPECT_TRUE(plan.at(3).pruned);
    EXPECT_TRUE(plan.at(7).pruned);
    EXPECT_FALSE(plan.at(2).pruned);
}

TEST(Growth, TableExamples) {
    const QuadField Qi(-1), Qs(-3);
    {
        const auto rep = growth_extensions(curve(-1, "[0,0,0,0,-27]"));
        auto r = find(rep, Qi.from_int(-3));
        ASSERT_TRUE(r);
        EXPECT_EQ(r->group.invariants, G("C2xC6"));
    }
    {
        const auto rep = growth_extensions(curve(-1, "[1,0,1,-171,-874]"));
        ASSERT_TRUE(find(rep, Qi.from_int(-3)));
        EXPECT_EQ(find(rep, Qi.from_int(-3))->group.invariants, G("C6"));
        ASSERT_TRUE(find(rep, Qi.from_int(-7)));
        EXPECT_EQ(find(rep, Qi.from_int(-7))->group.invariants, G("C2xC2"));
    }
    {
        const auto rep = growth_extensions(curve(-1, "[1,0,1,-454,-544]"));
        ASSERT_TRUE(find(rep, Qi.from_int(2)));
        EXPECT_EQ(find(rep, Qi.from_int(2))->group.invariants, G("C4"));
        EXPECT_TRUE(growth_audit(rep, -1).empty());
    }
    {
        const auto rep = growth_extensions(curve(-3, "[1,0,1,4,-6]"));
        ASSERT_EQ(rep.records.size(), 1u);
        EXPECT_TRUE(same_square_class(rep.records[0].d, Qs.from_int(-7)));
        EXPECT_EQ(rep.records[0].group.invariants, G("C6xC6"));
    }
}

TEST(Growth, RecordsAreSoundAndSorted) {
    const auto C = curve(-1, "[1,1,1,-80,242]");
    const auto rep = growth_extensions(C);
    ASSERT_FALSE(rep.records.empty());
    for (std::size_t j = 0; j < rep.records.size(); ++j) {
        const auto& r = rep.records[j];
        if (j) {
            EXPECT_TRUE(rep.records[j - 1].d < r.d);
        }
        EXPECT_TRUE(r.group.invariants.contains(rep.base.invariants));
        EXPECT_GT(r.group.order(), rep.base.order());
        EXPECT_EQ(square_class_rep(r.d), r.d);
        // recomputed independently of the witness
        EXPECT_EQ(torsion_over_relquad(C, r.d).group.invariants, r.group.invariants);
        const RelQuadField L(C.field(), r.d);
        const auto CL = base_change(C, L);
        ASSERT_TRUE(CL.contains(r.witness));
        // the witness is not defined over K
        EXPECT_FALSE(r.witness.x.in_base() && r.witness.y.in_base());
        EXPECT_FALSE(r.provenance.empty());
    }
    for (std::size_t a = 0; a < rep.records.size(); ++a)
        for (std::size_t b = a + 1; b < rep.records.size(); ++b)
            EXPECT_FALSE(same_square_class(rep.records[a].d, rep.records[b].d));
}

TEST(Growth, NoGrowthForSaturatedOddTorsion) {
    // C7 from the Kubert family
    const QuadField K(-1);
    const auto C = kubert_curve_7(K.from_int(2));
    const auto rep = growth_extensions(C);
    EXPECT_EQ(rep.base.invariants, G("C7"));
    EXPECT_TRUE(rep.records.empty());
}

TEST(Classification, AllowedGrowth) {
    EXPECT_EQ(allowed_growth(-1, G("C4"), G("C4xC8")), Verdict::forbidden);
    EXPECT_EQ(allowed_growth(-1, G("C2"), G("C4")), Verdict::allowed);
    EXPECT_EQ(allowed_growth(-1, G("C2"), G("C2xC20")), Verdict::forbidden);
    EXPECT_EQ(allowed_growth(-3, G("C2"), G("C2xC20")), Verdict::forbidden);
    EXPECT_EQ(allowed_growth(-1, G("C8"), G("C16")), Verdict::allowed);
    EXPECT_EQ(allowed_growth(-1, G("C1"), G("C2")), Verdict::forbidden);
    EXPECT_EQ(allowed_growth(-1, G("C1"), G("C3")), Verdict::allowed);
    EXPECT_EQ(allowed_growth(-1, G("C1"), G("C7")), Verdict::unlisted);
    EXPECT_EQ(allowed_growth(-3, G("C2"), G("C6xC6")), Verdict::allowed);
    EXPECT_EQ(allowed_growth(-1, G("C6"), G("C4")), Verdict::forbidden);
}

TEST(Classification, TableRowsAreListed) {
    EXPECT_TRUE(in_list(G("C2xC10"), two_torsion_growth_list(-1)));
    EXPECT_TRUE(in_list(G("C16"), two_torsion_growth_list(-1)));
    EXPECT_TRUE(in_list(G("C4xC4"), two_torsion_growth_list(-3)));
    EXPECT_FALSE(in_list(G("C4xC4"), two_torsion_growth_list(-1)));
    EXPECT_TRUE(in_list(G("C3xC3"), odd_growth_list(-3)));
    EXPECT_FALSE(in_list(G("C3xC3"), odd_growth_list(-1)));
    EXPECT_TRUE(in_list(G("C7"), odd_growth_extended_list(-1)));
    EXPECT_TRUE(in_list(G("C3xC3"), odd_growth_extended_list(-1)));
}

TEST(Audit, FlagsSyntheticViolations) {
    auto has = [](const std::vector<Violation>& v, const std::string& clause) {
        for (const auto& x : v)
            if (x.clause == clause) return true;
        return false;
    };
    EXPECT_TRUE(has(growth_audit(-1, G("C4"), {{"5", G("C16"), G("C4")}}), "C4-to-C16"));
    EXPECT_TRUE(has(growth_audit(-1, G("C7"), {{"5", G("C7xC7"), G("C7")}, {"3", G("C7xC7"), G("C7")}}), "odd-twist"));
    EXPECT_TRUE(has(growth_audit(-1, G("C2"), {{"5", G("C2xC4"), G("C2")}}), "four-torsion-on-both"));
    EXPECT_TRUE(has(growth_audit(-1, G("C2"), {{"5", G("C2xC4"), G("C2")}}), "cyclic-2-part-no-C2xC4"));
    EXPECT_TRUE(has(growth_audit(-3, G("C2"), {{"5", G("C2xC20"), G("C10")}}), "no-C2xC20"));
    EXPECT_TRUE(has(growth_audit(-1, G("C2"), {{"5", G("C14"), G("C14")}}), "excluded-cyclic"));
    EXPECT_TRUE(has(growth_audit(-1, G("C1"), {{"5", G("C15"), G("C3")}}), "odd-direct-sum"));
    EXPECT_TRUE(growth_audit(-1, G("C4"), {{"5", G("C8"), G("C4")}}).empty());
}
