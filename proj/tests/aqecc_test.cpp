#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "aqcodes/aqecc.hpp"

namespace {

using namespace aqcodes;

bool has(const std::vector<AqeccParams>& list, const std::string& code) {
    return std::any_of(list.begin(), list.end(), [&](const AqeccParams& p) { return notation(p) == code; });
}

TEST(Aqecc, ExampleQ23) {
    const auto spec = make_family(Construction::ThirdPlus, 23);
    const auto c1 = ConstacyclicCode::from_family(spec, 0);
    const auto c2 = ConstacyclicCode::from_family(spec, 6);
    const auto p = css_combine(c1, c2);
    EXPECT_EQ(notation(p), "[[106,92,14/2]]_529");
    EXPECT_TRUE(p.optimal);
    EXPECT_EQ(singleton_margin(p), 0);
}

TEST(Aqecc, ExampleQ17) {
    const auto spec = make_family(Construction::ThirdMinus, 17);
    const auto p = css_combine(ConstacyclicCode::from_family(spec, 0), ConstacyclicCode::from_family(spec, 4));
    EXPECT_EQ(notation(p), "[[58,48,10/2]]_289");
    EXPECT_TRUE(p.optimal);
}

TEST(Aqecc, FullCodesGiveTrivialOptimalCode) {
    const CosetContext ctx(9, 40, 2);
    const ConstacyclicCode full(DefiningSet::empty(ctx), 40);
    const auto p = css_combine(full, full);
    EXPECT_EQ(p.k, 40);
    EXPECT_EQ(p.dz, 1);
    EXPECT_EQ(p.dx, 1);
    EXPECT_TRUE(p.optimal);
}

TEST(Aqecc, CssRejections) {
    const CosetContext ctx(9, 40, 2);
    const ConstacyclicCode full(DefiningSet::empty(ctx), 40);
    const ConstacyclicCode zero(DefiningSet::all(ctx), 40);
    EXPECT_THROW(css_combine(full, zero), std::invalid_argument);
    const ConstacyclicCode bad(DefiningSet::from_members(ctx, {1, 71}), 40);  // -9 * 1 = 71 mod 80
    EXPECT_FALSE(is_dual_containing(bad.defining_set()));
    EXPECT_THROW(css_combine(bad, bad), std::invalid_argument);
    const ConstacyclicCode other(DefiningSet::empty(CosetContext(3, 4, 2)), 4);
    EXPECT_THROW(css_combine(full, other), std::invalid_argument);
}

TEST(Aqecc, NonPositiveQuantumDimensionRejected) {
    // Z = {1, 3} is dual-containing but uses half of Omega.
    const CosetContext ctx(3, 4, 2);
    const ConstacyclicCode big(DefiningSet::from_members(ctx, {1, 3}), 4);
    ASSERT_TRUE(hermitian_dual_contained_in(big.defining_set(), big.defining_set()));
    EXPECT_THROW(css_combine(big, big), std::invalid_argument);  // k = 2 + 2 - 4 = 0
}

TEST(Aqecc, SingletonMargin) {
    EXPECT_EQ(singleton_margin({9, 40, 38, 2, 2, true, std::nullopt}), 0);
    EXPECT_EQ(singleton_margin({23, 106, 80, 14, 14, true, std::nullopt}), 0);
    EXPECT_EQ(singleton_margin({9, 40, 40, 1, 1, true, std::nullopt}), 0);
    EXPECT_EQ(singleton_margin({9, 40, 30, 3, 3, false, std::nullopt}), 6);
}

struct Cardinality {
    Construction c;
    i64 q;
    std::optional<i64> lambda;
    std::optional<i64> r;
    std::size_t count;
    const char* sample;
};

TEST(Aqecc, FamilyCardinalitiesAndSamples) {
    const std::vector<Cardinality> cases{
        {Construction::NegacyclicI, 9, {}, {}, 36, "[[40,29,9/4]]_81"},
        {Construction::GeneralRI, 11, {}, 4, 15, "[[30,21,6/5]]_121"},
        {Construction::LambdaQPlusOne, 7, 3, {}, 21, "[[24,12,7/7]]_49"},
        {Construction::TwoLambdaQPlusOne, 9, 1, {}, 21, "[[20,8,7/7]]_81"},
        {Construction::ThirdPlus, 23, {}, {}, 28, "[[106,80,14/14]]_529"},
        {Construction::ThirdMinus, 17, {}, {}, 15, "[[58,40,10/10]]_289"},
    };
    for (const auto& c : cases) {
        const auto list = enumerate_family(make_family(c.c, c.q, c.lambda, c.r));
        EXPECT_EQ(list.size(), c.count) << construction_id(c.c);
        EXPECT_TRUE(has(list, c.sample)) << c.sample;
        for (const auto& p : list) EXPECT_EQ(singleton_margin(p), 0) << notation(p);
    }
}

TEST(Aqecc, NegacyclicCountFormula) {
    for (i64 q : {5, 7, 9, 11, 13}) {
        const auto list = enumerate_family(make_family(Construction::NegacyclicI, q));
        EXPECT_EQ(static_cast<i64>(list.size()), (q - 1) * q / 2) << q;
    }
    // q = 3: s = t = 2 would give k = 4 - 4 = 0 and is left out.
    EXPECT_EQ(enumerate_family(make_family(Construction::NegacyclicI, 3)).size(), 2U);
    for (i64 q : {13, 17, 23, 37, 43}) {
        const auto spec = make_family(q % 20 == 3 || q % 20 == 7 ? Construction::ThirdPlus : Construction::ThirdMinus, q);
        const i64 top = spec.max_index + 1;
        EXPECT_EQ(static_cast<i64>(enumerate_family(spec).size()), top * (top + 1) / 2) << q;
    }
}

TEST(Aqecc, MonotoneInS) {
    for (const auto& spec : valid_families(13)) {
        const auto list = enumerate_family(spec);
        const i64 step = is_third_construction(spec.construction) ? 2 : 1;
        for (const auto& a : list)
            for (const auto& b : list)
                if (a.provenance->t == b.provenance->t && b.provenance->s == a.provenance->s + 1) {
                    EXPECT_EQ(a.k - b.k, step);
                    EXPECT_EQ(b.dz - a.dz, step);
                    EXPECT_EQ(a.dx, b.dx);
                }
    }
}

TEST(Aqecc, ZeroDimensionPairsAreSkipped) {
    // lambda = 1: n - s - t = (q + 1) - (q - 1) - 2 = 0 at s = t = (q - 1)/2 + 1.
    const auto spec = make_family(Construction::LambdaQPlusOne, 7, 1);
    const auto list = enumerate_family(spec);
    EXPECT_EQ(list.size(), 9U);
    for (const auto& p : list) EXPECT_GT(p.k, 0);
    EXPECT_FALSE(has(list, "[[8,0,5/5]]_49"));
}

TEST(Aqecc, SwappingSAndTSwapsDistances) {
    const auto spec = make_family(Construction::LambdaQPlusOne, 7, 3);
    for (i64 s = spec.min_index; s <= spec.max_index; ++s)
        for (i64 t = spec.min_index; t < s; ++t) {
            const auto cs = ConstacyclicCode::from_family(spec, s);
            const auto ct = ConstacyclicCode::from_family(spec, t);
            const auto a = css_combine(ct, cs);
            const auto b = css_combine(cs, ct);
            EXPECT_EQ(a.k, b.k);
            EXPECT_EQ(a.dz, b.dx);
            EXPECT_EQ(a.dx, b.dz);
            EXPECT_EQ(a.optimal, b.optimal);
        }
}

TEST(Aqecc, DistancesOrderedAndProvenanceSorted) {
    const auto list = enumerate_family(make_family(Construction::NegacyclicI, 9));
    for (std::size_t i = 0; i < list.size(); ++i) {
        EXPECT_GE(list[i].dz, list[i].dx);
        EXPECT_EQ(list[i].dz, list[i].provenance->s + 1);
        EXPECT_EQ(list[i].dx, list[i].provenance->t + 1);
        if (i > 0) {
            const auto& a = *list[i - 1].provenance;
            const auto& b = *list[i].provenance;
            EXPECT_LT(std::pair(a.s, a.t), std::pair(b.s, b.t));
        }
    }
}

TEST(Aqecc, NotationRoundTrip) {
    const AqeccParams p{7, 24, 12, 7, 7, true, std::nullopt};
    EXPECT_EQ(notation(p), "[[24,12,7/7]]_49");
    EXPECT_EQ(parse_notation(notation(p)), tuple_of(p));
    EXPECT_THROW(parse_notation("[[24,12,7]]_49"), std::invalid_argument);
}

TEST(Aqecc, EmitTable) {
    const auto list = enumerate_family(make_family(Construction::TwoLambdaQPlusOne, 9, 1));
    const auto text = emit_table(list, TableFormat::Text);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 22);
    EXPECT_NE(text.find("[[20,8,7/7]]_81  s=6 t=6  optimal"), std::string::npos);
    EXPECT_EQ(text.rfind("# construction II2", 0), 0U);

    const auto doc = nlohmann::json::parse(emit_table(list, TableFormat::Json));
    EXPECT_EQ(doc["count"], 21);
    EXPECT_EQ(doc["codes"].size(), 21U);
    EXPECT_EQ(doc["codes"][0]["purity_assumed"], true);
    EXPECT_EQ(dump_json(doc), emit_table(list, TableFormat::Json));

    // Order does not depend on input order.
    auto reversed = list;
    std::reverse(reversed.begin(), reversed.end());
    EXPECT_EQ(emit_table(reversed, TableFormat::Text), text);

    EXPECT_THROW(emit_table(std::vector<AqeccParams>{}, TableFormat::Text), std::invalid_argument);
}

}  // namespace
