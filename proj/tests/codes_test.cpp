#include <gtest/gtest.h>

#include <vector>

#include "aqcodes/codes.hpp"

namespace {

using namespace aqcodes;

ConstacyclicCode negacyclic(i64 q, i64 n, std::vector<i64> z) {
    return {DefiningSet::from_members(CosetContext(q, n, 2), std::move(z)), (q * q - 1) / 2};
}

// Minimum weight over all nonzero c in GF(q^2)^n with c(delta^j) = 0 for
// every j in Z: membership by root evaluation, no generator polynomial.
i64 brute_min_weight_by_roots(const ConstacyclicCode& code) {
    const auto sf = splitting_field(code);
    const auto& base = code.base_field();
    const auto all = base.elements();
    const auto n = static_cast<std::size_t>(code.length());
    std::vector<std::size_t> digit(n, 0);
    i64 best = code.length() + 1;
    for (;;) {
        std::size_t i = 0;
        while (i < n && ++digit[i] == all.size()) digit[i++] = 0;
        if (i == n) break;
        Poly c;
        i64 weight = 0;
        for (std::size_t j = 0; j < n; ++j) {
            c.push_back(sf.embedding(all[digit[j]]));
            weight += digit[j] != 0 ? 1 : 0;
        }
        if (weight >= best) continue;
        bool member = true;
        for (i64 z : code.defining_set().members())
            if (!poly::eval(c, sf.delta.pow(z)).is_zero()) {
                member = false;
                break;
            }
        if (member) best = weight;
    }
    return best;
}

TEST(Codes, NegacyclicQ9DimensionAndDesignedDistance) {
    const auto c = negacyclic(9, 40, {1, 3});
    EXPECT_EQ(c.length(), 40);
    EXPECT_EQ(c.dimension(), 38);
    EXPECT_EQ(c.designed_distance(), 3);
}

TEST(Codes, EmptyDefiningSetIsFullCode) {
    const auto c = negacyclic(9, 40, {});
    EXPECT_EQ(c.dimension(), 40);
    EXPECT_EQ(c.designed_distance(), 1);
    const auto g = generator_polynomial(c);
    ASSERT_EQ(g.size(), 1U);
    EXPECT_TRUE(g[0].is_one());
    const auto d = min_distance_exact(c);
    ASSERT_TRUE(d.exact);
    EXPECT_EQ(*d.exact, 1);
}

TEST(Codes, ThirdConstructionQ23) {
    const auto spec = make_family(Construction::ThirdPlus, 23);
    const auto c2 = ConstacyclicCode::from_family(spec, 6);
    EXPECT_EQ(c2.dimension(), 93);
    EXPECT_EQ(c2.designed_distance(), 14);
    const auto c1 = ConstacyclicCode::from_family(spec, 0);
    EXPECT_EQ(c1.dimension(), 105);
    EXPECT_EQ(c1.designed_distance(), 2);
    const auto sf = splitting_field(c1);
    EXPECT_EQ(sf.degree, 2);
    EXPECT_EQ(sf.field->order(), 279841U);
    const auto d = min_distance_exact(c1);
    EXPECT_TRUE(d.mds());
    EXPECT_EQ(d.strategy, DistanceStrategy::MdsCertificate);
}

TEST(Codes, RejectsInconsistentEta) {
    const auto z = DefiningSet::from_members(CosetContext(9, 40, 2), {1});
    EXPECT_THROW(ConstacyclicCode(z, 20), std::invalid_argument);  // w^20 has order 4
    EXPECT_NO_THROW(ConstacyclicCode(z, 40));
    EXPECT_NO_THROW(ConstacyclicCode(z, 120));  // reduced mod 80 to 40
}

TEST(Codes, DesignedDistanceOfConsecutiveOdds) {
    for (i64 t = 1; t <= 8; ++t) {
        std::vector<i64> z;
        for (i64 i = 1; i <= t; ++i) z.push_back(2 * i - 1);
        EXPECT_EQ(bch_designed_distance(DefiningSet::from_members(CosetContext(9, 40, 2), z)), t + 1);
    }
    EXPECT_EQ(bch_designed_distance(DefiningSet::empty(CosetContext(9, 40, 2))), 1);
    EXPECT_THROW(bch_designed_distance(DefiningSet::all(CosetContext(9, 40, 2))), std::domain_error);
}

TEST(Codes, GeneratorPolynomialOfFullDefiningSetIsXnMinusEta) {
    const ConstacyclicCode c(DefiningSet::all(CosetContext(3, 4, 2)), 4);
    EXPECT_TRUE(c.is_zero_code());
    const auto g = generator_polynomial(c);
    EXPECT_EQ(g, poly::x_n_minus(c.base_field(), 4, c.eta()));
}

TEST(Codes, GeneratorPolynomialQ3Negacyclic) {
    const auto c = negacyclic(3, 4, {1, 3});
    for (int mult : {1, 2}) {
        const auto sf = splitting_field(c, mult);
        EXPECT_EQ(sf.field->order(), mult == 1 ? 9U : 81U);
        const auto g = generator_polynomial(c, sf);
        ASSERT_EQ(poly::degree(g), 2);
        // (x - d)(x - d^3) (x - d^5)(x - d^7) = x^4 + 1, computed in the
        // splitting field and compared with the embedded target.
        const auto& ext = *sf.field;
        Poly cofactor{ext.one()};
        for (i64 j : {5, 7}) cofactor = poly::mul(cofactor, Poly{-sf.delta.pow(j), ext.one()});
        Poly lifted;
        for (const auto& x : g) lifted.push_back(sf.embedding(x));
        const auto product = poly::mul(lifted, cofactor);
        Poly target(5, ext.zero());
        target[0] = ext.one();
        target[4] = ext.one();
        EXPECT_EQ(product, target);
        EXPECT_TRUE(divides_x_n_minus_eta(c, g));
    }
}

TEST(Codes, DeltaIsPrimitiveRootWithDeltaToTheNEqualEta) {
    for (i64 q : {3, 5, 7, 9, 13}) {
        for (const auto& spec : valid_families(q)) {
            const auto c = ConstacyclicCode::from_family(spec, spec.max_index);
            const auto sf = splitting_field(c);
            const i64 rn = spec.r * spec.n;
            EXPECT_EQ(sf.delta.pow(spec.n), sf.embedding(c.eta()));
            for (i64 l : prime_factors(rn)) EXPECT_FALSE(sf.delta.pow(rn / l).is_one());
            EXPECT_TRUE(sf.delta.pow(rn).is_one());
        }
    }
}

TEST(Codes, FamilyCodesAlgebraQ13) {
    const auto specs = valid_families(13);
    ASSERT_EQ(specs.size(), 7U);  // I, Ir (r = 14), II and II2 for lambda in {1, 3}, III-
    for (const auto& spec : specs) {
        for (i64 i = spec.min_index; i <= spec.max_index; ++i) {
            const auto c = ConstacyclicCode::from_family(spec, i);
            const auto sf = splitting_field(c);
            const auto g = generator_polynomial(c, sf);
            EXPECT_EQ(poly::degree(g) + c.dimension(), c.length());
            EXPECT_TRUE(divides_x_n_minus_eta(c, g));
            EXPECT_EQ(defining_set_from_generator(c, g, sf), c.defining_set().members());
        }
    }
}

TEST(Codes, EnumerationQ3LengthFour) {
    const auto c = negacyclic(3, 4, {1});
    const auto d = min_distance_exact(c);
    EXPECT_EQ(d.strategy, DistanceStrategy::Enumeration);
    ASSERT_TRUE(d.exact);
    EXPECT_EQ(*d.exact, 2);
    EXPECT_TRUE(d.mds());
    EXPECT_EQ(brute_min_weight_by_roots(c), 2);
}

TEST(Codes, EnumerationMatchesRootOracleOnTinyCodes) {
    for (const auto& z : std::vector<std::vector<i64>>{{1, 3}, {3}, {1, 5}, {1, 3, 5}, {3, 7}}) {
        const auto c = negacyclic(3, 4, z);
        const auto d = min_distance_exact(c);
        ASSERT_TRUE(d.exact);
        EXPECT_EQ(*d.exact, brute_min_weight_by_roots(c));
    }
}

TEST(Codes, MdsCertificateQ5LengthTwelve) {
    const auto c = negacyclic(5, 12, {1, 3});
    const auto d = min_distance_exact(c);
    EXPECT_EQ(d.strategy, DistanceStrategy::MdsCertificate);
    ASSERT_TRUE(d.exact);
    EXPECT_EQ(*d.exact, 3);

    // Independent check: no codeword of weight <= 2 (by root evaluation).
    const auto sf = splitting_field(c);
    const auto all = c.base_field().elements();
    const auto d1 = sf.delta;
    const auto d3 = sf.delta.pow(3);
    for (i64 a = 0; a < 12; ++a)
        for (i64 b = a + 1; b < 12; ++b)
            for (std::size_t x = 1; x < all.size(); ++x)
                for (std::size_t y = 0; y < all.size(); ++y) {
                    const auto ex = sf.embedding(all[x]);
                    const auto ey = sf.embedding(all[y]);
                    const bool root1 = (ex * d1.pow(a) + ey * d1.pow(b)).is_zero();
                    const bool root3 = (ex * d3.pow(a) + ey * d3.pow(b)).is_zero();
                    ASSERT_FALSE(root1 && root3);
                }
}

TEST(Codes, DependentColumnsDetected) {
    // Roots delta, delta^5: columns 0 and 20 of the check matrix coincide
    // up to scaling, so the code has distance 2, below the Singleton bound 3.
    const auto c = negacyclic(9, 40, {1, 5});
    const auto d = min_distance_exact(c);
    ASSERT_TRUE(d.exact);
    EXPECT_EQ(*d.exact, 2);
    EXPECT_FALSE(d.mds());
    EXPECT_EQ(d.upper, 2);
}

TEST(Codes, BoundsOnlyWhenBudgetIsZero) {
    const auto c = negacyclic(9, 40, {1, 3, 5});
    const auto d = min_distance_exact(c, DistanceBudget{0, 0});
    EXPECT_EQ(d.strategy, DistanceStrategy::Bounds);
    EXPECT_EQ(d.lower, 4);
    EXPECT_EQ(d.upper, 4);
    ASSERT_TRUE(d.exact);
    EXPECT_EQ(*d.exact, 4);

    const auto gap = negacyclic(9, 40, {1, 5});
    const auto b = min_distance_exact(gap, DistanceBudget{0, 0});
    EXPECT_FALSE(b.exact);
    EXPECT_EQ(b.lower, 2);
    EXPECT_EQ(b.upper, 3);
}

TEST(Codes, ZeroCodeHasNoDistance) {
    const ConstacyclicCode c(DefiningSet::all(CosetContext(3, 4, 2)), 4);
    EXPECT_THROW(min_distance_exact(c), std::domain_error);
}

TEST(Codes, GeneratorMatrixRowsAreShifts) {
    const auto c = negacyclic(7, 24, {1, 3, 5});
    const auto g = generator_polynomial(c);
    const auto m = generator_matrix(c, g);
    EXPECT_EQ(m.rows(), 21U);
    EXPECT_EQ(rank(m), 21U);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto row = poly::trimmed(m.row(i));
        EXPECT_TRUE(poly::divmod(row, g).remainder.empty());
    }
}

TEST(Codes, OracleOnFullCodes) {
    const auto full = negacyclic(3, 4, {});
    EXPECT_TRUE(hermitian_inner_product_oracle(full, full));
}

TEST(Codes, OracleMatchesCosetCriterionQ3) {
    const auto c1 = negacyclic(3, 4, {1, 3});
    const auto c2 = negacyclic(3, 4, {1});
    EXPECT_EQ(hermitian_inner_product_oracle(c1, c2),
              hermitian_dual_contained_in(c1.defining_set(), c2.defining_set()));
    EXPECT_EQ(hermitian_inner_product_oracle(c2, c1),
              hermitian_dual_contained_in(c2.defining_set(), c1.defining_set()));
    // Every subset pair of Omega for this small length.
    const std::vector<i64> omega{1, 3, 5, 7};
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) {
            std::vector<i64> za, zb;
            for (int i = 0; i < 4; ++i) {
                if (a >> i & 1) za.push_back(omega[static_cast<std::size_t>(i)]);
                if (b >> i & 1) zb.push_back(omega[static_cast<std::size_t>(i)]);
            }
            const auto ca = negacyclic(3, 4, za);
            const auto cb = negacyclic(3, 4, zb);
            ASSERT_EQ(hermitian_inner_product_oracle(ca, cb),
                      hermitian_dual_contained_in(ca.defining_set(), cb.defining_set()))
                << a << " " << b;
        }
}

TEST(Codes, OracleSelfOrthogonalityQ7) {
    const auto c = negacyclic(7, 24, {1, 3, 5});
    EXPECT_TRUE(hermitian_inner_product_oracle(c, c));
    EXPECT_TRUE(is_dual_containing(c.defining_set()));
}

TEST(Codes, OracleRejectsMismatchedCodes) {
    EXPECT_THROW(hermitian_inner_product_oracle(negacyclic(3, 4, {}), negacyclic(5, 12, {})), std::invalid_argument);
}

}  // namespace
