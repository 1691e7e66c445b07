#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "kronq/hom_basis.hpp"
#include "kronq/invariants.hpp"

using namespace kronq;

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("Poincare polynomials", "[invariants]") {
    CHECK(poincare(R(3), {1, 2}) == GradedPoly({1, 2, 1}));
    for (int n = 1; n <= 6; ++n)
        for (int e2 = 0; e2 <= n; ++e2)
            CHECK(poincare(R(n), {0, e2}) == gaussian_binomial(n, e2));
    CHECK(poincare(P(1), {1, 2}) == GradedPoly::one());

    // out of range: empty variety, zero polynomial
    CHECK(poincare(R(3), {2, 1}).is_zero());
    CHECK(poincare(R(3), {1, 4}).is_zero());
    CHECK(poincare(P(2), {2, 2}).is_zero());
    CHECK(poincare(GrassId(RepKind::Regular, 0, {0, 0})) == GradedPoly::one());
}

TEST_CASE("Preinjective Poincare polynomials", "[invariants]") {
    CHECK(poincare(I(0), {1, 0}) == GradedPoly::one());
    CHECK(poincare(I(2), {1, 0}).is_zero());
    CHECK(poincare(I(3), {4, 3}) == GradedPoly::one());

    // binomial product form in the generic range
    for (int n = 0; n <= 6; ++n)
        for (int e1 = 0; e1 <= n + 1; ++e1)
            for (int e2 = e1; e2 <= n; ++e2)
                CHECK(poincare(I(n), {e1, e2}) ==
                      gaussian_binomial(e2 + 1, e1) * gaussian_binomial(n - e1, e2 - e1));

    // the isomorphism Gr_e(I_n) ~ Gr_(n-e2, n+1-e1)(P_n)
    for (int n = 0; n <= 6; ++n)
        for (int e1 = 0; e1 <= n + 1; ++e1)
            for (int e2 = 0; e2 <= n; ++e2)
                CHECK(poincare(I(n), {e1, e2}) ==
                      poincare(P(n), {n - e2, n + 1 - e1}));
}

TEST_CASE("Special-case Betti numbers", "[invariants]") {
    CHECK(betti_special(3, 1) == GradedPoly({1, 2, 1}));
    CHECK(betti_special(5, 2) == GradedPoly({1, 2, 3, 2, 1}));
    CHECK(betti_special(2, 0) == GradedPoly({1, 1}));
    for (int n = 1; n <= 10; ++n)
        for (int e1 = 0; e1 <= n - 1; ++e1)
            CHECK(betti_special(n, e1) == poincare(R(n), {e1, e1 + 1}));
    CHECK_THROWS_AS(betti_special(3, 3), std::invalid_argument);
}

TEST_CASE("Euler characteristics", "[invariants]") {
    CHECK(euler_char(R(3), {1, 2}) == 4);
    for (int n = 1; n <= 8; ++n) CHECK(euler_char(R(n), {n, n}) == 1);
    CHECK(euler_char(I(0), {1, 0}) == 1);

    for (int n = 1; n <= 8; ++n)
        for (int e1 = 0; e1 <= n; ++e1)
            for (int e2 = e1; e2 <= n; ++e2)
                CHECK(euler_char(R(n), {e1, e2}) ==
                      binomial(e2, e1) * binomial(n - e1, e2 - e1));
}

TEST_CASE("Euler characteristic of direct sums by convolution", "[invariants]") {
    CHECK(euler_char_sum(RepDescriptor{P(0), P(0)}, {0, 1}) == 2);
    CHECK(euler_char_sum(RepDescriptor{R(1), R(1)}, {1, 1}) == 2);
    CHECK(euler_char_sum(RepDescriptor{P(2), R(1), I(0)}, {0, 0}) == 1);
    CHECK(euler_char_sum(RepDescriptor{}, {0, 0}) == 1);

    // agrees with the closed formula on single indecomposables
    for (int n = 0; n <= 4; ++n)
        for (int e1 = 0; e1 <= n + 1; ++e1)
            for (int e2 = 0; e2 <= n + 1; ++e2) {
                const DimVector e(e1, e2);
                if (e.leq(P(n).dim()))
                    CHECK(euler_char_sum(RepDescriptor{P(n)}, e) == euler_char(P(n), e));
                if (n >= 1 && e.leq(R(n).dim()))
                    CHECK(euler_char_sum(RepDescriptor{R(n)}, e) == euler_char(R(n), e));
                if (e.leq(I(n).dim()))
                    CHECK(euler_char_sum(RepDescriptor{I(n)}, e) == euler_char(I(n), e));
            }
}

TEST_CASE("Dimension formula", "[invariants]") {
    CHECK(dimension(GrassId(R(3), {1, 2})) == 2);
    for (int n = 1; n <= 6; ++n) CHECK(dimension(GrassId(R(n), {n, n})) == 0);
    CHECK(dimension(GrassId(R(4), {1, 3})) == 4);
    for (int n = 1; n <= 8; ++n)
        for (int e1 = 0; e1 <= n; ++e1)
            for (int e2 = e1; e2 <= n; ++e2)
                CHECK(dimension(GrassId(R(n), {e1, e2})) ==
                      poincare(R(n), {e1, e2}).degree());
    CHECK_THROWS_AS(dimension(GrassId(R(3), {2, 1})), std::domain_error);
}

TEST_CASE("Stratification", "[invariants]") {
    const auto s2 = strata(GrassId(R(2), {1, 1}));
    REQUIRE(s2.size() == 2);
    CHECK(s2[0].first == 0);
    CHECK(s2[0].second == GrassId(RepKind::Regular, 2, {1, 1}));
    CHECK(s2[1].first == 1);
    CHECK(s2[1].second == GrassId(RepKind::Regular, 0, {0, 0}));

    for (int n = 1; n <= 5; ++n)
        for (int e2 = 0; e2 <= n; ++e2) {
            const auto smooth = strata(GrassId(R(n), {0, e2}));
            REQUIRE(smooth.size() == 1);
            CHECK(smooth[0].second == GrassId(RepKind::Regular, n, {0, e2}));
        }

    CHECK(strata(GrassId(R(4), {2, 2})).size() == 3);
    CHECK(strata(GrassId(R(3), {2, 1})).empty());
    CHECK_THROWS_AS(strata(GrassId(P(3), {1, 2})), std::invalid_argument);
}

TEST_CASE("Smooth part and exact strata", "[invariants]") {
    CHECK(smooth_part_euler(GrassId(R(2), {1, 1})) == 0);
    CHECK(smooth_part_euler(GrassId(R(2), {0, 1})) == 2);
    CHECK(smooth_part_euler(GrassId(R(1), {1, 1})) == 1);

    CHECK(stratum_euler_exact(GrassId(R(2), {1, 1}), 1) == 1);
    CHECK(stratum_euler_exact(GrassId(R(2), {1, 1}), 0) ==
          smooth_part_euler(GrassId(R(2), {1, 1})));
    CHECK(stratum_euler_exact(GrassId(R(2), {1, 1}), 5) == 0);

    // telescoping: the strata chi's sum to the total
    for (int n = 1; n <= 6; ++n)
        for (int e1 = 0; e1 <= n; ++e1)
            for (int e2 = e1; e2 <= n; ++e2) {
                const GrassId id(R(n), {e1, e2});
                long long total = 0;
                for (int k = 0; k <= n; ++k) total += stratum_euler_exact(id, k);
                CHECK(total == euler_char(id));
            }
}

TEST_CASE("Duality involution", "[invariants]") {
    CHECK(dual_e(3, {1, 2}) == DimVector(1, 2));
    CHECK(dual_e(4, {1, 2}) == DimVector(2, 3));
    for (int n = 1; n <= 10; ++n)
        for (int e1 = 0; e1 <= n; ++e1)
            for (int e2 = 0; e2 <= n; ++e2) {
                const DimVector e(e1, e2);
                CHECK(dual_e(n, dual_e(n, e)) == e);
                CHECK(poincare(R(n), e) == poincare(R(n), dual_e(n, e)));
            }
    CHECK_THROWS_AS(dual_e(2, {3, 1}), std::domain_error);
}

TEST_CASE("Alpha and beta index sets", "[invariants]") {
    // single-summand case: alpha = (k1, e1), image a1 = k1
    for (int n = 1; n <= 6; ++n)
        for (int e1 = 0; e1 + 1 <= n; ++e1) {
            const DimVector e(e1, e1 + 1);
            for (const auto& a : alpha_set(n, e)) {
                REQUIRE(a.positions.size() == 1);
                CHECK(a.ranks[0] == e1);
                const BetaElement b = alpha_to_beta(n, e, a);
                CHECK(b.a == a.positions);
                CHECK(b.b.empty());
            }
        }

    // the spec's non-example: positions must be strictly interleaved
    CHECK_FALSE(alpha_valid(4, {1, 3}, AlphaElement{{1, 2}, {1, 0}}));
    CHECK_THROWS_AS(alpha_to_beta(4, {1, 3}, AlphaElement{{1, 2}, {1, 0}}),
                    std::invalid_argument);

    // alpha elements are exactly the all-preprojective fixed points, and the
    // closed dimension matches the attracting-cell recursion
    for (int n = 1; n <= 5; ++n)
        for (int e1 = 0; e1 <= n; ++e1)
            for (int e2 = e1 + 1; e2 <= n; ++e2) {
                const DimVector e(e1, e2);
                for (const auto& a : alpha_set(n, e)) {
                    std::vector<PlacedSummand> parts;
                    for (size_t i = 0; i < a.positions.size(); ++i)
                        parts.push_back({P(a.ranks[i]), a.positions[i]});
                    CHECK(alpha_cell_dim(n, e, a) == cell_dimension_recursive(n, parts));
                }
            }
}

TEST_CASE("Alpha to beta is a dimension-preserving bijection", "[invariants]") {
    for (int n = 1; n <= 6; ++n)
        for (int e1 = 0; e1 <= n; ++e1)
            for (int e2 = e1 + 1; e2 <= n; ++e2) {
                const DimVector e(e1, e2);
                const auto alphas = alpha_set(n, e);
                const auto betas = beta_set(n, e);
                std::set<BetaElement> image;
                for (const auto& a : alphas) {
                    const BetaElement b = alpha_to_beta(n, e, a);
                    CHECK(beta_valid(n, e, b));
                    CHECK(alpha_cell_dim(n, e, a) == beta_cell_dim(n, e, b));
                    image.insert(b);
                }
                CHECK(image.size() == alphas.size());
                CHECK(image.size() == betas.size());
            }
}
