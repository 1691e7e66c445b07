#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "kronq/hom_basis.hpp"
#include "kronq/invariants.hpp"
#include "test_util.hpp"

using namespace kronq;

namespace {

RepDescriptor descriptor_of(const CoeffQuiver& q) {
    std::vector<Indecomposable> parts;
    for (const auto& s : decompose(q)) parts.push_back(s.shape);
    return RepDescriptor(std::move(parts));
}

FixedPoint make_fp(std::vector<int> s1, std::vector<int> s2) {
    FixedPoint fp;
    fp.s1 = std::move(s1);
    fp.s2 = std::move(s2);
    return fp;
}

}  // namespace

TEST_CASE("Standard basis counts match the Hom table", "[hom_basis]") {
    const CoeffQuiver r3 = build_coeff_quiver(R(3));
    CHECK(hom_standard_basis(r3, r3).size() == 3);
    CHECK(hom_standard_basis(build_coeff_quiver(P(0)), build_coeff_quiver(I(1))).size() ==
          1);
    CHECK(hom_standard_basis(build_coeff_quiver(I(1)), build_coeff_quiver(P(3))).empty());

    for (const auto& a : testutil::small_indecomposables(13))
        for (const auto& b : testutil::small_indecomposables(13))
            CHECK(long(hom_standard_basis(build_coeff_quiver(a), build_coeff_quiver(b))
                           .size()) == hom_dim(a, b));
}

TEST_CASE("Standard basis counts on sub/quotient quivers of R_n", "[hom_basis]") {
    for (int n = 1; n <= 8; ++n)
        for (int e1 = 0; e1 <= n; ++e1)
            for (int e2 = e1; e2 <= n; ++e2)
                for (const auto& fp : enumerate_fixed_points(R(n), {e1, e2})) {
                    const CoeffQuiver sub = fixed_point_quiver(R(n), fp);
                    const CoeffQuiver quot = quotient_quiver(R(n), fp);
                    if (sub.empty() || quot.empty()) continue;
                    CHECK(long(hom_standard_basis(sub, quot).size()) ==
                          hom_dim(descriptor_of(sub), descriptor_of(quot)));
                }
}

TEST_CASE("Weights are constant along matched strings", "[hom_basis]") {
    for (const auto& fp : enumerate_fixed_points(R(5), {1, 2})) {
        const CoeffQuiver sub = fixed_point_quiver(R(5), fp);
        const CoeffQuiver quot = quotient_quiver(R(5), fp);
        for (const auto& el : hom_standard_basis(sub, quot)) {
            REQUIRE(el.gamma.size() == el.gamma_prime.size());
            for (size_t i = 0; i < el.gamma.size(); ++i)
                CHECK(CoeffQuiver::weight(el.gamma_prime[i]) -
                          CoeffQuiver::weight(el.gamma[i]) ==
                      el.weight);
        }
    }
}

TEST_CASE("Hom-plus dimensions", "[hom_basis]") {
    const CoeffQuiver r3 = build_coeff_quiver(R(3));
    // the identity has weight 0, the two shift-right endomorphisms weight 1, 2
    CHECK(hom_plus_dim(r3, r3) == 2);

    // k(P_1) at k = 1 inside R_3 against its quotient: total cell dim 2
    const FixedPoint l = make_fp({1}, {1, 2});
    CHECK(hom_plus_dim(fixed_point_quiver(R(3), l), quotient_quiver(R(3), l)) == 2);

    CHECK(hom_plus_dim(r3, CoeffQuiver{}) == 0);
}

TEST_CASE("Cell dimensions via Hom-plus", "[hom_basis]") {
    CHECK(cell_dimension(R(5), make_fp({2}, {2, 3})) == 3);  // dim X = n - k

    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= n; ++r) {
            const auto fps = enumerate_fixed_points(R(n), {r, r});
            REQUIRE(fps.size() == 1);
            CHECK(cell_dimension(R(n), fps[0]) == 0);  // regular points repel
        }

    std::multiset<long long> dims;
    for (const auto& fp : enumerate_fixed_points(R(3), {1, 2}))
        dims.insert(cell_dimension(R(3), fp));
    CHECK(dims == std::multiset<long long>{0, 1, 1, 2});
}

TEST_CASE("Recursive cell dimensions", "[hom_basis]") {
    CHECK(cell_dimension_recursive(3, {{P(0), 2}, {R(1), 3}}) == 0);
    CHECK(cell_dimension_recursive(3, {{P(0), 1}, {R(1), 3}}) == 1);
    for (int n = 1; n <= 6; ++n)
        for (int r = 0; r <= n - 1; ++r)
            for (int k = 1; k + r <= n; ++k)
                CHECK(cell_dimension_recursive(n, {{P(r), k}}) == n - k);

    CHECK_THROWS_AS(cell_dimension_recursive(3, {{P(0), 2}, {P(0), 1}}),
                    std::invalid_argument);  // unsorted
    CHECK_THROWS_AS(cell_dimension_recursive(4, {{P(1), 1}, {P(0), 2}}),
                    std::invalid_argument);  // overlapping
    CHECK_THROWS_AS(cell_dimension_recursive(3, {{R(1), 2}}),
                    std::invalid_argument);  // regular not at the tail
    CHECK_THROWS_AS(cell_dimension_recursive(3, {{R(1), 3}, {P(0), 1}}),
                    std::invalid_argument);  // regular must come last
    CHECK_THROWS_AS(cell_dimension_recursive(3, {{I(1), 1}}), std::invalid_argument);
}

TEST_CASE("Recursion agrees with Hom-plus on every fixed point", "[hom_basis]") {
    for (int n = 1; n <= 6; ++n)
        for (int e1 = 0; e1 <= n; ++e1)
            for (int e2 = e1; e2 <= n; ++e2)
                for (const auto& fp : enumerate_fixed_points(R(n), {e1, e2}))
                    CHECK(cell_dimension(R(n), fp) ==
                          cell_dimension_recursive(n, fp.summands));
}

TEST_CASE("Cells assemble to the closed Poincare polynomial", "[hom_basis]") {
    for (int n = 1; n <= 6; ++n)
        for (int e1 = 0; e1 <= n; ++e1)
            for (int e2 = e1; e2 <= n; ++e2) {
                const DimVector e(e1, e2);
                std::vector<long long> hist;
                for (const auto& fp : enumerate_fixed_points(R(n), e)) {
                    const long long d = cell_dimension(R(n), fp);
                    const long long top = (e2 - e1) * (n - (e2 - e1));
                    CHECK(d >= 0);
                    CHECK(d <= top);
                    if (size_t(d) >= hist.size()) hist.resize(d + 1, 0);
                    ++hist[d];
                }
                CHECK(GradedPoly(std::move(hist)) == poincare(R(n), e));
            }
}
