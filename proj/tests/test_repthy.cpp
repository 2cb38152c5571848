#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "srt/errors.hpp"
#include "srt/repthy.hpp"

using namespace srt;

namespace {

std::vector<int> zeros(int n) { return std::vector<int>(n, 0); }

} // namespace

TEST_CASE("weight validation") {
    CHECK_NOTHROW(gl_weight(3, {2, 0, -1}));
    CHECK_THROWS_AS(gl_weight(2, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gl_weight(2, {1}), std::invalid_argument);
    CHECK_NOTHROW(sp_weight(4, {2, 1}));
    CHECK_THROWS_AS(sp_weight(4, {1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(sp_weight(3, {1}), std::invalid_argument);
    CHECK_THROWS_AS(sp_weight(4, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("dimension formula on small irreducibles") {
    CHECK(weyl_dim(gl_weight(2, {1, 0})) == 2);
    CHECK(weyl_dim(gl_weight(2, {2, 0})) == 3);
    CHECK(weyl_dim(gl_weight(3, {1, 1, 0})) == 3);
    CHECK(weyl_dim(gl_weight(3, {0, 0, 0})) == 1);
    CHECK(weyl_dim(gl_weight(2, {1, -1})) == 3);
    CHECK(weyl_dim(gl_weight(4, {1, 0, 0, -1})) == 15);
    CHECK(weyl_dim(sp_weight(4, {1, 0})) == 4);
    CHECK(weyl_dim(sp_weight(4, {1, 1})) == 5);
    CHECK(weyl_dim(sp_weight(4, {2, 0})) == 10);
    CHECK(weyl_dim(sp_weight(6, {1, 1, 1})) == 14);
}

TEST_CASE("characters list the expected weights") {
    const auto std2 = character(gl_weight(2, {1, 0}));
    CHECK(std2.terms().size() == 2);
    CHECK(std2.coefficient({1, 0}) == 1);
    CHECK(std2.coefficient({0, 1}) == 1);

    const auto adj2 = character(gl_weight(2, {1, -1}));
    CHECK(adj2.terms().size() == 3);
    CHECK(adj2.coefficient({1, -1}) == 1);
    CHECK(adj2.coefficient({0, 0}) == 1);
    CHECK(adj2.coefficient({-1, 1}) == 1);

    const auto sp4 = character(sp_weight(4, {1, 0}));
    CHECK(sp4.terms().size() == 4);
    for (const auto& e :
         std::vector<std::vector<int>>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}})
        CHECK(sp4.coefficient(e) == 1);

    // Lambda^2_0 of the symplectic four-space: the zero weight survives once.
    const auto sp4b = character(sp_weight(4, {1, 1}));
    CHECK(sp4b.terms().size() == 5);
    CHECK(sp4b.coefficient({0, 0}) == 1);

    // Adjoint of Sp_4: zero weight with multiplicity two (the rank).
    const auto sp4c = character(sp_weight(4, {2, 0}));
    CHECK(sp4c.coefficient({0, 0}) == 2);
    CHECK(sp4c.eval_ones() == 10);
}

TEST_CASE("character at the identity equals the dimension") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : dominant_weights_gl(n, 4))
            CHECK(character(lam).eval_ones() == weyl_dim(lam));
    for (int n = 2; n <= 8; n += 2)
        for (const auto& lam : dominant_weights_sp(n, 4))
            CHECK(character(lam).eval_ones() == weyl_dim(lam));
}

TEST_CASE("interlacing chain counts match explicit invariants") {
    CHECK(gt_invariant_dim(gl_weight(2, {1, 0}), 1) == 1);
    CHECK(gt_invariant_dim(gl_weight(2, {2, 0}), 1) == 1);
    CHECK(gt_invariant_dim(gl_weight(3, {1, 1, 0}), 1) == 1);
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(gt_invariant_dim(gl_weight(n, zeros(n)), k) == 1);
    CHECK_THROWS_AS(gt_invariant_dim(gl_weight(2, {1, 0}), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(gt_invariant_dim(sp_weight(4, {1, 0}), 1),
                    std::invalid_argument);
}

TEST_CASE("chain counting boundary ranks") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : dominant_weights_gl(n, 4)) {
            const bool trivial =
                lam.entries == zeros(n);
            CHECK(gt_invariant_dim(lam, n) == (trivial ? 1 : 0));
            CHECK(gt_invariant_dim(lam, 0) == weyl_dim(lam));
        }
}

TEST_CASE("chain counting respects duality") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : dominant_weights_gl(n, 4))
            for (int k = 0; k <= n; ++k)
                CHECK(gt_invariant_dim(lam, k) ==
                      gt_invariant_dim(dual_weight(lam), k));
}

TEST_CASE("constant-term oracle agrees with chain counting") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : dominant_weights_gl(n, 4))
            for (int k = 0; k <= n; ++k)
                CHECK(ct_invariant_dim(lam, {GroupKind::GeneralLinear, k}) ==
                      gt_invariant_dim(lam, k));
}

TEST_CASE("symplectic block invariants") {
    CHECK(ct_invariant_dim(gl_weight(2, {2, 0}), {GroupKind::GeneralLinear, 1}) == 1);
    CHECK(ct_invariant_dim(sp_weight(4, {1, 0}), {GroupKind::Symplectic, 2}) == 2);
    CHECK(ct_invariant_dim(sp_weight(4, {1, 1}), {GroupKind::Symplectic, 2}) == 1);
    CHECK(ct_invariant_dim(sp_weight(4, {2, 0}), {GroupKind::Symplectic, 2}) == 3);
    // Rank-zero subgroup: everything is invariant.
    CHECK(ct_invariant_dim(sp_weight(4, {2, 1}), {GroupKind::Symplectic, 0}) ==
          weyl_dim(sp_weight(4, {2, 1})));
    CHECK(ct_invariant_dim(gl_weight(3, {2, 1, -1}), {GroupKind::GeneralLinear, 0}) ==
          weyl_dim(gl_weight(3, {2, 1, -1})));
    CHECK_THROWS_AS(
        ct_invariant_dim(sp_weight(4, {1, 0}), {GroupKind::GeneralLinear, 1}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        ct_invariant_dim(gl_weight(2, {1, 0}), {GroupKind::GeneralLinear, 3}),
        std::invalid_argument);
}

TEST_CASE("invariant computations respect resource caps") {
    CHECK_THROWS_AS(
        ct_invariant_dim(gl_weight(5, {1, 0, 0, 0, 0}), {GroupKind::GeneralLinear, 1}),
        ResourceLimit);
    CHECK_THROWS_AS(
        ct_invariant_dim(gl_weight(2, {7, 0}), {GroupKind::GeneralLinear, 1}),
        ResourceLimit);
    RepLimits wide;
    wide.ctRank = 5;
    CHECK(ct_invariant_dim(gl_weight(5, {1, 0, 0, 0, -1}),
                           {GroupKind::GeneralLinear, 5}, wide) == 0);
    CHECK_THROWS_AS(cauchy_check(5, 2, 2), ResourceLimit);
    CHECK_THROWS_AS(cauchy_check(2, 2, 7), ResourceLimit);
    CHECK_THROWS_AS(ks_presentation_check(4, 2), ResourceLimit);
    CHECK_THROWS_AS(ks_presentation_check(2, 6), ResourceLimit);
}

TEST_CASE("Hilbert function selects the right regime") {
    for (int k = -2; k <= 2; ++k)
        CHECK(h0({GroupKind::GeneralLinear, 1}, 1, 3, gl_weight(1, {k})) == 1);
    CHECK(h0({GroupKind::GeneralLinear, 2}, 2, 2, gl_weight(2, {1, 0})) == 1);
    CHECK(h0({GroupKind::GeneralLinear, 2}, 2, 2, gl_weight(2, {0, -1})) == 1);
    CHECK(h0({GroupKind::GeneralLinear, 2}, 2, 4, gl_weight(2, {1, 0})) == 2);
    CHECK(h0({GroupKind::Symplectic, 4}, 4, 2, sp_weight(4, {1, 0})) == 2);
    CHECK(h0({GroupKind::Symplectic, 2}, 2, 3, sp_weight(2, {2})) == 3);

    CHECK_THROWS_AS(h0({GroupKind::GeneralLinear, 2}, 2, 3, gl_weight(2, {1, 0})),
                    UnsupportedRegime);
    CHECK_THROWS_AS(h0({GroupKind::Symplectic, 4}, 4, 1, sp_weight(4, {1, 0})),
                    UnsupportedRegime);
    CHECK_THROWS_AS(h0({GroupKind::Orthogonal, 2}, 2, 2, gl_weight(2, {1, 0})),
                    UnsupportedRegime);
    CHECK_THROWS_AS(h0({GroupKind::Symplectic, 3}, 3, 1, gl_weight(3, {1, 0, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(h0({GroupKind::GeneralLinear, 3}, 3, 6, gl_weight(2, {1, 0})),
                    std::invalid_argument);
}

TEST_CASE("series comparison on small matrix spaces") {
    const auto r0 = cauchy_check(2, 2, 0);
    CHECK(r0.ok);
    CHECK(r0.degree_dims == std::vector<long long>{1});

    const auto r2 = cauchy_check(2, 2, 2);
    CHECK(r2.ok);
    CHECK(r2.degree_dims == std::vector<long long>{1, 4, 10});

    const auto r23 = cauchy_check(2, 3, 4);
    CHECK(r23.ok);
    CHECK(r23.degree_dims == std::vector<long long>{1, 6, 21, 56, 126});

    const auto r32 = cauchy_check(3, 2, 3);
    CHECK(r32.ok);
    CHECK(r32.degree_dims == std::vector<long long>{1, 6, 21, 56});

    const auto r11 = cauchy_check(1, 1, 3);
    CHECK(r11.ok);
    CHECK(r11.degree_dims == std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("monomial dictionary on rank two") {
    for (int n = 1; n <= 3; ++n) {
        const auto mono = lambda_monomial(gl_weight(n, zeros(n)));
        CHECK(mono.x == zeros(n));
        CHECK(mono.y == zeros(n));
    }
    const auto m10 = lambda_monomial(gl_weight(2, {1, 0}));
    CHECK(m10.x == zeros(2));
    CHECK(m10.y == std::vector<int>{1, 0});
    const auto m11 = lambda_monomial(gl_weight(2, {1, 1}));
    CHECK(m11.x == zeros(2));
    CHECK(m11.y == std::vector<int>{0, 1});
    const auto m0m1 = lambda_monomial(gl_weight(2, {0, -1}));
    CHECK(m0m1.x == std::vector<int>{1, 0});
    CHECK(m0m1.y == zeros(2));
    const auto mm1m1 = lambda_monomial(gl_weight(2, {-1, -1}));
    CHECK(mm1m1.x == std::vector<int>{0, 1});
    CHECK(mm1m1.y == zeros(2));

    for (const auto& lam : dominant_weights_gl(3, 4)) {
        const auto mono = lambda_monomial(lam);
        CHECK(monomial_admissible(mono));
        CHECK(monomial_weight(mono) == lam);
        CHECK(monomial_tprime_weight(mono) == dual_weight(lam));
    }
}

TEST_CASE("weight bijection across admissible monomials") {
    for (int wb = 0; wb <= 5; ++wb) {
        const auto rep = ks_presentation_check(1, wb);
        CHECK(rep.ok);
        CHECK(rep.weight_count == 2 * wb + 1);
        CHECK(rep.monomial_count == rep.weight_count);
    }
    const auto r2 = ks_presentation_check(2, 4);
    CHECK(r2.ok);
    CHECK(r2.monomial_count == r2.weight_count);
    const auto r3 = ks_presentation_check(3, 4);
    CHECK(r3.ok);
    CHECK(r3.monomial_count == r3.weight_count);
}

TEST_CASE("dominant weight enumeration") {
    CHECK(dominant_weights_gl(1, 2).size() == 5);
    CHECK(dominant_weights_gl(2, 1).size() == 3);
    CHECK(dominant_weights_sp(4, 2).size() == 4);
    std::set<std::vector<int>> seen;
    for (const auto& lam : dominant_weights_gl(3, 3)) {
        CHECK(lam.group.kind == GroupKind::GeneralLinear);
        CHECK(seen.insert(lam.entries).second);
        int total = 0;
        for (int e : lam.entries) total += std::abs(e);
        CHECK(total <= 3);
    }
}

TEST_CASE("duality on weights") {
    CHECK(dual_weight(gl_weight(3, {2, 1, -1})).entries ==
          std::vector<int>{1, -1, -2});
    CHECK(dual_weight(dual_weight(gl_weight(3, {2, 1, -1}))) ==
          gl_weight(3, {2, 1, -1}));
    CHECK(dual_weight(sp_weight(4, {2, 1})) == sp_weight(4, {2, 1}));
}
