#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmks/spinbranch.hpp"

using namespace rmks;
using namespace rmks::spinbranch;

namespace {

// n-fold external product of the (merged) spin character of so(m), scaled by
// 2^floor(n/2) when m is odd: the branching rule's right-hand side
WeightMultiset branching_rhs(int m, int n) {
    WeightMultiset prod = spin_weights(m);
    for (int i = 1; i < n; ++i) prod = box(prod, spin_weights(m));
    if (m % 2 == 1) prod = scale(prod, 1LL << (n / 2));
    return prod;
}

} // namespace

TEST_CASE("spin_weights dimensions and small cases") {
    CHECK(spin_weights(6).dim() == 8);
    CHECK(spin_weights(6).rank == 3);
    CHECK(spin_weights(3).dim() == 2);
    CHECK(spin_weights(3).rank == 1);
    CHECK(spin_weights(3).weights.at({1}) == 1);
    CHECK(spin_weights(3).weights.at({-1}) == 1);

    auto [plus, minus] = spin_weights_pm(2);
    CHECK(plus.dim() == 1);
    CHECK(minus.dim() == 1);
    CHECK(direct_sum(plus, minus) == spin_weights(2));

    auto [p6, m6] = spin_weights_pm(6);
    CHECK(p6.dim() == 4);
    CHECK(m6.dim() == 4);
    CHECK(direct_sum(p6, m6) == spin_weights(6));
}

TEST_CASE("branching rule for S(nm) restricted to so(m)^n") {
    SUBCASE("S(6) to so(3)^2 has multiplicity 2") {
        auto lhs = restrict_to_product(spin_weights(6), 3, 2);
        CHECK(lhs == branching_rhs(3, 2));
        CHECK(lhs.dim() == 8);
        CHECK(branching_rhs(3, 2).dim() == 2 * 4);
    }
    SUBCASE("S(9) to so(3)^3 has multiplicity 2") {
        auto lhs = restrict_to_product(spin_weights(9), 3, 3);
        CHECK(lhs == branching_rhs(3, 3));
        CHECK(lhs.dim() == 16);
        CHECK(branching_rhs(3, 3).dim() == 2 * 8);
    }
    SUBCASE("S(4) to so(2)^2 has multiplicity 1") {
        auto lhs = restrict_to_product(spin_weights(4), 2, 2);
        CHECK(lhs == branching_rhs(2, 2));
    }
    SUBCASE("all nm <= 12") {
        for (int m = 2; m <= 6; ++m)
            for (int n = 1; n * m <= 12; ++n) {
                CAPTURE(m);
                CAPTURE(n);
                CHECK(restrict_to_product(spin_weights(n * m), m, n) == branching_rhs(m, n));
                if (m % 2 == 1) {
                    // integer bookkeeping, not just multisets
                    long long lhs = 1LL << ((n * m) / 2);
                    long long rhs = (1LL << (n / 2)) *
                                    [&] { long long p = 1; for (int i = 0; i < n; ++i) p *= 1LL << (m / 2); return p; }();
                    CHECK(lhs == rhs);
                }
            }
    }
    CHECK_THROWS_WITH_AS(restrict_to_product(spin_weights(6), 4, 2),
                         doctest::Contains("RankMismatch"), Error);
}

TEST_CASE("tensor, wedge2, sym2") {
    auto v1 = sl2k_irrep({1});
    auto v1v1 = box(v1, v1);
    CHECK(v1v1.dim() == 4);

    // Sym^2(V1 x V1) = V0 x V0 + V2 x V2 (dim 10)
    auto s = sym2(v1v1);
    CHECK(s.dim() == 10);
    CHECK(s == direct_sum(sl2k_irrep({0, 0}), sl2k_irrep({2, 2})));

    // wedge^2(V1 x V1) = V2 x V0 + V0 x V2 (dim 6)
    auto w = wedge2(v1v1);
    CHECK(w.dim() == 6);
    CHECK(w == direct_sum(sl2k_irrep({2, 0}), sl2k_irrep({0, 2})));

    // tensor with the trivial representation is the identity
    auto triv = sl2k_irrep({0, 0});
    CHECK(tensor(v1v1, triv) == v1v1);

    CHECK_THROWS_WITH_AS(tensor(v1, v1v1), doctest::Contains("RankMismatch"), Error);
}

TEST_CASE("wedge2 + sym2 = tensor square") {
    auto w = direct_sum(sl2k_irrep({2, 1}), scale(sl2k_irrep({1, 0}), 2));
    CHECK(direct_sum(wedge2(w), sym2(w)) == tensor(w, w));
}

TEST_CASE("decompose_sl2k") {
    SUBCASE("Clebsch-Gordan smallest case: V1 tensor V1 = V2 + V0") {
        auto t = tensor(sl2k_irrep({1}), sl2k_irrep({1}));
        auto dec = decompose_sl2k(t);
        REQUIRE(dec.size() == 2);
        CHECK(dec[0] == std::pair<std::vector<int>, long long>({0}, 1));
        CHECK(dec[1] == std::pair<std::vector<int>, long long>({2}, 1));
    }
    SUBCASE("wedge2((V1 x V1)^2) per the Neron-Severi computation") {
        auto h1 = scale(box(sl2k_irrep({1}), sl2k_irrep({1})), 2);
        auto w = wedge2(h1);
        CHECK(w.dim() == 28);
        auto dec = decompose_sl2k(w);
        std::map<std::vector<int>, long long> got(dec.begin(), dec.end());
        CHECK(got == std::map<std::vector<int>, long long>{
                         {{0, 0}, 1}, {{0, 2}, 3}, {{2, 0}, 3}, {{2, 2}, 1}});
        // exactly one trivial summand
        CHECK(got.at({0, 0}) == 1);
    }
    SUBCASE("re-expansion reproduces the character") {
        auto w = direct_sum(scale(sl2k_irrep({3, 1}), 2), sl2k_irrep({0, 4}));
        auto dec = decompose_sl2k(w);
        WeightMultiset re;
        re.rank = 2;
        for (const auto& [hw, m] : dec) re = direct_sum(re, scale(sl2k_irrep(hw), m));
        CHECK(re == w);
    }
    SUBCASE("rejects non-characters") {
        WeightMultiset bad;
        bad.rank = 1;
        bad.add({1}, 1); // not negation-symmetric
        CHECK_THROWS_WITH_AS(decompose_sl2k(bad), doctest::Contains("NotACharacter"), Error);
        WeightMultiset bad2;
        bad2.rank = 1;
        bad2.add({2}, 1);
        bad2.add({-2}, 1); // missing the 0 string element
        CHECK_THROWS_WITH_AS(decompose_sl2k(bad2), doctest::Contains("NotACharacter"), Error);
    }
}
