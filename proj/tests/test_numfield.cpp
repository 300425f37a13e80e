#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmks/numfield.hpp"
#include "testutil.hpp"

using namespace rmks;
using namespace rmks::numfield;

namespace {

QPoly poly(std::vector<long> coeffs) {
    std::vector<QQ> c;
    c.reserve(coeffs.size());
    for (long x : coeffs) c.emplace_back(x);
    return QPoly(std::move(c));
}

bool contains_root_of_xx_minus(const Interval& iv, long d, bool negative_root) {
    // [lo,hi] contains -sqrt(d) iff hi <= 0 is not required, but for isolated
    // intervals the sign is determined; compare by squaring.
    if (negative_root) return sign(iv.hi) <= 0 && iv.lo * iv.lo >= d && iv.hi * iv.hi <= d;
    return sign(iv.lo) >= 0 && iv.lo * iv.lo <= d && iv.hi * iv.hi >= d;
}

} // namespace

TEST_CASE("isolate_real_roots: X^2 - 5 gives two disjoint intervals around the roots") {
    auto ivs = isolate_real_roots(poly({-5, 0, 1}));
    REQUIRE(ivs.size() == 2);
    CHECK(contains_root_of_xx_minus(ivs[0], 5, true));
    CHECK(contains_root_of_xx_minus(ivs[1], 5, false));
    CHECK(ivs[0].hi < ivs[1].lo);
    // each interval isolates exactly one root
    SturmChain sturm(poly({-5, 0, 1}));
    CHECK(sturm.count_roots(ivs[0].lo, ivs[0].hi) == 1);
    CHECK(sturm.count_roots(ivs[1].lo, ivs[1].hi) == 1);
}

TEST_CASE("isolate_real_roots: rational root becomes a point interval") {
    auto ivs = isolate_real_roots(poly({-1, 1}));
    REQUIRE(ivs.size() == 1);
    CHECK(ivs[0].is_point());
    CHECK(ivs[0].lo == 1);
}

TEST_CASE("isolate_real_roots: X^2 + 1 has no real roots") {
    CHECK(isolate_real_roots(poly({1, 0, 1})).empty());
}

TEST_CASE("isolate_real_roots: rejects non-squarefree input") {
    CHECK_THROWS_WITH_AS(isolate_real_roots(poly({1, 2, 1})), // (X+1)^2
                         doctest::Contains("NonSquarefree"), Error);
}

TEST_CASE("isolate_real_roots: bisection stability of the isolating intervals") {
    auto p = poly({-1, -3, 0, 1}); // cyclic cubic, three real roots
    auto ivs = isolate_real_roots(p);
    REQUIRE(ivs.size() == 3);
    SturmChain sturm(p);
    for (const auto& iv : ivs) {
        if (iv.is_point()) continue;
        QQ mid = (iv.lo + iv.hi) / 2;
        int left = sturm.count_roots(iv.lo, mid);
        int right = sturm.count_roots(mid, iv.hi);
        CHECK(left + right == 1);
        // refining the half that holds the root keeps the count at 1
        Interval half = left == 1 ? Interval{iv.lo, mid} : Interval{mid, iv.hi};
        QQ q = (half.lo + half.hi) / 2;
        CHECK(sturm.count_roots(half.lo, q) + sturm.count_roots(q, half.hi) == 1);
    }
}

TEST_CASE("sign_at on Q(sqrt 2)") {
    auto F = NumberField::quadratic(QQ(2));
    REQUIRE(F->real_roots().size() == 2);
    auto embs = real_embeddings(F);
    // roots sorted ascending: index 0 = -sqrt2, index 1 = +sqrt2
    FieldElement a = F->element({QQ(-1), QQ(1)}); // sqrt2 - 1
    CHECK(sign_at(a, embs[1]) == 1);
    CHECK(sign_at(-a, embs[0]) == 1); // 1 - sqrt2 at the negative root
    CHECK(sign_at(F->zero(), embs[0]) == 0);
    CHECK(sign_at(F->zero(), embs[1]) == 0);
}

TEST_CASE("is_totally_positive") {
    auto F = NumberField::quadratic(QQ(2));
    FieldElement sqrt2 = F->gen();
    CHECK(is_totally_positive(F->element({QQ(2), QQ(1)}))); // 2 + sqrt2
    CHECK_FALSE(is_totally_positive(sqrt2));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        auto b = testutil::random_nonzero(F, rng);
        CHECK(is_totally_positive(b * b));
        CHECK_FALSE(is_totally_positive(-(b * b)));
    }
}

TEST_CASE("is_totally_positive rejects non-totally-real fields") {
    auto F = NumberField::quadratic(QQ(-1));
    CHECK_THROWS_WITH_AS(is_totally_positive(F->one()),
                         doctest::Contains("NotTotallyReal"), Error);
}

TEST_CASE("trace and norm on quadratic fields") {
    auto F = NumberField::quadratic(QQ(2));
    FieldElement sqrt2 = F->gen();
    CHECK(trace(sqrt2) == 0);
    CHECK(norm(sqrt2) == -2);
    CHECK(trace(F->one()) == 2);
    CHECK(norm(F->one()) == 1);
    // multiplication matrix of sqrt2 is [[0,2],[1,0]]
    auto m = multiplication_matrix(sqrt2);
    CHECK(m.at(0, 1) == 2);
    CHECK(m.at(1, 0) == 1);
    CHECK(m.at(0, 0) == 0);

    for (long d : {2L, 3L, 5L, 7L, 10L}) {
        auto K = NumberField::quadratic(QQ(d));
        FieldElement a = K->element({QQ(d), QQ(1)}); // d + sqrt d
        CHECK(norm(a) == QQ(d * d - d));
        CHECK(is_totally_positive(a));
    }
}

TEST_CASE("trace is additive, norm is multiplicative, norm sign matches embeddings") {
    std::mt19937_64 rng(11);
    for (const auto& F : {NumberField::quadratic(QQ(5)), testutil::cyclic_cubic()}) {
        auto embs = real_embeddings(F);
        for (int i = 0; i < 25; ++i) {
            auto a = testutil::random_element(F, rng);
            auto b = testutil::random_element(F, rng);
            CHECK(trace(a + b) == trace(a) + trace(b));
            CHECK(norm(a * b) == norm(a) * norm(b));
            if (!a.is_zero()) {
                int prod = 1;
                for (const auto& emb : embs) prod *= sign_at(a, emb);
                CHECK(sign(norm(a)) == prod);
            }
        }
    }
}

TEST_CASE("field_discriminant on power bases") {
    auto F5 = NumberField::quadratic(QQ(5));
    std::vector<FieldElement> basis5{F5->one(), F5->gen()};
    CHECK(trace_gram_det(F5, basis5) == 20);
    CHECK(field_discriminant(F5, basis5) == 5);

    auto F2 = NumberField::quadratic(QQ(2));
    std::vector<FieldElement> basis2{F2->one(), F2->gen()};
    CHECK(trace_gram_det(F2, basis2) == 8);
    CHECK(field_discriminant(F2, basis2) == 2);

    auto Q = NumberField::rationals();
    CHECK(field_discriminant(Q, {Q->one()}) == 1);

    std::vector<FieldElement> bad{F2->one(), F2->one().scaled(QQ(3))};
    CHECK_THROWS_WITH_AS(field_discriminant(F2, bad), doctest::Contains("SingularBasis"),
                         Error);
}

TEST_CASE("square_class basics") {
    CHECK(square_class(QQ(20)) == 5);
    CHECK(square_class(make_rational(ZZ(-8), ZZ(9))) == -2);
    CHECK(square_class(QQ(1)) == 1);
    CHECK(square_class(QQ(-1)) == -1);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        QQ a = testutil::random_rational(rng, 50, 20);
        QQ b = testutil::random_rational(rng, 50, 20);
        if (a == 0 || b == 0) continue;
        ZZ ca = square_class(a), cb = square_class(b), cab = square_class(a * b);
        CHECK(square_class(QQ(ca) * QQ(cb)) == cab);
    }
    CHECK_THROWS_AS(square_class(QQ(0)), Error);
}

TEST_CASE("square_class reports the partial cofactor at the factorization limit") {
    // 1000003 and 1000033 are primes above a tiny trial bound
    SquareClassConfig cfg{ZZ(100)};
    ZZ big = ZZ(1000003) * ZZ(1000033);
    CHECK_THROWS_WITH_AS(square_class(QQ(big), cfg), doctest::Contains("FactorizationLimit"),
                         Error);
    // a prime cofactor below bound^2 is recognized without factorizing
    CHECK(square_class(QQ(1009), cfg) == 1009);
}

TEST_CASE("field element arithmetic is a field") {
    std::mt19937_64 rng(23);
    auto F = testutil::cyclic_cubic();
    for (int i = 0; i < 20; ++i) {
        auto a = testutil::random_nonzero(F, rng);
        auto b = testutil::random_nonzero(F, rng);
        CHECK(a * b == b * a);
        CHECK((a / b) * b == a);
        CHECK(a * a.inverse() == F->one());
        CHECK(pow_elem(a, 3) == a * a * a);
    }
}

TEST_CASE("minimal polynomial validation") {
    CHECK_THROWS_WITH_AS(NumberField::create(poly({1, 2, 1})),
                         doctest::Contains("NonSquarefree"), Error);
    CHECK_THROWS_WITH_AS(NumberField::quadratic(QQ(4)), doctest::Contains("Reducible"),
                         Error);
    CHECK_THROWS_WITH_AS(NumberField::create(poly({-1, 1, -1, 1})), // (X-1)(X^2+1)
                         doctest::Contains("Reducible"), Error);
    // degree 4 needs attestation even when no rational root exists
    CHECK_THROWS_WITH_AS(NumberField::create(poly({2, 0, 0, 0, 1})),
                         doctest::Contains("IrreducibilityUnverified"), Error);
    CHECK(NumberField::create(poly({2, 0, 0, 0, 1}), true)->base_degree() == 4);
    // non-monic
    CHECK_THROWS_WITH_AS(NumberField::create(QPoly({QQ(1), QQ(2)})),
                         doctest::Contains("BadPolynomial"), Error);
}

TEST_CASE("quadratic layer: arithmetic and signs") {
    auto F = NumberField::quadratic(QQ(2));
    // K = Q(sqrt2)(sqrt(sqrt2)) at the positive root of X^2-2
    auto K = NumberField::with_sqrt(F, F->gen(), 1);
    Embedding emb{K, 1};
    auto s = K->sqrt_gen(); // sqrt(sqrt2)
    CHECK(s * s == lift_to(F->gen(), K));
    CHECK(sign_at(s, emb) == 1);
    CHECK(sign_at(-s, emb) == -1);
    // 1 - sqrt(sqrt2) < 0 since sqrt2 > 1
    CHECK(sign_at(K->one() - s, emb) == -1);
    // 3/2 - sqrt(sqrt2) > 0 since sqrt2 < 9/4
    CHECK(sign_at(K->from_rational(make_rational(ZZ(3), ZZ(2))) - s, emb) == 1);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
        auto a = testutil::random_nonzero(K, rng);
        CHECK(a * a.inverse() == K->one());
        auto b = testutil::random_nonzero(K, rng);
        CHECK((a + b) * (a - b) == a * a - b * b);
        CHECK(sign_at(a * a, emb) == 1);
    }
    // the layer refuses a radicand that is negative at the embedding
    CHECK_THROWS_WITH_AS(NumberField::with_sqrt(F, -F->one(), 1),
                         doctest::Contains("BadEmbedding"), Error);
}

TEST_CASE("galois conjugation on quadratic fields") {
    auto F = NumberField::quadratic(QQ(5));
    auto a = F->element({QQ(3), QQ(2)}); // 3 + 2 sqrt5
    auto ca = galois_conjugate(a);
    CHECK(a + ca == F->from_rational(trace(a)));
    CHECK(a * ca == F->from_rational(norm(a)));
    CHECK_THROWS_WITH_AS(galois_conjugate(testutil::cyclic_cubic()->gen()),
                         doctest::Contains("NotQuadratic"), Error);
}
