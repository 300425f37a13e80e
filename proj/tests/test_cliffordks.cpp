#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmks/cliffordks.hpp"
#include "testutil.hpp"

using namespace rmks;
using namespace rmks::cliffordks;
using numfield::NumberField;
using quadform::make_qform;
using rmhodge::make_period;
using testutil::diag_qmat;

namespace {

AlgebraPtr algebra_over_Q(const std::vector<long>& diag) {
    auto Q = NumberField::rationals();
    return CliffordAlgebra::over_field(make_qform(diag_qmat(diag)), Q, 0);
}

CliffordElement random_element(const AlgebraPtr& alg, std::mt19937_64& rng, int terms = 4) {
    std::uniform_int_distribution<uint32_t> mask(0, static_cast<uint32_t>(alg->dim() - 1));
    CliffordElement out = alg->zero();
    for (int i = 0; i < terms; ++i)
        out = out + alg->monomial(mask(rng),
                                  alg->field()->from_rational(testutil::random_rational(rng, 5, 2)));
    return out;
}

} // namespace

TEST_CASE("generator relations and small products") {
    auto alg = algebra_over_Q({1, -1});
    CHECK(alg->dim() == 4);
    CHECK(alg->even_dim() == 2);
    auto e1 = alg->generator(0), e2 = alg->generator(1);
    CHECK(e1 * e1 == alg->one());
    CHECK(e2 * e2 == -alg->one());
    CHECK(e1 * e2 + e2 * e1 == alg->zero());
    // e12 * e12 = +1
    auto e12 = e1 * e2;
    CHECK(e12 * e12 == alg->one());
    // 1 * v = v
    std::mt19937_64 rng(1);
    auto v = random_element(alg, rng);
    CHECK(alg->one() * v == v);
}

TEST_CASE("non-diagonal Gram matrices follow e_i e_j + e_j e_i = 2 g_ij") {
    auto Q = NumberField::rationals();
    auto alg = CliffordAlgebra::over_field(make_qform(testutil::qmat({{0, 2}, {2, 0}})), Q, 0);
    auto e1 = alg->generator(0), e2 = alg->generator(1);
    CHECK(e1 * e1 == alg->zero());
    CHECK(e1 * e2 + e2 * e1 == alg->scalar(Q->from_rational(QQ(4))));
}

TEST_CASE("associativity and distributivity on random triples") {
    std::mt19937_64 rng(5);
    auto F = NumberField::quadratic(QQ(2));
    Mat<numfield::FieldElement> g(3, 3, F->zero());
    g.at(0, 0) = F->one();
    g.at(1, 1) = -F->one();
    g.at(2, 2) = F->element({QQ(1), QQ(-1)});
    g.at(0, 1) = g.at(1, 0) = F->gen();
    auto alg = CliffordAlgebra::create(g, {F, 1});
    for (int i = 0; i < 10; ++i) {
        auto a = random_element(alg, rng), b = random_element(alg, rng),
             c = random_element(alg, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("reversal is an anti-automorphism fixing generators") {
    std::mt19937_64 rng(11);
    auto alg = algebra_over_Q({1, -1, -1, 2});
    for (int i = 0; i < alg->generators(); ++i)
        CHECK(reversal(alg->generator(i)) == alg->generator(i));
    for (int i = 0; i < 10; ++i) {
        auto a = random_element(alg, rng), b = random_element(alg, rng);
        CHECK(reversal(a * b) == reversal(b) * reversal(a));
        CHECK(reversal(reversal(a)) == a);
    }
}

TEST_CASE("kuga_satake_J: worked example over Q(sqrt2)") {
    auto K = NumberField::quadratic(QQ(2));
    auto psi = make_qform(diag_qmat({1, -1, -1}));
    std::vector<numfield::FieldElement> x{K->one(), K->gen(), K->zero()};
    std::vector<numfield::FieldElement> y{K->zero(), K->zero(), K->one()};
    auto P = make_period(K, 1, x, y, psi);
    auto ks = make_ks(psi, P);
    // J = e13 + sqrt2 e23 (masks 0b101 and 0b110)
    CHECK(ks.J.coeffs().size() == 2);
    CHECK(ks.J.coeffs().at(0b101) == K->one());
    CHECK(ks.J.coeffs().at(0b110) == K->gen());
    CHECK(ks.J * ks.J == -ks.alg->one());
    // (e13 + sqrt2 e23)^2 = -1 recomputed directly
    auto z = ks.alg->monomial(0b101, K->one()) + ks.alg->monomial(0b110, K->gen());
    CHECK(z * z == -ks.alg->one());
    // equal +i / -i multiplicities on C+ (trace of L_J vanishes)
    CHECK(trace_even(ks.J).is_zero());
}

TEST_CASE("kuga_satake_J: orthonormal negative plane and scale invariance") {
    auto Q = NumberField::rationals();
    auto psi = make_qform(diag_qmat({1, 1, -1, -1}));
    auto e = [&](int i) {
        std::vector<numfield::FieldElement> v(4, Q->zero());
        v[i] = Q->one();
        return v;
    };
    auto P = make_period(Q, 0, e(2), e(3), psi);
    auto ks = make_ks(psi, P);
    CHECK(ks.J == ks.alg->monomial(0b1100, Q->one()));
    CHECK(ks.J * ks.J == -ks.alg->one());
    CHECK(trace_even(ks.J).is_zero());

    // scaling the period leaves J unchanged
    auto scale = [&](std::vector<numfield::FieldElement> v) {
        for (auto& t : v) t = t.scaled(QQ(-3));
        return v;
    };
    auto P2 = make_period(Q, 0, scale(e(2)), scale(e(3)), psi);
    CHECK(kuga_satake_J(ks.alg, P2) == ks.J);

    // invalid periods are rejected
    CHECK_THROWS_WITH_AS(kuga_satake_J(ks.alg, make_period(Q, 0, e(2), e(3),
                                                           make_qform(diag_qmat({1, 1, -1, -2})))),
                         doctest::Contains("InvalidPeriod"), Error);
}

TEST_CASE("weight_one_action") {
    auto Q = NumberField::rationals();
    auto psi = make_qform(diag_qmat({1, 1, -1, -1}));
    auto e = [&](int i) {
        std::vector<numfield::FieldElement> v(4, Q->zero());
        v[i] = Q->one();
        return v;
    };
    auto ks = make_ks(psi, make_period(Q, 0, e(2), e(3), psi));
    size_t n = ks.alg->even_dim();
    auto id = Mat<numfield::FieldElement>::identity(n, Q->one(), Q->zero());
    // left multiplication by J squares to minus the identity on C+
    auto MJ = left_multiplication_even(ks.J);
    CHECK(MJ * MJ == id.scaled(Q->from_rational(QQ(-1))));
    CHECK(weight_one_action(ks, QQ(1), QQ(0)) == id);
    CHECK(weight_one_action(ks, QQ(0), QQ(1)) == left_multiplication_even(ks.J));
    // z * conj(z) = 1 on the rational circle
    QQ a = make_rational(ZZ(3), ZZ(5)), b = make_rational(ZZ(4), ZZ(5));
    CHECK(weight_one_action(ks, a, b) * weight_one_action(ks, a, -b) == id);
    // multiplicativity: z^2 = (a^2 - b^2) + 2ab i
    CHECK(weight_one_action(ks, a, b) * weight_one_action(ks, a, b) ==
          weight_one_action(ks, a * a - b * b, 2 * a * b));
    CHECK_THROWS_WITH_AS(weight_one_action(ks, QQ(1), QQ(1)), doctest::Contains("NotOnCircle"),
                         Error);
}

TEST_CASE("riemann_form on the 8-dimensional even algebra") {
    auto Q = NumberField::rationals();
    auto psi = make_qform(diag_qmat({1, 1, -1, -1}));
    auto e = [&](int i) {
        std::vector<numfield::FieldElement> v(4, Q->zero());
        v[i] = Q->one();
        return v;
    };
    auto ks = make_ks(psi, make_period(Q, 0, e(2), e(3), psi));
    // orthogonal pair of negative vectors away from the period plane
    std::vector<QQ> s1{QQ(1), QQ(0), QQ(2), QQ(0)}, s2{QQ(0), QQ(1), QQ(0), QQ(2)};
    auto rf = riemann_form(ks, s1, s2);
    const auto& E = rf.gram;
    REQUIRE(E.rows() == 8);
    // alternating
    for (size_t i = 0; i < 8; ++i) {
        CHECK(E.at(i, i).is_zero());
        for (size_t j = 0; j < 8; ++j) CHECK(E.at(i, j) == -E.at(j, i));
    }
    // J-invariance entrywise on the basis
    auto MJ = left_multiplication_even(ks.J);
    CHECK(MJ.transpose() * E * MJ == E);
    // E(., J.) positive definite
    auto sym = quadform::make_kform(E * MJ, ks.alg->embedding());
    CHECK(quadform::signature(sym) == quadform::Signature{8, 0});
    // requesting the passing sign succeeds, the flipped request falls back
    auto rf2 = riemann_form(ks, s1, s2, rf.sign);
    CHECK(rf2.sign == rf.sign);

    // the diagonalization-derived default seeds also validate
    auto seeds = default_riemann_seeds(psi);
    CHECK_NOTHROW(riemann_form(ks, seeds.first, seeds.second));

    // bad seeds: positive norm or non-orthogonal pairs are rejected
    CHECK_THROWS_WITH_AS(riemann_form(ks, std::vector<QQ>{QQ(1), QQ(0), QQ(0), QQ(0)}, s2),
                         doctest::Contains("BadSeed"), Error);
    CHECK_THROWS_WITH_AS(riemann_form(ks, s1, std::vector<QQ>{QQ(0), QQ(0), QQ(1), QQ(1)}),
                         doctest::Contains("BadSeed"), Error);
}

TEST_CASE("riemann_form over a genuine field extension") {
    auto K = NumberField::quadratic(QQ(2));
    auto psi = make_qform(diag_qmat({1, 1, -1, -1, 1}));
    std::vector<numfield::FieldElement> x{K->zero(), K->zero(), K->one(), K->gen(),
                                          K->zero()};
    // psi(x,x) = -1... need psi(x,x)=psi(y,y), psi(x,y)=0: x = e3 + sqrt2 e4? then
    // psi(x,x) = -1 - 2 = -3; pick y = sqrt3?? keep it simple: x = e3, y = e4.
    std::vector<numfield::FieldElement> x2{K->zero(), K->zero(), K->one(), K->zero(),
                                           K->zero()};
    std::vector<numfield::FieldElement> y2{K->zero(), K->zero(), K->zero(), K->one(),
                                           K->zero()};
    auto P = make_period(K, 1, x2, y2, psi);
    auto ks = make_ks(psi, P);
    CHECK(ks.alg->even_dim() == 16);
    std::vector<QQ> s1{QQ(0), QQ(0), QQ(1), QQ(0), QQ(0)};
    std::vector<QQ> s2{QQ(0), QQ(0), QQ(0), QQ(1), QQ(0)};
    auto rf = riemann_form(ks, s1, s2);
    CHECK(quadform::signature(quadform::make_kform(rf.gram * left_multiplication_even(ks.J),
                                                   ks.alg->embedding())) ==
          quadform::Signature{16, 0});
}

TEST_CASE("dimension bookkeeping and caps") {
    for (int d = 2; d <= 6; ++d) {
        std::vector<long> diag(d, 1);
        auto alg = algebra_over_Q(diag);
        CHECK(alg->dim() == (size_t(1) << d));
        CHECK(alg->even_dim() == (size_t(1) << (d - 1)));
        CHECK(alg->even_basis().size() == alg->even_dim());
    }
    CHECK_THROWS_WITH_AS(algebra_over_Q(std::vector<long>(13, 1)),
                         doctest::Contains("TooLarge"), Error);
}

TEST_CASE("algebra mismatch is rejected") {
    auto a1 = algebra_over_Q({1, -1});
    auto a2 = algebra_over_Q({1, 1});
    CHECK_THROWS_WITH_AS(a1->one() * a2->one(), doctest::Contains("AlgebraMismatch"), Error);
    // structurally equal algebras interoperate
    auto a3 = algebra_over_Q({1, -1});
    CHECK(a1->generator(0) * a3->generator(1) == a1->generator(0) * a1->generator(1));
}
