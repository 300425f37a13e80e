// Acceptance suite: one criterion per function, one PASS/FAIL line each,
// nonzero exit when anything fails. All checks are exact; the stated runtime
// budgets are part of the pass condition.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "rmks/cores.hpp"
#include "rmks/serialize.hpp"
#include "testutil.hpp"

using namespace rmks;
using numfield::Embedding;
using numfield::FieldElement;
using numfield::FieldPtr;
using numfield::NumberField;
using quadform::Signature;
using testutil::diag_qmat;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Failure(msg);
}

// ---------------------------------------------------------------------------
// shared sample of randomized RM structures
// ---------------------------------------------------------------------------

struct Sample {
    rmhodge::RMStructure S;
    int eps;
};

std::vector<Sample> build_sample(int at_least) {
    std::mt19937_64 rng(20240819);
    std::vector<FieldPtr> fields{NumberField::quadratic(QQ(2)), NumberField::quadratic(QQ(5)),
                                 testutil::cyclic_cubic()};
    std::vector<Sample> out;
    int per_cell = (at_least + 5) / 6 + 1;
    for (const auto& F : fields) {
        int n_emb = static_cast<int>(numfield::real_embeddings(F).size());
        for (int m : {3, 4}) {
            for (int t = 0; t < per_cell; ++t) {
                int eps = static_cast<int>(rng() % n_emb);
                std::vector<FieldElement> a;
                for (int k = 0; k < m; ++k) {
                    std::vector<int> signs(n_emb, 1);
                    if (k < 2) signs[eps] = -1;
                    a.push_back(testutil::random_with_signs(F, signs, rng));
                }
                out.push_back({rmhodge::construct_rm_structure(F, m, a, {F, eps}), eps});
            }
        }
    }
    return out;
}

const std::vector<Sample>& sample() {
    static std::vector<Sample> s = build_sample(50);
    return s;
}

// ---------------------------------------------------------------------------
// criteria
// ---------------------------------------------------------------------------

void criterion_1() {
    require(sample().size() >= 50, "need at least 50 structures");
    for (const auto& [S, eps] : sample()) {
        auto rec = rmhodge::recover_F_bilinear(S);
        require(rmhodge::trace_form(rec.phi).gram == S.psi.gram,
                "trace_form(recover_F_bilinear(S)) != psi");
    }
}

void criterion_2() {
    std::mt19937_64 rng(7);
    for (const auto& [S, eps] : sample()) {
        auto rec = rmhodge::recover_F_bilinear(S);
        std::vector<FieldElement> pw;
        FieldElement p = S.F->one();
        for (int i = 0; i < S.n(); ++i) {
            pw.push_back(p);
            p = p * S.F->gen();
        }
        QQ dF = numfield::trace_gram_det(S.F, pw);
        QQ expect = numfield::norm(det(rec.phi.gram));
        for (int i = 0; i < S.m; ++i) expect *= dF;
        require(quadform::det_square_class(S.psi) == numfield::square_class(expect),
                "det(psi) != D_F^m N(det Phi) as square classes");

        auto a = testutil::random_nonzero(S.F, rng);
        auto tw = rmhodge::twist_polarization(S, a);
        QQ expect2 = quadform::det_gram(S.psi);
        for (int i = 0; i < S.m; ++i) expect2 *= numfield::norm(a);
        require(quadform::det_square_class(tw.form) == numfield::square_class(expect2),
                "det(psi_a) != N(a)^m det(psi) as square classes");
    }
}

void criterion_3() {
    std::mt19937_64 rng(11);
    std::vector<FieldPtr> fields{NumberField::quadratic(QQ(2)), NumberField::quadratic(QQ(5)),
                                 testutil::cyclic_cubic()};
    for (const auto& F : fields) {
        int n_emb = static_cast<int>(numfield::real_embeddings(F).size());
        std::vector<FieldElement> a;
        for (int k = 0; k < 3; ++k) {
            std::vector<int> signs(n_emb, 1);
            if (k < 2) signs[n_emb - 1] = -1;
            a.push_back(testutil::random_with_signs(F, signs, rng));
        }
        auto S = rmhodge::construct_rm_structure(F, 3, a, {F, n_emb - 1});
        auto P = rmhodge::construct_period(S, {F, n_emb - 1});
        int positives = 0, negatives = 0, total = 0;
        while (positives < 10 || negatives < 10) {
            FieldElement c = total % 2 == 0 ? [&] {
                auto b = testutil::random_nonzero(F, rng);
                return b * b; // totally positive by construction
            }()
                                            : testutil::random_nonzero(F, rng);
            ++total;
            bool tp = numfield::is_totally_positive(c);
            (tp ? positives : negatives)++;
            auto tw = rmhodge::twist_polarization(S, c);
            require(rmhodge::is_polarization(tw.form, S, P) == tp,
                    "is_polarization(psi_a) != is_totally_positive(a)");
            require(tw.polarization == tp, "twist flag disagrees with total positivity");
        }
        require(total >= 20, "sample too small");
    }
}

void criterion_4() {
    for (long d : {2L, 3L, 5L, 7L, 10L}) {
        auto F = NumberField::quadratic(QQ(d));
        auto c = F->element({QQ(0), QQ(-1)}); // -sqrt(d): negative only at the + root
        auto S = rmhodge::construct_rm_structure(F, 3, {c, c, F->one()}, {F, 1});
        auto a = F->element({QQ(d), QQ(1)}); // d + sqrt(d)
        require(numfield::is_totally_positive(a), "d + sqrt(d) must be totally positive");
        require(numfield::norm(a) == QQ(d * d - d), "N(d + sqrt d) != d(d-1)");
        auto tw = rmhodge::twist_polarization(S, a);
        bool nonsquare = numfield::square_class(QQ(d) * QQ(d - 1)) != 1;
        bool classes_differ =
            quadform::det_square_class(tw.form) != quadform::det_square_class(S.psi);
        require(nonsquare, "d(d-1) unexpectedly a square");
        require(classes_differ == nonsquare, "determinant obstruction mismatch");
    }
}

void criterion_5() {
    for (long d : {5L, 13L}) {
        auto S = rmhodge::build_double_cover_example(d);
        Mat<QQ> a = S.rho[1];
        require(a * a == Mat<QQ>::identity(6, QQ(1), QQ(0)).scaled(QQ(d)),
                "a^2 != d I");
        require(a.transpose() * S.psi.gram == S.psi.gram * a, "a not self-adjoint");
        auto s0 = rmhodge::eigenspace_signature(S, {S.F, 0});
        auto s1 = rmhodge::eigenspace_signature(S, {S.F, 1});
        require((s0 == Signature{1, 2} && s1 == Signature{3, 0}) ||
                    (s0 == Signature{3, 0} && s1 == Signature{1, 2}),
                "eigenspace signatures are not (3,0) and (1,2)");
        // rational form vs <1>^2 + <-1>^4: the polarization negates the cup
        // product, so signatures match after negation; det classes directly.
        auto reference = quadform::make_qform(diag_qmat({1, 1, -1, -1, -1, -1}));
        require(quadform::signature(S.psi) ==
                    quadform::signature(quadform::negate(reference)),
                "signature does not match the negated reference form");
        require(quadform::det_square_class(S.psi) == quadform::det_square_class(reference),
                "determinant class does not match the reference form");
    }
}

void criterion_6() {
    for (const auto& [S, eps] : sample()) {
        auto P = rmhodge::construct_period(S, {S.F, eps}); // valid period exists
        require(numfield::sign_at(P.s, P.emb) == -1, "period norm not negative");
        auto embs = numfield::real_embeddings(S.F);
        int special = 0, definite = 0;
        for (const auto& emb : embs) {
            auto s = rmhodge::eigenspace_signature(S, emb);
            if (s == Signature{S.m - 2, 2}) ++special;
            else if (s == Signature{S.m, 0}) ++definite;
        }
        require(special == 1, "need exactly one (m-2,2) embedding");
        require(definite == static_cast<int>(embs.size()) - 1,
                "remaining embeddings must be definite");
    }
}

void criterion_7() {
    std::vector<rmhodge::PeriodData> periods;
    std::vector<quadform::QBilinearForm> forms;
    auto add = [&](const rmhodge::RMStructure& S, int eps) {
        periods.push_back(rmhodge::construct_period(S, {S.F, eps}));
        forms.push_back(S.psi);
    };
    auto Q = NumberField::rationals();
    auto qs = [&](long x) { return Q->from_rational(QQ(x)); };
    // d = 3
    add(rmhodge::construct_rm_structure(Q, 3, {qs(-1), qs(-1), qs(1)}, {Q, 0}), 0);
    add(rmhodge::construct_rm_structure(Q, 3, {qs(-1), qs(-2), qs(1)}, {Q, 0}), 0); // layer
    {
        auto K = NumberField::quadratic(QQ(2));
        auto psi = quadform::make_qform(diag_qmat({1, -1, -1}));
        std::vector<FieldElement> x{K->one(), K->gen(), K->zero()};
        std::vector<FieldElement> y{K->zero(), K->zero(), K->one()};
        periods.push_back(rmhodge::make_period(K, 1, x, y, psi));
        forms.push_back(psi);
    }
    // d = 4
    add(rmhodge::construct_rm_structure(Q, 4, {qs(-1), qs(-1), qs(1), qs(2)}, {Q, 0}), 0);
    add(rmhodge::construct_rm_structure(Q, 4, {qs(-2), qs(-3), qs(1), qs(1)}, {Q, 0}), 0);
    {
        auto psi = quadform::make_qform(diag_qmat({1, 1, -1, -1}));
        std::vector<FieldElement> x(4, Q->zero()), y(4, Q->zero());
        x[2] = Q->one();
        y[3] = Q->one();
        periods.push_back(rmhodge::make_period(Q, 0, x, y, psi));
        forms.push_back(psi);
    }
    // d = 6
    {
        auto F = NumberField::quadratic(QQ(2));
        auto a1 = F->element({QQ(1), QQ(-1)});
        add(rmhodge::construct_rm_structure(F, 3, {a1, a1, F->one()}, {F, 1}), 1);
        auto F5 = NumberField::quadratic(QQ(5));
        auto c5 = F5->element({QQ(0), QQ(-1)});
        add(rmhodge::construct_rm_structure(F5, 3, {c5, c5, F5->one()}, {F5, 1}), 1);
    }
    {
        auto S5 = rmhodge::build_double_cover_example(5);
        add(S5, 0);
        auto S13 = rmhodge::build_double_cover_example(13);
        add(S13, 0);
    }
    require(periods.size() >= 10, "need at least 10 periods");
    for (size_t i = 0; i < periods.size(); ++i) {
        const auto& P = periods[i];
        const auto& psi = forms[i];
        auto ks = cliffordks::make_ks(psi, P);
        require(ks.J * ks.J == -ks.alg->one(), "J^2 != -1");
        require(ks.alg->even_dim() == (size_t(1) << (psi.rank() - 1)),
                "dim C+ != 2^{d-1}");
        auto [e1, e2] = cliffordks::default_riemann_seeds(psi);
        auto rf = cliffordks::riemann_form(ks, e1, e2); // throws unless verified
        require(rf.sign == 1 || rf.sign == -1, "no valid sign");
    }
}

void criterion_8() {
    for (int m = 2; m <= 6; ++m)
        for (int n = 1; n * m <= 12; ++n) {
            auto lhs =
                spinbranch::restrict_to_product(spinbranch::spin_weights(n * m), m, n);
            spinbranch::WeightMultiset prod = spinbranch::spin_weights(m);
            for (int i = 1; i < n; ++i)
                prod = spinbranch::box(prod, spinbranch::spin_weights(m));
            long long copies = m % 2 == 1 ? (1LL << (n / 2)) : 1;
            require(lhs == spinbranch::scale(prod, copies),
                    "branching multiset identity fails for m=" + std::to_string(m) +
                        " n=" + std::to_string(n));
            require(spinbranch::spin_weights(n * m).dim() == copies * prod.dim(),
                    "dimension bookkeeping fails");
        }
    // the named instances
    require(spinbranch::restrict_to_product(spinbranch::spin_weights(6), 3, 2).dim() == 8,
            "S(6) restriction dimension");
    require(spinbranch::restrict_to_product(spinbranch::spin_weights(9), 3, 3).dim() == 16,
            "S(9) restriction dimension");
}

void criterion_9() {
    auto v1v1 = spinbranch::box(spinbranch::sl2k_irrep({1}), spinbranch::sl2k_irrep({1}));
    auto h1 = spinbranch::scale(v1v1, 2);
    auto w = spinbranch::wedge2(h1);
    require(w.dim() == 28, "wedge2 dimension != 28");
    auto dec = spinbranch::decompose_sl2k(w);
    std::map<std::vector<int>, long long> got(dec.begin(), dec.end());
    std::map<std::vector<int>, long long> expect{
        {{0, 0}, 1}, {{0, 2}, 3}, {{2, 0}, 3}, {{2, 2}, 1}};
    require(got == expect, "decomposition differs from 3(V2xV0)+3(V0xV2)+(V0xV0)+(V2xV2)");
    require(got.at({0, 0}) == 1, "trivial representation multiplicity != 1");
}

void criterion_10() {
    auto F = NumberField::quadratic(QQ(2));
    auto a1 = F->element({QQ(1), QQ(-1)});
    auto S = rmhodge::construct_rm_structure(F, 3, {a1, a1, F->one()}, {F, 1});
    // embed_cores_in_clifford verifies rationality of the image, the unit,
    // multiplicativity on all 256 basis pairs and injectivity, and throws on
    // any failure
    auto emb = cores::embed_cores_in_clifford(S);
    require(emb.cores.Z.r == 4, "dim_F C+_F(Phi) != 4");
    require(emb.cores.dim == 16, "cores dimension != 16");
    require(emb.clifford_F->even_dim() == 32, "C+(psi) dimension != 32");
    require(rank(emb.map) == 16, "embedding matrix rank != 16");
}

// minor-gcd invariant factors: the classic characterization, independent of
// the elimination path used by smith_normal_form
std::vector<ZZ> minor_gcd_oracle(const Mat<ZZ>& M) {
    size_t r = M.rows(), c = M.cols();
    std::vector<ZZ> g{ZZ(1)};
    for (size_t k = 1; k <= std::min(r, c); ++k) {
        ZZ gk(0);
        std::vector<size_t> ri(k), ci(k);
        std::function<void(size_t, size_t)> rows = [&](size_t pos, size_t start) {
            if (pos == k) {
                std::function<void(size_t, size_t)> cols = [&](size_t cpos, size_t cstart) {
                    if (cpos == k) {
                        Mat<QQ> sub(k, k, QQ(0));
                        for (size_t i = 0; i < k; ++i)
                            for (size_t j = 0; j < k; ++j)
                                sub.at(i, j) = QQ(M.at(ri[i], ci[j]));
                        ZZ dz = det(sub).get_num();
                        mpz_gcd(gk.get_mpz_t(), gk.get_mpz_t(), dz.get_mpz_t());
                        return;
                    }
                    for (size_t j = cstart; j < c; ++j) {
                        ci[cpos] = j;
                        cols(cpos + 1, j + 1);
                    }
                };
                cols(0, 0);
                return;
            }
            for (size_t i = start; i < r; ++i) {
                ri[pos] = i;
                rows(pos + 1, i + 1);
            }
        };
        rows(0, 0);
        if (gk == 0) break;
        g.push_back(gk);
    }
    std::vector<ZZ> inv;
    for (size_t k = 1; k < g.size(); ++k) inv.push_back(g[k] / g[k - 1]);
    return inv;
}

void criterion_11() {
    auto k3 = zlattice::fixture("LambdaK3");
    require(k3.is_even(), "LambdaK3 not even");
    require(zlattice::discriminant_group_order(k3) == 1, "LambdaK3 not unimodular");
    require(quadform::signature(quadform::make_qform(quadform::fixture_gram("LambdaK3"))) ==
                Signature{3, 19},
            "LambdaK3 signature != (3,19)");

    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        Mat<ZZ> m(4, 4, ZZ(0));
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) m.at(i, j) = entry(rng);
        auto s = zlattice::smith_normal_form(m);
        require(s.U * m * s.V == s.D, "U M V != D");
        require(zlattice::invariant_factors(m) == minor_gcd_oracle(m),
                "invariant factors differ from the minor-gcd oracle");
    }

    Mat<ZZ> B(2, 2, ZZ(0));
    B.at(0, 0) = 1;
    B.at(1, 1) = 2;
    require(!zlattice::is_primitive_embedding(B, zlattice::fixture("U"),
                                              zlattice::fixture("U2")),
            "U(2) inside U must be flagged non-primitive");
}

void criterion_12() {
    auto Q = NumberField::rationals();
    {
        auto S = rmhodge::make_structure(Q, 4, {Mat<QQ>::identity(4, QQ(1), QQ(0))},
                                         quadform::make_qform(diag_qmat({1, -1, -1, 1})));
        std::vector<FieldElement> x(4, Q->zero()), y(4, Q->zero());
        x[1] = Q->one();
        y[2] = Q->one();
        auto P = rmhodge::make_period(Q, 0, x, y, S.psi);
        auto r = rmhodge::simplicity_check(S, P);
        require(!r.simple, "crafted reducible period reported simple");
        require(r.kernel.rows() == 2, "kernel rank != 2");
    }
    {
        auto K = NumberField::quadratic(QQ(2));
        auto S = rmhodge::make_structure(Q, 3, {Mat<QQ>::identity(3, QQ(1), QQ(0))},
                                         quadform::make_qform(diag_qmat({1, -1, -1})));
        std::vector<FieldElement> x{K->one(), K->gen(), K->zero()};
        std::vector<FieldElement> y{K->zero(), K->zero(), K->one()};
        auto P = rmhodge::make_period(K, 1, x, y, S.psi);
        require(rmhodge::simplicity_check(S, P).simple,
                "crafted simple period reported reducible");
    }
}

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<void()> run;
};

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "Lemma 2.5 round-trip on 50 randomized structures", 10, criterion_1},
        {2, "Lemma 4.5 determinant identities", 10, criterion_2},
        {3, "Lemma 4.2 equivalence, both directions", 60, criterion_3},
        {4, "twist obstruction for a = d + sqrt(d)", 30, criterion_4},
        {5, "double cover example (d = 5, 13)", 1, criterion_5},
        {6, "eigenspace signatures per Zarhin's theorem", 60, criterion_6},
        {7, "Kuga-Satake J and Riemann forms across d = 3, 4, 6", 60, criterion_7},
        {8, "spin branching identity for all nm <= 12", 5, criterion_8},
        {9, "Neron-Severi weight decomposition", 5, criterion_9},
        {10, "corestriction embedding at n = 2", 30, criterion_10},
        {11, "lattice suite (fixture, SNF oracle, primitivity)", 60, criterion_11},
        {12, "simplicity check on crafted periods", 5, criterion_12},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string message;
        bool pass = true;
        try {
            c.run();
        } catch (const std::exception& e) {
            pass = false;
            message = e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (pass && elapsed > c.budget_seconds) {
            pass = false;
            message = "runtime budget exceeded";
        }
        std::ostringstream line;
        line << (pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  ["
             << std::fixed << std::setprecision(2) << std::setw(6) << elapsed << "s]  "
             << c.name;
        if (!pass) line << "  -- " << message;
        std::cout << line.str() << "\n";
        if (!pass) ++failures;
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
