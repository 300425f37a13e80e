#include "rmks/rmhodge.hpp"

#include <algorithm>

namespace rmks {
namespace rmhodge {

using numfield::is_totally_positive;
using numfield::lift_matrix;
using numfield::lift_to;
using numfield::NumberField;
using numfield::pow_elem;
using numfield::real_embeddings;
using numfield::sign_at;
using quadform::diagonalize;
using quadform::make_kform;
using quadform::make_qform;

Mat<QQ> RMStructure::rho_of(const FieldElement& a) const {
    if (!a.field()->same_structure(*F))
        throw Error("FieldMismatch", "element does not lie in the acting field");
    const int d = dim();
    Mat<QQ> out(d, d, QQ(0));
    for (int i = 0; i < n(); ++i) {
        const QQ& c = a.coords()[i];
        if (c == 0) continue;
        out = out + rho[i].scaled(c);
    }
    return out;
}

void validate(const RMStructure& S) {
    if (!S.F) throw Error("InvalidStructure", "missing field");
    if (S.F->layered()) throw Error("InvalidStructure", "acting field cannot be a layer");
    const int n = S.n(), d = S.dim();
    if (S.m < 1 || d != n * S.m)
        throw Error("InvalidStructure", "dim V must equal [F:Q] * dim_F V");
    if (static_cast<int>(S.rho.size()) != n)
        throw Error("InvalidStructure", "need one action matrix per power-basis element");
    for (const auto& r : S.rho)
        if (r.rows() != static_cast<size_t>(d) || r.cols() != static_cast<size_t>(d))
            throw Error("InvalidStructure", "action matrix shape");
    Mat<QQ> id = Mat<QQ>::identity(d, QQ(1), QQ(0));
    if (!(S.rho[0] == id)) throw Error("InvalidStructure", "rho(1) must be the identity");
    // ring action: powers of rho(alpha) match the reduced powers of alpha
    if (n >= 2) {
        Mat<QQ> pw = id;
        FieldElement alpha_pow = S.F->one();
        for (int k = 1; k <= n; ++k) {
            pw = pw * S.rho[1];
            alpha_pow = alpha_pow * S.F->gen();
            if (!(pw == S.rho_of(alpha_pow)))
                throw Error("InvalidStructure", "rho is not a ring action");
        }
    }
    // self-adjointness for psi
    const Mat<QQ>& G = S.psi.gram;
    for (const auto& r : S.rho)
        if (!(r.transpose() * G == G * r))
            throw Error("InvalidStructure", "field action is not self-adjoint for psi");
    if (quadform::signature(S.psi) != Signature{d - 2, 2})
        throw Error("InvalidStructure", "psi must have signature (d-2, 2)");
}

RMStructure make_structure(FieldPtr F, int m, std::vector<Mat<QQ>> rho, QBilinearForm psi) {
    RMStructure S{std::move(F), m, std::move(rho), std::move(psi), std::nullopt};
    validate(S);
    return S;
}

// ---------------------------------------------------------------------------
// Periods
// ---------------------------------------------------------------------------

namespace {

FieldElement form_eval(const Mat<FieldElement>& G, const std::vector<FieldElement>& v,
                       const std::vector<FieldElement>& w) {
    auto gw = G.apply(w);
    FieldElement acc = zero_like(gw[0]);
    for (size_t i = 0; i < v.size(); ++i) acc += v[i] * gw[i];
    return acc;
}

} // namespace

PeriodData make_period(FieldPtr K, int root_index, std::vector<FieldElement> x,
                       std::vector<FieldElement> y, const QBilinearForm& psi) {
    if (x.size() != psi.rank() || y.size() != psi.rank())
        throw Error("ShapeMismatch", "period vectors must match the form rank");
    Embedding emb{K, root_index};
    Mat<FieldElement> G = lift_matrix(psi.gram, K);
    FieldElement sx = form_eval(G, x, x);
    FieldElement sy = form_eval(G, y, y);
    FieldElement sxy = form_eval(G, x, y);
    if (!(sx == sy) || !sxy.is_zero())
        throw Error("InvalidPeriod", "need psi(x,x) = psi(y,y) and psi(x,y) = 0");
    if (sign_at(sx, emb) != -1)
        throw Error("InvalidPeriod", "psi(x,x) must be negative at the designated embedding");
    Mat<FieldElement> span(2, x.size(), K->zero());
    for (size_t j = 0; j < x.size(); ++j) {
        span.at(0, j) = x[j];
        span.at(1, j) = y[j];
    }
    if (rank(span) != 2)
        throw Error("InvalidPeriod", "x and y must be independent over K");
    return PeriodData{std::move(K), emb, std::move(x), std::move(y), std::move(sx)};
}

Mat<FieldElement> weil_operator(const PeriodData& P, const QBilinearForm& psi) {
    const size_t d = psi.rank();
    Mat<FieldElement> G = lift_matrix(psi.gram, P.K);
    auto gx = G.apply(P.x), gy = G.apply(P.y);
    FieldElement two_over_s = P.K->from_rational(QQ(2)) / P.s;
    Mat<FieldElement> C = Mat<FieldElement>::identity(d, P.K->one(), P.K->zero());
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            C.at(i, j) -= two_over_s * (P.x[i] * gx[j] + P.y[i] * gy[j]);
    return C;
}

// ---------------------------------------------------------------------------
// Construction and the trace form
// ---------------------------------------------------------------------------

QBilinearForm trace_form(const KBilinearForm& phi) {
    const auto& F = phi.gram.at(0, 0).field();
    const int n = F->dim();
    const int m = static_cast<int>(phi.rank());
    std::vector<FieldElement> alpha_pow{F->one()};
    for (int i = 1; i <= 2 * (n - 1); ++i) alpha_pow.push_back(alpha_pow.back() * F->gen());
    Mat<QQ> G(n * m, n * m, QQ(0));
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
            if (phi.gram.at(k, l).is_zero()) continue;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    G.at(k * n + i, l * n + j) =
                        numfield::trace(phi.gram.at(k, l) * alpha_pow[i + j]);
        }
    return make_qform(std::move(G));
}

RMStructure construct_rm_structure(const FieldPtr& F, int m,
                                   const std::vector<FieldElement>& a, const Embedding& eps) {
    if (m < 3)
        throw Error("RankTooSmall",
                    "no K3 type Hodge structures with dim_F V <= 2 (got m = " +
                        std::to_string(m) + ")");
    if (static_cast<int>(a.size()) != m)
        throw Error("ShapeMismatch", "need one diagonal entry per F-coordinate");
    if (!F->totally_real()) throw Error("NotTotallyReal", "F must be totally real");
    if (!eps.field || !eps.field->same_structure(*F))
        throw Error("FieldMismatch", "eps is not an embedding of F");
    auto embs = real_embeddings(F);
    if (eps.root_index < 0 || eps.root_index >= static_cast<int>(embs.size()))
        throw Error("BadEmbedding", "eps root index out of range");
    int negatives_at_eps = 0;
    for (int k = 0; k < m; ++k) {
        if (!a[k].field()->same_structure(*F))
            throw Error("FieldMismatch", "diagonal entry outside F");
        for (size_t sidx = 0; sidx < embs.size(); ++sidx) {
            int s = sign_at(a[k], embs[sidx]);
            bool is_eps = static_cast<int>(sidx) == eps.root_index;
            if (is_eps && s == -1) {
                ++negatives_at_eps;
                continue;
            }
            if (s != 1)
                throw Error("BadSignPattern",
                            "a[" + std::to_string(k) + "] has sign " + std::to_string(s) +
                                " at embedding " + std::to_string(sidx) +
                                " (want +1" + (is_eps ? " or two -1 entries at eps" : "") +
                                ")");
        }
    }
    if (negatives_at_eps != 2)
        throw Error("BadSignPattern",
                    "need exactly two diagonal entries negative at eps, got " +
                        std::to_string(negatives_at_eps));

    Mat<FieldElement> phi_gram(m, m, F->zero());
    for (int k = 0; k < m; ++k) phi_gram.at(k, k) = a[k];
    KBilinearForm phi = make_kform(std::move(phi_gram), eps);

    const int n = F->base_degree();
    std::vector<Mat<QQ>> rho;
    rho.reserve(n);
    FieldElement ap = F->one();
    for (int i = 0; i < n; ++i) {
        Mat<QQ> mi = numfield::multiplication_matrix(ap);
        std::vector<Mat<QQ>> blocks(m, mi);
        rho.push_back(block_diag(blocks, QQ(0)));
        ap = ap * F->gen();
    }
    RMStructure S = make_structure(F, m, std::move(rho), trace_form(phi));
    S.phi = std::move(phi);
    return S;
}

// ---------------------------------------------------------------------------
// Recovery of Phi
// ---------------------------------------------------------------------------

namespace {

// incremental exact row space for the greedy F-basis choice
struct RowSpace {
    std::vector<std::vector<QQ>> rows; // reduced echelon rows
    std::vector<size_t> pivots;

    bool insert(std::vector<QQ> v) {
        for (size_t r = 0; r < rows.size(); ++r) {
            const QQ& c = v[pivots[r]];
            if (c == 0) continue;
            for (size_t j = 0; j < v.size(); ++j) v[j] -= c * rows[r][j];
        }
        size_t p = 0;
        while (p < v.size() && v[p] == 0) ++p;
        if (p == v.size()) return false;
        QQ inv = 1 / v[p];
        for (auto& x : v) x *= inv;
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }
};

} // namespace

RecoveredForm recover_F_bilinear(const RMStructure& S) {
    const int n = S.n(), m = S.m, d = S.dim();
    const auto& F = S.F;
    // greedy F-basis from the standard basis
    RowSpace space;
    std::vector<std::vector<QQ>> chosen;
    for (int j = 0; j < d && static_cast<int>(chosen.size()) < m; ++j) {
        std::vector<QQ> e(d, QQ(0));
        e[j] = 1;
        std::vector<QQ> probe(e);
        if (!space.insert(std::move(probe))) continue;
        for (int i = 1; i < n; ++i) space.insert(S.rho[i].apply(e));
        chosen.push_back(std::move(e));
    }
    if (static_cast<int>(chosen.size()) != m || static_cast<int>(space.rows.size()) != d)
        throw Error("InvalidStructure", "could not extract an F-basis of V");

    // trace pairing of the power basis
    Mat<QQ> T(n, n, QQ(0));
    std::vector<FieldElement> alpha_pow{F->one()};
    for (int i = 1; i <= 2 * (n - 1); ++i) alpha_pow.push_back(alpha_pow.back() * F->gen());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) T.at(i, j) = numfield::trace(alpha_pow[i + j]);
    if (!is_invertible(T))
        throw Error("DegenerateTraceForm", "trace pairing of the power basis is singular");

    const Mat<QQ>& G = S.psi.gram;
    Mat<FieldElement> phi(m, m, F->zero());
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
            std::vector<QQ> rhs(n, QQ(0));
            for (int i = 0; i < n; ++i) {
                auto av = S.rho[i].apply(chosen[k]);
                auto gv = G.apply(chosen[l]);
                QQ acc(0);
                for (int t = 0; t < d; ++t) acc += av[t] * gv[t];
                rhs[i] = acc;
            }
            phi.at(k, l) = F->element(solve(T, rhs));
        }
    for (int k = 0; k < m; ++k)
        for (int l = k + 1; l < m; ++l)
            if (!(phi.at(k, l) == phi.at(l, k)))
                throw Error("InvalidStructure", "recovered form is not symmetric");

    Mat<QQ> basis(d, d, QQ(0));
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < n; ++i) {
            auto col = S.rho[i].apply(chosen[k]);
            for (int t = 0; t < d; ++t) basis.at(t, k * n + i) = col[t];
        }
    Embedding emb{F, 0};
    return RecoveredForm{make_kform(std::move(phi), emb), std::move(basis)};
}

// ---------------------------------------------------------------------------
// Eigenspaces
// ---------------------------------------------------------------------------

Mat<FieldElement> eigenspace_basis(const RMStructure& S, const Embedding& sigma) {
    const auto& F = S.F;
    if (!sigma.field || !sigma.field->same_structure(*F))
        throw Error("FieldMismatch", "embedding does not belong to the acting field");
    const int d = S.dim();
    if (S.n() == 1) // F = Q: the eigenspace is all of V
        return Mat<FieldElement>::identity(d, F->one(), F->zero());
    Mat<FieldElement> A = lift_matrix(S.rho[1], F);
    FieldElement alpha = F->gen();
    for (int i = 0; i < d; ++i) A.at(i, i) -= alpha;
    auto basis = kernel_basis(A);
    if (static_cast<int>(basis.size()) != S.m)
        throw Error("InvalidStructure", "eigenspace dimension is not dim_F V");
    Mat<FieldElement> W(d, S.m, F->zero());
    for (int j = 0; j < S.m; ++j)
        for (int i = 0; i < d; ++i) W.at(i, j) = basis[j][i];
    return W;
}

Signature eigenspace_signature(const RMStructure& S, const Embedding& sigma) {
    Mat<FieldElement> W = eigenspace_basis(S, sigma);
    Mat<FieldElement> G = lift_matrix(S.psi.gram, S.F);
    Mat<FieldElement> R = W.transpose() * G * W;
    return quadform::signature(make_kform(std::move(R), sigma));
}

// ---------------------------------------------------------------------------
// Double cover example
// ---------------------------------------------------------------------------

RMStructure build_double_cover_example(long d) {
    if (d <= 0 || d % 2 == 0) throw Error("NotOdd", "d must be odd and positive");
    if (numfield::square_class(QQ(d)) != d)
        throw Error("NotSquarefree", "d must be squarefree");
    long e = -1, c = -1;
    for (long t = 1; t * t <= d; ++t) {
        ZZ rest(d - t * t);
        if (is_integer_square(rest)) {
            e = t;
            ZZ s;
            mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
            c = s.get_si();
            break;
        }
    }
    if (e < 0) throw Error("NotSumOfTwoSquares", "d is not a sum of two squares");
    long dp = (d - 1) / 2;

    auto block = [](long e_, long c_, long r_) {
        Mat<QQ> b(2, 2, QQ(0));
        b.at(0, 0) = e_;
        b.at(0, 1) = c_ * r_;
        b.at(1, 0) = c_;
        b.at(1, 1) = -e_;
        return b;
    };
    Mat<QQ> a = block_diag<QQ>({block(dp + 1, dp, -1), block(dp + 1, dp, -1), block(e, c, 1)},
                               QQ(0));
    std::vector<long> diag{1, -1, 1, -1, 1, 1};
    Mat<QQ> G(6, 6, QQ(0));
    for (int i = 0; i < 6; ++i) G.at(i, i) = diag[i];

    if (!(a * a == Mat<QQ>::identity(6, QQ(1), QQ(0)).scaled(QQ(d))))
        throw Error("InvalidStructure", "action does not square to d");
    if (!(a.transpose() * G == G * a))
        throw Error("InvalidStructure", "action is not self-adjoint");

    auto F = NumberField::quadratic(QQ(d));
    std::vector<Mat<QQ>> rho{Mat<QQ>::identity(6, QQ(1), QQ(0)), std::move(a)};
    return make_structure(F, 3, std::move(rho), make_qform(std::move(G)));
}

// ---------------------------------------------------------------------------
// Period construction
// ---------------------------------------------------------------------------

PeriodData construct_period(const RMStructure& S, const Embedding& eps) {
    const int m = S.m, d = S.dim();
    Signature sig = eigenspace_signature(S, eps);
    if (sig != Signature{m - 2, 2})
        throw Error("NoNegativePlane",
                    "eps-eigenspace has signature (" + std::to_string(sig.first) + "," +
                        std::to_string(sig.second) + "), need (m-2, 2)");
    Mat<FieldElement> W = eigenspace_basis(S, eps);
    Mat<FieldElement> G = lift_matrix(S.psi.gram, S.F);
    auto di = diagonalize(make_kform(W.transpose() * G * W, eps));
    Mat<FieldElement> U = W * di.basis; // psi-orthogonal eigenvectors as columns
    int i = -1, j = -1;
    for (int k = 0; k < m; ++k)
        if (sign_at(di.diag[k], eps) < 0) (i < 0 ? i : j) = k;
    FieldElement cu = di.diag[i], cw = di.diag[j];

    auto col = [&](const Mat<FieldElement>& M, int k) {
        std::vector<FieldElement> v;
        v.reserve(d);
        for (int t = 0; t < d; ++t) v.push_back(M.at(t, k));
        return v;
    };
    std::vector<FieldElement> x = col(U, i), y = col(U, j);
    FieldPtr K = S.F;
    int root = eps.root_index;

    if (!(cu == cw)) {
        FieldElement ratio = cu / cw; // positive at eps: both entries negative there
        bool scaled_rationally = false;
        if (ratio.is_rational() && is_rational_square(ratio.rational_value())) {
            QQ r = ratio.rational_value();
            ZZ sn, sd;
            mpz_sqrt(sn.get_mpz_t(), r.get_num().get_mpz_t());
            mpz_sqrt(sd.get_mpz_t(), r.get_den().get_mpz_t());
            QQ q = make_rational(sn, sd);
            for (auto& t : y) t = t.scaled(q); // psi(qy, qy) = r * cw = cu
            scaled_rationally = true;
        }
        if (!scaled_rationally) {
            K = NumberField::with_sqrt(S.F, ratio, eps.root_index);
            FieldElement sq = K->sqrt_gen();
            for (auto& t : x) t = lift_to(t, K);
            for (auto& t : y) t = lift_to(t, K) * sq; // norm becomes ratio * cw = cu
        }
    }

    PeriodData P = make_period(K, root, std::move(x), std::move(y), S.psi);
    // F-compatibility by construction: rho(alpha) acts as the eigenvalue
    Mat<FieldElement> RA = lift_matrix(S.rho_of(S.F->gen()), K);
    FieldElement lam = lift_to(S.F->gen(), K);
    auto check_eig = [&](const std::vector<FieldElement>& v) {
        auto rv = RA.apply(v);
        for (int t = 0; t < d; ++t)
            if (!(rv[t] == lam * v[t]))
                throw Error("InvalidStructure", "period left the eigenspace");
    };
    check_eig(P.x);
    check_eig(P.y);
    return P;
}

// ---------------------------------------------------------------------------
// Simplicity
// ---------------------------------------------------------------------------

SimplicityResult simplicity_check(const RMStructure& S, const PeriodData& P) {
    const int d = S.dim();
    if (static_cast<int>(P.x.size()) != d)
        throw Error("ShapeMismatch", "period does not match the structure dimension");
    Mat<FieldElement> G = lift_matrix(S.psi.gram, P.K);
    auto gx = G.apply(P.x), gy = G.apply(P.y);
    const int kdim = P.K->dim();
    Mat<QQ> M(2 * kdim, d, QQ(0));
    for (int jcol = 0; jcol < d; ++jcol) {
        for (int t = 0; t < kdim; ++t) {
            M.at(t, jcol) = gx[jcol].coords()[t];
            M.at(kdim + t, jcol) = gy[jcol].coords()[t];
        }
    }
    auto basis = kernel_basis(M);
    SimplicityResult out;
    out.simple = basis.empty();
    if (!out.simple) {
        Mat<QQ> k(basis.size(), d, QQ(0));
        for (size_t r = 0; r < basis.size(); ++r)
            for (int t = 0; t < d; ++t) k.at(r, t) = basis[r][t];
        out.kernel = std::move(k);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Twists
// ---------------------------------------------------------------------------

TwistResult twist_polarization(const RMStructure& S, const FieldElement& a) {
    if (a.is_zero()) throw Error("ZeroElement", "twist by zero is degenerate");
    Mat<QQ> Ga = S.rho_of(a).transpose() * S.psi.gram;
    return TwistResult{make_qform(std::move(Ga)), is_totally_positive(a)};
}

bool period_avoids_endomorphism(const RMStructure& S, const PeriodData& P, const Mat<QQ>& B) {
    const int d = S.dim();
    if (B.rows() != static_cast<size_t>(d) || B.cols() != static_cast<size_t>(d))
        throw Error("ShapeMismatch", "candidate endomorphism has wrong shape");
    for (const auto& r : S.rho)
        if (!(B * r == r * B))
            throw Error("NotCompatible", "candidate does not commute with the field action");
    Mat<FieldElement> BK = lift_matrix(B, P.K);
    auto in_plane = [&](const std::vector<FieldElement>& v) {
        Mat<FieldElement> rows(3, d, P.K->zero());
        for (int t = 0; t < d; ++t) {
            rows.at(0, t) = P.x[t];
            rows.at(1, t) = P.y[t];
            rows.at(2, t) = v[t];
        }
        return rank(rows) == 2;
    };
    return !(in_plane(BK.apply(P.x)) && in_plane(BK.apply(P.y)));
}

bool is_polarization(const QBilinearForm& form, const RMStructure& S, const PeriodData& P) {
    const int d = S.dim();
    if (static_cast<int>(form.rank()) != d)
        throw Error("ShapeMismatch", "candidate form has wrong rank");
    for (const auto& r : S.rho)
        if (!(r.transpose() * form.gram == form.gram * r))
            throw Error("NotCompatible", "form is not self-adjoint for the field action");
    Mat<FieldElement> G = lift_matrix(form.gram, P.K);
    FieldElement a11 = form_eval(G, P.x, P.x);
    FieldElement a22 = form_eval(G, P.y, P.y);
    FieldElement a12 = form_eval(G, P.x, P.y);
    if (!(a11 == a22) || !a12.is_zero())
        throw Error("NotCompatible", "form is not U(1)-invariant on the period plane");
    // orthocomplement of span(x, y) for the candidate form
    auto gx = G.apply(P.x), gy = G.apply(P.y);
    Mat<FieldElement> rows(2, d, P.K->zero());
    for (int t = 0; t < d; ++t) {
        rows.at(0, t) = gx[t];
        rows.at(1, t) = gy[t];
    }
    auto comp = kernel_basis(rows);
    if (static_cast<int>(comp.size()) != d - 2)
        throw Error("NotCompatible", "form pairs the period plane degenerately");
    if (sign_at(a11, P.emb) != -1) return false;
    Mat<FieldElement> W(d, d - 2, P.K->zero());
    for (int j = 0; j < d - 2; ++j)
        for (int t = 0; t < d; ++t) W.at(t, j) = comp[j][t];
    Mat<FieldElement> R = W.transpose() * G * W;
    try {
        return quadform::signature(make_kform(std::move(R), P.emb)) == Signature{d - 2, 0};
    } catch (const Error& e) {
        if (e.code() == "Degenerate") return false;
        throw;
    }
}

} // namespace rmhodge
} // namespace rmks
