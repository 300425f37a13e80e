#include "rmks/cores.hpp"

namespace rmks {
namespace cores {

using cliffordks::CliffordAlgebra;
using cliffordks::CliffordElement;
using numfield::galois_conjugate;
using numfield::lift_matrix;

// ---------------------------------------------------------------------------
// F-algebras from structure constants
// ---------------------------------------------------------------------------

std::vector<FieldElement> FAlgebra::multiply(const std::vector<FieldElement>& a,
                                             const std::vector<FieldElement>& b) const {
    std::vector<FieldElement> out(dim, F->zero());
    for (int i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            FieldElement f = a[i] * b[j];
            for (int k = 0; k < dim; ++k)
                if (!sc[i][j][k].is_zero()) out[k] += f * sc[i][j][k];
        }
    }
    return out;
}

FAlgebra make_f_algebra(FieldPtr F,
                        std::vector<std::vector<std::vector<FieldElement>>> sc) {
    FAlgebra R;
    R.F = std::move(F);
    R.dim = static_cast<int>(sc.size());
    R.sc = std::move(sc);
    const int r = R.dim;
    auto basis = [&](int i) {
        std::vector<FieldElement> v(r, R.F->zero());
        v[i] = R.F->one();
        return v;
    };
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                auto lhs = R.multiply(R.multiply(basis(i), basis(j)), basis(k));
                auto rhs = R.multiply(basis(i), R.multiply(basis(j), basis(k)));
                if (!(lhs == rhs))
                    throw Error("NotAssociative", "structure constants are not associative");
            }
    // two-sided unit: x r_j = r_j and r_j x = r_j for all j
    Mat<FieldElement> A(2 * r * r, r, R.F->zero());
    std::vector<FieldElement> rhs(2 * r * r, R.F->zero());
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
            for (int i = 0; i < r; ++i) {
                A.at(j * r + k, i) = R.sc[i][j][k];
                A.at(r * r + j * r + k, i) = R.sc[j][i][k];
            }
            rhs[j * r + k] = j == k ? R.F->one() : R.F->zero();
            rhs[r * r + j * r + k] = j == k ? R.F->one() : R.F->zero();
        }
    try {
        R.unit = solve(A, rhs);
    } catch (const Error&) {
        throw Error("NoUnit", "structure constants admit no two-sided unit");
    }
    return R;
}

FAlgebra even_clifford_f_algebra(const quadform::KBilinearForm& phi) {
    auto alg = CliffordAlgebra::create(phi.gram, phi.emb);
    const auto& F = alg->field();
    const auto& basis = alg->even_basis();
    const int r = static_cast<int>(basis.size());
    std::vector<std::vector<std::vector<FieldElement>>> sc(
        r, std::vector<std::vector<FieldElement>>(r, std::vector<FieldElement>(r, F->zero())));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (const auto& [m, c] : alg->mul_monomial(basis[i], basis[j]))
                sc[i][j][static_cast<int>(alg->even_index(m))] = c;
    return make_f_algebra(F, std::move(sc));
}

FAlgebra matrix_algebra_2x2(const FieldPtr& F) {
    // basis E11, E12, E21, E22; E_ab E_cd = delta_bc E_ad
    const int r = 4;
    auto idx = [](int a, int b) { return a * 2 + b; };
    std::vector<std::vector<std::vector<FieldElement>>> sc(
        r, std::vector<std::vector<FieldElement>>(r, std::vector<FieldElement>(r, F->zero())));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    if (b == c) sc[idx(a, b)][idx(c, d)][idx(a, d)] = F->one();
    return make_f_algebra(F, std::move(sc));
}

// ---------------------------------------------------------------------------
// F tensor F and the CRT idempotents
// ---------------------------------------------------------------------------

Mat<QQ> tensor_square_mul(const FieldPtr& F, const Mat<QQ>& A, const Mat<QQ>& B) {
    const int n = F->base_degree();
    if (F->layered()) throw Error("FieldMismatch", "tensor square of a layered field");
    // reductions of alpha^k for k <= 2n-2
    std::vector<std::vector<QQ>> pw;
    FieldElement p = F->one();
    for (int k = 0; k <= 2 * (n - 1); ++k) {
        pw.push_back(p.coords());
        p = p * F->gen();
    }
    Mat<QQ> out(n, n, QQ(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (A.at(i, j) == 0) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    QQ f = A.at(i, j) * B.at(k, l);
                    if (f == 0) continue;
                    for (int u = 0; u < n; ++u)
                        for (int v = 0; v < n; ++v) out.at(u, v) += f * pw[i + k][u] * pw[j + l][v];
                }
        }
    return out;
}

Mat<QQ> tensor_square_one(const FieldPtr& F) {
    Mat<QQ> one(F->base_degree(), F->base_degree(), QQ(0));
    one.at(0, 0) = 1;
    return one;
}

std::pair<Mat<QQ>, Mat<QQ>> splitting_idempotents(const FieldPtr& F) {
    if (F->layered() || F->base_degree() != 2)
        throw Error("NotQuadratic", "splitting idempotents need a quadratic field");
    QQ b = F->min_poly().coeff(1), c = F->min_poly().coeff(0);
    QQ disc = b * b - 4 * c;
    // pi_e = ((b + alpha) (x) 1 + 1 (x) alpha) * ((2 alpha + b) (x) 1) / disc
    Mat<QQ> A(2, 2, QQ(0)), B(2, 2, QQ(0));
    A.at(0, 0) = b;
    A.at(1, 0) = 1;
    A.at(0, 1) = 1;
    B.at(0, 0) = b;
    B.at(1, 0) = 2;
    Mat<QQ> pi_e = tensor_square_mul(F, A, B).scaled(1 / disc);
    Mat<QQ> pi_g = tensor_square_one(F) - pi_e;
    return {pi_e, pi_g};
}

// ---------------------------------------------------------------------------
// Twisted tensor and corestriction
// ---------------------------------------------------------------------------

std::vector<FieldElement> TwistedTensor::to_field_coords(const std::vector<QQ>& q) const {
    const int n = F->base_degree();
    std::vector<FieldElement> out;
    out.reserve(r * r);
    for (int s = 0; s < r * r; ++s)
        out.push_back(F->element(std::vector<QQ>(q.begin() + s * n, q.begin() + (s + 1) * n)));
    return out;
}

std::vector<QQ> TwistedTensor::to_rational_coords(const std::vector<FieldElement>& f) const {
    std::vector<QQ> out;
    out.reserve(qdim());
    for (const auto& e : f)
        for (const auto& c : e.coords()) out.push_back(c);
    return out;
}

std::vector<FieldElement> TwistedTensor::multiply(const std::vector<FieldElement>& a,
                                                  const std::vector<FieldElement>& b) const {
    const int rr = r * r;
    std::vector<FieldElement> out(rr, F->zero());
    for (int i = 0; i < rr; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < rr; ++j) {
            if (b[j].is_zero()) continue;
            FieldElement f = a[i] * b[j];
            for (int k = 0; k < rr; ++k)
                if (!sc[i][j][k].is_zero()) out[k] += f * sc[i][j][k];
        }
    }
    return out;
}

TwistedTensor build_twisted_tensor(const FAlgebra& R) {
    const auto& F = R.F;
    if (F->layered() || F->base_degree() != 2)
        throw Error("NotQuadratic", "corestriction is implemented for quadratic Galois F");
    const int r = R.dim, n = 2;
    TwistedTensor Z;
    Z.F = F;
    Z.r = r;
    auto zidx = [r](int i, int j) { return i * r + j; };
    Z.sc.assign(r * r, std::vector<std::vector<FieldElement>>(
                           r * r, std::vector<FieldElement>(r * r, F->zero())));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                for (int l = 0; l < r; ++l) {
                    // (r_i (x) r_j)(r_k (x) r_l): slot e multiplies normally,
                    // slot g pulls its coefficients through the conjugation
                    for (int u = 0; u < r; ++u) {
                        if (R.sc[i][k][u].is_zero()) continue;
                        for (int v = 0; v < r; ++v) {
                            if (R.sc[j][l][v].is_zero()) continue;
                            Z.sc[zidx(i, j)][zidx(k, l)][zidx(u, v)] +=
                                R.sc[i][k][u] * galois_conjugate(R.sc[j][l][v]);
                        }
                    }
                }
    // involution: z_{ij} alpha^t -> conj(alpha^t) z_{ji}
    Z.galois = Mat<QQ>(Z.qdim(), Z.qdim(), QQ(0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int t = 0; t < n; ++t) {
                FieldElement img = galois_conjugate(numfield::pow_elem(F->gen(), t));
                int col = zidx(i, j) * n + t;
                for (int u = 0; u < n; ++u)
                    Z.galois.at(zidx(j, i) * n + u, col) = img.coords()[u];
            }
    return Z;
}

std::vector<QQ> Corestriction::multiply(const std::vector<QQ>& a,
                                        const std::vector<QQ>& b) const {
    std::vector<QQ> out(dim, QQ(0));
    for (int i = 0; i < dim; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (b[j] == 0) continue;
            QQ f = a[i] * b[j];
            for (int k = 0; k < dim; ++k) out[k] += f * sc[i][j][k];
        }
    }
    return out;
}

std::vector<QQ> Corestriction::coordinates(const std::vector<QQ>& z) const {
    Mat<QQ> B = fixed_basis.transpose(); // qdim x dim
    auto x = solve(B, z);
    auto back = B.apply(x);
    if (!(back == z))
        throw Error("VerificationFailed", "element is not in the fixed subalgebra");
    return x;
}

Corestriction build_corestriction(const FAlgebra& R) {
    Corestriction out;
    out.Z = build_twisted_tensor(R);
    const TwistedTensor& Z = out.Z;
    const int qd = Z.qdim();
    Mat<QQ> fixed_eq = Z.galois - Mat<QQ>::identity(qd, QQ(1), QQ(0));
    auto basis = kernel_basis(fixed_eq);
    out.dim = static_cast<int>(basis.size());
    if (out.dim != R.dim * R.dim)
        throw Error("VerificationFailed",
                    "fixed subalgebra dimension is not (dim_F R)^2");
    out.fixed_basis = Mat<QQ>(out.dim, qd, QQ(0));
    for (int i = 0; i < out.dim; ++i)
        for (int t = 0; t < qd; ++t) out.fixed_basis.at(i, t) = basis[i][t];

    out.sc.assign(out.dim, std::vector<std::vector<QQ>>(out.dim,
                                                        std::vector<QQ>(out.dim, QQ(0))));
    for (int i = 0; i < out.dim; ++i) {
        auto fi = Z.to_field_coords(out.fixed_basis.row(i));
        for (int j = 0; j < out.dim; ++j) {
            auto fj = Z.to_field_coords(out.fixed_basis.row(j));
            auto prod = Z.to_rational_coords(Z.multiply(fi, fj));
            auto coords = out.coordinates(prod); // closure check included
            for (int k = 0; k < out.dim; ++k) out.sc[i][j][k] = coords[k];
        }
    }
    // unit of Z: 1_R (x) 1_R with the slot-g coefficients conjugated
    std::vector<FieldElement> unit_z(Z.r * Z.r, Z.F->zero());
    for (int i = 0; i < Z.r; ++i)
        for (int j = 0; j < Z.r; ++j)
            unit_z[i * Z.r + j] = R.unit[i] * galois_conjugate(R.unit[j]);
    out.unit = out.coordinates(Z.to_rational_coords(unit_z));
    return out;
}

// ---------------------------------------------------------------------------
// The embedding into C+(psi)
// ---------------------------------------------------------------------------

CoresEmbedding embed_cores_in_clifford(const rmhodge::RMStructure& S) {
    const auto& F = S.F;
    if (F->base_degree() != 2)
        throw Error("NotQuadraticField", "the embedding is implemented for [F:Q] = 2");
    const int d = S.dim(), m = S.m;
    auto rec = rmhodge::recover_F_bilinear(S);
    if (S.phi && !(rmhodge::trace_form(*S.phi).gram == S.psi.gram))
        throw Error("VerificationFailed", "cached Phi does not trace back to psi");
    if (m > 4)
        throw Error("TooLarge", "even Clifford algebra exceeds the dim_F cap of 8");

    CoresEmbedding out;
    FAlgebra R = even_clifford_f_algebra(rec.phi);
    out.cores = build_corestriction(R);
    out.clifford_F = CliffordAlgebra::over_field(S.psi, F, 0);
    const auto& A = out.clifford_F;

    // projector onto the alpha-eigenspace of the action, from the CRT
    // idempotent with the first tensor slot acting through rho
    QQ b = F->min_poly().coeff(1), c = F->min_poly().coeff(0);
    QQ disc = b * b - 4 * c;
    Mat<FieldElement> M = lift_matrix(S.rho[1], F);
    Mat<FieldElement> id = Mat<FieldElement>::identity(d, F->one(), F->zero());
    FieldElement alpha = F->gen(), bb = F->from_rational(b);
    Mat<FieldElement> P_e =
        ((M + id.scaled(bb)) + id.scaled(alpha)) * (M.scaled(F->from_rational(QQ(2))) + id.scaled(bb));
    P_e = P_e.scaled(F->from_rational(1 / disc));
    if (!(P_e * P_e == P_e))
        throw Error("VerificationFailed", "eigenspace projector is not idempotent");

    // u_k = P_e v_k and w_k = v_k - u_k reproduce Phi resp. its conjugate
    Mat<FieldElement> G = lift_matrix(S.psi.gram, F);
    auto form = [&](const std::vector<FieldElement>& v, const std::vector<FieldElement>& w) {
        auto gw = G.apply(w);
        FieldElement acc = F->zero();
        for (int i = 0; i < d; ++i) acc += v[i] * gw[i];
        return acc;
    };
    std::vector<std::vector<FieldElement>> u(m), w(m);
    for (int k = 0; k < m; ++k) {
        std::vector<FieldElement> vk;
        vk.reserve(d);
        for (int t = 0; t < d; ++t) vk.push_back(F->from_rational(rec.basis.at(t, k * 2)));
        u[k] = P_e.apply(vk);
        w[k].reserve(d);
        for (int t = 0; t < d; ++t) w[k].push_back(vk[t] - u[k][t]);
    }
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
            if (!(form(u[k], u[l]) == rec.phi.gram.at(k, l)) ||
                !(form(w[k], w[l]) == galois_conjugate(rec.phi.gram.at(k, l))) ||
                !form(u[k], w[l]).is_zero())
                throw Error("VerificationFailed", "eigenspace splitting does not refine psi");
        }

    // products of even monomials in the u's and w's
    auto mono_basis = [&](const std::vector<std::vector<FieldElement>>& vecs, uint32_t mask) {
        CliffordElement acc = A->one();
        for (int bit = 0; bit < m; ++bit)
            if ((mask >> bit) & 1) acc = acc * A->from_vector(vecs[bit]);
        return acc;
    };
    auto phi_alg = CliffordAlgebra::create(rec.phi.gram, rec.phi.emb);
    const auto& even = phi_alg->even_basis(); // basis order of R
    const int r = R.dim;
    std::vector<CliffordElement> uw(r * r, A->zero());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            uw[i * r + j] = mono_basis(u, even[i]) * mono_basis(w, even[j]);

    // images of the fixed basis: rational coordinates on the even basis of A
    const auto& abasis = A->even_basis();
    out.map = Mat<QQ>(out.cores.dim, abasis.size(), QQ(0));
    std::vector<CliffordElement> images;
    images.reserve(out.cores.dim);
    for (int s = 0; s < out.cores.dim; ++s) {
        auto f = out.cores.Z.to_field_coords(out.cores.fixed_basis.row(s));
        CliffordElement img = A->zero();
        for (int t = 0; t < r * r; ++t)
            if (!f[t].is_zero()) img = img + uw[t].scaled(f[t]);
        for (const auto& [mask, coeff] : img.coeffs()) {
            if (!coeff.is_rational())
                throw Error("VerificationFailed",
                            "image of a fixed vector has irrational coefficients");
            out.map.at(s, A->even_index(mask)) = coeff.rational_value();
        }
        images.push_back(std::move(img));
    }

    // unital + homomorphism on all basis pairs + injectivity
    CliffordElement unit_img = A->zero();
    for (int s = 0; s < out.cores.dim; ++s)
        unit_img = unit_img + images[s].scaled(F->from_rational(out.cores.unit[s]));
    if (!(unit_img == A->one()))
        throw Error("VerificationFailed", "embedding does not send 1 to 1");
    for (int s = 0; s < out.cores.dim; ++s)
        for (int t = 0; t < out.cores.dim; ++t) {
            CliffordElement lhs = A->zero();
            for (int k = 0; k < out.cores.dim; ++k) {
                const QQ& cst = out.cores.sc[s][t][k];
                if (cst != 0) lhs = lhs + images[k].scaled(F->from_rational(cst));
            }
            if (!(lhs == images[s] * images[t]))
                throw Error("VerificationFailed", "embedding is not multiplicative");
        }
    if (rank(out.map) != static_cast<size_t>(out.cores.dim))
        throw Error("VerificationFailed", "embedding is not injective");
    return out;
}

} // namespace cores
} // namespace rmks
