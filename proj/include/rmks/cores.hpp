#pragma once

#include "rmks/cliffordks.hpp"
#include "rmks/rmhodge.hpp"

namespace rmks {
namespace cores {

using numfield::FieldElement;
using numfield::FieldPtr;

// Associative unital algebra over a number field F, presented by structure
// constants on a chosen basis: r_i r_j = sum_k sc[i][j][k] r_k.
struct FAlgebra {
    FieldPtr F;
    int dim = 0;
    std::vector<std::vector<std::vector<FieldElement>>> sc;
    std::vector<FieldElement> unit; // coordinates of the two-sided unit

    std::vector<FieldElement> multiply(const std::vector<FieldElement>& a,
                                       const std::vector<FieldElement>& b) const;
};

// Validates associativity on all basis triples and solves for the unit.
// Errors: NotAssociative, NoUnit.
FAlgebra make_f_algebra(FieldPtr F, std::vector<std::vector<std::vector<FieldElement>>> sc);

// Even Clifford algebra C+_F(Phi) as an F-algebra on the even-monomial basis.
FAlgebra even_clifford_f_algebra(const quadform::KBilinearForm& phi);

// 2x2 matrix algebra over F (dimension-formula fixture).
FAlgebra matrix_algebra_2x2(const FieldPtr& F);

// Elements of F tensor_Q F on the basis alpha^i (x) alpha^j, stored as n x n
// rational coordinate matrices.
Mat<QQ> tensor_square_mul(const FieldPtr& F, const Mat<QQ>& A, const Mat<QQ>& B);
Mat<QQ> tensor_square_one(const FieldPtr& F);

// CRT idempotents (pi_e, pi_g) of F (x) F for a quadratic field:
// (a (x) 1) pi_e = (1 (x) a) pi_e. NotQuadratic otherwise.
std::pair<Mat<QQ>, Mat<QQ>> splitting_idempotents(const FieldPtr& F);

// Z_R = R_e (x)_F R_g for quadratic Galois F, with the swap-and-conjugate
// involution. F-basis (i, j) -> i*r + j; Q-coordinates interleave the field
// coordinates of each slot.
struct TwistedTensor {
    FieldPtr F;
    int r = 0;
    std::vector<std::vector<std::vector<FieldElement>>> sc; // over F, dim r^2
    Mat<QQ> galois; // involution on the 2 r^2 rational coordinates

    int qdim() const { return 2 * r * r; }
    std::vector<FieldElement> to_field_coords(const std::vector<QQ>& q) const;
    std::vector<QQ> to_rational_coords(const std::vector<FieldElement>& f) const;
    std::vector<FieldElement> multiply(const std::vector<FieldElement>& a,
                                       const std::vector<FieldElement>& b) const;
};

TwistedTensor build_twisted_tensor(const FAlgebra& R); // NotQuadratic

// cores_{F/Q}(R) = Z_R^G: Q-algebra of dimension (dim_F R)^2.
struct Corestriction {
    TwistedTensor Z;
    int dim = 0;
    Mat<QQ> fixed_basis; // rows: fixed vectors in the Q-coordinates of Z
    std::vector<std::vector<std::vector<QQ>>> sc;
    std::vector<QQ> unit;

    std::vector<QQ> multiply(const std::vector<QQ>& a, const std::vector<QQ>& b) const;
    // coordinates of a G-fixed element of Z in the fixed basis
    std::vector<QQ> coordinates(const std::vector<QQ>& z_qcoords) const;
};

Corestriction build_corestriction(const FAlgebra& R);

// The embedding cores_{F/Q}(C+_F(Phi)) -> C+(psi) for [F:Q] = 2, realized via
// the eigenspace splitting V (x) F = V_e + V_g and products of even monomials.
// Every verification (rationality of the image, unit, homomorphism on all
// basis pairs, injectivity) is exact; failures raise VerificationFailed.
struct CoresEmbedding {
    Corestriction cores;
    cliffordks::AlgebraPtr clifford_F; // C(psi) over F
    Mat<QQ> map;                       // cores.dim x 2^{d-1} on the even basis
};

CoresEmbedding embed_cores_in_clifford(const rmhodge::RMStructure& S);

} // namespace cores
} // namespace rmks
