#pragma once

#include <optional>
#include <variant>

#include "rmks/quadform.hpp"

namespace rmks {
namespace rmhodge {

using numfield::Embedding;
using numfield::FieldElement;
using numfield::FieldPtr;
using quadform::KBilinearForm;
using quadform::QBilinearForm;
using quadform::Signature;

// Weight-two structure of K3 type carrying an action of a totally real field
// F: V = Q^d with d = nm, the action of the power basis of F, and the
// polarization form psi of signature (d-2, 2).
struct RMStructure {
    FieldPtr F;
    int m = 0;                // dim_F V
    std::vector<Mat<QQ>> rho; // action of 1, alpha, ..., alpha^{n-1}
    QBilinearForm psi;
    // cache of the F-bilinear form in the standard layout, filled by the
    // constructions; recover_F_bilinear recomputes it independently
    std::optional<KBilinearForm> phi;

    int n() const { return F->base_degree(); }
    int dim() const { return static_cast<int>(psi.rank()); }
    Mat<QQ> rho_of(const FieldElement& a) const; // sum of a's coordinates times rho[i]
};

// Checks the ring action, self-adjointness and the (d-2, 2) signature.
void validate(const RMStructure& S);
RMStructure make_structure(FieldPtr F, int m, std::vector<Mat<QQ>> rho, QBilinearForm psi);

// Period plane omega = x + i y, stored as exact vectors over a real field K
// with a designated embedding. Invariants: psi(x,x) = psi(y,y) = s,
// psi(x,y) = 0, s < 0 at the embedding, x and y independent over K.
struct PeriodData {
    FieldPtr K;
    Embedding emb;
    std::vector<FieldElement> x, y;
    FieldElement s;
};

PeriodData make_period(FieldPtr K, int root_index, std::vector<FieldElement> x,
                       std::vector<FieldElement> y, const QBilinearForm& psi);

// Weil operator over K: -1 on span(x, y), +1 on its psi-orthocomplement.
Mat<FieldElement> weil_operator(const PeriodData& P, const QBilinearForm& psi);

// Construction of Lemma "existence" type: Phi = diag(a_1..a_m) over F with
// the prescribed sign pattern (exactly two a_k negative at eps, all positive
// elsewhere), psi = trace form. Errors: RankTooSmall (m < 3), BadSignPattern.
RMStructure construct_rm_structure(const FieldPtr& F, int m,
                                   const std::vector<FieldElement>& a, const Embedding& eps);

// psi(v, w) = tr(Phi(v, w)) on the basis e_k alpha^i, index k*n + i.
QBilinearForm trace_form(const KBilinearForm& phi);

struct RecoveredForm {
    KBilinearForm phi;
    Mat<QQ> basis; // columns rho[i] v_k in the (k, i) layout
};

// Unique F-bilinear Phi with tr(c Phi(v,w)) = psi(rho(c) v, w); the F-basis is
// chosen greedily from the standard basis so block-structured inputs round-trip
// to their own Gram matrix.
RecoveredForm recover_F_bilinear(const RMStructure& S);

// Signature at sigma of psi restricted to the sigma(alpha)-eigenspace.
Signature eigenspace_signature(const RMStructure& S, const Embedding& sigma);
// Basis of that eigenspace as columns over K = F reindexed at sigma.
Mat<FieldElement> eigenspace_basis(const RMStructure& S, const Embedding& sigma);

// The double cover of P^2 branched over six lines, with real multiplication
// by Q(sqrt d): d odd, squarefree, a sum of two squares. psi = Q1+Q2+Q3 with
// r1 = r2 = -1, r3 = +1; the action squares to d.
RMStructure build_double_cover_example(long d);

// Period in the eps-eigenspace; adjoins one quadratic layer to K when the two
// negative directions cannot be scaled to equal norms rationally.
PeriodData construct_period(const RMStructure& S, const Embedding& eps);

struct SimplicityResult {
    bool simple = false;
    Mat<QQ> kernel; // rows span {v in V : psi(x,v) = psi(y,v) = 0} when not simple
};

// Rational perpendicular of the period plane; Simple iff it vanishes.
SimplicityResult simplicity_check(const RMStructure& S, const PeriodData& P);

// psi_a(v, w) = psi(rho(a) v, w); flagged as a polarization iff a is totally
// positive. Error: ZeroElement.
struct TwistResult {
    QBilinearForm form;
    bool polarization = false;
};
TwistResult twist_polarization(const RMStructure& S, const FieldElement& a);

// Exact polarization test of a candidate form against the period: negative
// definite on span(x,y) at the designated place, positive definite on the
// orthocomplement. NotCompatible when the U(1)/self-adjointness preconditions
// fail.
bool is_polarization(const QBilinearForm& form, const RMStructure& S, const PeriodData& P);

// Advisory genericity probe: a candidate endomorphism commuting with the
// field action that stabilizes the period plane would enlarge the
// endomorphism field. Returns true when the plane is NOT stabilized by B.
// NotCompatible if B does not commute with the action.
bool period_avoids_endomorphism(const RMStructure& S, const PeriodData& P, const Mat<QQ>& B);

} // namespace rmhodge
} // namespace rmks
