#pragma once

#include <cstdint>
#include <map>
#include <memory>

#include "rmks/rmhodge.hpp"

namespace rmks {
namespace cliffordks {

using numfield::Embedding;
using numfield::FieldElement;
using numfield::FieldPtr;
using rmhodge::PeriodData;

class CliffordAlgebra;
using AlgebraPtr = std::shared_ptr<const CliffordAlgebra>;

// Element of C(psi) in the subset-monomial basis: sparse map from the
// generator bitmask to its coefficient, zero coefficients elided.
class CliffordElement {
public:
    CliffordElement() = default;
    CliffordElement(AlgebraPtr alg, std::map<uint32_t, FieldElement> coeffs);

    const AlgebraPtr& algebra() const;
    const std::map<uint32_t, FieldElement>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_even() const;

    CliffordElement operator+(const CliffordElement& o) const;
    CliffordElement operator-(const CliffordElement& o) const;
    CliffordElement operator*(const CliffordElement& o) const; // AlgebraMismatch
    CliffordElement operator-() const;
    CliffordElement scaled(const FieldElement& c) const;
    bool operator==(const CliffordElement& o) const;

private:
    AlgebraPtr alg_;
    std::map<uint32_t, FieldElement> c_;
    friend class CliffordAlgebra;
};

// Clifford algebra of a (possibly non-diagonal) symmetric Gram matrix over a
// number field K: e_i e_j + e_j e_i = 2 g_ij, e_i^2 = g_ii. Dimension 2^d,
// even part 2^{d-1}. Generator count capped at 12 (the monomial rewrite table
// is precomputed).
class CliffordAlgebra : public std::enable_shared_from_this<CliffordAlgebra> {
public:
    static AlgebraPtr create(Mat<FieldElement> gram, Embedding emb);
    static AlgebraPtr over_field(const quadform::QBilinearForm& psi, const FieldPtr& K,
                                 int root_index);

    int generators() const { return d_; }
    size_t dim() const { return size_t(1) << d_; }
    size_t even_dim() const { return size_t(1) << (d_ - 1); }
    const Mat<FieldElement>& gram() const { return gram_; }
    const FieldPtr& field() const { return K_; }
    const Embedding& embedding() const { return emb_; }

    CliffordElement zero() const;
    CliffordElement one() const;
    CliffordElement scalar(const FieldElement& c) const;
    CliffordElement monomial(uint32_t mask, const FieldElement& c) const;
    CliffordElement generator(int i) const;
    CliffordElement from_vector(const std::vector<FieldElement>& v) const;

    const std::vector<uint32_t>& even_basis() const { return even_masks_; }
    size_t even_index(uint32_t mask) const;

    bool same_algebra(const CliffordAlgebra& o) const;

    // normal form of e_S * e_T
    std::map<uint32_t, FieldElement> mul_monomial(uint32_t s, uint32_t t) const;

private:
    CliffordAlgebra() = default;
    FieldPtr K_;
    Embedding emb_;
    Mat<FieldElement> gram_;
    int d_ = 0;
    std::vector<std::map<uint32_t, FieldElement>> gen_table_; // [mask * d + t]
    std::vector<uint32_t> even_masks_;
    std::vector<size_t> even_index_;
};

// Anti-automorphism reversing the order of generators.
CliffordElement reversal(const CliffordElement& x);

// Trace of left multiplication by x on the even part (x must be even).
FieldElement trace_even(const CliffordElement& x);

// Matrix of c -> x * c on the even-basis coordinates (x even).
Mat<FieldElement> left_multiplication_even(const CliffordElement& x);

// J = (x . y) / (-s) for a valid period; J^2 = -1. InvalidPeriod when the
// period invariants fail against this algebra's Gram matrix.
CliffordElement kuga_satake_J(const AlgebraPtr& alg, const PeriodData& P);

struct KSStructure {
    AlgebraPtr alg;
    PeriodData plane;
    CliffordElement J;
};

// Algebra over the period's field K with psi's Gram, plus its complex structure.
KSStructure make_ks(const quadform::QBilinearForm& psi, const PeriodData& P);

// c -> a c + b (J c) for a rational point a + bi on the unit circle.
Mat<FieldElement> weight_one_action(const KSStructure& ks, const QQ& a, const QQ& b);

struct RiemannForm {
    Mat<FieldElement> gram; // on the even basis
    int sign;               // the sign choice that passed
};

// E(u, v) = sign * tr(a iota(u) v) with a = e1 e2 for a psi-orthogonal pair of
// negative vectors (the polarization convention here negates the cup product,
// so the cited construction's positive pair becomes a negative one); verified
// alternating, J-invariant, and E(., J.) positive definite before returning.
// Tries the given sign first (0 = try both).
// Errors: BadSeed, NoValidSign. Generator count capped at 8.
RiemannForm riemann_form(const KSStructure& ks, const std::vector<QQ>& e1,
                         const std::vector<QQ>& e2, int sign = 0);

// A rational psi-orthogonal pair spanning a negative-definite plane, read off
// the exact diagonalization of psi; valid seed vectors for riemann_form.
std::pair<std::vector<QQ>, std::vector<QQ>> default_riemann_seeds(
    const quadform::QBilinearForm& psi);

} // namespace cliffordks
} // namespace rmks
