#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "rmks/matrix.hpp"
#include "rmks/polynomial.hpp"
#include "rmks/rational.hpp"

namespace rmks {
namespace numfield {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Element of a number field, stored as exact rational coordinates on the
// power basis 1, alpha, ..., alpha^{n-1} (doubled by the sqrt layer when present:
// the second half holds the coordinates of the sqrt(c)-component).
class FieldElement {
public:
    FieldElement() = default; // invalid; throws on use
    FieldElement(FieldPtr field, std::vector<QQ> coords);

    bool valid() const { return field_ != nullptr; }
    const FieldPtr& field() const;
    const std::vector<QQ>& coords() const;

    bool is_zero() const;
    bool is_rational() const;
    QQ rational_value() const; // requires is_rational()

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement inverse() const;
    FieldElement scaled(const QQ& c) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    FieldPtr field_;
    std::vector<QQ> c_;
};

// Q[X]/(p) with isolated real roots; optionally extended by one quadratic
// layer sqrt(c) over the base (used by period construction, see rmhodge).
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    // p monic, squarefree, irreducible over Q. Irreducibility is decided by
    // rational-root exclusion (complete for degree <= 3); higher degree needs
    // attest_irreducible.
    static FieldPtr create(const QPoly& p, bool attest_irreducible = false);
    static FieldPtr rationals();                  // Q[X]/(X)
    static FieldPtr quadratic(const QQ& d);       // Q[X]/(X^2 - d)
    // Quadratic layer base(sqrt(c)); the designated embedding is the given base
    // root with sqrt(c) mapped to the positive square root. Requires c > 0 there.
    static FieldPtr with_sqrt(FieldPtr base, const FieldElement& radicand,
                              int designated_root);

    int base_degree() const { return min_poly_.degree(); }
    int dim() const { return base_degree() * (layered() ? 2 : 1); }
    const QPoly& min_poly() const { return min_poly_; }
    const std::vector<Interval>& real_roots() const { return roots_; }
    bool totally_real() const { return totally_real_; }

    bool layered() const { return base_ != nullptr; }
    const FieldPtr& layer_base() const { return base_; }
    const FieldElement& radicand() const;
    int designated_root() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_rational(const QQ& q) const;
    FieldElement gen() const;      // alpha
    FieldElement sqrt_gen() const; // sqrt(c); layered fields only
    FieldElement element(std::vector<QQ> coords) const;

    bool same_structure(const NumberField& o) const;

private:
    NumberField() = default;
    QPoly min_poly_;
    std::vector<Interval> roots_;
    bool totally_real_ = false;
    FieldPtr base_;                        // null unless layered
    std::optional<FieldElement> radicand_; // layered only
    int designated_root_ = -1;             // layered only

    friend class FieldElement;
    friend FieldElement mul_impl(const FieldElement&, const FieldElement&);
};

struct Embedding {
    FieldPtr field;
    int root_index = 0;
};

std::vector<Embedding> real_embeddings(const FieldPtr& F);

// --- operations ---

// Disjoint rational intervals, one per real root, sorted. NonSquarefree if
// gcd(p, p') is not constant.
std::vector<Interval> isolate_real_roots(const QPoly& p);

// Exact sign of sigma(a) by interval refinement (gcd test for exact zero).
int sign_at(const FieldElement& a, const Embedding& emb);

bool is_totally_positive(const FieldElement& a); // NotTotallyReal on non-real fields

Mat<QQ> multiplication_matrix(const FieldElement& a);
QQ trace(const FieldElement& a);
QQ norm(const FieldElement& a);
FieldElement pow_elem(FieldElement a, unsigned k);

struct SquareClassConfig {
    ZZ trial_bound = ZZ(1000000);
};

// Squarefree integer representative of q mod squares. FactorizationLimit if a
// cofactor above the trial-division bound remains.
ZZ square_class(const QQ& q, const SquareClassConfig& cfg = {});

// det(tr(e_i e_j)) for a Q-basis; SingularBasis when the coordinate matrix is
// not invertible.
QQ trace_gram_det(const FieldPtr& F, const std::vector<FieldElement>& basis);
ZZ field_discriminant(const FieldPtr& F, const std::vector<FieldElement>& basis);

// Nontrivial automorphism of a quadratic field (NotQuadratic otherwise).
FieldElement galois_conjugate(const FieldElement& a);

// Rational -> any field, base -> its layer, identity otherwise; FieldMismatch
// when no canonical lift exists.
FieldElement lift_to(const FieldElement& a, const FieldPtr& target);

// overloads picked up by the Mat<T> algorithms
inline bool entry_is_zero(const FieldElement& x) { return x.is_zero(); }
FieldElement one_like(const FieldElement& x);
FieldElement zero_like(const FieldElement& x);

Mat<FieldElement> lift_matrix(const Mat<QQ>& m, const FieldPtr& K);

} // namespace numfield
} // namespace rmks
