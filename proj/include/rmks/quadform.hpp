#pragma once

#include <utility>
#include <vector>

#include "rmks/numfield.hpp"

namespace rmks {
namespace quadform {

using numfield::Embedding;
using numfield::FieldElement;
using numfield::FieldPtr;

// Symmetric bilinear form over Q, identified with its Gram matrix.
struct QBilinearForm {
    Mat<QQ> gram;

    size_t rank() const { return gram.rows(); }
    QQ eval(const std::vector<QQ>& v, const std::vector<QQ>& w) const;
};

QBilinearForm make_qform(Mat<QQ> gram); // validates symmetry

// Symmetric bilinear form over a number field K, with the designated real
// embedding used for sign evaluations.
struct KBilinearForm {
    Mat<FieldElement> gram;
    Embedding emb;

    size_t rank() const { return gram.rows(); }
    FieldElement eval(const std::vector<FieldElement>& v,
                      const std::vector<FieldElement>& w) const;
};

KBilinearForm make_kform(Mat<FieldElement> gram, Embedding emb);

template <class T>
struct Diagonalization {
    std::vector<T> diag;
    Mat<T> basis; // transpose(basis) * gram * basis is diagonal
};

// Exact symmetric Gaussian congruence. Degenerate forms yield zero diagonal
// entries. Zero-diagonal pivots are handled by the u -> u+v transformation.
Diagonalization<QQ> diagonalize(const QBilinearForm& f);
Diagonalization<FieldElement> diagonalize(const KBilinearForm& f);

using Signature = std::pair<int, int>; // (positives, negatives)

Signature signature(const QBilinearForm& f);                        // Degenerate on 0 entry
Signature signature(const KBilinearForm& f);                        // at f.emb
Signature signature(const KBilinearForm& f, const Embedding& emb);

QQ det_gram(const QBilinearForm& f);
ZZ det_square_class(const QBilinearForm& f); // Degenerate on det 0

QBilinearForm direct_sum(const std::vector<QBilinearForm>& parts);

// true iff transpose(B) * G1 * B == G2 exactly and B is invertible.
bool verify_isometry(const QBilinearForm& f1, const QBilinearForm& f2, const Mat<QQ>& B);
bool verify_isometry(const KBilinearForm& f1, const KBilinearForm& f2,
                     const Mat<FieldElement>& B);

// Named fixtures: "U", "U2", "E8minus", "LambdaK3", "minus2".
Mat<QQ> fixture_gram(const std::string& name);

QBilinearForm negate(const QBilinearForm& f);

} // namespace quadform
} // namespace rmks
