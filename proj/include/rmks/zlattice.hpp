#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rmks/matrix.hpp"
#include "rmks/rational.hpp"

namespace rmks {
namespace zlattice {

struct IntegerLattice {
    Mat<ZZ> gram; // symmetric

    size_t rank() const { return gram.rows(); }
    bool is_even() const;
};

IntegerLattice make_lattice(Mat<ZZ> gram); // validates symmetry

// Fixtures: "U", "U2", "E8minus", "LambdaK3", "minus2".
IntegerLattice fixture(const std::string& name);

struct SNF {
    Mat<ZZ> U, D, V; // D = U * M * V, U and V unimodular, d1 | d2 | ...
};

SNF smith_normal_form(const Mat<ZZ>& M);

std::vector<ZZ> invariant_factors(const Mat<ZZ>& M); // nonzero diagonal of the SNF

// Rows of B are the images of a basis of T inside the ambient lattice L.
// GramMismatch when B * G_L * B^t != G_T; otherwise true iff the quotient is
// torsion-free (all invariant factors of B are 1).
bool is_primitive_embedding(const Mat<ZZ>& B, const IntegerLattice& ambient,
                            const IntegerLattice& T);

// Saturated integer kernel of v -> G * S^t * v; rows of the result are a basis
// of the orthogonal complement of the sublattice spanned by the rows of S.
Mat<ZZ> orthogonal_complement(const IntegerLattice& L, const Mat<ZZ>& S);

ZZ discriminant_group_order(const IntegerLattice& L); // Degenerate on det 0

// Best-effort bounded search for an isometric embedding of T into L with
// coefficients in [-bound, bound]; returns the row matrix B on success.
// Failure is not a proof of non-existence.
std::optional<Mat<ZZ>> search_embedding(const IntegerLattice& T, const IntegerLattice& L,
                                        long bound = 2);

} // namespace zlattice
} // namespace rmks
