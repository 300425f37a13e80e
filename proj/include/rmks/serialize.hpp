#pragma once

#include <json.hpp>

#include "rmks/cliffordks.hpp"
#include "rmks/rmhodge.hpp"
#include "rmks/spinbranch.hpp"
#include "rmks/zlattice.hpp"

namespace rmks {
namespace serialize {

using json = nlohmann::json;

json to_json(const QQ& q);
QQ qq_from_json(const json& j);

json to_json(const Mat<QQ>& m);
Mat<QQ> qmat_from_json(const json& j);
json to_json(const Mat<ZZ>& m);
Mat<ZZ> zmat_from_json(const json& j);

// {"min_poly": ["c0", ...], "roots": [["lo","hi"], ...]} with the optional
// quadratic layer in "sqrt_of"/"base_root". Roots are re-derived on load.
json to_json(const numfield::FieldPtr& F);
numfield::FieldPtr field_from_json(const json& j);

json to_json(const numfield::FieldElement& e); // coordinate array
numfield::FieldElement element_from_json(const json& j, const numfield::FieldPtr& F);

// {"field": ..., "m": m, "action": [...], "psi": [...]}
json to_json(const rmhodge::RMStructure& S);
rmhodge::RMStructure structure_from_json(const json& j);

// {"field": ..., "root_index": i, "x": [...], "y": [...]}; validated against psi
json to_json(const rmhodge::PeriodData& P);
rmhodge::PeriodData period_from_json(const json& j, const quadform::QBilinearForm& psi);

// sorted [{"weight": [...], "mult": k}, ...]
json to_json(const spinbranch::WeightMultiset& W);
spinbranch::WeightMultiset multiset_from_json(const json& j);

// {"<subset bitmask>": coefficient array, ...}
json to_json(const cliffordks::CliffordElement& x);

// Gram matrix from explicit rows, a fixture name, or "diag(...)" shorthand.
Mat<QQ> gram_from_json(const json& j);

} // namespace serialize
} // namespace rmks
