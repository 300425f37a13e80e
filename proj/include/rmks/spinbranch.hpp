#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rmks/error.hpp"

namespace rmks {
namespace spinbranch {

// Character of a representation as a finite multiset of integer weight
// vectors. Weights are stored doubled so the half-integer spin weights become
// integers; for sl(2)^k factors the doubled convention coincides with the
// usual integer labels (V_n has weights n, n-2, ..., -n).
struct WeightMultiset {
    int rank = 0;
    std::map<std::vector<int>, long long> weights;

    long long dim() const;
    bool operator==(const WeightMultiset& o) const {
        return rank == o.rank && weights == o.weights;
    }
    WeightMultiset& add(const std::vector<int>& w, long long mult);
};

// Weights of the spin representation S(N) of so(N): all sign vectors of
// length floor(N/2) in the doubled convention. For even N the total spin
// representation; spin_weights_pm splits it into S+/S- by sign parity.
WeightMultiset spin_weights(int N);
std::pair<WeightMultiset, WeightMultiset> spin_weights_pm(int N); // even N only

// Restriction along the rank regrouping so(nm) -> so(m)^n: coordinates are
// grouped into n blocks of floor(m/2); for odd m the floor(n/2) trailing
// coordinates vanish on the subalgebra's Cartan algebra and are dropped,
// accumulating multiplicity.
WeightMultiset restrict_to_product(const WeightMultiset& W, int m, int n);

// External product: the two factors act on different tensor slots.
WeightMultiset box(const WeightMultiset& a, const WeightMultiset& b);

// Internal operations for representations of one algebra (equal ranks).
WeightMultiset tensor(const WeightMultiset& a, const WeightMultiset& b);
WeightMultiset wedge2(const WeightMultiset& W);
WeightMultiset sym2(const WeightMultiset& W);

WeightMultiset direct_sum(const WeightMultiset& a, const WeightMultiset& b);
WeightMultiset scale(const WeightMultiset& W, long long k);

// Character of V_{h1} x ... x V_{hk} for sl(2)^k (doubled highest weights).
WeightMultiset sl2k_irrep(const std::vector<int>& highest);

// Greedy highest-weight stripping of an sl(2)^k character into irreducibles;
// NotACharacter when a multiplicity goes negative or symmetry fails.
std::vector<std::pair<std::vector<int>, long long>> decompose_sl2k(const WeightMultiset& W);

} // namespace spinbranch
} // namespace rmks
