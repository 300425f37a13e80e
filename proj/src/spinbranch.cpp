#include "rmks/spinbranch.hpp"

#include <algorithm>

namespace rmks {
namespace spinbranch {

long long WeightMultiset::dim() const {
    long long d = 0;
    for (const auto& [w, m] : weights) d += m;
    return d;
}

WeightMultiset& WeightMultiset::add(const std::vector<int>& w, long long mult) {
    if (static_cast<int>(w.size()) != rank)
        throw Error("RankMismatch", "weight vector length does not match rank");
    auto it = weights.find(w);
    if (it == weights.end()) {
        if (mult < 0) throw Error("NotACharacter", "negative multiplicity");
        if (mult != 0) weights.emplace(w, mult);
        return *this;
    }
    it->second += mult;
    if (it->second == 0) weights.erase(it);
    else if (it->second < 0) throw Error("NotACharacter", "negative multiplicity");
    return *this;
}

WeightMultiset spin_weights(int N) {
    if (N < 2) throw Error("RankMismatch", "spin representation needs N >= 2");
    int r = N / 2;
    WeightMultiset out;
    out.rank = r;
    std::vector<int> w(r, -1);
    for (long long mask = 0; mask < (1LL << r); ++mask) {
        for (int i = 0; i < r; ++i) w[i] = (mask >> i) & 1 ? 1 : -1;
        out.add(w, 1);
    }
    return out;
}

std::pair<WeightMultiset, WeightMultiset> spin_weights_pm(int N) {
    if (N < 2 || N % 2 != 0)
        throw Error("RankMismatch", "S+/S- split needs even N");
    int r = N / 2;
    WeightMultiset plus, minus;
    plus.rank = minus.rank = r;
    std::vector<int> w(r, -1);
    for (long long mask = 0; mask < (1LL << r); ++mask) {
        int negatives = 0;
        for (int i = 0; i < r; ++i) {
            w[i] = (mask >> i) & 1 ? 1 : -1;
            if (w[i] < 0) ++negatives;
        }
        (negatives % 2 == 0 ? plus : minus).add(w, 1);
    }
    return {plus, minus};
}

WeightMultiset restrict_to_product(const WeightMultiset& W, int m, int n) {
    if (m < 2 || n < 1) throw Error("RankMismatch", "need m >= 2 and n >= 1");
    int expected_rank = (n * m) / 2;
    if (W.rank != expected_rank)
        throw Error("RankMismatch", "multiset rank does not match floor(nm/2)");
    int block = m / 2;
    int kept = n * block; // trailing W.rank - kept coordinates are dropped
    WeightMultiset out;
    out.rank = kept;
    for (const auto& [w, mult] : W.weights)
        out.add(std::vector<int>(w.begin(), w.begin() + kept), mult);
    return out;
}

WeightMultiset box(const WeightMultiset& a, const WeightMultiset& b) {
    WeightMultiset out;
    out.rank = a.rank + b.rank;
    for (const auto& [wa, ma] : a.weights)
        for (const auto& [wb, mb] : b.weights) {
            std::vector<int> w(wa);
            w.insert(w.end(), wb.begin(), wb.end());
            out.add(w, ma * mb);
        }
    return out;
}

WeightMultiset tensor(const WeightMultiset& a, const WeightMultiset& b) {
    if (a.rank != b.rank) throw Error("RankMismatch", "tensor factors have different ranks");
    WeightMultiset out;
    out.rank = a.rank;
    for (const auto& [wa, ma] : a.weights)
        for (const auto& [wb, mb] : b.weights) {
            std::vector<int> w(wa);
            for (int i = 0; i < a.rank; ++i) w[i] += wb[i];
            out.add(w, ma * mb);
        }
    return out;
}

namespace {

// ordered-basis realization: the multiset expanded to a list
std::vector<std::vector<int>> expand(const WeightMultiset& W) {
    std::vector<std::vector<int>> basis;
    basis.reserve(W.dim());
    for (const auto& [w, m] : W.weights)
        for (long long i = 0; i < m; ++i) basis.push_back(w);
    return basis;
}

std::vector<int> vec_sum(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> s(a);
    for (size_t i = 0; i < s.size(); ++i) s[i] += b[i];
    return s;
}

} // namespace

WeightMultiset wedge2(const WeightMultiset& W) {
    auto basis = expand(W);
    WeightMultiset out;
    out.rank = W.rank;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) out.add(vec_sum(basis[i], basis[j]), 1);
    return out;
}

WeightMultiset sym2(const WeightMultiset& W) {
    auto basis = expand(W);
    WeightMultiset out;
    out.rank = W.rank;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i; j < basis.size(); ++j) out.add(vec_sum(basis[i], basis[j]), 1);
    return out;
}

WeightMultiset direct_sum(const WeightMultiset& a, const WeightMultiset& b) {
    if (a.rank != b.rank) throw Error("RankMismatch", "summands have different ranks");
    WeightMultiset out(a);
    for (const auto& [w, m] : b.weights) out.add(w, m);
    return out;
}

WeightMultiset scale(const WeightMultiset& W, long long k) {
    WeightMultiset out;
    out.rank = W.rank;
    for (const auto& [w, m] : W.weights) out.add(w, m * k);
    return out;
}

WeightMultiset sl2k_irrep(const std::vector<int>& highest) {
    WeightMultiset out;
    out.rank = static_cast<int>(highest.size());
    std::vector<int> w(highest.size());
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == highest.size()) {
            out.add(w, 1);
            return;
        }
        if (highest[pos] < 0) throw Error("NotACharacter", "negative highest weight");
        for (int v = -highest[pos]; v <= highest[pos]; v += 2) {
            w[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<std::pair<std::vector<int>, long long>> decompose_sl2k(const WeightMultiset& W) {
    // a genuine character is symmetric under coordinate-wise negation
    for (const auto& [w, m] : W.weights) {
        std::vector<int> neg(w);
        for (auto& x : neg) x = -x;
        auto it = W.weights.find(neg);
        if (it == W.weights.end() || it->second != m)
            throw Error("NotACharacter", "multiset is not negation-symmetric");
    }
    WeightMultiset rest(W);
    std::vector<std::pair<std::vector<int>, long long>> out;
    while (!rest.weights.empty()) {
        // lexicographically largest weight is a highest weight
        auto it = std::prev(rest.weights.end());
        std::vector<int> hw = it->first;
        long long mult = it->second;
        for (int x : hw)
            if (x < 0) throw Error("NotACharacter", "lex-largest weight is not dominant");
        WeightMultiset piece = scale(sl2k_irrep(hw), mult);
        for (const auto& [w, m] : piece.weights) rest.add(w, -m); // throws if negative
        out.push_back({hw, mult});
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace spinbranch
} // namespace rmks
