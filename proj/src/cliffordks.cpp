#include "rmks/cliffordks.hpp"

#include <bit>

namespace rmks {
namespace cliffordks {

using numfield::lift_matrix;
using numfield::sign_at;

// ---------------------------------------------------------------------------
// elements
// ---------------------------------------------------------------------------

CliffordElement::CliffordElement(AlgebraPtr alg, std::map<uint32_t, FieldElement> coeffs)
    : alg_(std::move(alg)), c_(std::move(coeffs)) {
    for (auto it = c_.begin(); it != c_.end();)
        it = it->second.is_zero() ? c_.erase(it) : std::next(it);
}

const AlgebraPtr& CliffordElement::algebra() const {
    if (!alg_) throw Error("InvalidElement", "use of default-constructed Clifford element");
    return alg_;
}

bool CliffordElement::is_even() const {
    for (const auto& [m, c] : c_)
        if (std::popcount(m) % 2) return false;
    return true;
}

static void require_same_algebra(const CliffordElement& a, const CliffordElement& b) {
    if (!a.algebra()->same_algebra(*b.algebra()))
        throw Error("AlgebraMismatch", "elements of different Clifford algebras");
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
    require_same_algebra(*this, o);
    auto out = c_;
    for (const auto& [m, c] : o.c_) {
        auto it = out.find(m);
        if (it == out.end()) out.emplace(m, c);
        else it->second += c;
    }
    return CliffordElement(alg_, std::move(out));
}

CliffordElement CliffordElement::operator-() const {
    auto out = c_;
    for (auto& [m, c] : out) c = -c;
    return CliffordElement(alg_, std::move(out));
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
    return *this + (-o);
}

CliffordElement CliffordElement::scaled(const FieldElement& f) const {
    auto out = c_;
    for (auto& [m, c] : out) c = c * f;
    return CliffordElement(alg_, std::move(out));
}

CliffordElement CliffordElement::operator*(const CliffordElement& o) const {
    require_same_algebra(*this, o);
    std::map<uint32_t, FieldElement> out;
    for (const auto& [s, cs] : c_)
        for (const auto& [t, ct] : o.c_) {
            FieldElement f = cs * ct;
            for (const auto& [m, c] : alg_->mul_monomial(s, t)) {
                FieldElement v = f * c;
                auto it = out.find(m);
                if (it == out.end()) out.emplace(m, std::move(v));
                else it->second += v;
            }
        }
    return CliffordElement(alg_, std::move(out));
}

bool CliffordElement::operator==(const CliffordElement& o) const {
    return algebra()->same_algebra(*o.algebra()) && c_ == o.c_;
}

// ---------------------------------------------------------------------------
// algebra
// ---------------------------------------------------------------------------

AlgebraPtr CliffordAlgebra::create(Mat<FieldElement> gram, Embedding emb) {
    if (gram.rows() != gram.cols() || gram.rows() == 0)
        throw Error("ShapeMismatch", "Clifford Gram matrix must be square and nonempty");
    if (gram.rows() > 12)
        throw Error("TooLarge", "Clifford algebras are capped at 12 generators");
    for (size_t i = 0; i < gram.rows(); ++i)
        for (size_t j = i + 1; j < gram.cols(); ++j)
            if (!(gram.at(i, j) == gram.at(j, i)))
                throw Error("NotSymmetric", "Clifford Gram matrix is not symmetric");
    auto alg = std::shared_ptr<CliffordAlgebra>(new CliffordAlgebra());
    alg->K_ = gram.at(0, 0).field();
    alg->emb_ = std::move(emb);
    alg->gram_ = std::move(gram);
    alg->d_ = static_cast<int>(alg->gram_.rows());
    const int d = alg->d_;
    const FieldElement two = alg->K_->from_rational(QQ(2));

    // e_mask * e_t, masks in increasing order so the recursion is resolved
    alg->gen_table_.resize((size_t(1) << d) * d);
    for (uint32_t mask = 0; mask < (uint32_t(1) << d); ++mask)
        for (int t = 0; t < d; ++t) {
            std::map<uint32_t, FieldElement>& out = alg->gen_table_[size_t(mask) * d + t];
            if (mask == 0 || 31 - std::countl_zero(mask) < t) {
                out.emplace(mask | (uint32_t(1) << t), alg->K_->one());
                continue;
            }
            int u = 31 - std::countl_zero(mask); // highest generator in the monomial
            uint32_t rest = mask ^ (uint32_t(1) << u);
            if (u == t) {
                if (!alg->gram_.at(t, t).is_zero()) out.emplace(rest, alg->gram_.at(t, t));
                continue;
            }
            // e_rest e_u e_t = 2 g_ut e_rest - (e_rest e_t) e_u
            FieldElement g2 = two * alg->gram_.at(u, t);
            if (!g2.is_zero()) out.emplace(rest, g2);
            for (const auto& [m, c] : alg->gen_table_[size_t(rest) * d + t]) {
                uint32_t lifted = m | (uint32_t(1) << u); // all of m's bits are below u
                auto it = out.find(lifted);
                if (it == out.end()) out.emplace(lifted, -c);
                else {
                    it->second -= c;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }

    alg->even_index_.assign(size_t(1) << d, SIZE_MAX);
    for (uint32_t mask = 0; mask < (uint32_t(1) << d); ++mask)
        if (std::popcount(mask) % 2 == 0) {
            alg->even_index_[mask] = alg->even_masks_.size();
            alg->even_masks_.push_back(mask);
        }
    return alg;
}

AlgebraPtr CliffordAlgebra::over_field(const quadform::QBilinearForm& psi, const FieldPtr& K,
                                       int root_index) {
    return create(lift_matrix(psi.gram, K), Embedding{K, root_index});
}

std::map<uint32_t, FieldElement> CliffordAlgebra::mul_monomial(uint32_t s, uint32_t t) const {
    std::map<uint32_t, FieldElement> acc;
    acc.emplace(s, K_->one());
    for (int bit = 0; bit < d_; ++bit) {
        if (!((t >> bit) & 1)) continue;
        std::map<uint32_t, FieldElement> next;
        for (const auto& [m, c] : acc)
            for (const auto& [m2, c2] : gen_table_[size_t(m) * d_ + bit]) {
                FieldElement v = c * c2;
                auto it = next.find(m2);
                if (it == next.end()) next.emplace(m2, std::move(v));
                else {
                    it->second += v;
                    if (it->second.is_zero()) next.erase(it);
                }
            }
        acc = std::move(next);
    }
    return acc;
}

CliffordElement CliffordAlgebra::zero() const {
    return CliffordElement(shared_from_this(), {});
}

CliffordElement CliffordAlgebra::one() const { return scalar(K_->one()); }

CliffordElement CliffordAlgebra::scalar(const FieldElement& c) const {
    return monomial(0, c);
}

CliffordElement CliffordAlgebra::monomial(uint32_t mask, const FieldElement& c) const {
    if (mask >= dim()) throw Error("ShapeMismatch", "monomial mask out of range");
    std::map<uint32_t, FieldElement> m;
    m.emplace(mask, c);
    return CliffordElement(shared_from_this(), std::move(m));
}

CliffordElement CliffordAlgebra::generator(int i) const {
    if (i < 0 || i >= d_) throw Error("ShapeMismatch", "generator index out of range");
    return monomial(uint32_t(1) << i, K_->one());
}

CliffordElement CliffordAlgebra::from_vector(const std::vector<FieldElement>& v) const {
    if (static_cast<int>(v.size()) != d_)
        throw Error("ShapeMismatch", "vector length must match generator count");
    std::map<uint32_t, FieldElement> m;
    for (int i = 0; i < d_; ++i)
        if (!v[i].is_zero()) m.emplace(uint32_t(1) << i, v[i]);
    return CliffordElement(shared_from_this(), std::move(m));
}

size_t CliffordAlgebra::even_index(uint32_t mask) const {
    size_t i = even_index_.at(mask);
    if (i == SIZE_MAX) throw Error("ShapeMismatch", "mask is not even");
    return i;
}

bool CliffordAlgebra::same_algebra(const CliffordAlgebra& o) const {
    if (this == &o) return true;
    return d_ == o.d_ && K_->same_structure(*o.K_) && gram_ == o.gram_;
}

// ---------------------------------------------------------------------------
// derived maps
// ---------------------------------------------------------------------------

CliffordElement reversal(const CliffordElement& x) {
    const auto& alg = x.algebra();
    CliffordElement out = alg->zero();
    for (const auto& [mask, c] : x.coeffs()) {
        CliffordElement term = alg->scalar(c);
        for (int bit = alg->generators() - 1; bit >= 0; --bit)
            if ((mask >> bit) & 1) term = term * alg->generator(bit);
        out = out + term;
    }
    return out;
}

FieldElement trace_even(const CliffordElement& x) {
    const auto& alg = x.algebra();
    if (!x.is_even()) throw Error("ShapeMismatch", "trace_even needs an even element");
    FieldElement acc = alg->field()->zero();
    for (uint32_t basis_mask : alg->even_basis()) {
        for (const auto& [m, c] : x.coeffs()) {
            auto prod = alg->mul_monomial(m, basis_mask);
            auto it = prod.find(basis_mask);
            if (it != prod.end()) acc += c * it->second;
        }
    }
    return acc;
}

Mat<FieldElement> left_multiplication_even(const CliffordElement& x) {
    const auto& alg = x.algebra();
    if (!x.is_even()) throw Error("ShapeMismatch", "need an even element");
    const auto& basis = alg->even_basis();
    Mat<FieldElement> M(basis.size(), basis.size(), alg->field()->zero());
    for (size_t j = 0; j < basis.size(); ++j) {
        CliffordElement img = x * alg->monomial(basis[j], alg->field()->one());
        for (const auto& [m, c] : img.coeffs()) M.at(alg->even_index(m), j) = c;
    }
    return M;
}

CliffordElement kuga_satake_J(const AlgebraPtr& alg, const PeriodData& P) {
    const int d = alg->generators();
    if (static_cast<int>(P.x.size()) != d)
        throw Error("ShapeMismatch", "period length does not match generator count");
    if (!alg->field()->same_structure(*P.K))
        throw Error("FieldMismatch", "period lives over a different field");
    auto form = [&](const std::vector<FieldElement>& v, const std::vector<FieldElement>& w) {
        auto gw = alg->gram().apply(w);
        FieldElement acc = alg->field()->zero();
        for (int i = 0; i < d; ++i) acc += v[i] * gw[i];
        return acc;
    };
    FieldElement sx = form(P.x, P.x), sy = form(P.y, P.y), sxy = form(P.x, P.y);
    if (!(sx == sy) || !sxy.is_zero() || sign_at(sx, alg->embedding()) != -1)
        throw Error("InvalidPeriod", "period invariants fail against this Gram matrix");
    CliffordElement J =
        (alg->from_vector(P.x) * alg->from_vector(P.y)).scaled((-sx).inverse());
    CliffordElement j2 = J * J;
    if (!(j2 == -alg->one()))
        throw Error("InvalidPeriod", "J^2 != -1 (defect)");
    return J;
}

KSStructure make_ks(const quadform::QBilinearForm& psi, const PeriodData& P) {
    AlgebraPtr alg = CliffordAlgebra::over_field(psi, P.K, P.emb.root_index);
    CliffordElement J = kuga_satake_J(alg, P);
    return KSStructure{std::move(alg), P, std::move(J)};
}

Mat<FieldElement> weight_one_action(const KSStructure& ks, const QQ& a, const QQ& b) {
    if (a * a + b * b != 1)
        throw Error("NotOnCircle", "need a^2 + b^2 = 1");
    const auto& K = ks.alg->field();
    Mat<FieldElement> M = left_multiplication_even(ks.J).scaled(K->from_rational(b));
    for (size_t i = 0; i < M.rows(); ++i) M.at(i, i) += K->from_rational(a);
    return M;
}

// ---------------------------------------------------------------------------
// Riemann form
// ---------------------------------------------------------------------------

namespace {

bool is_alternating(const Mat<FieldElement>& E) {
    for (size_t i = 0; i < E.rows(); ++i) {
        if (!E.at(i, i).is_zero()) return false;
        for (size_t j = i + 1; j < E.cols(); ++j)
            if (!(E.at(i, j) == -E.at(j, i))) return false;
    }
    return true;
}

bool is_symmetric(const Mat<FieldElement>& M) {
    for (size_t i = 0; i < M.rows(); ++i)
        for (size_t j = i + 1; j < M.cols(); ++j)
            if (!(M.at(i, j) == M.at(j, i))) return false;
    return true;
}

} // namespace

RiemannForm riemann_form(const KSStructure& ks, const std::vector<QQ>& e1,
                         const std::vector<QQ>& e2, int sign_choice) {
    const auto& alg = ks.alg;
    const int d = alg->generators();
    if (d > 8)
        throw Error("TooLarge", "Riemann-form verification is capped at 8 generators");
    if (static_cast<int>(e1.size()) != d || static_cast<int>(e2.size()) != d)
        throw Error("ShapeMismatch", "seed vectors have wrong length");
    const auto& K = alg->field();
    auto lift = [&](const std::vector<QQ>& v) {
        std::vector<FieldElement> out;
        out.reserve(v.size());
        for (const auto& q : v) out.push_back(K->from_rational(q));
        return out;
    };
    auto le1 = lift(e1), le2 = lift(e2);
    auto form = [&](const std::vector<FieldElement>& v, const std::vector<FieldElement>& w) {
        auto gw = alg->gram().apply(w);
        FieldElement acc = K->zero();
        for (int i = 0; i < d; ++i) acc += v[i] * gw[i];
        return acc;
    };
    const auto& emb = alg->embedding();
    if (sign_at(form(le1, le1), emb) != -1 || sign_at(form(le2, le2), emb) != -1 ||
        !form(le1, le2).is_zero())
        throw Error("BadSeed",
                    "need an orthogonal pair with psi(e1,e1) < 0 and psi(e2,e2) < 0 "
                    "(negative plane in the -cup convention)");

    CliffordElement a = alg->from_vector(le1) * alg->from_vector(le2);
    const auto& basis = alg->even_basis();
    const size_t n = basis.size();

    // trace functional on the even basis
    std::vector<FieldElement> tau;
    tau.reserve(n);
    for (uint32_t u : basis) {
        FieldElement acc = K->zero();
        for (uint32_t s : basis) {
            auto prod = alg->mul_monomial(u, s);
            auto it = prod.find(s);
            if (it != prod.end()) acc += it->second;
        }
        tau.push_back(acc);
    }
    auto tau_of = [&](const CliffordElement& z) {
        FieldElement acc = K->zero();
        for (const auto& [m, c] : z.coeffs()) acc += c * tau[alg->even_index(m)];
        return acc;
    };

    Mat<FieldElement> E(n, n, K->zero());
    for (size_t i = 0; i < n; ++i) {
        CliffordElement w = a * reversal(alg->monomial(basis[i], K->one()));
        for (size_t j = 0; j < n; ++j)
            E.at(i, j) = tau_of(w * alg->monomial(basis[j], K->one()));
    }

    Mat<FieldElement> MJ = left_multiplication_even(ks.J);
    auto passes = [&](const Mat<FieldElement>& cand) {
        if (!is_alternating(cand)) return false;
        if (!(MJ.transpose() * cand * MJ == cand)) return false;
        Mat<FieldElement> sym = cand * MJ; // E(., J.)
        if (!is_symmetric(sym)) return false;
        try {
            return quadform::signature(quadform::make_kform(std::move(sym), emb)) ==
                   quadform::Signature{static_cast<int>(n), 0};
        } catch (const Error& e) {
            if (e.code() == "Degenerate") return false;
            throw;
        }
    };

    std::vector<int> signs = sign_choice == 0 ? std::vector<int>{1, -1}
                                              : std::vector<int>{sign_choice, -sign_choice};
    for (int s : signs) {
        Mat<FieldElement> cand = s == 1 ? E : E.scaled(K->from_rational(QQ(-1)));
        if (passes(cand)) return RiemannForm{std::move(cand), s};
    }
    throw Error("NoValidSign", "neither sign satisfies the Riemann-form contract");
}

std::pair<std::vector<QQ>, std::vector<QQ>> default_riemann_seeds(
    const quadform::QBilinearForm& psi) {
    auto d = quadform::diagonalize(psi);
    std::vector<size_t> neg;
    for (size_t i = 0; i < d.diag.size(); ++i)
        if (sign(d.diag[i]) < 0) neg.push_back(i);
    if (neg.size() < 2)
        throw Error("BadSeed", "form has no rational negative plane");
    auto col = [&](size_t j) {
        std::vector<QQ> v;
        v.reserve(psi.rank());
        for (size_t i = 0; i < psi.rank(); ++i) v.push_back(d.basis.at(i, j));
        return v;
    };
    return {col(neg[0]), col(neg[1])};
}

} // namespace cliffordks
} // namespace rmks
