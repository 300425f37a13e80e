#include "rmks/quadform.hpp"

#include "rmks/zlattice.hpp"

namespace rmks {
namespace quadform {

using numfield::sign_at;

QQ QBilinearForm::eval(const std::vector<QQ>& v, const std::vector<QQ>& w) const {
    auto gw = gram.apply(w);
    QQ acc(0);
    for (size_t i = 0; i < v.size(); ++i) acc += v[i] * gw[i];
    return acc;
}

FieldElement KBilinearForm::eval(const std::vector<FieldElement>& v,
                                 const std::vector<FieldElement>& w) const {
    auto gw = gram.apply(w);
    FieldElement acc = zero_like(gram.at(0, 0));
    for (size_t i = 0; i < v.size(); ++i) acc += v[i] * gw[i];
    return acc;
}

template <class T>
static void require_symmetric(const Mat<T>& g) {
    if (g.rows() != g.cols()) throw Error("ShapeMismatch", "Gram matrix is not square");
    for (size_t i = 0; i < g.rows(); ++i)
        for (size_t j = i + 1; j < g.cols(); ++j)
            if (!(g.at(i, j) == g.at(j, i)))
                throw Error("NotSymmetric", "Gram matrix is not symmetric");
}

QBilinearForm make_qform(Mat<QQ> gram) {
    require_symmetric(gram);
    return QBilinearForm{std::move(gram)};
}

KBilinearForm make_kform(Mat<FieldElement> gram, Embedding emb) {
    require_symmetric(gram);
    return KBilinearForm{std::move(gram), std::move(emb)};
}

namespace {

template <class T>
ZZ entry_height(const T& x);

template <>
ZZ entry_height<QQ>(const QQ& x) { return rational_height(x); }

template <>
ZZ entry_height<FieldElement>(const FieldElement& x) {
    ZZ h(0);
    for (const auto& c : x.coords()) {
        ZZ hc = rational_height(c);
        if (hc > h) h = hc;
    }
    return h;
}

// Symmetric Gaussian congruence, pivoting on the largest-height nonzero
// diagonal entry of the remaining block.
template <class T>
Diagonalization<T> diagonalize_impl(Mat<T> g) {
    using rmks::entry_is_zero;
    using numfield::entry_is_zero;
    const size_t n = g.rows();
    if (n == 0) return {{}, Mat<T>()};
    const T zero = zero_like(g.at(0, 0));
    const T one = one_like(g.at(0, 0));
    Mat<T> b = Mat<T>::identity(n, one, zero);

    auto add_col_row = [&](size_t dst, size_t src, const T& f) {
        // column operation on g and b, then matching row operation on g
        for (size_t i = 0; i < n; ++i) g.at(i, dst) += f * g.at(i, src);
        for (size_t i = 0; i < n; ++i) b.at(i, dst) += f * b.at(i, src);
        for (size_t j = 0; j < n; ++j) g.at(dst, j) += f * g.at(src, j);
    };
    auto swap_basis = [&](size_t a, size_t c) {
        g.swap_cols(a, c);
        g.swap_rows(a, c);
        b.swap_cols(a, c);
    };

    for (size_t k = 0; k < n; ++k) {
        size_t piv = n;
        ZZ best(-1);
        for (size_t i = k; i < n; ++i) {
            if (entry_is_zero(g.at(i, i))) continue;
            ZZ h = entry_height(g.at(i, i));
            if (piv == n || h > best) { piv = i; best = h; }
        }
        if (piv == n) {
            // all remaining diagonal entries are zero; couple a nonzero
            // off-diagonal pair if one exists
            size_t ci = n, cj = n;
            for (size_t i = k; i < n && ci == n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    if (!entry_is_zero(g.at(i, j))) { ci = i; cj = j; break; }
            if (ci == n) break; // remaining block is zero
            add_col_row(ci, cj, one); // u -> u + v gives diagonal 2*g_ij
            piv = ci;
        }
        if (piv != k) swap_basis(k, piv);
        for (size_t j = k + 1; j < n; ++j) {
            if (entry_is_zero(g.at(k, j))) continue;
            T f = -(g.at(k, j) / g.at(k, k));
            add_col_row(j, k, f);
        }
    }
    std::vector<T> d;
    d.reserve(n);
    for (size_t i = 0; i < n; ++i) d.push_back(g.at(i, i));
    return {std::move(d), std::move(b)};
}

} // namespace

Diagonalization<QQ> diagonalize(const QBilinearForm& f) { return diagonalize_impl(f.gram); }

Diagonalization<FieldElement> diagonalize(const KBilinearForm& f) {
    return diagonalize_impl(f.gram);
}

Signature signature(const QBilinearForm& f) {
    auto d = diagonalize(f);
    int p = 0, q = 0;
    for (const auto& x : d.diag) {
        int s = sign(x);
        if (s == 0) throw Error("Degenerate", "signature of a degenerate form");
        (s > 0 ? p : q)++;
    }
    return {p, q};
}

Signature signature(const KBilinearForm& f, const Embedding& emb) {
    auto d = diagonalize(f);
    int p = 0, q = 0;
    for (const auto& x : d.diag) {
        int s = sign_at(x, emb);
        if (s == 0) throw Error("Degenerate", "signature of a degenerate form");
        (s > 0 ? p : q)++;
    }
    return {p, q};
}

Signature signature(const KBilinearForm& f) { return signature(f, f.emb); }

QQ det_gram(const QBilinearForm& f) {
    if (f.rank() == 0) return QQ(1);
    return det(f.gram);
}

ZZ det_square_class(const QBilinearForm& f) {
    QQ d = det_gram(f);
    if (d == 0) throw Error("Degenerate", "determinant square class of a degenerate form");
    return numfield::square_class(d);
}

QBilinearForm direct_sum(const std::vector<QBilinearForm>& parts) {
    std::vector<Mat<QQ>> grams;
    grams.reserve(parts.size());
    for (const auto& p : parts) grams.push_back(p.gram);
    return QBilinearForm{block_diag(grams, QQ(0))};
}

bool verify_isometry(const QBilinearForm& f1, const QBilinearForm& f2, const Mat<QQ>& B) {
    if (B.rows() != f1.rank() || B.cols() != f2.rank() || f1.rank() != f2.rank())
        throw Error("ShapeMismatch", "isometry witness has wrong shape");
    if (f1.rank() == 0) return true;
    if (!is_invertible(B)) return false;
    return B.transpose() * f1.gram * B == f2.gram;
}

bool verify_isometry(const KBilinearForm& f1, const KBilinearForm& f2,
                     const Mat<FieldElement>& B) {
    if (B.rows() != f1.rank() || B.cols() != f2.rank() || f1.rank() != f2.rank())
        throw Error("ShapeMismatch", "isometry witness has wrong shape");
    if (f1.rank() == 0) return true;
    if (!is_invertible(B)) return false;
    return B.transpose() * f1.gram * B == f2.gram;
}

Mat<QQ> fixture_gram(const std::string& name) {
    Mat<ZZ> g = zlattice::fixture(name).gram;
    Mat<QQ> out(g.rows(), g.cols(), QQ(0));
    for (size_t i = 0; i < g.rows(); ++i)
        for (size_t j = 0; j < g.cols(); ++j) out.at(i, j) = QQ(g.at(i, j));
    return out;
}

QBilinearForm negate(const QBilinearForm& f) {
    return QBilinearForm{f.gram.scaled(QQ(-1))};
}

} // namespace quadform
} // namespace rmks
