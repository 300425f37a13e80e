#include "rmks/zlattice.hpp"

#include <functional>

namespace rmks {
namespace zlattice {

bool IntegerLattice::is_even() const {
    for (size_t i = 0; i < gram.rows(); ++i)
        if (gram.at(i, i) % 2 != 0) return false;
    return true;
}

IntegerLattice make_lattice(Mat<ZZ> gram) {
    if (gram.rows() != gram.cols()) throw Error("ShapeMismatch", "Gram matrix is not square");
    for (size_t i = 0; i < gram.rows(); ++i)
        for (size_t j = i + 1; j < gram.cols(); ++j)
            if (gram.at(i, j) != gram.at(j, i))
                throw Error("NotSymmetric", "Gram matrix is not symmetric");
    return IntegerLattice{std::move(gram)};
}

namespace {

Mat<ZZ> from_rows(const std::vector<std::vector<long>>& rows) {
    Mat<ZZ> m(rows.size(), rows.empty() ? 0 : rows[0].size(), ZZ(0));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

// E8 root lattice Gram in a simple-root basis (Bourbaki numbering: the chain
// 1-3-4-5-6-7-8 with node 2 attached to 4); even, positive definite, det 1.
Mat<ZZ> e8_gram() {
    std::vector<std::pair<int, int>> edges{{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
    Mat<ZZ> g(8, 8, ZZ(0));
    for (int i = 0; i < 8; ++i) g.at(i, i) = 2;
    for (auto [a, b] : edges) {
        g.at(a - 1, b - 1) = -1;
        g.at(b - 1, a - 1) = -1;
    }
    return g;
}

} // namespace

IntegerLattice fixture(const std::string& name) {
    if (name == "U") return make_lattice(from_rows({{0, 1}, {1, 0}}));
    if (name == "U2") return make_lattice(from_rows({{0, 2}, {2, 0}}));
    if (name == "minus2") return make_lattice(from_rows({{-2}}));
    if (name == "E8minus") return make_lattice(e8_gram().scaled(ZZ(-1)));
    if (name == "LambdaK3") {
        Mat<ZZ> u = fixture("U").gram, e8m = fixture("E8minus").gram;
        return make_lattice(block_diag<ZZ>({u, u, u, e8m, e8m}, ZZ(0)));
    }
    throw Error("UnknownFixture", "no lattice fixture named '" + name + "'");
}

SNF smith_normal_form(const Mat<ZZ>& M) {
    const size_t r = M.rows(), c = M.cols();
    SNF out{Mat<ZZ>::identity(r, ZZ(1), ZZ(0)), M, Mat<ZZ>::identity(c, ZZ(1), ZZ(0))};
    Mat<ZZ>& D = out.D;
    Mat<ZZ>& U = out.U;
    Mat<ZZ>& V = out.V;

    auto row_op = [&](size_t dst, size_t src, const ZZ& f) { // row dst -= f * row src
        for (size_t j = 0; j < c; ++j) D.at(dst, j) -= f * D.at(src, j);
        for (size_t j = 0; j < r; ++j) U.at(dst, j) -= f * U.at(src, j);
    };
    auto col_op = [&](size_t dst, size_t src, const ZZ& f) {
        for (size_t i = 0; i < r; ++i) D.at(i, dst) -= f * D.at(i, src);
        for (size_t i = 0; i < c; ++i) V.at(i, dst) -= f * V.at(i, src);
    };

    size_t t = std::min(r, c);
    for (size_t k = 0; k < t; ++k) {
        for (;;) {
            // least |nonzero| pivot in the trailing block
            size_t pi = r, pj = c;
            ZZ best(0);
            for (size_t i = k; i < r; ++i)
                for (size_t j = k; j < c; ++j) {
                    if (D.at(i, j) == 0) continue;
                    ZZ a = abs(D.at(i, j));
                    if (pi == r || a < best) { pi = i; pj = j; best = a; }
                }
            if (pi == r) { t = k; break; } // trailing block is zero
            if (pi != k) { D.swap_rows(pi, k); U.swap_rows(pi, k); }
            if (pj != k) { D.swap_cols(pj, k); V.swap_cols(pj, k); }

            bool dirty = false;
            for (size_t i = k + 1; i < r; ++i) {
                if (D.at(i, k) == 0) continue;
                ZZ q = D.at(i, k) / D.at(k, k); // C++ truncation keeps |rem| < |pivot|
                row_op(i, k, q);
                if (D.at(i, k) != 0) dirty = true;
            }
            for (size_t j = k + 1; j < c; ++j) {
                if (D.at(k, j) == 0) continue;
                ZZ q = D.at(k, j) / D.at(k, k);
                col_op(j, k, q);
                if (D.at(k, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // pivot must divide every remaining entry for the divisibility chain
            bool fixed = true;
            for (size_t i = k + 1; i < r && fixed; ++i)
                for (size_t j = k + 1; j < c && fixed; ++j)
                    if (D.at(i, j) % D.at(k, k) != 0) {
                        row_op(k, i, ZZ(-1)); // add row i to the pivot row, redo
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (t == k) break;
        if (D.at(k, k) < 0) { // normalize sign
            for (size_t j = 0; j < c; ++j) D.at(k, j) = -D.at(k, j);
            for (size_t j = 0; j < r; ++j) U.at(k, j) = -U.at(k, j);
        }
    }
    return out;
}

std::vector<ZZ> invariant_factors(const Mat<ZZ>& M) {
    SNF s = smith_normal_form(M);
    std::vector<ZZ> out;
    for (size_t i = 0; i < std::min(M.rows(), M.cols()); ++i)
        if (s.D.at(i, i) != 0) out.push_back(s.D.at(i, i));
    return out;
}

bool is_primitive_embedding(const Mat<ZZ>& B, const IntegerLattice& ambient,
                            const IntegerLattice& T) {
    if (B.cols() != ambient.rank() || B.rows() != T.rank())
        throw Error("ShapeMismatch", "embedding matrix shape");
    if (!(B * ambient.gram * B.transpose() == T.gram))
        throw Error("GramMismatch", "embedding does not carry the stated Gram matrix");
    auto inv = invariant_factors(B);
    if (inv.size() != B.rows()) return false; // rank drop
    for (const auto& d : inv)
        if (d != 1) return false;
    return true;
}

Mat<ZZ> orthogonal_complement(const IntegerLattice& L, const Mat<ZZ>& S) {
    if (S.cols() != L.rank()) throw Error("ShapeMismatch", "sublattice basis shape");
    Mat<ZZ> A = S * L.gram; // rows: constraints v . G s_i = 0
    SNF s = smith_normal_form(A);
    size_t rnk = 0;
    for (size_t i = 0; i < std::min(A.rows(), A.cols()); ++i)
        if (s.D.at(i, i) != 0) ++rnk;
    // A = U^-1 D V^-1, so A x = 0 iff D (V^-1 x) = 0: kernel = span of the
    // last columns of V; unimodularity of V makes it saturated.
    size_t n = L.rank();
    Mat<ZZ> out(n - rnk, n, ZZ(0));
    for (size_t j = rnk; j < n; ++j)
        for (size_t i = 0; i < n; ++i) out.at(j - rnk, i) = s.V.at(i, j);
    return out;
}

ZZ discriminant_group_order(const IntegerLattice& L) {
    if (L.rank() == 0) return ZZ(1);
    auto inv = invariant_factors(L.gram);
    if (inv.size() != L.rank()) throw Error("Degenerate", "lattice Gram is singular");
    ZZ prod(1);
    for (const auto& d : inv) prod *= d;
    return prod;
}

std::optional<Mat<ZZ>> search_embedding(const IntegerLattice& T, const IntegerLattice& L,
                                        long bound) {
    const size_t r = T.rank(), n = L.rank();
    std::vector<std::vector<ZZ>> rows;
    std::vector<ZZ> current(n, ZZ(0));
    std::optional<Mat<ZZ>> found;

    std::function<bool(size_t)> place_row = [&](size_t k) -> bool {
        if (k == r) {
            Mat<ZZ> B(r, n, ZZ(0));
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < n; ++j) B.at(i, j) = rows[i][j];
            if (rank(B) != r) return false;
            found = B;
            return true;
        }
        std::function<bool(size_t)> fill = [&](size_t pos) -> bool {
            if (pos == n) {
                auto gv = L.gram.apply(current);
                ZZ self(0);
                for (size_t j = 0; j < n; ++j) self += current[j] * gv[j];
                if (self != T.gram.at(k, k)) return false;
                for (size_t i = 0; i < k; ++i) {
                    ZZ dot(0);
                    for (size_t j = 0; j < n; ++j) dot += rows[i][j] * gv[j];
                    if (dot != T.gram.at(i, k)) return false;
                }
                rows.push_back(current);
                if (place_row(k + 1)) return true;
                rows.pop_back();
                return false;
            }
            for (long v = -bound; v <= bound; ++v) {
                current[pos] = v;
                if (fill(pos + 1)) return true;
            }
            return false;
        };
        return fill(0);
    };
    place_row(0);
    return found;
}

} // namespace zlattice
} // namespace rmks
