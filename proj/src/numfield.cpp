#include "rmks/numfield.hpp"

#include <algorithm>

namespace rmks {
namespace numfield {

// ---------------------------------------------------------------------------
// FieldElement
// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, std::vector<QQ> coords)
    : field_(std::move(field)), c_(std::move(coords)) {
    if (!field_) throw Error("InvalidElement", "element with null field");
    if (static_cast<int>(c_.size()) != field_->dim())
        throw Error("ShapeMismatch", "coordinate length does not match field dimension");
}

const FieldPtr& FieldElement::field() const {
    if (!field_) throw Error("InvalidElement", "use of default-constructed element");
    return field_;
}

const std::vector<QQ>& FieldElement::coords() const {
    if (!field_) throw Error("InvalidElement", "use of default-constructed element");
    return c_;
}

bool FieldElement::is_zero() const {
    for (const auto& x : coords())
        if (x != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    const auto& c = coords();
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

QQ FieldElement::rational_value() const {
    if (!is_rational()) throw Error("NotRational", "element is not rational");
    return coords()[0];
}

static void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field()->same_structure(*b.field()))
        throw Error("FieldMismatch", "elements of different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(*this, o);
    std::vector<QQ> v(coords());
    for (size_t i = 0; i < v.size(); ++i) v[i] += o.coords()[i];
    return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_field(*this, o);
    std::vector<QQ> v(coords());
    for (size_t i = 0; i < v.size(); ++i) v[i] -= o.coords()[i];
    return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::operator-() const {
    std::vector<QQ> v(coords());
    for (auto& x : v) x = -x;
    return FieldElement(field_, std::move(v));
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    *this = *this + o;
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    *this = *this - o;
    return *this;
}

FieldElement FieldElement::scaled(const QQ& c) const {
    std::vector<QQ> v(coords());
    for (auto& x : v) x *= c;
    return FieldElement(field_, std::move(v));
}

// base-field (unlayered) product: polynomial product reduced mod min_poly
static std::vector<QQ> base_mul(const QPoly& p, const std::vector<QQ>& a,
                                const std::vector<QQ>& b) {
    QPoly prod = QPoly(a) * QPoly(b);
    QPoly red = prod.divrem(p).second;
    std::vector<QQ> out(p.degree(), QQ(0));
    for (int i = 0; i <= red.degree(); ++i) out[i] = red.coeff(i);
    return out;
}

FieldElement mul_impl(const FieldElement& a, const FieldElement& b) {
    const auto& F = a.field();
    const auto& p = F->min_poly();
    const int n = F->base_degree();
    if (!F->layered()) {
        return FieldElement(F, base_mul(p, a.coords(), b.coords()));
    }
    auto half = [&](const std::vector<QQ>& v, int which) {
        return std::vector<QQ>(v.begin() + which * n, v.begin() + (which + 1) * n);
    };
    std::vector<QQ> u1 = half(a.coords(), 0), v1 = half(a.coords(), 1);
    std::vector<QQ> u2 = half(b.coords(), 0), v2 = half(b.coords(), 1);
    const auto& c = F->radicand().coords();
    // (u1 + v1 s)(u2 + v2 s) = (u1 u2 + c v1 v2) + (u1 v2 + v1 u2) s
    std::vector<QQ> uu = base_mul(p, u1, u2);
    std::vector<QQ> cv = base_mul(p, c, base_mul(p, v1, v2));
    std::vector<QQ> s1 = base_mul(p, u1, v2);
    std::vector<QQ> s2 = base_mul(p, v1, u2);
    std::vector<QQ> out(2 * n);
    for (int i = 0; i < n; ++i) {
        out[i] = uu[i] + cv[i];
        out[n + i] = s1[i] + s2[i];
    }
    return FieldElement(F, std::move(out));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(*this, o);
    return mul_impl(*this, o);
}

// extended euclid: returns s with a*s = gcd(a, p) mod p (gcd constant for
// irreducible p and a != 0)
static QPoly inverse_mod(const QPoly& a, const QPoly& p) {
    QPoly r0 = p, r1 = a;
    QPoly s0, s1 = QPoly::constant(QQ(1)); // s0 = 0
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        QPoly s2 = s0 - q * s1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
    }
    if (r0.degree() != 0)
        throw Error("NotInvertible", "element shares a factor with the modulus");
    return s0.scaled(QQ(1) / r0.coeff(0)).divrem(p).second;
}

FieldElement FieldElement::inverse() const {
    const auto& F = field();
    if (is_zero()) throw Error("DivisionByZero", "inverse of zero element");
    const int n = F->base_degree();
    if (!F->layered()) {
        QPoly inv = inverse_mod(QPoly(coords()), F->min_poly());
        std::vector<QQ> out(n, QQ(0));
        for (int i = 0; i <= inv.degree(); ++i) out[i] = inv.coeff(i);
        return FieldElement(F, std::move(out));
    }
    // (u + v s)^-1 = (u - v s)/(u^2 - c v^2)
    std::vector<QQ> u(coords().begin(), coords().begin() + n);
    std::vector<QQ> v(coords().begin() + n, coords().end());
    const auto& base = F->layer_base();
    FieldElement ub(base, u), vb(base, v);
    FieldElement nrm = ub * ub - F->radicand() * vb * vb;
    if (nrm.is_zero())
        throw Error("DegenerateExtension",
                    "radicand is a square in the base field; layer is not a field");
    FieldElement ninv = nrm.inverse();
    FieldElement u2 = ub * ninv, v2 = (-vb) * ninv;
    std::vector<QQ> out;
    out.reserve(2 * n);
    for (const auto& x : u2.coords()) out.push_back(x);
    for (const auto& x : v2.coords()) out.push_back(x);
    return FieldElement(F, std::move(out));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inverse();
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!field_ || !o.field_) return field_ == o.field_;
    return field_->same_structure(*o.field_) && c_ == o.c_;
}

FieldElement one_like(const FieldElement& x) { return x.field()->one(); }
FieldElement zero_like(const FieldElement& x) { return x.field()->zero(); }

// ---------------------------------------------------------------------------
// NumberField
// ---------------------------------------------------------------------------

namespace {

// All rational roots of a monic rational polynomial, found exactly.
// Throws FactorizationLimit if the candidate set cannot be enumerated.
std::vector<QQ> rational_roots(const QPoly& p) {
    if (p.degree() == 1) return {-p.coeff(0)};
    if (p.degree() == 2) {
        QQ disc = p.coeff(1) * p.coeff(1) - 4 * p.coeff(0);
        if (sign(disc) < 0 || !is_rational_square(disc)) return {};
        ZZ sn, sd;
        mpz_sqrt(sn.get_mpz_t(), disc.get_num().get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), disc.get_den().get_mpz_t());
        QQ root_disc = make_rational(sn, sd);
        return {(-p.coeff(1) + root_disc) / 2, (-p.coeff(1) - root_disc) / 2};
    }
    // substitute X = Y/c to get a monic integer polynomial; integer roots of it
    // divide its constant term
    ZZ c(1);
    for (int i = 0; i < p.degree(); ++i)
        mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), p.coeff(i).get_den().get_mpz_t());
    std::vector<ZZ> q(p.degree() + 1);
    ZZ pw(1);
    for (int i = p.degree(); i >= 0; --i) {
        QQ t = p.coeff(i) * QQ(pw);
        q[i] = t.get_num(); // integral by construction
        pw *= c;
    }
    ZZ a0 = q[0];
    std::vector<QQ> roots;
    auto try_root = [&](const ZZ& z) {
        QQ x = make_rational(z, c);
        if (p.eval(x) == 0) roots.push_back(x);
    };
    if (a0 == 0) {
        try_root(ZZ(0));
        return roots; // min polys are irreducible candidates; X | p is decisive
    }
    ZZ bound(1000000);
    ZZ rem = abs(a0);
    std::vector<ZZ> divisors{ZZ(1)};
    for (ZZ f(2); f * f <= rem && f <= bound; ++f) {
        if (rem % f != 0) continue;
        size_t base_count = divisors.size();
        ZZ pk(1);
        while (rem % f == 0) {
            rem /= f;
            pk *= f;
            for (size_t i = 0; i < base_count; ++i) divisors.push_back(divisors[i] * pk);
        }
    }
    if (rem != 1) {
        if (rem > bound * bound)
            throw Error("FactorizationLimit",
                        "cannot enumerate rational-root candidates; cofactor " + rem.get_str());
        // all factors <= bound were removed, so rem is prime
        size_t base_count = divisors.size();
        for (size_t i = 0; i < base_count; ++i) divisors.push_back(divisors[i] * rem);
    }
    for (const ZZ& d : divisors) {
        try_root(d);
        try_root(-d);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace

FieldPtr NumberField::create(const QPoly& p, bool attest_irreducible) {
    if (p.degree() < 1) throw Error("BadPolynomial", "minimal polynomial must have degree >= 1");
    if (p.lead() != 1) throw Error("BadPolynomial", "minimal polynomial must be monic");
    QPoly g = poly_gcd(p, p.derivative());
    if (g.degree() != 0)
        throw Error("NonSquarefree", "minimal polynomial is not squarefree");
    if (p.degree() >= 2) {
        if (!rational_roots(p).empty())
            throw Error("Reducible", "minimal polynomial has a rational root");
        if (p.degree() > 3 && !attest_irreducible)
            throw Error("IrreducibilityUnverified",
                        "degree > 3 requires attest_irreducible (rational-root exclusion "
                        "is not a complete criterion)");
    }
    auto F = std::shared_ptr<NumberField>(new NumberField());
    F->min_poly_ = p;
    F->roots_ = isolate_real_roots(p);
    F->totally_real_ = static_cast<int>(F->roots_.size()) == p.degree();
    return F;
}

FieldPtr NumberField::rationals() {
    static FieldPtr q = create(QPoly({QQ(0), QQ(1)}));
    return q;
}

FieldPtr NumberField::quadratic(const QQ& d) {
    return create(QPoly({-d, QQ(0), QQ(1)}));
}

FieldPtr NumberField::with_sqrt(FieldPtr base, const FieldElement& radicand,
                                int designated_root) {
    if (!base) throw Error("InvalidElement", "null base field");
    if (base->layered()) throw Error("FieldMismatch", "only one quadratic layer is supported");
    if (!base->same_structure(*radicand.field()))
        throw Error("FieldMismatch", "radicand not in the base field");
    if (designated_root < 0 || designated_root >= static_cast<int>(base->roots_.size()))
        throw Error("BadEmbedding", "designated root index out of range");
    Embedding emb{base, designated_root};
    if (sign_at(radicand, emb) <= 0)
        throw Error("BadEmbedding", "radicand must be positive at the designated embedding");
    auto F = std::shared_ptr<NumberField>(new NumberField());
    F->min_poly_ = base->min_poly_;
    F->roots_ = base->roots_;
    F->totally_real_ = false; // other embeddings of the layer are not tracked
    F->base_ = std::move(base);
    F->radicand_ = radicand;
    F->designated_root_ = designated_root;
    return F;
}

const FieldElement& NumberField::radicand() const {
    if (!layered()) throw Error("FieldMismatch", "field has no quadratic layer");
    return *radicand_;
}

int NumberField::designated_root() const {
    if (!layered()) throw Error("FieldMismatch", "field has no quadratic layer");
    return designated_root_;
}

FieldElement NumberField::zero() const {
    return FieldElement(shared_from_this(), std::vector<QQ>(dim(), QQ(0)));
}

FieldElement NumberField::one() const {
    std::vector<QQ> v(dim(), QQ(0));
    v[0] = 1;
    return FieldElement(shared_from_this(), std::move(v));
}

FieldElement NumberField::from_rational(const QQ& q) const {
    std::vector<QQ> v(dim(), QQ(0));
    v[0] = q;
    return FieldElement(shared_from_this(), std::move(v));
}

FieldElement NumberField::gen() const {
    std::vector<QQ> v(dim(), QQ(0));
    if (base_degree() == 1) {
        v[0] = -min_poly_.coeff(0); // alpha is rational
    } else {
        v[1] = 1;
    }
    return FieldElement(shared_from_this(), std::move(v));
}

FieldElement NumberField::sqrt_gen() const {
    if (!layered()) throw Error("FieldMismatch", "field has no quadratic layer");
    std::vector<QQ> v(dim(), QQ(0));
    v[base_degree()] = 1;
    return FieldElement(shared_from_this(), std::move(v));
}

FieldElement NumberField::element(std::vector<QQ> coords) const {
    return FieldElement(shared_from_this(), std::move(coords));
}

bool NumberField::same_structure(const NumberField& o) const {
    if (!(min_poly_ == o.min_poly_)) return false;
    if (layered() != o.layered()) return false;
    if (!layered()) return true;
    return designated_root_ == o.designated_root_ &&
           radicand_->coords() == o.radicand_->coords();
}

std::vector<Embedding> real_embeddings(const FieldPtr& F) {
    std::vector<Embedding> out;
    if (F->layered()) {
        out.push_back({F, F->designated_root()});
        return out;
    }
    for (size_t i = 0; i < F->real_roots().size(); ++i)
        out.push_back({F, static_cast<int>(i)});
    return out;
}

// ---------------------------------------------------------------------------
// Root isolation
// ---------------------------------------------------------------------------

namespace {

struct Isolator {
    const QPoly& p;
    const SturmChain& sturm;
    std::vector<Interval> out;

    // single root in (lo, hi], p(hi) != 0: produce a closed interval with
    // non-root endpoints of opposite sign, or a point for a rational root
    Interval settle(QQ lo, QQ hi) {
        for (;;) {
            QQ plo = p.eval(lo);
            if (plo != 0 && sign(plo) != sign(p.eval(hi))) return {lo, hi};
            QQ mid = (lo + hi) / 2;
            if (p.eval(mid) == 0) return {mid, mid};
            if (sturm.count_roots(mid, hi) == 1) lo = mid; else hi = mid;
        }
    }

    void isolate(const QQ& lo, const QQ& hi) { // roots in (lo, hi]
        int c = sturm.count_roots(lo, hi);
        if (c == 0) return;
        if (c == 1) {
            if (p.eval(hi) == 0) out.push_back({hi, hi});
            else out.push_back(settle(lo, hi));
            return;
        }
        QQ mid = (lo + hi) / 2;
        isolate(lo, mid);
        isolate(mid, hi);
    }

    // shrink [lo, hi] (single interior root, sign change) until hi < limit
    Interval shrink_below(Interval iv, const QQ& limit) {
        while (iv.hi >= limit && !iv.is_point()) {
            QQ mid = (iv.lo + iv.hi) / 2;
            if (p.eval(mid) == 0) return {mid, mid};
            if (sign(p.eval(iv.lo)) != sign(p.eval(mid))) iv.hi = mid; else iv.lo = mid;
        }
        return iv;
    }

    Interval narrow(Interval iv, const QQ& max_width) {
        while (!iv.is_point() && iv.hi - iv.lo > max_width) {
            QQ mid = (iv.lo + iv.hi) / 2;
            if (p.eval(mid) == 0) return {mid, mid};
            if (sign(p.eval(iv.lo)) != sign(p.eval(mid))) iv.hi = mid; else iv.lo = mid;
        }
        return iv;
    }
};

} // namespace

std::vector<Interval> isolate_real_roots(const QPoly& p) {
    if (p.degree() < 1) throw Error("BadPolynomial", "degree must be >= 1");
    if (poly_gcd(p, p.derivative()).degree() != 0)
        throw Error("NonSquarefree", "polynomial is not squarefree");
    SturmChain sturm(p);
    Isolator iso{p, sturm, {}};
    QQ b = root_bound(p);
    iso.isolate(-b, b);
    // tidy: bounded width and strictly disjoint closed intervals
    for (auto& iv : iso.out) iv = iso.narrow(iv, QQ(1));
    for (size_t i = 0; i + 1 < iso.out.size(); ++i)
        if (iso.out[i].hi >= iso.out[i + 1].lo && !iso.out[i].is_point())
            iso.out[i] = iso.shrink_below(iso.out[i], iso.out[i + 1].lo);
    return iso.out;
}

// ---------------------------------------------------------------------------
// Signs
// ---------------------------------------------------------------------------

namespace {

// sign of a(root) for the base (unlayered) field
int base_sign_at(const QPoly& min_poly, const std::vector<Interval>& roots,
                 const std::vector<QQ>& coords, int root_index) {
    QPoly a{std::vector<QQ>(coords)};
    if (a.is_zero()) return 0;
    const Interval& root = roots.at(root_index);
    if (root.is_point()) return sign(a.eval(root.lo));
    QPoly g = poly_gcd(a, min_poly);
    if (g.degree() > 0) {
        SturmChain sg(g);
        if (sg.count_roots(root.lo, root.hi) > 0) return 0;
    }
    Interval iv = root;
    for (int iter = 0; iter < 256; ++iter) {
        Interval img = eval_on_interval(a, iv);
        if (sign(img.lo) > 0) return 1;
        if (sign(img.hi) < 0) return -1;
        QQ mid = (iv.lo + iv.hi) / 2;
        // min_poly has no rational roots here (degree >= 2, irreducible)
        if (sign(min_poly.eval(iv.lo)) != sign(min_poly.eval(mid)))
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    throw std::logic_error("sign_at: refinement cap exceeded (defect)");
}

} // namespace

int sign_at(const FieldElement& a, const Embedding& emb) {
    const auto& F = a.field();
    if (!emb.field || !F->same_structure(*emb.field))
        throw Error("FieldMismatch", "embedding belongs to a different field");
    const int n = F->base_degree();
    if (!F->layered()) {
        if (emb.root_index < 0 || emb.root_index >= static_cast<int>(F->real_roots().size()))
            throw Error("BadEmbedding", "root index out of range");
        return base_sign_at(F->min_poly(), F->real_roots(), a.coords(), emb.root_index);
    }
    if (emb.root_index != F->designated_root())
        throw Error("BadEmbedding",
                    "layered fields only evaluate signs at their designated embedding");
    const auto& base = F->layer_base();
    std::vector<QQ> u(a.coords().begin(), a.coords().begin() + n);
    std::vector<QQ> v(a.coords().begin() + n, a.coords().end());
    Embedding bemb{base, emb.root_index};
    FieldElement ub(base, u), vb(base, v);
    int su = ub.is_zero() ? 0 : sign_at(ub, bemb);
    int sv = vb.is_zero() ? 0 : sign_at(vb, bemb);
    if (sv == 0) return su;
    if (su == 0) return sv; // sqrt(c) > 0 at the designated embedding
    if (su == sv) return su;
    FieldElement w = ub * ub - F->radicand() * vb * vb; // (u+vs)(u-vs)
    if (w.is_zero())
        throw Error("DegenerateExtension", "radicand is a square in the base field");
    return su * sign_at(w, bemb);
}

bool is_totally_positive(const FieldElement& a) {
    const auto& F = a.field();
    if (!F->totally_real())
        throw Error("NotTotallyReal", "field has complex embeddings or is a layer");
    for (const auto& emb : real_embeddings(F))
        if (sign_at(a, emb) != 1) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Trace / norm / discriminant
// ---------------------------------------------------------------------------

Mat<QQ> multiplication_matrix(const FieldElement& a) {
    const auto& F = a.field();
    const int d = F->dim();
    Mat<QQ> m(d, d, QQ(0));
    for (int j = 0; j < d; ++j) {
        std::vector<QQ> e(d, QQ(0));
        e[j] = 1;
        FieldElement prod = a * FieldElement(F, std::move(e));
        for (int i = 0; i < d; ++i) m.at(i, j) = prod.coords()[i];
    }
    return m;
}

QQ trace(const FieldElement& a) {
    Mat<QQ> m = multiplication_matrix(a);
    QQ t(0);
    for (size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
}

QQ norm(const FieldElement& a) {
    if (a.is_zero()) return QQ(0);
    return det(multiplication_matrix(a));
}

FieldElement pow_elem(FieldElement a, unsigned k) {
    FieldElement acc = a.field()->one();
    while (k) {
        if (k & 1) acc = acc * a;
        a = a * a;
        k >>= 1;
    }
    return acc;
}

ZZ square_class(const QQ& q, const SquareClassConfig& cfg) {
    if (q == 0) throw Error("ZeroElement", "square class of zero");
    ZZ n = q.get_num() * q.get_den(); // same class as q
    int s = sgn(n);
    n = abs(n);
    ZZ cls(1);
    for (ZZ f(2); f * f <= n && f <= cfg.trial_bound; ++f) {
        if (n % f != 0) continue;
        int e = 0;
        while (n % f == 0) { n /= f; ++e; }
        if (e % 2) cls *= f;
    }
    if (n != 1) {
        if (n <= cfg.trial_bound * cfg.trial_bound) {
            cls *= n; // all factors <= bound removed, so n is prime
        } else if (is_integer_square(n)) {
            // even exponents throughout; contributes nothing
        } else {
            throw Error("FactorizationLimit",
                        "square class undecided; partial cofactor " + n.get_str());
        }
    }
    return s < 0 ? -cls : cls;
}

QQ trace_gram_det(const FieldPtr& F, const std::vector<FieldElement>& basis) {
    const int d = F->dim();
    if (static_cast<int>(basis.size()) != d)
        throw Error("SingularBasis", "basis has wrong size");
    Mat<QQ> coords(d, d, QQ(0));
    for (int j = 0; j < d; ++j) {
        if (!basis[j].field()->same_structure(*F))
            throw Error("FieldMismatch", "basis element in wrong field");
        for (int i = 0; i < d; ++i) coords.at(i, j) = basis[j].coords()[i];
    }
    if (!is_invertible(coords))
        throw Error("SingularBasis", "basis coordinate matrix is singular");
    Mat<QQ> gram(d, d, QQ(0));
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            QQ t = trace(basis[i] * basis[j]);
            gram.at(i, j) = t;
            gram.at(j, i) = t;
        }
    return det(gram);
}

ZZ field_discriminant(const FieldPtr& F, const std::vector<FieldElement>& basis) {
    return square_class(trace_gram_det(F, basis));
}

FieldElement galois_conjugate(const FieldElement& a) {
    const auto& F = a.field();
    if (F->layered() || F->base_degree() != 2)
        throw Error("NotQuadratic", "galois conjugation needs a quadratic field");
    // alpha + conj(alpha) = -b for p = X^2 + bX + c
    QQ b = F->min_poly().coeff(1);
    const auto& c = a.coords();
    return F->element({c[0] - c[1] * b, -c[1]});
}

FieldElement lift_to(const FieldElement& a, const FieldPtr& target) {
    const auto& F = a.field();
    if (F->same_structure(*target)) return target->element(a.coords());
    if (a.is_rational()) return target->from_rational(a.coords()[0]);
    if (target->layered() && target->layer_base()->same_structure(*F)) {
        std::vector<QQ> v(target->dim(), QQ(0));
        for (size_t i = 0; i < a.coords().size(); ++i) v[i] = a.coords()[i];
        return target->element(std::move(v));
    }
    throw Error("FieldMismatch", "no canonical lift between these fields");
}

Mat<FieldElement> lift_matrix(const Mat<QQ>& m, const FieldPtr& K) {
    Mat<FieldElement> out(m.rows(), m.cols(), K->zero());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = K->from_rational(m.at(i, j));
    return out;
}

} // namespace numfield
} // namespace rmks
