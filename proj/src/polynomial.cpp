#include "rmks/polynomial.hpp"

#include <algorithm>

namespace rmks {

QPoly::QPoly(std::vector<QQ> coeffs) : c_(std::move(coeffs)) { normalize(); }

QPoly QPoly::constant(const QQ& c) { return QPoly({c}); }

QPoly QPoly::monomial(int degree, const QQ& c) {
    std::vector<QQ> v(degree + 1, QQ(0));
    v[degree] = c;
    return QPoly(std::move(v));
}

void QPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const QQ& QPoly::lead() const {
    if (c_.empty()) throw Error("ZeroPolynomial", "leading coefficient of 0");
    return c_.back();
}

QQ QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return QQ(0);
    return c_[i];
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<QQ> v(std::max(c_.size(), o.c_.size()), QQ(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
    std::vector<QQ> v(c_);
    for (auto& x : v) x = -x;
    return QPoly(std::move(v));
}

QPoly QPoly::scaled(const QQ& c) const {
    std::vector<QQ> v(c_);
    for (auto& x : v) x *= c;
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<QQ> v(c_.size() + o.c_.size() - 1, QQ(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(v));
}

std::pair<QPoly, QPoly> QPoly::divrem(const QPoly& d) const {
    if (d.is_zero()) throw Error("DivisionByZero", "polynomial division by zero");
    std::vector<QQ> rem(c_);
    int dd = d.degree();
    int rd = static_cast<int>(rem.size()) - 1;
    if (rd < dd) return {QPoly(), *this};
    std::vector<QQ> quo(rd - dd + 1, QQ(0));
    for (int k = rd; k >= dd; --k) {
        if (rem[k] == 0) continue;
        QQ f = rem[k] / d.lead();
        quo[k - dd] = f;
        for (int i = 0; i <= dd; ++i) rem[k - dd + i] -= f * d.coeff(i);
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::derivative() const {
    if (degree() < 1) return QPoly();
    std::vector<QQ> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * QQ(static_cast<long>(i));
    return QPoly(std::move(v));
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(QQ(1) / lead());
}

QQ QPoly::eval(const QQ& x) const {
    QQ acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly poly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

SturmChain::SturmChain(const QPoly& p) {
    chain_.push_back(p);
    QPoly d = p.derivative();
    if (!d.is_zero()) chain_.push_back(d);
    while (chain_.size() >= 2 && !chain_.back().is_zero()) {
        QPoly r = chain_[chain_.size() - 2].divrem(chain_.back()).second;
        if (r.is_zero()) break;
        chain_.push_back(-r);
    }
}

static int sign_variations(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int SturmChain::variations_at(const QQ& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(sign(p.eval(x)));
    return sign_variations(signs);
}

int SturmChain::variations_at_minus_inf() const {
    std::vector<int> signs;
    for (const auto& p : chain_) {
        if (p.is_zero()) { signs.push_back(0); continue; }
        int s = sign(p.lead());
        if (p.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return sign_variations(signs);
}

int SturmChain::variations_at_plus_inf() const {
    std::vector<int> signs;
    for (const auto& p : chain_)
        signs.push_back(p.is_zero() ? 0 : sign(p.lead()));
    return sign_variations(signs);
}

int SturmChain::count_roots(const QQ& a, const QQ& b) const {
    return variations_at(a) - variations_at(b);
}

int SturmChain::count_all_roots() const {
    return variations_at_minus_inf() - variations_at_plus_inf();
}

Interval eval_on_interval(const QPoly& p, const Interval& iv) {
    // x^k over [lo,hi], multiplied by the coefficient, accumulated endpoint-wise.
    QQ lo(0), hi(0);
    QQ plo(1), phi(1); // bounds for x^k
    for (int k = 0; k <= p.degree(); ++k) {
        if (k > 0) {
            QQ cand[4] = {plo * iv.lo, plo * iv.hi, phi * iv.lo, phi * iv.hi};
            plo = *std::min_element(cand, cand + 4);
            phi = *std::max_element(cand, cand + 4);
        }
        const QQ c = p.coeff(k);
        if (c >= 0) { lo += c * plo; hi += c * phi; }
        else        { lo += c * phi; hi += c * plo; }
    }
    return {lo, hi};
}

QQ root_bound(const QPoly& p) {
    if (p.degree() < 1) return QQ(1);
    QQ m(0);
    for (int i = 0; i < p.degree(); ++i) {
        QQ a = abs(p.coeff(i) / p.lead());
        if (a > m) m = a;
    }
    return m + 1;
}

} // namespace rmks
