#pragma once

#include <vector>

#include "rmks/rational.hpp"

namespace rmks {

// Dense univariate polynomial over Q, coefficient of X^i at index i,
// normalized so the leading coefficient is nonzero (zero polynomial = empty).
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<QQ> coeffs);
    static QPoly constant(const QQ& c);
    static QPoly monomial(int degree, const QQ& c);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const QQ& lead() const;
    const std::vector<QQ>& coeffs() const { return c_; }
    QQ coeff(int i) const; // 0 beyond degree

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    QPoly scaled(const QQ& c) const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    // Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<QPoly, QPoly> divrem(const QPoly& d) const;

    QPoly derivative() const;
    QPoly monic() const;
    QQ eval(const QQ& x) const;

private:
    std::vector<QQ> c_;
    void normalize();
};

// Monic gcd over Q.
QPoly poly_gcd(QPoly a, QPoly b);

struct Interval {
    QQ lo, hi; // closed; lo == hi encodes an exact rational root
    bool is_point() const { return lo == hi; }
};

// Sturm chain of a squarefree polynomial.
class SturmChain {
public:
    explicit SturmChain(const QPoly& p);
    // Number of real roots in the half-open interval (a, b].
    int count_roots(const QQ& a, const QQ& b) const;
    int count_all_roots() const;

private:
    std::vector<QPoly> chain_;
    int variations_at(const QQ& x) const;
    int variations_at_minus_inf() const;
    int variations_at_plus_inf() const;
};

// Interval image of p over [lo, hi] by monomial-wise interval arithmetic.
Interval eval_on_interval(const QPoly& p, const Interval& iv);

// Cauchy bound: all real roots lie in (-B, B].
QQ root_bound(const QPoly& p);

} // namespace rmks
