#pragma once

#include <gmpxx.h>

#include <string>

#include "rmks/error.hpp"

namespace rmks {

using QQ = mpq_class;
using ZZ = mpz_class;

inline QQ make_rational(const ZZ& num, const ZZ& den) {
    if (den == 0) throw Error("DivisionByZero", "rational with zero denominator");
    QQ q(num, den);
    q.canonicalize();
    return q;
}

// Parses "num", "num/den", with optional sign. Used by the JSON layer and the CLI.
QQ parse_rational(const std::string& s);

// Canonical text form: "num" when den == 1, else "num/den".
std::string format_rational(const QQ& q);

inline int sign(const QQ& q) { return sgn(q); }

bool is_integer_square(const ZZ& z);
bool is_rational_square(const QQ& q);

// max(|num|, |den|); used for pivot selection in exact elimination.
ZZ rational_height(const QQ& q);

} // namespace rmks
