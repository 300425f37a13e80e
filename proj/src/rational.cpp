#include "rmks/rational.hpp"

namespace rmks {

QQ parse_rational(const std::string& s) {
    if (s.empty()) throw Error("ParseError", "empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            ZZ n(s);
            return QQ(n);
        }
        ZZ n(s.substr(0, slash));
        ZZ d(s.substr(slash + 1));
        return make_rational(n, d);
    } catch (const std::invalid_argument&) {
        throw Error("ParseError", "bad rational literal '" + s + "'");
    }
}

std::string format_rational(const QQ& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer_square(const ZZ& z) {
    if (z < 0) return false;
    return mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

bool is_rational_square(const QQ& q) {
    return is_integer_square(q.get_num()) && is_integer_square(q.get_den());
}

ZZ rational_height(const QQ& q) {
    ZZ n = abs(q.get_num());
    ZZ d = q.get_den();
    return n > d ? n : d;
}

} // namespace rmks
