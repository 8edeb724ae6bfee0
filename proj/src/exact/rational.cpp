#include "sixteen/exact/rational.hpp"

#include "sixteen/errors.hpp"

namespace sixteen::exact {

Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw ParseError("not a rational number: '" + text + "'");
    q.canonicalize();
    if (q.get_den() == 0) throw ParseError("zero denominator: '" + text + "'");
    return q;
}

bool is_rational_square(const Rational& q) {
    if (sgn(q) < 0) return false;
    return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 && mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

Rational rational_sqrt(const Rational& q) {
    if (!is_rational_square(q)) throw NotASquare(q.get_str());
    mpz_class n = sqrt(q.get_num());
    mpz_class d = sqrt(q.get_den());
    return Rational(n, d);
}

} // namespace sixteen::exact
