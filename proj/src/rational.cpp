#include "mf/rational.hpp"

#include <cctype>

namespace mf {

std::string rational_to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    std::string::size_type slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r(Integer(text), 1);
            r.canonicalize();
            return r;
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal '" + text + "'");
    }
}

Rational rational_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    Rational b = exp < 0 ? Rational(1) / base : base;
    unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), e);
    out.canonicalize();
    return out;
}

Integer integer_pow(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

}  // namespace mf
