#include "hforge/rational.hpp"

#include "hforge/errors.hpp"

namespace hforge {

Rational frac(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
    if (r.get_den() == 0) throw DivisionByZero("rational with zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integral(const Rational& r) { return r.get_den() == 1; }

void split_square(const Integer& z, Integer& square_root_part, Integer& squarefree_part) {
    if (z < 1) throw BadParameters("split_square needs z >= 1");
    Integer s = 1, f = 1, rem = z;
    if (mpz_perfect_square_p(rem.get_mpz_t())) {
        mpz_sqrt(s.get_mpz_t(), rem.get_mpz_t());
        square_root_part = s;
        squarefree_part = 1;
        return;
    }
    // trial division; radicands and minor values in scope stay small
    Integer p = 2;
    while (p * p <= rem) {
        if (rem % p == 0) {
            int e = 0;
            while (rem % p == 0) {
                rem /= p;
                ++e;
            }
            for (int i = 0; i < e / 2; ++i) s *= p;
            if (e % 2) f *= p;
        }
        p += (p == 2) ? 1 : 2;
    }
    f *= rem; // leftover prime
    square_root_part = s;
    squarefree_part = f;
}

Rational pow_rational(long base, long exp) {
    if (exp >= 0) {
        Integer b(base), p;
        mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
        return Rational(p);
    }
    if (base == 0) throw DivisionByZero("0 to a negative power");
    Integer b(base), p;
    mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(-exp));
    Rational r(Integer(1), p);
    r.canonicalize();
    return r;
}

std::string render_sqrt(const Rational& value_sq) {
    if (value_sq < 0) throw BadParameters("render_sqrt of negative value");
    if (value_sq == 0) return "0";
    // sqrt(p/q) = sqrt(p*q)/q = (s/q)*sqrt(f)
    Integer pq = value_sq.get_num() * value_sq.get_den();
    Integer s, f;
    split_square(pq, s, f);
    Rational coeff(s, value_sq.get_den());
    coeff.canonicalize();
    if (f == 1) {
        if (is_integral(coeff)) return coeff.get_num().get_str();
        return coeff.get_num().get_str() + "/" + coeff.get_den().get_str();
    }
    std::string surd = "√" + f.get_str();
    if (coeff == 1) return surd;
    if (is_integral(coeff)) return coeff.get_num().get_str() + surd;
    return "(" + coeff.get_num().get_str() + "/" + coeff.get_den().get_str() + ")" + surd;
}

} // namespace hforge
