#include "hforge/finite_field.hpp"

namespace hforge {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int p = 2; static_cast<long>(p) * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

PrimePowerField PrimePowerField::make(int p, int k) {
    if (!is_prime(p)) throw NotPrime("not a prime: " + std::to_string(p));
    if (k != 1 && k != 2) throw BadParameters("only GF(p) and GF(p^2) are supported");
    if (k == 1) return PrimePowerField(p, 1, 0, 0);
    // smallest (b, c) with t^2 + b t + c irreducible; degree 2, so no root
    // over GF(p) is exactly irreducibility
    for (int b = 0; b < p; ++b) {
        for (int c = 0; c < p; ++c) {
            bool has_root = false;
            for (int t = 0; t < p && !has_root; ++t)
                has_root = ((t * t + b * t + c) % p == 0);
            if (!has_root) return PrimePowerField(p, 2, b, c);
        }
    }
    throw Error("no irreducible quadratic found"); // unreachable for prime p
}

FieldElem PrimePowerField::element(int index) const {
    if (index < 0 || index >= q_) throw BadParameters("field element index out of range");
    if (k_ == 1) return FieldElem{{index, 0}};
    return FieldElem{{index / p_, index % p_}};
}

int PrimePowerField::index_of(const FieldElem& e) const {
    if (k_ == 1) return e.coeffs[0];
    return e.coeffs[0] * p_ + e.coeffs[1];
}

FieldElem PrimePowerField::add(const FieldElem& a, const FieldElem& b) const {
    return FieldElem{{(a.coeffs[0] + b.coeffs[0]) % p_, (a.coeffs[1] + b.coeffs[1]) % p_}};
}

FieldElem PrimePowerField::sub(const FieldElem& a, const FieldElem& b) const {
    return FieldElem{{(a.coeffs[0] - b.coeffs[0] + p_) % p_, (a.coeffs[1] - b.coeffs[1] + p_) % p_}};
}

FieldElem PrimePowerField::neg(const FieldElem& a) const {
    return FieldElem{{(p_ - a.coeffs[0]) % p_, (p_ - a.coeffs[1]) % p_}};
}

FieldElem PrimePowerField::mul(const FieldElem& a, const FieldElem& b) const {
    if (k_ == 1) return FieldElem{{(a.coeffs[0] * b.coeffs[0]) % p_, 0}};
    // (a0 + a1 t)(b0 + b1 t), then reduce t^2 = -(b t + c)
    int c0 = a.coeffs[0] * b.coeffs[0];
    int c1 = a.coeffs[0] * b.coeffs[1] + a.coeffs[1] * b.coeffs[0];
    int c2 = a.coeffs[1] * b.coeffs[1];
    c0 = ((c0 - c2 * mod_c_) % p_ + p_ * p_) % p_;
    c1 = ((c1 - c2 * mod_b_) % p_ + p_ * p_) % p_;
    return FieldElem{{c0, c1}};
}

FieldElem PrimePowerField::pow(FieldElem base, long e) const {
    FieldElem acc = one();
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

int PrimePowerField::quadratic_character(const FieldElem& e) const {
    if (is_zero(e)) return 0;
    FieldElem r = pow(e, (q_ - 1) / 2);
    if (r == one()) return +1;
    if (r == neg(one())) return -1;
    throw Error("character of a unit must be a square root of one");
}

int quadratic_character(const PrimePowerField& f, const FieldElem& e) {
    return f.quadratic_character(e);
}

} // namespace hforge
