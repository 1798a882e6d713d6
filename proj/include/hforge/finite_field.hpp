#pragma once

#include <array>
#include <cstdint>

#include "hforge/errors.hpp"

namespace hforge {

bool is_prime(int n);

struct FieldElem {
    std::array<int, 2> coeffs{0, 0}; // c0 + c1*t, reduced mod p

    friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

/// GF(p^k) for k in {1, 2}, just big enough for the Paley-type
/// constructions (GF(9) drives the order-10 conference matrix).
///
/// For k = 2 the modulus is the lexicographically smallest monic
/// irreducible t^2 + b*t + c, ordered by (b, c); element enumeration is
/// lexicographic on (c0, c1) so every downstream construction is
/// reproducible bit for bit.
class PrimePowerField {
  public:
    static PrimePowerField make(int p, int k); // throws NotPrime / BadParameters

    int p() const { return p_; }
    int k() const { return k_; }
    int size() const { return q_; }
    int modulus_b() const { return mod_b_; }
    int modulus_c() const { return mod_c_; }

    FieldElem element(int index) const; // index in [0, q), lexicographic
    int index_of(const FieldElem& e) const;
    FieldElem zero() const { return {}; }
    FieldElem one() const { return FieldElem{{1, 0}}; }

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem pow(FieldElem base, long e) const;

    bool is_zero(const FieldElem& e) const { return e.coeffs[0] == 0 && e.coeffs[1] == 0; }

    // 0 for zero, +1 for nonzero squares, -1 otherwise.
    int quadratic_character(const FieldElem& e) const;

  private:
    PrimePowerField(int p, int k, int b, int c)
        : p_(p), k_(k), q_(k == 1 ? p : p * p), mod_b_(b), mod_c_(c) {}

    int p_, k_, q_;
    int mod_b_, mod_c_; // t^2 + b t + c when k == 2
};

int quadratic_character(const PrimePowerField& f, const FieldElem& e);

} // namespace hforge
