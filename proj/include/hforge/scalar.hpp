#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "hforge/errors.hpp"
#include "hforge/rational.hpp"

namespace hforge {

using ComplexFloat = std::complex<double>;

/// An element x + y*i*sqrt(d) of the imaginary quadratic extension Q(i*sqrt(d)).
///
/// Canonical form: d squarefree and positive; y == 0 forces d == 1. Two
/// values are the same complex number iff their (x, y, d) triples are
/// identical, which makes equality decidable across fields without a
/// compositum. Binary arithmetic requires matching radicands unless one
/// operand is rational (y == 0).
class QuadExt {
  public:
    QuadExt() : x_(0), y_(0), d_(1) {}
    QuadExt(Rational x) : x_(std::move(x)), y_(0), d_(1) {}
    QuadExt(long v) : x_(v), y_(0), d_(1) {}
    QuadExt(Rational x, Rational y, std::int64_t d);

    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }
    std::int64_t d() const { return d_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_rational() const { return y_ == 0; }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        return a.d_ == b.d_ && a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

    QuadExt operator-() const;
    friend QuadExt operator+(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b);
    QuadExt& operator+=(const QuadExt& b) { return *this = *this + b; }
    QuadExt& operator-=(const QuadExt& b) { return *this = *this - b; }
    QuadExt& operator*=(const QuadExt& b) { return *this = *this * b; }
    QuadExt& operator/=(const QuadExt& b) { return *this = *this / b; }

    // Total order on canonical triples (x, then y, then d); used for
    // deterministic sets and maps, not a numeric order.
    static int compare(const QuadExt& a, const QuadExt& b);

  private:
    struct canonical_tag {};
    QuadExt(Rational x, Rational y, std::int64_t d, canonical_tag)
        : x_(std::move(x)), y_(std::move(y)), d_(d) {}
    static QuadExt make_canonical(Rational x, Rational y, std::int64_t d);
    friend QuadExt conj(const QuadExt& z);

    Rational x_, y_;
    std::int64_t d_;
};

QuadExt conj(const QuadExt& z);
Rational abs_squared(const QuadExt& z); // x^2 + d*y^2 == z * conj(z)
ComplexFloat to_float(const QuadExt& z);

// Spec-level canonicalization entry point: extracts square factors of d
// into y and enforces y == 0 => d == 1.
QuadExt normalize_radicand(Rational x, Rational y, std::int64_t d);

// The unimodular number re + i*sqrt(1 - re^2) (imag_sign < 0 conjugates).
// Requires |re| <= 1; the imaginary part always lands in some Q(i*sqrt(d)).
QuadExt unimodular_from_re(const Rational& re, int imag_sign = +1);

// "x + y*i*sqrt(d)" with rational parts in p/q form; plain "x" when y == 0.
std::string to_string(const QuadExt& z);

struct QuadExtLess {
    bool operator()(const QuadExt& a, const QuadExt& b) const {
        return QuadExt::compare(a, b) < 0;
    }
};

} // namespace hforge
