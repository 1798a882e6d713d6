#include "hforge/scalar.hpp"

#include <cmath>

namespace hforge {

QuadExt QuadExt::make_canonical(Rational x, Rational y, std::int64_t d) {
    if (y == 0) return QuadExt(std::move(x), Rational(0), 1, canonical_tag{});
    if (d == 1) return QuadExt(std::move(x), std::move(y), 1, canonical_tag{});
    Integer s, f;
    split_square(Integer(static_cast<long>(d)), s, f);
    if (s != 1) y *= Rational(s);
    std::int64_t df = f.get_si();
    if (df == 1) { // i*sqrt(1) == i lives in d = 1
        return QuadExt(std::move(x), std::move(y), 1, canonical_tag{});
    }
    return QuadExt(std::move(x), std::move(y), df, canonical_tag{});
}

QuadExt::QuadExt(Rational x, Rational y, std::int64_t d) {
    if (d < 1) throw BadParameters("radicand must be a positive integer");
    *this = make_canonical(std::move(x), std::move(y), d);
}

int QuadExt::compare(const QuadExt& a, const QuadExt& b) {
    int c = mpq_cmp(a.x_.get_mpq_t(), b.x_.get_mpq_t());
    if (c != 0) return c;
    c = mpq_cmp(a.y_.get_mpq_t(), b.y_.get_mpq_t());
    if (c != 0) return c;
    return a.d_ < b.d_ ? -1 : (a.d_ > b.d_ ? 1 : 0);
}

namespace {
// Radicand both operands agree to live in; rational values embed anywhere.
std::int64_t common_radicand(const QuadExt& a, const QuadExt& b) {
    if (a.d() == b.d()) return a.d();
    if (a.y() == 0) return b.d();
    if (b.y() == 0) return a.d();
    throw MixedRadicand("operands live in different quadratic fields: d=" +
                        std::to_string(a.d()) + " vs d=" + std::to_string(b.d()));
}
} // namespace

QuadExt QuadExt::operator-() const {
    return QuadExt(-x_, -y_, d_, canonical_tag{});
}

QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    std::int64_t d = common_radicand(a, b);
    Rational y = a.y_ + b.y_;
    if (y == 0) return QuadExt(a.x_ + b.x_);
    return QuadExt(a.x_ + b.x_, std::move(y), d, QuadExt::canonical_tag{});
}

QuadExt operator-(const QuadExt& a, const QuadExt& b) {
    std::int64_t d = common_radicand(a, b);
    Rational y = a.y_ - b.y_;
    if (y == 0) return QuadExt(a.x_ - b.x_);
    return QuadExt(a.x_ - b.x_, std::move(y), d, QuadExt::canonical_tag{});
}

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    std::int64_t d = common_radicand(a, b);
    // (x1 + y1 w)(x2 + y2 w) with w^2 = -d
    Rational x = a.x_ * b.x_ - Rational(static_cast<long>(d)) * a.y_ * b.y_;
    Rational y = a.x_ * b.y_ + a.y_ * b.x_;
    if (y == 0) return QuadExt(std::move(x));
    return QuadExt(std::move(x), std::move(y), d, QuadExt::canonical_tag{});
}

QuadExt operator/(const QuadExt& a, const QuadExt& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero scalar");
    std::int64_t d = common_radicand(a, b);
    Rational n = abs_squared(b);
    // a / b = a * conj(b) / |b|^2
    Rational x = (a.x_ * b.x_ + Rational(static_cast<long>(d)) * a.y_ * b.y_) / n;
    Rational y = (a.y_ * b.x_ - a.x_ * b.y_) / n;
    if (y == 0) return QuadExt(std::move(x));
    return QuadExt(std::move(x), std::move(y), d, QuadExt::canonical_tag{});
}

QuadExt conj(const QuadExt& z) {
    return QuadExt(z.x_, -z.y_, z.d_, QuadExt::canonical_tag{});
}

Rational abs_squared(const QuadExt& z) {
    return z.x() * z.x() + Rational(static_cast<long>(z.d())) * z.y() * z.y();
}

ComplexFloat to_float(const QuadExt& z) {
    double im = z.y().get_d() * std::sqrt(static_cast<double>(z.d()));
    return {z.x().get_d(), im};
}

QuadExt normalize_radicand(Rational x, Rational y, std::int64_t d) {
    return QuadExt(std::move(x), std::move(y), d);
}

QuadExt unimodular_from_re(const Rational& re, int imag_sign) {
    Rational im_sq = 1 - re * re;
    if (im_sq < 0) throw BadParameters("no unimodular value with |Re| > 1");
    if (im_sq == 0) return QuadExt(re);
    // sqrt(p/q) = sqrt(p*q)/q
    Integer pq = im_sq.get_num() * im_sq.get_den();
    Integer s, f;
    split_square(pq, s, f);
    Rational y(s, im_sq.get_den());
    y.canonicalize();
    if (imag_sign < 0) y = -y;
    return QuadExt(re, y, f.get_si());
}

std::string to_string(const QuadExt& z) {
    if (z.y() == 0) return rational_to_string(z.x());
    std::string out = rational_to_string(z.x());
    Rational ay = abs(z.y());
    out += (z.y() < 0) ? " - " : " + ";
    out += rational_to_string(ay) + "*i*sqrt(" + std::to_string(z.d()) + ")";
    return out;
}

} // namespace hforge
