#include <doctest.h>

#include <cmath>

#include "hforge/rng.hpp"
#include "hforge/scalar.hpp"

using namespace hforge;

TEST_CASE("arithmetic on the catalogue entry values") {
    // a = -7/8 + i*sqrt(15)/8 is unimodular: a * conj(a) = 1
    QuadExt a(frac(-7, 8), frac(1, 8), 15);
    CHECK(a * conj(a) == QuadExt(1));
    CHECK(abs_squared(a) == 1);

    // z + (-z) = 0
    CHECK((a + (-a)).is_zero());

    // omega^2 = conj(omega), expanded by hand:
    // x^2 - 3 y^2 = 1/4 - 3/4 = -1/2, 2 x y = -1/2
    QuadExt w(frac(-1, 2), frac(1, 2), 3);
    CHECK(w * w == conj(w));
    CHECK(w * w == QuadExt(frac(-1, 2), frac(-1, 2), 3));
}

TEST_CASE("division and errors") {
    QuadExt w(frac(-1, 2), frac(1, 2), 3);
    CHECK(w / w == QuadExt(1));
    CHECK(QuadExt(1) / w == conj(w)); // unimodular inverse
    CHECK_THROWS_AS(w / QuadExt(0), DivisionByZero);

    QuadExt u(frac(1, 4), frac(1, 4), 15);
    CHECK_THROWS_AS(w + u, MixedRadicand);
    CHECK_THROWS_AS(w * u, MixedRadicand);
    // rational operands embed into any field
    CHECK(w * QuadExt(-1) == -w);
    CHECK((u + QuadExt(frac(3, 4))) == QuadExt(frac(1), frac(1, 4), 15));
}

TEST_CASE("normalize_radicand canonical forms") {
    CHECK(normalize_radicand(frac(0), frac(1, 2), 12) == QuadExt(frac(0), frac(1), 3));
    CHECK(normalize_radicand(frac(3), frac(0), 7) == QuadExt(frac(3), frac(0), 1));
    QuadExt c = normalize_radicand(frac(1, 4), frac(1, 4), 15);
    CHECK(c.x() == frac(1, 4));
    CHECK(c.y() == frac(1, 4));
    CHECK(c.d() == 15);
    // i*sqrt(4) = 2i lands in d = 1
    CHECK(normalize_radicand(frac(0), frac(1), 4) == QuadExt(frac(0), frac(2), 1));
}

TEST_CASE("abs_squared") {
    CHECK(abs_squared(QuadExt(frac(-7, 8), frac(1, 8), 15)) == 1);
    CHECK(abs_squared(QuadExt(0)) == 0);
    CHECK(abs_squared(QuadExt(frac(1), frac(1), 3)) == 4); // 1 + 3*1
}

TEST_CASE("to_float") {
    ComplexFloat z = to_float(QuadExt(frac(-1, 2), frac(1, 2), 3));
    CHECK(z.real() == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(z.imag() == doctest::Approx(0.8660254037844386).epsilon(1e-15));
    CHECK(to_float(QuadExt(1)) == ComplexFloat(1.0, 0.0));
    ComplexFloat c = to_float(QuadExt(frac(1, 4), frac(1, 4), 15));
    CHECK(c.real() == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(c.imag() == doctest::Approx(0.9682458365518543).epsilon(1e-15));
}

TEST_CASE("unimodularity is closed under products") {
    SplitMix64 rng(20240901);
    for (int trial = 0; trial < 100; ++trial) {
        // random rational Re in [-1, 1] gives a unimodular value
        long num = static_cast<long>(rng.bounded(201)) - 100;
        Rational re = frac(num, 100);
        QuadExt z = unimodular_from_re(re, (rng.next() & 1) ? +1 : -1);
        CHECK(abs_squared(z) == 1);
        CHECK(abs_squared(z * z) == 1);
        QuadExt w = unimodular_from_re(re, +1); // same field, products stay put
        CHECK(abs_squared(z * w) == 1);
        // conj is an involution and z * conj(z) is the real |z|^2
        CHECK(conj(conj(z)) == z);
        QuadExt p = z * conj(z);
        CHECK(p.y() == 0);
        CHECK(p.x() == abs_squared(z));
    }
}

TEST_CASE("canonical equality matches float projection") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        long num = static_cast<long>(rng.bounded(199)) - 99;
        QuadExt z = unimodular_from_re(frac(num, 100), +1);
        QuadExt w = unimodular_from_re(frac(num, 100), +1);
        CHECK(z == w);
        CHECK(std::abs(to_float(z) - to_float(w)) < 1e-12);
        QuadExt other = unimodular_from_re(frac(num == 0 ? 1 : -num, 101), +1);
        if (z != other) CHECK(std::abs(to_float(z) - to_float(other)) > 1e-12);
    }
}

TEST_CASE("string form") {
    CHECK(to_string(QuadExt(frac(-7, 8), frac(1, 8), 15)) == "-7/8 + 1/8*i*sqrt(15)");
    CHECK(to_string(QuadExt(frac(1, 2), frac(-1, 2), 3)) == "1/2 - 1/2*i*sqrt(3)");
    CHECK(to_string(QuadExt(frac(3))) == "3/1");
    CHECK(rational_to_string(frac(-1)) == "-1/1");
    CHECK(rational_from_string("-7/8") == frac(-7, 8));
    CHECK(rational_from_string("4/8") == frac(1, 2)); // parsed values reduce
}

TEST_CASE("surd rendering") {
    CHECK(render_sqrt(frac(0)) == "0");
    CHECK(render_sqrt(frac(4)) == "2");
    CHECK(render_sqrt(frac(3)) == "√3");
    CHECK(render_sqrt(frac(12)) == "2√3");
    CHECK(render_sqrt(frac(16384)) == "128");
}
