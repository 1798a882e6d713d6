#include <doctest.h>

#include <cmath>

#include "hforge/chm.hpp"
#include "hforge/json_io.hpp"

using namespace hforge;

TEST_CASE("fixtures verify exactly") {
    for (const std::string& name : fixture_names()) {
        Chm h = fixture(name);
        CAPTURE(name);
        CHECK(verify_chm(h).ok);
        CHECK(h.exact());
    }
    CHECK_THROWS_AS(fixture("N9"), UnknownFixture);
}

TEST_CASE("fixture spot entries") {
    Chm p7 = fixture("P7");
    CHECK(p7.xat(0, 0) == QuadExt(-1));
    CHECK(p7.xat(0, 2) == QuadExt(frac(-1, 2), frac(1, 2), 3));

    Chm w9a = fixture("W9A");
    for (int i = 0; i < 9; ++i) CHECK(w9a.xat(i, i) == QuadExt(1));

    Chm v15 = fixture("V15");
    CHECK(v15.xat(0, 0) == QuadExt(-1));
    CHECK(v15.xat(2, 2) == -QuadExt(frac(-5, 6), frac(1, 6), 11));

    Chm u15 = fixture("U15");
    QuadExt a(frac(-7, 8), frac(1, 8), 15);
    for (int i = 0; i < 15; ++i)
        for (int j = 0; j < 15; ++j) {
            bool is_one = (u15.xat(i, j) == QuadExt(1));
            bool is_a = (u15.xat(i, j) == a);
            CHECK((is_one || is_a));
        }
}

TEST_CASE("verify_chm flags broken orthogonality") {
    Chm p7 = fixture("P7");
    std::vector<QuadExt> e = p7.exact_entries();
    e[3] = -e[3];
    Chm broken = Chm::exact_matrix(7, std::move(e));
    ChmViolation r = verify_chm(broken);
    CHECK_FALSE(r.ok);
    CHECK(r.what == "rows not orthogonal");
    CHECK(r.row_i >= 0);

    std::vector<QuadExt> e2 = p7.exact_entries();
    e2[0] = QuadExt(frac(1, 2)); // not unimodular
    CHECK(verify_chm(Chm::exact_matrix(7, std::move(e2))).what == "entry not unimodular");
}

TEST_CASE("fourier") {
    Chm f2 = fourier(2);
    CHECK(std::abs(f2.fat(1, 1) - ComplexFloat(-1, 0)) < 1e-15);
    for (int n : {2, 3, 4, 5, 7, 13}) CHECK(verify_chm(fourier(n)).ok);
    // cube roots of unity
    Chm f3 = fourier(3);
    CHECK(std::abs(f3.fat(1, 1) - ComplexFloat(-0.5, std::sqrt(3) / 2)) < 1e-12);
}

TEST_CASE("dephase") {
    Chm f3 = fourier(3);
    Chm d = dephase(f3);
    for (size_t t = 0; t < d.float_entries().size(); ++t)
        CHECK(std::abs(d.float_entries()[t] - f3.float_entries()[t]) < 1e-15);

    for (const std::string& name : fixture_names()) {
        Chm h = fixture(name);
        Chm once = dephase(h);
        CHECK(verify_chm(once).ok);
        for (int t = 0; t < h.n(); ++t) {
            CHECK(once.xat(0, t) == QuadExt(1));
            CHECK(once.xat(t, 0) == QuadExt(1));
        }
        CHECK(dephase(once) == once); // idempotent
    }
}

TEST_CASE("apply_equivalence") {
    Chm p7 = fixture("P7");
    CHECK(apply_equivalence(p7, identity_move(7)) == p7);

    EquivalenceMove swap01 = identity_move(7);
    std::swap(swap01.row_perm[0], swap01.row_perm[1]);
    CHECK(verify_chm(apply_equivalence(p7, swap01)).ok);

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Chm moved = apply_equivalence(p7, random_move(p7, seed));
        CHECK(verify_chm(moved).ok);
    }
    Chm f5 = fourier(5);
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
        CHECK(verify_chm(apply_equivalence(f5, random_move(f5, seed))).ok);
}

TEST_CASE("apply_equivalence rejects foreign phases") {
    Chm p7 = fixture("P7"); // lives in Q(i*sqrt(3))
    EquivalenceMove mv = identity_move(7);
    mv.row_phase[0] = QuadExt(frac(1, 4), frac(1, 4), 15);
    CHECK_THROWS_AS(apply_equivalence(p7, mv), MixedRadicand);
}

TEST_CASE("is_regular") {
    CHECK(is_regular(fixture("U15")).regular);
    CHECK(is_regular(fixture("W9A")).regular);
    CHECK_FALSE(is_regular(fixture("P7")).regular);
    // row sums of F4 are (4,0,0,0): absolute values are not constant
    RegularityReport r = is_regular(fourier(4));
    CHECK_FALSE(r.regular);
    CHECK(r.abs_row_sums[0] == doctest::Approx(4.0));
    CHECK(r.abs_row_sums[1] == doctest::Approx(0.0));
}

TEST_CASE("detect_butson") {
    CHECK(detect_butson(fourier(3)) == 3);
    CHECK(detect_butson(fourier(4)) == 4);
    CHECK(detect_butson(fourier(7)) == 7);
    CHECK(detect_butson(chm_from_real(sylvester_hadamard(2))) == 2);
    CHECK_FALSE(detect_butson(fixture("U15")).has_value());
    CHECK(detect_butson(fixture("P7")) == 6); // entries {1, -1, w, -w}
}

TEST_CASE("chm_from_real and circulant detection") {
    Chm h8 = chm_from_real(sylvester_hadamard(3));
    CHECK(verify_chm(h8).ok);
    CHECK(h8.all_rational());
    CHECK_FALSE(chm_is_circulant(h8));
}

TEST_CASE("chm JSON round trips") {
    Chm u15 = fixture("U15");
    json j = chm_to_json(u15);
    CHECK(j["backend"] == "exact");
    CHECK(j["d"] == 15);
    CHECK(j["entries"][0][0]["x"] == "-7/8");
    CHECK(chm_from_json(j) == u15);

    Chm f7 = fourier(7);
    json jf = chm_to_json(f7);
    CHECK(jf["backend"] == "float");
    Chm back = chm_from_json(jf);
    CHECK(back.n() == 7);
    for (int i = 0; i < 7; ++i)
        for (int c = 0; c < 7; ++c) CHECK(back.fat(i, c) == f7.fat(i, c));
}
