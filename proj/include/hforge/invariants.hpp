#pragma once

#include <map>
#include <string>
#include <vector>

#include "hforge/minors.hpp"

namespace hforge {

// Deduplicated set of the n^4 quadruple products h_ij h_kl conj(h_il)
// conj(h_kj). Exact values are canonical triples; float values are
// clustered within kFloatTol. Closed under conjugation, contains 1.
struct HaagerupSet {
    bool exact = true;
    std::vector<QuadExt> values;       // sorted canonical
    std::vector<ComplexFloat> fvalues; // clustered, sorted by (re, im)
};

HaagerupSet haagerup_set(const Chm& h);

// Float projection (clustered) of any Haagerup set; used for
// cross-backend comparison.
std::vector<ComplexFloat> haagerup_floats(const HaagerupSet& s);

struct Fingerprint {
    int n = 0;
    std::vector<MinorSpectrum> spectra; // d ascending

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

// Default submatrix size cap: min(floor(n/2), 5). Sizes beyond 5 are a
// deliberate opt-in (the minor count explodes).
int default_dmax(int n);

// Spectra for d = 2..dmax, ascending in d, each sorted ascending.
Fingerprint fingerprint(const Chm& h, int dmax = -1, const Budget& budget = {});

struct DualityReport {
    bool ok = false;
    int d = 0;
    std::string detail; // explains the first mismatch when !ok
};

// Enumerates the d and n-d spectra independently and checks the exact
// pairing |det(n-d)|^2 = n^(n-2d) |det(d)|^2 with equal multiplicities
// (float backend: |det| scale n^(n/2-d) within tolerance). A violation
// means an engine bug, not a property of the matrix.
DualityReport duality_check(const Chm& h, int d, const Budget& budget = {});

struct BlockDetCheck {
    bool ok = false;
    bool exact = true;
    Rational lhs, rhs; // n^(n-r) |det A|^2 vs n^r |det D|^2
    double lhs_f = 0, rhs_f = 0;
};

// Unitary block-determinant identity on H/sqrt(n), kept in pure rational
// bookkeeping: A = h[rows x cols], D = the complementary block.
BlockDetCheck block_det_check(const Chm& h, int r); // leading split
BlockDetCheck block_det_check(const Chm& h, const std::vector<int>& rows,
                              const std::vector<int>& cols);

// Small dense exact matrix; carrier for the determinant-lemma harness.
struct QuadMat {
    int rows = 0, cols = 0;
    std::vector<QuadExt> a;

    QuadMat() = default;
    QuadMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    QuadExt& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const QuadExt& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

QuadMat qmat_mul(const QuadMat& a, const QuadMat& b);
QuadMat qmat_conj_transpose(const QuadMat& a);
QuadMat qmat_inverse(const QuadMat& a); // throws Singular
QuadExt qmat_det(const QuadMat& a);

// Both sides of det(A + U V*) = det(I + V* A^{-1} U) det(A); the test
// harness asserts their equality.
std::pair<QuadExt, QuadExt> det_lemma_eval(const QuadMat& a, const QuadMat& u, const QuadMat& v);

struct IntegerLess {
    bool operator()(const Integer& a, const Integer& b) const {
        return mpz_cmp(a.get_mpz_t(), b.get_mpz_t()) < 0;
    }
};

struct CensusResult {
    int d = 0;
    std::uint64_t seed = 0;
    std::uint64_t count = 0;
    bool exhaustive = false; // count covered all C(n,d)^2 pairs
    std::map<Integer, std::uint64_t, IntegerLess> histogram; // |det| -> hits
};

// Histogram of |det| over `count` seeded random (row, column) subset
// pairs of a real Hadamard matrix. Sample i draws from its own stream
// derived from (seed, i), so the result is byte-identical for any worker
// count. When count >= C(n,d)^2 the full census is enumerated instead.
CensusResult sample_minor_census(const RealHadamard& h, int d, std::uint64_t count,
                                 std::uint64_t seed);

} // namespace hforge
