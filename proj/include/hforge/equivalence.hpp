#pragma once

#include "hforge/invariants.hpp"

namespace hforge {

// Witness that two matrices differ in an equivalence invariant: a Haagerup
// value present on one side only, or a (d, |det|^2) spectrum entry with
// differing multiplicity. Certificates re-validate by recomputation.
struct InequivalenceCertificate {
    enum Kind { haagerup, fingerprint } kind = haagerup;
    int direction = 1; // 1: witness held by the first matrix, 2: the second
    bool numeric = false; // tolerance-based (some float backend involved)

    // haagerup witness
    QuadExt witness;          // exact comparisons
    ComplexFloat witness_f{}; // numeric comparisons

    // fingerprint witness
    int d = 0;
    Rational value_sq;
    double value_f = 0;
    std::uint64_t mult_first = 0, mult_second = 0;
};

struct CompareOutcome {
    bool equal = false;
    bool numeric = false; // "numerically equal", not proven equal
    InequivalenceCertificate cert; // set when !equal
};

// Exact-exact: set difference on canonical triples (sound across
// radicands). Anything involving a float backend is compared via float
// projection within kCrossCompareTol and labeled numeric.
CompareOutcome compare_haagerup(const Chm& h1, const Chm& h2);

// Spectra compared d by d (2..dmax); the first mismatch becomes the
// certificate. Requires equal orders.
CompareOutcome compare_fingerprint(const Chm& h1, const Chm& h2, int dmax,
                                   const Budget& budget = {});

struct CertifyOutcome {
    bool decided = false; // false: Undecided (invariants agree; NOT a proof of equivalence)
    bool numeric = false;
    InequivalenceCertificate cert; // set when decided
};

// Pipeline: Haagerup set first, then fingerprints up to dmax.
CertifyOutcome certify_inequivalent(const Chm& h1, const Chm& h2, int dmax,
                                    const Budget& budget = {});

// Recomputes both invariants and confirms the witness's presence/absence.
bool certificate_revalidates(const InequivalenceCertificate& cert, const Chm& h1, const Chm& h2);

} // namespace hforge
