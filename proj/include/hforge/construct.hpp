#pragma once

#include <vector>

#include "hforge/chm.hpp"
#include "hforge/designs.hpp"

namespace hforge {

enum class Sign { plus, minus };

// Thrown when a parameter triple admits no unimodular induced entry
// (Re[a] < -1); carries the offending real part.
struct Infeasible : Error {
    Rational re;
    explicit Infeasible(Rational r)
        : Error("no unimodular induced entry: Re[a] = " + rational_to_string(r) + " < -1"),
          re(std::move(r)) {}
};

// The two conjugate choices of the entry replacing the 0s of a
// 2-(v,k,lambda) incidence: Re[a] = 1 - v(v-1)/(2k(v-k)), feasible iff
// Re[a] >= -1 (equivalently (v-sqrt v)/2 <= k <= (v+sqrt v)/2).
struct InducedEntry {
    Rational re;
    QuadExt value_pos, value_neg;
};

InducedEntry induced_entry(int v, int k, int lambda); // Infeasible / BadParameters

// Non-throwing probe used by parameter sweeps.
bool induced_feasible(int v, int k, int lambda, Rational* re_out = nullptr);

// Replace every 0 of the incidence with the chosen induced entry; the
// result is an exact, regular CHM of order v composed of {1, a}.
Chm induce_from_design(const BlockDesign& b, Sign sign);

// Theorem-2-style construction: drop the conference matrix's first row and
// column, diagonal 0 -> 1, off-diagonal +1 -> c, -1 -> conj(c), with
// Re[c] = (-1 +- sqrt(4m+1))/(4m). Exact backend when 4m+1 is a perfect
// square, float backend otherwise.
Chm conference_to_chm(const ConferenceMatrixReal& c, Sign sign);

// Theorem-3-style construction from a normalized symmetric real Hadamard
// matrix of order 4m >= 8: drop first row/column, off-diagonal -1 -> b,
// diagonal +1 -> -b, with b = -1 + 1/(2m-2) +- i*sqrt(4m-5)/(2m-2).
Chm sym_hadamard_to_chm(const RealHadamard& h, Sign sign);

struct ThreeEntrySolution {
    QuadExt x, y, z;
};

// All unimodular solutions of the six orthogonality equations behind the
// symmetric-Hadamard construction: the family {1, a, a} (the induced-entry
// values) and {-b, -1, b}, each for both conjugate sign choices. Every
// returned triple is re-verified by exact substitution.
std::vector<ThreeEntrySolution> solve_theorem3_system(int m);

struct TwoEntryClass {
    enum Kind { Regular, RealMenon, NotTwoEntry } kind = NotTwoEntry;
    BlockDesign design; // set when Regular
    QuadExt a;          // set when Regular
    std::string note;
};

// Scans raw entries (no dephasing): {1, a} with a != -1 recovers the
// block design via lambda = k + v/(2Re[a]-2); {1, -1} reports the real
// Menon case; anything else is NotTwoEntry.
TwoEntryClass classify_two_entry(const Chm& h);

} // namespace hforge
