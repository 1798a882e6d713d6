#pragma once

#include <string>
#include <vector>

#include "hforge/errors.hpp"

namespace hforge {

// Dense square integer matrix; the shared carrier for 0/1 incidences,
// conference matrices and real Hadamard matrices (orders in scope <= ~100).
struct IntMat {
    int n = 0;
    std::vector<int> a; // row-major

    IntMat() = default;
    explicit IntMat(int order) : n(order), a(static_cast<size_t>(order) * order, 0) {}

    int& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    int at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    friend bool operator==(const IntMat&, const IntMat&) = default;
};

struct BlockDesign {
    int v = 0, k = 0, lambda = 0;
    IntMat incidence;

    int order() const { return k - lambda; } // the design order n = k - lambda
};

struct ConferenceMatrixReal {
    IntMat m; // zero diagonal, +-1 off-diagonal
    int order() const { return m.n; }
};

struct RealHadamard {
    IntMat m; // +-1 entries
    int order() const { return m.n; }
};

struct DesignVerification {
    bool ok = false;
    int v = 0, k = 0, lambda = 0;
    std::string reason;          // first violated condition when !ok
    int witness_i = -1, witness_j = -1;
};

// Checks square 0/1 shape, constant row/column sums, B*B^T = (k-l)I + lJ,
// the parameter identity l(v-1) = k(k-1) and l < k < v. The report names
// the first violated condition and the witness rows.
DesignVerification verify_2design(const IntMat& incidence);
BlockDesign require_2design(const IntMat& incidence); // throws NotADesign

// Quadratic-residue (Paley) design for q = 3 mod 4: circulant
// 2-(q, (q-1)/2, (q-3)/4) built over GF(q) in fixed element order.
BlockDesign paley_design(int q);

// Kronecker power of [[1,1],[1,-1]]: symmetric, normalized, order 2^t.
RealHadamard sylvester_hadamard(int t);

// Core of a normalized real Hadamard matrix as a Hadamard design:
// drop first row/column, +1 -> 1, -1 -> 0; verifies as 2-(4m-1,2m-1,m-1).
BlockDesign hadamard_core_design(const RealHadamard& h);

// Inverse of the above: pad a 2-(4m-1,2m-1,m-1) design with a 1s border.
RealHadamard hadamard_from_design(const BlockDesign& b);

// Symmetric normalized conference matrix of order q+1 for q = 1 mod 4:
// Jacobsthal core Q_ab = chi(a - b) bordered by +1s.
ConferenceMatrixReal paley_conference(int q);

// Sign flips (rows/columns, greedily from row 1) onto normalized form;
// symmetric inputs are flipped in row/column pairs, which keeps symmetry.
ConferenceMatrixReal normalize_conference(ConferenceMatrixReal c);

bool is_circulant(const IntMat& m); // each row = previous shifted right by 1
bool is_symmetric(const IntMat& m);
bool is_normalized_pm1(const IntMat& m); // first row and column all +1
bool verify_real_hadamard(const RealHadamard& h);     // H H^T = n I
bool verify_conference(const ConferenceMatrixReal& c); // C C^T = (n-1) I

// Catalogue of built-in real Hadamard matrices: Sylvester 2, 4, 8, 16 and
// the order-12 matrix padded from the Paley design on GF(11).
std::vector<int> stored_real_hadamard_orders();
RealHadamard stored_real_hadamard(int order);

} // namespace hforge
