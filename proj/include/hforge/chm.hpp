#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hforge/designs.hpp"
#include "hforge/scalar.hpp"

namespace hforge {

enum class Backend { exact, floating };

/// A square matrix of unimodular scalars over one of two backends:
/// exact entries in a single Q(i*sqrt(d)), or complex doubles. Entries are
/// immutable after construction; all operations on it are pure.
class Chm {
  public:
    static Chm exact_matrix(int n, std::vector<QuadExt> entries);
    static Chm float_matrix(int n, std::vector<ComplexFloat> entries);

    int n() const { return n_; }
    Backend backend() const { return backend_; }
    bool exact() const { return backend_ == Backend::exact; }

    // Common radicand of the exact entries (1 when all are rational).
    std::int64_t radicand() const { return d_; }
    bool all_rational() const;

    const QuadExt& xat(int i, int j) const { return xe_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<QuadExt>& exact_entries() const { return xe_; }
    const std::vector<ComplexFloat>& float_entries() const { return fe_; }

    // Works on both backends (projects exact entries).
    ComplexFloat fat(int i, int j) const;

    Chm to_float_backend() const;

    friend bool operator==(const Chm&, const Chm&) = default;

  private:
    Chm() = default;
    int n_ = 0;
    Backend backend_ = Backend::exact;
    std::int64_t d_ = 1;
    std::vector<QuadExt> xe_;
    std::vector<ComplexFloat> fe_;
};

struct ChmViolation {
    bool ok = true;
    std::string what;       // empty when ok
    int row_i = -1, row_j = -1;
    double deviation = 0.0; // worst |<row_i, row_j>| off-diagonal (float) or projected (exact)
};

// Exact backend: every inner product checked with zero tolerance.
// Float backend: off-diagonal |<r_i, r_j>| <= kFloatTol * n, unimodularity
// within kFloatTol. Reports the worst row pair, never throws.
ChmViolation verify_chm(const Chm& h);

// Equivalent matrix with first row and column all 1: divide column j by
// h[0][j], then row i by the updated h[i][0]. Exact and deterministic.
Chm dephase(const Chm& h);

struct EquivalenceMove {
    std::vector<int> row_perm, col_perm;          // images: row i of output reads input row row_perm[i]
    std::vector<QuadExt> row_phase, col_phase;    // exact backend phases (unimodular, single field)
    std::vector<ComplexFloat> row_phase_f, col_phase_f; // float backend phases
};

EquivalenceMove identity_move(int n);
// Random permutations; phases drawn from products of matrix entries (exact
// backend, stays in the field) or random angles (float backend).
EquivalenceMove random_move(const Chm& h, std::uint64_t seed);

// output[i][j] = rp[i] * input[row_perm[i]][col_perm[j]] * cp[j]
Chm apply_equivalence(const Chm& h, const EquivalenceMove& mv);

struct RegularityReport {
    bool regular = false;
    std::vector<Rational> abs_sq_row_sums; // exact backend witness
    std::vector<double> abs_row_sums;      // float backend witness
};

RegularityReport is_regular(const Chm& h);

// Smallest m with all entries m-th roots of unity. Exact backend checks the
// closed forms reachable in quadratic fields (orders 1,2,3,4,6); float
// backend runs an arg/2pi rationality scan with denominators up to 360.
std::optional<int> detect_butson(const Chm& h);

Chm fourier(int n); // float backend, entries exp(2*pi*i*j*k/n)

// Entry-exact transcriptions of the catalogue matrices P7, U15, V15, W9A.
Chm fixture(const std::string& name);
std::vector<std::string> fixture_names();

Chm chm_from_real(const RealHadamard& h);

bool chm_is_circulant(const Chm& h);

} // namespace hforge
