#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hforge/chm.hpp"

namespace hforge {

// Work caps for minor enumeration. 0 means unlimited. Exceeding a cap
// raises BudgetExceeded with the progress made; partial spectra are never
// returned silently.
struct Budget {
    std::uint64_t max_minors = 0;
    double max_seconds = 0.0;
};

// Multiset of |minor| values for one submatrix size d. Exact backend keys
// by |det|^2 (a rational, comparable across radicands); float backend by
// clustered |det|. Pairs are sorted ascending; multiplicities sum to
// C(n,d)^2.
struct MinorSpectrum {
    int d = 0;
    bool exact = true;
    std::vector<std::pair<Rational, std::uint64_t>> pairs;
    std::vector<std::pair<double, std::uint64_t>> fpairs;

    std::uint64_t total_multiplicity() const;

    friend bool operator==(const MinorSpectrum&, const MinorSpectrum&) = default;
};

// OpenMP kernel. Row subsets are walked in colexicographic order and split
// into contiguous per-worker chunks; partial counts merge through a sorted
// map union, so the result is identical for every worker count.
MinorSpectrum minor_spectrum(const Chm& h, int d, const Budget& budget = {});

// Serial reference implementation; kept as the cross-check for the
// parallel kernel (tests assert equality) and as the benchmark baseline.
MinorSpectrum minor_spectrum_serial(const Chm& h, int d, const Budget& budget = {});

// Sorted (value, multiplicity) list -> clustered list, merging neighbours
// closer than kClusterGap * max(1, value) into their weighted mean.
std::vector<std::pair<double, std::uint64_t>> cluster_values(
    std::vector<std::pair<double, std::uint64_t>> sorted);

} // namespace hforge
