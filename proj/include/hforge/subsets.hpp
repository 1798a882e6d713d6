#pragma once

#include <cstdint>
#include <vector>

namespace hforge {

// C(n, k) as uint64; valid for the orders this library enumerates.
std::uint64_t binom(int n, int k);

// Colexicographic subset order: S < T iff the largest differing element is
// smaller in S. rank(S) = sum_i C(s_i, i+1) over s_0 < s_1 < ... < s_{d-1}.
std::uint64_t colex_rank(const int* s, int d);
void colex_unrank(std::uint64_t rank, int d, int* out);

// Advances s to its colex successor among d-subsets of {0..n-1}.
// Returns false (s untouched) when s is already the last subset.
bool colex_next(int* s, int d, int n);

std::vector<int> complement_subset(const std::vector<int>& s, int n);

} // namespace hforge
