#include "hforge/rng.hpp"

#include <algorithm>
#include <numeric>

#include "hforge/errors.hpp"

namespace hforge {

std::vector<int> sample_subset(SplitMix64& rng, int n, int d) {
    if (d < 0 || d > n) throw BadParameters("subset size out of range");
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (int t = 0; t < d; ++t) {
        int j = t + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n - t)));
        std::swap(idx[t], idx[j]);
    }
    idx.resize(d);
    std::sort(idx.begin(), idx.end());
    return idx;
}

} // namespace hforge
