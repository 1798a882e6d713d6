#include "hforge/subsets.hpp"

#include <array>

#include "hforge/errors.hpp"

namespace hforge {

namespace {
constexpr int kMaxN = 64;

const std::array<std::array<std::uint64_t, kMaxN + 1>, kMaxN + 1>& table() {
    static const auto t = [] {
        std::array<std::array<std::uint64_t, kMaxN + 1>, kMaxN + 1> c{};
        for (int n = 0; n <= kMaxN; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
        return c;
    }();
    return t;
}
} // namespace

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (n > kMaxN) throw BadParameters("binomial table bound exceeded");
    return table()[n][k];
}

std::uint64_t colex_rank(const int* s, int d) {
    std::uint64_t r = 0;
    for (int i = 0; i < d; ++i) r += binom(s[i], i + 1);
    return r;
}

void colex_unrank(std::uint64_t rank, int d, int* out) {
    for (int i = d - 1; i >= 0; --i) {
        int c = i; // smallest admissible value is i
        while (binom(c + 1, i + 1) <= rank) ++c;
        out[i] = c;
        rank -= binom(c, i + 1);
    }
}

bool colex_next(int* s, int d, int n) {
    for (int i = 0; i < d; ++i) {
        int limit = (i + 1 < d) ? s[i + 1] : n;
        if (s[i] + 1 < limit) {
            ++s[i];
            for (int t = 0; t < i; ++t) s[t] = t;
            return true;
        }
    }
    return false;
}

std::vector<int> complement_subset(const std::vector<int>& s, int n) {
    std::vector<bool> in(n, false);
    for (int v : s) in[v] = true;
    std::vector<int> out;
    out.reserve(n - s.size());
    for (int v = 0; v < n; ++v)
        if (!in[v]) out.push_back(v);
    return out;
}

} // namespace hforge
