#include "hforge/minors.hpp"

#include <omp.h>

#include <atomic>
#include <chrono>
#include <map>

#include "hforge/constants.hpp"
#include "hforge/detkernel.hpp"
#include "hforge/subsets.hpp"

namespace hforge {

std::uint64_t MinorSpectrum::total_multiplicity() const {
    std::uint64_t t = 0;
    for (const auto& p : pairs) t += p.second;
    for (const auto& p : fpairs) t += p.second;
    return t;
}

namespace {

using Clock = std::chrono::steady_clock;

struct RationalLess {
    bool operator()(const Rational& a, const Rational& b) const {
        return mpq_cmp(a.get_mpq_t(), b.get_mpq_t()) < 0;
    }
};

// One evaluation policy per backend. Each worker owns a copy (scratch
// buffers included), evaluates |minor| keys and counts them in a local
// sorted map; maps merge by key union, which commutes, so the final
// spectrum does not depend on how work was split.

struct RationalSqPolicy { // exact backend, all entries rational
    using Key = Rational;
    using Map = std::map<Key, std::uint64_t, RationalLess>;
    const Chm* h;
    int d;
    std::vector<Rational> scratch;

    static RationalSqPolicy make(const Chm& h, int d) {
        return {&h, d, std::vector<Rational>(static_cast<size_t>(d) * d)};
    }
    Key eval(const int* rows, const int* cols) {
        const int n = h->n();
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                scratch[static_cast<size_t>(i) * d + j] = h->exact_entries()[static_cast<size_t>(rows[i]) * n + cols[j]].x();
        Rational det = det_gauss_rational(scratch, d);
        return det * det;
    }
};

struct QextSqPolicy { // exact backend, quadratic field entries
    using Key = Rational;
    using Map = std::map<Key, std::uint64_t, RationalLess>;
    const Chm* h;
    int d;
    std::vector<QuadExt> scratch;

    static QextSqPolicy make(const Chm& h, int d) {
        return {&h, d, std::vector<QuadExt>(static_cast<size_t>(d) * d)};
    }
    Key eval(const int* rows, const int* cols) {
        const int n = h->n();
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                scratch[static_cast<size_t>(i) * d + j] = h->exact_entries()[static_cast<size_t>(rows[i]) * n + cols[j]];
        return abs_squared(det_gauss_qext(scratch, d));
    }
};

struct FloatAbsPolicy { // float backend
    using Key = double;
    using Map = std::map<Key, std::uint64_t>;
    const Chm* h;
    int d;
    std::vector<ComplexFloat> scratch;

    static FloatAbsPolicy make(const Chm& h, int d) {
        return {&h, d, std::vector<ComplexFloat>(static_cast<size_t>(d) * d)};
    }
    Key eval(const int* rows, const int* cols) {
        const int n = h->n();
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                scratch[static_cast<size_t>(i) * d + j] = h->float_entries()[static_cast<size_t>(rows[i]) * n + cols[j]];
        return abs_det_lu(scratch, d);
    }
};

template <class Map>
void merge_into(Map& into, const Map& from) {
    for (const auto& [k, v] : from) into[k] += v;
}

// All C(n,d) column subsets against one fixed row subset.
template <class Policy>
void scan_columns(Policy& pol, const int* rows, int n, int d, typename Policy::Map& acc) {
    std::vector<int> cols(d);
    for (int t = 0; t < d; ++t) cols[t] = t;
    do {
        ++acc[pol.eval(rows, cols.data())];
    } while (colex_next(cols.data(), d, n));
}

template <class Policy>
typename Policy::Map enumerate_serial(const Chm& h, int d, const Budget& budget) {
    const int n = h.n();
    const std::uint64_t row_count = binom(n, d);
    const std::uint64_t total = row_count * binom(n, d);
    Policy pol = Policy::make(h, d);
    typename Policy::Map acc;
    std::vector<int> rows(d);
    for (int t = 0; t < d; ++t) rows[t] = t;
    std::uint64_t done = 0;
    const auto start = Clock::now();
    do {
        if (budget.max_minors && done + row_count > budget.max_minors)
            throw BudgetExceeded(done, total, "minor budget exceeded");
        if (budget.max_seconds > 0 && std::chrono::duration<double>(Clock::now() - start).count() > budget.max_seconds)
            throw BudgetExceeded(done, total, "time budget exceeded");
        scan_columns(pol, rows.data(), n, d, acc);
        done += row_count;
    } while (colex_next(rows.data(), d, n));
    return acc;
}

template <class Policy>
typename Policy::Map enumerate_parallel(const Chm& h, int d, const Budget& budget) {
    const int n = h.n();
    const std::uint64_t row_count = binom(n, d);
    const std::uint64_t total = row_count * row_count;
    typename Policy::Map acc;
    std::atomic<std::uint64_t> done{0};
    std::atomic<bool> abort{false};
    const auto start = Clock::now();

    #pragma omp parallel
    {
        Policy pol = Policy::make(h, d);
        typename Policy::Map local;
        std::vector<int> rows(d);
        // contiguous chunks of the colex row-rank range per worker
        #pragma omp for schedule(static)
        for (long long rank = 0; rank < static_cast<long long>(row_count); ++rank) {
            if (abort.load(std::memory_order_relaxed)) continue;
            if (budget.max_minors &&
                done.load(std::memory_order_relaxed) + row_count > budget.max_minors) {
                abort.store(true, std::memory_order_relaxed);
                continue;
            }
            if (budget.max_seconds > 0 &&
                std::chrono::duration<double>(Clock::now() - start).count() > budget.max_seconds) {
                abort.store(true, std::memory_order_relaxed);
                continue;
            }
            colex_unrank(static_cast<std::uint64_t>(rank), d, rows.data());
            scan_columns(pol, rows.data(), n, d, local);
            done.fetch_add(row_count, std::memory_order_relaxed);
        }
        #pragma omp critical(hforge_minor_merge)
        merge_into(acc, local);
    }
    if (abort.load())
        throw BudgetExceeded(done.load(), total, budget.max_minors ? "minor budget exceeded" : "time budget exceeded");
    return acc;
}

MinorSpectrum finish_exact(int d, std::map<Rational, std::uint64_t, RationalLess>&& acc) {
    MinorSpectrum s;
    s.d = d;
    s.exact = true;
    s.pairs.assign(acc.begin(), acc.end());
    return s;
}

MinorSpectrum finish_float(int d, std::map<double, std::uint64_t>&& acc) {
    MinorSpectrum s;
    s.d = d;
    s.exact = false;
    std::vector<std::pair<double, std::uint64_t>> raw(acc.begin(), acc.end());
    s.fpairs = cluster_values(std::move(raw));
    return s;
}

template <bool Parallel>
MinorSpectrum spectrum_impl(const Chm& h, int d, const Budget& budget) {
    if (d < 1 || d > h.n()) throw BadParameters("minor size out of range");
    if (h.exact()) {
        if (h.all_rational()) {
            auto acc = Parallel ? enumerate_parallel<RationalSqPolicy>(h, d, budget)
                                : enumerate_serial<RationalSqPolicy>(h, d, budget);
            return finish_exact(d, std::move(acc));
        }
        auto acc = Parallel ? enumerate_parallel<QextSqPolicy>(h, d, budget)
                            : enumerate_serial<QextSqPolicy>(h, d, budget);
        return finish_exact(d, std::move(acc));
    }
    auto acc = Parallel ? enumerate_parallel<FloatAbsPolicy>(h, d, budget)
                        : enumerate_serial<FloatAbsPolicy>(h, d, budget);
    return finish_float(d, std::move(acc));
}

} // namespace

MinorSpectrum minor_spectrum(const Chm& h, int d, const Budget& budget) {
    MinorSpectrum s = spectrum_impl<true>(h, d, budget);
    const std::uint64_t expect = binom(h.n(), d) * binom(h.n(), d);
    if (s.total_multiplicity() != expect) throw Error("minor multiplicities do not sum to C(n,d)^2");
    return s;
}

MinorSpectrum minor_spectrum_serial(const Chm& h, int d, const Budget& budget) {
    MinorSpectrum s = spectrum_impl<false>(h, d, budget);
    const std::uint64_t expect = binom(h.n(), d) * binom(h.n(), d);
    if (s.total_multiplicity() != expect) throw Error("minor multiplicities do not sum to C(n,d)^2");
    return s;
}

std::vector<std::pair<double, std::uint64_t>> cluster_values(
    std::vector<std::pair<double, std::uint64_t>> sorted) {
    std::vector<std::pair<double, std::uint64_t>> out;
    for (const auto& [v, m] : sorted) {
        if (!out.empty() && v - out.back().first <= kClusterGap * std::max(1.0, v)) {
            auto& [cv, cm] = out.back();
            cv = (cv * static_cast<double>(cm) + v * static_cast<double>(m)) /
                 static_cast<double>(cm + m);
            cm += m;
        } else {
            out.emplace_back(v, m);
        }
    }
    return out;
}

} // namespace hforge
