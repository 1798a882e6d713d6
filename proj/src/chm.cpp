#include "hforge/chm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "hforge/constants.hpp"
#include "hforge/rng.hpp"

namespace hforge {

Chm Chm::exact_matrix(int n, std::vector<QuadExt> entries) {
    if (n < 1 || entries.size() != static_cast<size_t>(n) * n)
        throw BadParameters("entry count does not match order");
    std::int64_t d = 1;
    for (const QuadExt& z : entries) {
        if (z.is_rational()) continue;
        if (d == 1) d = z.d();
        else if (d != z.d())
            throw MixedRadicand("matrix entries live in different quadratic fields");
    }
    Chm h;
    h.n_ = n;
    h.backend_ = Backend::exact;
    h.d_ = d;
    h.xe_ = std::move(entries);
    return h;
}

Chm Chm::float_matrix(int n, std::vector<ComplexFloat> entries) {
    if (n < 1 || entries.size() != static_cast<size_t>(n) * n)
        throw BadParameters("entry count does not match order");
    Chm h;
    h.n_ = n;
    h.backend_ = Backend::floating;
    h.fe_ = std::move(entries);
    return h;
}

bool Chm::all_rational() const {
    return exact() && d_ == 1 &&
           std::all_of(xe_.begin(), xe_.end(), [](const QuadExt& z) { return z.is_rational(); });
}

ComplexFloat Chm::fat(int i, int j) const {
    if (exact()) return to_float(xat(i, j));
    return fe_[static_cast<size_t>(i) * n_ + j];
}

Chm Chm::to_float_backend() const {
    if (!exact()) return *this;
    std::vector<ComplexFloat> fe(xe_.size());
    for (size_t t = 0; t < xe_.size(); ++t) fe[t] = to_float(xe_[t]);
    return float_matrix(n_, std::move(fe));
}

ChmViolation verify_chm(const Chm& h) {
    const int n = h.n();
    ChmViolation worst;
    if (h.exact()) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (abs_squared(h.xat(i, j)) != 1)
                    return {false, "entry not unimodular", i, j, 0.0};
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                QuadExt dot;
                for (int c = 0; c < n; ++c) dot += h.xat(i, c) * conj(h.xat(j, c));
                const bool bad = (i == j) ? (dot != QuadExt(Rational(n))) : !dot.is_zero();
                if (bad) {
                    double dev = std::abs(to_float(dot) - (i == j ? ComplexFloat(n, 0) : ComplexFloat(0, 0)));
                    if (!worst.ok && dev <= worst.deviation) continue;
                    worst = {false, "rows not orthogonal", i, j, dev};
                }
            }
        }
        return worst;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(std::abs(h.fat(i, j)) - 1.0) > kFloatTol)
                return {false, "entry not unimodular", i, j, std::abs(std::abs(h.fat(i, j)) - 1.0)};
    const double tol = kFloatTol * n;
    double worst_dev = 0.0;
    int wi = -1, wj = -1;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            ComplexFloat dot = 0;
            for (int c = 0; c < n; ++c) dot += h.fat(i, c) * std::conj(h.fat(j, c));
            double dev = std::abs(dot - (i == j ? ComplexFloat(n, 0) : ComplexFloat(0, 0)));
            if (dev > worst_dev) {
                worst_dev = dev;
                wi = i;
                wj = j;
            }
        }
    }
    if (worst_dev > tol) return {false, "rows not orthogonal", wi, wj, worst_dev};
    return {true, "", wi, wj, worst_dev};
}

Chm dephase(const Chm& h) {
    const int n = h.n();
    if (h.exact()) {
        std::vector<QuadExt> e(h.exact_entries());
        for (int j = 0; j < n; ++j) {
            QuadExt cinv = conj(h.xat(0, j)); // 1/u = conj(u) for unimodular u
            for (int i = 0; i < n; ++i) e[static_cast<size_t>(i) * n + j] *= cinv;
        }
        for (int i = 1; i < n; ++i) {
            QuadExt rinv = conj(e[static_cast<size_t>(i) * n]);
            for (int j = 0; j < n; ++j) e[static_cast<size_t>(i) * n + j] *= rinv;
        }
        return Chm::exact_matrix(n, std::move(e));
    }
    std::vector<ComplexFloat> e(h.float_entries());
    for (int j = 0; j < n; ++j) {
        ComplexFloat c = e[j];
        for (int i = 0; i < n; ++i) e[static_cast<size_t>(i) * n + j] /= c;
    }
    for (int i = 1; i < n; ++i) {
        ComplexFloat c = e[static_cast<size_t>(i) * n];
        for (int j = 0; j < n; ++j) e[static_cast<size_t>(i) * n + j] /= c;
    }
    return Chm::float_matrix(n, std::move(e));
}

EquivalenceMove identity_move(int n) {
    EquivalenceMove mv;
    mv.row_perm.resize(n);
    mv.col_perm.resize(n);
    for (int i = 0; i < n; ++i) mv.row_perm[i] = mv.col_perm[i] = i;
    mv.row_phase.assign(n, QuadExt(1));
    mv.col_phase.assign(n, QuadExt(1));
    mv.row_phase_f.assign(n, ComplexFloat(1, 0));
    mv.col_phase_f.assign(n, ComplexFloat(1, 0));
    return mv;
}

EquivalenceMove random_move(const Chm& h, std::uint64_t seed) {
    const int n = h.n();
    SplitMix64 rng = stream_rng(seed, 0x6d6f7665); // "move"
    EquivalenceMove mv = identity_move(n);
    auto shuffle = [&](std::vector<int>& p) {
        for (int i = n - 1; i > 0; --i)
            std::swap(p[i], p[rng.bounded(static_cast<std::uint64_t>(i) + 1)]);
    };
    shuffle(mv.row_perm);
    shuffle(mv.col_perm);
    if (h.exact()) {
        auto phase = [&]() {
            // products of entries stay unimodular and inside the field
            QuadExt z = h.xat(static_cast<int>(rng.bounded(n)), static_cast<int>(rng.bounded(n)));
            z *= h.xat(static_cast<int>(rng.bounded(n)), static_cast<int>(rng.bounded(n)));
            if (rng.next() & 1) z = conj(z);
            if (rng.next() & 1) z = -z;
            return z;
        };
        for (int i = 0; i < n; ++i) mv.row_phase[i] = phase();
        for (int j = 0; j < n; ++j) mv.col_phase[j] = phase();
    } else {
        auto phase = [&]() {
            double a = 2.0 * std::numbers::pi * (static_cast<double>(rng.next() >> 11) / 9007199254740992.0);
            return std::polar(1.0, a);
        };
        for (int i = 0; i < n; ++i) mv.row_phase_f[i] = phase();
        for (int j = 0; j < n; ++j) mv.col_phase_f[j] = phase();
    }
    return mv;
}

Chm apply_equivalence(const Chm& h, const EquivalenceMove& mv) {
    const int n = h.n();
    if (static_cast<int>(mv.row_perm.size()) != n || static_cast<int>(mv.col_perm.size()) != n)
        throw BadParameters("move size does not match matrix order");
    if (h.exact()) {
        std::vector<QuadExt> e;
        e.reserve(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                e.push_back(mv.row_phase[i] * h.xat(mv.row_perm[i], mv.col_perm[j]) * mv.col_phase[j]);
        return Chm::exact_matrix(n, std::move(e));
    }
    std::vector<ComplexFloat> e;
    e.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            e.push_back(mv.row_phase_f[i] * h.fat(mv.row_perm[i], mv.col_perm[j]) * mv.col_phase_f[j]);
    return Chm::float_matrix(n, std::move(e));
}

RegularityReport is_regular(const Chm& h) {
    const int n = h.n();
    RegularityReport r;
    if (h.exact()) {
        r.abs_sq_row_sums.reserve(n);
        for (int i = 0; i < n; ++i) {
            QuadExt s;
            for (int j = 0; j < n; ++j) s += h.xat(i, j);
            r.abs_sq_row_sums.push_back(abs_squared(s));
        }
        r.regular = std::all_of(r.abs_sq_row_sums.begin(), r.abs_sq_row_sums.end(),
                                [&](const Rational& q) { return q == r.abs_sq_row_sums[0]; });
        return r;
    }
    r.abs_row_sums.reserve(n);
    for (int i = 0; i < n; ++i) {
        ComplexFloat s = 0;
        for (int j = 0; j < n; ++j) s += h.fat(i, j);
        r.abs_row_sums.push_back(std::abs(s));
    }
    r.regular = std::all_of(r.abs_row_sums.begin(), r.abs_row_sums.end(),
                            [&](double v) { return std::abs(v - r.abs_row_sums[0]) <= kFloatTol; });
    return r;
}

namespace {

// Roots of unity that exist inside imaginary quadratic extensions: orders
// 1, 2, 4 (in Q(i)) and 3, 6 (in Q(i*sqrt(3))). Returns 0 when z is none.
int exact_root_order(const QuadExt& z) {
    const QuadExt one(1), minus_one(-1);
    if (z == one) return 1;
    if (z == minus_one) return 2;
    const QuadExt i_pos(Rational(0), Rational(1), 1), i_neg(Rational(0), Rational(-1), 1);
    if (z == i_pos || z == i_neg) return 4;
    const Rational half = frac(1, 2);
    const QuadExt w1(-half, half, 3), w2(-half, -half, 3);
    if (z == w1 || z == w2) return 3;
    const QuadExt s1(half, half, 3), s2(half, -half, 3);
    if (z == s1 || z == s2) return 6;
    return 0;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

} // namespace

std::optional<int> detect_butson(const Chm& h) {
    const int n = h.n();
    if (h.exact()) {
        long m = 1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int ord = exact_root_order(h.xat(i, j));
                if (ord == 0) return std::nullopt;
                m = lcm_long(m, ord);
            }
        return static_cast<int>(m);
    }
    const double two_pi = 2.0 * std::numbers::pi;
    for (int m = 1; m <= 360; ++m) {
        bool all = true;
        for (int i = 0; i < n && all; ++i)
            for (int j = 0; j < n && all; ++j) {
                double theta = std::arg(h.fat(i, j)) / two_pi; // in (-1/2, 1/2]
                double scaled = theta * m;
                if (std::abs(scaled - std::round(scaled)) > kFloatTol * m) all = false;
            }
        if (all) return m;
    }
    return std::nullopt;
}

Chm fourier(int n) {
    if (n < 1) throw BadParameters("Fourier order must be >= 1");
    std::vector<ComplexFloat> e;
    e.reserve(static_cast<size_t>(n) * n);
    const double two_pi = 2.0 * std::numbers::pi;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            e.push_back(std::polar(1.0, two_pi * ((static_cast<long>(j) * k) % n) / n));
    return Chm::float_matrix(n, std::move(e));
}

Chm chm_from_real(const RealHadamard& h) {
    if (!verify_real_hadamard(h)) throw BadParameters("not a real Hadamard matrix");
    std::vector<QuadExt> e;
    e.reserve(static_cast<size_t>(h.order()) * h.order());
    for (int v : h.m.a) e.push_back(QuadExt(v));
    return Chm::exact_matrix(h.order(), std::move(e));
}

bool chm_is_circulant(const Chm& h) {
    const int n = h.n();
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int pj = (j - 1 + n) % n;
            if (h.exact()) {
                if (h.xat(i, j) != h.xat(i - 1, pj)) return false;
            } else {
                if (std::abs(h.fat(i, j) - h.fat(i - 1, pj)) > 1e-12) return false;
            }
        }
    return true;
}

} // namespace hforge
