#include "hforge/invariants.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "hforge/constants.hpp"
#include "hforge/detkernel.hpp"
#include "hforge/rng.hpp"
#include "hforge/subsets.hpp"

namespace hforge {

namespace {

std::vector<ComplexFloat> cluster_complex(std::vector<ComplexFloat> vals, double tol) {
    std::sort(vals.begin(), vals.end(), [](const ComplexFloat& a, const ComplexFloat& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    std::vector<ComplexFloat> out;
    for (const ComplexFloat& z : vals)
        if (out.empty() || std::abs(z - out.back()) > tol) out.push_back(z);
    return out;
}

} // namespace

HaagerupSet haagerup_set(const Chm& h) {
    const int n = h.n();
    HaagerupSet s;
    if (h.exact()) {
        std::set<QuadExt, QuadExtLess> vals;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    // h_ij h_kl conj(h_il) conj(h_kj), l-loop innermost
                    QuadExt base = h.xat(i, j) * conj(h.xat(k, j));
                    for (int l = 0; l < n; ++l)
                        vals.insert(base * h.xat(k, l) * conj(h.xat(i, l)));
                }
        s.exact = true;
        s.values.assign(vals.begin(), vals.end());
        return s;
    }
    std::vector<ComplexFloat> vals;
    vals.reserve(static_cast<size_t>(n) * n * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                ComplexFloat base = h.fat(i, j) * std::conj(h.fat(k, j));
                for (int l = 0; l < n; ++l)
                    vals.push_back(base * h.fat(k, l) * std::conj(h.fat(i, l)));
            }
    s.exact = false;
    s.fvalues = cluster_complex(std::move(vals), kFloatTol);
    return s;
}

std::vector<ComplexFloat> haagerup_floats(const HaagerupSet& s) {
    if (!s.exact) return s.fvalues;
    std::vector<ComplexFloat> vals;
    vals.reserve(s.values.size());
    for (const QuadExt& z : s.values) vals.push_back(to_float(z));
    return cluster_complex(std::move(vals), kFloatTol);
}

int default_dmax(int n) { return std::min(n / 2, 5); }

Fingerprint fingerprint(const Chm& h, int dmax, const Budget& budget) {
    const int n = h.n();
    if (dmax < 0) dmax = default_dmax(n);
    if (dmax > n) throw BadParameters("dmax exceeds the matrix order");
    Fingerprint f;
    f.n = n;
    for (int d = 2; d <= dmax; ++d) f.spectra.push_back(minor_spectrum(h, d, budget));
    return f;
}

DualityReport duality_check(const Chm& h, int d, const Budget& budget) {
    const int n = h.n();
    if (d < 1 || d > n - 1) throw BadParameters("duality needs 1 <= d <= n-1");
    ChmViolation v = verify_chm(h);
    if (!v.ok) throw BadParameters("duality check needs a verified CHM: " + v.what);
    MinorSpectrum small = minor_spectrum(h, d, budget);
    MinorSpectrum large = minor_spectrum(h, n - d, budget);
    DualityReport rep;
    rep.d = d;
    if (h.exact()) {
        // |det(n-d)|^2 = n^(n-2d) |det(d)|^2 pairwise, multiplicities equal
        Rational scale = pow_rational(n, n - 2L * d);
        if (small.pairs.size() != large.pairs.size()) {
            rep.detail = "value counts differ: " + std::to_string(small.pairs.size()) + " vs " +
                         std::to_string(large.pairs.size());
            return rep;
        }
        for (size_t t = 0; t < small.pairs.size(); ++t) {
            Rational expect = small.pairs[t].first * scale;
            if (expect != large.pairs[t].first || small.pairs[t].second != large.pairs[t].second) {
                rep.detail = "mismatch at value index " + std::to_string(t);
                return rep;
            }
        }
        rep.ok = true;
        return rep;
    }
    double scale = std::pow(static_cast<double>(n), n / 2.0 - d);
    if (small.fpairs.size() != large.fpairs.size()) {
        rep.detail = "value counts differ after clustering";
        return rep;
    }
    for (size_t t = 0; t < small.fpairs.size(); ++t) {
        double expect = small.fpairs[t].first * scale;
        double got = large.fpairs[t].first;
        if (std::abs(expect - got) > kCrossCompareTol * std::max(1.0, expect) ||
            small.fpairs[t].second != large.fpairs[t].second) {
            rep.detail = "mismatch at value index " + std::to_string(t);
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

namespace {

Rational abs_sq_of_submatrix_det(const Chm& h, const std::vector<int>& rows,
                                 const std::vector<int>& cols) {
    const int d = static_cast<int>(rows.size());
    std::vector<QuadExt> scratch(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) scratch[static_cast<size_t>(i) * d + j] = h.xat(rows[i], cols[j]);
    return abs_squared(det_gauss_qext(scratch, d));
}

double abs_of_submatrix_det_f(const Chm& h, const std::vector<int>& rows,
                              const std::vector<int>& cols) {
    const int d = static_cast<int>(rows.size());
    std::vector<ComplexFloat> scratch(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) scratch[static_cast<size_t>(i) * d + j] = h.fat(rows[i], cols[j]);
    return abs_det_lu(scratch, d);
}

} // namespace

BlockDetCheck block_det_check(const Chm& h, int r) {
    std::vector<int> rows(r), cols(r);
    for (int t = 0; t < r; ++t) rows[t] = cols[t] = t;
    return block_det_check(h, rows, cols);
}

BlockDetCheck block_det_check(const Chm& h, const std::vector<int>& rows,
                              const std::vector<int>& cols) {
    const int n = h.n();
    if (rows.size() != cols.size()) throw BadParameters("block split needs |rows| = |cols|");
    const int r = static_cast<int>(rows.size());
    if (r < 0 || r > n) throw BadParameters("block size out of range");
    std::vector<int> crows = complement_subset(rows, n);
    std::vector<int> ccols = complement_subset(cols, n);
    BlockDetCheck out;
    if (h.exact()) {
        Rational a2 = abs_sq_of_submatrix_det(h, rows, cols);
        Rational d2 = abs_sq_of_submatrix_det(h, crows, ccols);
        out.exact = true;
        out.lhs = pow_rational(n, n - r) * a2;
        out.rhs = pow_rational(n, r) * d2;
        out.ok = (out.lhs == out.rhs);
        return out;
    }
    double a = abs_of_submatrix_det_f(h, rows, cols);
    double dd = abs_of_submatrix_det_f(h, crows, ccols);
    out.exact = false;
    out.lhs_f = std::pow(static_cast<double>(n), (n - r) / 2.0) * a;
    out.rhs_f = std::pow(static_cast<double>(n), r / 2.0) * dd;
    out.ok = std::abs(out.lhs_f - out.rhs_f) <= kCrossCompareTol * std::max(1.0, std::abs(out.lhs_f));
    return out;
}

QuadMat qmat_mul(const QuadMat& a, const QuadMat& b) {
    if (a.cols != b.rows) throw BadParameters("matrix dimensions do not match");
    QuadMat c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

QuadMat qmat_conj_transpose(const QuadMat& a) {
    QuadMat c(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) c.at(j, i) = conj(a.at(i, j));
    return c;
}

QuadExt qmat_det(const QuadMat& a) {
    if (a.rows != a.cols) throw BadParameters("determinant of a non-square matrix");
    std::vector<QuadExt> scratch(a.a);
    return det_gauss_qext(scratch, a.rows);
}

QuadMat qmat_inverse(const QuadMat& a) {
    if (a.rows != a.cols) throw BadParameters("inverse of a non-square matrix");
    const int n = a.rows;
    // Gauss-Jordan on [A | I]
    QuadMat w(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w.at(i, j) = a.at(i, j);
        w.at(i, n + i) = QuadExt(1);
    }
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (!w.at(i, k).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw Singular("matrix is singular");
        if (pivot != k)
            for (int j = 0; j < 2 * n; ++j) std::swap(w.at(pivot, j), w.at(k, j));
        QuadExt inv = QuadExt(1) / w.at(k, k);
        for (int j = 0; j < 2 * n; ++j) w.at(k, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == k || w.at(i, k).is_zero()) continue;
            QuadExt f = w.at(i, k);
            for (int j = 0; j < 2 * n; ++j) w.at(i, j) -= f * w.at(k, j);
        }
    }
    QuadMat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = w.at(i, n + j);
    return out;
}

std::pair<QuadExt, QuadExt> det_lemma_eval(const QuadMat& a, const QuadMat& u, const QuadMat& v) {
    if (a.rows != a.cols) throw BadParameters("A must be square");
    if (u.rows != a.rows || v.rows != a.rows || u.cols != v.cols)
        throw BadParameters("U, V must be n x m");
    const int n = a.rows, m = u.cols;
    QuadExt det_a = qmat_det(a);
    if (det_a.is_zero()) throw Singular("A is singular");
    QuadMat vstar = qmat_conj_transpose(v);
    // lhs: det(A + U V*)
    QuadMat uvs = qmat_mul(u, vstar);
    QuadMat sum(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sum.at(i, j) = a.at(i, j) + uvs.at(i, j);
    QuadExt lhs = qmat_det(sum);
    // rhs: det(I_m + V* A^{-1} U) det(A)
    QuadMat inner = qmat_mul(qmat_mul(vstar, qmat_inverse(a)), u);
    for (int t = 0; t < m; ++t) inner.at(t, t) += QuadExt(1);
    QuadExt rhs = qmat_det(inner) * det_a;
    return {lhs, rhs};
}

CensusResult sample_minor_census(const RealHadamard& h, int d, std::uint64_t count,
                                 std::uint64_t seed) {
    const int n = h.order();
    if (d < 1 || d > n) throw BadParameters("census minor size out of range");
    if (count < 1) throw BadParameters("census needs count >= 1");
    CensusResult res;
    res.d = d;
    res.seed = seed;
    res.count = count;

    Chm hc = chm_from_real(h);
    const std::uint64_t all = binom(n, d) * binom(n, d);
    if (count >= all) {
        // full census: the sampled histogram would just be a noisy version
        res.exhaustive = true;
        res.count = all;
        MinorSpectrum s = minor_spectrum(hc, d);
        for (const auto& [vsq, mult] : s.pairs) {
            // |det| of a +-1 matrix is a nonnegative integer
            Integer num_sqrt;
            mpz_sqrt(num_sqrt.get_mpz_t(), vsq.get_num().get_mpz_t());
            if (num_sqrt * num_sqrt != vsq.get_num() || vsq.get_den() != 1)
                throw Error("minor of an integer matrix must have an integer determinant");
            res.histogram[num_sqrt] += mult;
        }
        return res;
    }

    std::map<Integer, std::uint64_t, IntegerLess> acc;
    #pragma omp parallel
    {
        std::map<Integer, std::uint64_t, IntegerLess> local;
        std::vector<Rational> scratch(static_cast<size_t>(d) * d);
        #pragma omp for schedule(static)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            // per-sample stream: deterministic for any worker count
            SplitMix64 rng = stream_rng(seed, static_cast<std::uint64_t>(i));
            std::vector<int> rows = sample_subset(rng, n, d);
            std::vector<int> cols = sample_subset(rng, n, d);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c)
                    scratch[static_cast<size_t>(r) * d + c] = h.m.at(rows[r], cols[c]);
            Rational det = det_gauss_rational(scratch, d);
            Integer v = abs(det.get_num());
            if (det.get_den() != 1) throw Error("integer matrix minor with non-integer determinant");
            ++local[v];
        }
        #pragma omp critical(hforge_census_merge)
        for (const auto& [k, v] : local) acc[k] += v;
    }
    res.histogram = std::move(acc);
    return res;
}

} // namespace hforge
