#include "hforge/equivalence.hpp"

#include <algorithm>
#include <cmath>

#include "hforge/constants.hpp"

namespace hforge {

namespace {

bool float_set_member(const std::vector<ComplexFloat>& sorted, const ComplexFloat& z, double tol) {
    for (const ComplexFloat& w : sorted)
        if (std::abs(z - w) <= tol) return true;
    return false;
}

CompareOutcome haagerup_numeric(const HaagerupSet& s1, const HaagerupSet& s2) {
    CompareOutcome out;
    out.numeric = true;
    std::vector<ComplexFloat> f1 = haagerup_floats(s1);
    std::vector<ComplexFloat> f2 = haagerup_floats(s2);
    for (const ComplexFloat& z : f1)
        if (!float_set_member(f2, z, kCrossCompareTol)) {
            out.cert.kind = InequivalenceCertificate::haagerup;
            out.cert.numeric = true;
            out.cert.direction = 1;
            out.cert.witness_f = z;
            return out;
        }
    for (const ComplexFloat& z : f2)
        if (!float_set_member(f1, z, kCrossCompareTol)) {
            out.cert.kind = InequivalenceCertificate::haagerup;
            out.cert.numeric = true;
            out.cert.direction = 2;
            out.cert.witness_f = z;
            return out;
        }
    out.equal = true;
    return out;
}

} // namespace

CompareOutcome compare_haagerup(const Chm& h1, const Chm& h2) {
    HaagerupSet s1 = haagerup_set(h1);
    HaagerupSet s2 = haagerup_set(h2);
    if (s1.exact && s2.exact) {
        CompareOutcome out;
        std::vector<QuadExt> diff;
        std::set_difference(s1.values.begin(), s1.values.end(), s2.values.begin(), s2.values.end(),
                            std::back_inserter(diff), QuadExtLess{});
        if (!diff.empty()) {
            out.cert.kind = InequivalenceCertificate::haagerup;
            out.cert.direction = 1;
            out.cert.witness = diff.front();
            return out;
        }
        std::set_difference(s2.values.begin(), s2.values.end(), s1.values.begin(), s1.values.end(),
                            std::back_inserter(diff), QuadExtLess{});
        if (!diff.empty()) {
            out.cert.kind = InequivalenceCertificate::haagerup;
            out.cert.direction = 2;
            out.cert.witness = diff.front();
            return out;
        }
        out.equal = true;
        return out;
    }
    return haagerup_numeric(s1, s2);
}

CompareOutcome compare_fingerprint(const Chm& h1, const Chm& h2, int dmax, const Budget& budget) {
    if (h1.n() != h2.n()) throw BadParameters("fingerprint comparison needs equal orders");
    if (dmax < 0) dmax = default_dmax(h1.n());
    CompareOutcome out;
    const bool exact_pair = h1.exact() && h2.exact();
    out.numeric = !exact_pair;
    for (int d = 2; d <= dmax; ++d) {
        MinorSpectrum s1 = minor_spectrum(h1, d, budget);
        MinorSpectrum s2 = minor_spectrum(h2, d, budget);
        if (exact_pair) {
            size_t i = 0, j = 0;
            while (i < s1.pairs.size() || j < s2.pairs.size()) {
                int cmp;
                if (i == s1.pairs.size()) cmp = +1;
                else if (j == s2.pairs.size()) cmp = -1;
                else cmp = mpq_cmp(s1.pairs[i].first.get_mpq_t(), s2.pairs[j].first.get_mpq_t());
                if (cmp == 0 && s1.pairs[i].second == s2.pairs[j].second) {
                    ++i;
                    ++j;
                    continue;
                }
                out.cert.kind = InequivalenceCertificate::fingerprint;
                out.cert.d = d;
                if (cmp < 0) { // value present in h1 only
                    out.cert.direction = 1;
                    out.cert.value_sq = s1.pairs[i].first;
                    out.cert.mult_first = s1.pairs[i].second;
                    out.cert.mult_second = 0;
                } else if (cmp > 0) {
                    out.cert.direction = 2;
                    out.cert.value_sq = s2.pairs[j].first;
                    out.cert.mult_first = 0;
                    out.cert.mult_second = s2.pairs[j].second;
                } else { // same value, multiplicities differ
                    out.cert.direction = (s1.pairs[i].second > s2.pairs[j].second) ? 1 : 2;
                    out.cert.value_sq = s1.pairs[i].first;
                    out.cert.mult_first = s1.pairs[i].second;
                    out.cert.mult_second = s2.pairs[j].second;
                }
                return out;
            }
            continue;
        }
        // numeric comparison on |det| values
        auto to_f = [](const MinorSpectrum& s) {
            if (!s.exact) return s.fpairs;
            std::vector<std::pair<double, std::uint64_t>> v;
            v.reserve(s.pairs.size());
            for (const auto& [vsq, m] : s.pairs) v.emplace_back(std::sqrt(vsq.get_d()), m);
            return cluster_values(std::move(v));
        };
        auto f1 = to_f(s1), f2 = to_f(s2);
        size_t i = 0, j = 0;
        while (i < f1.size() || j < f2.size()) {
            int cmp;
            if (i == f1.size()) cmp = +1;
            else if (j == f2.size()) cmp = -1;
            else if (std::abs(f1[i].first - f2[j].first) <=
                     kCrossCompareTol * std::max(1.0, f1[i].first)) cmp = 0;
            else cmp = (f1[i].first < f2[j].first) ? -1 : +1;
            if (cmp == 0 && f1[i].second == f2[j].second) {
                ++i;
                ++j;
                continue;
            }
            out.cert.kind = InequivalenceCertificate::fingerprint;
            out.cert.numeric = true;
            out.cert.d = d;
            if (cmp < 0) {
                out.cert.direction = 1;
                out.cert.value_f = f1[i].first;
                out.cert.mult_first = f1[i].second;
                out.cert.mult_second = 0;
            } else if (cmp > 0) {
                out.cert.direction = 2;
                out.cert.value_f = f2[j].first;
                out.cert.mult_first = 0;
                out.cert.mult_second = f2[j].second;
            } else {
                out.cert.direction = (f1[i].second > f2[j].second) ? 1 : 2;
                out.cert.value_f = f1[i].first;
                out.cert.mult_first = f1[i].second;
                out.cert.mult_second = f2[j].second;
            }
            return out;
        }
    }
    out.equal = true;
    return out;
}

CertifyOutcome certify_inequivalent(const Chm& h1, const Chm& h2, int dmax, const Budget& budget) {
    if (h1.n() != h2.n()) throw BadParameters("inequivalence check needs equal orders");
    CertifyOutcome out;
    CompareOutcome lam = compare_haagerup(h1, h2);
    if (!lam.equal) {
        out.decided = true;
        out.numeric = lam.numeric;
        out.cert = lam.cert;
        return out;
    }
    CompareOutcome phi = compare_fingerprint(h1, h2, dmax, budget);
    if (!phi.equal) {
        out.decided = true;
        out.numeric = phi.numeric;
        out.cert = phi.cert;
        return out;
    }
    out.decided = false; // invariants agree; equivalence itself stays open
    out.numeric = lam.numeric || phi.numeric;
    return out;
}

bool certificate_revalidates(const InequivalenceCertificate& cert, const Chm& h1, const Chm& h2) {
    if (cert.kind == InequivalenceCertificate::haagerup) {
        HaagerupSet s1 = haagerup_set(h1);
        HaagerupSet s2 = haagerup_set(h2);
        if (!cert.numeric && s1.exact && s2.exact) {
            bool in1 = std::binary_search(s1.values.begin(), s1.values.end(), cert.witness, QuadExtLess{});
            bool in2 = std::binary_search(s2.values.begin(), s2.values.end(), cert.witness, QuadExtLess{});
            return (cert.direction == 1) ? (in1 && !in2) : (in2 && !in1);
        }
        std::vector<ComplexFloat> f1 = haagerup_floats(s1);
        std::vector<ComplexFloat> f2 = haagerup_floats(s2);
        bool in1 = float_set_member(f1, cert.witness_f, kCrossCompareTol);
        bool in2 = float_set_member(f2, cert.witness_f, kCrossCompareTol);
        return (cert.direction == 1) ? (in1 && !in2) : (in2 && !in1);
    }
    MinorSpectrum s1 = minor_spectrum(h1, cert.d);
    MinorSpectrum s2 = minor_spectrum(h2, cert.d);
    auto mult_of_exact = [&](const MinorSpectrum& s) -> std::uint64_t {
        for (const auto& [v, m] : s.pairs)
            if (v == cert.value_sq) return m;
        return 0;
    };
    auto mult_of_float = [&](const MinorSpectrum& s) -> std::uint64_t {
        auto fp = s.exact ? [&] {
            std::vector<std::pair<double, std::uint64_t>> v;
            for (const auto& [vsq, m] : s.pairs) v.emplace_back(std::sqrt(vsq.get_d()), m);
            return cluster_values(std::move(v));
        }() : s.fpairs;
        for (const auto& [v, m] : fp)
            if (std::abs(v - cert.value_f) <= kCrossCompareTol * std::max(1.0, cert.value_f)) return m;
        return 0;
    };
    std::uint64_t m1 = cert.numeric ? mult_of_float(s1) : mult_of_exact(s1);
    std::uint64_t m2 = cert.numeric ? mult_of_float(s2) : mult_of_exact(s2);
    if (cert.mult_first != m1 || cert.mult_second != m2) return false;
    return m1 != m2;
}

} // namespace hforge
