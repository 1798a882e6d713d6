#include "hforge/detkernel.hpp"

#include <cmath>

namespace hforge {

QuadExt det_gauss_qext(std::vector<QuadExt>& m, int d) {
    if (d == 0) return QuadExt(1);
    auto at = [&](int i, int j) -> QuadExt& { return m[static_cast<size_t>(i) * d + j]; };
    bool negate = false;
    for (int k = 0; k < d; ++k) {
        int pivot = -1;
        for (int i = k; i < d; ++i)
            if (!at(i, k).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return QuadExt(0);
        if (pivot != k) {
            for (int j = k; j < d; ++j) std::swap(at(pivot, j), at(k, j));
            negate = !negate;
        }
        const QuadExt& p = at(k, k);
        for (int i = k + 1; i < d; ++i) {
            if (at(i, k).is_zero()) continue;
            QuadExt f = at(i, k) / p;
            for (int j = k + 1; j < d; ++j) at(i, j) -= f * at(k, j);
            at(i, k) = QuadExt(0);
        }
    }
    QuadExt det(1);
    for (int k = 0; k < d; ++k) det *= at(k, k);
    return negate ? -det : det;
}

Rational det_gauss_rational(std::vector<Rational>& m, int d) {
    if (d == 0) return 1;
    auto at = [&](int i, int j) -> Rational& { return m[static_cast<size_t>(i) * d + j]; };
    bool negate = false;
    Rational f, t; // reused temporaries
    for (int k = 0; k < d; ++k) {
        int pivot = -1;
        for (int i = k; i < d; ++i)
            if (at(i, k) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != k) {
            for (int j = k; j < d; ++j) std::swap(at(pivot, j), at(k, j));
            negate = !negate;
        }
        const Rational& p = at(k, k);
        for (int i = k + 1; i < d; ++i) {
            if (at(i, k) == 0) continue;
            f = at(i, k) / p;
            for (int j = k + 1; j < d; ++j) {
                t = f * at(k, j);
                at(i, j) -= t;
            }
            at(i, k) = 0;
        }
    }
    Rational det(1);
    for (int k = 0; k < d; ++k) det *= at(k, k);
    return negate ? -det : det;
}

double abs_det_lu(std::vector<std::complex<double>>& m, int d) {
    if (d == 0) return 1.0;
    auto at = [&](int i, int j) -> std::complex<double>& { return m[static_cast<size_t>(i) * d + j]; };
    double absdet = 1.0;
    for (int k = 0; k < d; ++k) {
        int pivot = k;
        double best = std::abs(at(k, k));
        for (int i = k + 1; i < d; ++i) {
            double v = std::abs(at(i, k));
            if (v > best) {
                best = v;
                pivot = i;
            }
        }
        if (best == 0.0) return 0.0;
        if (pivot != k)
            for (int j = k; j < d; ++j) std::swap(at(pivot, j), at(k, j));
        absdet *= std::abs(at(k, k));
        for (int i = k + 1; i < d; ++i) {
            std::complex<double> f = at(i, k) / at(k, k);
            for (int j = k + 1; j < d; ++j) at(i, j) -= f * at(k, j);
        }
    }
    return absdet;
}

} // namespace hforge
