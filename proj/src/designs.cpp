#include "hforge/designs.hpp"

#include "hforge/finite_field.hpp"

namespace hforge {

namespace {

struct PrimePower {
    int p, k;
};

PrimePower detect_prime_power(int q) {
    if (is_prime(q)) return {q, 1};
    for (int p = 2; p * p <= q; ++p) {
        if (p * p == q && is_prime(p)) return {p, 2};
    }
    throw NotPrime("not a prime or prime square: " + std::to_string(q));
}

} // namespace

DesignVerification verify_2design(const IntMat& inc) {
    DesignVerification r;
    const int v = inc.n;
    if (v < 2 || inc.a.size() != static_cast<size_t>(v) * v) {
        r.reason = "not a square matrix of order >= 2";
        return r;
    }
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
            if (inc.at(i, j) != 0 && inc.at(i, j) != 1) {
                r.reason = "entry not in {0,1}";
                r.witness_i = i;
                r.witness_j = j;
                return r;
            }
    int k = 0;
    for (int j = 0; j < v; ++j) k += inc.at(0, j);
    for (int i = 0; i < v; ++i) {
        int s = 0;
        for (int j = 0; j < v; ++j) s += inc.at(i, j);
        if (s != k) {
            r.reason = "row sums not constant";
            r.witness_i = 0;
            r.witness_j = i;
            return r;
        }
    }
    for (int j = 0; j < v; ++j) {
        int s = 0;
        for (int i = 0; i < v; ++i) s += inc.at(i, j);
        if (s != k) {
            r.reason = "column sums not constant";
            r.witness_j = j;
            return r;
        }
    }
    // off-diagonal entries of B*B^T must share one value lambda
    long lambda = -1;
    for (int i = 0; i < v; ++i) {
        for (int j = i + 1; j < v; ++j) {
            long dot = 0;
            for (int c = 0; c < v; ++c) dot += inc.at(i, c) * inc.at(j, c);
            if (lambda < 0) lambda = dot;
            if (dot != lambda) {
                r.reason = "B*B^T off-diagonal not constant";
                r.witness_i = i;
                r.witness_j = j;
                return r;
            }
        }
    }
    r.v = v;
    r.k = k;
    r.lambda = static_cast<int>(lambda);
    if (!(r.lambda < r.k && r.k < v)) {
        r.reason = (r.k == v) ? "k = v" : "violates lambda < k < v";
        return r;
    }
    if (static_cast<long>(r.lambda) * (v - 1) != static_cast<long>(k) * (k - 1)) {
        r.reason = "parameter identity lambda(v-1) = k(k-1) fails";
        return r;
    }
    r.ok = true;
    return r;
}

BlockDesign require_2design(const IntMat& inc) {
    DesignVerification r = verify_2design(inc);
    if (!r.ok)
        throw NotADesign("not a 2-design: " + r.reason + " (witness rows " +
                         std::to_string(r.witness_i) + "," + std::to_string(r.witness_j) + ")");
    return BlockDesign{r.v, r.k, r.lambda, inc};
}

BlockDesign paley_design(int q) {
    if (q % 4 != 3) throw BadResidueClass("Paley design needs q = 3 (mod 4), got " + std::to_string(q));
    PrimePower pp = detect_prime_power(q);
    PrimePowerField f = PrimePowerField::make(pp.p, pp.k);
    IntMat inc(q);
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            FieldElem diff = f.sub(f.element(j), f.element(i));
            inc.at(i, j) = (f.quadratic_character(diff) == 1) ? 1 : 0;
        }
    }
    return require_2design(inc);
}

RealHadamard sylvester_hadamard(int t) {
    if (t < 1) throw BadParameters("Sylvester power must be >= 1");
    if (t > 20) throw BadParameters("Sylvester power out of range");
    const int n = 1 << t;
    RealHadamard h{IntMat(n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            h.m.at(i, j) = (__builtin_popcount(static_cast<unsigned>(i & j)) & 1) ? -1 : 1;
    return h;
}

BlockDesign hadamard_core_design(const RealHadamard& h) {
    const int n = h.order();
    if (n < 8 || n % 4 != 0) throw BadParameters("need a real Hadamard matrix of order 4m >= 8");
    if (!is_normalized_pm1(h.m)) throw NotNormalized("Hadamard matrix is not normalized");
    IntMat inc(n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            inc.at(i - 1, j - 1) = (h.m.at(i, j) == 1) ? 1 : 0;
    return require_2design(inc);
}

RealHadamard hadamard_from_design(const BlockDesign& b) {
    const int m = (b.v + 1) / 4;
    if (b.v != 4 * m - 1 || b.k != 2 * m - 1 || b.lambda != m - 1)
        throw BadParameters("not a Hadamard design 2-(4m-1,2m-1,m-1)");
    RealHadamard h{IntMat(b.v + 1)};
    for (int j = 0; j <= b.v; ++j) h.m.at(0, j) = 1;
    for (int i = 1; i <= b.v; ++i) {
        h.m.at(i, 0) = 1;
        for (int j = 1; j <= b.v; ++j) h.m.at(i, j) = b.incidence.at(i - 1, j - 1) ? 1 : -1;
    }
    if (!verify_real_hadamard(h)) throw Error("padded design is not Hadamard");
    return h;
}

ConferenceMatrixReal paley_conference(int q) {
    if (q % 4 != 1) throw BadResidueClass("Paley conference needs q = 1 (mod 4), got " + std::to_string(q));
    PrimePower pp = detect_prime_power(q);
    PrimePowerField f = PrimePowerField::make(pp.p, pp.k);
    ConferenceMatrixReal c{IntMat(q + 1)};
    for (int j = 1; j <= q; ++j) {
        c.m.at(0, j) = 1;
        c.m.at(j, 0) = 1;
    }
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            c.m.at(i + 1, j + 1) = f.quadratic_character(f.sub(f.element(i), f.element(j)));
    if (!verify_conference(c)) throw Error("Paley conference construction failed verification");
    return c;
}

ConferenceMatrixReal normalize_conference(ConferenceMatrixReal c) {
    const int n = c.order();
    if (is_symmetric(c.m)) {
        // paired row/column flips keep both symmetry and C C^T
        for (int j = 1; j < n; ++j) {
            if (c.m.at(0, j) == -1) {
                for (int t = 0; t < n; ++t) {
                    c.m.at(t, j) = -c.m.at(t, j);
                    c.m.at(j, t) = -c.m.at(j, t);
                }
            }
        }
        return c;
    }
    for (int j = 1; j < n; ++j)
        if (c.m.at(0, j) == -1)
            for (int t = 0; t < n; ++t) c.m.at(t, j) = -c.m.at(t, j);
    for (int i = 1; i < n; ++i)
        if (c.m.at(i, 0) == -1)
            for (int t = 0; t < n; ++t) c.m.at(i, t) = -c.m.at(i, t);
    return c;
}

bool is_circulant(const IntMat& m) {
    for (int i = 1; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (m.at(i, j) != m.at(i - 1, (j - 1 + m.n) % m.n)) return false;
    return true;
}

bool is_symmetric(const IntMat& m) {
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j)
            if (m.at(i, j) != m.at(j, i)) return false;
    return true;
}

bool is_normalized_pm1(const IntMat& m) {
    for (int t = 0; t < m.n; ++t)
        if (m.at(0, t) != 1 || m.at(t, 0) != 1) return false;
    return true;
}

bool verify_real_hadamard(const RealHadamard& h) {
    const int n = h.order();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (h.m.at(i, j) != 1 && h.m.at(i, j) != -1) return false;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            long dot = 0;
            for (int c = 0; c < n; ++c) dot += h.m.at(i, c) * h.m.at(j, c);
            if (dot != (i == j ? n : 0)) return false;
        }
    }
    return true;
}

bool verify_conference(const ConferenceMatrixReal& c) {
    const int n = c.order();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int e = c.m.at(i, j);
            if (i == j ? e != 0 : (e != 1 && e != -1)) return false;
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            long dot = 0;
            for (int t = 0; t < n; ++t) dot += c.m.at(i, t) * c.m.at(j, t);
            if (dot != (i == j ? n - 1 : 0)) return false;
        }
    }
    return true;
}

std::vector<int> stored_real_hadamard_orders() { return {2, 4, 8, 12, 16}; }

RealHadamard stored_real_hadamard(int order) {
    switch (order) {
        case 2: return sylvester_hadamard(1);
        case 4: return sylvester_hadamard(2);
        case 8: return sylvester_hadamard(3);
        case 12: return hadamard_from_design(paley_design(11));
        case 16: return sylvester_hadamard(4);
        default: throw BadParameters("no stored real Hadamard matrix of order " + std::to_string(order));
    }
}

} // namespace hforge
