#include <map>

#include "hforge/chm.hpp"

namespace hforge {

namespace {

// Symbol alphabets: '1' = 1, 'm' = -1, then per matrix one special
// unimodular value and its derived forms ('w'/'W' = w/-w, 'b'/'B' = b/-b,
// 'c'/'C' = c/conj(c), 'a' = a).

// P7: b = -1/2 + i*sqrt(3)/2 at m = 2 (the cube root of unity).
const char* kP7[7] = {
    "m1w1w1w",
    "1mw11ww",
    "wwW1ww1",
    "111mwww",
    "w1wwWw1",
    "1wwwwW1",
    "ww1w11m",
};

// U15: a = -7/8 + i*sqrt(15)/8.
const char* kU15[15] = {
    "a1a1a1a1a1a1a1a",
    "1aa11aa11aa11aa",
    "aa11aa11aa11aa1",
    "111aaaa1111aaaa",
    "a1aa1a11a1aa1a1",
    "1aaaa1111aaaa11",
    "aa1a11a1aa1a11a",
    "1111111aaaaaaaa",
    "a1a1a1aa1a1a1a1",
    "1aa11aaaa11aa11",
    "aa11aa1a11aa11a",
    "111aaaaaaaa1111",
    "a1aa1a1a1a11a1a",
    "1aaaa11aa1111aa",
    "aa1a11aa11a1aa1",
};

// V15: b = -5/6 + i*sqrt(11)/6.
const char* kV15[15] = {
    "m1b1b1b1b1b1b1b",
    "1mb11bb11bb11bb",
    "bbB1bb11bb11bb1",
    "111mbbb1111bbbb",
    "b1bbBb11b1bb1b1",
    "1bbbbB111bbbb11",
    "bb1b11m1bb1b11b",
    "1111111mbbbbbbb",
    "b1b1b1bbBb1b1b1",
    "1bb11bbbbB1bb11",
    "bb11bb1b11mb11b",
    "111bbbbbbbbB111",
    "b1bb1b1b1b11m1b",
    "1bbbb11bb1111mb",
    "bb1b11bb11b1bbB",
};

// W9A: c = 1/4 + i*sqrt(15)/4.
const char* kW9A[9] = {
    "1ccccCCCC",
    "c1CCcccCC",
    "cC1cCcCcC",
    "cCc1CCcCc",
    "ccCC1CCcc",
    "CccCC1ccC",
    "CcCcCc1Cc",
    "CCcCccC1c",
    "CCCccCcc1",
};

Chm from_pattern(int n, const char* const* rows, const std::map<char, QuadExt>& symbols) {
    std::vector<QuadExt> e;
    e.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e.push_back(symbols.at(rows[i][j]));
    return Chm::exact_matrix(n, std::move(e));
}

} // namespace

std::vector<std::string> fixture_names() { return {"P7", "U15", "V15", "W9A"}; }

Chm fixture(const std::string& name) {
    const QuadExt one(1), minus_one(-1);
    if (name == "P7") {
        QuadExt w(frac(-1, 2), frac(1, 2), 3);
        return from_pattern(7, kP7, {{'1', one}, {'m', minus_one}, {'w', w}, {'W', -w}});
    }
    if (name == "U15") {
        QuadExt a(frac(-7, 8), frac(1, 8), 15);
        return from_pattern(15, kU15, {{'1', one}, {'a', a}});
    }
    if (name == "V15") {
        QuadExt b(frac(-5, 6), frac(1, 6), 11);
        return from_pattern(15, kV15, {{'1', one}, {'m', minus_one}, {'b', b}, {'B', -b}});
    }
    if (name == "W9A") {
        QuadExt c(frac(1, 4), frac(1, 4), 15);
        return from_pattern(9, kW9A, {{'1', one}, {'c', c}, {'C', conj(c)}});
    }
    throw UnknownFixture("unknown fixture: " + name);
}

} // namespace hforge
