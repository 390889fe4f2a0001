#pragma once

// Small deterministic generators shared by the property tests.  Raw engine
// output is reduced by hand so sequences are identical across platforms.

#include <random>
#include <vector>

#include "qpembed/numeric.hpp"

namespace testgen {

using qpembed::Int;
using qpembed::Rational;

inline long long pick(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline Rational nonzero_rational(std::mt19937_64& rng, long long bound = 10000) {
    Int num(pick(rng, 1, bound));
    if (rng() % 2) num = -num;
    Int den(pick(rng, 1, bound));
    return Rational(num, den);
}

inline std::vector<std::vector<Rational>> random_unimodular(std::mt19937_64& rng, int n) {
    // L * U with unit diagonals: invertible by construction.
    std::vector<std::vector<Rational>> l(n, std::vector<Rational>(n, 0));
    std::vector<std::vector<Rational>> u(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i) {
        l[i][i] = 1;
        u[i][i] = 1;
        for (int j = 0; j < i; ++j) l[i][j] = Rational(pick(rng, -3, 3));
        for (int j = i + 1; j < n; ++j) u[i][j] = Rational(pick(rng, -3, 3));
    }
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) m[i][j] += l[i][k] * u[k][j];
    return m;
}

}  // namespace testgen
