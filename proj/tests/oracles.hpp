#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's own algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

/// Exponent vectors of weighted degree d, by scanning the full box.
inline std::vector<std::vector<int>> monomials(const std::vector<int>& w, int d)
{
    std::vector<std::vector<int>> out;
    std::vector<int> bound;
    for (int a : w) {
        bound.push_back(d / a);
    }
    std::vector<int> e(w.size(), 0);
    for (;;) {
        int deg = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            deg += e[i] * w[i];
        }
        if (deg == d) {
            out.push_back(e);
        }
        std::size_t k = 0;
        while (k < e.size() && e[k] == bound[k]) {
            e[k++] = 0;
        }
        if (k == e.size()) {
            break;
        }
        ++e[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Reduced p/q as a pair.
inline std::pair<std::int64_t, std::int64_t> fraction(std::int64_t p, std::int64_t q)
{
    const std::int64_t g = std::gcd(p, q);
    return {p / g, q / g};
}

/// index^3 * d / prod(a).
inline std::pair<std::int64_t, std::int64_t> cube(const std::vector<int>& a, int d)
{
    std::int64_t sum = 0;
    std::int64_t prod = 1;
    for (int x : a) {
        sum += x;
        prod *= x;
    }
    const std::int64_t i = sum - d;
    return fraction(i * i * i * d, prod);
}

struct Normal {
    int m = 0;
    std::vector<int> residues;
};

/// Smallest m such that some permutation of m*w mod r reads (1, a, r-a).
inline Normal normalize(int r, const std::vector<int>& w)
{
    for (int m = 1; m < r; ++m) {
        std::vector<int> v;
        for (int x : w) {
            v.push_back(((m * x) % r + r) % r);
        }
        std::vector<int> p = v;
        std::sort(p.begin(), p.end());
        do {
            if (p[0] == 1 && p[1] > 0 && p[2] > 0 && p[1] + p[2] == r) {
                return {m, v};
            }
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return {};
}

inline std::int64_t det(std::pair<std::int64_t, std::int64_t> a, std::pair<std::int64_t, std::int64_t> b)
{
    return a.first * b.second - a.second * b.first;
}

/// Local weights det(c_j, wall)/gcd at a wall, for columns given in any grading.
inline std::vector<std::int64_t> wall_weights(const std::vector<std::pair<std::int64_t, std::int64_t>>& cols,
                                              std::pair<std::int64_t, std::int64_t> wall)
{
    std::vector<std::int64_t> v;
    std::int64_t g = 0;
    for (auto& c : cols) {
        if (det(c, wall) == 0) {
            continue;
        }
        v.push_back(det(c, wall));
        g = std::gcd(g, std::abs(v.back()));
    }
    for (auto& x : v) {
        x /= g;
    }
    return v;
}

} // namespace oracle
