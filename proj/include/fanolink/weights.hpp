#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fanolink/error.hpp"

namespace fanolink {

/// Weights of a weighted projective space, one per homogeneous coordinate.
struct WeightVector {
    std::vector<int> entries;

    WeightVector() = default;
    WeightVector(std::initializer_list<int> init) : entries(init) {}
    explicit WeightVector(std::vector<int> e) : entries(std::move(e)) {}

    std::size_t size() const noexcept { return entries.size(); }
    int operator[](std::size_t i) const { return entries[i]; }

    int sum() const { return std::accumulate(entries.begin(), entries.end(), 0); }

    std::int64_t product() const
    {
        std::int64_t p = 1;
        for (int a : entries) {
            p *= a;
        }
        return p;
    }

    /// Every subsequence omitting one entry has gcd 1.
    bool is_well_formed() const
    {
        for (std::size_t skip = 0; skip < entries.size(); ++skip) {
            int g = 0;
            for (std::size_t i = 0; i < entries.size(); ++i) {
                if (i != skip) {
                    g = std::gcd(g, entries[i]);
                }
            }
            if (g > 1) {
                return false;
            }
        }
        return true;
    }

    bool is_sorted() const { return std::is_sorted(entries.begin(), entries.end()); }

    std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < entries.size(); ++i) {
            s += (i ? "," : "") + std::to_string(entries[i]);
        }
        return s + ")";
    }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
    friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
};

/// Exponent vector of a monomial in the ambient coordinates x0, x1, ...
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    Monomial(std::initializer_list<int> init) : exponents(init) {}
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

    int weighted_degree(const WeightVector& w) const
    {
        int d = 0;
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            d += exponents[i] * w[i];
        }
        return d;
    }

    int total_degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

    /// Variables with a nonzero exponent.
    std::vector<int> variables() const
    {
        std::vector<int> vars;
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] != 0) {
                vars.push_back(static_cast<int>(i));
            }
        }
        return vars;
    }

    /// Renders as e.g. "x2^3*x4"; the constant monomial renders as "1".
    std::string str(std::string_view prefix = "x") const
    {
        std::string s;
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] == 0) {
                continue;
            }
            if (!s.empty()) {
                s += "*";
            }
            s += std::string(prefix) + std::to_string(i);
            if (exponents[i] > 1) {
                s += "^" + std::to_string(exponents[i]);
            }
        }
        return s.empty() ? "1" : s;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Parses "x2^3*x4" (also accepts the juxtaposed form "x2^3x4") over `nvars` variables.
inline Monomial parse_monomial(std::string_view text, std::size_t nvars)
{
    Monomial m(std::vector<int>(nvars, 0));
    std::size_t pos = 0;
    auto read_int = [&](std::size_t& p) {
        std::size_t start = p;
        while (p < text.size() && text[p] >= '0' && text[p] <= '9') {
            ++p;
        }
        if (start == p) {
            throw Error(ErrorKind::InvalidInput, "bad monomial '" + std::string(text) + "'");
        }
        return std::stoi(std::string(text.substr(start, p - start)));
    };
    while (pos < text.size()) {
        if (text[pos] == '*') {
            ++pos;
            continue;
        }
        if (text[pos] != 'x') {
            throw Error(ErrorKind::InvalidInput, "bad monomial '" + std::string(text) + "'");
        }
        ++pos;
        // Variable indices are single digits for the five-coordinate ambient.
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') {
            throw Error(ErrorKind::InvalidInput, "bad monomial '" + std::string(text) + "'");
        }
        const int var = text[pos++] - '0';
        int exp = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            exp = read_int(pos);
        }
        if (static_cast<std::size_t>(var) >= nvars) {
            throw Error(ErrorKind::InvalidInput, "variable out of range in '" + std::string(text) + "'");
        }
        m.exponents[var] += exp;
    }
    return m;
}

/// All exponent vectors of the given weighted degree, in lexicographic order.
inline std::vector<Monomial> monomial_support(const WeightVector& weights, int degree)
{
    std::vector<Monomial> out;
    if (degree < 0 || weights.size() == 0) {
        return out;
    }
    const std::size_t n = weights.size();
    std::vector<int> exps(n, 0);
    // Depth-first over exponents, the last variable absorbing the remainder.
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i + 1 == n) {
            if (remaining % weights[i] == 0) {
                exps[i] = remaining / weights[i];
                out.emplace_back(exps);
            }
            return;
        }
        for (int e = 0; e * weights[i] <= remaining; ++e) {
            exps[i] = e;
            self(self, i + 1, remaining - e * weights[i]);
        }
        exps[i] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

/// Well-formed model of the same weighted projective space, sorted nondecreasing.
inline WeightVector well_form_weights(const WeightVector& weights)
{
    for (int a : weights.entries) {
        if (a <= 0) {
            throw Error(ErrorKind::InvalidInput, "weights must be positive: " + weights.str());
        }
    }
    std::vector<int> w = weights.entries;
    int g = 0;
    for (int a : w) {
        g = std::gcd(g, a);
    }
    if (g > 1) {
        for (int& a : w) {
            a /= g;
        }
    }
    bool changed = true;
    while (changed && w.size() > 1) {
        changed = false;
        for (std::size_t skip = 0; skip < w.size(); ++skip) {
            int q = 0;
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i != skip) {
                    q = std::gcd(q, w[i]);
                }
            }
            if (q > 1) {
                for (std::size_t i = 0; i < w.size(); ++i) {
                    if (i != skip) {
                        w[i] /= q;
                    }
                }
                changed = true;
            }
        }
    }
    std::sort(w.begin(), w.end());
    return WeightVector(std::move(w));
}

/// A torus-invariant locus where quotient singularities are looked for:
/// a coordinate vertex P_i or a one-dimensional stratum {x_k = 0, k != i, j}.
struct Site {
    enum class Kind { Vertex, Stratum };

    Kind kind = Kind::Vertex;
    int first = 0;
    int second = -1;

    static Site vertex(int i) { return Site{Kind::Vertex, i, -1}; }
    static Site stratum(int i, int j) { return Site{Kind::Stratum, std::min(i, j), std::max(i, j)}; }

    /// "p3" for a vertex, "s2-4" for a stratum.
    std::string label() const
    {
        if (kind == Kind::Vertex) {
            return "p" + std::to_string(first);
        }
        return "s" + std::to_string(first) + "-" + std::to_string(second);
    }

    friend bool operator==(const Site&, const Site&) = default;
};

inline Site parse_site(std::string_view text)
{
    auto digit = [&](char c) {
        if (c < '0' || c > '9') {
            throw Error(ErrorKind::InvalidInput, "bad site label '" + std::string(text) + "'");
        }
        return c - '0';
    };
    if (text.size() == 2 && text[0] == 'p') {
        return Site::vertex(digit(text[1]));
    }
    if (text.size() == 4 && text[0] == 's' && text[2] == '-') {
        return Site::stratum(digit(text[1]), digit(text[3]));
    }
    throw Error(ErrorKind::InvalidInput, "bad site label '" + std::string(text) + "' (expected pN or sI-J)");
}

/// "x2" -> 2.
inline int parse_variable(std::string_view text)
{
    if (text.size() == 2 && (text[0] == 'x' || text[0] == 'y') && text[1] >= '0' && text[1] <= '9') {
        return text[1] - '0';
    }
    throw Error(ErrorKind::InvalidInput, "bad variable label '" + std::string(text) + "'");
}

inline std::string variable_label(int i, std::string_view prefix = "x")
{
    return std::string(prefix) + std::to_string(i);
}

/// Splits "1,2,3" into integers.
inline std::vector<int> parse_int_list(std::string_view text)
{
    std::vector<int> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidInput, "bad integer list '" + std::string(text) + "'");
        }
    }
    return out;
}

} // namespace fanolink
