#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fanolink/catalog.hpp"
#include "fanolink/error.hpp"
#include "fanolink/weights.hpp"

namespace fanolink {

/*
 * Terminal cyclic quotient singularity 1/r(w1,w2,w3).
 *
 * local_weights are the residues mod r of the three local coordinates (listed
 * in local_variables, ambient indices). Multiplying them by `multiplier`
 * gives normal_residues, a permutation of the Kawamata form (1, a, r - a).
 */
struct QuotientSingularity {
    int r = 1;
    std::vector<int> local_variables;
    std::vector<int> local_weights;
    int multiplier = 1;
    std::vector<int> normal_residues;
    std::array<int, 3> kawamata_form{1, 0, 0};

    /// "1/5(1,2,4)"
    std::string str() const { return format(local_weights); }
    /// "1/5(3,1,2)"
    std::string normal_str() const { return format(normal_residues); }

private:
    std::string format(const std::vector<int>& v) const
    {
        std::string s = "1/" + std::to_string(r) + "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            s += (i ? "," : "") + std::to_string(v[i]);
        }
        return s + ")";
    }
};

/// Smallest multiplier m with m*weights = (1, a, r - a) mod r up to order.
inline QuotientSingularity normalize_terminal(int r, std::span<const int> weights)
{
    if (r < 2 || weights.size() != 3) {
        throw Error(ErrorKind::InvalidInput, "need r >= 2 and three local weights");
    }
    QuotientSingularity q;
    q.r = r;
    for (int w : weights) {
        const int res = ((w % r) + r) % r;
        if (std::gcd(res, r) != 1) {
            throw Error(ErrorKind::NotTerminal,
                        "local weight " + std::to_string(w) + " not coprime to " + std::to_string(r));
        }
        q.local_weights.push_back(res);
    }
    for (int m = 1; m < r; ++m) {
        std::vector<int> v;
        for (int w : q.local_weights) {
            v.push_back(m * w % r);
        }
        for (int unit = 0; unit < 3; ++unit) {
            if (v[unit] != 1) {
                continue;
            }
            const int j = unit == 0 ? 1 : 0;
            const int k = unit == 2 ? 1 : 2;
            if (v[j] + v[k] == r) {
                q.multiplier = m;
                q.normal_residues = v;
                q.kawamata_form = {1, v[j], v[k]};
                return q;
            }
        }
    }
    throw Error(ErrorKind::NotTerminal, q.str() + " has no Kawamata normal form");
}

inline QuotientSingularity normalize_terminal(int r, std::initializer_list<int> weights)
{
    return normalize_terminal(r, std::span<const int>(weights.begin(), weights.size()));
}

/// A monomial x_c^k * x_t of f that makes x_t a tangent (eliminable) coordinate at the center.
struct TangentCandidate {
    Monomial key;
    int variable = -1;
};

struct SingularLocusEntry {
    Site site;
    int count = 1;
    /// Coordinate whose vertex the point is moved to; -1 when no coordinate
    /// change can move a stratum point to a vertex.
    int center = -1;
    std::vector<TangentCandidate> tangent_candidates;
    /// Type computed with default_tangent().
    QuotientSingularity singularity;

    /// The heaviest candidate; lighter ones can be absorbed into it by a coordinate change.
    int default_tangent() const
    {
        return tangent_candidates.empty() ? -1 : tangent_candidates.back().variable;
    }

    const TangentCandidate* candidate(int variable) const
    {
        for (auto& c : tangent_candidates) {
            if (c.variable == variable) {
                return &c;
            }
        }
        return nullptr;
    }

    std::string label() const
    {
        return (count > 1 ? std::to_string(count) + "x" : std::string()) + singularity.str();
    }
};

namespace detail {

inline QuotientSingularity local_type(const WeightVector& w, int r, const std::vector<int>& excluded)
{
    std::vector<int> vars;
    std::vector<int> weights;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        if (std::find(excluded.begin(), excluded.end(), i) == excluded.end()) {
            vars.push_back(i);
            weights.push_back(w[i]);
        }
    }
    QuotientSingularity q = normalize_terminal(r, weights);
    q.local_variables = std::move(vars);
    return q;
}

inline std::vector<TangentCandidate> vertex_candidates(const WeightVector& w, int degree, int center)
{
    std::vector<TangentCandidate> out;
    for (int j = 0; j < static_cast<int>(w.size()); ++j) {
        const int rest = degree - w[j];
        if (j == center || rest <= 0 || rest % w[center] != 0) {
            continue;
        }
        Monomial key(std::vector<int>(w.size(), 0));
        key.exponents[center] = rest / w[center];
        key.exponents[j] = 1;
        out.push_back({key, j});
    }
    std::stable_sort(out.begin(), out.end(), [&](const TangentCandidate& a, const TangentCandidate& b) {
        return w[a.variable] < w[b.variable];
    });
    return out;
}

} // namespace detail

/*
 * Quotient singularities of a general member at coordinate vertices and on
 * one-dimensional coordinate strata.
 *
 * A vertex P_i (a_i > 1) lies on X iff d is not a multiple of a_i. A stratum
 * with g = gcd(a_i, a_j) > 1 meets X off the vertices in as many points as the
 * lattice length of the restricted Newton segment.
 */
inline std::vector<SingularLocusEntry> singular_locus(const FamilyRecord& record)
{
    const WeightVector& w = record.weights;
    const int d = record.degree;
    const int n = static_cast<int>(w.size());
    std::vector<SingularLocusEntry> out;

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                if (std::gcd(std::gcd(w[i], w[j]), w[k]) > 1) {
                    throw Error(ErrorKind::UnsupportedCenter,
                                "family " + std::to_string(record.id) + ": two-dimensional stratum with gcd > 1");
                }
            }
        }
    }

    for (int i = 0; i < n; ++i) {
        if (w[i] == 1 || d % w[i] == 0) {
            continue;
        }
        SingularLocusEntry e;
        e.site = Site::vertex(i);
        e.center = i;
        e.tangent_candidates = detail::vertex_candidates(w, d, i);
        if (e.tangent_candidates.empty()) {
            throw Error(ErrorKind::UnresolvedTangent,
                        "family " + std::to_string(record.id) + ": vertex P" + std::to_string(i) +
                            " lies on X but f has no monomial x" + std::to_string(i) + "^k*x_j");
        }
        e.singularity = detail::local_type(w, w[i], {i, e.default_tangent()});
        out.push_back(std::move(e));
    }

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int g = std::gcd(w[i], w[j]);
            if (g == 1) {
                continue;
            }
            std::vector<int> powers;
            for (int p = 0; p * w[i] <= d; ++p) {
                if ((d - p * w[i]) % w[j] == 0) {
                    powers.push_back(p);
                }
            }
            if (powers.empty()) {
                throw Error(ErrorKind::NotTerminal, "family " + std::to_string(record.id) + ": stratum " +
                                                        Site::stratum(i, j).label() + " is contained in X");
            }
            const int length = (powers.back() - powers.front()) / (w[j] / g);
            if (length == 0) {
                continue;
            }
            SingularLocusEntry e;
            e.site = Site::stratum(i, j);
            e.count = length;
            e.singularity = detail::local_type(w, g, {i, j});
            // x_j -> x_j - c*x_i^(a_j/a_i) moves a stratum point to P_i.
            if (w[j] % w[i] == 0 && d - w[j] >= 0 && (d - w[j]) % w[i] == 0) {
                e.center = i;
                Monomial key(std::vector<int>(n, 0));
                key.exponents[i] = (d - w[j]) / w[i];
                key.exponents[j] = 1;
                e.tangent_candidates.push_back({key, j});
            }
            out.push_back(std::move(e));
        }
    }

    return out;
}

/// Finds the entry at a site, throwing InvalidInput when the site carries no singular point.
inline const SingularLocusEntry& find_entry(const std::vector<SingularLocusEntry>& locus, const Site& site)
{
    for (auto& e : locus) {
        if (e.site == site) {
            return e;
        }
    }
    throw Error(ErrorKind::InvalidInput, "no singular point at " + site.label());
}

/*
 * Weights of the Kawamata blow-up at a point, written as the substitution
 * x_i -> u^(b_i / r) y_i.
 *
 * The center coordinate gets b = 0; the three local coordinates get the
 * Kawamata weights; the tangent coordinate gets the u-order of its implicit
 * solution, the least b-weighted degree of a monomial of f avoiding it.
 */
struct BlowupData {
    SingularLocusEntry center;
    int tangent = -1;
    int r = 1;
    QuotientSingularity singularity;
    std::vector<int> b_weights;
    std::pair<int, int> u_weight{0, -1};
    Monomial key;
    /// Support of f after moving the point to the center vertex.
    std::vector<Monomial> support;
};

inline BlowupData blowup_weights(const FamilyRecord& record, const SingularLocusEntry& entry, int tangent)
{
    if (entry.center < 0) {
        throw Error(ErrorKind::UnsupportedCenter, "no coordinate change moves the points of " + entry.site.label() +
                                                      " to a vertex");
    }
    const TangentCandidate* chosen = entry.candidate(tangent);
    if (chosen == nullptr) {
        throw Error(ErrorKind::InvalidInput, "x" + std::to_string(tangent) + " is not a tangent candidate at " +
                                                 entry.site.label());
    }
    const WeightVector& w = record.weights;
    const int n = static_cast<int>(w.size());
    const int c = entry.center;

    BlowupData data;
    data.center = entry;
    data.tangent = tangent;
    data.r = w[c];
    data.key = chosen->key;
    data.u_weight = {0, -data.r};
    data.singularity = detail::local_type(w, data.r, {c, tangent});

    // Other candidates' key monomials are absorbed into the chosen one by a
    // coordinate change (lighter ones) or absent (heavier ones); the pure
    // power of the center is absent because the point lies on X.
    for (const Monomial& m : monomial_support(w, record.degree)) {
        if (m.exponents[c] * w[c] == record.degree) {
            continue;
        }
        bool other_key = false;
        for (auto& cand : entry.tangent_candidates) {
            other_key = other_key || (cand.variable != tangent && cand.key == m);
        }
        if (!other_key) {
            data.support.push_back(m);
        }
    }

    data.b_weights.assign(n, 0);
    const auto& q = data.singularity;
    for (std::size_t k = 0; k < q.local_variables.size(); ++k) {
        data.b_weights[q.local_variables[k]] = q.normal_residues[k];
    }
    int best = -1;
    for (const Monomial& m : data.support) {
        if (m.exponents[tangent] != 0) {
            continue;
        }
        int order = 0;
        for (int i = 0; i < n; ++i) {
            order += m.exponents[i] * data.b_weights[i];
        }
        if (best < 0 || order < best) {
            best = order;
        }
    }
    if (best <= 0) {
        throw Error(ErrorKind::UnresolvedTangent, "cannot determine the tangent multiplicity of x" +
                                                      std::to_string(tangent));
    }
    data.b_weights[tangent] = best;
    if ((best - q.multiplier * w[tangent]) % data.r != 0) {
        throw Error(ErrorKind::DataIntegrity, "tangent weight violates the Kawamata congruence");
    }
    return data;
}

} // namespace fanolink
