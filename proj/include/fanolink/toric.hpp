#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fanolink/catalog.hpp"
#include "fanolink/error.hpp"
#include "fanolink/singular.hpp"
#include "fanolink/weights.hpp"

namespace fanolink {

/// A class on the rank-2 model: degrees against the first and second rows.
struct BiDegree {
    std::int64_t first = 0;
    std::int64_t second = 0;

    BiDegree& operator+=(const BiDegree& o)
    {
        first += o.first;
        second += o.second;
        return *this;
    }
    BiDegree& operator-=(const BiDegree& o)
    {
        first -= o.first;
        second -= o.second;
        return *this;
    }
    friend BiDegree operator+(BiDegree a, const BiDegree& b) { return a += b; }
    friend BiDegree operator-(BiDegree a, const BiDegree& b) { return a -= b; }
    friend BiDegree operator*(std::int64_t k, const BiDegree& a) { return {k * a.first, k * a.second}; }
    friend bool operator==(const BiDegree&, const BiDegree&) = default;

    bool is_zero() const { return first == 0 && second == 0; }

    std::string str() const { return "(" + std::to_string(first) + "," + std::to_string(second) + ")"; }
};

inline std::int64_t det(const BiDegree& a, const BiDegree& b) { return a.first * b.second - a.second * b.first; }
inline std::int64_t dot(const BiDegree& a, const BiDegree& b) { return a.first * b.first + a.second * b.second; }

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

/// Same direction (positive multiples of one another).
inline bool parallel(const BiDegree& a, const BiDegree& b) { return det(a, b) == 0 && dot(a, b) > 0; }

inline BiDegree primitive(const BiDegree& a)
{
    const std::int64_t g = gcd64(a.first, a.second);
    return g == 0 ? a : BiDegree{a.first / g, a.second / g};
}

/// The rational row operation rows -> (1/den) * [[a, b], [c, d]] * rows.
struct RowTransform {
    std::int64_t a = 1, b = 0, c = 0, d = 1;
    std::int64_t den = 1;

    std::int64_t numerator_det() const { return a * d - b * c; }

    BiDegree apply(const BiDegree& v) const
    {
        const std::int64_t x = a * v.first + b * v.second;
        const std::int64_t y = c * v.first + d * v.second;
        if (x % den != 0 || y % den != 0) {
            throw Error(ErrorKind::LatticeError, "row transformation leaves the integer lattice at " + v.str());
        }
        return {x / den, y / den};
    }
};

struct Column {
    std::string label;
    BiDegree ray;
};

/// A monomial in the model's variables; exponents are indexed by column.
struct Term {
    std::vector<int> exponents;

    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term&, const Term&) = default;
};

struct TransformedEquation {
    std::vector<Term> support;
    BiDegree bidegree;
};

/*
 * Rank-2 toric ambient of a Kawamata blow-up together with the proper
 * transform(s) of the defining equation.
 *
 * Columns are the rays of the GIT presentation (one per variable, u
 * included), kept in anticlockwise order starting at u.
 */
struct RankTwoModel {
    std::vector<Column> columns;
    std::vector<TransformedEquation> equations;
    std::string center_label;

    std::size_t size() const { return columns.size(); }

    int index_of(std::string_view label) const
    {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (columns[i].label == label) {
                return static_cast<int>(i);
            }
        }
        return -1;
    }

    const BiDegree& ray(std::string_view label) const
    {
        const int i = index_of(label);
        if (i < 0) {
            throw Error(ErrorKind::InvalidInput, "no column '" + std::string(label) + "'");
        }
        return columns[i].ray;
    }

    std::vector<std::string> labels() const
    {
        std::vector<std::string> out;
        for (auto& c : columns) {
            out.push_back(c.label);
        }
        return out;
    }

    BiDegree degree_of(const Term& t) const
    {
        BiDegree d;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            d += static_cast<std::int64_t>(t.exponents[i]) * columns[i].ray;
        }
        return d;
    }

    /// "u*y1^9"
    std::string term_str(const Term& t) const
    {
        std::string s;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (t.exponents[i] == 0) {
                continue;
            }
            if (!s.empty()) {
                s += "*";
            }
            s += columns[i].label;
            if (t.exponents[i] > 1) {
                s += "^" + std::to_string(t.exponents[i]);
            }
        }
        return s.empty() ? "1" : s;
    }

    /// gcd of all 2x2 minors (the index of the lattice spanned by the columns).
    std::int64_t lattice_index() const
    {
        std::int64_t g = 0;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            for (std::size_t j = i + 1; j < columns.size(); ++j) {
                g = gcd64(g, det(columns[i].ray, columns[j].ray));
            }
        }
        return g;
    }

    bool is_well_formed() const { return lattice_index() == 1; }

    bool is_bihomogeneous() const
    {
        for (auto& eq : equations) {
            for (auto& t : eq.support) {
                if (!(degree_of(t) == eq.bidegree)) {
                    return false;
                }
            }
        }
        return true;
    }

    /// Anticlockwise order starting from the u column (stable on parallel rays).
    void sort_columns()
    {
        const int ui = index_of("u");
        const BiDegree origin = ui >= 0 ? columns[ui].ray : columns.front().ray;
        auto half = [&](const BiDegree& p) {
            const auto s = det(origin, p);
            return (s > 0 || (s == 0 && dot(origin, p) > 0)) ? 0 : 1;
        };
        std::vector<std::size_t> perm(columns.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
            const BiDegree& p = columns[x].ray;
            const BiDegree& q = columns[y].ray;
            const int hp = half(p);
            const int hq = half(q);
            if (hp != hq) {
                return hp < hq;
            }
            return det(p, q) > 0;
        });
        std::vector<Column> cols;
        for (auto i : perm) {
            cols.push_back(columns[i]);
        }
        for (auto& eq : equations) {
            for (auto& t : eq.support) {
                std::vector<int> e;
                for (auto i : perm) {
                    e.push_back(t.exponents[i]);
                }
                t.exponents = std::move(e);
            }
            std::sort(eq.support.begin(), eq.support.end());
        }
        columns = std::move(cols);
    }

    RankTwoModel transformed(const RowTransform& tr) const
    {
        RankTwoModel m = *this;
        for (auto& c : m.columns) {
            c.ray = tr.apply(c.ray);
        }
        for (auto& eq : m.equations) {
            eq.bidegree = tr.apply(eq.bidegree);
        }
        if (tr.numerator_det() < 0) {
            // Orientation reversed: the anticlockwise order changes.
            m.sort_columns();
        }
        return m;
    }

    /// Columns grouped into classes of parallel rays, in order.
    std::vector<std::vector<int>> ray_classes() const
    {
        std::vector<std::vector<int>> classes;
        for (int i = 0; i < static_cast<int>(columns.size()); ++i) {
            if (!classes.empty() && parallel(columns[classes.back().front()].ray, columns[i].ray)) {
                classes.back().push_back(i);
            } else {
                classes.push_back({i});
            }
        }
        return classes;
    }
};

inline std::string y_label(int i) { return "y" + std::to_string(i); }

/// Raw model: row 1 the ambient weights (0 for u), row 2 the blow-up weights (-r for u).
inline RankTwoModel build_model(const FamilyRecord& record, const BlowupData& blowup)
{
    const WeightVector& w = record.weights;
    const int n = static_cast<int>(w.size());
    RankTwoModel m;
    m.center_label = y_label(blowup.center.center);
    m.columns.push_back({"u", {blowup.u_weight.first, blowup.u_weight.second}});
    for (int i = 0; i < n; ++i) {
        m.columns.push_back({y_label(i), {w[i], blowup.b_weights[i]}});
    }

    std::int64_t order = -1;
    for (const Monomial& mono : blowup.support) {
        std::int64_t s = 0;
        for (int i = 0; i < n; ++i) {
            s += static_cast<std::int64_t>(mono.exponents[i]) * blowup.b_weights[i];
        }
        order = order < 0 ? s : std::min(order, s);
    }

    TransformedEquation eq;
    for (const Monomial& mono : blowup.support) {
        std::int64_t s = 0;
        for (int i = 0; i < n; ++i) {
            s += static_cast<std::int64_t>(mono.exponents[i]) * blowup.b_weights[i];
        }
        if ((s - order) % blowup.r != 0) {
            throw Error(ErrorKind::NonHomogeneous,
                        "u-order of " + mono.str() + " is not integral after dividing by the exceptional order");
        }
        Term t;
        t.exponents.push_back(static_cast<int>((s - order) / blowup.r));
        t.exponents.insert(t.exponents.end(), mono.exponents.begin(), mono.exponents.end());
        eq.support.push_back(std::move(t));
    }
    if (eq.support.empty()) {
        throw Error(ErrorKind::NonHomogeneous, "empty transformed equation");
    }
    eq.bidegree = m.degree_of(eq.support.front());
    m.equations.push_back(std::move(eq));
    if (!m.is_bihomogeneous()) {
        throw Error(ErrorKind::NonHomogeneous, "transformed equation is not bihomogeneous");
    }
    m.sort_columns();
    return m;
}

/*
 * Divides out the lattice index of the columns.
 *
 * Preferred form keeps the second row and replaces the first by
 * (row1 + k*row2) / index; otherwise a Hermite basis of the column lattice is
 * used. Finally row1 is sheared by multiples of row2 so that the u column's
 * first entry lies in [0, r).
 */
inline RankTwoModel well_form_model(const RankTwoModel& model)
{
    const std::int64_t index = model.lattice_index();
    if (index == 0) {
        throw Error(ErrorKind::LatticeError, "columns do not span a rank-2 lattice");
    }

    std::optional<RowTransform> tr;
    for (std::int64_t k = 0; k < index && !tr; ++k) {
        bool ok = true;
        for (auto& c : model.columns) {
            ok = ok && (c.ray.first + k * c.ray.second) % index == 0;
        }
        if (ok) {
            tr = RowTransform{1, k, 0, index, index};
        }
    }
    if (!tr) {
        // Hermite basis [[h11, 0], [h21, h22]] of the column lattice via integer column operations.
        BiDegree e1{0, 0};
        BiDegree e2{0, 0};
        std::vector<BiDegree> vs;
        for (auto& c : model.columns) {
            vs.push_back(c.ray);
        }
        // Reduce the first coordinates to a single generator by Euclid.
        for (;;) {
            std::vector<BiDegree*> nz;
            for (auto& v : vs) {
                if (v.first != 0) {
                    nz.push_back(&v);
                }
            }
            if (nz.size() <= 1) {
                if (!nz.empty()) {
                    e1 = *nz.front();
                    if (e1.first < 0) {
                        e1 = BiDegree{-e1.first, -e1.second};
                    }
                    *nz.front() = BiDegree{0, 0};
                }
                break;
            }
            auto smallest = std::min_element(nz.begin(), nz.end(), [](BiDegree* a, BiDegree* b) {
                return std::abs(a->first) < std::abs(b->first);
            });
            for (auto* v : nz) {
                if (v != *smallest) {
                    const std::int64_t q = v->first / (*smallest)->first;
                    *v = *v - q * **smallest;
                }
            }
        }
        std::int64_t h22 = 0;
        for (auto& v : vs) {
            h22 = gcd64(h22, v.second);
        }
        e2 = BiDegree{0, h22};
        if (e1.first == 0 || h22 == 0) {
            throw Error(ErrorKind::LatticeError, "degenerate column lattice");
        }
        e1.second = ((e1.second % h22) + h22) % h22;
        // rows -> B^{-1} rows with B = [[e1.first, 0], [e1.second, h22]].
        tr = RowTransform{h22, 0, -e1.second, e1.first, e1.first * h22};
    }

    RankTwoModel out = model.transformed(*tr);
    const int ui = out.index_of("u");
    if (ui >= 0 && out.columns[ui].ray.second != 0) {
        const std::int64_t r = -out.columns[ui].ray.second;
        const std::int64_t first = out.columns[ui].ray.first;
        // Shear row1 += s * row2 so that 0 <= first - s*r < |r|.
        std::int64_t s = first / r;
        if (first - s * r < 0) {
            s += (r > 0 ? -1 : 1);
        }
        if (first - s * r >= (r > 0 ? r : -r)) {
            s += (r > 0 ? 1 : -1);
        }
        out = out.transformed(RowTransform{1, s, 0, 1, 1});
    }
    out.sort_columns();
    if (!out.is_well_formed()) {
        throw Error(ErrorKind::LatticeError, "well-forming did not reach a primitive lattice");
    }
    if (!out.is_bihomogeneous()) {
        throw Error(ErrorKind::NonHomogeneous, "well-formed equations lost bihomogeneity");
    }
    return out;
}

enum class AmbientKind { Flip, Contraction, Fibration };
enum class RestrictedKind { Iso, Flop, Flip, Divisorial, Indeterminate };

inline std::string_view to_string(AmbientKind k)
{
    switch (k) {
    case AmbientKind::Flip: return "flip";
    case AmbientKind::Contraction: return "contraction";
    case AmbientKind::Fibration: return "fibration";
    }
    return "?";
}

inline std::string_view to_string(RestrictedKind k)
{
    switch (k) {
    case RestrictedKind::Iso: return "iso";
    case RestrictedKind::Flop: return "flop";
    case RestrictedKind::Flip: return "flip";
    case RestrictedKind::Divisorial: return "divisorial";
    case RestrictedKind::Indeterminate: return "indeterminate";
    }
    return "?";
}

using LabelledWeights = std::vector<std::pair<std::string, std::int64_t>>;

inline std::vector<std::int64_t> weights_only(const LabelledWeights& lw)
{
    std::vector<std::int64_t> out;
    for (auto& [label, w] : lw) {
        out.push_back(w);
    }
    return out;
}

/// End model of a divisorial contraction: Z with degrees `degrees` in P(ambient).
struct DivisorialTarget {
    std::string contracted;
    std::vector<std::string> variables;
    WeightVector weights;
    std::vector<int> degrees;
    WeightVector ambient;
    std::int64_t gamma = 1;

    friend bool operator==(const DivisorialTarget&, const DivisorialTarget&) = default;
};

struct WallStep {
    std::vector<std::string> wall;
    AmbientKind ambient = AmbientKind::Flip;
    LabelledWeights ambient_weights;
    std::string contracted;
    RestrictedKind restricted = RestrictedKind::Indeterminate;
    LabelledWeights restricted_weights;
    std::vector<std::string> eliminated;
    std::vector<std::string> witnesses;
    std::optional<DivisorialTarget> target;

    friend bool operator==(const WallStep&, const WallStep&) = default;

    std::string wall_label() const
    {
        std::string s;
        for (auto& w : wall) {
            s += (s.empty() ? "" : ",") + w;
        }
        return s;
    }
};

/// Index of the class containing `label`.
inline int class_of(const std::vector<std::vector<int>>& classes, int column)
{
    for (int k = 0; k < static_cast<int>(classes.size()); ++k) {
        if (std::find(classes[k].begin(), classes[k].end(), column) != classes[k].end()) {
            return k;
        }
    }
    return -1;
}

/*
 * Target of the contraction of {y_v = 0}: each remaining variable gets
 * weight |det(rho_j, rho_v)| and each equation degree |det(deg, rho_v)|, all
 * divided by their common gcd, then well-formed.
 */
inline DivisorialTarget divisorial_target(const RankTwoModel& model, std::string_view contracted)
{
    const BiDegree& v = model.ray(contracted);
    DivisorialTarget t;
    t.contracted = std::string(contracted);
    std::vector<std::int64_t> ws;
    std::vector<std::int64_t> ds;
    for (auto& c : model.columns) {
        if (c.label == contracted) {
            continue;
        }
        const std::int64_t x = det(c.ray, v);
        ws.push_back(x < 0 ? -x : x);
        t.variables.push_back(c.label);
    }
    for (auto& eq : model.equations) {
        const std::int64_t x = det(eq.bidegree, v);
        ds.push_back(x < 0 ? -x : x);
    }
    std::int64_t g = 0;
    for (auto x : ws) {
        g = gcd64(g, x);
    }
    for (auto x : ds) {
        g = gcd64(g, x);
    }
    if (g == 0 || std::find(ws.begin(), ws.end(), 0) != ws.end()) {
        throw Error(ErrorKind::LatticeError, "contracted ray is parallel to a remaining ray");
    }
    t.gamma = g;
    std::vector<int> w;
    for (auto x : ws) {
        w.push_back(static_cast<int>(x / g));
    }
    for (auto x : ds) {
        t.degrees.push_back(static_cast<int>(x / g));
    }
    t.weights = WeightVector(w);

    // Well-form; a factor q removed from all weights but one also divides the degrees it divides.
    bool changed = true;
    while (changed) {
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
                for (int& d : t.degrees) {
                    if (d % q == 0) {
                        d /= q;
                    }
                }
                changed = true;
            }
        }
    }
    t.ambient = well_form_weights(WeightVector(w));
    std::sort(t.degrees.begin(), t.degrees.end());
    return t;
}

/// One step per interior wall, walking anticlockwise away from u.
inline std::vector<WallStep> ambient_walk(const RankTwoModel& model)
{
    const auto classes = model.ray_classes();
    if (classes.size() < 4) {
        throw Error(ErrorKind::DegenerateWall, "fewer than four ray classes; no interior wall");
    }
    std::vector<WallStep> steps;
    const int last_wall = static_cast<int>(classes.size()) - 2;
    for (int k = 2; k <= last_wall; ++k) {
        WallStep step;
        const BiDegree rho = primitive(model.columns[classes[k].front()].ray);
        for (int c : classes[k]) {
            step.wall.push_back(model.columns[c].label);
        }
        std::vector<std::pair<std::string, std::int64_t>> raw;
        std::int64_t g = 0;
        for (int c = 0; c < static_cast<int>(model.size()); ++c) {
            if (class_of(classes, c) == k) {
                continue;
            }
            const std::int64_t x = det(model.columns[c].ray, rho);
            raw.emplace_back(model.columns[c].label, x);
            g = gcd64(g, x);
        }
        for (auto& [label, x] : raw) {
            step.ambient_weights.emplace_back(label, x / g);
        }
        int beyond = 0;
        for (int j = k + 1; j < static_cast<int>(classes.size()); ++j) {
            beyond += static_cast<int>(classes[j].size());
        }
        if (k == last_wall && beyond == 1) {
            step.ambient = AmbientKind::Contraction;
            step.contracted = model.columns[classes.back().front()].label;
        } else if (k == last_wall) {
            step.ambient = AmbientKind::Fibration;
        } else {
            step.ambient = AmbientKind::Flip;
        }
        steps.push_back(std::move(step));
    }
    return steps;
}

namespace detail {

/// Off-wall variable v such that `t` is v times a monomial in wall variables;
/// only columns in `allowed` (the pre-crossing side) qualify.
inline int eliminable_variable(const RankTwoModel& model, const Term& t, const std::vector<int>& wall_columns,
                               const std::vector<int>& allowed)
{
    int found = -1;
    for (int c = 0; c < static_cast<int>(model.size()); ++c) {
        if (t.exponents[c] == 0 || std::find(wall_columns.begin(), wall_columns.end(), c) != wall_columns.end()) {
            continue;
        }
        if (t.exponents[c] != 1 || found >= 0) {
            return -1;
        }
        found = c;
    }
    if (found >= 0 && std::find(allowed.begin(), allowed.end(), found) == allowed.end()) {
        return -1;
    }
    return found;
}

inline bool assign_eliminations(const RankTwoModel& model, const std::vector<int>& wall_columns,
                                const std::vector<int>& allowed, std::size_t eq, std::vector<int>& chosen,
                                std::vector<std::string>& witnesses)
{
    if (eq == model.equations.size()) {
        return true;
    }
    for (const Term& t : model.equations[eq].support) {
        const int v = eliminable_variable(model, t, wall_columns, allowed);
        if (v < 0 || std::find(chosen.begin(), chosen.end(), v) != chosen.end()) {
            continue;
        }
        chosen.push_back(v);
        witnesses.push_back(model.term_str(t));
        if (assign_eliminations(model, wall_columns, allowed, eq + 1, chosen, witnesses)) {
            return true;
        }
        chosen.pop_back();
        witnesses.pop_back();
    }
    return false;
}

inline bool is_atiyah(const LabelledWeights& lw)
{
    auto w = weights_only(lw);
    std::sort(w.begin(), w.end());
    return w == std::vector<std::int64_t>{-1, -1, 1, 1};
}

} // namespace detail

/*
 * Classifies each wall crossing after restricting to the (complete
 * intersection) proper transform.
 *
 * Iso: an equation has a monomial purely in the wall variables, so it does
 * not vanish on either flipping locus. Flip/Flop: every equation has a
 * monomial v * (wall variables)^k eliminating a distinct off-wall v, which
 * drops v from the local weights. Contraction walls restrict to divisorial
 * contractions.
 */
inline std::vector<WallStep> restrict_walk(const RankTwoModel& model)
{
    auto steps = ambient_walk(model);
    const auto classes = model.ray_classes();
    for (std::size_t s = 0; s < steps.size(); ++s) {
        WallStep& step = steps[s];
        const auto& wall_columns = classes[s + 2];
        if (step.ambient == AmbientKind::Contraction) {
            step.restricted = RestrictedKind::Divisorial;
            step.target = divisorial_target(model, step.contracted);
            continue;
        }
        if (step.ambient == AmbientKind::Fibration) {
            step.restricted = RestrictedKind::Indeterminate;
            continue;
        }

        bool iso = false;
        for (auto& eq : model.equations) {
            for (const Term& t : eq.support) {
                bool on_wall = true;
                for (int c = 0; c < static_cast<int>(model.size()); ++c) {
                    if (t.exponents[c] != 0 &&
                        std::find(wall_columns.begin(), wall_columns.end(), c) == wall_columns.end()) {
                        on_wall = false;
                    }
                }
                if (on_wall && !iso) {
                    iso = true;
                    step.witnesses.push_back(model.term_str(t));
                }
            }
        }
        if (iso) {
            step.restricted = RestrictedKind::Iso;
            continue;
        }

        std::vector<int> chosen;
        std::vector<std::string> witnesses;
        std::vector<int> before;
        for (auto& [label, x] : step.ambient_weights) {
            if (x > 0) {
                before.push_back(model.index_of(label));
            }
        }
        if (!detail::assign_eliminations(model, wall_columns, before, 0, chosen, witnesses)) {
            step.restricted = RestrictedKind::Indeterminate;
            continue;
        }
        for (int c : chosen) {
            step.eliminated.push_back(model.columns[c].label);
        }
        step.witnesses = witnesses;
        bool pos = false;
        bool neg = false;
        for (auto& [label, x] : step.ambient_weights) {
            if (std::find(step.eliminated.begin(), step.eliminated.end(), label) != step.eliminated.end()) {
                continue;
            }
            step.restricted_weights.emplace_back(label, x);
            pos = pos || x > 0;
            neg = neg || x < 0;
        }
        if (!pos || !neg) {
            step.restricted = RestrictedKind::Indeterminate;
        } else if (detail::is_atiyah(step.restricted_weights)) {
            step.restricted = RestrictedKind::Flop;
        } else {
            step.restricted = RestrictedKind::Flip;
        }
    }
    return steps;
}

/// Sum of the columns minus the sum of the equation bidegrees.
inline BiDegree minus_K(const RankTwoModel& model)
{
    BiDegree k;
    for (auto& c : model.columns) {
        k += c.ray;
    }
    for (auto& eq : model.equations) {
        k -= eq.bidegree;
    }
    return k;
}

enum class ConePosition { Interior, Boundary, Outside };

inline std::string_view to_string(ConePosition p)
{
    switch (p) {
    case ConePosition::Interior: return "interior";
    case ConePosition::Boundary: return "boundary";
    case ConePosition::Outside: return "outside";
    }
    return "?";
}

/// Position relative to the cone spanned by the second and second-to-last ray classes.
inline ConePosition movable_position(const RankTwoModel& model, const BiDegree& cls)
{
    if (cls.is_zero()) {
        throw Error(ErrorKind::ZeroClass, "class (0,0) has no position");
    }
    const auto classes = model.ray_classes();
    if (classes.size() < 3) {
        throw Error(ErrorKind::DegenerateWall, "too few ray classes for a movable cone");
    }
    const BiDegree& lo = model.columns[classes[1].front()].ray;
    const BiDegree& hi = model.columns[classes[classes.size() - 2].front()].ray;
    const auto s1 = det(lo, cls);
    const auto s2 = det(cls, hi);
    if (s1 > 0 && s2 > 0) {
        return ConePosition::Interior;
    }
    if ((s1 == 0 && dot(lo, cls) > 0) || (s2 == 0 && dot(hi, cls) > 0)) {
        return ConePosition::Boundary;
    }
    return ConePosition::Outside;
}

} // namespace fanolink
