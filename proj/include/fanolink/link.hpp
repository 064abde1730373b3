#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanolink/catalog.hpp"
#include "fanolink/error.hpp"
#include "fanolink/singular.hpp"
#include "fanolink/toric.hpp"

namespace fanolink {

/// Split g = u*A + y_c*B; the new variable y = B/u = -A/y_c.
struct UnprojectionData {
    std::vector<Term> a_piece; // A, exponents in the source model's columns
    std::vector<Term> b_piece; // B
    BiDegree a_degree;
    BiDegree b_degree;
    BiDegree y_ray;
    std::string label = "y";

    /// "16_y(7)": first-row weight, label, second-row weight.
    std::string display() const
    {
        return std::to_string(y_ray.first) + "_" + label + "(" + std::to_string(y_ray.second) + ")";
    }
};

/*
 * The hypersurface needs an unprojection when every monomial of g is divisible
 * by u or by the center variable: then {u = y_c = 0} lies in the proper
 * transform and the game of the ambient does not restrict.
 */
inline std::optional<UnprojectionData> needs_unprojection(const RankTwoModel& model)
{
    if (model.equations.size() != 1) {
        return std::nullopt;
    }
    const int ui = model.index_of("u");
    const int ci = model.index_of(model.center_label);
    if (ui < 0 || ci < 0) {
        return std::nullopt;
    }
    UnprojectionData data;
    for (const Term& t : model.equations.front().support) {
        Term q = t;
        if (t.exponents[ui] > 0) {
            q.exponents[ui] -= 1;
            data.a_piece.push_back(q);
        } else if (t.exponents[ci] > 0) {
            q.exponents[ci] -= 1;
            data.b_piece.push_back(q);
        } else {
            return std::nullopt;
        }
    }
    if (data.a_piece.empty() || data.b_piece.empty()) {
        return std::nullopt;
    }
    const BiDegree g = model.equations.front().bidegree;
    data.a_degree = g - model.columns[ui].ray;
    data.b_degree = g - model.columns[ci].ray;
    data.y_ray = data.a_degree - model.columns[ci].ray;
    return data;
}

/// Adds y and replaces g by the pair y*y_c + A, -u*y + B.
inline RankTwoModel unproject(const RankTwoModel& model, const UnprojectionData& pieces)
{
    const int ui = model.index_of("u");
    const int ci = model.index_of(model.center_label);
    if (ui < 0 || ci < 0 || model.equations.size() != 1) {
        throw Error(ErrorKind::InvalidInput, "unprojection needs a hypersurface model with u and a center");
    }
    RankTwoModel out;
    out.center_label = model.center_label;
    out.columns = model.columns;
    out.columns.push_back({pieces.label, pieces.y_ray});
    const std::size_t n = out.columns.size();

    auto extend = [&](const Term& t) {
        Term e = t;
        e.exponents.resize(n, 0);
        return e;
    };
    TransformedEquation first;
    Term yyc(std::vector<int>(n, 0));
    yyc.exponents[n - 1] = 1;
    yyc.exponents[ci] = 1;
    first.support.push_back(yyc);
    for (auto& t : pieces.a_piece) {
        first.support.push_back(extend(t));
    }
    first.bidegree = pieces.a_degree;

    TransformedEquation second;
    Term uy(std::vector<int>(n, 0));
    uy.exponents[n - 1] = 1;
    uy.exponents[ui] = 1;
    second.support.push_back(uy);
    for (auto& t : pieces.b_piece) {
        second.support.push_back(extend(t));
    }
    second.bidegree = pieces.b_degree;

    out.equations = {first, second};
    if (!out.is_bihomogeneous()) {
        throw Error(ErrorKind::NonHomogeneous, "unprojection pieces are not bihomogeneous");
    }
    out.sort_columns();
    return out;
}

/// Z with the given degrees in P(ambient); the label is tabulated metadata.
struct FanoModel {
    WeightVector ambient;
    std::vector<int> degrees;
    std::string singularity_label;

    friend bool operator==(const FanoModel&, const FanoModel&) = default;

    bool satisfies_adjunction() const
    {
        int total = 0;
        for (int d : degrees) {
            total += d;
        }
        return ambient.sum() - total > 0;
    }

    std::string str() const
    {
        std::string s = "Z_";
        if (degrees.size() == 1) {
            s += std::to_string(degrees.front());
        } else {
            s += "{";
            for (std::size_t i = 0; i < degrees.size(); ++i) {
                s += (i ? "," : "") + std::to_string(degrees[i]);
            }
            s += "}";
        }
        return s + " ⊂ P" + ambient.str();
    }
};

enum class LinkKind { ElementaryLink, BadLink, NoLink };

inline std::string_view to_string(LinkKind k)
{
    switch (k) {
    case LinkKind::ElementaryLink: return "elementary link";
    case LinkKind::BadLink: return "bad link";
    case LinkKind::NoLink: return "no link";
    }
    return "?";
}

struct LinkOutcome {
    LinkKind kind = LinkKind::NoLink;
    std::optional<FanoModel> target;
    ConePosition position = ConePosition::Outside;
    BiDegree minus_k;
    std::vector<std::string> warnings;

    friend bool operator==(const LinkOutcome&, const LinkOutcome&) = default;
};

struct GameTrace {
    std::vector<WallStep> steps;
    bool unprojected = false;
    std::optional<UnprojectionData> unprojection;
    RankTwoModel raw;
    RankTwoModel unprojected_raw; // empty unless unprojected
    RankTwoModel well_formed;     // the model the game is played on
    BlowupData blowup;

    bool complete() const
    {
        for (auto& s : steps) {
            if (s.restricted == RestrictedKind::Indeterminate) {
                return false;
            }
        }
        return !steps.empty() && steps.back().restricted == RestrictedKind::Divisorial;
    }
};

struct GameResult {
    GameTrace trace;
    LinkOutcome outcome;
};

/*
 * Blow up, unproject if the ambient game does not restrict, play the game
 * and classify by the position of -K_Y.
 */
inline GameResult run_game(const FamilyRecord& record, const SingularLocusEntry& entry, int tangent,
                           const std::string& label = {})
{
    GameResult res;
    GameTrace& tr = res.trace;
    tr.blowup = blowup_weights(record, entry, tangent);
    tr.raw = build_model(record, tr.blowup);
    RankTwoModel played = tr.raw;
    tr.unprojection = needs_unprojection(tr.raw);
    if (tr.unprojection) {
        tr.unprojected = true;
        tr.unprojected_raw = unproject(tr.raw, *tr.unprojection);
        played = tr.unprojected_raw;
    }
    tr.well_formed = well_form_model(played);
    tr.steps = restrict_walk(tr.well_formed);

    LinkOutcome& out = res.outcome;
    out.minus_k = minus_K(tr.well_formed);
    out.position = movable_position(tr.well_formed, out.minus_k);
    switch (out.position) {
    case ConePosition::Interior: out.kind = LinkKind::ElementaryLink; break;
    case ConePosition::Boundary: out.kind = LinkKind::BadLink; break;
    case ConePosition::Outside: out.kind = LinkKind::NoLink; break;
    }
    if (out.kind == LinkKind::ElementaryLink) {
        if (tr.complete()) {
            const DivisorialTarget& t = *tr.steps.back().target;
            out.target = FanoModel{t.ambient, t.degrees, label};
        } else {
            out.warnings.push_back("-K_Y is interior but the restricted game has indeterminate steps");
        }
    }
    for (auto& s : tr.steps) {
        if (s.restricted == RestrictedKind::Indeterminate) {
            out.warnings.push_back("indeterminate restriction at wall " + s.wall_label());
        }
    }
    return res;
}

inline GameResult run_game(const FamilyRecord& record, const Site& site, int tangent = -1)
{
    const auto locus = singular_locus(record);
    const SingularLocusEntry& entry = find_entry(locus, site);
    const int t = tangent >= 0 ? tangent : entry.default_tangent();
    std::string label;
    for (auto& l : record.expected.links) {
        if (l.site == site && l.tangent == t) {
            label = l.label;
        }
    }
    return run_game(record, entry, t, label);
}

} // namespace fanolink
