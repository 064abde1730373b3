#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fanolink/catalog.hpp"
#include "fanolink/error.hpp"
#include "fanolink/exclusion.hpp"
#include "fanolink/expectations.hpp"
#include "fanolink/link.hpp"
#include "fanolink/rational.hpp"
#include "fanolink/singular.hpp"
#include "fanolink/toric.hpp"

namespace fanolink {

/// A tabulated value that differs from the computed one, declared in the expectations.
struct Deviation {
    std::string where;
    std::string cell;
    std::string printed;
    std::string derived;

    friend bool operator==(const Deviation&, const Deviation&) = default;
};

/*
 * Relation printed = M * computed between a displayed 2-row matrix and a
 * computed model, fitted on the pair of columns that explains the most
 * columns.
 */
struct FrameComparison {
    std::array<Rational, 4> relation{Rational(1), Rational(0), Rational(0), Rational(1)};
    bool unimodular = true;
    bool identity = true;
    std::vector<std::string> mismatched;
    std::vector<std::string> missing;

    std::string relation_str() const
    {
        return "[[" + relation[0].str() + "," + relation[1].str() + "],[" + relation[2].str() + "," +
               relation[3].str() + "]]";
    }
};

inline FrameComparison compare_frames(const RankTwoModel& model, const std::vector<std::string>& labels,
                                      const std::vector<int>& row1, const std::vector<int>& row2)
{
    FrameComparison out;
    std::vector<BiDegree> computed;
    std::vector<BiDegree> printed;
    std::vector<std::string> names;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        const int i = model.index_of(labels[k]);
        if (i < 0) {
            out.missing.push_back(labels[k]);
            continue;
        }
        computed.push_back(model.columns[i].ray);
        printed.push_back({row1[k], row2[k]});
        names.push_back(labels[k]);
    }
    auto image = [](const std::array<Rational, 4>& m, const BiDegree& v) {
        return std::pair{m[0] * Rational(v.first) + m[1] * Rational(v.second),
                         m[2] * Rational(v.first) + m[3] * Rational(v.second)};
    };
    std::size_t best = 0;
    bool found = false;
    for (std::size_t i = 0; i < computed.size(); ++i) {
        for (std::size_t j = i + 1; j < computed.size(); ++j) {
            const std::int64_t dc = det(computed[i], computed[j]);
            if (dc == 0) {
                continue;
            }
            // M = P * C^{-1}, C = [c_i c_j] as columns.
            const Rational inv = Rational(1) / Rational(dc);
            const BiDegree ci = computed[i];
            const BiDegree cj = computed[j];
            const BiDegree pi = printed[i];
            const BiDegree pj = printed[j];
            std::array<Rational, 4> m{
                inv * Rational(pi.first * cj.second - pj.first * ci.second),
                inv * Rational(-pi.first * cj.first + pj.first * ci.first),
                inv * Rational(pi.second * cj.second - pj.second * ci.second),
                inv * Rational(-pi.second * cj.first + pj.second * ci.first),
            };
            std::size_t agree = 0;
            for (std::size_t k = 0; k < computed.size(); ++k) {
                auto [x, y] = image(m, computed[k]);
                agree += (x == Rational(printed[k].first) && y == Rational(printed[k].second)) ? 1 : 0;
            }
            if (!found || agree > best) {
                best = agree;
                out.relation = m;
                found = true;
            }
        }
    }
    for (std::size_t k = 0; k < computed.size(); ++k) {
        auto [x, y] = image(out.relation, computed[k]);
        if (!(x == Rational(printed[k].first) && y == Rational(printed[k].second))) {
            out.mismatched.push_back(names[k]);
        }
    }
    const auto& m = out.relation;
    const Rational d = m[0] * m[3] - m[1] * m[2];
    out.unimodular = m[0].is_integer() && m[1].is_integer() && m[2].is_integer() && m[3].is_integer() &&
                     (d == Rational(1) || d == Rational(-1));
    out.identity = m[0] == Rational(1) && m[1] == Rational(0) && m[2] == Rational(0) && m[3] == Rational(1);
    return out;
}

/// "-3_u,0_y2,...,6_y(15),...": second row in order; the unprojection variable also shows its first row.
inline std::string blowup_sequence(const RankTwoModel& model)
{
    std::string s;
    for (auto& c : model.columns) {
        s += (s.empty() ? "" : ",") + std::to_string(c.ray.second) + "_" + c.label;
        if (c.label == "y") {
            s += "(" + std::to_string(c.ray.first) + ")";
        }
    }
    return s;
}

inline StepShape step_shape(const WallStep& step)
{
    StepShape s;
    s.kind = std::string(to_string(step.restricted));
    if (step.restricted == RestrictedKind::Flip) {
        for (auto& [label, w] : step.restricted_weights) {
            s.weights.push_back(static_cast<int>(w));
        }
    }
    return s;
}

inline std::string shapes_str(const std::vector<StepShape>& steps)
{
    std::string s;
    for (auto& st : steps) {
        s += (s.empty() ? "" : "|") + st.str();
    }
    return s;
}

/// Printed residues match either the local residues or the normal form, in order or as a multiset.
inline bool type_matches(const PrintedType& printed, const QuotientSingularity& q)
{
    if (printed.r != q.r) {
        return false;
    }
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    for (const auto& cand : {q.local_weights, q.normal_residues}) {
        if (cand == printed.residues || sorted(cand) == sorted(printed.residues)) {
            return true;
        }
    }
    return false;
}

struct LinkRow {
    int family = 0;
    std::string site;
    std::string tangent;
    std::string type_printed;
    std::string type_computed;
    std::string target_expected;
    std::string target_computed;
    std::string label;
    std::string steps_expected;
    std::string steps_computed;
    bool distinguished = false;
    bool matched = false;

    friend bool operator==(const LinkRow&, const LinkRow&) = default;
};

struct ExclusionRow {
    int family = 0;
    std::string site;
    std::string tangent;
    std::string type_printed;
    std::string type_computed;
    std::string key_printed;
    std::string key_computed;
    std::string blowup_printed;
    std::string blowup_computed;
    std::string verdict_expected;
    std::string verdict_computed;
    std::string minus_k;
    std::string position;
    bool matched = false;

    friend bool operator==(const ExclusionRow&, const ExclusionRow&) = default;
};

struct VerificationReport {
    std::vector<LinkRow> links;
    std::vector<ExclusionRow> exclusions;
    std::vector<Deviation> deviations;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;

    std::size_t links_matched() const
    {
        return static_cast<std::size_t>(std::count_if(links.begin(), links.end(), [](auto& r) { return r.matched; }));
    }
    std::size_t exclusions_matched() const
    {
        return static_cast<std::size_t>(
            std::count_if(exclusions.begin(), exclusions.end(), [](auto& r) { return r.matched; }));
    }
    bool ok() const { return failures.empty(); }
};

namespace detail {

/// Records one compared cell; returns whether printed and computed agree.
inline bool check_cell(VerificationReport& rep, const std::string& where, const std::string& cell,
                       const std::set<std::string>& known, const std::string& printed, const std::string& computed,
                       bool matches)
{
    const bool declared = known.count(cell) > 0;
    if (!matches && declared) {
        rep.deviations.push_back({where, cell, printed, computed});
    } else if (!matches) {
        rep.failures.push_back(where + ": " + cell + " printed " + printed + ", computed " + computed);
    } else if (declared) {
        rep.failures.push_back(where + ": " + cell + " declared as a deviation but matches (" + computed + ")");
    }
    return matches;
}

inline std::string where_of(int family, const Site& site, int tangent)
{
    return std::to_string(family) + " " + site.label() + (tangent >= 0 ? "/" + variable_label(tangent) : "");
}

inline std::string join_ints(const std::vector<int>& v)
{
    std::string s;
    for (int x : v) {
        s += (s.empty() ? "" : ",") + std::to_string(x);
    }
    return s;
}

inline std::string join_labels(const std::vector<std::string>& v)
{
    std::string s;
    for (auto& x : v) {
        s += (s.empty() ? "" : ",") + x;
    }
    return s;
}

inline void verify_link(VerificationReport& rep, const FamilyRecord& rec, const ExpectedLink& e)
{
    const std::string where = where_of(rec.id, e.site, e.tangent);
    LinkRow row;
    row.family = rec.id;
    row.site = e.site.label();
    row.tangent = variable_label(e.tangent);
    row.type_printed = e.type;
    row.label = e.label;
    row.distinguished = e.distinguished;
    row.target_expected = FanoModel{e.ambient, e.degrees, e.label}.str();
    row.steps_expected = shapes_str(e.steps);
    try {
        const GameResult g = run_game(rec, e.site, e.tangent);
        const QuotientSingularity& q = g.trace.blowup.singularity;
        row.type_computed = q.str() + " = " + q.normal_str();
        check_cell(rep, where, "type", e.known, e.type, q.normal_str(), type_matches(parse_printed_type(e.type), q));

        std::vector<StepShape> shapes;
        for (auto& s : g.trace.steps) {
            shapes.push_back(step_shape(s));
        }
        row.steps_computed = shapes_str(shapes);
        check_cell(rep, where, "steps", e.known, row.steps_expected, row.steps_computed, shapes == e.steps);

        bool target_ok = false;
        if (g.outcome.kind == LinkKind::ElementaryLink && g.outcome.target) {
            row.target_computed = g.outcome.target->str();
            target_ok = g.outcome.target->ambient == e.ambient && g.outcome.target->degrees == e.degrees;
        } else {
            row.target_computed = std::string(to_string(g.outcome.kind));
        }
        row.matched = check_cell(rep, where, "target", e.known, row.target_expected, row.target_computed, target_ok);
    } catch (const Error& err) {
        rep.failures.push_back(where + ": " + err.what());
    }
    rep.links.push_back(std::move(row));
}

inline void verify_exclusion(VerificationReport& rep, const FamilyRecord& rec, const ExpectedExclusion& e)
{
    const std::string where = where_of(rec.id, e.site, e.tangent);
    ExclusionRow row;
    row.family = rec.id;
    row.site = e.site.label();
    row.tangent = variable_label(e.tangent);
    row.type_printed = e.type;
    row.key_printed = e.key;
    row.blowup_printed = e.blowup;
    row.verdict_expected = e.verdict == "bad" ? "bad link" : "no link";
    try {
        const GameResult g = run_game(rec, e.site, e.tangent);
        const QuotientSingularity& q = g.trace.blowup.singularity;
        row.type_computed = q.str();
        check_cell(rep, where, "type", e.known, e.type, q.str() + " = " + q.normal_str(),
                   type_matches(parse_printed_type(e.type), q));

        row.key_computed = g.trace.blowup.key.str("x");
        bool key_ok = false;
        std::string key_note = row.key_computed;
        for (auto& alt : split(e.key, '|')) {
            for (auto& text : split(alt, '+')) {
                const Monomial m = parse_monomial(text, static_cast<int>(rec.weights.size()));
                const int deg = m.weighted_degree(rec.weights);
                if (deg != rec.degree) {
                    key_note += "; " + text + " has degree " + std::to_string(deg) + ", not " +
                                std::to_string(rec.degree);
                }
                key_ok = key_ok || m == g.trace.blowup.key;
            }
        }
        if (key_note != row.key_computed) {
            key_ok = false;
        }
        check_cell(rep, where, "key", e.known, e.key, key_note, key_ok);

        const RankTwoModel& seq_model = g.trace.unprojected ? g.trace.unprojected_raw : g.trace.raw;
        row.blowup_computed = blowup_sequence(seq_model);
        check_cell(rep, where, "blowup", e.known, e.blowup, row.blowup_computed, row.blowup_computed == e.blowup);

        row.minus_k = g.outcome.minus_k.str();
        row.position = std::string(to_string(g.outcome.position));
        row.verdict_computed = std::string(to_string(g.outcome.kind));
        row.matched = check_cell(rep, where, "verdict", e.known, row.verdict_expected, row.verdict_computed,
                                 row.verdict_expected == row.verdict_computed);
    } catch (const Error& err) {
        rep.failures.push_back(where + ": " + err.what());
    }
    rep.exclusions.push_back(std::move(row));
}

inline void verify_matrix(VerificationReport& rep, const FamilyRecord& rec, const ExpectedMatrix& e)
{
    const std::string where = where_of(rec.id, e.site, e.tangent) + " " + e.stage;
    try {
        const GameResult g = run_game(rec, e.site, e.tangent);
        RankTwoModel model;
        bool well_formed_stage = false;
        if (e.stage == "raw") {
            model = g.trace.raw;
        } else if (e.stage == "wellformed") {
            model = well_form_model(g.trace.raw);
            well_formed_stage = true;
        } else if (e.stage == "unprojected-raw") {
            if (!g.trace.unprojected) {
                rep.failures.push_back(where + ": game does not unproject");
                return;
            }
            model = g.trace.unprojected_raw;
        } else if (e.stage == "unprojected-wellformed") {
            if (!g.trace.unprojected) {
                rep.failures.push_back(where + ": game does not unproject");
                return;
            }
            model = g.trace.well_formed;
            well_formed_stage = true;
        } else {
            throw Error(ErrorKind::DataIntegrity, "unknown matrix stage " + e.stage);
        }
        if (!model.is_bihomogeneous()) {
            rep.failures.push_back(where + ": equations not bihomogeneous");
        }

        if (!well_formed_stage) {
            for (std::size_t k = 0; k < e.labels.size(); ++k) {
                const int i = model.index_of(e.labels[k]);
                const BiDegree printed{e.row1[k], e.row2[k]};
                const std::string computed = i < 0 ? "missing" : model.columns[i].ray.str();
                check_cell(rep, where, "column:" + e.labels[k], e.known, printed.str(), computed,
                           i >= 0 && model.columns[i].ray == printed);
            }
            return;
        }

        check_cell(rep, where, "order", e.known, join_labels(e.labels), join_labels(model.labels()),
                   model.labels() == e.labels);

        const FrameComparison fc = compare_frames(model, e.labels, e.row1, e.row2);
        std::string mine;
        for (auto& c : model.columns) {
            mine += (mine.empty() ? "" : " ") + c.label + c.ray.str();
        }
        check_cell(rep, where, "frame", e.known, "rows " + join_ints(e.row1) + " / " + join_ints(e.row2),
                   "rows = M * computed with M = " + fc.relation_str() + " (det != 1); computed " + mine, fc.unimodular);
        if (!fc.identity && fc.unimodular) {
            rep.notes.push_back(where + ": printed matrix is in the frame M = " + fc.relation_str() +
                                " of the computed one");
        }
        for (std::size_t k = 0; k < e.labels.size(); ++k) {
            const std::string& l = e.labels[k];
            const bool bad = std::find(fc.mismatched.begin(), fc.mismatched.end(), l) != fc.mismatched.end() ||
                             std::find(fc.missing.begin(), fc.missing.end(), l) != fc.missing.end();
            std::string computed = "missing";
            if (const int i = model.index_of(l); i >= 0) {
                const auto& v = model.columns[i].ray;
                const auto& m = fc.relation;
                computed = "(" + (m[0] * Rational(v.first) + m[1] * Rational(v.second)).str() + "," +
                           (m[2] * Rational(v.first) + m[3] * Rational(v.second)).str() + ")";
            }
            check_cell(rep, where, "column:" + l, e.known, BiDegree{e.row1[k], e.row2[k]}.str(), computed, !bad);
        }
    } catch (const Error& err) {
        rep.failures.push_back(where + ": " + err.what());
    }
}

inline void verify_kawamata(VerificationReport& rep, const ExpectedKawamata& e)
{
    const std::string where = std::to_string(e.family) + " 1/" + std::to_string(e.r) + "(" + join_ints(e.weights) + ")";
    try {
        const QuotientSingularity q = normalize_terminal(e.r, e.weights);
        check_cell(rep, where, "form", e.known, "(" + join_ints(e.printed) + ")",
                   "(" + join_ints(q.normal_residues) + ")", q.normal_residues == e.printed);
    } catch (const Error& err) {
        rep.failures.push_back(where + ": " + err.what());
    }
}

} // namespace detail

/*
 * Replays the tabulated links, exclusions, displayed matrices and normal
 * forms attached to the records, and cross-checks the non-solidity split
 * and the smooth-point arithmetic.
 */
inline VerificationReport verify_tables(const std::vector<FamilyRecord>& records)
{
    VerificationReport rep;
    for (auto& rec : records) {
        for (auto& e : rec.expected.normal_forms) {
            detail::verify_kawamata(rep, e);
        }
        for (auto& e : rec.expected.matrices) {
            detail::verify_matrix(rep, rec, e);
        }
        for (auto& e : rec.expected.links) {
            detail::verify_link(rep, rec, e);
        }
        for (auto& e : rec.expected.exclusions) {
            detail::verify_exclusion(rep, rec, e);
        }
    }

    const SolidityPartition part = solidity_summary(records);
    const std::vector<int> solid_candidates{100, 101, 102, 103, 110};
    if (part.without_witness != solid_candidates) {
        rep.failures.push_back("families without a fibration witness differ from {100,101,102,103,110}");
    }
    for (int id : part.without_witness) {
        const FamilyRecord& rec = find_family(records, id);
        if (!curve_test(rec).certified) {
            rep.failures.push_back(std::to_string(id) + ": curve test not certified");
        }
        const ExpectedLink* link = rec.expected.distinguished();
        if (link == nullptr) {
            rep.failures.push_back(std::to_string(id) + ": no distinguished link recorded");
            continue;
        }
        auto it = std::find_if(rep.links.begin(), rep.links.end(), [&](const LinkRow& r) {
            return r.family == id && r.distinguished;
        });
        if (it == rep.links.end() || !it->matched) {
            rep.failures.push_back(std::to_string(id) + ": distinguished point does not give the recorded link");
        }
        const ExclusionReport sp = smooth_point_test(rec);
        if (!sp.certified) {
            rep.deviations.push_back({std::to_string(id) + " smooth point (h=" + std::to_string(sp.h_degree) + ")",
                                      "test value", "<= 4", sp.test_value.str()});
        }
    }
    return rep;
}

inline VerificationReport verify_tables() { return verify_tables(load_catalog()); }

/// Throws VerificationFailure listing every failed cell.
inline void require_verified(const VerificationReport& rep)
{
    if (rep.ok()) {
        return;
    }
    std::string msg = std::to_string(rep.failures.size()) + " mismatched cell(s)";
    for (auto& f : rep.failures) {
        msg += "\n  " + f;
    }
    throw Error(ErrorKind::VerificationFailure, msg);
}

} // namespace fanolink
