#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fanolink/catalog.hpp"
#include "fanolink/exclusion.hpp"
#include "fanolink/link.hpp"
#include "fanolink/singular.hpp"
#include "fanolink/toric.hpp"
#include "fanolink/verify.hpp"

namespace fanolink {

using nlohmann::json;

// ---------------------------------------------------------------- report types

struct CatalogRow {
    int id = 0;
    WeightVector weights;
    int degree = 0;
    int index = 0;
    bool rational = false;
    Rational cube;
    bool fibration_witness = false;

    friend bool operator==(const CatalogRow&, const CatalogRow&) = default;
};

struct CatalogReport {
    std::vector<CatalogRow> rows;

    friend bool operator==(const CatalogReport&, const CatalogReport&) = default;
};

struct LocusRow {
    std::string site;
    int count = 1;
    std::string type;
    std::string normal_form;
    std::vector<std::string> keys;

    friend bool operator==(const LocusRow&, const LocusRow&) = default;
};

struct ExclusionSummary {
    int family = 0;
    ExclusionReport smooth_point;
    ExclusionReport curve;
    std::optional<FibrationWitness> witness;

    friend bool operator==(const ExclusionSummary&, const ExclusionSummary&) = default;
};

struct AnalysisReport {
    CatalogRow invariants;
    std::vector<LocusRow> locus;
    std::vector<std::string> notes;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct GameReport {
    int family = 0;
    std::string site;
    std::string tangent;
    std::string singularity;
    std::string key;
    std::optional<std::string> unprojection;
    std::vector<std::string> labels;
    std::vector<std::int64_t> row1;
    std::vector<std::int64_t> row2;
    std::vector<WallStep> trace;
    LinkOutcome outcome;

    friend bool operator==(const GameReport&, const GameReport&) = default;
};

inline CatalogRow catalog_row(const FamilyRecord& r)
{
    return {r.id, r.weights, r.degree, r.index, r.rational, anticanonical_cube(r), fibration_witness(r).has_value()};
}

inline CatalogReport catalog_report(const std::vector<FamilyRecord>& records)
{
    CatalogReport rep;
    for (auto& r : records) {
        rep.rows.push_back(catalog_row(r));
    }
    return rep;
}

inline AnalysisReport analysis_report(const FamilyRecord& record)
{
    AnalysisReport rep;
    rep.invariants = catalog_row(record);
    try {
        for (auto& e : singular_locus(record)) {
            LocusRow row;
            row.site = e.site.label();
            row.count = e.count;
            row.type = e.singularity.str();
            row.normal_form = e.singularity.normal_str();
            for (auto& c : e.tangent_candidates) {
                row.keys.push_back(c.key.str("x"));
            }
            if (e.center < 0) {
                rep.notes.push_back(row.site + ": no coordinate change moves these points to a vertex");
            }
            rep.locus.push_back(std::move(row));
        }
    } catch (const Error& err) {
        rep.notes.push_back(err.what());
    }
    if (rep.locus.empty() && rep.notes.empty()) {
        rep.notes.push_back("quasi-smooth with no quotient singularities on coordinate strata");
    }
    return rep;
}

inline ExclusionSummary exclusion_summary(const FamilyRecord& record, std::optional<int> h_degree = std::nullopt)
{
    return {record.id, h_degree ? smooth_point_test(record, *h_degree) : smooth_point_test(record),
            curve_test(record), fibration_witness(record)};
}

inline GameReport game_report(const FamilyRecord& record, const Site& site, const GameResult& g)
{
    GameReport rep;
    rep.family = record.id;
    rep.site = site.label();
    rep.tangent = variable_label(g.trace.blowup.tangent);
    rep.singularity = g.trace.blowup.singularity.str() + " = " + g.trace.blowup.singularity.normal_str();
    rep.key = g.trace.blowup.key.str("x");
    if (g.trace.unprojection) {
        rep.unprojection = g.trace.unprojection->display();
    }
    for (auto& c : g.trace.well_formed.columns) {
        rep.labels.push_back(c.label);
        rep.row1.push_back(c.ray.first);
        rep.row2.push_back(c.ray.second);
    }
    rep.trace = g.trace.steps;
    rep.outcome = g.outcome;
    return rep;
}

// ---------------------------------------------------------------- json

inline void to_json(json& j, const Rational& q) { j = json{{"num", q.num()}, {"den", q.den()}}; }
inline void from_json(const json& j, Rational& q) { q = Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>()); }

inline void to_json(json& j, const WeightVector& w) { j = w.entries; }
inline void from_json(const json& j, WeightVector& w) { w = WeightVector(j.get<std::vector<int>>()); }

inline void to_json(json& j, const BiDegree& b) { j = json::array({b.first, b.second}); }
inline void from_json(const json& j, BiDegree& b) { b = {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()}; }

NLOHMANN_JSON_SERIALIZE_ENUM(AmbientKind, {{AmbientKind::Flip, "flip"},
                                           {AmbientKind::Contraction, "contraction"},
                                           {AmbientKind::Fibration, "fibration"}})
NLOHMANN_JSON_SERIALIZE_ENUM(RestrictedKind, {{RestrictedKind::Iso, "iso"},
                                              {RestrictedKind::Flop, "flop"},
                                              {RestrictedKind::Flip, "flip"},
                                              {RestrictedKind::Divisorial, "divisorial"},
                                              {RestrictedKind::Indeterminate, "indeterminate"}})
NLOHMANN_JSON_SERIALIZE_ENUM(ConePosition, {{ConePosition::Interior, "interior"},
                                            {ConePosition::Boundary, "boundary"},
                                            {ConePosition::Outside, "outside"}})
NLOHMANN_JSON_SERIALIZE_ENUM(LinkKind, {{LinkKind::ElementaryLink, "elementary link"},
                                        {LinkKind::BadLink, "bad link"},
                                        {LinkKind::NoLink, "no link"}})
NLOHMANN_JSON_SERIALIZE_ENUM(ExclusionKind, {{ExclusionKind::SmoothPoint, "smooth-point"},
                                             {ExclusionKind::Curve, "curve"}})
NLOHMANN_JSON_SERIALIZE_ENUM(FibreKind, {{FibreKind::Hypersurface, "hypersurface"},
                                         {FibreKind::CompleteIntersection, "complete intersection"}})

namespace detail {

inline json labelled(const LabelledWeights& lw)
{
    json a = json::array();
    for (auto& [label, w] : lw) {
        a.push_back(json::array({label, w}));
    }
    return a;
}

inline LabelledWeights unlabelled(const json& j)
{
    LabelledWeights lw;
    for (auto& e : j) {
        lw.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::int64_t>());
    }
    return lw;
}

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v)
{
    j[key] = v ? json(*v) : json(nullptr);
}

template <class T>
void get_optional(const json& j, const char* key, std::optional<T>& v)
{
    if (j.contains(key) && !j.at(key).is_null()) {
        v = j.at(key).get<T>();
    } else {
        v.reset();
    }
}

} // namespace detail

inline void to_json(json& j, const DivisorialTarget& t)
{
    j = json{{"contracted", t.contracted}, {"variables", t.variables}, {"weights", t.weights},
             {"degrees", t.degrees},       {"ambient", t.ambient},     {"gamma", t.gamma}};
}
inline void from_json(const json& j, DivisorialTarget& t)
{
    j.at("contracted").get_to(t.contracted);
    j.at("variables").get_to(t.variables);
    j.at("weights").get_to(t.weights);
    j.at("degrees").get_to(t.degrees);
    j.at("ambient").get_to(t.ambient);
    j.at("gamma").get_to(t.gamma);
}

inline void to_json(json& j, const WallStep& s)
{
    j = json{{"wall", s.wall},
             {"ambient", s.ambient},
             {"ambient_weights", detail::labelled(s.ambient_weights)},
             {"contracted", s.contracted},
             {"restricted", s.restricted},
             {"restricted_weights", detail::labelled(s.restricted_weights)},
             {"eliminated", s.eliminated},
             {"witnesses", s.witnesses}};
    detail::put_optional(j, "target", s.target);
}
inline void from_json(const json& j, WallStep& s)
{
    j.at("wall").get_to(s.wall);
    j.at("ambient").get_to(s.ambient);
    s.ambient_weights = detail::unlabelled(j.at("ambient_weights"));
    j.at("contracted").get_to(s.contracted);
    j.at("restricted").get_to(s.restricted);
    s.restricted_weights = detail::unlabelled(j.at("restricted_weights"));
    j.at("eliminated").get_to(s.eliminated);
    j.at("witnesses").get_to(s.witnesses);
    detail::get_optional(j, "target", s.target);
}

inline void to_json(json& j, const FanoModel& m)
{
    j = json{{"ambient", m.ambient}, {"degrees", m.degrees}, {"singularity", m.singularity_label}};
}
inline void from_json(const json& j, FanoModel& m)
{
    j.at("ambient").get_to(m.ambient);
    j.at("degrees").get_to(m.degrees);
    j.at("singularity").get_to(m.singularity_label);
}

inline void to_json(json& j, const LinkOutcome& o)
{
    j = json{{"kind", o.kind}, {"position", o.position}, {"minus_k", o.minus_k}, {"warnings", o.warnings}};
    detail::put_optional(j, "target", o.target);
}
inline void from_json(const json& j, LinkOutcome& o)
{
    j.at("kind").get_to(o.kind);
    j.at("position").get_to(o.position);
    j.at("minus_k").get_to(o.minus_k);
    j.at("warnings").get_to(o.warnings);
    detail::get_optional(j, "target", o.target);
}

inline void to_json(json& j, const GameReport& g)
{
    j = json{{"family", g.family}, {"site", g.site},     {"tangent", g.tangent}, {"singularity", g.singularity},
             {"key", g.key},       {"labels", g.labels}, {"row1", g.row1},       {"row2", g.row2},
             {"trace", g.trace},   {"outcome", g.outcome}};
    detail::put_optional(j, "unprojection", g.unprojection);
}
inline void from_json(const json& j, GameReport& g)
{
    j.at("family").get_to(g.family);
    j.at("site").get_to(g.site);
    j.at("tangent").get_to(g.tangent);
    j.at("singularity").get_to(g.singularity);
    j.at("key").get_to(g.key);
    j.at("labels").get_to(g.labels);
    j.at("row1").get_to(g.row1);
    j.at("row2").get_to(g.row2);
    j.at("trace").get_to(g.trace);
    j.at("outcome").get_to(g.outcome);
    detail::get_optional(j, "unprojection", g.unprojection);
}

inline void to_json(json& j, const ExclusionReport& r)
{
    j = json{{"kind", r.kind},           {"family", r.family},       {"h_degree", r.h_degree},
             {"test_value", r.test_value}, {"threshold", r.threshold}, {"certified", r.certified},
             {"notes", r.notes}};
}
inline void from_json(const json& j, ExclusionReport& r)
{
    j.at("kind").get_to(r.kind);
    j.at("family").get_to(r.family);
    j.at("h_degree").get_to(r.h_degree);
    j.at("test_value").get_to(r.test_value);
    j.at("threshold").get_to(r.threshold);
    j.at("certified").get_to(r.certified);
    j.at("notes").get_to(r.notes);
}

inline void to_json(json& j, const FibrationWitness& w)
{
    j = json{{"target", json::array({w.a0, w.a1})},
             {"index_check", w.index_check},
             {"fibre", w.fibre},
             {"fibre_ambient", w.fibre_ambient},
             {"fibre_degrees", w.fibre_degrees},
             {"fibre_canonical_degree", w.fibre_canonical_degree}};
}
inline void from_json(const json& j, FibrationWitness& w)
{
    w.a0 = j.at("target").at(0).get<int>();
    w.a1 = j.at("target").at(1).get<int>();
    j.at("index_check").get_to(w.index_check);
    j.at("fibre").get_to(w.fibre);
    j.at("fibre_ambient").get_to(w.fibre_ambient);
    j.at("fibre_degrees").get_to(w.fibre_degrees);
    j.at("fibre_canonical_degree").get_to(w.fibre_canonical_degree);
}

inline void to_json(json& j, const ExclusionSummary& s)
{
    j = json{{"family", s.family}, {"smooth_point", s.smooth_point}, {"curve", s.curve}};
    detail::put_optional(j, "fibration_witness", s.witness);
}
inline void from_json(const json& j, ExclusionSummary& s)
{
    j.at("family").get_to(s.family);
    j.at("smooth_point").get_to(s.smooth_point);
    j.at("curve").get_to(s.curve);
    detail::get_optional(j, "fibration_witness", s.witness);
}

inline void to_json(json& j, const CatalogRow& r)
{
    j = json{{"family", r.id},   {"weights", r.weights},   {"degree", r.degree},
             {"index", r.index}, {"rational", r.rational}, {"anticanonical_cube", r.cube},
             {"fibration_witness", r.fibration_witness}};
}
inline void from_json(const json& j, CatalogRow& r)
{
    j.at("family").get_to(r.id);
    j.at("weights").get_to(r.weights);
    j.at("degree").get_to(r.degree);
    j.at("index").get_to(r.index);
    j.at("rational").get_to(r.rational);
    j.at("anticanonical_cube").get_to(r.cube);
    j.at("fibration_witness").get_to(r.fibration_witness);
}

inline void to_json(json& j, const CatalogReport& r) { j = json{{"families", r.rows}}; }
inline void from_json(const json& j, CatalogReport& r) { j.at("families").get_to(r.rows); }

inline void to_json(json& j, const LocusRow& r)
{
    j = json{{"site", r.site}, {"count", r.count}, {"type", r.type}, {"normal_form", r.normal_form}, {"keys", r.keys}};
}
inline void from_json(const json& j, LocusRow& r)
{
    j.at("site").get_to(r.site);
    j.at("count").get_to(r.count);
    j.at("type").get_to(r.type);
    j.at("normal_form").get_to(r.normal_form);
    j.at("keys").get_to(r.keys);
}

inline void to_json(json& j, const AnalysisReport& r)
{
    j = json{{"family", r.invariants.id}, {"invariants", r.invariants}, {"singular_locus", r.locus}, {"notes", r.notes}};
}
inline void from_json(const json& j, AnalysisReport& r)
{
    j.at("invariants").get_to(r.invariants);
    j.at("singular_locus").get_to(r.locus);
    j.at("notes").get_to(r.notes);
}

inline void to_json(json& j, const Deviation& d)
{
    j = json{{"where", d.where}, {"cell", d.cell}, {"printed", d.printed}, {"derived", d.derived}};
}
inline void from_json(const json& j, Deviation& d)
{
    j.at("where").get_to(d.where);
    j.at("cell").get_to(d.cell);
    j.at("printed").get_to(d.printed);
    j.at("derived").get_to(d.derived);
}

inline void to_json(json& j, const LinkRow& r)
{
    j = json{{"family", r.family},
             {"site", r.site},
             {"tangent", r.tangent},
             {"type_printed", r.type_printed},
             {"type_computed", r.type_computed},
             {"target_expected", r.target_expected},
             {"target_computed", r.target_computed},
             {"label", r.label},
             {"steps_expected", r.steps_expected},
             {"steps_computed", r.steps_computed},
             {"distinguished", r.distinguished},
             {"matched", r.matched}};
}
inline void from_json(const json& j, LinkRow& r)
{
    j.at("family").get_to(r.family);
    j.at("site").get_to(r.site);
    j.at("tangent").get_to(r.tangent);
    j.at("type_printed").get_to(r.type_printed);
    j.at("type_computed").get_to(r.type_computed);
    j.at("target_expected").get_to(r.target_expected);
    j.at("target_computed").get_to(r.target_computed);
    j.at("label").get_to(r.label);
    j.at("steps_expected").get_to(r.steps_expected);
    j.at("steps_computed").get_to(r.steps_computed);
    j.at("distinguished").get_to(r.distinguished);
    j.at("matched").get_to(r.matched);
}

inline void to_json(json& j, const ExclusionRow& r)
{
    j = json{{"family", r.family},
             {"site", r.site},
             {"tangent", r.tangent},
             {"type_printed", r.type_printed},
             {"type_computed", r.type_computed},
             {"key_printed", r.key_printed},
             {"key_computed", r.key_computed},
             {"blowup_printed", r.blowup_printed},
             {"blowup_computed", r.blowup_computed},
             {"verdict_expected", r.verdict_expected},
             {"verdict_computed", r.verdict_computed},
             {"minus_k", r.minus_k},
             {"position", r.position},
             {"matched", r.matched}};
}
inline void from_json(const json& j, ExclusionRow& r)
{
    j.at("family").get_to(r.family);
    j.at("site").get_to(r.site);
    j.at("tangent").get_to(r.tangent);
    j.at("type_printed").get_to(r.type_printed);
    j.at("type_computed").get_to(r.type_computed);
    j.at("key_printed").get_to(r.key_printed);
    j.at("key_computed").get_to(r.key_computed);
    j.at("blowup_printed").get_to(r.blowup_printed);
    j.at("blowup_computed").get_to(r.blowup_computed);
    j.at("verdict_expected").get_to(r.verdict_expected);
    j.at("verdict_computed").get_to(r.verdict_computed);
    j.at("minus_k").get_to(r.minus_k);
    j.at("position").get_to(r.position);
    j.at("matched").get_to(r.matched);
}

inline void to_json(json& j, const VerificationReport& r)
{
    j = json{{"links", r.links},       {"exclusions", r.exclusions}, {"deviations", r.deviations},
             {"failures", r.failures}, {"notes", r.notes},           {"ok", r.ok()}};
}
inline void from_json(const json& j, VerificationReport& r)
{
    j.at("links").get_to(r.links);
    j.at("exclusions").get_to(r.exclusions);
    j.at("deviations").get_to(r.deviations);
    j.at("failures").get_to(r.failures);
    j.at("notes").get_to(r.notes);
}

// ---------------------------------------------------------------- markdown

namespace md {

inline std::string weights_list(const LabelledWeights& lw)
{
    std::string s = "(";
    for (std::size_t i = 0; i < lw.size(); ++i) {
        s += (i ? "," : "") + std::to_string(lw[i].second);
    }
    return s + ")";
}

inline std::string joined(const std::vector<std::string>& v, const std::string& sep = ", ")
{
    std::string s;
    for (auto& x : v) {
        s += (s.empty() ? "" : sep) + x;
    }
    return s;
}

} // namespace md

inline std::string to_markdown(const CatalogReport& rep)
{
    std::ostringstream out;
    out << "| No. | X_d ⊂ P(a0,...,a4) | index | (-K)^3 | rational | fibration witness |\n";
    out << "|---|---|---|---|---|---|\n";
    for (auto& r : rep.rows) {
        out << "| " << r.id << " | X_" << r.degree << " ⊂ P" << r.weights.str() << " | " << r.index << " | "
            << r.cube.str() << " | " << (r.rational ? "Yes" : "No") << " | " << (r.fibration_witness ? "yes" : "no")
            << " |\n";
    }
    return out.str();
}

inline std::string to_markdown(const AnalysisReport& rep)
{
    std::ostringstream out;
    const CatalogRow& r = rep.invariants;
    out << "## Family " << r.id << ": X_" << r.degree << " ⊂ P" << r.weights.str() << "\n\n";
    out << "- index: " << r.index << "\n- (-K)^3: " << r.cube.str() << "\n- rational: " << (r.rational ? "Yes" : "No")
        << "\n\n";
    if (rep.locus.empty()) {
        out << "Singular locus: empty.\n";
    } else {
        out << "| site | points | type | normal form | key monomials |\n|---|---|---|---|---|\n";
        for (auto& l : rep.locus) {
            out << "| " << l.site << " | " << l.count << " | " << l.type << " | " << l.normal_form << " | "
                << (l.keys.empty() ? "-" : md::joined(l.keys)) << " |\n";
        }
    }
    for (auto& n : rep.notes) {
        out << "\n- " << n;
    }
    out << "\n";
    return out.str();
}

inline std::string to_markdown(const GameReport& rep)
{
    std::ostringstream out;
    out << "## Family " << rep.family << ", point " << rep.site << " " << rep.singularity << ", tangent "
        << rep.tangent << " (key " << rep.key << ")\n\n";
    if (rep.unprojection) {
        out << "Unprojection variable: " << *rep.unprojection << "\n\n";
    }
    out << "|";
    for (auto& l : rep.labels) {
        out << " " << l << " |";
    }
    out << "\n|";
    for (std::size_t i = 0; i < rep.labels.size(); ++i) {
        out << "---|";
    }
    out << "\n|";
    for (auto x : rep.row1) {
        out << " " << x << " |";
    }
    out << "\n|";
    for (auto x : rep.row2) {
        out << " " << x << " |";
    }
    out << "\n\n| wall | ambient | local weights | restricted | witnesses |\n|---|---|---|---|---|\n";
    for (auto& s : rep.trace) {
        std::string restricted(to_string(s.restricted));
        if (s.restricted == RestrictedKind::Flip || s.restricted == RestrictedKind::Flop) {
            restricted += md::weights_list(s.restricted_weights);
        }
        if (s.target) {
            restricted += " to " + FanoModel{s.target->ambient, s.target->degrees, {}}.str();
        }
        out << "| " << s.wall_label() << " | " << to_string(s.ambient)
            << (s.contracted.empty() ? "" : " of {" + s.contracted + "=0}") << " | "
            << md::weights_list(s.ambient_weights) << " | " << restricted << " | " << md::joined(s.witnesses)
            << " |\n";
    }
    out << "\n-K_Y = " << rep.outcome.minus_k.str() << " (" << to_string(rep.outcome.position) << "): "
        << to_string(rep.outcome.kind);
    if (rep.outcome.target) {
        out << " to " << rep.outcome.target->str();
        if (!rep.outcome.target->singularity_label.empty()) {
            out << " with a " << rep.outcome.target->singularity_label << " point";
        }
    }
    out << "\n";
    for (auto& w : rep.outcome.warnings) {
        out << "\n- warning: " << w;
    }
    if (!rep.outcome.warnings.empty()) {
        out << "\n";
    }
    return out.str();
}

inline std::string to_markdown(const ExclusionSummary& s)
{
    std::ostringstream out;
    out << "## Family " << s.family << "\n\n| test | value | threshold | certified |\n|---|---|---|---|\n";
    out << "| smooth point (h=" << s.smooth_point.h_degree << ") | " << s.smooth_point.test_value.str() << " | "
        << s.smooth_point.threshold.str() << " | " << (s.smooth_point.certified ? "yes" : "no") << " |\n";
    out << "| curve | " << s.curve.test_value.str() << " | " << s.curve.threshold.str() << " | "
        << (s.curve.certified ? "yes" : "no") << " |\n\n";
    if (s.witness) {
        out << "Fibration witness: pencil of P(" << s.witness->a0 << "," << s.witness->a1 << "), fibre "
            << s.witness->fibre_str() << ", K_S degree " << s.witness->fibre_canonical_degree << "\n";
    } else {
        out << "Fibration witness: none (a0*a1 >= index)\n";
    }
    for (auto& n : s.smooth_point.notes) {
        out << "\n- " << n;
    }
    out << "\n";
    return out.str();
}

inline std::string to_markdown(const VerificationReport& rep)
{
    std::ostringstream out;
    out << "## Elementary links (" << rep.links_matched() << "/" << rep.links.size() << " matched)\n\n";
    out << "| No. | point | singularity | new model | computed | steps |\n|---|---|---|---|---|---|\n";
    for (auto& r : rep.links) {
        out << "| " << r.family << " | " << r.site << "/" << r.tangent << " | " << r.type_printed << " | "
            << r.label << " ∈ " << r.target_expected << " | " << r.target_computed << " | " << r.steps_computed
            << " |\n";
    }
    out << "\n## Bad links and no links (" << rep.exclusions_matched() << "/" << rep.exclusions.size()
        << " matched)\n\n";
    out << "| No. | point | singularity | key monomial | blow-up | -K_Y | verdict |\n|---|---|---|---|---|---|---|\n";
    for (auto& r : rep.exclusions) {
        out << "| " << r.family << " | " << r.site << "/" << r.tangent << " | " << r.type_computed << " | "
            << r.key_computed << " | " << r.blowup_computed << " | " << r.minus_k << " " << r.position << " | "
            << r.verdict_computed << " |\n";
    }
    out << "\n## Deviations (" << rep.deviations.size() << ")\n\n";
    for (auto& d : rep.deviations) {
        out << "- " << d.where << " [" << d.cell << "]: printed " << d.printed << "; derived " << d.derived << "\n";
    }
    if (!rep.notes.empty()) {
        out << "\n## Notes\n\n";
        for (auto& n : rep.notes) {
            out << "- " << n << "\n";
        }
    }
    out << "\n## Result\n\n";
    if (rep.ok()) {
        out << "verified\n";
    } else {
        for (auto& f : rep.failures) {
            out << "- FAILED " << f << "\n";
        }
    }
    return out.str();
}

} // namespace fanolink
