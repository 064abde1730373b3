#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fanolink/error.hpp"
#include "fanolink/weights.hpp"

namespace fanolink {

/// A tabulated quotient type such as "1/5(3,1,2)".
struct PrintedType {
    int r = 0;
    std::vector<int> residues;

    std::string str() const
    {
        std::string s = "1/" + std::to_string(r) + "(";
        for (std::size_t i = 0; i < residues.size(); ++i) {
            s += (i ? "," : "") + std::to_string(residues[i]);
        }
        return s + ")";
    }
};

inline PrintedType parse_printed_type(std::string_view text)
{
    const auto open = text.find('(');
    if (text.substr(0, 2) != "1/" || open == std::string_view::npos || text.back() != ')') {
        throw Error(ErrorKind::DataIntegrity, "bad quotient type '" + std::string(text) + "'");
    }
    PrintedType t;
    t.r = std::stoi(std::string(text.substr(2, open - 2)));
    t.residues = parse_int_list(text.substr(open + 1, text.size() - open - 2));
    return t;
}

/// One expected wall crossing, e.g. "flip(5,1,-3,-2)".
struct StepShape {
    std::string kind; // iso | flop | flip | divisorial
    std::vector<int> weights;

    std::string str() const
    {
        if (weights.empty()) {
            return kind;
        }
        std::string s = kind + "(";
        for (std::size_t i = 0; i < weights.size(); ++i) {
            s += (i ? "," : "") + std::to_string(weights[i]);
        }
        return s + ")";
    }

    friend bool operator==(const StepShape&, const StepShape&) = default;
};

struct ExpectedLink {
    int family = 0;
    Site site;
    int tangent = -1;
    std::string type;
    WeightVector ambient;
    std::vector<int> degrees;
    std::string label;
    std::vector<StepShape> steps;
    bool distinguished = false;
    std::set<std::string> known;
};

struct ExpectedExclusion {
    int family = 0;
    Site site;
    int tangent = -1;
    std::string type;
    std::string key;
    std::string blowup;
    std::string verdict; // bad | no
    std::set<std::string> known;
};

struct ExpectedMatrix {
    int family = 0;
    Site site;
    int tangent = -1;
    std::string stage;
    std::vector<std::string> labels;
    std::vector<int> row1;
    std::vector<int> row2;
    std::set<std::string> known;
};

struct ExpectedKawamata {
    int family = 0;
    int r = 0;
    std::vector<int> weights;
    std::vector<int> printed;
    std::set<std::string> known;
};

struct ExpectationSet {
    std::vector<ExpectedLink> links;
    std::vector<ExpectedExclusion> exclusions;
    std::vector<ExpectedMatrix> matrices;
    std::vector<ExpectedKawamata> normal_forms;
};

namespace detail {

inline std::vector<std::string> split(std::string_view text, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, sep)) {
        out.push_back(item);
    }
    return out;
}

inline StepShape parse_step(const std::string& text)
{
    StepShape s;
    const auto open = text.find('(');
    if (open == std::string::npos) {
        s.kind = text;
    } else {
        s.kind = text.substr(0, open);
        s.weights = parse_int_list(text.substr(open + 1, text.size() - open - 2));
    }
    if (s.kind != "iso" && s.kind != "flop" && s.kind != "flip" && s.kind != "divisorial") {
        throw Error(ErrorKind::DataIntegrity, "unknown step kind '" + text + "'");
    }
    return s;
}

class FieldMap {
public:
    FieldMap(const std::map<std::string, std::string>& fields, int line) : fields_(fields), line_(line) {}

    const std::string& get(const std::string& key) const
    {
        auto it = fields_.find(key);
        if (it == fields_.end()) {
            throw Error(ErrorKind::DataIntegrity,
                        "expectations line " + std::to_string(line_) + ": missing field '" + key + "'");
        }
        return it->second;
    }

    std::string get_or(const std::string& key, const std::string& fallback) const
    {
        auto it = fields_.find(key);
        return it == fields_.end() ? fallback : it->second;
    }

    std::set<std::string> known() const
    {
        std::set<std::string> out;
        for (auto& k : split(get_or("known", ""), ',')) {
            if (!k.empty()) {
                out.insert(k);
            }
        }
        return out;
    }

private:
    const std::map<std::string, std::string>& fields_;
    int line_;
};

} // namespace detail

/// Parses the expectation text format documented in data/expectations.txt.
inline ExpectationSet parse_expectations(std::string_view text)
{
    ExpectationSet set;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream tokens(line);
        std::string kind;
        if (!(tokens >> kind)) {
            continue;
        }
        std::map<std::string, std::string> fields;
        std::string tok;
        while (tokens >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) {
                throw Error(ErrorKind::DataIntegrity,
                            "expectations line " + std::to_string(lineno) + ": expected key=value, got '" + tok + "'");
            }
            fields[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
        const detail::FieldMap f(fields, lineno);
        try {
            if (kind == "link") {
                ExpectedLink e;
                e.family = std::stoi(f.get("family"));
                e.site = parse_site(f.get("site"));
                e.tangent = parse_variable(f.get("tangent"));
                e.type = f.get("type");
                e.ambient = WeightVector(parse_int_list(f.get("ambient")));
                e.degrees = parse_int_list(f.get("degrees"));
                e.label = f.get("label");
                for (auto& s : detail::split(f.get("steps"), '|')) {
                    e.steps.push_back(detail::parse_step(s));
                }
                e.distinguished = f.get_or("distinguished", "no") == "yes";
                e.known = f.known();
                set.links.push_back(std::move(e));
            } else if (kind == "exclusion") {
                ExpectedExclusion e;
                e.family = std::stoi(f.get("family"));
                e.site = parse_site(f.get("site"));
                e.tangent = parse_variable(f.get("tangent"));
                e.type = f.get("type");
                e.key = f.get("key");
                e.blowup = f.get("blowup");
                e.verdict = f.get("verdict");
                if (e.verdict != "bad" && e.verdict != "no") {
                    throw Error(ErrorKind::DataIntegrity, "verdict must be bad or no");
                }
                e.known = f.known();
                set.exclusions.push_back(std::move(e));
            } else if (kind == "matrix") {
                ExpectedMatrix e;
                e.family = std::stoi(f.get("family"));
                e.site = parse_site(f.get("site"));
                e.tangent = parse_variable(f.get("tangent"));
                e.stage = f.get("stage");
                e.labels = detail::split(f.get("labels"), ',');
                e.row1 = parse_int_list(f.get("row1"));
                e.row2 = parse_int_list(f.get("row2"));
                if (e.row1.size() != e.labels.size() || e.row2.size() != e.labels.size()) {
                    throw Error(ErrorKind::DataIntegrity, "matrix rows and labels differ in length");
                }
                e.known = f.known();
                set.matrices.push_back(std::move(e));
            } else if (kind == "kawamata") {
                ExpectedKawamata e;
                e.family = std::stoi(f.get("family"));
                e.r = std::stoi(f.get("r"));
                e.weights = parse_int_list(f.get("weights"));
                e.printed = parse_int_list(f.get("printed"));
                e.known = f.known();
                set.normal_forms.push_back(std::move(e));
            } else {
                throw Error(ErrorKind::DataIntegrity, "unknown record type '" + kind + "'");
            }
        } catch (const Error& err) {
            if (err.kind() == ErrorKind::DataIntegrity) {
                throw;
            }
            throw Error(ErrorKind::DataIntegrity,
                        "expectations line " + std::to_string(lineno) + ": " + err.what());
        } catch (const std::exception& err) {
            throw Error(ErrorKind::DataIntegrity,
                        "expectations line " + std::to_string(lineno) + ": " + err.what());
        }
    }
    return set;
}

} // namespace fanolink
