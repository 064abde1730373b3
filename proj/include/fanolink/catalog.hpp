#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fanolink/embedded_data.hpp"
#include "fanolink/error.hpp"
#include "fanolink/expectations.hpp"
#include "fanolink/rational.hpp"
#include "fanolink/weights.hpp"

namespace fanolink {

/// Expected results attached to one family.
struct FamilyExpectations {
    std::vector<ExpectedLink> links;
    std::vector<ExpectedExclusion> exclusions;
    std::vector<ExpectedMatrix> matrices;
    std::vector<ExpectedKawamata> normal_forms;

    /// The link from the highest-index quotient point, if the family has one.
    const ExpectedLink* distinguished() const
    {
        auto it = std::find_if(links.begin(), links.end(), [](const ExpectedLink& l) { return l.distinguished; });
        return it == links.end() ? nullptr : &*it;
    }
};

/// A family X_d in P(a0,...,a4). Divisor degrees elsewhere in the library are
/// multiples of the class A with -K_X = index * A.
struct FamilyRecord {
    int id = 0;
    WeightVector weights;
    int degree = 0;
    int index = 0;
    bool rational = false;
    FamilyExpectations expected;

    std::string name() const { return "X_" + std::to_string(degree) + " in P" + weights.str(); }
};

inline constexpr int first_family_id = 96;
inline constexpr int last_family_id = 130;
inline constexpr std::size_t family_count = 35;

/// Sum of the weights minus the degree; throws for a non-positive result.
inline int fano_index(const WeightVector& weights, int degree)
{
    if (weights.size() != 5) {
        throw Error(ErrorKind::InvalidInput, "expected five ambient weights, got " + weights.str());
    }
    if (degree < 1) {
        throw Error(ErrorKind::InvalidInput, "degree must be positive");
    }
    const int index = weights.sum() - degree;
    if (index <= 0) {
        throw Error(ErrorKind::InvalidInput,
                    "non-positive index " + std::to_string(index) + " for X_" + std::to_string(degree) + " in P" +
                        weights.str() + " (not Fano)");
    }
    return index;
}

/// (-K_X)^3 = index^3 * d / prod(a).
inline Rational anticanonical_cube(const FamilyRecord& record)
{
    const Rational i(record.index);
    return i * i * i * Rational(record.degree) / Rational(record.weights.product());
}

namespace detail {

inline void check_record(const FamilyRecord& r, int tabulated_index)
{
    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::DataIntegrity, "family " + std::to_string(r.id) + ": " + why);
    };
    if (r.weights.size() != 5) {
        fail("expected five weights");
    }
    if (!r.weights.is_sorted()) {
        fail("weights not nondecreasing");
    }
    if (!r.weights.is_well_formed()) {
        fail("weights not well-formed");
    }
    if (fano_index(r.weights, r.degree) != tabulated_index) {
        fail("tabulated index " + std::to_string(tabulated_index) + " differs from sum(a) - d");
    }
    if (monomial_support(r.weights, r.degree).empty()) {
        fail("empty monomial support");
    }
}

inline void attach(std::vector<FamilyRecord>& records, int family, auto&& fn)
{
    auto it = std::find_if(records.begin(), records.end(), [&](const FamilyRecord& r) { return r.id == family; });
    if (it == records.end()) {
        throw Error(ErrorKind::DataIntegrity, "expectation for unknown family " + std::to_string(family));
    }
    fn(*it);
}

} // namespace detail

/// Parses the family table and attaches the expectation records.
inline std::vector<FamilyRecord> load_catalog(std::string_view families_text, std::string_view expectations_text)
{
    std::vector<FamilyRecord> records;
    std::istringstream in{std::string(families_text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string id, weights, degree, index, rational;
        if (!(fields >> id)) {
            continue;
        }
        if (!(fields >> weights >> degree >> index >> rational)) {
            throw Error(ErrorKind::DataIntegrity, "malformed family line '" + line + "'");
        }
        FamilyRecord r;
        int tabulated_index = 0;
        try {
            r.id = std::stoi(id);
            r.weights = WeightVector(parse_int_list(weights));
            r.degree = std::stoi(degree);
            tabulated_index = std::stoi(index);
        } catch (const std::exception& e) {
            throw Error(ErrorKind::DataIntegrity, "malformed family line '" + line + "': " + e.what());
        }
        if (rational != "Yes" && rational != "No") {
            throw Error(ErrorKind::DataIntegrity, "rational flag must be Yes or No in '" + line + "'");
        }
        r.rational = rational == "Yes";
        try {
            detail::check_record(r, tabulated_index);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::DataIntegrity) {
                throw;
            }
            throw Error(ErrorKind::DataIntegrity, e.what());
        }
        r.index = tabulated_index;
        records.push_back(std::move(r));
    }

    if (records.size() != family_count) {
        throw Error(ErrorKind::DataIntegrity, "expected 35 families, found " + std::to_string(records.size()));
    }
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (records[i].id != first_family_id + static_cast<int>(i)) {
            throw Error(ErrorKind::DataIntegrity, "family ids must be the contiguous range 96..130");
        }
    }

    ExpectationSet set = parse_expectations(expectations_text);
    for (auto& e : set.links) {
        detail::attach(records, e.family, [&](FamilyRecord& r) { r.expected.links.push_back(e); });
    }
    for (auto& e : set.exclusions) {
        detail::attach(records, e.family, [&](FamilyRecord& r) { r.expected.exclusions.push_back(e); });
    }
    for (auto& e : set.matrices) {
        detail::attach(records, e.family, [&](FamilyRecord& r) { r.expected.matrices.push_back(e); });
    }
    for (auto& e : set.normal_forms) {
        detail::attach(records, e.family, [&](FamilyRecord& r) { r.expected.normal_forms.push_back(e); });
    }
    return records;
}

/// The embedded catalog; parsed once.
inline const std::vector<FamilyRecord>& load_catalog()
{
    static const std::vector<FamilyRecord> records =
        load_catalog(embedded::families_text, embedded::expectations_text);
    return records;
}

inline const FamilyRecord& find_family(const std::vector<FamilyRecord>& records, int id)
{
    auto it = std::find_if(records.begin(), records.end(), [&](const FamilyRecord& r) { return r.id == id; });
    if (it == records.end()) {
        throw Error(ErrorKind::InvalidInput, "no family " + std::to_string(id) + " (valid ids 96..130)");
    }
    return *it;
}

inline const FamilyRecord& find_family(int id) { return find_family(load_catalog(), id); }

} // namespace fanolink
