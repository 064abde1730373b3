// Command-line front end: catalog, analyze, game, exclude, verify.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fanolink/report.hpp"

namespace {

using namespace fanolink;

constexpr int exit_ok = 0;
constexpr int exit_verification = 1;
constexpr int exit_usage = 2;
constexpr int exit_data = 3;

/// The embedded catalog, with expectations replaced by FANOLINK_EXPECTATIONS when set.
std::vector<FamilyRecord> catalog()
{
    const char* path = std::getenv("FANOLINK_EXPECTATIONS");
    if (path == nullptr || *path == '\0') {
        return load_catalog();
    }
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::DataIntegrity, std::string("cannot read expectations file ") + path);
    }
    std::stringstream text;
    text << in.rdbuf();
    return load_catalog(embedded::families_text, text.str());
}

template <class Report>
void emit(const Report& rep, const std::string& format, json extra = json::object())
{
    if (format == "json") {
        json j = rep;
        for (auto& [k, v] : extra.items()) {
            j[k] = v;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_markdown(rep);
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Birational links of index >= 2 Fano threefold hypersurfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "markdown";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"markdown", "json"}));

    auto* cat = app.add_subcommand("catalog", "List the 35 families with their invariants");

    int family = 0;
    auto* analyze = app.add_subcommand("analyze", "Singular locus and invariants of one family");
    analyze->add_option("family", family, "Family number (96-130)")->required();

    std::string point;
    std::string tangent;
    auto* game = app.add_subcommand("game", "Play the 2-ray game from one singular point");
    game->add_option("family", family, "Family number (96-130)")->required();
    game->add_option("--point", point, "Site label, e.g. p3 or s2-4")->required();
    game->add_option("--tangent", tangent, "Tangent variable, e.g. x2 (default: heaviest candidate)");

    std::optional<int> h_degree;
    auto* exclude = app.add_subcommand("exclude", "Smooth-point and curve tests, fibration witness");
    exclude->add_option("family", family, "Family number (96-130)")->required();
    exclude->add_option("--h-degree", h_degree, "Degree of the auxiliary divisor H")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Replay the tabulated links and exclusions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        const std::vector<FamilyRecord> records = catalog();
        if (*cat) {
            emit(catalog_report(records), format);
        } else if (*analyze) {
            emit(analysis_report(find_family(records, family)), format);
        } else if (*game) {
            const FamilyRecord& rec = find_family(records, family);
            const Site site = parse_site(point);
            const int t = tangent.empty() ? -1 : parse_variable(tangent);
            const GameResult g = run_game(rec, site, t);
            emit(game_report(rec, site, g), format);
        } else if (*exclude) {
            emit(exclusion_summary(find_family(records, family), h_degree), format);
        } else if (*verify) {
            const VerificationReport rep = verify_tables(records);
            const SolidityPartition part = solidity_summary(records);
            emit(rep, format,
                 json{{"solidity", {{"with_witness", part.with_witness}, {"without_witness", part.without_witness}}}});
            if (!rep.ok()) {
                std::cerr << Error(ErrorKind::VerificationFailure, std::to_string(rep.failures.size()) +
                                                                       " mismatched cell(s)")
                                 .what()
                          << "\n";
                return exit_verification;
            }
        }
    } catch (const Error& e) {
        std::cerr << "fanolink: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::InvalidInput: return exit_usage;
        case ErrorKind::VerificationFailure: return exit_verification;
        default: return exit_data;
        }
    }
    return exit_ok;
}
