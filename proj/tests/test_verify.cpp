#include <gtest/gtest.h>

#include "fanolink/verify.hpp"

using namespace fanolink;

namespace {

const Deviation* find_deviation(const VerificationReport& rep, const std::string& where_prefix, const std::string& cell)
{
    for (auto& d : rep.deviations) {
        if (d.where.rfind(where_prefix, 0) == 0 && d.cell == cell) {
            return &d;
        }
    }
    return nullptr;
}

bool has_failure(const VerificationReport& rep, const std::string& fragment)
{
    for (auto& f : rep.failures) {
        if (f.find(fragment) != std::string::npos) {
            return true;
        }
    }
    return false;
}

VerificationReport verify_with(const std::string& expectations)
{
    return verify_tables(load_catalog(embedded::families_text, expectations));
}

} // namespace

TEST(VerifyTables, EmbeddedTablesReplay)
{
    const VerificationReport rep = verify_tables();
    for (auto& f : rep.failures) {
        ADD_FAILURE() << f;
    }
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.links.size(), 6u);
    EXPECT_EQ(rep.links_matched(), 6u);
    EXPECT_EQ(rep.exclusions.size(), 7u);
    EXPECT_EQ(rep.exclusions_matched(), 7u);
}

TEST(VerifyTables, KnownDeviationsAreListedWithBothValues)
{
    const VerificationReport rep = verify_tables();
    const Deviation* form = find_deviation(rep, "110 1/8", "form");
    ASSERT_NE(form, nullptr);
    EXPECT_EQ(form->printed, "(3,2,5)");
    EXPECT_EQ(form->derived, "(3,1,5)");

    const Deviation* u = find_deviation(rep, "110 p2/x0 unprojected-wellformed", "column:u");
    ASSERT_NE(u, nullptr);
    EXPECT_EQ(u->printed, "(3,21)");
    EXPECT_EQ(u->derived, "(3,16)");

    const Deviation* key101 = find_deviation(rep, "101 p2", "key");
    ASSERT_NE(key101, nullptr);
    EXPECT_NE(key101->derived.find("x2^3*x4 has degree 20"), std::string::npos);
    const Deviation* key103 = find_deviation(rep, "103 p1/x0", "key");
    ASSERT_NE(key103, nullptr);
    EXPECT_NE(key103->derived.find("x1^13*x0 has degree 41"), std::string::npos);
    EXPECT_NE(key103->derived.find("x0*x1^12"), std::string::npos);

    EXPECT_NE(find_deviation(rep, "110 p4/x2 wellformed", "frame"), nullptr);
    EXPECT_NE(find_deviation(rep, "103 p1/x3", "type"), nullptr);
    for (const char* id : {"100 smooth", "101 smooth", "102 smooth"}) {
        const Deviation* d = find_deviation(rep, id, "test value");
        ASSERT_NE(d, nullptr) << id;
        EXPECT_EQ(d->derived, "8");
    }
}

TEST(VerifyTables, DeterministicAndIdempotent) { EXPECT_EQ(verify_tables(), verify_tables()); }

TEST(VerifyTables, UndeclaredMismatchFails)
{
    const VerificationReport rep = verify_with(
        "link family=100 site=p3 tangent=x2 type=1/5(3,1,2) ambient=1,1,1,3,7 degrees=10 label=cE6 "
        "steps=iso|flop|divisorial distinguished=yes\n");
    EXPECT_FALSE(rep.ok());
    EXPECT_TRUE(has_failure(rep, "100 p3/x2: target printed"));
    EXPECT_THROW(require_verified(rep), Error);
}

TEST(VerifyTables, StaleDeclarationFails)
{
    const VerificationReport rep = verify_with(
        "exclusion family=102 site=p2 tangent=x0 type=1/5(2,2,3) key=x2^5*x0 "
        "blowup=-5_u,0_y2,1_y3,4_y4,8_y(21),1_y1,3_y0 verdict=bad known=blowup\n");
    EXPECT_TRUE(has_failure(rep, "blowup declared as a deviation but matches"));
}

TEST(VerifyTables, WrongVerdictFails)
{
    const VerificationReport rep = verify_with(
        "exclusion family=103 site=p2 tangent=x1 type=1/5(2,1,4) key=x2^7*x1 "
        "blowup=-5_u,0_y2,2_y4,3_y3,1_y0,4_y1 verdict=no\n");
    EXPECT_TRUE(has_failure(rep, "verdict printed no link, computed bad link"));
    EXPECT_EQ(rep.exclusions_matched(), 0u);
}

TEST(VerifyTables, MissingSolidCandidateLinkFails)
{
    const VerificationReport rep = verify_with("");
    EXPECT_TRUE(has_failure(rep, "no distinguished link recorded"));
}

TEST(RequireVerified, PassesOnCleanReport) { EXPECT_NO_THROW(require_verified(verify_tables())); }

TEST(CompareFrames, IdentityUnimodularAndScaled)
{
    RankTwoModel m;
    m.columns = {{"u", {2, -5}}, {"y3", {1, 0}}, {"y1", {0, 1}}, {"y0", {-1, 3}}};
    const auto same = compare_frames(m, {"u", "y3", "y1", "y0"}, {2, 1, 0, -1}, {-5, 0, 1, 3});
    EXPECT_TRUE(same.identity);
    EXPECT_TRUE(same.mismatched.empty());

    const auto sheared = compare_frames(m, {"u", "y3", "y1", "y0"}, {2, 1, 0, -1}, {9, 7, 1, -4});
    EXPECT_FALSE(sheared.identity);
    EXPECT_TRUE(sheared.unimodular);
    EXPECT_TRUE(sheared.mismatched.empty());

    const auto scaled = compare_frames(m, {"u", "y3", "y1", "y0"}, {4, 2, 0, -2}, {-5, 0, 1, 3});
    EXPECT_FALSE(scaled.unimodular);

    const auto typo = compare_frames(m, {"u", "y3", "y1", "y0"}, {2, 1, 0, -1}, {-4, 0, 1, 3});
    EXPECT_EQ(typo.mismatched, (std::vector<std::string>{"u"}));
}

TEST(TypeMatches, OrderedOrMultisetOfEitherForm)
{
    const QuotientSingularity q = normalize_terminal(7, {2, 3, 4});
    EXPECT_TRUE(type_matches(parse_printed_type("1/7(2,3,4)"), q));
    EXPECT_TRUE(type_matches(parse_printed_type("1/7(4,2,3)"), q));
    EXPECT_TRUE(type_matches(parse_printed_type("1/7(1,5,2)"), q));
    EXPECT_FALSE(type_matches(parse_printed_type("1/7(1,1,5)"), q));
    EXPECT_FALSE(type_matches(parse_printed_type("1/5(2,3,4)"), q));
}

TEST(BlowupSequence, ShowsTheUnprojectionVariable)
{
    const GameResult g = run_game(find_family(102), Site::vertex(2), 0);
    EXPECT_EQ(blowup_sequence(g.trace.unprojected_raw), "-5_u,0_y2,1_y3,4_y4,8_y(21),1_y1,3_y0");
}
