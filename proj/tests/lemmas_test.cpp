#include <chordal_forge/lemmas.hpp>

#include <gtest/gtest.h>

using namespace chordal_forge;

TEST(Lemmas, AllPassUpToForty)
{
    auto checks = lemma_checks(40, 120);
    EXPECT_GE(checks.size(), 7u);
    for (auto & c : checks)
        EXPECT_TRUE(c.passed()) << c.name << ": " << c.failed << " of " << c.checked << ", first " << c.first_failure;
}

TEST(CheckTally, RecordsAndMerges)
{
    CheckTally a("a");
    EXPECT_FALSE(a.passed());
    a.record(true, "x");
    EXPECT_TRUE(a.passed());
    CheckTally b("b");
    b.record(false, "here");
    b.record(false, "there");
    EXPECT_EQ(b.first_failure, "here");
    a.merge(b);
    EXPECT_EQ(a.checked, 3);
    EXPECT_EQ(a.failed, 2);
    EXPECT_EQ(a.first_failure, "here");
    EXPECT_FALSE(a.passed());
}
