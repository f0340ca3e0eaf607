#include "support.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace hypell;

namespace {

struct Row {
    int type, gamma;
    std::vector<int> mults;
};

const std::vector<Row> kTable = {
    {1, 2, {2, 2, 2, 2}}, {2, 4, {2, 2, 2, 2}}, {3, 4, {2, 4, 4}}, {4, 8, {2, 4, 4}},
    {5, 3, {3, 3, 3}},    {6, 9, {3, 3, 3}},    {7, 6, {2, 3, 6}},
};

} // namespace

TEST(Catalog, RowsMatchTable)
{
    for (const auto& row : kTable) {
        const auto& s = surface_params(row.type);
        EXPECT_EQ(s.type_id, row.type);
        EXPECT_EQ(s.gamma, row.gamma);
        EXPECT_EQ(std::vector<int>(s.multiplicities.begin(), s.multiplicities.end()), row.mults);
    }
}

TEST(Catalog, DerivedConstantsRecompute)
{
    for (const auto& s : all_surfaces()) {
        int l = 1;
        for (int m : s.multiplicities)
            l = std::lcm(l, m);
        EXPECT_EQ(s.mu, l) << "type " << s.type_id;
        ASSERT_EQ(s.gamma % s.mu, 0);
        EXPECT_EQ(s.gamma_over_mu, s.gamma / s.mu);
        EXPECT_GE(s.mu * s.mu, s.gamma);
        EXPECT_EQ(is_odd_type(s), s.gamma == s.mu);
    }
}

TEST(Catalog, Examples)
{
    const auto& t1 = surface_params(1);
    EXPECT_EQ(t1.gamma, 2);
    EXPECT_EQ(t1.mu, 2);
    EXPECT_EQ(t1.gamma_over_mu, 1);
    const auto& t6 = surface_params(6);
    EXPECT_EQ(t6.gamma, 9);
    EXPECT_EQ(t6.mu, 3);
    EXPECT_EQ(t6.gamma_over_mu, 3);
    const auto& t7 = surface_params(7);
    EXPECT_EQ(t7.gamma, 6);
    EXPECT_EQ(t7.mu, 6);
    EXPECT_EQ(t7.gamma_over_mu, 1);
    EXPECT_EQ(surface_params(4).group_label, "Z4 x Z2");
}

TEST(Catalog, OddTypes)
{
    EXPECT_TRUE(is_odd_type(1));
    EXPECT_FALSE(is_odd_type(4));
    EXPECT_TRUE(is_odd_type(7));
    for (int t = 1; t <= 7; ++t)
        EXPECT_EQ(is_odd_type(t), t % 2 == 1);
}

TEST(Catalog, OutOfRangeNamesRange)
{
    for (int bad : {0, 8, -1}) {
        try {
            surface_params(bad);
            FAIL() << "expected error for " << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
            EXPECT_NE(std::string(e.what()).find("1..7"), std::string::npos);
        }
        EXPECT_THROW(is_odd_type(bad), Error);
    }
}
