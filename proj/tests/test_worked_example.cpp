#include "pieri/json_io.hpp"
#include "pieri/worked_example.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace pieri;

namespace {

std::string golden(const std::string& name) {
    const char* dir = std::getenv("PIERI_GOLDEN_DIR");
    std::ifstream in(std::string(dir ? dir : "tests/golden") + "/" + name);
    if (!in) throw std::runtime_error("missing golden file " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(WorkedExample, EveryClausePasses) {
    auto rep = worked_example_run();
    for (const auto& c : rep.checks.items()) EXPECT_TRUE(c.ok) << c.clause;
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.final_components, pieri_set(DecSeq(9, {7, 4, 1}), 2));
}

TEST(WorkedExample, ThreeLimitsAreChecked) {
    auto rep = worked_example_run();
    int limits = 0;
    for (const auto& c : rep.checks.items())
        if (c.clause.rfind("(C)", 0) == 0 && c.clause.find("lim ") != std::string::npos) {
            ++limits;
            EXPECT_TRUE(c.ok) << c.clause;
        }
    EXPECT_EQ(limits, 3);
}

TEST(WorkedExample, ClauseGroupsPresent) {
    auto rep = worked_example_run();
    for (const std::string tag : {"(A)", "(B)", "(C)"}) {
        int k = 0;
        for (const auto& c : rep.checks.items()) k += c.clause.rfind(tag, 0) == 0;
        EXPECT_GT(k, 0) << tag;
    }
}

TEST(WorkedExample, TableMatchesGolden) { EXPECT_EQ(worked_example_run().table(), golden("worked_example.txt")); }

TEST(WorkedExample, IndependentOfSeed) {
    const auto base = worked_example_run(0).table();
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        auto rep = worked_example_run(seed);
        EXPECT_TRUE(rep.passed()) << "seed " << seed;
        EXPECT_EQ(rep.final_components, pieri_set(DecSeq(9, {7, 4, 1}), 2));
    }
    EXPECT_EQ(worked_example_run(0).table(), base);
}

TEST(WorkedExample, JsonReport) {
    auto j = json::of(worked_example_run());
    EXPECT_TRUE(j.at("passed").get<bool>());
    EXPECT_EQ(j.at("final_components").size(), 6u);
    EXPECT_EQ(json::Json::parse(j.dump()), j);
}
