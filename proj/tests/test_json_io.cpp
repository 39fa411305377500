#include <random>

#include <gtest/gtest.h>

#include "schubert/json_io.hpp"

using namespace schubert;
using nlohmann::json;

TEST(CycleClassJson, Schema) {
  const GrassmannContext ctx(1, 3);
  const CycleClass c = multiply_basis(ctx, {1}, {1});
  const json j = to_json(c);
  EXPECT_EQ(j.dump(),
            R"({"k":1,"n":3,"terms":[{"coeff":1,"partition":[1,1]},{"coeff":1,"partition":[2,0]}]})");
  EXPECT_EQ(to_json(CycleClass(ctx)).dump(), R"({"k":1,"n":3,"terms":[]})");
}

TEST(CycleClassJson, RoundTripsRandomClasses) {
  std::mt19937 rng(20261019);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const int k = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const GrassmannContext ctx(k, n);
    const auto box = box_partitions(ctx);
    CycleClass c(ctx);
    const int terms = std::uniform_int_distribution<int>(0, 6)(rng);
    for (int t = 0; t < terms; ++t) {
      const auto& a = box[std::uniform_int_distribution<std::size_t>(0, box.size() - 1)(rng)];
      c.add_term(a, std::uniform_int_distribution<Coefficient>(-5, 5)(rng));
    }
    const json j = to_json(c);
    ASSERT_EQ(cycle_class_from_json(json::parse(j.dump())), c);
    ASSERT_EQ(to_json(cycle_class_from_json(j)).dump(), j.dump());
  }
}

TEST(CycleClassJson, RejectsPartitionsOutsideTheBox) {
  const json j = json::parse(R"({"k":1,"n":3,"terms":[{"coeff":1,"partition":[3]}]})");
  EXPECT_THROW(cycle_class_from_json(j), std::invalid_argument);
}

TEST(SearchReportJson, Schema) {
  const SearchReport r = search_md_pairs(GrassmannContext(2, 6));
  json j = to_json(r);
  ASSERT_TRUE(j.contains("elapsed_ms"));
  j.erase("elapsed_ms");
  EXPECT_EQ(j.dump(),
            R"({"egd":6,"k":2,"md_pairs":[{"a":[1,1,1],"b":[4,0,0],"codims":[3,4],"type":[3,4]}],)"
            R"("n":6,"scanned":)" + std::to_string(r.scanned) +
                R"(,"zero_pairs":[{"a":[1,1,1],"b":[4,0,0],"codim_sum":7}]})");
  EXPECT_FALSE(to_json(r).contains("cross_validation"));
  EXPECT_TRUE(to_json(search_md_pairs(GrassmannContext(2, 6), true)).contains("cross_validation"));
}

TEST(VerificationReportJson, Schema) {
  const json j = to_json(verify_prop_comp(GrassmannContext(1, 3)));
  EXPECT_EQ(j.at("claim"), "prop-comp");
  EXPECT_EQ(j.at("status"), "pass");
  EXPECT_TRUE(j.at("counterexamples").empty());
  EXPECT_GT(j.at("hypothesis_count").get<int>(), 0);
  EXPECT_EQ(j.at("exceptional_pairs").size(), 2u);

  VerificationReport failed{"egd", 2, 6, false, {{{1}, {2}, "made up"}}, 3, {}};
  EXPECT_EQ(to_json(failed).dump(),
            R"({"claim":"egd","counterexamples":[{"a":[1],"b":[2],"reason":"made up"}],)"
            R"("exceptional_pairs":[],"hypothesis_count":3,"k":2,"n":6,"status":"fail"})");
}

TEST(ClassificationJson, Schema) {
  const json j = to_json(classify({2, 0, 6}));
  EXPECT_EQ(j.at("verdict"), "MUST_BE_CONSTANT");
  EXPECT_EQ(j.at("reason").at("branch"), "dimension");
  EXPECT_EQ(j.at("l"), 2);

  const json t = table_json(3, classify_table(3));
  EXPECT_EQ(t.at("grid"), json::parse(R"(["---","CIC","---"])"));
  EXPECT_EQ(t.at("cells").size(), 3u);
  EXPECT_EQ(t.at("cells")[1][1].at("verdict"), "NONCONSTANT_IMPLIES_ISOMORPHISM");
}
