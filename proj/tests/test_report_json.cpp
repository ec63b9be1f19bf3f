#include <gtest/gtest.h>

#include "picardlab/report_json.hpp"

using namespace picardlab;

TEST(ReportJson, RoundTripIsByteIdentical) {
  for (const ConstructionReport& r : {build_theorem1(2), build_theorem2(3, 2), build_theorem2(4, 8), build_theorem3(2, 4)}) {
    const std::string text = serialize(report_to_json(r));
    const ConstructionReport back = report_from_json(Json::parse(text));
    EXPECT_EQ(back, r);
    EXPECT_EQ(serialize(report_to_json(back)), text);
  }
}

TEST(ReportJson, InventoriesAreSortedArrays) {
  const Json j = report_to_json(build_theorem1(2));
  const Json& inv = j.at("cover_inventory");
  ASSERT_EQ(inv.size(), 2u);
  EXPECT_EQ(inv[0].at("family"), "A");
  EXPECT_EQ(inv[0].at("index"), 3);
  EXPECT_EQ(inv[0].at("count"), 4);
  EXPECT_EQ(inv[1].at("family"), "D");
  EXPECT_EQ(j.at("params").dump(), "{\"n\":2}");
}

TEST(ReportJson, HugeIntegersBecomeStrings) {
  const Integer big("123456789012345678901234567890");
  EXPECT_TRUE(integer_to_json(big).is_string());
  EXPECT_EQ(integer_from_json(integer_to_json(big)), big);
  EXPECT_EQ(integer_from_json(integer_to_json(Integer(-5))), -5);
}
