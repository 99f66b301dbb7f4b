#include <gtest/gtest.h>

#include "haga/serialize.hpp"

namespace haga {
namespace {

TEST(Serialize, Scalars) {
  EXPECT_EQ(to_json(Rat(-3, 6)).get<std::string>(), "-1/2");
  EXPECT_EQ(to_json(Point{1, Rat(2, 3)}).dump(), R"(["1","2/3"])");
  EXPECT_EQ(to_json(Line(2, 4, 6)).dump(), R"(["1","2","3"])");
  EXPECT_EQ(to_json(Circle{{0, 0}, 1}).dump(), R"({"center":["0","0"],"radius":"1"})");
}

TEST(Serialize, ConfigRoundsTripThroughParse) {
  const HagaConfig cfg = build(2, 1);
  const Json j = config_json(cfg);
  EXPECT_EQ(j["case"], "h5");
  EXPECT_EQ(j["lengths"]["a"], "1/3");
  EXPECT_EQ(j["circles"]["eps1"]["radius"], "5/6");
  EXPECT_EQ(Rat::parse(j["points"]["F"][0].get<std::string>()), cfg.F->x);
  EXPECT_EQ(Json::parse(j.dump()), j);
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"d", "e", "case", "crease", "points", "lengths",
                                            "circles", "foldable"}));
}

TEST(Serialize, CaseH2NullsCirclesExceptDelta) {
  const Json j = config_json(build(1, 2));
  EXPECT_TRUE(j["points"]["F"].is_null());
  EXPECT_FALSE(j["points"]["G"].is_null());
  EXPECT_FALSE(j["circles"]["delta"].is_null());
  EXPECT_TRUE(j["circles"]["alpha"].is_null());
}

TEST(Serialize, Report) {
  HagaConfig cfg = build(2, 1);
  cfg.F->x += 1;
  const Json j = report_json(verify(cfg));
  ASSERT_EQ(j["checks"].size(), 16u);
  bool saw_fail = false;
  for (const auto& c : j["checks"]) {
    if (c["status"] == "fail") saw_fail = true;
  }
  EXPECT_TRUE(saw_fail);
  const Json ok = report_json(verify(build(1, 2)));
  EXPECT_EQ(ok["checks"][1]["status"], "not_applicable");
}

}  // namespace
}  // namespace haga
