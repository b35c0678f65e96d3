#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "hypermass/ads.hpp"
#include "hypermass/errors.hpp"
#include "hypermass/serialization.hpp"

using namespace hypermass;

TEST(ProfileJson, Kinds) {
    const RadialProfile ads = profile_from_json(Json::parse(R"({"kind":"ads","n":4,"m":2})"));
    EXPECT_EQ(ads.dimension(), 4);
    EXPECT_NEAR(std::sinh(ads.domain_start()), 1.2496210676876531, 1e-12);
    const RadialProfile c = profile_from_json(Json::parse(R"({"kind":"constant","n":3,"value":0.5})"));
    EXPECT_TRUE(c.is_constant());
    EXPECT_EQ(c.value(2.0), 0.5);
    const RadialProfile s = profile_from_json(Json::parse(R"({"kind":"sech","n":3,"a":0.2})"));
    EXPECT_NEAR(s.value(0.0), -0.2, 1e-15);
}

TEST(ProfileJson, SampledRoundTrip) {
    const RadialProfile f = sech_profile(Dimension(3), {0.2, 0.0, 4.0, 1.0, 0.0});
    std::vector<double> radii;
    for (int j = 0; j <= 300; ++j) radii.push_back(0.1 * j);
    const Json doc = sampled_profile_json(f, radii);
    const RadialProfile g = profile_from_json(Json::parse(doc.dump()));
    for (double r : {0.0, 1.05, 17.3}) EXPECT_NEAR(g.value(r), f.value(r), 1e-8);
}

TEST(ProfileJson, Rejections) {
    const char* bad[] = {
        R"([1,2])",
        R"({"n":3})",
        R"({"kind":"ads","n":2,"m":1})",
        R"({"kind":"ads","n":3.5,"m":1})",
        R"({"kind":"ads","n":3,"m":1,"extra":true})",
        R"({"kind":"warp","n":3})",
        R"({"kind":"ads","n":3,"m":"one"})",
        R"({"kind":"sampled","n":3,"boundary":"open","samples":[]})",
        R"({"kind":"sampled","n":3,"samples":[{"r":0,"f":0,"f1":0,"f2":0}]})",
    };
    for (const char* text : bad) {
        EXPECT_THROW(profile_from_json(Json::parse(text)), ConfigError) << text;
    }
}

TEST(Numbers, ShortestRoundTrip) {
    for (double x : {0.1, 1.0 / 3.0, 2.5980762113533160, 1e-300, -7.25}) {
        EXPECT_EQ(std::stod(format_number(x)), x);
    }
    EXPECT_EQ(format_number(0.1), "0.1");
}

TEST(SweepCsv, HeaderAndRows) {
    SweepTable t;
    t.rows.push_back({0.5, 0.2, 1.0, 2.0, 3.0, 6.0, 0.5, 12.0});
    const std::string csv = sweep_csv(t);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "m,M_A,M_Bplus,M_Bminus,flat_upper,ratio");
    EXPECT_NE(csv.find("0.5,1,2,3,6,0.5"), std::string::npos);
}
