#include <gtest/gtest.h>

#include "hypercross/config.hpp"
#include "hypercross/config_io.hpp"
#include "hypercross/error.hpp"
#include "hypercross/gale.hpp"

namespace hypercross {
namespace {

PointConfig planar(std::initializer_list<std::pair<long, long>> pts) {
  PointConfig c{2, {}};
  for (auto [x, y] : pts) c.points.push_back({Rational(x), Rational(y)});
  return c;
}

TEST(MomentConfig, Substitution) {
  const auto c = moment_config({2, {1, 2}});
  EXPECT_EQ(c.points[0], (Point{1, 1}));
  EXPECT_EQ(c.points[1], (Point{2, 4}));
}

TEST(MomentConfig, RejectsNonMonotoneParameters) {
  EXPECT_THROW(moment_config({2, {1, 3, 2}}), Error);
  try {
    moment_config({2, {1, 1}});
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kOrdering);
  }
}

TEST(MomentConfig, GeneralAndConvexPosition) {
  EXPECT_TRUE(is_general_position(moment_config({3, {0, 1, 2, 3, 4, 5}})));
  EXPECT_TRUE(is_convex_position(moment_config(unit_moment_params(4, 8))));
  EXPECT_TRUE(is_convex_position(moment_config(unit_moment_params(3, 6))));
}

TEST(MomentConfig, AlwaysGeneralAndConvexForSmallSizes) {
  // Includes negative and fractional parameters.
  for (std::size_t d = 2; d <= 6; ++d) {
    for (std::size_t n : {d + 2, 2 * d}) {
      MomentParams p{d, {}};
      for (std::size_t i = 0; i < n; ++i)
        p.ts.push_back(Rational(static_cast<long>(3 * i) - 7, 2));
      const auto c = moment_config(p);
      EXPECT_TRUE(is_general_position(c)) << "d=" << d << " n=" << n;
      EXPECT_TRUE(is_convex_position(c)) << "d=" << d << " n=" << n;
    }
  }
  EXPECT_TRUE(is_general_position(moment_config(unit_moment_params(6, 12))));
  EXPECT_TRUE(is_convex_position(moment_config(unit_moment_params(6, 12))));
}

TEST(GeneralPosition, DetectsDegeneracies) {
  EXPECT_FALSE(is_general_position(planar({{0, 0}, {1, 1}, {2, 2}, {5, 7}})));
  PointConfig c{3, {{0, 0, 0}, {1, 2, 3}, {4, 1, 0}, {1, 2, 3}, {7, 7, 1}, {2, 9, 4}}};
  EXPECT_FALSE(is_general_position(c));
}

TEST(GeneralPosition, TrivialQueryIsFlagged) {
  const auto c = planar({{0, 0}, {1, 1}});
  EXPECT_EQ(general_position(c), GeneralPosition::kTrivial);
  EXPECT_THROW(is_general_position(c), Error);
}

TEST(ConvexPosition, SquareAndTriangleWithCentroid) {
  EXPECT_TRUE(is_convex_position(planar({{0, 0}, {1, 0}, {1, 1}, {0, 1}})));
  EXPECT_FALSE(is_convex_position(planar({{0, 0}, {3, 0}, {0, 3}, {1, 1}})));
  EXPECT_THROW(is_convex_position(planar({{0, 0}, {1, 1}, {2, 2}, {0, 1}})), Error);
}

TEST(ConvexPosition, AgreesWithGaleIsolationOnMomentCurve) {
  const auto c = moment_config(unit_moment_params(3, 6));
  EXPECT_EQ(is_convex_position(c), gale_convexity_check(gale_transform(c)));
}

TEST(RandomGeneralConfig, PostconditionsAndDeterminism) {
  const auto a = random_general_config(2, 4, 7);
  EXPECT_EQ(a.size(), 4u);
  EXPECT_TRUE(is_general_position(a));
  const auto b = random_general_config(4, 8, 1);
  EXPECT_EQ(b.size(), 8u);
  EXPECT_TRUE(is_general_position(b));
  EXPECT_EQ(random_general_config(4, 8, 1), b);
  EXPECT_NE(random_general_config(4, 8, 2), b);
  for (const auto& p : b.points)
    for (const auto& x : p) {
      EXPECT_GE(x, Rational(0));
      EXPECT_LT(x, Rational(4 * 8 * 4));
      EXPECT_EQ(x.denominator(), 1);
    }
}

TEST(RandomGeneralConfig, ParameterErrors) {
  EXPECT_THROW(random_general_config(3, 3, 1), Error);
  EXPECT_THROW(random_general_config(2, 6, 1, 4), Error);
  // A 2x2 box cannot hold 5 points in general position.
  try {
    random_general_config(2, 5, 1, 5);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kGeneration);
  }
}

TEST(RandomConvexConfig3d, PostconditionsAndDeterminism) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto c = random_convex_config_3d(6, seed);
    EXPECT_TRUE(is_general_position(c));
    EXPECT_TRUE(is_convex_position(c));
    for (const auto& p : c.points) EXPECT_EQ(p[0] * p[0] + p[1] * p[1] + p[2] * p[2], Rational(1));
  }
  EXPECT_EQ(random_convex_config_3d(6, 3), random_convex_config_3d(6, 3));
  EXPECT_THROW(random_convex_config_3d(3, 1), Error);
}

TEST(ConfigJson, RoundTripIsBitExact) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto c = random_convex_config_3d(7, seed);
    const std::string text = to_json(c).dump();
    const auto parsed = config_from_json(nlohmann::json::parse(text));
    EXPECT_EQ(parsed, c);
    EXPECT_EQ(to_json(parsed).dump(), text);
  }
}

TEST(ConfigJson, RejectsMalformedInput) {
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"points": []})")), Error);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"dim": 2, "points": [["1"]]})")), Error);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"dim": 2, "points": [["1", "x"]]})")), Error);
  const auto c = config_from_json(nlohmann::json::parse(R"({"dim": 2, "points": [["2/4", 3]]})"));
  EXPECT_EQ(c.points[0], (Point{Rational(1, 2), Rational(3)}));
}

}  // namespace
}  // namespace hypercross
