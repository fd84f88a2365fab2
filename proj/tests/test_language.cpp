#include <gtest/gtest.h>

#include <random>

#include "conseq/language.hpp"
#include "conseq/rational.hpp"

using namespace conseq;

TEST(Statement, MakeSourceAndEvents) {
  auto g = Statement::make(StatementKind::Source);
  EXPECT_TRUE(g.is_source());
  EXPECT_FALSE(g.label().has_value());
  EXPECT_EQ(g, Statement::source());

  auto e3 = Statement::make(StatementKind::Event, 3);
  EXPECT_EQ(e3.kind(), StatementKind::Event);
  EXPECT_EQ(e3.label(), 3u);
  EXPECT_EQ(to_string(e3), "E_3");
  EXPECT_EQ(to_string(Statement::non_event(3)), "E'_3");
  EXPECT_EQ(to_string(g), "G");
}

TEST(Statement, MakeRejectsBadLabels) {
  EXPECT_THROW(Statement::make(StatementKind::Event, 0), std::invalid_argument);
  EXPECT_THROW(Statement::make(StatementKind::Event), std::invalid_argument);
  EXPECT_THROW(Statement::make(StatementKind::NonEvent), std::invalid_argument);
  EXPECT_THROW(Statement::make(StatementKind::Source, 1), std::invalid_argument);
}

TEST(Statement, EventAndNonEventWithSameLabelDiffer) {
  EXPECT_NE(Statement::event(2), Statement::non_event(2));
  StatementSet s{Statement::event(2), Statement::non_event(2), Statement::event(2)};
  EXPECT_EQ(s.size(), 2u);
}

TEST(Statement, CanonicalOrder) {
  StatementSet s{Statement::non_event(2), Statement::event(10), Statement::source(),
                 Statement::event(2), Statement::non_event(1)};
  EXPECT_EQ(to_string(s), "{G,E'_1,E_2,E'_2,E_10}");
}

TEST(Statement, ParseRoundTrip) {
  for (auto s : {Statement::source(), Statement::event(1), Statement::non_event(42)}) {
    EXPECT_EQ(Statement::parse(to_string(s)), s);
  }
  EXPECT_THROW(Statement::parse("E_0"), std::invalid_argument);
  EXPECT_THROW(Statement::parse("F_1"), std::invalid_argument);
  EXPECT_THROW(Statement::parse("E_"), std::invalid_argument);
}

TEST(TickRender, Tallies) {
  EXPECT_EQ(tick_render(1), "|");
  EXPECT_EQ(tick_render(4), "||||");
  EXPECT_THROW(tick_render(0), std::invalid_argument);
}

TEST(TickRender, LengthMatchesLabelProperty) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> dist(1, 10000);
  for (int i = 0; i < 200; ++i) {
    auto n = dist(rng);
    auto s = tick_render(n);
    ASSERT_EQ(s.size(), n);
    ASSERT_EQ(s.find_first_not_of('|'), std::string::npos);
  }
  EXPECT_EQ(tick_render(10000).size(), 10000u);
}

TEST(Language, TrialLanguage) {
  EXPECT_EQ(to_string(Language::trial_language(4).statements()), "{G,E_1,E'_1,E_2}");
  EXPECT_THROW(Language::trial_language(0), std::invalid_argument);
  EXPECT_THROW(Language(StatementSet{}), std::invalid_argument);
}

TEST(Rational, ParseForms) {
  EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
  EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("1"), Rational(1));
  EXPECT_EQ(parse_rational("1.0"), Rational(1));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/2/3"), std::invalid_argument);
  EXPECT_THROW(parse_rational("0."), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Probability, Range) {
  EXPECT_NO_THROW(Probability::parse("0"));
  EXPECT_NO_THROW(Probability::parse("1"));
  EXPECT_THROW(Probability::parse("5/4"), std::invalid_argument);
  EXPECT_THROW(Probability::parse("-1/4"), std::invalid_argument);
  try {
    Probability::parse("5/4");
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "probability out of range");
  }
  EXPECT_EQ(to_string(Probability::parse("0.75")), "3/4");
}

TEST(Rational, IntegerEqualityTerminates) {
  Rational half(1, 2), two(2);
  EXPECT_TRUE(two == 2);
  EXPECT_TRUE(2 == two);
  EXPECT_TRUE(half != 0);
  EXPECT_FALSE(half == std::int64_t{0});
  EXPECT_TRUE(Rational(0) == 0LL);
}
