#include <gtest/gtest.h>

#include "cliffqt/cliffqt.hpp"
#include "test_util.hpp"

using namespace cliffqt;

namespace {

Coefficient<Rational> q(long num, long den = 1) { return Coefficient<Rational>(Rational(num, den)); }

ParseError parse_failure(const char* text, Signature sig, Field field = Field::Real) {
  try {
    parse_mv(text, sig, field);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error for '" << text << "'";
  return ParseError("none", 0, 0);
}

}  // namespace

TEST(ParseMv, GrammarExample) {
  const Signature sig(5, 0);
  const auto u = parse_mv("2 + 3*e12 - e{1,5}", sig, Field::Real);
  EXPECT_EQ(u.size(), 3u);
  EXPECT_EQ(u.coefficient(Blade::identity()), q(2));
  EXPECT_EQ(u.coefficient(Blade::from_indices({1, 2})), q(3));
  EXPECT_EQ(u.coefficient(Blade::from_indices({1, 5})), q(-1));
}

TEST(ParseMv, CoefficientForms) {
  const Signature sig(3, 0);
  EXPECT_EQ(parse_mv("3/2*e1", sig, Field::Real).coefficient(Blade::generator(1)), q(3, 2));
  EXPECT_EQ(parse_mv("0.25*e1", sig, Field::Real).coefficient(Blade::generator(1)), q(1, 4));
  EXPECT_EQ(parse_mv("-e2", sig, Field::Real).coefficient(Blade::generator(2)), q(-1));
  EXPECT_EQ(parse_mv("e", sig, Field::Real).coefficient(Blade::identity()), q(1));
  const auto c = parse_mv("2 - 3i + i*e12", sig, Field::Complex);
  EXPECT_EQ(c.coefficient(Blade::identity()), Coefficient<Rational>(Rational(2), Rational(-3)));
  EXPECT_EQ(c.coefficient(Blade::from_indices({1, 2})),
            Coefficient<Rational>(Rational(0), Rational(1)));
  EXPECT_TRUE(parse_mv("0", sig, Field::Real).is_zero());
  EXPECT_TRUE(parse_mv("e1 - e1", sig, Field::Real).is_zero());
  EXPECT_EQ(parse_mv("e1 + e1", sig, Field::Real).coefficient(Blade::generator(1)), q(2));
}

TEST(ParseMv, Errors) {
  const Signature s3(3, 0);
  EXPECT_EQ(parse_failure("e21", s3).column(), 3u);
  parse_failure("e14", s3);
  parse_failure("e{1,1}", Signature(12, 0));
  parse_failure("e{0}", s3);
  parse_failure("e11", s3);
  parse_failure("3**e1", s3);
  parse_failure("e1 +", s3);
  parse_failure("2 e1", s3);
  parse_failure("1/0", s3);
  parse_failure("x", s3);
  parse_failure("i*e1", s3);
  parse_failure("e1,2", Signature(12, 0));
  parse_failure("e12", Signature(12, 0));
  const auto e = parse_failure("1 + e1 + e9", s3);
  EXPECT_EQ(e.line(), 1u);
  EXPECT_GT(e.column(), 8u);
}

TEST(FormatMv, Canonical) {
  const Signature sig(3, 0);
  EXPECT_EQ(format_mv(parse_mv("e23 + 1 - e1 + 3/2*e12", sig, Field::Real)),
            "1 - e1 + 3/2*e12 + e23");
  EXPECT_EQ(format_mv(parse_mv("0", sig, Field::Real)), "0");
  EXPECT_EQ(format_mv(parse_mv("-e23", sig, Field::Real)), "-e23");
  EXPECT_EQ(format_mv(parse_mv("2 - 3i + i*e12", sig, Field::Complex)), "2 - 3i + i*e12");
  EXPECT_EQ(format_mv(parse_mv("e{1,10} + e{2}", Signature(10, 0), Field::Real)),
            "e{2} + e{1,10}");
}

TEST(FormatMv, RoundTripRandom) {
  for (const auto& sig : {Signature(3, 2), Signature(7, 1), Signature(11, 1)})
    for (auto field : {Field::Real, Field::Complex})
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const double density = sig.n() > 10 ? 50.0 / (1 << sig.n()) : 0.5;
        const auto u = random_instance<Rational>(TypeSet::full(field), sig, field, seed, density);
        EXPECT_EQ(parse_mv(format_mv(u), sig, field), u) << format_mv(u);
      }
}

TEST(FormatMv, RoundTripFiftyTerms) {
  const Signature sig(4, 3);
  auto u = random_instance<Rational>(TypeSet::full(Field::Complex), sig, Field::Complex, 1, 0.4);
  ASSERT_GE(u.size(), 50u);
  EXPECT_EQ(parse_mv(format_mv(u), sig, Field::Complex), u);
}

TEST(Json, StructuredRoundTrip) {
  const Signature sig(2, 2);
  const auto u = parse_mv("3/2*e12 - i*e1 + 7", sig, Field::Complex);
  const auto j = to_json(u);
  EXPECT_EQ(j["signature"]["p"], 2);
  EXPECT_EQ(j["signature"]["q"], 2);
  EXPECT_EQ(j["field"], "complex");
  EXPECT_EQ(j["backend"], "exact");
  bool saw_e12 = false;
  for (const auto& t : j["terms"])
    if (t["blade"] == nlohmann::json::array({1, 2})) {
      saw_e12 = true;
      EXPECT_EQ(t["re"], "3/2");
      EXPECT_EQ(t["im"], "0");
    }
  EXPECT_TRUE(saw_e12);
  EXPECT_EQ(exact_mv_from_json(j), u);
  EXPECT_EQ(exact_mv_from_json(nlohmann::json::parse(j.dump())), u);
}

TEST(ParseRational, Forms) {
  Rational r;
  EXPECT_TRUE(parse_rational("12", r));
  EXPECT_EQ(r, 12);
  EXPECT_TRUE(parse_rational("-6/4", r));
  EXPECT_EQ(r, Rational(-3, 2));
  EXPECT_TRUE(parse_rational("1.125", r));
  EXPECT_EQ(r, Rational(9, 8));
  // Leading zeros are decimal, not octal.
  EXPECT_TRUE(parse_rational("0.25", r));
  EXPECT_EQ(r, Rational(1, 4));
  EXPECT_TRUE(parse_rational("010/08", r));
  EXPECT_EQ(r, Rational(5, 4));
  EXPECT_FALSE(parse_rational("1/0", r));
  EXPECT_FALSE(parse_rational("abc", r));
  EXPECT_FALSE(parse_rational("", r));
}
