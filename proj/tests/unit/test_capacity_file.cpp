#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"
#include "lowprob/capacity_file.hpp"
#include "lowprob/errors.hpp"

using namespace lowprob;

namespace {

Rational q(long p, long d) { return Rational(p, d); }

std::size_t error_line(const std::string& text) {
  try {
    parse_capacity_file(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::string error_text(const std::string& text) {
  try {
    parse_capacity_file(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("mobius file for a coin marginal") {
  const auto file = parse_capacity_file("frame: h t\nkind: mobius\n{h} = 1/4\n{t} = 1/4\n{h,t} = 1/2\n");
  CHECK(file.kind == EntryKind::Mobius);
  CHECK(to_lower(file) == fixture::coin("h", "t", q(1, 4)));
}

TEST_CASE("dist file") {
  const auto file = parse_capacity_file(
      "# comment line\nframe: h1h2 h1t2 t1h2 t1t2\nkind: dist\n{h1h2} = 7/16  # trailing\n{h1t2} = 1/16\n"
      "{t1h2} = 1/16\n{t1t2} = 7/16\n");
  CHECK(to_distribution(file) == fixture::correlated());
  CHECK(to_lower(file) == LowerProbability::of(fixture::correlated()));
}

TEST_CASE("lower file with default") {
  const auto file = parse_capacity_file("frame: a b c\nkind: lower\ndefault: vacuous\n{a} = 1/3\n{a,b} = 1/3\n{a,c} = 1/2\n");
  const auto low = to_lower(file);
  CHECK(low(Event(1, 3)) == q(1, 3));
  CHECK(low(Event(5, 3)) == q(1, 2));
  CHECK(low(Event(6, 3)) == Rational(0));
  CHECK(low(Event(7, 3)) == Rational(1));
  CHECK(parse_capacity_file("frame: a b\nkind: lower\ndefault=vacuous\n").default_vacuous);
}

TEST_CASE("errors carry line numbers") {
  CHECK(error_line("frame: a b\nkind: lower\n{a} = 1/2\n{a} = 1/4\n{b} = 0\n") == 4);
  CHECK(error_text("frame: a b\nkind: lower\n{a} = 1/2\n{a} = 1/4\n{b} = 0\n").find("{a}") != std::string::npos);
  CHECK(error_line("frame: a b\nkind: lower\n{a} = 1/2\n{z} = 1/4\n") == 4);
  CHECK(error_line("frame: a b\nkind: mobius\n{a} = 1/2\n{b} = 1/4\n") > 0);
  CHECK(error_text("frame: a b\nkind: mobius\n{a} = 1/2\n{b} = 1/4\n").find("sum") != std::string::npos);
  CHECK(error_line("frame: a b\nkind: dist\n{a,b} = 1\n") == 3);
  CHECK(error_line("frame: a b\nkind: lower\n{a} = 0.5\n{b} = 0\n") == 3);
  CHECK(error_line("frame: a b\nkind: lower\n{a} 1/2\n") == 3);
  CHECK(error_line("kind: lower\n{a} = 1/2\n") == 2);
  CHECK(error_line("frame: a b\nkind: sideways\n") == 2);
  CHECK(error_line("frame: a b\nkind: lower\n{a} = 1/2\n") > 0);  // {b} missing
  CHECK(error_line("frame: a a\nkind: lower\n") == 1);
  CHECK_THROWS_AS(load_capacity_file("/nonexistent/file.cap"), ParseError);
}

TEST_CASE("validation failures surface from to_lower") {
  const auto file = parse_capacity_file("frame: a b\nkind: lower\n{a} = 3/4\n{b} = 3/4\n");
  CHECK_THROWS_AS(to_lower(file), std::invalid_argument);
}

TEST_CASE("round trips") {
  for (const auto& low : {fixture::coins_type1(), fixture::coins_type2(), fixture::monty_hall()}) {
    CHECK(to_lower(parse_capacity_file(render_capacity_file(low.function()))) == low);
    CHECK(to_lower(parse_capacity_file(render_capacity_file(mobius(low).function(), EntryKind::Mobius))) == low);
  }
  gen::Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto low = gen::two_monotone(rng, 1 + i % 5);
    CHECK(to_lower(parse_capacity_file(render_capacity_file(low.function()))) == low);
    const Distribution p(low.frame(), gen::masses(rng, low.frame().size()));
    CHECK(to_distribution(parse_capacity_file(render_distribution_file(p))) == p);
  }
}
