#include "doctest.h"

#include "cmclass/errors.hpp"
#include "cmclass/expr.hpp"

using namespace cmclass;

namespace {

std::size_t error_position(const std::string& text) {
  try {
    parse_expr(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse and print round trip") {
  for (const char* text : {"poly(2)", "shift(poly(3), -2)", "veronese(poly(2), 3)", "segre(poly(2), shift(poly(3), -1))",
                           "segre(veronese(shift(poly(2), 1), 2), veronese(shift(poly(3), 1), 3))"}) {
    const auto e = parse_expr(text);
    CHECK(e.to_string() == text);
    CHECK(parse_expr(e.to_string()).to_string() == e.to_string());
  }
}

TEST_CASE("parser ignores whitespace and accepts signed integers") {
  CHECK(parse_expr("  segre ( poly( 2 ) ,shift(poly(3),+4) ) ").to_string() == "segre(poly(2), shift(poly(3), 4))");
  CHECK(parse_expr("shift(poly(1), -0)").to_string() == "shift(poly(1), 0)");
}

TEST_CASE("parse errors carry 1-based positions") {
  CHECK(error_position("veronese(poly(2)") == 16);
  CHECK(error_position("poly(2") == 6);
  CHECK(error_position("x") == 1);
  CHECK(error_position("poly(2))") == 8);
  CHECK(error_position("shift(poly(2), z)") == 16);
  CHECK(error_position("poly(99999999999999999999)") > 0);
  CHECK(error_position("") > 0);
  CHECK_THROWS_AS(parse_expr("poly(0)"), ParseError);
  CHECK_THROWS_AS(parse_expr("veronese(poly(2), 0)"), ParseError);
}

TEST_CASE("krull dimension") {
  CHECK(poly(4).krull_dim() == 4);
  CHECK(shift(poly(4), 7).krull_dim() == 4);
  CHECK(veronese(poly(3), 2).krull_dim() == 3);
  CHECK(segre(poly(2), poly(3)).krull_dim() == 4);
  CHECK(segre(segre(poly(2), poly(3)), poly(4)).krull_dim() == 7);
}

TEST_CASE("shifted polynomial rings are recognised through nested shifts") {
  const auto s = as_shifted_poly_ring(shift(shift(poly(3), 2), -5));
  REQUIRE(s.has_value());
  CHECK(s->vars == 3);
  CHECK(s->shift == -3);
  CHECK_FALSE(as_shifted_poly_ring(segre(poly(2), poly(2))).has_value());
  CHECK_FALSE(as_shifted_poly_ring(veronese(poly(2), 2)).has_value());
}

TEST_CASE("series of shift composes additively") {
  CHECK(series_of(shift(shift(poly(2), 1), 2)) == series_of(shift(poly(2), 3)));
  CHECK(series_of(veronese(poly(2), 1)) == series_of(poly(2)));
}
