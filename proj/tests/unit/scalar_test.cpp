#include "doctest.h"

#include "tqftdef/error.hpp"
#include "tqftdef/scalar.hpp"

using namespace tqftdef;

TEST_CASE("scalars parse and format in lowest terms") {
  CHECK(format_scalar(parse_scalar("6/4")) == "3/2");
  CHECK(format_scalar(parse_scalar("-3")) == "-3");
  CHECK(format_scalar(parse_scalar("-4/2")) == "-2");
  CHECK(format_scalar(parse_scalar("0/7")) == "0");
  CHECK(is_zero(parse_scalar("0")));
}

TEST_CASE("malformed scalars are parse errors") {
  for (const char* bad : {"", "1/0", "x", "1/", " 1", "1.5", "2//3", "4/-2"}) {
    CAPTURE(bad);
    try {
      parse_scalar(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Parse);
    }
  }
}

TEST_CASE("power handles negative exponents exactly") {
  CHECK(power(Scalar(2), 10) == 1024);
  CHECK(power(Scalar(2), -3) == Scalar(1, 8));
  CHECK(power(Scalar(-3, 2), 3) == Scalar(-27, 8));
  CHECK(power(Scalar(5), 0) == 1);
  CHECK_THROWS(power(Scalar(0), -1));
}

TEST_CASE("large values stay exact") {
  Scalar x = power(Scalar(6), -40) * power(Scalar(6), 40);
  CHECK(x == 1);
  CHECK(format_scalar(power(Scalar(2), 100)) == "1267650600228229401496703205376");
}
