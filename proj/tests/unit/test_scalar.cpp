#include <doctest.h>

#include "wdc/scalar.hpp"

using wdc::Scalar;

TEST_CASE("make_scalar canonicalizes") {
  CHECK(wdc::to_string(wdc::make_scalar(6, -4)) == "-3/2");
  CHECK(wdc::to_string(wdc::make_scalar(0, 7)) == "0/1");
  CHECK(wdc::to_string(wdc::make_scalar(5)) == "5/1");
}

TEST_CASE("parse_scalar accepts integer and fraction forms") {
  CHECK(*wdc::parse_scalar("3") == Scalar(3));
  CHECK(*wdc::parse_scalar("-3/2") == Scalar(-3, 2));
  CHECK(*wdc::parse_scalar("+4/6") == Scalar(2, 3));
  CHECK(wdc::to_string(*wdc::parse_scalar("-10/4")) == "-5/2");
}

TEST_CASE("parse_scalar rejects malformed text") {
  for (const char* bad : {"", "zebra", "10/-4", "1/0", "1/", "/2", "1.5", "1/2/3", "--1", " 1"}) {
    CAPTURE(bad);
    CHECK_FALSE(wdc::parse_scalar(bad).has_value());
  }
}

TEST_CASE("to_double and sign") {
  CHECK(wdc::to_double(Scalar(-3, 2)) == doctest::Approx(-1.5));
  CHECK(wdc::sign(Scalar(-1, 9)) == -1);
  CHECK(wdc::sign(Scalar(0)) == 0);
}
