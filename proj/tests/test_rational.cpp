#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chss/rational.hpp"

using namespace chss;

TEST_CASE("rational parsing round trip") {
  CHECK(parse_rat("3") == Rat(3));
  CHECK(parse_rat("-7/2") == Rat(-7, 2));
  CHECK(to_string(Rat(-7, 2)) == "-7/2");
  CHECK(to_string(Rat(4, 2)) == "2");
  CHECK_THROWS(parse_rat("x"));
}

TEST_CASE("gaussian rational field ops") {
  QI i = QI::i();
  CHECK(i * i == QI(-1));
  QI z(Rat(1), Rat(2));
  QI w(Rat(3), Rat(-1));
  CHECK(z * w == QI(Rat(5), Rat(5)));
  CHECK((z / w) * w == z);
  CHECK(z.conj() == QI(Rat(1), Rat(-2)));
  CHECK(to_string(z) == "1+2i");
  CHECK_THROWS(z / QI(0));
}
