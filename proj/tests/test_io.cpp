#include "hallbridge/io.hpp"

#include <doctest.h>

using namespace hb;

namespace {

Algebra a2() { return Algebra::parse("q = 2\nvertices = 2\narrow a 1 2\n"); }

}  // namespace

TEST_CASE("coefficient json round trip") {
  QSqrt c(3, Rational(1, 2), Rational(-3, 4));
  Json j = coeff_to_json(c);
  CHECK(j.at("a").get<std::string>() == "1/2");
  CHECK(j.at("b").get<std::string>() == "-3/4");
  CHECK(coeff_from_json(j, 3) == c);
  CHECK(coeff_from_json(Json{{"a", "5"}, {"b", "0"}}, 2) == QSqrt(2, 5));
}

TEST_CASE("hall element json round trip") {
  Algebra A = a2();
  Engine eng(A, {2, 2});
  HallElement x;
  x.add_term(eng.mods.classify(A.simple(0)), QSqrt::vpow(2, -1));
  x.add_term(eng.mods.classify(A.projective(0)), QSqrt(2, 3));
  Json j = hall_to_json(x);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  for (auto& t : j) {
    CHECK(t.contains("coeff"));
    CHECK(t.contains("class_id"));
    CHECK(t.contains("dim_vector"));
  }
  CHECK(hall_from_json(j, 2) == x);
}

TEST_CASE("bridgeland element json round trip") {
  Algebra A = a2();
  Engine eng(A, {2, 2});
  BridgelandSession s(eng);
  BridgelandElement e = e_element(s, A.simple(0)) + f_element(s, A.simple(1)).scaled(QSqrt(2, 7));
  Json j = bridgeland_to_json(s, e);
  REQUIRE(j.is_array());
  for (auto& t : j) {
    const Json& k = t.at("key");
    CHECK(k.contains("alpha"));
    CHECK(k.contains("beta"));
    CHECK(k.at("complex").contains("m1"));
    CHECK(k.at("complex").contains("m0"));
    CHECK(k.at("complex").contains("index"));
    CHECK(k.at("complex").contains("encoding"));
  }
  CHECK(bridgeland_from_json(j, 2) == e);
}

TEST_CASE("string renderings are deterministic") {
  Algebra A = a2();
  Engine eng(A, {2, 2});
  HallElement x;
  CHECK(hall_str(x) == "0");
  x.add_term(eng.mods.classify(A.simple(0)), QSqrt::one(2));
  CHECK(hall_str(x) == "(1)*[(1,0):0]");
  CHECK(dimvec_str({1, 0, -2}) == "(1,0,-2)");

  BridgelandSession s(eng);
  BridgelandElement b;
  CHECK(bridgeland_str(b) == "0");
  BridgelandElement e = e_element(s, A.simple(0));
  std::string r1 = bridgeland_str(e), r2 = bridgeland_str(e_element(s, A.simple(0)));
  CHECK(r1 == r2);
  CHECK(r1.find("K(0,-1)") != std::string::npos);
}

TEST_CASE("zero coefficients are dropped") {
  Algebra A = a2();
  Engine eng(A, {2, 2});
  HallElement x;
  x.add_term(eng.mods.classify(A.simple(0)), QSqrt::one(2));
  x.add_term(eng.mods.classify(A.simple(0)), -QSqrt::one(2));
  CHECK(x.is_zero());
  CHECK(hall_to_json(x).empty());
}
