#include <doctest.h>

#include "kappa/ext_num.hpp"

using namespace kappa;

TEST_CASE("ExtNat addition saturates at INF") {
  CHECK(INF + ExtNat{3} == INF);
  CHECK(ExtNat{3} + INF == INF);
  CHECK(INF + INF == INF);
  CHECK(ExtNat{2} + ExtNat{5} == ExtNat{7});
}

TEST_CASE("ExtNat finite overflow is reported, never wrapped") {
  const ExtNat big = ExtNat::kMaxFinite;
  CHECK(big.is_finite());
  CHECK_THROWS_AS(big + ExtNat{1}, Error);
  try {
    (void)(big + ExtNat{1});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Overflow);
  }
  CHECK(big + ExtNat{0} == big);
  CHECK_THROWS_AS(ExtNat(-1), Error);
}

TEST_CASE("ExtNat ordering puts INF above every finite value") {
  CHECK(std::min(INF, ExtNat{4}) == ExtNat{4});
  CHECK(ExtNat{ExtNat::kMaxFinite} < INF);
  CHECK(ExtNat{0} < ExtNat{1});
  CHECK(INF.to_string() == "inf");
  CHECK(ExtNat{12}.to_string() == "12");
}

TEST_CASE("ExtNat subtraction") {
  CHECK(ExtNat{5} - ExtNat{2} == ExtNat{3});
  CHECK(INF - ExtNat{2} == INF);
  CHECK_THROWS_AS(ExtNat{1} - ExtNat{2}, Error);
  CHECK_THROWS_AS(ExtNat{1} - INF, Error);
}

TEST_CASE("ExtInt differences and negation") {
  CHECK(ExtInt::difference(0, INF) == ExtInt::neg_inf());
  CHECK(ExtInt::difference(INF, 0) == ExtInt::pos_inf());
  CHECK(ExtInt::difference(0, 4) == ExtInt(-4));
  CHECK(ExtInt::difference(7, 2) == ExtInt(5));
  CHECK_THROWS_AS(ExtInt::difference(INF, INF), Error);
  CHECK(-ExtInt::pos_inf() == ExtInt::neg_inf());
  CHECK(ExtInt::neg_inf() < ExtInt(-1000000));
  CHECK(ExtInt(1000000) < ExtInt::pos_inf());
  CHECK(ExtInt::pos_inf().to_string() == "+inf");
  CHECK(ExtInt(-3).to_string() == "-3");
}
