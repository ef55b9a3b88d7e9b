#include "olacat/errors.hpp"
#include "olacat/oracle.hpp"
#include "olacat/symalg.hpp"

#include <doctest.h>

using namespace olacat;

TEST_CASE("naive lr examples") {
  CHECK(oracle::naive_lr({2, 1}, {}, {2, 1}) == 1);
  CHECK(oracle::naive_lr({1}, {1}, {1, 1}) == 1);
  CHECK(oracle::naive_lr({1}, {1}, {2}) == 1);
  CHECK(oracle::naive_lr({2, 1}, {2, 1}, {3, 2, 1}) == 2);
  CHECK(oracle::naive_lr({1}, {1}, {3}) == 0);
  CHECK_THROWS_AS(oracle::naive_lr({6}, {5}, {11}), ResourceError);
}

TEST_CASE("naive kl examples") {
  for (const auto& w : {"[1,2,3]", "[2,1,3]", "[3,2,1]", "[2,3,1]"}) {
    auto p = Perm::parse(w);
    CHECK(oracle::naive_kl(p, p).to_string() == "1");
  }
  auto x = Perm::parse("s2", 4);
  auto w = Perm::parse("s2s1s3s2", 4);
  CHECK(oracle::naive_kl(x, w).to_string() == "1 + q");
  CHECK(oracle::naive_kl(Perm::parse("[2,1,3]"), Perm::parse("[1,3,2]")).to_string() == "0");
  CHECK_THROWS_AS(oracle::naive_kl(Perm::identity(7), Perm::identity(7)), ResourceError);
}

TEST_CASE("naive symmetric algebra examples") {
  CHECK(oracle::naive_sym_mult(EligibleWeight(1), 2) == 1);
  CHECK(oracle::naive_sym_mult(parse_weight("e[-1,1] - e[1,1]", 1), 2) == 1);
  CHECK(oracle::naive_sym_mult(parse_weight("e[-1,1] - e[1,1] + e[-2,1] - e[2,1]", 1), 2) == 2);
  CHECK(oracle::naive_sym_mult(parse_weight("e[1,1] - e[-1,1]", 1), 2) == 0);
  auto layer = oracle::naive_sym_layer(1, 2, 1);
  CHECK(layer.size() == 4);
  CHECK(oracle::naive_sym_layer(1, 2, 0).size() == 1);
  CHECK_THROWS_AS(oracle::naive_sym_layer(1, 4, 1), ResourceError);
}

TEST_CASE("naive dominance examples") {
  auto lambda = parse_weight("e[1,1] - e[-1,1]", 1);
  auto alpha = parse_weight("e[1,1] - e[2,1]", 1);
  CHECK(oracle::naive_dominance(lambda, lambda));
  CHECK(oracle::naive_dominance(lambda + alpha, lambda));
  CHECK_FALSE(oracle::naive_dominance(lambda, lambda + alpha));
  CHECK_FALSE(oracle::naive_dominance(lambda, lambda + EligibleWeight::omega(1, 1)));
}
