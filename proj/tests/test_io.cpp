#include "hesperm/io.hpp"

#include "hesperm/families.hpp"
#include "hesperm/sequences.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace hesperm;

TEST_CASE("JSON round trip on random matrices") {
  std::mt19937_64 rng(301);
  for (int t = 0; t < 50; ++t) {
    const IntMatrix A = testutil::random_matrix(rng, 1 + t % 9);
    CHECK(matrices_equal(from_json(to_json(A)), A));
  }
}

TEST_CASE("JSON keeps values past 64 bits exact") {
  IntMatrix A(1, 2);
  A(0, 0) = fib(300);
  A(0, 1) = -fib(301);
  const IntMatrix B = from_json(to_json(A));
  CHECK(matrices_equal(A, B));
  CHECK(to_json(A).find(fib(300).get_str()) != std::string::npos);
}

TEST_CASE("JSON rejects malformed input") {
  CHECK_THROWS(from_json("not json"));
  CHECK_THROWS_AS(from_json(R"({"n_rows":1,"n_cols":2,"entries":[["1"]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(from_json(R"({"n_rows":0,"n_cols":1,"entries":[]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(from_json(R"({"n_rows":1,"n_cols":1,"entries":[["x"]]})"),
                  std::invalid_argument);
}

TEST_CASE("CSV output") {
  CHECK(to_csv(build_family(Family::H, 3)) == "2,-1,0\n0,2,1\n1,0,1\n");
  CHECK(to_csv(build_family(Family::SignS, 2)) == "1,1\n-1,1\n");
}
