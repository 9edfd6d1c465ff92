#include "hesperm/int_matrix.hpp"

#include "hesperm/families.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace hesperm;

TEST_CASE("make_matrix builds exactly the given entries") {
  const IntMatrix one = make_matrix({{1}});
  CHECK(one.rows() == 1);
  CHECK(one.cols() == 1);
  CHECK(one(0, 0) == 1);

  const IntMatrix h2 = make_matrix({{2, -1}, {0, 1}});
  CHECK(h2(0, 0) == 2);
  CHECK(h2(0, 1) == -1);
  CHECK(h2(1, 0) == 0);
  CHECK(h2(1, 1) == 1);
  CHECK(matrices_equal(h2, build_family(Family::H, 2)));
}

TEST_CASE("make_matrix rejects ragged and empty input") {
  CHECK_THROWS_AS(make_matrix({{1, 2}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(make_matrix(std::vector<std::vector<long>>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_matrix({std::vector<long>{}}), std::invalid_argument);
}

TEST_CASE("transpose") {
  CHECK(matrices_equal(transpose(make_matrix({{1}})), make_matrix({{1}})));
  CHECK(matrices_equal(transpose(make_matrix({{1, 2}, {3, 4}})),
                       make_matrix({{1, 3}, {2, 4}})));
}

TEST_CASE("transpose is an involution") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const IntMatrix A = testutil::random_matrix(rng, 1 + t % 8);
    CHECK(matrices_equal(transpose(transpose(A)), A));
  }
}

TEST_CASE("hadamard product") {
  const IntMatrix A = make_matrix({{1, 2}, {3, 4}});
  const IntMatrix ones = make_matrix({{1, 1}, {1, 1}});
  CHECK(matrices_equal(hadamard(A, ones), A));
  CHECK(matrices_equal(hadamard(A, make_matrix({{1, 1}, {-1, 1}})),
                       make_matrix({{1, 2}, {-3, 4}})));
  CHECK_THROWS_AS(hadamard(A, make_matrix({{1}})), std::invalid_argument);
}

TEST_CASE("hadamard is commutative") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const long n = 1 + t % 6;
    const IntMatrix A = testutil::random_matrix(rng, n);
    const IntMatrix B = testutil::random_matrix(rng, n);
    CHECK(matrices_equal(hadamard(A, B), hadamard(B, A)));
  }
}

TEST_CASE("H_4 ∘ S_4 = H_4: S only flips the zero subdiagonal") {
  const IntMatrix H4 = build_family(Family::H, 4);
  const IntMatrix S4 = build_family(Family::SignS, 4);
  CHECK(matrices_equal(hadamard(H4, S4), H4));
}

TEST_CASE("is_lower_hessenberg") {
  CHECK(is_lower_hessenberg(build_family(Family::H, 5)));
  CHECK(is_lower_hessenberg(make_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
  CHECK_FALSE(
      is_lower_hessenberg(make_matrix({{0, 0, 1}, {0, 0, 0}, {0, 0, 0}})));
  CHECK_THROWS_AS(is_lower_hessenberg(make_matrix({{1, 2}})),
                  std::invalid_argument);
}
