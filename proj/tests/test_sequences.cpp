#include "hesperm/sequences.hpp"

#include <doctest.h>

using namespace hesperm;

TEST_CASE("Fibonacci and Lucas values") {
  CHECK(fib(0) == 0);
  CHECK(fib(1) == 1);
  CHECK(fib(6) == 8);
  CHECK(fib(9) == 34);
  CHECK(lucas(0) == 2);
  CHECK(lucas(1) == 1);
  CHECK(lucas(3) == 4);
  CHECK(lucas(9) == 76);
  CHECK_THROWS_AS(fib(-1), std::invalid_argument);
  CHECK_THROWS_AS(lucas(-3), std::invalid_argument);
}

TEST_CASE("partial sums by direct summation") {
  CHECK(fib_sum(0) == 0);
  CHECK(fib_sum(4) == 7);   // 0+1+1+2+3
  CHECK(fib_sum(6) == 20);  // 0+1+1+2+3+5+8
  CHECK(lucas_sum(0) == 2);
  CHECK(lucas_sum(3) == 10);  // 2+1+3+4
  CHECK(lucas_sum(4) == 17);
  CHECK_THROWS_AS(fib_sum(-1), std::invalid_argument);
  CHECK_THROWS_AS(lucas_sum(-1), std::invalid_argument);
}

TEST_CASE("recurrence holds up to the test bound") {
  for (long n = 1; n <= 200; ++n) {
    CHECK(fib(n + 1) == fib(n) + fib(n - 1));
    CHECK(lucas(n + 1) == lucas(n) + lucas(n - 1));
  }
}

TEST_CASE("closed partial-sum identities, both sides independent") {
  for (long m = 0; m <= 200; ++m) {
    CHECK(fib_sum(m) == fib(m + 2) - 1);
    CHECK(lucas_sum(m) == lucas(m + 2) - 1);
  }
}

TEST_CASE("2F_n - 3F_{n-2} = L_{n-2}") {
  for (long n = 2; n <= 200; ++n)
    CHECK(2 * fib(n) - 3 * fib(n - 2) == lucas(n - 2));
}

TEST_CASE("F_{n+1} + sum F_{0..n+1} = sum L_{0..n}") {
  for (long n = 0; n <= 200; ++n)
    CHECK(fib(n + 1) + fib_sum(n + 1) == lucas_sum(n));
}

TEST_CASE("sequence_value dispatch") {
  CHECK(sequence_value(SequenceKind::Fibonacci, 10) == 55);
  CHECK(sequence_value(SequenceKind::Lucas, 4) == 7);
  CHECK(sequence_value(SequenceKind::FibPartialSum, 4) == 7);
  CHECK(sequence_value(SequenceKind::LucasPartialSum, 4) == 17);
}

TEST_CASE("values past 64 bits stay exact") {
  CHECK(fib(93) == Int("12200160415121876738"));
  CHECK(fib(100) == Int("354224848179261915075"));
}
