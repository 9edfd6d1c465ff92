#include "hesperm/sequences.hpp"

namespace hesperm {

namespace {

Int linear_recurrence(long n, long a0, long a1, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative index");
  Int prev = a0, cur = a1;
  if (n == 0) return prev;
  for (long i = 1; i < n; ++i) {
    Int next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

Int fib(long n) { return linear_recurrence(n, 0, 1, "fib"); }

Int lucas(long n) { return linear_recurrence(n, 2, 1, "lucas"); }

Int fib_sum(long m) {
  if (m < 0) throw std::invalid_argument("fib_sum: negative index");
  Int prev = 0, cur = 1, sum = 0;
  for (long i = 0; i <= m; ++i) {
    sum += prev;
    Int next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return sum;
}

Int lucas_sum(long m) {
  if (m < 0) throw std::invalid_argument("lucas_sum: negative index");
  Int prev = 2, cur = 1, sum = 0;
  for (long i = 0; i <= m; ++i) {
    sum += prev;
    Int next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return sum;
}

Int sequence_value(SequenceKind kind, long n) {
  switch (kind) {
    case SequenceKind::Fibonacci: return fib(n);
    case SequenceKind::Lucas: return lucas(n);
    case SequenceKind::FibPartialSum: return fib_sum(n);
    case SequenceKind::LucasPartialSum: return lucas_sum(n);
  }
  throw std::logic_error("sequence_value: bad kind");
}

}  // namespace hesperm
