#pragma once

#include "hesperm/int_matrix.hpp"

namespace hesperm {

/// Selector for the sequences that appear on the right-hand side of the
/// verified identities.
enum class SequenceKind { Fibonacci, Lucas, FibPartialSum, LucasPartialSum };

/// F_n with F_0 = 0, F_1 = 1. Throws std::invalid_argument for n < 0.
Int fib(long n);

/// L_n with L_0 = 2, L_1 = 1. Throws std::invalid_argument for n < 0.
Int lucas(long n);

/// Σ_{i=0}^{m} F_i by direct summation. Throws for m < 0.
Int fib_sum(long m);

/// Σ_{i=0}^{m} L_i by direct summation. Throws for m < 0.
Int lucas_sum(long m);

Int sequence_value(SequenceKind kind, long n);

}  // namespace hesperm
