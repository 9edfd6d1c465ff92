#pragma once

#include "hesperm/int_matrix.hpp"

namespace hesperm {

/// Largest order accepted by per_naive (cost n!).
inline constexpr long kNaiveMaxN = 10;

/// Largest order accepted by per_ryser (cost 2^n · n).
inline constexpr long kRyserMaxN = 30;

/// Permanent by summing over all n! permutations. Exact, brute force.
/// Throws std::invalid_argument if A is not square or n > kNaiveMaxN.
Int per_naive(const IntMatrix& A);

/// Permanent by Ryser's inclusion-exclusion formula with Gray-code
/// subset enumeration. Correct for arbitrary signed entries.
/// Throws std::invalid_argument if A is not square or n > kRyserMaxN.
Int per_ryser(const IntMatrix& A);

/// Permanent of a lower Hessenberg matrix by the O(n²) signless expansion
/// over leading principal submatrices:
///   P_0 = 1,
///   P_m = A(m,m)·P_{m-1} + Σ_{r<m} A(m,r)·(Π_{j=r..m-1} A(j,j+1))·P_{r-1}.
/// Throws std::invalid_argument if A is not square or not lower Hessenberg.
Int per_hessenberg(const IntMatrix& A);

/// Exact determinant by Bareiss fraction-free elimination.
/// Throws std::invalid_argument if A is not square.
Int det_bareiss(const IntMatrix& A);

}  // namespace hesperm
