#pragma once

#include <Eigen/Dense>
#include <gmpxx.h>

#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace Eigen {

// Eigen scalar traits for GMP arbitrary-precision integers.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace hesperm {

/// Exact signed integer scalar. Never overflows; Fibonacci numbers past
/// F_93 do not fit in 64 bits and the sweeps go well beyond that.
using Int = mpz_class;

/// Dense matrix of exact integers, the carrier for every matrix in the
/// library. Treated as an immutable value: operations return new matrices.
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

/// Builds a matrix from a row-major list of rows.
/// Throws std::invalid_argument on empty or ragged input.
IntMatrix make_matrix(const std::vector<std::vector<long>>& rows);
IntMatrix make_matrix(const std::vector<std::vector<Int>>& rows);
IntMatrix make_matrix(std::initializer_list<std::initializer_list<long>> rows);

/// result(i,j) = A(j,i).
IntMatrix transpose(const IntMatrix& A);

/// Elementwise product A∘B. Throws on dimension mismatch.
IntMatrix hadamard(const IntMatrix& A, const IntMatrix& B);

/// True iff A(i,j) = 0 whenever j > i+1 (zeros above the superdiagonal).
/// Throws std::invalid_argument if A is not square.
bool is_lower_hessenberg(const IntMatrix& A);

inline bool is_square(const IntMatrix& A) { return A.rows() == A.cols(); }

/// Exact entrywise equality (false on shape mismatch).
bool matrices_equal(const IntMatrix& A, const IntMatrix& B);

}  // namespace hesperm
